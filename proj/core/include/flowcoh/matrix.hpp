#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "flowcoh/errors.hpp"

namespace flowcoh {

using Int = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers, row-major. Columns are
// generators / images of basis vectors everywhere in this library.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix fromRows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix columnVector(const std::vector<Int>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix scaled(const Int& c) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Horizontal concatenation; row counts must match.
    IntMatrix hcat(const IntMatrix& rhs) const;
    IntMatrix topRows(int n) const;
    IntMatrix columnRange(int first, int count) const;
    std::vector<Int> column(int j) const;

    bool isZero() const;
    bool isSquare() const { return rows_ == cols_; }

    std::string toString() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

// U*A*V = D with U, V unimodular and D diagonal, nonnegative, each diagonal
// entry dividing the next, zeros trailing.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::vector<Int> diagonal() const;
    std::vector<Int> invariantFactors() const; // nonzero diagonal entries
};

SnfResult snf(const IntMatrix& a);

// Column Hermite normal form: same shape as the input, spanning the same
// column lattice, zero columns trailing. Canonical: equal column lattices
// (with equal column counts) give identical output.
IntMatrix hnf(const IntMatrix& a);

// (H, V) with A*V = H, V unimodular, H the column Hermite normal form.
std::pair<IntMatrix, IntMatrix> hnfWithTransform(const IntMatrix& a);

// Columns form a basis of { x : A x = 0 }; the basis is saturated.
IntMatrix kernelBasis(const IntMatrix& a);

// Exact determinant (Bareiss). Input must be square.
Int determinant(IntMatrix a);

// (N, delta) with N*A = delta*I and delta = |det A| > 0.
// Throws DomainError on singular input.
std::pair<IntMatrix, Int> rationalInverse(const IntMatrix& a);

Int floorDiv(const Int& a, const Int& b);

} // namespace flowcoh
