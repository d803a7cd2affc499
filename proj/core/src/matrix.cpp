#include "flowcoh/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace flowcoh {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionError("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0)
        throw DimensionError("negative matrix dimension");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionError("ragged row data");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::columnVector(const std::vector<Int>& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i)
        m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product shape mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        s.e_[i] = e_[i] + rhs.e_[i];
    return s;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        s.e_[i] = e_[i] * c;
    return s;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw DimensionError("hcat row mismatch");
    IntMatrix m(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols_; ++j)
            m.at(i, cols_ + j) = rhs.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::topRows(int n) const {
    if (n < 0 || n > rows_)
        throw DimensionError("topRows out of range");
    IntMatrix m(n, cols_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(i, j) = at(i, j);
    return m;
}

IntMatrix IntMatrix::columnRange(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
        throw DimensionError("columnRange out of range");
    IntMatrix m(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j)
            m.at(i, j) = at(i, first + j);
    return m;
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

bool IntMatrix::isZero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::toString() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Int floorDiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SnfResult::invariantFactors() const {
    std::vector<Int> out;
    for (const Int& x : diagonal())
        if (x != 0)
            out.push_back(x);
    return out;
}

namespace {

void swapRows(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int j = 0; j < m.cols(); ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swapCols(IntMatrix& m, int a, int b) {
    if (a == b)
        return;
    for (int i = 0; i < m.rows(); ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += c * row[src]
void rowAxpy(IntMatrix& m, int dst, int src, const Int& c) {
    if (c == 0)
        return;
    for (int j = 0; j < m.cols(); ++j)
        m.at(dst, j) += c * m.at(src, j);
}

// col[dst] += c * col[src]
void colAxpy(IntMatrix& m, int dst, int src, const Int& c) {
    if (c == 0)
        return;
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, dst) += c * m.at(i, src);
}

void negateRow(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = -m.at(i, j);
}

Int absInt(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

SnfResult snf(const IntMatrix& a) {
    const int r = a.rows(), c = a.cols();
    SnfResult res{IntMatrix::identity(r), a, IntMatrix::identity(c)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        // Pick the nonzero entry of smallest magnitude in the trailing block.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (d.at(i, j) != 0) {
                    Int m = absInt(d.at(i, j));
                    if (pi < 0 || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0)
            break; // trailing block is zero; remaining diagonal stays zero

        swapRows(d, t, pi);
        swapRows(u, t, pi);
        swapCols(d, t, pj);
        swapCols(v, t, pj);

        for (;;) {
            // Euclid down the pivot column.
            bool swapped = false;
            for (int i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0)
                    continue;
                Int q = d.at(i, t) / d.at(t, t);
                rowAxpy(d, i, t, -q);
                rowAxpy(u, i, t, -q);
                if (d.at(i, t) != 0) { // remainder beats the pivot
                    swapRows(d, t, i);
                    swapRows(u, t, i);
                    swapped = true;
                    break;
                }
            }
            if (swapped)
                continue;

            // Euclid across the pivot row.
            for (int j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0)
                    continue;
                Int q = d.at(t, j) / d.at(t, t);
                colAxpy(d, j, t, -q);
                colAxpy(v, j, t, -q);
                if (d.at(t, j) != 0) {
                    swapCols(d, t, j);
                    swapCols(v, t, j);
                    swapped = true;
                    break;
                }
            }
            if (swapped)
                continue;

            // Row and column are clear; force the divisibility chain.
            bool fixed = false;
            for (int i = t + 1; i < r && !fixed; ++i)
                for (int j = t + 1; j < c && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        rowAxpy(d, t, i, Int(1));
                        rowAxpy(u, t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }

    for (int i = 0; i < steps; ++i)
        if (d.at(i, i) < 0) {
            negateRow(d, i);
            negateRow(u, i);
        }
    return res;
}

namespace {

// Canonical row Hermite form of m with transform: returns (H, U), U*m = H.
// Pivots positive, entries above a pivot reduced into [0, pivot),
// zero rows trailing.
std::pair<IntMatrix, IntMatrix> rowHermiteWithTransform(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    const int r = h.rows(), c = h.cols();
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        for (;;) {
            int best = -1;
            Int bestAbs;
            for (int i = row; i < r; ++i)
                if (h.at(i, col) != 0) {
                    Int a = absInt(h.at(i, col));
                    if (best < 0 || a < bestAbs) {
                        best = i;
                        bestAbs = a;
                    }
                }
            if (best < 0)
                break;
            swapRows(h, row, best);
            swapRows(u, row, best);
            bool residue = false;
            for (int i = row + 1; i < r; ++i) {
                if (h.at(i, col) == 0)
                    continue;
                Int q = h.at(i, col) / h.at(row, col);
                rowAxpy(h, i, row, -q);
                rowAxpy(u, i, row, -q);
                if (h.at(i, col) != 0)
                    residue = true;
            }
            if (!residue)
                break;
        }
        if (h.at(row, col) == 0)
            continue;
        if (h.at(row, col) < 0) {
            negateRow(h, row);
            negateRow(u, row);
        }
        for (int i = 0; i < row; ++i) {
            Int q = floorDiv(h.at(i, col), h.at(row, col));
            rowAxpy(h, i, row, -q);
            rowAxpy(u, i, row, -q);
        }
        ++row;
    }
    return {h, u};
}

} // namespace

std::pair<IntMatrix, IntMatrix> hnfWithTransform(const IntMatrix& a) {
    auto [hr, ur] = rowHermiteWithTransform(a.transpose());
    return {hr.transpose(), ur.transpose()};
}

IntMatrix hnf(const IntMatrix& a) { return hnfWithTransform(a).first; }

IntMatrix kernelBasis(const IntMatrix& a) {
    auto [h, v] = hnfWithTransform(a);
    int rank = 0;
    for (int j = 0; j < h.cols(); ++j) {
        bool nz = false;
        for (int i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz)
            rank = j + 1; // zero columns trail, so the last nonzero wins
    }
    return v.columnRange(rank, v.cols() - rank);
}

Int determinant(IntMatrix a) {
    if (!a.isSquare())
        throw DimensionError("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0)
        return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            swapRows(a, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::pair<IntMatrix, Int> rationalInverse(const IntMatrix& a) {
    if (!a.isSquare())
        throw DimensionError("rationalInverse of non-square matrix");
    SnfResult s = snf(a);
    const int n = a.rows();
    Int delta = 1;
    for (int i = 0; i < n; ++i) {
        if (s.d.at(i, i) == 0)
            throw DomainError("rationalInverse of singular matrix");
        delta *= s.d.at(i, i);
    }
    // a = U^-1 D V^-1, so V * (delta D^-1) * U right-and-left-inverts a.
    IntMatrix mid(n, n);
    for (int i = 0; i < n; ++i)
        mid.at(i, i) = delta / s.d.at(i, i);
    IntMatrix numer = s.v * mid * s.u;
    return {numer, delta};
}

} // namespace flowcoh
