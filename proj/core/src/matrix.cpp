#include "repstrata/matrix.hpp"

#include <sstream>

namespace repstrata {

namespace {

void expect_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldError("matrices over different fields");
}

void expect_same_shape(const Matrix& a, const Matrix& b) {
    expect_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
}

} // namespace

Matrix::Matrix(FieldSpec field, int rows, int cols) : f_(field), r_(rows), c_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), f_.zero());
}

int Matrix::index(int i, int j) const {
    if (i < 0 || i >= r_ || j < 0 || j >= c_)
        throw DimensionError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for " + std::to_string(r_) + "x" + std::to_string(c_));
    return i * c_ + j;
}

Matrix Matrix::identity(FieldSpec field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

Matrix Matrix::from_ints(FieldSpec field, const std::vector<std::vector<std::int64_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DimensionError("ragged row list");
        for (int j = 0; j < c; ++j) m.set(i, j, field.from_int(rows[i][j]));
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    expect_same_shape(*this, o);
    Matrix out(f_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.add(a_[k], o.a_[k]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    expect_same_shape(*this, o);
    Matrix out(f_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.sub(a_[k], o.a_[k]);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    expect_same_field(*this, o);
    if (c_ != o.r_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(c_) +
                             " inner cols vs " + std::to_string(o.r_) + " inner rows");
    Matrix out(f_, r_, o.c_);
    if (f_.is_prime_field()) {
        // fast path: raw residues, delayed reduction
        const std::int64_t p = f_.modulus();
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < o.c_; ++j) {
                std::int64_t acc = 0;
                for (int k = 0; k < c_; ++k) {
                    acc = (acc + a_[i * c_ + k].residue() * o.a_[k * o.c_ + j].residue()) % p;
                }
                out.a_[i * o.c_ + j] = Scalar::residue(acc);
            }
        }
        return out;
    }
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < o.c_; ++j) {
            Scalar acc = f_.zero();
            for (int k = 0; k < c_; ++k) acc = f_.add(acc, f_.mul(at(i, k), o.at(k, j)));
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(f_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.mul(a_[k], c);
    return out;
}

Matrix Matrix::negated() const {
    Matrix out(f_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.neg(a_[k]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || nrows < 0 || ncols < 0 || row0 + nrows > r_ || col0 + ncols > c_)
        throw DimensionError("submatrix out of range");
    Matrix out(f_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) out.set(i, j, at(row0 + i, col0 + j));
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? f_.one() : f_.zero())) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? "," : "") << f_.str(at(i, j));
    }
    os << "]";
    return os.str();
}

namespace {

std::int64_t egcd_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return t < 0 ? t + p : t;
}

// raw-residue elimination; the pivot rule matches the generic path exactly
Echelon echelon_prime(const Matrix& m) {
    const std::int64_t p = m.field().modulus();
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> w(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) w[i * cols + j] = m.at(i, j).residue();
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int sel = -1;
        for (int i = prow; i < rows; ++i) {
            if (w[i * cols + col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < cols; ++j) std::swap(w[sel * cols + j], w[prow * cols + j]);
        const std::int64_t pinv = egcd_inverse(w[prow * cols + col], p);
        for (int j = col; j < cols; ++j) w[prow * cols + j] = (w[prow * cols + j] * pinv) % p;
        for (int i = 0; i < rows; ++i) {
            const std::int64_t factor = w[i * cols + col];
            if (i == prow || factor == 0) continue;
            for (int j = col; j < cols; ++j) {
                std::int64_t v = (w[i * cols + j] - factor * w[prow * cols + j]) % p;
                w[i * cols + j] = v < 0 ? v + p : v;
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    Matrix out(m.field(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.set(i, j, Scalar::residue(w[i * cols + j]));
    return Echelon{std::move(out), std::move(pivots)};
}

} // namespace

Echelon echelon_form(const Matrix& m) {
    if (m.field().is_prime_field()) return echelon_prime(m);
    Matrix w = m;
    const FieldSpec& f = m.field();
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < m.cols() && prow < m.rows(); ++col) {
        int sel = -1;
        for (int i = prow; i < m.rows(); ++i) {
            if (!w.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != prow) {
            for (int j = 0; j < m.cols(); ++j) {
                Scalar tmp = w.at(sel, j);
                w.set(sel, j, w.at(prow, j));
                w.set(prow, j, std::move(tmp));
            }
        }
        Scalar pinv = f.inv(w.at(prow, col));
        for (int j = col; j < m.cols(); ++j) w.set(prow, j, f.mul(w.at(prow, j), pinv));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == prow || w.at(i, col).is_zero()) continue;
            Scalar factor = w.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(prow, j))));
        }
        pivots.push_back(col);
        ++prow;
    }
    return Echelon{std::move(w), std::move(pivots)};
}

int rank(const Matrix& m) {
    return echelon_form(m).rank();
}

Matrix kernel_basis(const Matrix& m) {
    Echelon e = echelon_form(m);
    const FieldSpec& f = m.field();
    std::vector<int> pivot_of_col(m.cols(), -1);
    for (int k = 0; k < e.rank(); ++k) pivot_of_col[e.pivot_cols[k]] = k;
    int nullity = m.cols() - e.rank();
    Matrix basis(f, m.cols(), nullity);
    int out = 0;
    for (int j = 0; j < m.cols(); ++j) {
        if (pivot_of_col[j] >= 0) continue;
        basis.set(j, out, f.one());
        for (int k = 0; k < e.rank(); ++k)
            basis.set(e.pivot_cols[k], out, f.neg(e.rref.at(k, j)));
        ++out;
    }
    return basis;
}

Matrix colspace_basis(const Matrix& m) {
    // canonical: nonzero rows of rref(m^T), transposed back
    Echelon e = echelon_form(m.transpose());
    Matrix basis(m.field(), m.rows(), e.rank());
    for (int k = 0; k < e.rank(); ++k)
        for (int i = 0; i < m.rows(); ++i) basis.set(i, k, e.rref.at(k, i));
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const FieldSpec& f = m.field();
    Matrix aug(f, m.rows(), 2 * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols() + i, f.one());
    }
    Echelon e = echelon_form(aug);
    if (e.rank() < m.rows() ||
        (e.rank() > 0 && e.pivot_cols.back() >= m.cols()))
        throw SingularError("matrix is singular");
    return e.rref.submatrix(0, m.cols(), m.rows(), m.cols());
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw DimensionError("hstack of nothing");
    int rows = parts[0].rows();
    int cols = 0;
    for (const auto& p : parts) {
        expect_same_field(parts[0], p);
        if (p.rows() != rows) throw DimensionError("hstack row mismatch");
        cols += p.cols();
    }
    Matrix out(parts[0].field(), rows, cols);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < p.cols(); ++j) out.set(i, off + j, p.at(i, j));
        off += p.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw DimensionError("vstack of nothing");
    int cols = parts[0].cols();
    int rows = 0;
    for (const auto& p : parts) {
        expect_same_field(parts[0], p);
        if (p.cols() != cols) throw DimensionError("vstack column mismatch");
        rows += p.rows();
    }
    Matrix out(parts[0].field(), rows, cols);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < cols; ++j) out.set(off + i, j, p.at(i, j));
        off += p.rows();
    }
    return out;
}

Matrix block_compose(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty()) throw DimensionError("block_compose of empty grid");
    std::size_t gcols = grid[0].size();
    if (gcols == 0) throw DimensionError("block_compose of empty grid row");
    std::vector<int> row_sizes(grid.size());
    std::vector<int> col_sizes(gcols);
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
        if (grid[bi].size() != gcols) throw DimensionError("ragged block grid");
        row_sizes[bi] = grid[bi][0].rows();
        for (std::size_t bj = 0; bj < gcols; ++bj) {
            if (grid[bi][bj].rows() != row_sizes[bi])
                throw DimensionError("inconsistent block row sizes in grid row " + std::to_string(bi));
            if (bi == 0) col_sizes[bj] = grid[0][bj].cols();
            if (grid[bi][bj].cols() != col_sizes[bj])
                throw DimensionError("inconsistent block column sizes in grid column " + std::to_string(bj));
            expect_same_field(grid[0][0], grid[bi][bj]);
        }
    }
    std::vector<Matrix> rows;
    rows.reserve(grid.size());
    for (const auto& grow : grid) rows.push_back(hstack(grow));
    return vstack(rows);
}

std::vector<std::vector<Matrix>> block_extract(const Matrix& m, const std::vector<int>& row_sizes,
                                               const std::vector<int>& col_sizes) {
    int rtot = 0, ctot = 0;
    for (int r : row_sizes) rtot += r;
    for (int c : col_sizes) ctot += c;
    if (rtot != m.rows() || ctot != m.cols())
        throw DimensionError("block_extract sizes do not sum to the matrix shape");
    std::vector<std::vector<Matrix>> grid;
    int roff = 0;
    for (int r : row_sizes) {
        std::vector<Matrix> grow;
        int coff = 0;
        for (int c : col_sizes) {
            grow.push_back(m.submatrix(roff, coff, r, c));
            coff += c;
        }
        grid.push_back(std::move(grow));
        roff += r;
    }
    return grid;
}

} // namespace repstrata
