#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "repstrata/field.hpp"

namespace repstrata {

// Dense exact matrix over a FieldSpec. Entries are always canonical
// (residues in [0,p), rationals in lowest terms). Zero-dimensional
// matrices are legal and behave as expected under every operation.
// Matrices are immutable in spirit: operations return new values.
class Matrix {
public:
    Matrix(FieldSpec field, int rows, int cols); // zero matrix

    static Matrix identity(FieldSpec field, int n);
    static Matrix from_ints(FieldSpec field,
                            const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const FieldSpec& field() const { return f_; }

    const Scalar& at(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, Scalar v) { a_[index(i, j)] = std::move(v); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix negated() const;
    Matrix transpose() const;

    Matrix submatrix(int row0, int col0, int nrows, int ncols) const;

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    int index(int i, int j) const;

    FieldSpec f_;
    int r_, c_;
    std::vector<Scalar> a_; // row-major
};

// Row-reduced echelon form with deterministic pivoting: per column, the
// pivot is the first nonzero entry scanning top to bottom.
struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};
Echelon echelon_form(const Matrix& m);

int rank(const Matrix& m);

// Columns form a basis of ker(m); cols() == nullity. Basis vectors are
// ordered by their free column and are canonical for the pivot rule.
Matrix kernel_basis(const Matrix& m);

// Canonical echelon basis of the column space (columns of the result).
Matrix colspace_basis(const Matrix& m);

Matrix inverse(const Matrix& m); // throws SingularError

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);

// Assemble a matrix from a grid of blocks. Block sizes must agree along
// every row and column of the grid; block extraction is the exact inverse.
Matrix block_compose(const std::vector<std::vector<Matrix>>& grid);
std::vector<std::vector<Matrix>> block_extract(const Matrix& m,
                                               const std::vector<int>& row_sizes,
                                               const std::vector<int>& col_sizes);

} // namespace repstrata
