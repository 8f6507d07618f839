#pragma once

#include <map>
#include <utility>
#include <vector>

#include "relext/field.hpp"

namespace relext {

// Dense matrix over an exact field. Everything downstream uses the row
// convention: a linear map V -> W is a (dim V) x (dim W) matrix acting on
// row vectors from the right, and composition "f then g" is the product F*G.
class Matrix {
  public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    static Matrix identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    std::vector<Scalar> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Scalar>& v);
    static std::vector<Scalar> apply(const std::vector<Scalar>& v, const Matrix& m);

    // Stack the rows of `o` below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;

    // In-place reduced row echelon form with leftmost pivots; returns the
    // pivot column of each echelon row. Fraction-free elimination over Q,
    // plain Gauss-Jordan over F_p.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Basis (as rows, in RREF) of { x : x * this = 0 }.
    Matrix left_kernel() const;

    // Rows of `sub` are expected to lie in the row space; returns the
    // coefficient matrix X with X * this == sub, or throws Internal.
    Matrix express_rows(const Matrix& sub) const;

    std::string str() const; // debugging aid

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Solver for x * A = b with A fixed and many right-hand sides. Also exposes
// the left kernel of A so callers can enumerate all solutions.
class LeftSolver {
  public:
    explicit LeftSolver(const Matrix& a);

    // Particular solution (free coordinates zero) or nothing.
    bool solve(const std::vector<Scalar>& rhs, std::vector<Scalar>& out) const;
    const Matrix& kernel() const { return kernel_; }

  private:
    Field field_;
    std::size_t n_; // rows of A = length of x
    Matrix red_;    // [A | I] reduced; echelon rows with pivots in A-part
    std::vector<std::size_t> pivots_;
    std::size_t echelon_rows_;
    Matrix kernel_;
};

// Growing echelon basis over sparse integer-indexed coordinates, pivoting on
// the LARGEST coordinate present in each row. Used wherever the complement
// of a span has to consist of the smallest coordinates (path bases, relation
// minimization, bimodule tops).
class EchelonSet {
  public:
    explicit EchelonSet(const Field& f) : field_(f) {}

    using SparseRow = std::vector<std::pair<long, Scalar>>; // sorted by coordinate

    // Inserts the row; returns true if it enlarged the span.
    bool insert(SparseRow row);

    // Residue of `row` after subtracting the projection onto the span.
    SparseRow reduce(SparseRow row) const;

    bool contains(const SparseRow& row) const { return reduce(std::move(row)).empty(); }

    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return field_; }

    bool is_pivot(long coord) const { return rows_.count(coord) != 0; }
    const std::map<long, SparseRow>& rows() const { return rows_; }

    static SparseRow normalize(const Field& f, SparseRow row);

  private:
    Field field_;
    std::map<long, SparseRow> rows_; // pivot coordinate -> row (pivot coeff 1)
};

} // namespace relext
