#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cjt/field.hpp"

namespace cjt {

// Dense row-major matrix over a finite field.
struct Matrix {
    FieldPtr field;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(FieldPtr f, std::size_t r, std::size_t c) : field(std::move(f)), rows(r), cols(c), data(r * c, 0) {}

    static Matrix identity(FieldPtr f, std::size_t n);

    Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    Elem* row(std::size_t i) { return data.data() + i * cols; }
    const Elem* row(std::size_t i) const { return data.data() + i * cols; }
    const Field& F() const { return *field; }

    bool is_zero() const;
    bool is_square() const { return rows == cols; }
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem c);
Matrix negate(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix power(const Matrix& a, unsigned k);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);
Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx);
Matrix select_cols(const Matrix& a, const std::vector<std::size_t>& idx);
Matrix column(const Matrix& a, std::size_t j);
// Reinterprets a matrix over GF(p) in an extension GF(p^e); codes are unchanged.
Matrix base_change(const Matrix& a, const FieldPtr& target);
// sum_i c_i m_i over matrices of equal shape.
Matrix linear_combination(const std::vector<Elem>& coeffs, const std::vector<Matrix>& mats);

// ---- elimination ----

struct Echelon {
    Matrix r;                          // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);
// Pivot columns of the row echelon form: the first maximal independent set of columns.
std::vector<std::size_t> pivot_columns(const Matrix& a);

// A subspace of F^n presented by a basis (n x k, one vector per column) together with
// k coordinate rows on which the basis restricts to the identity, so the coordinates
// of any vector of the subspace are its entries at those rows.
struct Subspace {
    Matrix basis;
    std::vector<std::size_t> coord;
    std::size_t dim() const { return basis.cols; }
    std::size_t ambient() const { return basis.rows; }
};

Subspace kernel(const Matrix& a);
// Rows spanning {f : f a = 0}.
Matrix left_kernel(const Matrix& a);
Subspace column_space(const Matrix& a);
// Row-reduced basis of the row space (nonzero rows of the rref).
Matrix row_space(const Matrix& a);
// Coordinates of the columns of v (assumed to lie in s).
Matrix coordinates(const Subspace& s, const Matrix& v);
bool contains(const Subspace& s, const Matrix& v);
// Rows spanning the intersection of two row spaces of the same width.
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);

struct SolveResult {
    bool consistent = false;
    Matrix particular;   // a x = b when consistent
    Subspace nullspace;  // kernel of a
};
// Solves a x = b.  Pivot choice: first nonzero entry in column order.
SolveResult solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

// Ranks of a^0, a^1, ... until the rank stops changing or `max_power` is reached.
std::vector<std::size_t> power_ranks(const Matrix& a, unsigned max_power);

}  // namespace cjt
