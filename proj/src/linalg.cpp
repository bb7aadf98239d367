#include <algorithm>
#include <stdexcept>

#include "cjt/matrix.hpp"
#include "ops.hpp"

namespace cjt {

namespace {

// Gauss-Jordan (full = true) or forward elimination on `a` in place.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, Matrix& a, bool full, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t cols = a.cols;
    for (std::size_t c = 0; c < col_limit && r < a.rows; ++c) {
        std::size_t piv = a.rows;
        for (std::size_t i = r; i < a.rows; ++i)
            if (a(i, c)) { piv = i; break; }
        if (piv == a.rows) continue;
        if (piv != r) std::swap_ranges(a.row(piv), a.row(piv) + cols, a.row(r));
        Elem* pr = a.row(r);
        Elem lead = pr[c];
        if (lead != 1) ops.scale(pr + c, ops.inv(lead), cols - c);
        std::size_t start = full ? 0 : r + 1;
        for (std::size_t i = start; i < a.rows; ++i) {
            if (i == r) continue;
            Elem x = a(i, c);
            if (x) ops.axpy(a.row(i) + c, pr + c, ops.neg(x), cols - c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> run(Matrix& a, bool full, std::size_t col_limit) {
    if (a.rows == 0 || a.cols == 0) return {};
    return detail::with_ops(a.F(), [&](auto ops) { return eliminate(ops, a, full, col_limit); });
}

Subspace kernel_from_rref(const Matrix& r, const std::vector<std::size_t>& pivots, std::size_t n) {
    const Field& F = r.F();
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    Subspace s;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) s.coord.push_back(c);
    s.basis = Matrix(r.field, n, s.coord.size());
    for (std::size_t k = 0; k < s.coord.size(); ++k) {
        std::size_t f = s.coord[k];
        s.basis(f, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) s.basis(pivots[i], k) = F.neg(r(i, f));
    }
    return s;
}

}  // namespace

Echelon rref(Matrix a) {
    Echelon e;
    e.pivots = run(a, true, a.cols);
    e.r = std::move(a);
    return e;
}

std::size_t rank(const Matrix& a) {
    Matrix c = a;
    if (c.rows > c.cols) c = transpose(a);
    return run(c, false, c.cols).size();
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
    Matrix c = a;
    return run(c, false, c.cols);
}

Subspace kernel(const Matrix& a) {
    Matrix c = a;
    auto piv = run(c, true, c.cols);
    return kernel_from_rref(c, piv, a.cols);
}

Matrix left_kernel(const Matrix& a) { return transpose(kernel(transpose(a)).basis); }

Subspace column_space(const Matrix& a) {
    Matrix t = transpose(a);
    auto piv = run(t, true, t.cols);
    Subspace s;
    s.coord = piv;
    s.basis = Matrix(a.field, a.rows, piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t i = 0; i < a.rows; ++i) s.basis(i, k) = t(k, i);
    return s;
}

Matrix row_space(const Matrix& a) {
    Matrix c = a;
    auto piv = run(c, true, c.cols);
    Matrix out(a.field, piv.size(), a.cols);
    std::copy(c.data.begin(), c.data.begin() + piv.size() * a.cols, out.data.begin());
    return out;
}

Matrix coordinates(const Subspace& s, const Matrix& v) { return select_rows(v, s.coord); }

bool contains(const Subspace& s, const Matrix& v) {
    if (v.rows != s.ambient()) throw std::invalid_argument("contains: dimension mismatch");
    if (s.dim() == 0) return v.is_zero();
    return s.basis * coordinates(s, v) == v;
}

Matrix intersect_row_spaces(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("intersect_row_spaces: width mismatch");
    if (a.rows == 0 || b.rows == 0) return Matrix(a.field, 0, a.cols);
    Matrix lk = left_kernel(vstack({a, negate(b)}));
    if (lk.rows == 0) return Matrix(a.field, 0, a.cols);
    std::vector<std::size_t> first(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) first[i] = i;
    return row_space(select_cols(lk, first) * a);
}

SolveResult solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve_linear: row mismatch");
    Matrix aug = hstack({a, b});
    auto piv = run(aug, true, aug.cols);
    SolveResult res;
    std::vector<std::size_t> left;
    for (auto c : piv)
        if (c < a.cols) left.push_back(c);
    res.consistent = left.size() == piv.size();
    Matrix ra(a.field, left.size(), a.cols);
    for (std::size_t i = 0; i < left.size(); ++i) std::copy(aug.row(i), aug.row(i) + a.cols, ra.row(i));
    res.nullspace = kernel_from_rref(ra, left, a.cols);
    if (res.consistent) {
        res.particular = Matrix(a.field, a.cols, b.cols);
        for (std::size_t i = 0; i < left.size(); ++i)
            std::copy(aug.row(i) + a.cols, aug.row(i) + aug.cols, res.particular.row(left[i]));
    }
    return res;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = a.rows;
    Matrix aug = hstack({a, Matrix::identity(a.field, n)});
    auto piv = run(aug, true, n);
    if (piv.size() != n) return std::nullopt;
    Matrix inv(a.field, n, n);
    for (std::size_t i = 0; i < n; ++i) std::copy(aug.row(i) + n, aug.row(i) + 2 * n, inv.row(i));
    return inv;
}

std::vector<std::size_t> power_ranks(const Matrix& a, unsigned max_power) {
    if (!a.is_square()) throw std::invalid_argument("power_ranks of a non-square matrix");
    std::vector<std::size_t> ranks{a.rows};
    Matrix img;  // columns spanning the image of a^{j-1}; empty means identity
    for (unsigned j = 1; j <= max_power; ++j) {
        Matrix c = img.field ? a * img : a;
        auto piv = pivot_columns(c);
        ranks.push_back(piv.size());
        if (piv.empty() || piv.size() == ranks[ranks.size() - 2]) break;
        img = select_cols(c, piv);
    }
    return ranks;
}

}  // namespace cjt
