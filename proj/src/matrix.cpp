#include "cjt/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ops.hpp"

namespace cjt {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.field || !b.field || !a.field->same(*b.field))
        throw std::invalid_argument(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](Elem x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    if (field && o.field && !field->same(*o.field)) return false;
    return data == o.data;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matrix product");
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix product: shape mismatch " + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " * " + std::to_string(b.rows) + "x" +
                                    std::to_string(b.cols));
    Matrix c(a.field, a.rows, b.cols);
    if (a.rows == 0 || b.cols == 0) return c;
    detail::with_ops(a.F(), [&](auto ops) {
        using Ops = decltype(ops);
        std::size_t n = b.cols;
        if constexpr (Ops::kLazyAccumulate) {
            std::vector<std::uint32_t> acc(n);
            for (std::size_t i = 0; i < a.rows; ++i) {
                std::fill(acc.begin(), acc.end(), 0);
                const Elem* ar = a.row(i);
                for (std::size_t k = 0; k < a.cols; ++k)
                    if (ar[k]) ops.acc(acc.data(), b.row(k), ar[k], n);
                ops.reduce(acc.data(), c.row(i), n);
            }
        } else {
            for (std::size_t i = 0; i < a.rows; ++i) {
                const Elem* ar = a.row(i);
                Elem* cr = c.row(i);
                for (std::size_t k = 0; k < a.cols; ++k)
                    if (ar[k]) ops.axpy(cr, b.row(k), ar[k], n);
            }
        }
    });
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matrix sum");
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix c = a;
    const Field& F = a.F();
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = F.add(c.data[i], b.data[i]);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matrix difference");
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix c = a;
    const Field& F = a.F();
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = F.sub(c.data[i], b.data[i]);
    return c;
}

Matrix scale(const Matrix& a, Elem s) {
    Matrix c = a;
    const Field& F = a.F();
    for (auto& x : c.data) x = F.mul(x, s);
    return c;
}

Matrix negate(const Matrix& a) {
    Matrix c = a;
    const Field& F = a.F();
    for (auto& x : c.data) x = F.neg(x);
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.field, a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
    Matrix r = Matrix::identity(a.field, a.rows);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "Kronecker product");
    Matrix c(a.field, a.rows * b.rows, a.cols * b.cols);
    const Field& F = a.F();
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            Elem x = a(i, j);
            if (!x) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    c(i * b.rows + k, j * b.cols + l) = F.mul(x, b(k, l));
        }
    return c;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("hstack of nothing");
    std::size_t rows = parts[0].rows, cols = 0;
    for (const auto& m : parts) {
        if (m.rows != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += m.cols;
    }
    Matrix c(parts[0].field, rows, cols);
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < rows; ++i) std::copy(m.row(i), m.row(i) + m.cols, c.row(i) + off);
        off += m.cols;
    }
    return c;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack of nothing");
    std::size_t cols = parts[0].cols, rows = 0;
    for (const auto& m : parts) {
        if (m.cols != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += m.rows;
    }
    Matrix c(parts[0].field, rows, cols);
    std::size_t off = 0;
    for (const auto& m : parts) {
        std::copy(m.data.begin(), m.data.end(), c.data.begin() + off * cols);
        off += m.rows;
    }
    return c;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("block_diag of nothing");
    std::size_t rows = 0, cols = 0;
    for (const auto& m : parts) {
        rows += m.rows;
        cols += m.cols;
    }
    Matrix c(parts[0].field, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows; ++i) std::copy(m.row(i), m.row(i) + m.cols, c.row(r0 + i) + c0);
        r0 += m.rows;
        c0 += m.cols;
    }
    return c;
}

Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx) {
    Matrix c(a.field, idx.size(), a.cols);
    for (std::size_t i = 0; i < idx.size(); ++i) std::copy(a.row(idx[i]), a.row(idx[i]) + a.cols, c.row(i));
    return c;
}

Matrix select_cols(const Matrix& a, const std::vector<std::size_t>& idx) {
    Matrix c(a.field, a.rows, idx.size());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) c(i, j) = a(i, idx[j]);
    return c;
}

Matrix column(const Matrix& a, std::size_t j) { return select_cols(a, {j}); }

Matrix base_change(const Matrix& a, const FieldPtr& target) {
    if (a.F().same(*target)) return a;
    if (!a.F().is_prime() || a.F().p() != target->p())
        throw std::invalid_argument("base change is only supported from the prime field");
    Matrix c = a;
    c.field = target;
    return c;
}

Matrix linear_combination(const std::vector<Elem>& coeffs, const std::vector<Matrix>& mats) {
    if (mats.empty() || coeffs.size() != mats.size()) throw std::invalid_argument("linear_combination: size mismatch");
    Matrix c(mats[0].field, mats[0].rows, mats[0].cols);
    detail::with_ops(c.F(), [&](auto ops) {
        for (std::size_t k = 0; k < mats.size(); ++k)
            if (coeffs[k]) ops.axpy(c.data.data(), mats[k].data.data(), coeffs[k], c.data.size());
    });
    return c;
}

}  // namespace cjt
