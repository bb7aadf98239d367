#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cjt/syzygy.hpp"

namespace cjt {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t cohomology_dim(std::size_t r, int n) {
    if (n < 0) throw std::invalid_argument("cohomology_dim needs n >= 0");
    return binomial(std::uint64_t(n) + r - 1, r - 1);
}

std::uint64_t omega_dim_formula(std::uint32_t p, std::size_t r, int n) {
    if (n == 0) return 1;
    std::uint64_t m = std::uint64_t(n < 0 ? -n : n);
    std::int64_t a = 0;
    for (std::uint64_t i = 0; i < m; ++i) {
        std::int64_t b = std::int64_t(binomial(m + r - 2 - i, r - 1));
        a += (i % 2 == 0) ? b : -b;
    }
    std::int64_t pr = 1;
    for (std::size_t i = 0; i < r; ++i) pr *= p;
    return std::uint64_t(pr * a + (m % 2 == 0 ? 1 : -1));
}

ModulePtr omega_k(const FieldPtr& f, std::size_t r, int n, Convention c) {
    using Key = std::tuple<std::uint32_t, std::uint32_t, std::size_t, int, int>;
    static std::mutex mu;
    static std::map<Key, ModulePtr> cache;
    Key key{f->p(), f->e(), r, n, int(c)};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ModulePtr out;
    if (n == 0) {
        out = share(trivial_module(f, r, 1, c));
    } else if (n > 0) {
        out = share(projective_cover(*omega_k(f, r, n - 1, c), false).omega);
    } else {
        out = share(dual(*omega_k(f, r, -n, c)));
    }
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(key, out).first->second;
}

std::vector<CocycleClass> cohomology_basis(const FieldPtr& f, std::size_t r, int n) {
    if (n < 1) throw std::invalid_argument("cohomology_basis needs n >= 1");
    ModulePtr src = omega_k(f, r, n);
    ModuleRep k = trivial_module(f, r, 1, src->convention);
    Matrix top = top_functionals(*src);
    std::vector<CocycleClass> out;
    for (std::size_t i = 0; i < top.rows; ++i) {
        Matrix row = select_rows(top, {i});
        if (factors_through_projective(*src, k, row)) continue;
        out.push_back(CocycleClass{n, src, row, "degree-" + std::to_string(n) + " basis class " + std::to_string(out.size() + 1)});
    }
    return out;
}

const char* to_string(Restriction r) { return r == Restriction::ZERO ? "ZERO" : "NONZERO"; }

namespace {

ModuleRep restricted(const ModuleRep& m, const PiPoint& q) {
    return make_module(q.field, {evaluate(m, q)}, m.convention);
}

Matrix in_field(const Matrix& a, const FieldPtr& f) { return a.field->same(*f) ? a : base_change(a, f); }

}  // namespace

Restriction restrict_cocycle(const CocycleClass& c, const PiPoint& q) {
    ModuleRep src = restricted(*c.source, q);
    ModuleRep k = trivial_module(q.field, 1, 1, src.convention);
    return factors_through_projective(src, k, in_field(c.carrier, q.field)) ? Restriction::ZERO : Restriction::NONZERO;
}

Matrix vanishing_classes(const std::vector<CocycleClass>& basis, const PiPoint& q) {
    if (basis.empty()) throw std::invalid_argument("empty class basis");
    std::vector<Matrix> rows;
    for (const auto& c : basis) rows.push_back(in_field(c.carrier, q.field));
    Matrix b = vstack(rows);
    Matrix x = evaluate(*basis[0].source, q);
    Matrix theta = power(x, q.field->p() - 1);
    // c b = g theta  <=>  (c, -g) in the left kernel of [b; theta]
    Matrix lk = left_kernel(vstack({b, theta}));
    std::vector<std::size_t> first(basis.size());
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
    if (lk.rows == 0) return Matrix(q.field, 0, basis.size());
    return row_space(select_cols(lk, first));
}

CocycleClass combine(const std::vector<CocycleClass>& basis, const Matrix& coeffs, std::string tag) {
    CocycleClass out{basis.at(0).degree, basis[0].source, Matrix(basis[0].carrier.field, 1, basis[0].source->dim),
                     std::move(tag)};
    const Field& F = *out.carrier.field;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Elem c = coeffs(0, k);
        if (c >= F.q() || !F.in_prime_field(c))
            throw std::invalid_argument("class coefficients must lie in the prime field");
        out.carrier = out.carrier + scale(basis[k].carrier, c);
    }
    return out;
}

namespace {

Matrix intersect_all(const std::vector<Matrix>& spaces, std::size_t width, const FieldPtr& f) {
    Matrix acc = Matrix::identity(f, width);
    for (const auto& s : spaces) {
        if (acc.rows == 0) break;
        acc = s.rows == 0 ? Matrix(f, 0, width) : intersect_row_spaces(acc, s);
    }
    return acc;
}

}  // namespace

CocycleClass coordinate_class(const FieldPtr& f, std::size_t r, int n, std::size_t i) {
    if (i >= r) throw std::invalid_argument("coordinate index out of range");
    auto basis = cohomology_basis(f, r, n);
    std::vector<Matrix> others;
    Matrix zi;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Elem> e(r, 0);
        e[j] = 1;
        Matrix z = vanishing_classes(basis, make_point(f, e));
        if (j == i)
            zi = z;
        else
            others.push_back(z);
    }
    Matrix cand = intersect_all(others, basis.size(), f);
    std::size_t rz = rank(zi);
    for (std::size_t k = 0; k < cand.rows; ++k) {
        Matrix c = select_rows(cand, {k});
        if (rank(zi.rows ? vstack({zi, c}) : c) > rz)
            return combine(basis, c, "degree-" + std::to_string(n) + " coordinate class " + std::to_string(i + 1));
    }
    throw std::runtime_error("no coordinate class in this degree");
}

CocycleClass rationally_vanishing_class(const FieldPtr& f, std::size_t r, int n) {
    auto basis = cohomology_basis(f, r, n);
    std::vector<Matrix> zs;
    for (const auto& q : projective_points(f, r)) zs.push_back(vanishing_classes(basis, q));
    Matrix z = intersect_all(zs, basis.size(), f);
    if (z.rows == 0) throw std::runtime_error("no nonzero class vanishes at every rational point");
    return combine(basis, select_rows(z, {0}), "degree-" + std::to_string(n) + " rationally vanishing class");
}

}  // namespace cjt
