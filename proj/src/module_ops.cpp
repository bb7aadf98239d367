#include <random>
#include <stdexcept>
#include <string>

#include "cjt/jordan.hpp"
#include "cjt/module.hpp"

namespace cjt {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

// Lowest variable with a nonzero exponent in the monomial idx (idx > 0).
std::size_t first_variable(std::size_t idx, std::uint32_t p) {
    std::size_t i = 0;
    while (idx % p == 0) {
        idx /= p;
        ++i;
    }
    return i;
}

// T^a for every monomial a, indexed by mono(a).
std::vector<Matrix> monomial_table(const ModuleRep& m) {
    std::uint32_t p = m.p();
    std::size_t count = ipow(p, m.r);
    std::vector<Matrix> t(count);
    t[0] = Matrix::identity(m.field, m.dim);
    for (std::size_t idx = 1; idx < count; ++idx) {
        std::size_t i = first_variable(idx, p);
        t[idx] = m.gens[i] * t[idx - ipow(p, i)];
    }
    return t;
}

Subspace whole_space(const FieldPtr& f, std::size_t n) {
    Subspace s;
    s.basis = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) s.coord.push_back(i);
    return s;
}

// Rows of A_i x for the free module kE^d, computed by shifting indices.
Matrix free_shift(const Matrix& x, std::size_t d, std::uint32_t p, std::size_t i) {
    Matrix out(x.field, x.rows, x.cols);
    std::size_t stride = d * ipow(p, i);
    for (std::size_t idx = 0; idx < x.rows; ++idx) {
        std::size_t ai = (idx / stride) % p;
        if (ai == 0) continue;
        const Elem* src = x.row(idx - stride);
        std::copy(src, src + x.cols, out.row(idx));
    }
    return out;
}

// All normalised points of P^{r-1}(GF(p)).
std::vector<std::vector<Elem>> prime_points(std::uint32_t p, std::size_t r) {
    std::vector<std::vector<Elem>> pts;
    for (std::size_t lead = r; lead-- > 0;) {
        std::size_t tail = r - 1 - lead;
        std::size_t count = ipow(p, tail);
        for (std::size_t c = 0; c < count; ++c) {
            std::vector<Elem> pt(r, 0);
            pt[lead] = 1;
            std::size_t v = c;
            for (std::size_t k = r; k-- > lead + 1;) {
                pt[k] = Elem(v % p);
                v /= p;
            }
            pts.push_back(pt);
        }
    }
    return pts;
}

}  // namespace

FreeSplit split_free(const ModuleRep& m) {
    FreeSplit out;
    Matrix theta = socle_element(m);
    std::size_t t = m.dim == 0 ? 0 : rank(theta);
    if (t == 0) {
        out.core = m;
        out.core_basis = whole_space(m.field, m.dim);
        return out;
    }
    // F C = I with C = theta restricted to a maximal independent set of columns.
    Matrix c = select_cols(theta, pivot_columns(theta));
    std::vector<std::size_t> rows = pivot_columns(transpose(c));
    auto cinv = inverse(select_rows(c, rows));
    if (!cinv) throw std::logic_error("split_free: singular pivot block");
    Matrix f = *cinv * select_rows(Matrix::identity(m.field, m.dim), rows);

    // Retraction onto the free part: row (a, l) is f_l T^{theta - a}.
    std::uint32_t p = m.p();
    std::size_t count = ipow(p, m.r);
    std::vector<Matrix> ft(count);  // ft[mono(c)] = F T^c
    ft[0] = f;
    for (std::size_t idx = 1; idx < count; ++idx) {
        std::size_t i = first_variable(idx, p);
        ft[idx] = ft[idx - ipow(p, i)] * m.gens[i];
    }
    Matrix phi(m.field, t * count, m.dim);
    for (std::size_t a = 0; a < count; ++a) {
        const Matrix& src = ft[count - 1 - a];  // theta - a has index (count-1) - mono(a)
        for (std::size_t l = 0; l < t; ++l) std::copy(src.row(l), src.row(l) + m.dim, phi.row(l + t * a));
    }
    out.free_rank = t;
    out.core_basis = kernel(phi);
    out.core = submodule(m, out.core_basis);
    return out;
}

Cover projective_cover(const ModuleRep& m, bool check_minimal) {
    Cover cv;
    std::uint32_t p = m.p();
    std::size_t count = ipow(p, m.r);
    cv.generators = generator_indices(m);
    std::size_t d = cv.generators.size();
    cv.rank = d;
    cv.free = free_module(m.field, m.r, d, m.convention);

    std::vector<Matrix> blocks(count);
    blocks[0] = select_cols(Matrix::identity(m.field, m.dim), cv.generators);
    for (std::size_t idx = 1; idx < count; ++idx) {
        std::size_t i = first_variable(idx, p);
        blocks[idx] = m.gens[i] * blocks[idx - ipow(p, i)];
    }
    cv.map = d == 0 ? Matrix(m.field, m.dim, 0) : hstack(blocks);

    cv.kernel = kernel(cv.map);
    const Matrix& k = cv.kernel.basis;
    cv.omega.field = m.field;
    cv.omega.r = m.r;
    cv.omega.dim = k.cols;
    cv.omega.convention = m.convention;
    for (std::size_t i = 0; i < m.r; ++i) cv.omega.gens.push_back(select_rows(free_shift(k, d, p, i), cv.kernel.coord));

    if (check_minimal && cv.omega.dim > 0 && cv.omega.dim <= 800 && split_free(cv.omega).free_rank != 0)
        throw std::logic_error("projective_cover: kernel has a free summand");
    return cv;
}

ModuleRep omega_n(const ModuleRep& m, int n) {
    if (n == 0) return split_free(m).core;
    if (n < 0) return dual(omega_n(dual(m), -n));
    ModuleRep cur = m;
    for (int i = 0; i < n; ++i) cur = projective_cover(cur, false).omega;
    return cur;
}

std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n) {
    if (!m.field->same(*n.field) || m.r != n.r) throw std::invalid_argument("hom_space: incompatible modules");
    if (m.dim == 0 || n.dim == 0) return {};
    std::uint32_t p = m.p();
    std::size_t count = ipow(p, m.r);
    Cover cv = projective_cover(m, false);
    std::size_t d = cv.rank, dn = n.dim;
    std::vector<Matrix> tn = monomial_table(n);

    // psi(T^a e_j) = T_N^a n_j must vanish on the generators of the kernel.
    std::vector<std::size_t> kgens = cv.omega.dim ? generator_indices(cv.omega) : std::vector<std::size_t>{};
    Matrix eq(m.field, kgens.size() * dn, d * dn);
    const Field& F = *m.field;
    for (std::size_t g = 0; g < kgens.size(); ++g) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t a = 0; a < count; ++a) {
                Elem w = cv.kernel.basis(j + d * a, kgens[g]);
                if (w == 0) continue;
                const Matrix& t = tn[a];
                for (std::size_t u = 0; u < dn; ++u) {
                    Elem* row = eq.row(g * dn + u) + j * dn;
                    const Elem* tr = t.row(u);
                    for (std::size_t v = 0; v < dn; ++v)
                        if (tr[v]) row[v] = F.add(row[v], F.mul(w, tr[v]));
                }
            }
        }
    }
    Subspace sol = kernel(eq);

    // phi = psi sigma, with sigma a linear section of the cover map.
    std::vector<std::size_t> piv = pivot_columns(cv.map);
    auto cinv = inverse(select_cols(cv.map, piv));
    if (!cinv) throw std::logic_error("hom_space: cover map is not surjective");
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        Matrix psi(m.field, dn, piv.size());
        for (std::size_t c = 0; c < piv.size(); ++c) {
            std::size_t j = piv[c] % d, a = piv[c] / d;
            const Matrix& t = tn[a];
            for (std::size_t u = 0; u < dn; ++u) {
                Elem acc = 0;
                for (std::size_t v = 0; v < dn; ++v) {
                    Elem x = sol.basis(j * dn + v, s);
                    if (x) acc = F.add(acc, F.mul(t(u, v), x));
                }
                psi(u, c) = acc;
            }
        }
        out.push_back(psi * *cinv);
    }
    return out;
}

std::vector<Matrix> hom_space_direct(const ModuleRep& m, const ModuleRep& n) {
    if (!m.field->same(*n.field) || m.r != n.r) throw std::invalid_argument("hom_space: incompatible modules");
    if (m.dim == 0 || n.dim == 0) return {};
    Matrix im = Matrix::identity(m.field, m.dim), in = Matrix::identity(m.field, n.dim);
    std::vector<Matrix> eqs;
    for (std::size_t i = 0; i < m.r; ++i) eqs.push_back(kron(in, transpose(m.gens[i])) - kron(n.gens[i], im));
    Subspace k = kernel(vstack(eqs));
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < k.dim(); ++s) {
        Matrix x(m.field, n.dim, m.dim);
        for (std::size_t idx = 0; idx < n.dim * m.dim; ++idx) x.data[idx] = k.basis(idx, s);
        out.push_back(std::move(x));
    }
    return out;
}

bool factors_through_projective(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f) {
    if (f.rows != tgt.dim || f.cols != src.dim) throw std::invalid_argument("factors_through_projective: shape");
    if (f.is_zero()) return true;
    std::uint32_t p = src.p();
    std::size_t count = ipow(p, src.r), ms = src.dim;
    Cover cv = projective_cover(tgt, false);
    std::size_t d = cv.rank;
    std::vector<Matrix> ts = monomial_table(src);
    const Field& F = *src.field;

    // Homs src -> kE^d are s -> sum_a g_j(T^{theta-a} s) T^a e_j; solve c h = f for the g_j.
    Matrix eq(src.field, tgt.dim * ms, d * ms);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t a = 0; a < count; ++a) {
            const Matrix& t = ts[count - 1 - a];
            for (std::size_t u = 0; u < tgt.dim; ++u) {
                Elem c = cv.map(u, j + d * a);
                if (c == 0) continue;
                for (std::size_t v = 0; v < ms; ++v) {
                    Elem* row = eq.row(u * ms + v) + j * ms;
                    for (std::size_t w = 0; w < ms; ++w) {
                        Elem x = t(w, v);
                        if (x) row[w] = F.add(row[w], F.mul(c, x));
                    }
                }
            }
        }
    }
    Matrix rhs(src.field, tgt.dim * ms, 1);
    for (std::size_t idx = 0; idx < tgt.dim * ms; ++idx) rhs.data[idx] = f.data[idx];
    return solve_linear(eq, rhs).consistent;
}

Extension build_extension(const ModuleRep& m, const ModuleRep& n, const Matrix& f) {
    if (!m.field->same(*n.field) || m.r != n.r || m.convention != n.convention)
        throw std::invalid_argument("build_extension: incompatible modules");
    Cover cv = projective_cover(n, false);
    if (!is_intertwiner(cv.omega, m, f)) throw std::invalid_argument("build_extension: f is not a homomorphism");
    std::size_t dm = m.dim;
    ModuleRep sum = direct_sum({m, cv.free});
    Subspace rel = column_space(vstack({f, negate(cv.kernel.basis)}));
    Quotient q = quotient(sum, rel);

    Extension ext;
    ext.middle = q.module;
    std::vector<std::size_t> first(dm);
    for (std::size_t i = 0; i < dm; ++i) first[i] = i;
    ext.from_m = select_cols(q.projection, first);
    ext.to_n = Matrix(m.field, n.dim, q.complement.size());
    for (std::size_t c = 0; c < q.complement.size(); ++c) {
        std::size_t idx = q.complement[c];
        if (idx < dm) continue;
        for (std::size_t u = 0; u < n.dim; ++u) ext.to_n(u, c) = cv.map(u, idx - dm);
    }
    return ext;
}

IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed, unsigned draws) {
    IsoResult res;
    if (!m.field->same(*n.field) || m.r != n.r) {
        res.reason = "different field or rank";
        return res;
    }
    if (m.dim != n.dim) {
        res.reason = "dimensions differ";
        return res;
    }
    if (m.dim == 0) {
        res.isomorphic = true;
        res.witness = Matrix(m.field, 0, 0);
        return res;
    }
    for (const auto& pt : prime_points(m.p(), m.r)) {
        Matrix a(m.field, m.dim, m.dim), b(m.field, n.dim, n.dim);
        for (std::size_t i = 0; i < m.r; ++i) {
            a = a + scale(m.gens[i], pt[i]);
            b = b + scale(n.gens[i], pt[i]);
        }
        if (from_nilpotent(a, m.p()) != from_nilpotent(b, n.p())) {
            res.reason = "Jordan types differ at a rational point";
            return res;
        }
    }
    std::vector<Matrix> h = hom_space(m, n);
    auto found = [&](const Matrix& x) {
        if (rank(x) != m.dim) return false;
        res.isomorphic = true;
        res.witness = x;
        res.reason = "invertible homomorphism found";
        return true;
    };
    if (h.empty()) {
        res.reason = "no nonzero homomorphisms";
        return res;
    }
    for (const auto& x : h)
        if (found(x)) return res;
    const Field& F = *m.field;
    std::mt19937_64 rng(seed);
    std::vector<Elem> coeffs(h.size());
    for (unsigned k = 0; k < draws; ++k) {
        for (auto& c : coeffs) c = Elem(rng() % F.q());
        if (found(linear_combination(coeffs, h))) return res;
    }
    if (F.q() <= 9 && h.size() <= 4) {
        std::size_t total = ipow(F.q(), h.size());
        for (std::size_t code = 1; code < total; ++code) {
            std::size_t v = code;
            for (auto& c : coeffs) {
                c = Elem(v % F.q());
                v /= F.q();
            }
            if (found(linear_combination(coeffs, h))) return res;
        }
        res.reason = "no invertible homomorphism exists";
        return res;
    }
    res.inconclusive = true;
    res.reason = "no invertible homomorphism among sampled combinations";
    return res;
}

}  // namespace cjt
