#include <stdexcept>
#include <string>

#include "cjt/module.hpp"

namespace cjt {

const char* to_string(Convention c) { return c == Convention::PRIMITIVE ? "primitive" : "group"; }

Convention parse_convention(const std::string& s) {
    if (s == "primitive" || s == "PRIMITIVE") return Convention::PRIMITIVE;
    if (s == "group" || s == "GROUP") return Convention::GROUP;
    throw std::invalid_argument("unknown convention '" + s + "'");
}

ValidationReport validate(const ModuleRep& m) {
    ValidationReport rep;
    auto fail = [&](std::string msg, int a, int b) {
        rep.ok = false;
        rep.message = std::move(msg);
        rep.first = a;
        rep.second = b;
        return rep;
    };
    if (!m.field) return fail("module has no field", -1, -1);
    if (m.r < 1) return fail("module needs at least one generator", -1, -1);
    if (m.gens.size() != m.r)
        return fail("expected " + std::to_string(m.r) + " generators, got " + std::to_string(m.gens.size()), -1, -1);
    for (std::size_t i = 0; i < m.r; ++i) {
        const Matrix& a = m.gens[i];
        if (a.rows != m.dim || a.cols != m.dim)
            return fail("generator " + std::to_string(i + 1) + " is not " + std::to_string(m.dim) + "x" +
                            std::to_string(m.dim),
                        int(i), -1);
        if (!a.field || !a.field->same(*m.field))
            return fail("generator " + std::to_string(i + 1) + " lives over a different field", int(i), -1);
    }
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::size_t j = i + 1; j < m.r; ++j)
            if (m.gens[i] * m.gens[j] != m.gens[j] * m.gens[i])
                return fail("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute",
                            int(i), int(j));
    for (std::size_t i = 0; i < m.r; ++i) {
        if (m.dim == 0) break;
        Matrix pw = m.gens[i];
        for (std::uint32_t k = 1; k < m.p() && !pw.is_zero(); ++k) pw = pw * m.gens[i];
        if (!pw.is_zero()) return fail("generator " + std::to_string(i + 1) + " has nonzero p-th power", int(i), -1);
    }
    return rep;
}

ModuleRep make_module(FieldPtr f, std::vector<Matrix> gens, Convention c) {
    ModuleRep m;
    m.field = std::move(f);
    m.r = gens.size();
    m.dim = gens.empty() ? 0 : gens[0].rows;
    m.gens = std::move(gens);
    m.convention = c;
    auto rep = validate(m);
    if (!rep.ok) throw std::invalid_argument("invalid module: " + rep.message);
    return m;
}

ModuleRep trivial_module(FieldPtr f, std::size_t r, std::size_t n, Convention c) {
    ModuleRep m;
    m.field = f;
    m.r = r;
    m.dim = n;
    m.gens.assign(r, Matrix(f, n, n));
    m.convention = c;
    return m;
}

ModuleRep free_module(FieldPtr f, std::size_t r, std::size_t rank, Convention c) {
    std::uint32_t p = f->p();
    std::size_t P = 1;
    for (std::size_t i = 0; i < r; ++i) P *= p;
    std::size_t n = rank * P;
    ModuleRep m = trivial_module(f, r, n, c);
    std::size_t stride = rank;
    for (std::size_t i = 0; i < r; ++i) {
        Matrix& t = m.gens[i];
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::size_t ai = (idx / stride) % p;
            if (ai + 1 < p) t(idx + stride, idx) = 1;
        }
        stride *= p;
    }
    return m;
}

ModulePtr share(ModuleRep m) { return std::make_shared<const ModuleRep>(std::move(m)); }

bool is_intertwiner(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f) {
    if (f.rows != tgt.dim || f.cols != src.dim || src.r != tgt.r) return false;
    for (std::size_t i = 0; i < src.r; ++i)
        if (f * src.gens[i] != tgt.gens[i] * f) return false;
    return true;
}

ModuleHom make_hom(ModulePtr src, ModulePtr tgt, Matrix f) {
    if (!is_intertwiner(*src, *tgt, f)) throw std::invalid_argument("matrix is not a module homomorphism");
    return ModuleHom{std::move(src), std::move(tgt), std::move(f)};
}

namespace {

void require_compatible(const ModuleRep& m, const ModuleRep& n, const char* what) {
    if (!m.field->same(*n.field)) throw std::invalid_argument(std::string(what) + ": field mismatch");
    if (m.r != n.r) throw std::invalid_argument(std::string(what) + ": rank mismatch");
    if (m.convention != n.convention) throw std::invalid_argument(std::string(what) + ": convention mismatch");
}

}  // namespace

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    ModuleRep s;
    s.field = parts[0].field;
    s.r = parts[0].r;
    s.convention = parts[0].convention;
    for (const auto& m : parts) {
        require_compatible(parts[0], m, "direct sum");
        s.dim += m.dim;
    }
    for (std::size_t i = 0; i < s.r; ++i) {
        std::vector<Matrix> blocks;
        for (const auto& m : parts) blocks.push_back(m.gens[i]);
        s.gens.push_back(block_diag(blocks));
    }
    return s;
}

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n) {
    require_compatible(m, n, "tensor");
    ModuleRep t;
    t.field = m.field;
    t.r = m.r;
    t.dim = m.dim * n.dim;
    t.convention = m.convention;
    Matrix im = Matrix::identity(m.field, m.dim), in = Matrix::identity(m.field, n.dim);
    for (std::size_t i = 0; i < m.r; ++i) {
        Matrix g = kron(m.gens[i], in) + kron(im, n.gens[i]);
        if (m.convention == Convention::GROUP) g = g + kron(m.gens[i], n.gens[i]);
        t.gens.push_back(std::move(g));
    }
    return t;
}

ModuleRep dual(const ModuleRep& m) {
    ModuleRep d = m;
    for (std::size_t i = 0; i < m.r; ++i) {
        const Matrix& a = m.gens[i];
        if (m.convention == Convention::PRIMITIVE) {
            d.gens[i] = negate(transpose(a));
        } else {
            // (I + A)^{-1} = sum_k (-A)^k since A^p = 0
            Matrix inv = Matrix::identity(m.field, m.dim);
            Matrix term = inv;
            Matrix na = negate(a);
            for (std::uint32_t k = 1; k < m.p(); ++k) {
                term = term * na;
                inv = inv + term;
            }
            d.gens[i] = transpose(inv) - Matrix::identity(m.field, m.dim);
        }
    }
    return d;
}

ModuleRep hom(const ModuleRep& m, const ModuleRep& n) { return tensor(dual(m), n); }

ModuleRep base_change(const ModuleRep& m, const FieldPtr& target) {
    ModuleRep b = m;
    b.field = target;
    for (auto& g : b.gens) g = base_change(g, target);
    return b;
}

ModuleRep submodule(const ModuleRep& m, const Subspace& s) {
    ModuleRep sub;
    sub.field = m.field;
    sub.r = m.r;
    sub.dim = s.dim();
    sub.convention = m.convention;
    for (const auto& a : m.gens) sub.gens.push_back(select_rows(a * s.basis, s.coord));
    return sub;
}

Quotient quotient(const ModuleRep& m, const Subspace& s) {
    std::vector<char> in(m.dim, 0);
    for (auto c : s.coord) in[c] = 1;
    Quotient q;
    for (std::size_t i = 0; i < m.dim; ++i)
        if (!in[i]) q.complement.push_back(i);
    Matrix id = Matrix::identity(m.field, m.dim);
    q.projection = select_rows(id, q.complement);
    if (s.dim() > 0) q.projection = q.projection - select_rows(s.basis, q.complement) * select_rows(id, s.coord);
    q.module.field = m.field;
    q.module.r = m.r;
    q.module.dim = q.complement.size();
    q.module.convention = m.convention;
    for (const auto& a : m.gens) q.module.gens.push_back(q.projection * select_cols(a, q.complement));
    return q;
}

Matrix monomial_action(const ModuleRep& m, const std::vector<std::uint32_t>& exps) {
    if (exps.size() != m.r) throw std::invalid_argument("monomial has the wrong number of exponents");
    Matrix out = Matrix::identity(m.field, m.dim);
    for (std::size_t i = 0; i < m.r; ++i)
        for (std::uint32_t k = 0; k < exps[i]; ++k) out = out * m.gens[i];
    return out;
}

Matrix socle_element(const ModuleRep& m) { return monomial_action(m, std::vector<std::uint32_t>(m.r, m.p() - 1)); }

RadicalSocle radical_socle(const ModuleRep& m) {
    RadicalSocle rs;
    if (m.dim == 0) {
        rs.radical = column_space(Matrix(m.field, 0, 0));
        rs.socle = rs.radical;
        return rs;
    }
    rs.radical = column_space(hstack(m.gens));
    rs.socle = kernel(vstack(m.gens));
    return rs;
}

Matrix top_functionals(const ModuleRep& m) {
    if (m.dim == 0) return Matrix(m.field, 0, 0);
    Matrix q = Matrix::identity(m.field, m.dim);
    for (const auto& a : m.gens) {
        if (q.rows == 0) break;
        Matrix lk = left_kernel(q * a);
        q = lk * q;
    }
    return q;
}

std::vector<std::size_t> generator_indices(const ModuleRep& m) {
    Matrix q = top_functionals(m);
    if (q.rows == 0) return {};
    return pivot_columns(q);
}

}  // namespace cjt
