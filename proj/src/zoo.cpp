#include <algorithm>
#include <random>
#include <stdexcept>

#include "cjt/zoo.hpp"

namespace cjt {

ModuleRep from_arrows(const FieldPtr& f, std::size_t r, std::size_t dim, const std::vector<Arrow>& arrows) {
    std::vector<Matrix> gens(r, Matrix(f, dim, dim));
    for (const auto& [g, from, to, c] : arrows) {
        if (g >= r || from >= dim || to >= dim) throw std::invalid_argument("arrow out of range");
        Matrix& a = gens[g];
        a(to, from) = f->add(a(to, from), f->from_int(c));
    }
    return make_module(f, std::move(gens));
}

ModuleRep truncated(const FieldPtr& f, std::size_t r, unsigned m, unsigned n) {
    std::uint32_t p = f->p();
    if (r < 1) throw std::invalid_argument("TRUNCATED needs r >= 1");
    if (m > n) throw std::invalid_argument("TRUNCATED needs m <= n");
    std::vector<std::vector<std::uint32_t>> monos;
    std::vector<std::uint32_t> a(r, 0);
    for (;;) {
        unsigned deg = 0;
        for (auto x : a) deg += x;
        if (deg >= m && deg < n) monos.push_back(a);
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (++a[i] < p) break;
            a[i] = 0;
            if (i == 0) {
                i = r + 1;
                break;
            }
        }
        if (i == r + 1) break;
    }
    auto degree = [](const std::vector<std::uint32_t>& v) {
        unsigned d = 0;
        for (auto x : v) d += x;
        return d;
    };
    std::sort(monos.begin(), monos.end(), [&](const auto& x, const auto& y) {
        unsigned dx = degree(x), dy = degree(y);
        return dx != dy ? dx < dy : x > y;
    });
    std::vector<Arrow> arrows;
    for (std::size_t idx = 0; idx < monos.size(); ++idx)
        for (std::size_t i = 0; i < r; ++i) {
            auto b = monos[idx];
            if (++b[i] >= p || degree(b) >= n) continue;
            auto it = std::lower_bound(monos.begin(), monos.end(), b, [&](const auto& x, const auto& y) {
                unsigned dx = degree(x), dy = degree(y);
                return dx != dy ? dx < dy : x > y;
            });
            arrows.emplace_back(i, idx, std::size_t(it - monos.begin()), 1);
        }
    return from_arrows(f, r, monos.size(), arrows);
}

ModuleRep ke_mod_i2(const FieldPtr& f, std::size_t r) {
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < r; ++i) arrows.emplace_back(i, 0, i + 1, 1);
    return from_arrows(f, r, r + 1, arrows);
}

ModuleRep w_module(const FieldPtr& f) {
    if (f->p() < 3) throw std::invalid_argument("W needs p >= 3");
    auto v = [](int i) { return std::size_t(i - 1); };  // v_1..v_4
    auto mm = [](int i) { return std::size_t(4 + i); };  // m_0..m_4
    auto b = [](int i) { return std::size_t(9 + i); };   // b_0..b_3
    std::vector<Arrow> arrows;
    for (int i = 1; i <= 4; ++i) {
        arrows.emplace_back(0, v(i), mm(i), 1);
        arrows.emplace_back(1, v(i), mm(i - 1), 1);
    }
    for (int i = 0; i <= 3; ++i) arrows.emplace_back(0, mm(i), b(i), 1);
    for (int i = 1; i <= 4; ++i) arrows.emplace_back(1, mm(i), b(i - 1), 1);
    return from_arrows(f, 2, 13, arrows);
}

ModuleRep v_module(const FieldPtr& f, unsigned n) {
    if (n < 1) throw std::invalid_argument("V needs n >= 1");
    // v_i at index i-1, w_i at index n+i
    std::vector<Arrow> arrows;
    for (unsigned i = 1; i <= n; ++i) {
        arrows.emplace_back(0, i - 1, n + i, 1);
        arrows.emplace_back(1, i - 1, n + i - 1, 1);
    }
    return from_arrows(f, 2, 2 * n + 1, arrows);
}

ModuleRep jblock(const FieldPtr& f, unsigned i) {
    if (i < 1 || i > f->p()) throw std::invalid_argument("JBLOCK needs 1 <= i <= p");
    std::vector<Arrow> arrows;
    for (unsigned k = 0; k + 1 < i; ++k) arrows.emplace_back(0, k, k + 1, 1);
    return from_arrows(f, 1, i, arrows);
}

ModuleRep random_module(const FieldPtr& f, std::size_t r, std::size_t dim, std::uint64_t seed) {
    const Field& F = *f;
    std::uint32_t p = F.p();
    std::mt19937_64 rng(seed);
    auto rnd = [&] { return Elem(rng() % F.q()); };

    Matrix j(f, dim, dim);
    for (std::size_t s = 0; s < dim;) {
        std::size_t b = 1 + rng() % std::min<std::size_t>(p, dim - s);
        for (std::size_t k = 0; k + 1 < b; ++k) j(s + k, s + k + 1) = 1;
        s += b;
    }
    Matrix u = Matrix::identity(f, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t c = a + 1; c < dim; ++c) u(a, c) = rnd();
    Matrix n = u * j * *inverse(u);

    // Strictly upper triangular part of the centraliser of n.
    Matrix id = Matrix::identity(f, dim);
    Matrix eq = kron(id, transpose(n)) - kron(n, id);
    std::vector<Matrix> rows{eq};
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t c = 0; c <= a; ++c) {
            Matrix e(f, 1, dim * dim);
            e(0, a * dim + c) = 1;
            rows.push_back(e);
        }
    Subspace cen = kernel(vstack(rows));
    Matrix x;
    for (int attempt = 0; attempt < 8 && cen.dim() > 0; ++attempt) {
        Matrix y(f, dim, dim);
        for (std::size_t s = 0; s < cen.dim(); ++s) {
            Elem c = rnd();
            if (!c) continue;
            for (std::size_t idx = 0; idx < dim * dim; ++idx)
                if (cen.basis(idx, s)) y.data[idx] = F.add(y.data[idx], F.mul(c, cen.basis(idx, s)));
        }
        if (power(y, p).is_zero()) {
            x = y;
            break;
        }
    }
    if (!x.field) x = n * n;

    std::vector<Matrix> npow{id}, xpow{id};
    for (std::uint32_t k = 1; k < 3; ++k) {
        npow.push_back(npow.back() * n);
        xpow.push_back(xpow.back() * x);
    }
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < r; ++i) {
        Matrix g(f, dim, dim);
        for (unsigned a = 0; a <= 2; ++a)
            for (unsigned b = 0; a + b <= 2; ++b) {
                if (a + b == 0) continue;
                g = g + scale(npow[a] * xpow[b], rnd());
            }
        gens.push_back(std::move(g));
    }
    return make_module(f, std::move(gens));
}

std::vector<std::string> example_names() { return {"TRUNCATED", "KE_MOD_I2", "W", "V", "JBLOCK", "RANDOM"}; }

ModuleRep build_example(const std::string& name, const std::map<std::string, std::int64_t>& params) {
    auto get = [&](const char* key, std::int64_t def) {
        auto it = params.find(key);
        return it == params.end() ? def : it->second;
    };
    auto need = [&](const char* key) {
        auto it = params.find(key);
        if (it == params.end()) throw std::invalid_argument(name + " needs parameter '" + key + "'");
        if (it->second < 0) throw std::invalid_argument(std::string("parameter '") + key + "' must be nonnegative");
        return it->second;
    };
    FieldPtr f = make_field(std::uint64_t(get("p", 5)), 1);
    if (name == "TRUNCATED") return truncated(f, std::size_t(need("r")), unsigned(need("m")), unsigned(need("n")));
    if (name == "KE_MOD_I2") return ke_mod_i2(f, std::size_t(need("r")));
    if (name == "W") return w_module(f);
    if (name == "V") return v_module(f, unsigned(need("n")));
    if (name == "JBLOCK") return jblock(f, unsigned(need("i")));
    if (name == "RANDOM")
        return random_module(f, std::size_t(get("r", 2)), std::size_t(need("dim")), std::uint64_t(get("seed", 0)));
    throw std::invalid_argument("unknown example '" + name + "'");
}

}  // namespace cjt
