#include <doctest.h>

#include <random>

#include "cjt/module.hpp"
#include "cjt/pipoint.hpp"
#include "cjt/syzygy.hpp"
#include "cjt/zoo.hpp"
#include "oracle.hpp"

using namespace cjt;

namespace {

ModuleRep cyclic(std::uint32_t p, std::uint32_t i, Convention c = Convention::PRIMITIVE) {
    ModuleRep m = jblock(make_field(p, 1), i);
    m.convention = c;
    return m;
}

JordanType type_of(const ModuleRep& m, const std::vector<Elem>& lam) {
    return jordan_at(m, make_point(make_field(m.p(), 1), lam));
}

std::vector<std::vector<Elem>> rational_points(std::uint32_t p, std::size_t r) {
    std::vector<std::vector<Elem>> out;
    for (const auto& q : projective_points(make_field(p, 1), r)) out.push_back(q.linear);
    return out;
}

// Pointwise types of B equal those of M plus N.
bool sums_pointwise(const ModuleRep& b, const ModuleRep& m, const ModuleRep& n, unsigned max_e) {
    for (unsigned e = 1; e <= max_e; ++e)
        for (const auto& q : projective_points(make_field(b.p(), e), b.r))
            if (jordan_at(b, q) != jordan_at(m, q) + jordan_at(n, q)) return false;
    return true;
}

}  // namespace

TEST_SUITE("modrep") {
    TEST_CASE("validate examples") {
        auto f = make_field(5, 1);
        CHECK(validate(trivial_module(f, 2, 4)).ok);
        CHECK(validate(jblock(f, 5)).ok);
        Matrix a(f, 3, 3), b(f, 3, 3);
        a(1, 0) = 1;  // J_2 + 0
        b(2, 1) = 1;
        ModuleRep m;
        m.field = f;
        m.r = 2;
        m.dim = 3;
        m.gens = {a, b};
        auto rep = validate(m);
        CHECK_FALSE(rep.ok);
        CHECK(rep.first == 0);
        CHECK(rep.second == 1);
        CHECK_THROWS_AS(make_module(f, {a, b}), std::invalid_argument);
        CHECK_THROWS_AS(make_module(f, {Matrix::identity(f, 2)}), std::invalid_argument);
        CHECK_THROWS_AS(make_module(f, {Matrix(f, 2, 3)}), std::invalid_argument);
    }

    TEST_CASE("tensor examples") {
        CHECK(type_of(tensor(cyclic(5, 2), cyclic(5, 2)), {1}) == parse_pretty(5, "1[3] + 1[1]"));
        CHECK(type_of(tensor(cyclic(5, 4), cyclic(5, 4)), {1}) == parse_pretty(5, "3[5] + 1[1]"));
        auto f = make_field(5, 1);
        ModuleRep w = w_module(f), k = trivial_module(f, 2);
        ModuleRep kw = tensor(k, w);
        CHECK(kw.gens == w.gens);
        CHECK_THROWS(tensor(w, trivial_module(make_field(7, 1), 2)));
        CHECK_THROWS(tensor(cyclic(5, 2), cyclic(5, 2, Convention::GROUP)));
    }

    TEST_CASE("tensor of cyclic modules under both conventions") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            for (std::uint32_t i = 1; i <= p; ++i)
                for (std::uint32_t j = 1; j <= p; ++j) {
                    ModuleRep a = tensor(cyclic(p, i), cyclic(p, j));
                    ModuleRep g = tensor(cyclic(p, i, Convention::GROUP), cyclic(p, j, Convention::GROUP));
                    REQUIRE(validate(a).ok);
                    REQUIRE(validate(g).ok);
                    auto ta = from_nilpotent(a.gens[0], p), tg = from_nilpotent(g.gens[0], p);
                    REQUIRE(ta == tg);
                    REQUIRE(ta.counts == oracle::jordan_counts(oracle::tensor_action(i, j, p, false), p));
                }
    }

    TEST_CASE("pointwise tensor identity in the primitive convention") {
        auto f = make_field(5, 1);
        std::vector<ModuleRep> mods{w_module(f), v_module(f, 2), ke_mod_i2(f, 2), truncated(f, 2, 1, 3)};
        for (std::size_t a = 0; a < mods.size(); ++a)
            for (std::size_t b = a; b < mods.size(); ++b) {
                ModuleRep t = tensor(mods[a], mods[b]);
                for (const auto& lam : rational_points(5, 2)) {
                    std::vector<oracle::i64> l(lam.begin(), lam.end());
                    auto x = oracle::lin(mods[a].gens, l, 5), y = oracle::lin(mods[b].gens, l, 5);
                    auto ks = oracle::add(oracle::kron(x, oracle::identity(y.size()), 5),
                                          oracle::kron(oracle::identity(x.size()), y, 5), 5);
                    REQUIRE(oracle::from(evaluate(t, make_point(f, lam))) == ks);
                    REQUIRE(type_of(t, lam) == tensor_type(type_of(mods[a], lam), type_of(mods[b], lam)));
                }
            }
    }

    TEST_CASE("dual examples") {
        auto f = make_field(5, 1);
        ModuleRep k = trivial_module(f, 2, 3);
        CHECK(dual(k).gens == k.gens);
        for (std::uint32_t i = 1; i <= 5; ++i) {
            CHECK(type_of(dual(cyclic(5, i)), {1}) == JordanType::blocks(5, {{i, 1}}));
            CHECK(type_of(dual(cyclic(5, i, Convention::GROUP)), {1}) == JordanType::blocks(5, {{i, 1}}));
        }
        ModuleRep d = dual(ke_mod_i2(f, 2));
        for (const auto& lam : rational_points(5, 2)) CHECK(type_of(d, lam) == parse_pretty(5, "1[2] + 1[1]"));
    }

    TEST_CASE("double dual and dual type invariance") {
        for (std::uint32_t p : {3u, 5u}) {
            auto f = make_field(p, 1);
            std::vector<ModuleRep> mods{v_module(f, 2), ke_mod_i2(f, 3), truncated(f, 2, 1, 4), random_module(f, 2, 8, p)};
            for (auto m : mods) {
                CHECK(dual(dual(m)).gens == m.gens);
                for (const auto& lam : rational_points(p, m.r)) CHECK(type_of(dual(m), lam) == type_of(m, lam));
                m.convention = Convention::GROUP;
                ModuleRep dg = dual(m);
                CHECK(validate(dg).ok);
                CHECK(dual(dg).gens == m.gens);
            }
        }
    }

    TEST_CASE("group convention dual keeps maximal types") {
        auto f = make_field(5, 1);
        for (ModuleRep m : {w_module(f), v_module(f, 3), truncated(f, 2, 1, 3)}) {
            m.convention = Convention::GROUP;
            ModuleRep d = dual(m);
            std::vector<JordanType> types;
            for (const auto& lam : rational_points(5, 2)) types.push_back(type_of(m, lam));
            JordanType best = types[0];
            for (const auto& t : types)
                if (dominates(t, best)) best = t;
            auto pts = rational_points(5, 2);
            for (std::size_t i = 0; i < pts.size(); ++i)
                if (types[i] == best) CHECK(type_of(d, pts[i]) == best);
        }
    }

    TEST_CASE("hom examples") {
        auto f = make_field(5, 1);
        ModuleRep w = w_module(f), k = trivial_module(f, 2);
        CHECK(hom(k, w).gens == w.gens);
        CHECK(hom(w, k).gens == dual(w).gens);
        CHECK(type_of(hom(cyclic(5, 2), cyclic(5, 2)), {1}) == parse_pretty(5, "1[3] + 1[1]"));
    }

    TEST_CASE("hom space examples") {
        auto f = make_field(3, 1);
        CHECK(hom_space(trivial_module(f, 2), trivial_module(f, 2)).size() == 1);
        CHECK(hom_space(free_module(f, 2, 1), free_module(f, 2, 1)).size() == 9);
        auto f5 = make_field(5, 1);
        CHECK(hom_space(ke_mod_i2(f5, 2), trivial_module(f5, 2)).size() == 1);
    }

    TEST_CASE("hom space agrees with the direct solve") {
        std::mt19937_64 rng(31);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto f = make_field(p, 1);
            std::vector<ModuleRep> mods{trivial_module(f, 2), ke_mod_i2(f, 2), v_module(f, 2), truncated(f, 2, 1, 3),
                                        random_module(f, 2, 6, rng()), omega_n(trivial_module(f, 2), 1)};
            for (const auto& a : mods)
                for (const auto& b : mods) {
                    auto h = hom_space(a, b), d = hom_space_direct(a, b);
                    REQUIRE(h.size() == d.size());
                    for (const auto& x : h) REQUIRE(is_intertwiner(a, b, x));
                    if (!h.empty()) {
                        std::vector<Matrix> flat;
                        for (const auto& x : h) {
                            Matrix v(f, 1, x.data.size());
                            v.data = x.data;
                            flat.push_back(v);
                        }
                        REQUIRE(rank(vstack(flat)) == h.size());
                    }
                }
        }
    }

    TEST_CASE("radical and socle") {
        auto f3 = make_field(3, 1);
        auto k = radical_socle(trivial_module(f3, 2, 4));
        CHECK(k.radical.dim() == 0);
        CHECK(k.socle.dim() == 4);
        auto fr = radical_socle(free_module(f3, 2, 1));
        CHECK(fr.radical.dim() == 8);
        CHECK(fr.socle.dim() == 1);
        auto e = radical_socle(ke_mod_i2(make_field(5, 1), 3));
        CHECK(e.radical.dim() == 3);
        CHECK(e.socle.dim() == 3);
        CHECK(generator_indices(free_module(f3, 2, 2)).size() == 2);
    }

    TEST_CASE("split free examples") {
        auto f = make_field(3, 1);
        auto a = split_free(free_module(f, 2, 2));
        CHECK(a.free_rank == 2);
        CHECK(a.core.dim == 0);
        auto b = split_free(direct_sum({trivial_module(f, 2), free_module(f, 2, 1)}));
        CHECK(b.free_rank == 1);
        CHECK(b.core.dim == 1);
        CHECK(b.core.gens[0].is_zero());

        // Omega^1(k), r = 2, p = 5, restricted to t_1 and viewed over k[t]/t^5
        auto f5 = make_field(5, 1);
        ModuleRep o = *omega_k(f5, 2, 1);
        ModuleRep c = make_module(f5, {o.gens[0]});
        auto s = split_free(c);
        CHECK(s.free_rank == 4);
        CHECK(s.core.dim == 4);
        CHECK(from_nilpotent(s.core.gens[0], 5) == parse_pretty(5, "1[4]"));
    }

    TEST_CASE("split free accounting") {
        std::mt19937_64 rng(32);
        for (std::uint32_t p : {2u, 3u}) {
            auto f = make_field(p, 1);
            for (int t = 0; t < 6; ++t) {
                std::vector<ModuleRep> parts{random_module(f, 2, 2 + rng() % 5, rng())};
                std::size_t frees = rng() % 3;
                for (std::size_t i = 0; i < frees; ++i) parts.push_back(free_module(f, 2, 1));
                ModuleRep m = direct_sum(parts);
                // scramble the basis so the free part is not a coordinate block
                Matrix u(f, m.dim, m.dim);
                std::optional<Matrix> ui;
                do {
                    for (auto& x : u.data) x = Elem(rng() % p);
                    ui = inverse(u);
                } while (!ui);
                for (auto& g : m.gens) g = u * g * *ui;
                auto s = split_free(m);
                REQUIRE(validate(s.core).ok);
                REQUIRE(m.dim == s.free_rank * p * p + s.core.dim);
                REQUIRE(s.free_rank >= frees);
                if (s.core.dim) REQUIRE(socle_element(s.core).is_zero());
                REQUIRE(split_free(s.core).free_rank == 0);
            }
        }
    }

    TEST_CASE("projective cover examples") {
        auto f = make_field(5, 1);
        auto c = projective_cover(trivial_module(f, 2));
        CHECK(c.rank == 1);
        CHECK(c.omega.dim == 24);
        CHECK(projective_cover(free_module(f, 2, 2)).omega.dim == 0);
        CHECK(projective_cover(c.omega).omega.dim == 26);
        CHECK(validate(c.omega).ok);
        CHECK(rank(c.map) == 1);
    }

    TEST_CASE("omega_n examples and dimensions") {
        auto f3 = make_field(3, 1), f5 = make_field(5, 1);
        CHECK(omega_n(trivial_module(f3, 3), 2).dim == 55);
        CHECK(omega_n(trivial_module(f5, 2), 0).dim == 1);
        CHECK(omega_n(trivial_module(f5, 2), -2).dim == 26);
        for (std::uint32_t p : {2u, 3u})
            for (int n = -3; n <= 4; ++n) {
                ModuleRep o = omega_n(trivial_module(make_field(p, 1), 2), n);
                REQUIRE(validate(o).ok);
                REQUIRE(std::int64_t(o.dim) == oracle::omega_dim(p, 2, n));
            }
    }

    TEST_CASE("factoring through projectives") {
        auto f = make_field(3, 1);
        ModuleRep k = trivial_module(f, 2);
        CHECK_FALSE(factors_through_projective(k, k, Matrix::identity(f, 1)));
        ModuleRep fr = free_module(f, 2, 1);
        for (const auto& h : hom_space(fr, k)) CHECK(factors_through_projective(fr, k, h));
        ModuleRep o = omega_n(k, 1);
        auto h = hom_space(o, k);
        REQUIRE(h.size() == 2);
        for (const auto& x : h) CHECK_FALSE(factors_through_projective(o, k, x));
        CHECK(factors_through_projective(o, k, Matrix(f, 1, o.dim)));
    }

    TEST_CASE("extension examples") {
        auto f = make_field(3, 1);
        // split extension
        ModuleRep k2 = trivial_module(f, 2), v = v_module(f, 1);
        ModuleRep ov = projective_cover(v, false).omega;
        auto split = build_extension(k2, v, Matrix(f, 1, ov.dim));
        CHECK(split.middle.dim == 1 + v.dim);
        CHECK(validate(split.middle).ok);
        CHECK(is_intertwiner(k2, split.middle, split.from_m));
        CHECK(is_intertwiner(split.middle, v, split.to_n));
        CHECK(rank(split.from_m) == 1);
        CHECK(rank(split.to_n) == v.dim);
        CHECK((split.to_n * split.from_m).is_zero());
        CHECK(sums_pointwise(split.middle, k2, v, 2));

        // the nonsplit self-extension of k over k[t]/t^3
        ModuleRep k1 = trivial_module(f, 1);
        ModuleRep o1 = projective_cover(k1, false).omega;
        auto h = hom_space(o1, k1);
        REQUIRE(h.size() == 1);
        auto b = build_extension(k1, k1, h[0]);
        CHECK(from_nilpotent(b.middle.gens[0], 3) == parse_pretty(3, "1[2]"));
        CHECK_THROWS(build_extension(k1, k1, Matrix::identity(f, o1.dim)));
    }

    TEST_CASE("isomorphism examples") {
        auto f = make_field(5, 1);
        ModuleRep w = w_module(f);
        auto same = is_isomorphic(w, w);
        CHECK(same.isomorphic);
        CHECK_FALSE(same.inconclusive);
        CHECK_FALSE(is_isomorphic(trivial_module(f, 1), jblock(f, 2)).isomorphic);
        CHECK_FALSE(is_isomorphic(ke_mod_i2(f, 2), dual(ke_mod_i2(f, 2))).isomorphic);

        // conjugated copies are isomorphic and the witness intertwines
        std::mt19937_64 rng(33);
        ModuleRep c = w;
        Matrix u(f, 13, 13);
        std::optional<Matrix> ui;
        do {
            for (auto& x : u.data) x = Elem(rng() % 5);
            ui = inverse(u);
        } while (!ui);
        for (auto& g : c.gens) g = u * g * *ui;
        auto iso = is_isomorphic(w, c, 0);
        REQUIRE(iso.isomorphic);
        CHECK(is_intertwiner(w, c, *iso.witness));
        CHECK(rank(*iso.witness) == 13);
    }

    TEST_CASE("constructors return valid modules") {
        auto f = make_field(3, 1);
        ModuleRep a = v_module(f, 2), b = ke_mod_i2(f, 2);
        for (const auto& m : {tensor(a, b), dual(a), hom(a, b), omega_n(a, 1), omega_n(b, -1), direct_sum({a, b})})
            CHECK(validate(m).ok);
    }

    TEST_CASE("base change and quotients") {
        auto f = make_field(3, 1), g = make_field(3, 2);
        ModuleRep v = v_module(f, 2);
        ModuleRep bv = base_change(v, g);
        CHECK(validate(bv).ok);
        auto rs = radical_socle(v);
        Quotient q = quotient(v, rs.radical);
        CHECK(q.module.dim == 2);
        for (const auto& a : q.module.gens) CHECK(a.is_zero());
        ModuleRep s = submodule(v, rs.socle);
        CHECK(s.dim == rs.socle.dim());
    }
}
