#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "cjt/constant.hpp"
#include "cjt/zoo.hpp"
#include "oracle.hpp"

using namespace cjt;

namespace {

std::vector<ModuleRep> rank2_zoo(std::uint32_t p) {
    auto f = make_field(p, 1);
    std::vector<ModuleRep> z{ke_mod_i2(f, 2), v_module(f, 1), v_module(f, 2), v_module(f, 3), truncated(f, 2, 1, 3),
                             truncated(f, 2, 2, 4), random_module(f, 2, 7, p), trivial_module(f, 2, 2)};
    if (p >= 5) z.push_back(w_module(f));
    return z;
}

std::vector<std::string> labels(const std::vector<Witness>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.point.to_string());
    return out;
}

std::vector<std::string> labels(const std::vector<PiPoint>& ps) {
    std::vector<std::string> out;
    for (const auto& q : ps) out.push_back(q.to_string());
    return out;
}

// k[t_2]/t_2^p with t_1 acting by zero: projective exactly where lambda_2 != 0.
ModuleRep half_supported(std::uint32_t p) {
    auto f = make_field(p, 1);
    ModuleRep j = jblock(f, p);
    return make_module(f, {Matrix(f, p, p), j.gens[0]});
}

}  // namespace

TEST_SUITE("cjt") {
    TEST_CASE("points") {
        auto f = make_field(3, 1);
        CHECK(make_point(f, {1, 0}).to_string() == "[1:0]");
        CHECK_THROWS(make_point(f, {0, 0}));
        CHECK_THROWS(make_point(f, {1, 0}, {{{1, 0}, 1}}));  // tail of degree one
        CHECK_THROWS(make_point(f, {1, 0}, {{{3, 0}, 1}}));  // exponent >= p
        CHECK_NOTHROW(make_point(f, {1, 0}, {{{1, 1}, 2}}));
        for (auto [p, e, r] : {std::tuple{2u, 1u, 2u}, {3u, 1u, 3u}, {3u, 2u, 2u}, {5u, 1u, 2u}, {2u, 3u, 3u}}) {
            auto F = make_field(p, e);
            auto pts = projective_points(F, r);
            std::uint64_t q = F->q(), want = 0, pw = 1;
            for (unsigned i = 0; i < r; ++i) {
                want += pw;
                pw *= q;
            }
            REQUIRE(pts.size() == want);
            for (const auto& x : pts) {
                auto lead = std::find_if(x.linear.begin(), x.linear.end(), [](Elem c) { return c != 0; });
                REQUIRE(*lead == 1);
            }
            REQUIRE(projective_points(F, r, true).size() <= pts.size());
        }
        // Frobenius orbits over GF(9) on P^1: 4 rational points and 3 orbits of size 2
        CHECK(projective_points(make_field(3, 2), 2, true).size() == 7);
    }

    TEST_CASE("evaluate examples") {
        auto f = make_field(7, 1);
        ModuleRep w = w_module(f);
        CHECK(evaluate(w, make_point(f, {1, 0})) == w.gens[0]);
        CHECK(jordan_at(w, make_point(f, {1, 1})) == parse_pretty(7, "4[3] + 1[1]"));
        CHECK(jordan_at(w, make_point(f, {1, 0})) == parse_pretty(7, "3[3] + 2[2]"));
        ModuleRep e = ke_mod_i2(make_field(5, 1), 3);
        for (unsigned ext : {1u, 2u})
            for (const auto& q : projective_points(make_field(5, ext), 3))
                REQUIRE(jordan_at(e, q) == parse_pretty(5, "1[2] + 2[1]"));
        CHECK(jordan_at(trivial_module(f, 2, 4), make_point(f, {2, 3})) == parse_pretty(7, "4[1]"));
        ModuleRep v = v_module(make_field(5, 1), 3);
        for (const auto& q : projective_points(make_field(5, 1), 2)) CHECK(jordan_at(v, q) == parse_pretty(5, "3[2] + 1[1]"));
        CHECK_THROWS(evaluate(w, make_point(make_field(5, 1), {1, 0})));
    }

    TEST_CASE("evaluation matches the oracle at rational points") {
        for (std::uint32_t p : {3u, 5u})
            for (const auto& m : rank2_zoo(p))
                for (const auto& q : projective_points(make_field(p, 1), 2)) {
                    std::vector<oracle::i64> l(q.linear.begin(), q.linear.end());
                    REQUIRE(jordan_at(m, q).counts == oracle::jordan_counts(oracle::lin(m.gens, l, p), p));
                }
    }

    TEST_CASE("tails act by monomials in the generators") {
        auto f = make_field(5, 1);
        ModuleRep w = w_module(f);
        auto q = make_point(f, {1, 2}, {{{1, 1}, 3}});
        Matrix want = w.gens[0] + scale(w.gens[1], 2) + scale(w.gens[0] * w.gens[1], 3);
        CHECK(evaluate(w, q) == want);
    }

    TEST_CASE("generic type examples") {
        auto f7 = make_field(7, 1), f5 = make_field(5, 1);
        CHECK(generic_type(trivial_module(f7, 2, 3)) == parse_pretty(7, "3[1]"));
        CHECK(generic_type(w_module(f7)) == parse_pretty(7, "4[3] + 1[1]"));
        CHECK(generic_type(w_module(f5)) == parse_pretty(5, "3[3] + 2[2]"));
        CHECK(generic_type(jblock(f5, 3)) == parse_pretty(5, "1[3]"));
    }

    TEST_CASE("generic type for three generators is the maximum over a large grid") {
        for (std::uint32_t p : {2u, 3u}) {
            auto f = make_field(p, 1);
            for (const auto& m : {ke_mod_i2(f, 3), truncated(f, 3, 1, 3), random_module(f, 3, 6, 5)}) {
                JordanType g = generic_type(m);
                // sweep P^2(GF(p^3)) and collect the maximal type seen
                std::optional<JordanType> best;
                for (const auto& q : projective_points(make_field(p, 3), 3)) {
                    JordanType t = jordan_at(m, q);
                    REQUIRE(dominates(g, t));
                    if (!best || dominates(t, *best)) best = t;
                }
                REQUIRE(best == g);
            }
        }
    }

    TEST_CASE("check_constant examples") {
        auto f5 = make_field(5, 1), f7 = make_field(7, 1);
        auto w5 = check_constant(w_module(f5));
        CHECK(w5.verdict == Verdict::CONSTANT_EXACT);
        CHECK(w5.method == Method::RANK2_GCD);
        CHECK(w5.type == parse_pretty(5, "3[3] + 2[2]"));

        auto w7 = check_constant(w_module(f7));
        CHECK(w7.verdict == Verdict::NOT_CONSTANT);
        CHECK(w7.type == parse_pretty(7, "4[3] + 1[1]"));
        CHECK(labels(w7.witnesses) == std::vector<std::string>{"[0:1]", "[1:0]"});
        for (const auto& w : w7.witnesses) CHECK(w.type == parse_pretty(7, "3[3] + 2[2]"));

        auto t7 = check_constant(truncated(f7, 2, 5, 8));
        CHECK(t7.verdict == Verdict::CONSTANT_EXACT);
        CHECK(t7.type == parse_pretty(7, "5[3] + 2[2]"));

        auto r1 = check_constant(jblock(f5, 3));
        CHECK(r1.verdict == Verdict::CONSTANT_EXACT);
        CHECK(r1.type == parse_pretty(5, "1[3]"));

        CHECK_THROWS(check_constant(base_change(w_module(f5), make_field(5, 2))));
    }

    TEST_CASE("not-constant reports carry two observed types") {
        for (std::uint32_t p : {3u, 5u, 7u})
            for (const auto& m : rank2_zoo(p))
                for (bool exact : {true, false}) {
                    CheckOptions opt;
                    opt.exact = exact;
                    auto rep = check_constant(m, opt);
                    if (rep.verdict != Verdict::NOT_CONSTANT) continue;
                    REQUIRE_FALSE(rep.witnesses.empty());
                    for (const auto& w : rep.witnesses) REQUIRE(w.type != rep.type);
                }
    }

    TEST_CASE("gamma locus and support") {
        auto f7 = make_field(7, 1);
        auto g = gamma_locus(w_module(f7), 1);
        CHECK(g.generic == parse_pretty(7, "4[3] + 1[1]"));
        CHECK(labels(g.points) == std::vector<std::string>{"[0:1]", "[1:0]"});
        CHECK(gamma_locus(w_module(make_field(5, 1)), 2).points.empty());
        CHECK(gamma_locus(free_module(f7, 2, 1), 2).points.empty());
        CHECK(pi_support(free_module(f7, 2, 1), 2).empty());
        CHECK(pi_support(trivial_module(f7, 2), 1).size() == 8);
        CHECK(labels(pi_support(half_supported(5), 1)) == std::vector<std::string>{"[1:0]"});
        CHECK(labels(pi_support(half_supported(5), 2)) == std::vector<std::string>{"[(1,0):(0,0)]"});
    }

    TEST_CASE("semicontinuity on the zoo") {
        for (std::uint32_t p : {3u, 5u, 7u})
            for (const auto& m : rank2_zoo(p)) {
                JordanType g = generic_type(m);
                for (unsigned e = 1; e <= 2; ++e)
                    for (const auto& w : sweep_types(m, e, false)) REQUIRE(dominates(g, w.type));
            }
    }

    TEST_CASE("constant verdict iff empty gamma locus") {
        for (std::uint32_t p : {3u, 5u, 7u})
            for (const auto& m : rank2_zoo(p)) {
                auto rep = check_constant(m);
                bool constant = rep.verdict != Verdict::NOT_CONSTANT;
                bool empty = gamma_locus(m, 1).points.empty() && gamma_locus(m, 2).points.empty();
                // the exact decision sees the closure; rational sweeps see only up to e = 2
                if (constant) REQUIRE(empty);
                if (!empty) REQUIRE_FALSE(constant);
                CheckOptions sweep;
                sweep.exact = false;
                REQUIRE((check_constant(m, sweep).verdict != Verdict::NOT_CONSTANT) == empty);
            }
    }

    TEST_CASE("exact and sweep verdicts agree up to e = 3") {
        for (std::uint32_t p : {3u, 5u})
            for (const auto& m : rank2_zoo(p)) {
                CheckOptions ex, sw;
                sw.exact = false;
                sw.max_e = 3;
                auto a = check_constant(m, ex), b = check_constant(m, sw);
                REQUIRE((a.verdict == Verdict::NOT_CONSTANT) == (b.verdict == Verdict::NOT_CONSTANT));
                if (a.verdict != Verdict::NOT_CONSTANT) REQUIRE(a.type == b.type);
            }
    }

    TEST_CASE("summand closure") {
        for (std::uint32_t p : {3u, 5u}) {
            auto z = rank2_zoo(p);
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::size_t j = i; j < z.size(); ++j) {
                    ModuleRep s = direct_sum({z[i], z[j]});
                    if (check_constant(s).verdict == Verdict::NOT_CONSTANT) continue;
                    REQUIRE(check_constant(z[i]).verdict != Verdict::NOT_CONSTANT);
                    REQUIRE(check_constant(z[j]).verdict != Verdict::NOT_CONSTANT);
                }
        }
    }

    TEST_CASE("tensor closure and the Gamma identity") {
        for (std::uint32_t p : {3u, 5u}) {
            auto z = rank2_zoo(p);
            z.resize(6);
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::size_t j = i; j < z.size(); ++j) {
                    ModuleRep t = tensor(z[i], z[j]);
                    auto a = check_constant(z[i]), b = check_constant(z[j]);
                    if (a.verdict != Verdict::NOT_CONSTANT && b.verdict != Verdict::NOT_CONSTANT) {
                        auto c = check_constant(t);
                        REQUIRE(c.verdict != Verdict::NOT_CONSTANT);
                        REQUIRE(c.type == tensor_type(a.type, b.type));
                    }
                    for (unsigned e = 1; e <= 2; ++e) {
                        auto gm = labels(gamma_locus(z[i], e).points), gn = labels(gamma_locus(z[j], e).points);
                        auto sm = labels(pi_support(z[i], e)), sn = labels(pi_support(z[j], e));
                        for (auto* v : {&gm, &gn, &sm, &sn}) std::sort(v->begin(), v->end());
                        std::vector<std::string> uni, sup, want;
                        std::set_union(gm.begin(), gm.end(), gn.begin(), gn.end(), std::back_inserter(uni));
                        std::set_intersection(sm.begin(), sm.end(), sn.begin(), sn.end(), std::back_inserter(sup));
                        std::set_intersection(uni.begin(), uni.end(), sup.begin(), sup.end(), std::back_inserter(want));
                        auto got = labels(gamma_locus(t, e).points);
                        std::sort(got.begin(), got.end());
                        REQUIRE(got == want);
                    }
                }
        }
    }

    TEST_CASE("tails never change the type at points of maximal type") {
        auto f = make_field(7, 1);
        ModuleRep w = w_module(f);
        JordanType g = generic_type(w);
        std::mt19937_64 rng(41);
        int changed_inside = 0;
        for (const auto& q : projective_points(f, 2)) {
            bool maximal = jordan_at(w, q) == g;
            for (int s = 0; s < 50; ++s) {
                std::vector<PiPoint::Term> tail;
                for (std::uint32_t a = 0; a < 7; ++a)
                    for (std::uint32_t b = 0; b < 7; ++b)
                        if (a + b >= 2 && a + b <= 3 && rng() % 3 == 0) tail.push_back({{a, b}, Elem(rng() % 7)});
                JordanType t = jordan_at(w, make_point(f, q.linear, tail));
                if (maximal) REQUIRE(t == g);
                else if (t != jordan_at(w, q)) ++changed_inside;
            }
        }
        MESSAGE("tails changed the type " << changed_inside << " times inside the locus");
    }

    TEST_CASE("sweeps do not depend on the worker count") {
        ModuleRep w = w_module(make_field(7, 1));
        auto a = sweep_types(w, 2, false, 1), b = sweep_types(w, 2, false, 3);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].point == b[i].point);
            REQUIRE(a[i].type == b[i].type);
        }
    }
}
