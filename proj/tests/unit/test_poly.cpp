#include <doctest.h>

#include <functional>
#include <random>

#include "cjt/pipoint.hpp"
#include "cjt/polymat.hpp"
#include "oracle.hpp"

using namespace cjt;

namespace {

HomPoly var(std::uint32_t p, std::uint32_t n, std::uint32_t i) { return HomPoly::variable(p, n, i); }

PolyMatrix grid(std::uint32_t p, std::uint32_t n, const std::vector<std::vector<HomPoly>>& rows) {
    PolyMatrix m(p, n, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

HomPoly random_form(std::uint32_t p, std::uint32_t n, unsigned deg, std::mt19937_64& rng) {
    std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> t;
    // all monomials of degree deg in n variables
    std::vector<std::uint32_t> e(n, 0);
    std::function<void(std::uint32_t, unsigned)> rec = [&](std::uint32_t i, unsigned left) {
        if (i + 1 == n) {
            e[i] = left;
            t.push_back({e, std::int64_t(rng() % p)});
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, deg);
    return HomPoly::from_terms(p, n, t);
}

std::vector<std::vector<Elem>> prime_points(std::uint32_t p, std::size_t n) {
    std::vector<std::vector<Elem>> out;
    for (const auto& q : projective_points(make_field(p, 1), n)) out.push_back(q.linear);
    return out;
}

}  // namespace

TEST_SUITE("polymat") {
    TEST_CASE("homogeneity is enforced") {
        CHECK_THROWS(HomPoly::from_terms(3, 2, {{{1, 0}, 1}, {{2, 0}, 1}}));
        HomPoly h = HomPoly::from_terms(3, 2, {{{1, 0}, 4}, {{1, 0}, 2}});
        CHECK(h.is_zero());  // 4 + 2 = 0 mod 3
    }

    TEST_CASE("generic rank examples") {
        auto l = var(3, 2, 0), m = var(3, 2, 1);
        CHECK(generic_rank(grid(3, 2, {{l, m}, {m, l}})) == 2);
        CHECK(generic_rank(PolyMatrix(3, 2, 3, 3)) == 0);
        CHECK(generic_rank(grid(3, 2, {{l}, {m}})) == 1);
        CHECK(generic_rank(grid(3, 2, {{l, m}, {l, m}})) == 1);
    }

    TEST_CASE("determinant agrees with evaluation") {
        std::mt19937_64 rng(3);
        for (std::uint32_t p : {3u, 5u, 7u}) {
            auto F = make_field(p, 1);
            for (int t = 0; t < 10; ++t) {
                std::size_t n = 1 + rng() % 4;
                PolyMatrix m(p, 3, n, n);
                for (auto& x : m.entries) x = random_form(p, 3, 1, rng);
                HomPoly d = determinant(m);
                for (int s = 0; s < 10; ++s) {
                    std::vector<Elem> pt{Elem(rng() % p), Elem(rng() % p), Elem(rng() % p)};
                    auto ev = oracle::from(evaluate(m, F, pt));
                    // det is zero exactly when the evaluated matrix is singular
                    REQUIRE((evaluate(d, *F, pt) == 0) == (oracle::rank(ev, p) < n));
                }
            }
        }
    }

    TEST_CASE("minor gcd examples") {
        auto l = var(3, 2, 0), m = var(3, 2, 1), z = HomPoly(3, 2);
        CHECK(bivariate_minor_gcd(grid(3, 2, {{l, z}, {z, m}}), 2) == l * m);
        HomPoly expect = HomPoly::from_terms(3, 2, {{{2, 0}, 1}, {{0, 2}, -1}});
        CHECK(bivariate_minor_gcd(grid(3, 2, {{l, m}, {m, l}}), 2) == expect);
        CHECK(bivariate_minor_gcd(grid(3, 2, {{l * l, m * m}}), 1).degree() == 0);
        CHECK_THROWS(bivariate_minor_gcd(grid(3, 3, {{var(3, 3, 0)}}), 1));
    }

    TEST_CASE("minor gcd divides every minor and detects common zeros") {
        std::mt19937_64 rng(4);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            for (int t = 0; t < 25; ++t) {
                std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
                PolyMatrix m(p, 2, r, c);
                // a shared linear factor in some trials
                HomPoly shared = t % 3 == 0 ? random_form(p, 2, 1, rng) : HomPoly::constant(p, 2, 1);
                // one degree per column keeps the minors homogeneous
                for (std::size_t j = 0; j < c; ++j) {
                    unsigned deg = 1 + unsigned(rng() % 2);
                    for (std::size_t i = 0; i < r; ++i) m(i, j) = random_form(p, 2, deg, rng) * shared;
                }
                std::size_t k = generic_rank(m);
                if (k == 0) continue;
                HomPoly g = bivariate_minor_gcd(m, k);
                auto all = minors(m, k);
                for (const auto& x : all)
                    if (!x.is_zero()) REQUIRE_NOTHROW(exact_div(x, g));
                // rational common zeros of the minors are exactly rational zeros of g
                auto F = make_field(p, 1);
                for (const auto& pt : prime_points(p, 2)) {
                    bool common = true;
                    for (const auto& x : all) common = common && evaluate(x, *F, pt) == 0;
                    REQUIRE(common == (evaluate(g, *F, pt) == 0));
                }
                if (g.degree() == 0) {
                    auto z = common_zero_search(m, k, 3);
                    REQUIRE_FALSE(z.found);
                }
            }
        }
    }

    TEST_CASE("bivariate rank and gcd bundle") {
        auto l = var(5, 2, 0), m = var(5, 2, 1);
        auto d = bivariate_rank_and_gcd(grid(5, 2, {{l, m}, {HomPoly(5, 2), l}}));
        CHECK(d.rank == 2);
        CHECK(d.gcd == l * l);
    }

    TEST_CASE("common zero examples") {
        auto x1 = var(5, 3, 0), x2 = var(5, 3, 1), x3 = var(5, 3, 2);
        auto z = common_zero_search(grid(5, 3, {{x1, x2}, {x2, x3}, {x3, x1}}), 2, 4);
        REQUIRE(z.found);
        CHECK(z.field->q() == 5);
        CHECK(z.point == std::vector<Elem>{1, 1, 1});

        auto y1 = var(3, 3, 0), y2 = var(3, 3, 1), zero = HomPoly(3, 3);
        auto w = common_zero_search(grid(3, 3, {{y1, zero}, {zero, y2}, {zero, zero}}), 2, 2);
        REQUIRE(w.found);
        CHECK(w.point == std::vector<Elem>{0, 0, 1});

        auto u = var(2, 2, 0);
        auto s = common_zero_search(grid(2, 2, {{u * u}}), 1, 1);
        REQUIRE(s.found);
        CHECK(s.point == std::vector<Elem>{0, 1});

        CHECK_THROWS(common_zero_search(grid(2, 2, {{u}}), 1, 0));
    }

    TEST_CASE("common zero search reports exhausted extensions") {
        // x^2 + y^2 over GF(3) has no rational zero but one over GF(9)
        HomPoly f = HomPoly::from_terms(3, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
        auto z = common_zero_search(grid(3, 2, {{f}}), 1, 1);
        CHECK_FALSE(z.found);
        CHECK(z.exhausted == std::vector<unsigned>{1});
        auto w = common_zero_search(grid(3, 2, {{f}}), 1, 2);
        REQUIRE(w.found);
        CHECK(w.field->q() == 9);
        CHECK(evaluate(f, *w.field, w.point) == 0);
    }

    TEST_CASE("witnesses make every minor vanish") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 10; ++t) {
            PolyMatrix m(5, 3, 3, 2);
            for (std::size_t j = 0; j < 2; ++j) {
                unsigned deg = 1 + unsigned(rng() % 2);
                for (std::size_t i = 0; i < 3; ++i) m(i, j) = random_form(5, 3, deg, rng);
            }
            auto z = common_zero_search(m, 2, 8);
            REQUIRE(z.found);
            REQUIRE(rank(evaluate(m, z.field, z.point)) < 2);
            // normalised: first nonzero coordinate is 1
            std::size_t lead = 0;
            while (z.point[lead] == 0) ++lead;
            REQUIRE(z.point[lead] == 1);
        }
    }

    TEST_CASE("generic rank dominates every specialisation") {
        std::mt19937_64 rng(6);
        for (std::uint32_t p : {2u, 3u}) {
            for (int t = 0; t < 8; ++t) {
                PolyMatrix m(p, 2, 3, 3);
                for (auto& x : m.entries) x = random_form(p, 2, 1, rng);
                m = m * m;
                std::size_t g = generic_rank(m);
                std::size_t best = 0;
                for (unsigned e = 1; e <= 3; ++e) {
                    auto F = make_field(p, e);
                    for (const auto& q : projective_points(F, 2)) {
                        std::size_t rk = rank(evaluate(m, F, q.linear));
                        REQUIRE(rk <= g);
                        best = std::max(best, rk);
                    }
                }
                // some nonzero g x g minor has degree 2g <= 6, while P^1(GF(p^3)) has at least 9 points
                REQUIRE(best == g);
            }
        }
    }

    TEST_CASE("column degree profile") {
        auto x1 = var(5, 3, 0), x2 = var(5, 3, 1);
        CHECK(grid(5, 3, {{x1, x2 * x2}, {scale(x2, 3), x1 * x2}}).column_degrees() == std::vector<int>{1, 2});
        CHECK(grid(5, 3, {{x1, HomPoly(5, 3)}}).column_degrees() == std::vector<int>{1, -1});
        CHECK_THROWS(grid(5, 3, {{x1}, {x1 * x2}}).column_degrees());
    }
}
