#include <algorithm>
#include <map>
#include <stdexcept>

#include "cjt/constant.hpp"
#include "cjt/parallel.hpp"
#include "cjt/polymat.hpp"

namespace cjt {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::CONSTANT_EXACT: return "CONSTANT_EXACT";
        case Verdict::CONSTANT_ON_TESTED: return "CONSTANT_ON_TESTED";
        case Verdict::NOT_CONSTANT: return "NOT_CONSTANT";
    }
    return "?";
}

const char* to_string(Method m) { return m == Method::RANK2_GCD ? "RANK2_GCD" : "SWEEP"; }

namespace {

void require_prime_field(const ModuleRep& m, const char* what) {
    if (!m.field->is_prime()) throw std::invalid_argument(std::string(what) + " needs a module over the prime field");
}

struct ExactPencil {
    std::vector<std::size_t> ranks;  // j = 1..p-1
    std::vector<HomPoly> gcds;
};

// r = 2: rank and maximal-minor gcd of P^j for P = lambda A_1 + mu A_2.
ExactPencil exact_pencil(const ModuleRep& m) {
    ExactPencil out;
    std::uint32_t p = m.p();
    PolyMatrix base = linear_pencil(m.gens);
    PolyMatrix pj = base;
    for (std::uint32_t j = 1; j < p; ++j) {
        if (!out.ranks.empty() && out.ranks.back() == 0) {
            out.ranks.push_back(0);
            out.gcds.push_back(HomPoly::constant(p, 2, 1));
            continue;
        }
        auto d = bivariate_rank_and_gcd(pj);
        out.ranks.push_back(d.rank);
        out.gcds.push_back(d.rank == 0 ? HomPoly::constant(p, 2, 1) : d.gcd);
        if (j + 1 < p) pj = pj * base;
    }
    return out;
}

JordanType type_from_pencil_ranks(const ModuleRep& m, const std::vector<std::size_t>& r) {
    std::vector<std::uint64_t> ranks{m.dim};
    for (auto x : r) ranks.push_back(x);
    ranks.push_back(0);
    return from_ranks(m.p(), ranks);
}

// Ranks of X^j, j = 1..p-1, at lambda = (1, s_2, .., s_r) for every s in GF(q)^{r-1};
// the maximum equals the generic rank once q exceeds j (rank + 1).
std::vector<std::size_t> grid_ranks(const ModuleRep& m, unsigned jobs) {
    std::uint32_t p = m.p();
    std::size_t n = m.dim, r = m.r;
    std::vector<std::size_t> best(p - 1, 0);
    // Largest rank of X^j for a nilpotent X of order p on n dimensions.
    std::vector<std::size_t> cap(p - 1);
    for (std::uint32_t j = 1; j < p; ++j) cap[j - 1] = n / p * (p - j) + (n % p > j ? n % p - j : 0);
    for (unsigned e = 1;; ++e) {
        std::uint64_t need = 0;
        for (std::uint32_t j = 1; j < p; ++j)
            if (best[j - 1] < cap[j - 1]) need = std::max<std::uint64_t>(need, std::uint64_t(j) * (best[j - 1] + 1));
        std::uint64_t q = 1;
        for (unsigned k = 0; k < e; ++k) q *= p;
        if (need == 0 || q <= need) {
            if (need == 0) return best;
            continue;
        }
        std::uint64_t points = 1;
        for (std::size_t k = 1; k < r; ++k) points *= q;
        double cost = double(points) * double(n) * double(n) * double(n) * double(p);
        if (cost > 2e10) throw std::runtime_error("generic type: evaluation grid too large for this module");
        FieldPtr F = make_field(p, e);
        auto ranks = parallel_map<std::vector<std::size_t>>(points, resolve_jobs(jobs), [&](std::size_t idx) {
            std::vector<Elem> lam(r, 0);
            lam[0] = 1;
            for (std::size_t k = r; k-- > 1;) {
                lam[k] = Elem(idx % q);
                idx /= q;
            }
            PiPoint pt{F, lam, {}};
            return power_ranks(evaluate(m, pt), p - 1);
        });
        bool grew = false;
        for (const auto& rk : ranks)
            for (std::uint32_t j = 1; j < p; ++j) {
                std::size_t v = j < rk.size() ? rk[j] : 0;
                if (v > best[j - 1]) {
                    best[j - 1] = v;
                    grew = true;
                }
            }
        // Certified when the grid was large enough for the ranks it produced.
        std::uint64_t need_after = 0;
        for (std::uint32_t j = 1; j < p; ++j)
            if (best[j - 1] < cap[j - 1])
                need_after = std::max<std::uint64_t>(need_after, std::uint64_t(j) * (best[j - 1] + 1));
        if (!grew || q > need_after) return best;
    }
}

// Smallest e such that a nonconstant binary form has a zero in P^1(GF(p^e)).
unsigned root_degree(const HomPoly& g) {
    FieldPtr F = make_field(g.p, 1);
    if (upoly::valuation(dehomogenize_second(g)) > 0) return 1;  // x1 | g: the point [0:1]
    upoly::UPoly u = upoly::monic(*F, dehomogenize_first(g));
    if (upoly::degree(u) < 1) return 1;  // all of g's zeros sit at [0:1]
    upoly::UPoly x{0, 1}, xp = x;
    for (unsigned e = 1;; ++e) {
        xp = upoly::powmod(*F, xp, g.p, u);
        if (upoly::degree(upoly::gcd(*F, u, upoly::sub(*F, xp, x))) >= 1) return e;
    }
}

}  // namespace

std::vector<Witness> sweep_types(const ModuleRep& m, unsigned e, bool frobenius_dedup, unsigned jobs) {
    FieldPtr F = make_field(m.p(), e);
    auto pts = projective_points(F, m.r, frobenius_dedup);
    auto types = parallel_map<JordanType>(pts.size(), resolve_jobs(jobs), [&](std::size_t i) { return jordan_at(m, pts[i]); });
    std::vector<Witness> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back({pts[i], types[i]});
    return out;
}

JordanType generic_type(const ModuleRep& m, unsigned jobs) {
    require_prime_field(m, "generic_type");
    if (m.dim == 0) return JordanType(m.p());
    if (m.r == 1) return from_nilpotent(m.gens[0], m.p());
    if (m.r == 2) return type_from_pencil_ranks(m, exact_pencil(m).ranks);
    return type_from_pencil_ranks(m, grid_ranks(m, jobs));
}

CjtReport check_constant(const ModuleRep& m, const CheckOptions& opt) {
    require_prime_field(m, "check_constant");
    CjtReport rep;
    if (m.r == 1) {
        rep.verdict = Verdict::CONSTANT_EXACT;
        rep.type = from_nilpotent(m.gens[0], m.p());
        rep.method = Method::SWEEP;
        rep.extensions = {1};
        return rep;
    }
    if (opt.exact && m.r == 2) {
        ExactPencil ex = exact_pencil(m);
        rep.method = Method::RANK2_GCD;
        rep.type = type_from_pencil_ranks(m, ex.ranks);
        rep.ranks = ex.ranks;
        rep.gcds = ex.gcds;
        unsigned e_min = 0;
        for (const auto& g : ex.gcds)
            if (g.degree() >= 1) {
                unsigned d = root_degree(g);
                e_min = e_min == 0 ? d : std::min(e_min, d);
            }
        if (e_min == 0) {
            rep.verdict = Verdict::CONSTANT_EXACT;
            return rep;
        }
        rep.verdict = Verdict::NOT_CONSTANT;
        for (unsigned e = 1; e <= e_min; ++e) {
            rep.extensions.push_back(e);
            for (auto& w : sweep_types(m, e, true, opt.jobs))
                if (w.type != rep.type) rep.witnesses.push_back(std::move(w));
            if (!rep.witnesses.empty()) break;
        }
        return rep;
    }

    std::optional<JordanType> generic;
    try {
        generic = generic_type(m, opt.jobs);
    } catch (const std::runtime_error&) {
    }
    rep.method = Method::SWEEP;
    std::vector<Witness> seen;
    for (unsigned e = 1; e <= std::max(1u, opt.max_e); ++e) {
        rep.extensions.push_back(e);
        auto level = sweep_types(m, e, true, opt.jobs);
        seen.insert(seen.end(), level.begin(), level.end());
        JordanType ref;
        if (generic) {
            ref = *generic;
        } else {
            std::map<JordanType, std::size_t> freq;
            for (const auto& w : seen) ++freq[w.type];
            if (freq.size() < 2) continue;
            std::size_t best = 0;
            for (const auto& [t, c] : freq)
                if (c > best) {
                    best = c;
                    ref = t;
                }
        }
        std::vector<Witness> dev;
        for (const auto& w : seen)
            if (w.type != ref) dev.push_back(w);
        if (!dev.empty()) {
            rep.verdict = Verdict::NOT_CONSTANT;
            rep.type = ref;
            rep.witnesses = std::move(dev);
            return rep;
        }
    }
    rep.verdict = Verdict::CONSTANT_ON_TESTED;
    rep.type = generic ? *generic : seen.front().type;
    return rep;
}

GammaLocus gamma_locus(const ModuleRep& m, unsigned e, unsigned jobs) {
    require_prime_field(m, "gamma_locus");
    GammaLocus g;
    g.generic = generic_type(m, jobs);
    for (auto& w : sweep_types(m, e, false, jobs))
        if (w.type != g.generic) g.points.push_back(std::move(w));
    return g;
}

std::vector<PiPoint> pi_support(const ModuleRep& m, unsigned e, unsigned jobs) {
    require_prime_field(m, "pi_support");
    std::vector<PiPoint> out;
    for (auto& w : sweep_types(m, e, false, jobs))
        if (!w.type.is_projective()) out.push_back(std::move(w.point));
    return out;
}

}  // namespace cjt
