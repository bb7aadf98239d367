#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cjt/jordan.hpp"
#include "cjt/module.hpp"
#include "cjt/pipoint.hpp"
#include "cjt/poly.hpp"

namespace cjt {

enum class Verdict { CONSTANT_EXACT, CONSTANT_ON_TESTED, NOT_CONSTANT };
enum class Method { RANK2_GCD, SWEEP };
const char* to_string(Verdict v);
const char* to_string(Method m);

struct Witness {
    PiPoint point;
    JordanType type;
};

struct CjtReport {
    Verdict verdict = Verdict::CONSTANT_ON_TESTED;
    JordanType type;  // generic type when known, else the reference type of the sweep
    std::vector<Witness> witnesses;
    Method method = Method::SWEEP;
    std::vector<unsigned> extensions;  // extension degrees swept
    // Exact path only: generic ranks of P^j and the gcd of their maximal minors, j = 1..p-1.
    std::vector<std::size_t> ranks;
    std::vector<HomPoly> gcds;
};

struct CheckOptions {
    unsigned max_e = 2;
    bool exact = true;  // use the gcd decision when r = 2
    unsigned jobs = 0;  // 0: CJT_JOBS or 1
};

// Jordan type of sum_i lambda_i A_i over GF(p)(lambda).  Exact for every r; for r >= 3
// it is certified by an evaluation grid and throws std::runtime_error when the grid
// would be too large.
JordanType generic_type(const ModuleRep& m, unsigned jobs = 0);

CjtReport check_constant(const ModuleRep& m, const CheckOptions& opt = {});

struct GammaLocus {
    std::vector<Witness> points;
    JordanType generic;
};
// Rational points of P^{r-1}(GF(p^e)) where the type differs from the generic type.
GammaLocus gamma_locus(const ModuleRep& m, unsigned e, unsigned jobs = 0);
// Rational points where the restriction is not projective.
std::vector<PiPoint> pi_support(const ModuleRep& m, unsigned e, unsigned jobs = 0);

// Types at every point of P^{r-1}(GF(p^e)), in sweep order.
std::vector<Witness> sweep_types(const ModuleRep& m, unsigned e, bool frobenius_dedup, unsigned jobs = 0);

}  // namespace cjt
