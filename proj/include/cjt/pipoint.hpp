#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cjt/jordan.hpp"
#include "cjt/module.hpp"

namespace cjt {

// sum_i linear_i t_i + sum tail coefficient * t^exps, over `field`.
struct PiPoint {
    using Term = std::pair<std::vector<std::uint32_t>, Elem>;

    FieldPtr field;
    std::vector<Elem> linear;
    std::vector<Term> tail;

    // "[1:0]" over the prime field; extension coordinates print as (c0,c1,...).
    std::string to_string() const;
    bool operator==(const PiPoint& o) const;
};

// Checks the linear part is nonzero and tail monomials have degree >= 2 and exponents < p.
PiPoint make_point(FieldPtr f, std::vector<Elem> linear, std::vector<PiPoint::Term> tail = {});

// The operator by which t acts after restriction along q.  Modules over GF(p) are read
// in the point's field; otherwise the fields must agree.
Matrix evaluate(const ModuleRep& m, const PiPoint& q);
JordanType jordan_at(const ModuleRep& m, const PiPoint& q);

// Points of P^{r-1}(f) with first nonzero coordinate 1, lexicographic in element codes.
// With `frobenius_dedup` only the lexicographically least point of each Frobenius orbit is kept.
std::vector<PiPoint> projective_points(const FieldPtr& f, std::size_t r, bool frobenius_dedup = false);

}  // namespace cjt
