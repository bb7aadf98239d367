#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cjt/field.hpp"

namespace cjt {

// Dense univariate polynomials over GF(q), low degree first, no trailing zeros.
namespace upoly {

using UPoly = std::vector<Elem>;

void trim(UPoly& a);
int degree(const UPoly& a);  // -1 for zero
UPoly add(const Field& F, const UPoly& a, const UPoly& b);
UPoly sub(const Field& F, const UPoly& a, const UPoly& b);
UPoly mul(const Field& F, const UPoly& a, const UPoly& b);
UPoly scale(const Field& F, const UPoly& a, Elem c);
void divmod(const Field& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem);
UPoly mod(const Field& F, const UPoly& a, const UPoly& b);
UPoly monic(const Field& F, const UPoly& a);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const Field& F, const UPoly& a, const UPoly& b);
UPoly lcm(const Field& F, const UPoly& a, const UPoly& b);
UPoly powmod(const Field& F, const UPoly& base, std::uint64_t k, const UPoly& m);
Elem eval(const Field& F, const UPoly& a, Elem x);
// Index of the lowest nonzero coefficient; -1 for zero.
int valuation(const UPoly& a);

}  // namespace upoly

// Homogeneous polynomial over GF(p) in at most four variables.  Exponent vectors are
// packed 16 bits per variable with the first variable most significant, so sorting
// keys descending is lexicographic order.
struct HomPoly {
    static constexpr unsigned kBits = 16;
    static constexpr unsigned kMaxVars = 4;
    using Key = std::uint64_t;

    std::uint32_t p = 0, nvars = 0;
    std::vector<std::pair<Key, Elem>> terms;  // strictly descending keys, nonzero coefficients

    HomPoly() = default;
    HomPoly(std::uint32_t p_, std::uint32_t nvars_);

    static Key pack(const std::vector<std::uint32_t>& exps);
    std::vector<std::uint32_t> unpack(Key k) const;
    static HomPoly constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c);
    static HomPoly variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t i);
    // Validates homogeneity; coefficients are reduced mod p and like terms combined.
    static HomPoly from_terms(std::uint32_t p, std::uint32_t nvars,
                             const std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>>& t);

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // -1 for zero
    Elem coefficient(const std::vector<std::uint32_t>& exps) const;
    std::string to_string() const;

    bool operator==(const HomPoly& o) const { return p == o.p && nvars == o.nvars && terms == o.terms; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }
};

HomPoly operator+(const HomPoly& a, const HomPoly& b);
HomPoly operator-(const HomPoly& a, const HomPoly& b);
HomPoly operator*(const HomPoly& a, const HomPoly& b);
HomPoly scale(const HomPoly& a, Elem c);
// Throws std::domain_error if b does not divide a.
HomPoly exact_div(const HomPoly& a, const HomPoly& b);
// Scales so the lexicographically leading coefficient is 1.
HomPoly monic(const HomPoly& a);
Elem evaluate(const HomPoly& a, const Field& F, const std::vector<Elem>& point);
// Substitutes x_0 = 1 (chart) giving coefficients in x_1 for nvars = 2.
upoly::UPoly dehomogenize_first(const HomPoly& a);
upoly::UPoly dehomogenize_second(const HomPoly& a);
// For nvars = 2: sum_i g_i x_1^i x_0^{deg - i}, times x_0^shift.
HomPoly homogenize(std::uint32_t p, const upoly::UPoly& g, unsigned shift);

}  // namespace cjt
