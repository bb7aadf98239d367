#pragma once

#include <cstdint>
#include <vector>

#include "cjt/matrix.hpp"
#include "cjt/poly.hpp"

namespace cjt {

struct PolyMatrix {
    std::uint32_t p = 0, nvars = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<HomPoly> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(std::uint32_t p_, std::uint32_t nvars_, std::size_t r, std::size_t c);

    HomPoly& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const HomPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    // Degree of the nonzero entries in each column, -1 for a zero column; throws if mixed.
    std::vector<int> column_degrees() const;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
// sum_i x_i mats[i] for matrices over the prime field.
PolyMatrix linear_pencil(const std::vector<Matrix>& mats);
Matrix evaluate(const PolyMatrix& m, const FieldPtr& F, const std::vector<Elem>& point);
HomPoly determinant(const PolyMatrix& m);

// Rank over GF(p)(x_1..x_n) by fraction-free elimination.
std::size_t generic_rank(const PolyMatrix& m);

// For nvars = 2: generic rank and the monic gcd of all k x k minors for k = that rank.
struct BivariateMinorData {
    std::size_t rank = 0;
    HomPoly gcd;
};
BivariateMinorData bivariate_rank_and_gcd(const PolyMatrix& m);
// Gcd of all k x k minors, normalised so the lexicographically leading coefficient is 1.
HomPoly bivariate_minor_gcd(const PolyMatrix& m, std::size_t k);
// All k x k minors in row-combination-lexicographic order (used as an oracle).
std::vector<HomPoly> minors(const PolyMatrix& m, std::size_t k);

struct ZeroSearchResult {
    bool found = false;
    FieldPtr field;
    std::vector<Elem> point;             // normalised: first nonzero coordinate is 1
    std::vector<unsigned> exhausted;     // extension degrees searched without success
};
ZeroSearchResult common_zero_search(const PolyMatrix& m, std::size_t k, unsigned max_e);

}  // namespace cjt
