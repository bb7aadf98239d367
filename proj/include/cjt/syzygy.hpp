#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cjt/module.hpp"
#include "cjt/pipoint.hpp"

namespace cjt {

// Heller shift of the trivial module, cached per (p, r, n, convention).
ModulePtr omega_k(const FieldPtr& f, std::size_t r, int n, Convention c = Convention::PRIMITIVE);
// p^r a_{r,|n|} + (-1)^n with a_{r,n} = sum_{i<n} (-1)^i C(n+r-2-i, r-1); 1 for n = 0.
std::uint64_t omega_dim_formula(std::uint32_t p, std::size_t r, int n);
// C(n+r-1, r-1)
std::uint64_t cohomology_dim(std::size_t r, int n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// A class of degree n represented by a map Omega^n(k) -> k (a row vector).
struct CocycleClass {
    int degree = 0;
    ModulePtr source;
    Matrix carrier;  // 1 x source->dim
    std::string tag;
};

std::vector<CocycleClass> cohomology_basis(const FieldPtr& f, std::size_t r, int n);

enum class Restriction { ZERO, NONZERO };
const char* to_string(Restriction r);
Restriction restrict_cocycle(const CocycleClass& c, const PiPoint& q);

// Rows of coefficient vectors (against `basis`) of the classes vanishing at q.
Matrix vanishing_classes(const std::vector<CocycleClass>& basis, const PiPoint& q);
CocycleClass combine(const std::vector<CocycleClass>& basis, const Matrix& coeffs, std::string tag);

// A degree-n class vanishing at every coordinate point e_j, j != i, but not at e_i.
CocycleClass coordinate_class(const FieldPtr& f, std::size_t r, int n, std::size_t i);
// A nonzero degree-n class vanishing at every point of P^{r-1}(GF(p)); throws if none exists.
CocycleClass rationally_vanishing_class(const FieldPtr& f, std::size_t r, int n);

}  // namespace cjt
