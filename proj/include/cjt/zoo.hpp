#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cjt/module.hpp"

namespace cjt {

// Arrow (generator, from, to, coefficient): A_generator e_from += coefficient e_to.
using Arrow = std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>;
ModuleRep from_arrows(const FieldPtr& f, std::size_t r, std::size_t dim, const std::vector<Arrow>& arrows);

// I^m / I^n: monomials with exponents < p and degree in [m, n), ordered by degree and
// then lexicographically descending.
ModuleRep truncated(const FieldPtr& f, std::size_t r, unsigned m, unsigned n);
// kE / I^2: basis 1, t_1, .., t_r.
ModuleRep ke_mod_i2(const FieldPtr& f, std::size_t r);
// 13-dimensional module on v_1..v_4, m_0..m_4, b_0..b_3 with
// x v_i = m_i, x m_i = b_i (i <= 3), y v_i = m_{i-1}, y m_i = b_{i-1} (i >= 1).
ModuleRep w_module(const FieldPtr& f);
// Basis v_1..v_n, w_0..w_n with x v_i = w_i and y v_i = w_{i-1}.
ModuleRep v_module(const FieldPtr& f, unsigned n);
// The cyclic k[t]/t^p-module of dimension i.
ModuleRep jblock(const FieldPtr& f, unsigned i);
// Commuting strictly upper triangular generators: polynomials without constant term in a
// nilpotent N = U J U^{-1} and a partner X from its centraliser.
ModuleRep random_module(const FieldPtr& f, std::size_t r, std::size_t dim, std::uint64_t seed);

// Named constructor used by the command line: TRUNCATED(r, m, n), KE_MOD_I2(r), W, V(n),
// JBLOCK(i), RANDOM(r, dim, seed); every name also takes p (default 5).
ModuleRep build_example(const std::string& name, const std::map<std::string, std::int64_t>& params);
std::vector<std::string> example_names();

}  // namespace cjt
