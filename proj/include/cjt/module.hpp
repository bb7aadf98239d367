#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cjt/matrix.hpp"

namespace cjt {

// PRIMITIVE: t is primitive, tensor acts by t(x) 1 + 1 (x) t and the antipode is -t.
// GROUP: t = g - 1 for a group-like g, tensor adds t (x) t, antipode (1+t)^{-1} - 1.
enum class Convention { PRIMITIVE, GROUP };
const char* to_string(Convention c);
Convention parse_convention(const std::string& s);

// A module over k[t_1..t_r]/(t_i^p) given by r commuting nilpotent matrices.
struct ModuleRep {
    FieldPtr field;
    std::size_t r = 0;
    std::size_t dim = 0;
    std::vector<Matrix> gens;
    Convention convention = Convention::PRIMITIVE;

    std::uint32_t p() const { return field->p(); }
    const Field& F() const { return *field; }
};
using ModulePtr = std::shared_ptr<const ModuleRep>;

struct ModuleHom {
    ModulePtr source, target;
    Matrix matrix;  // target.dim x source.dim
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    int first = -1, second = -1;  // offending generator indices (0-based)
};

// Checks shapes, pairwise commutation and A_i^p = 0.
ValidationReport validate(const ModuleRep& m);
// Builds and validates; throws std::invalid_argument on violation.
ModuleRep make_module(FieldPtr f, std::vector<Matrix> gens, Convention c = Convention::PRIMITIVE);
ModuleRep trivial_module(FieldPtr f, std::size_t r, std::size_t n = 1, Convention c = Convention::PRIMITIVE);
// Free module of the given rank; basis vector (monomial a, generator j) has index j + rank * mono(a)
// with mono(a) = sum_i a_i p^{i-1}.
ModuleRep free_module(FieldPtr f, std::size_t r, std::size_t rank, Convention c = Convention::PRIMITIVE);
ModulePtr share(ModuleRep m);

bool is_intertwiner(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f);
ModuleHom make_hom(ModulePtr src, ModulePtr tgt, Matrix f);

ModuleRep direct_sum(const std::vector<ModuleRep>& parts);
ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);
ModuleRep dual(const ModuleRep& m);
ModuleRep hom(const ModuleRep& m, const ModuleRep& n);
ModuleRep base_change(const ModuleRep& m, const FieldPtr& target);

// Induced action on an invariant subspace.
ModuleRep submodule(const ModuleRep& m, const Subspace& s);
struct Quotient {
    ModuleRep module;
    Matrix projection;                 // quotient.dim x m.dim
    std::vector<std::size_t> complement;  // basis vectors of m representing the quotient basis
};
Quotient quotient(const ModuleRep& m, const Subspace& s);

// Product of A_i^{exps_i}.
Matrix monomial_action(const ModuleRep& m, const std::vector<std::uint32_t>& exps);
// theta = prod_i A_i^{p-1}
Matrix socle_element(const ModuleRep& m);

struct RadicalSocle {
    Subspace radical;  // sum of images
    Subspace socle;    // intersection of kernels
};
RadicalSocle radical_socle(const ModuleRep& m);
// Rows spanning the functionals vanishing on the radical: {f : f A_i = 0 for all i}.
Matrix top_functionals(const ModuleRep& m);
// Basis vectors whose images span M / rad M, first in column order.
std::vector<std::size_t> generator_indices(const ModuleRep& m);

struct FreeSplit {
    std::size_t free_rank = 0;
    ModuleRep core;
    Subspace core_basis;  // the complement of the free part inside m
};
FreeSplit split_free(const ModuleRep& m);

struct Cover {
    std::size_t rank = 0;                 // number of generators d
    std::vector<std::size_t> generators;  // indices of the lifted generators in m
    Matrix map;                           // m.dim x (d p^r): image of each free basis vector
    ModuleRep free;                       // the free module kE^d
    Subspace kernel;                      // omega inside the free module
    ModuleRep omega;
};
// Minimal projective cover and its kernel.  When `check_minimal` the kernel is verified
// to have no free summand.
Cover projective_cover(const ModuleRep& m, bool check_minimal = true);
ModuleRep omega_n(const ModuleRep& m, int n);

// Module homomorphisms m -> n.
std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n);
// Same space by solving the stacked intertwining equations directly.
std::vector<Matrix> hom_space_direct(const ModuleRep& m, const ModuleRep& n);

// f : src -> tgt factors through a projective module.
bool factors_through_projective(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f);

struct Extension {
    ModuleRep middle;
    Matrix from_m;  // M -> B
    Matrix to_n;    // B -> N
};
// f : Omega^1(N) -> M with Omega^1(N) the kernel of projective_cover(N).
Extension build_extension(const ModuleRep& m, const ModuleRep& n, const Matrix& f);

struct IsoResult {
    bool isomorphic = false;
    bool inconclusive = false;
    std::string reason;
    std::optional<Matrix> witness;
};
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed = 0, unsigned draws = 200);

}  // namespace cjt
