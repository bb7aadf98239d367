#pragma once

#include <cstdint>
#include <vector>

#include "cjt/constant.hpp"
#include "cjt/module.hpp"
#include "cjt/pipoint.hpp"
#include "cjt/syzygy.hpp"

namespace cjt {

struct KernelModule {
    ModuleRep module;
    Subspace basis;  // inside the direct sum of the sources
};

// Kernel of (a_i) -> sum_i xi_i(a_i) on the sum of the class sources.
KernelModule l_xi(const std::vector<CocycleClass>& classes);

struct HypothesisReport {
    bool holds = true;
    std::vector<PiPoint> failing;
    std::vector<unsigned> extensions;
};

// Kernel of the block map grid[i][j] : sources[j] -> targets[i].  The hypothesis holds at a
// point when precomposition with the restricted map embeds stable Hom(targets, K) into
// stable Hom(sources, K).
struct HomMatrixKernel {
    KernelModule kernel;
    HypothesisReport hypothesis;
};
HomMatrixKernel kernel_of_hom_matrix(const std::vector<std::vector<Matrix>>& grid, const std::vector<ModuleRep>& sources,
                                     const std::vector<ModuleRep>& targets, unsigned max_e = 1);
bool hypothesis_at(const Matrix& phi, const ModuleRep& src, const ModuleRep& tgt, const PiPoint& q);

struct EndotrivialReport {
    bool verdict = false;
    bool global = false;   // End(M) = k + free
    bool local = false;    // stable types 1[1] or 1[p-1] everywhere tested
    std::size_t free_rank = 0;
    std::size_t core_dim = 0;
    std::vector<Witness> points;
    std::vector<unsigned> extensions;
};
EndotrivialReport endotrivial_check(const ModuleRep& m, unsigned max_e = 1, unsigned jobs = 0);

}  // namespace cjt
