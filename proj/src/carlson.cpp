#include <stdexcept>

#include "cjt/carlson.hpp"

namespace cjt {

KernelModule l_xi(const std::vector<CocycleClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("l_xi needs at least one class");
    std::vector<ModuleRep> parts;
    std::vector<Matrix> row;
    for (const auto& c : classes) {
        parts.push_back(*c.source);
        row.push_back(c.carrier);
    }
    Matrix phi = hstack(row);
    if (phi.is_zero()) throw std::invalid_argument("l_xi: every class is zero");
    ModuleRep sum = direct_sum(parts);
    KernelModule out;
    out.basis = kernel(phi);
    out.module = submodule(sum, out.basis);
    return out;
}

bool hypothesis_at(const Matrix& phi, const ModuleRep& src, const ModuleRep& tgt, const PiPoint& q) {
    const FieldPtr& K = q.field;
    std::uint32_t p = K->p();
    Matrix xs = evaluate(src, q), xt = evaluate(tgt, q);
    Matrix f = phi.field->same(*K) ? phi : base_change(phi, K);
    Matrix ln = left_kernel(xt);  // maps tgt -> K
    std::size_t rn = rank(power(xt, p - 1));
    Matrix rm = row_space(power(xs, p - 1));
    std::size_t stable_targets = ln.rows - rn;
    if (ln.rows == 0) return true;
    Matrix pulled = ln * f;
    std::size_t gained = rank(rm.rows ? vstack({pulled, rm}) : pulled) - rm.rows;
    return gained == stable_targets;
}

HomMatrixKernel kernel_of_hom_matrix(const std::vector<std::vector<Matrix>>& grid, const std::vector<ModuleRep>& sources,
                                     const std::vector<ModuleRep>& targets, unsigned max_e) {
    if (sources.empty() || targets.empty()) throw std::invalid_argument("kernel_of_hom_matrix: empty grid");
    if (grid.size() != targets.size()) throw std::invalid_argument("kernel_of_hom_matrix: grid height mismatch");
    std::vector<Matrix> rows;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (grid[i].size() != sources.size()) throw std::invalid_argument("kernel_of_hom_matrix: grid width mismatch");
        for (std::size_t j = 0; j < sources.size(); ++j)
            if (grid[i][j].rows != targets[i].dim || grid[i][j].cols != sources[j].dim)
                throw std::invalid_argument("kernel_of_hom_matrix: block shape mismatch");
        rows.push_back(hstack(grid[i]));
    }
    Matrix phi = vstack(rows);
    ModuleRep src = direct_sum(sources), tgt = direct_sum(targets);
    if (!is_intertwiner(src, tgt, phi)) throw std::invalid_argument("kernel_of_hom_matrix: not a homomorphism");

    HomMatrixKernel out;
    out.kernel.basis = kernel(phi);
    out.kernel.module = submodule(src, out.kernel.basis);
    for (unsigned e = 1; e <= max_e; ++e) {
        out.hypothesis.extensions.push_back(e);
        for (const auto& q : projective_points(make_field(src.p(), e), src.r))
            if (!hypothesis_at(phi, src, tgt, q)) out.hypothesis.failing.push_back(q);
    }
    out.hypothesis.holds = out.hypothesis.failing.empty();
    return out;
}

EndotrivialReport endotrivial_check(const ModuleRep& m, unsigned max_e, unsigned jobs) {
    EndotrivialReport rep;
    FreeSplit s = split_free(hom(m, m));
    rep.free_rank = s.free_rank;
    rep.core_dim = s.core.dim;
    rep.global = s.core.dim == 1;
    std::uint32_t p = m.p();
    JordanType one = JordanType::blocks(p, {{1, 1}}), omega_one = JordanType::blocks(p, {{p - 1, 1}});
    rep.local = true;
    for (unsigned e = 1; e <= max_e; ++e) {
        rep.extensions.push_back(e);
        for (auto& w : sweep_types(m, e, true, jobs)) {
            JordanType st = stable(w.type);
            if (st != one && st != omega_one) rep.local = false;
            rep.points.push_back(std::move(w));
        }
    }
    rep.verdict = rep.global;
    return rep;
}

}  // namespace cjt
