#include <stdexcept>

#include "cjt/pipoint.hpp"

namespace cjt {

namespace {

std::string element_string(const Field& F, Elem a) {
    if (F.is_prime()) return std::to_string(a);
    auto c = F.coeffs(a);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace

std::string PiPoint::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < linear.size(); ++i) s += (i ? ":" : "") + element_string(*field, linear[i]);
    s += "]";
    for (const auto& [exps, c] : tail) {
        s += " + " + element_string(*field, c) + "*t^(";
        for (std::size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i]);
        s += ")";
    }
    return s;
}

bool PiPoint::operator==(const PiPoint& o) const {
    return field->same(*o.field) && linear == o.linear && tail == o.tail;
}

PiPoint make_point(FieldPtr f, std::vector<Elem> linear, std::vector<PiPoint::Term> tail) {
    bool nonzero = false;
    for (auto c : linear) {
        if (c >= f->q()) throw std::invalid_argument("point coordinate outside the field");
        nonzero |= c != 0;
    }
    if (!nonzero) throw std::invalid_argument("point has zero linear part");
    for (const auto& [exps, c] : tail) {
        if (exps.size() != linear.size()) throw std::invalid_argument("tail monomial has wrong length");
        std::uint32_t deg = 0;
        for (auto e : exps) {
            if (e >= f->p()) throw std::invalid_argument("tail exponent must be below p");
            deg += e;
        }
        if (deg < 2) throw std::invalid_argument("tail monomials need degree at least 2");
        if (c >= f->q()) throw std::invalid_argument("tail coefficient outside the field");
    }
    return PiPoint{std::move(f), std::move(linear), std::move(tail)};
}

Matrix evaluate(const ModuleRep& m, const PiPoint& q) {
    const Field& F = *q.field;
    if (F.p() != m.p()) throw std::invalid_argument("point and module have different characteristic");
    if (!m.field->same(F) && !m.field->is_prime())
        throw std::invalid_argument("module over an extension needs a point over the same field");
    if (q.linear.size() != m.r) throw std::invalid_argument("point has the wrong number of coordinates");
    Matrix x(q.field, m.dim, m.dim);
    for (std::size_t i = 0; i < m.r; ++i) {
        Elem c = q.linear[i];
        if (c == 0) continue;
        const auto& a = m.gens[i].data;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k]) x.data[k] = F.add(x.data[k], F.mul(c, a[k]));
    }
    if (!q.tail.empty()) {
        ModuleRep b = m.field->same(F) ? m : base_change(m, q.field);
        for (const auto& [exps, c] : q.tail) x = x + scale(monomial_action(b, exps), c);
    }
    return x;
}

JordanType jordan_at(const ModuleRep& m, const PiPoint& q) { return from_nilpotent(evaluate(m, q), m.p()); }

std::vector<PiPoint> projective_points(const FieldPtr& f, std::size_t r, bool frobenius_dedup) {
    const Field& F = *f;
    std::uint64_t q = F.q();
    std::vector<PiPoint> out;
    for (std::size_t lead = r; lead-- > 0;) {
        std::size_t free = r - 1 - lead;
        std::vector<Elem> pt(r, 0);
        pt[lead] = 1;
        // odometer over the coordinates after `lead`, last coordinate fastest
        for (;;) {
            bool keep = true;
            if (frobenius_dedup && !F.is_prime()) {
                std::vector<Elem> conj = pt;
                for (std::uint32_t k = 1; k < F.e() && keep; ++k) {
                    for (auto& c : conj) c = F.frobenius(c);
                    if (conj < pt) keep = false;
                }
            }
            if (keep) out.push_back(PiPoint{f, pt, {}});
            std::size_t k = r;
            while (k > lead + 1) {
                --k;
                if (++pt[k] < q) break;
                pt[k] = 0;
                if (k == lead + 1) k = lead;  // wrapped the most significant free slot
            }
            if (free == 0 || k == lead) break;
        }
    }
    return out;
}

}  // namespace cjt
