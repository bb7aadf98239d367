#include "cjt/polymat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cjt {

PolyMatrix::PolyMatrix(std::uint32_t p_, std::uint32_t nvars_, std::size_t r, std::size_t c)
    : p(p_), nvars(nvars_), rows(r), cols(c), entries(r * c, HomPoly(p_, nvars_)) {}

std::vector<int> PolyMatrix::column_degrees() const {
    std::vector<int> deg(cols, -1);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) {
            int d = (*this)(i, j).degree();
            if (d < 0) continue;
            if (deg[j] >= 0 && deg[j] != d) throw std::invalid_argument("column has entries of different degrees");
            deg[j] = d;
        }
    return deg;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows || a.p != b.p || a.nvars != b.nvars)
        throw std::invalid_argument("polynomial matrix product: incompatible operands");
    PolyMatrix c(a.p, a.nvars, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const HomPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const HomPoly& y = b(k, j);
                if (!y.is_zero()) c(i, j) = c(i, j) + x * y;
            }
        }
    return c;
}

PolyMatrix linear_pencil(const std::vector<Matrix>& mats) {
    if (mats.empty()) throw std::invalid_argument("linear_pencil needs at least one matrix");
    const Field& F = mats[0].F();
    if (!F.is_prime()) throw std::invalid_argument("linear_pencil needs matrices over the prime field");
    std::uint32_t n = std::uint32_t(mats.size());
    PolyMatrix m(F.p(), n, mats[0].rows, mats[0].cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> t;
            for (std::uint32_t k = 0; k < n; ++k) {
                Elem c = mats[k](i, j);
                if (!c) continue;
                std::vector<std::uint32_t> e(n, 0);
                e[k] = 1;
                t.emplace_back(e, c);
            }
            m(i, j) = HomPoly::from_terms(F.p(), n, t);
        }
    return m;
}

Matrix evaluate(const PolyMatrix& m, const FieldPtr& F, const std::vector<Elem>& point) {
    if (F->p() != m.p) throw std::invalid_argument("evaluation field has the wrong characteristic");
    Matrix out(F, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = evaluate(m(i, j), *F, point);
    return out;
}

namespace {

// Fraction-free elimination on a copy; returns the rank and the pivot sequence.
std::size_t bareiss(std::vector<HomPoly> a, std::size_t rows, std::size_t cols, std::uint32_t p,
                    std::uint32_t nvars, HomPoly* last_pivot, bool* odd_swaps) {
    auto at = [&](std::size_t i, std::size_t j) -> HomPoly& { return a[i * cols + j]; };
    HomPoly prev = HomPoly::constant(p, nvars, 1);
    std::size_t r = 0;
    bool odd = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (at(i, c).is_zero()) continue;
            if (piv == rows || at(i, c).terms.size() < at(piv, c).terms.size()) piv = i;
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
            odd = !odd;
        }
        const HomPoly& pv = at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            HomPoly lead = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                HomPoly v = pv * at(i, j);
                if (!lead.is_zero() && !at(r, j).is_zero()) v = v - lead * at(r, j);
                at(i, j) = exact_div(v, prev);
            }
            at(i, c) = HomPoly(p, nvars);
        }
        prev = pv;
        ++r;
    }
    if (last_pivot) *last_pivot = prev;
    if (odd_swaps) *odd_swaps = odd;
    return r;
}

using upoly::UPoly;

// Diagonalises a matrix over GF(p)[s]/(d) by row and column operations; returns
// gcd(delta_k, d) for the diagonal entries delta_k.  Every invariant factor that divides d
// is recovered exactly, and entries stay below deg d, which avoids the degree blow-up of
// plain Euclidean elimination.
std::vector<UPoly> smith_diagonal_mod(std::vector<UPoly> m, std::size_t rows, std::size_t cols, const UPoly& d,
                                      const Field& F) {
    auto at = [&](std::size_t i, std::size_t j) -> UPoly& { return m[i * cols + j]; };
    for (auto& x : m) x = upoly::mod(F, x, d);
    std::vector<UPoly> diag;
    std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t bi = rows, bj = cols;
        int bd = -1;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                int dg = upoly::degree(at(i, j));
                if (dg >= 0 && (bd < 0 || dg < bd)) {
                    bd = dg;
                    bi = i;
                    bj = j;
                }
            }
        if (bd < 0) {
            // the rest of the diagonal is zero mod d
            for (; k < n; ++k) diag.push_back(upoly::monic(F, d));
            break;
        }
        if (bi != k)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(bi, j), at(k, j));
        if (bj != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, bj), at(i, k));
        for (;;) {
            bool again = false;
            for (std::size_t i = k + 1; i < rows && !again; ++i) {
                if (at(i, k).empty()) continue;
                UPoly q, r;
                upoly::divmod(F, at(i, k), at(k, k), q, r);
                for (std::size_t j = k; j < cols; ++j)
                    if (!at(k, j).empty()) at(i, j) = upoly::mod(F, upoly::sub(F, at(i, j), upoly::mul(F, q, at(k, j))), d);
                if (!at(i, k).empty()) {
                    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = k + 1; j < cols && !again; ++j) {
                if (at(k, j).empty()) continue;
                UPoly q, r;
                upoly::divmod(F, at(k, j), at(k, k), q, r);
                for (std::size_t i = k; i < rows; ++i)
                    if (!at(i, k).empty()) at(i, j) = upoly::mod(F, upoly::sub(F, at(i, j), upoly::mul(F, q, at(i, k))), d);
                if (!at(k, j).empty()) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
                    again = true;
                }
            }
            if (!again) break;
        }
        diag.push_back(upoly::gcd(F, at(k, k), d));
    }
    return diag;
}

// Invariant factors d_1 | d_2 | ... from an arbitrary diagonal form.
std::vector<UPoly> invariant_factors(std::vector<UPoly> d, const Field& F) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            UPoly g = upoly::gcd(F, d[i], d[j]);
            UPoly l = upoly::lcm(F, d[i], d[j]);
            d[i] = std::move(g);
            d[j] = std::move(l);
        }
    return d;
}

// Invariant factors in one affine chart, computed modulo a nonzero maximal minor.
std::vector<UPoly> chart_factors(const PolyMatrix& m, const HomPoly& minor, bool first, const Field& F) {
    std::vector<UPoly> u(m.entries.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = first ? dehomogenize_first(m.entries[i]) : dehomogenize_second(m.entries[i]);
    UPoly d = first ? dehomogenize_first(minor) : dehomogenize_second(minor);
    return invariant_factors(smith_diagonal_mod(std::move(u), m.rows, m.cols, d, F), F);
}

struct RankMinor {
    std::size_t rank = 0;
    HomPoly minor;  // a nonzero rank x rank minor
};

RankMinor rank_and_minor(const PolyMatrix& m) {
    RankMinor out;
    out.minor = HomPoly::constant(m.p, m.nvars, 1);
    if (m.rows == 0 || m.cols == 0) return out;
    out.rank = bareiss(m.entries, m.rows, m.cols, m.p, m.nvars, &out.minor, nullptr);
    return out;
}

UPoly product_of_first(const std::vector<UPoly>& f, std::size_t k, const Field& F) {
    UPoly prod{1};
    for (std::size_t i = 0; i < k; ++i) prod = upoly::mul(F, prod, f[i]);
    return prod;
}

}  // namespace

std::size_t generic_rank(const PolyMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss(m.entries, m.rows, m.cols, m.p, m.nvars, nullptr, nullptr);
}

HomPoly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square polynomial matrix");
    if (m.rows == 0) return HomPoly::constant(m.p, m.nvars, 1);
    HomPoly last;
    bool odd = false;
    std::size_t r = bareiss(m.entries, m.rows, m.cols, m.p, m.nvars, &last, &odd);
    if (r < m.rows) return HomPoly(m.p, m.nvars);
    return odd ? scale(last, m.p - 1) : last;
}

std::vector<HomPoly> minors(const PolyMatrix& m, std::size_t k) {
    std::vector<HomPoly> out;
    if (k == 0 || k > m.rows || k > m.cols) return out;
    std::vector<std::size_t> ri(k), ci(k);
    auto first = [](std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    };
    auto next = [](std::vector<std::size_t>& v, std::size_t n) {
        std::size_t k = v.size();
        for (std::size_t i = k; i-- > 0;) {
            if (v[i] < n - k + i) {
                ++v[i];
                for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    first(ri);
    do {
        first(ci);
        do {
            PolyMatrix sub(m.p, m.nvars, k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
            out.push_back(determinant(sub));
        } while (next(ci, m.cols));
    } while (next(ri, m.rows));
    return out;
}

BivariateMinorData bivariate_rank_and_gcd(const PolyMatrix& m) {
    if (m.nvars != 2) throw std::invalid_argument("bivariate minor gcd needs exactly two variables");
    FieldPtr F = make_field(m.p, 1);
    BivariateMinorData out;
    RankMinor rm = rank_and_minor(m);
    out.rank = rm.rank;
    if (out.rank == 0) {
        out.gcd = HomPoly(m.p, 2);
        return out;
    }
    auto f1 = chart_factors(m, rm.minor, true, *F);
    auto f2 = chart_factors(m, rm.minor, false, *F);
    UPoly g1 = product_of_first(f1, out.rank, *F);
    UPoly g2 = product_of_first(f2, out.rank, *F);
    out.gcd = monic(homogenize(m.p, g1, unsigned(upoly::valuation(g2))));
    return out;
}

HomPoly bivariate_minor_gcd(const PolyMatrix& m, std::size_t k) {
    if (m.nvars != 2) throw std::invalid_argument("bivariate minor gcd needs exactly two variables");
    if (k == 0) return HomPoly::constant(m.p, 2, 1);
    RankMinor rm = rank_and_minor(m);
    if (k > rm.rank) return HomPoly(m.p, 2);
    FieldPtr F = make_field(m.p, 1);
    auto f1 = chart_factors(m, rm.minor, true, *F);
    auto f2 = chart_factors(m, rm.minor, false, *F);
    UPoly g1 = product_of_first(f1, k, *F);
    UPoly g2 = product_of_first(f2, k, *F);
    return monic(homogenize(m.p, g1, unsigned(upoly::valuation(g2))));
}

namespace {

// Minor restricted to a line: coefficients in the last variable after fixing the others.
struct LineForm {
    // For each exponent l of the last variable, terms (exponents of the other variables, coefficient).
    std::vector<std::vector<std::pair<std::vector<std::uint32_t>, Elem>>> by_last;
};

LineForm line_form(const HomPoly& h) {
    LineForm lf;
    for (const auto& [key, c] : h.terms) {
        auto e = h.unpack(key);
        std::uint32_t l = e.back();
        e.pop_back();
        if (lf.by_last.size() <= l) lf.by_last.resize(l + 1);
        lf.by_last[l].emplace_back(e, c);
    }
    return lf;
}

UPoly restrict_to_line(const LineForm& lf, const Field& F, const std::vector<std::vector<Elem>>& powers) {
    UPoly g(lf.by_last.size(), 0);
    for (std::size_t l = 0; l < lf.by_last.size(); ++l) {
        Elem s = 0;
        for (const auto& [e, c] : lf.by_last[l]) {
            Elem t = c;
            for (std::size_t i = 0; i < e.size() && t; ++i) t = F.mul(t, powers[i][e[i]]);
            s = F.add(s, t);
        }
        g[l] = s;
    }
    upoly::trim(g);
    return g;
}

}  // namespace

ZeroSearchResult common_zero_search(const PolyMatrix& m, std::size_t k, unsigned max_e) {
    if (max_e < 1) throw std::invalid_argument("max_e must be at least 1");
    ZeroSearchResult res;
    std::vector<HomPoly> ms;
    for (auto& h : minors(m, k))
        if (!h.is_zero()) ms.push_back(std::move(h));
    std::uint32_t n = m.nvars;
    unsigned maxdeg = 0;
    for (const auto& h : ms) maxdeg = std::max(maxdeg, unsigned(h.degree()));
    std::vector<LineForm> forms;
    for (const auto& h : ms) forms.push_back(line_form(h));

    for (unsigned e = 1; e <= max_e; ++e) {
        FieldPtr F = make_field(m.p, e);
        const std::uint32_t q = F->q();
        // lead = position of the leading 1; positions after it are free.
        for (std::uint32_t lead = n; lead-- > 0;) {
            std::vector<Elem> pt(n, 0);
            pt[lead] = 1;
            if (lead == n - 1) {
                bool all = true;
                for (const auto& h : ms)
                    if (evaluate(h, *F, pt) != 0) { all = false; break; }
                if (all) {
                    res.found = true;
                    res.field = F;
                    res.point = pt;
                    return res;
                }
                continue;
            }
            // Odometer over coordinates lead+1 .. n-2; the last coordinate is solved for.
            std::vector<Elem> prefix(n - 2 - lead, 0);
            for (;;) {
                for (std::size_t i = 0; i < prefix.size(); ++i) pt[lead + 1 + i] = prefix[i];
                std::vector<std::vector<Elem>> powers(n - 1, std::vector<Elem>(maxdeg + 1, 0));
                for (std::uint32_t i = 0; i + 1 < n; ++i) {
                    powers[i][0] = 1;
                    for (unsigned d = 1; d <= maxdeg; ++d) powers[i][d] = F->mul(powers[i][d - 1], pt[i]);
                }
                UPoly g;
                bool any_nonzero = false;
                for (const auto& lf : forms) {
                    UPoly f = restrict_to_line(lf, *F, powers);
                    if (f.empty()) continue;
                    g = any_nonzero ? upoly::gcd(*F, g, f) : upoly::monic(*F, f);
                    any_nonzero = true;
                    if (upoly::degree(g) == 0) break;
                }
                bool hit = false;
                Elem root = 0;
                if (!any_nonzero) {
                    hit = true;
                } else if (upoly::degree(g) >= 1) {
                    UPoly x{0, 1};
                    UPoly xq = upoly::powmod(*F, x, q, g);
                    UPoly h = upoly::gcd(*F, g, upoly::sub(*F, xq, x));
                    if (upoly::degree(h) >= 1) {
                        for (std::uint32_t b = 0; b < q; ++b)
                            if (upoly::eval(*F, h, b) == 0) {
                                root = b;
                                hit = true;
                                break;
                            }
                    }
                }
                if (hit) {
                    pt[n - 1] = root;
                    res.found = true;
                    res.field = F;
                    res.point = pt;
                    return res;
                }
                std::size_t i = prefix.size();
                while (i > 0) {
                    --i;
                    if (++prefix[i] < q) break;
                    prefix[i] = 0;
                    if (i == 0) { i = prefix.size() + 1; break; }
                }
                if (prefix.empty() || i == prefix.size() + 1) break;
            }
        }
        res.exhausted.push_back(e);
    }
    return res;
}

}  // namespace cjt
