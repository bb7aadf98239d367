#include "cjt/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cjt {

namespace upoly {

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const UPoly& a) { return int(a.size()) - 1; }

UPoly add(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

UPoly sub(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

UPoly mul(const Field& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

UPoly scale(const Field& F, const UPoly& a, Elem c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x = F.mul(x, c);
    return r;
}

void divmod(const Field& F, const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    rem = a;
    trim(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    Elem lead_inv = F.inv(b.back());
    while (rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        Elem c = F.mul(rem.back(), lead_inv);
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
        trim(rem);
    }
    trim(quo);
}

UPoly mod(const Field& F, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(F, a, b, q, r);
    return r;
}

UPoly monic(const Field& F, const UPoly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

UPoly gcd(const Field& F, const UPoly& a0, const UPoly& b0) {
    UPoly a = a0, b = b0;
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

UPoly lcm(const Field& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly g = gcd(F, a, b), q, r;
    divmod(F, mul(F, a, b), g, q, r);
    return monic(F, q);
}

UPoly powmod(const Field& F, const UPoly& base, std::uint64_t k, const UPoly& m) {
    UPoly result{1};
    result = mod(F, result, m);
    UPoly b = mod(F, base, m);
    while (k) {
        if (k & 1) result = mod(F, mul(F, result, b), m);
        k >>= 1;
        if (k) b = mod(F, mul(F, b, b), m);
    }
    return result;
}

Elem eval(const Field& F, const UPoly& a, Elem x) {
    Elem r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

int valuation(const UPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) return int(i);
    return -1;
}

}  // namespace upoly

namespace {

Elem addp(Elem a, Elem b, std::uint32_t p) {
    Elem s = a + b;
    return s >= p ? s - p : s;
}
Elem mulp(Elem a, Elem b, std::uint32_t p) { return Elem(std::uint64_t(a) * b % p); }
Elem invp(Elem a, std::uint32_t p) {
    std::uint64_t r = 1, b = a;
    std::uint32_t k = p - 2;
    while (k) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return Elem(r);
}

void require_compatible(const HomPoly& a, const HomPoly& b) {
    if (a.p != b.p || a.nvars != b.nvars) throw std::invalid_argument("polynomials over different rings");
}

unsigned key_degree(HomPoly::Key k, std::uint32_t nvars) {
    unsigned d = 0;
    for (std::uint32_t i = 0; i < nvars; ++i) d += unsigned((k >> (HomPoly::kBits * i)) & 0xFFFF);
    return d;
}

bool key_divides(HomPoly::Key a, HomPoly::Key b, std::uint32_t nvars) {
    for (std::uint32_t i = 0; i < nvars; ++i) {
        unsigned sh = HomPoly::kBits * i;
        if (((a >> sh) & 0xFFFF) > ((b >> sh) & 0xFFFF)) return false;
    }
    return true;
}

// Merge of two descending term lists with coefficient of b scaled by c.
std::vector<std::pair<HomPoly::Key, Elem>> merge(const std::vector<std::pair<HomPoly::Key, Elem>>& a,
                                                 const std::vector<std::pair<HomPoly::Key, Elem>>& b, Elem c,
                                                 std::uint32_t p) {
    std::vector<std::pair<HomPoly::Key, Elem>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            Elem v = mulp(b[j].second, c, p);
            if (v) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Elem v = addp(a[i].second, mulp(b[j].second, c, p), p);
            if (v) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

HomPoly::HomPoly(std::uint32_t p_, std::uint32_t nvars_) : p(p_), nvars(nvars_) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("HomPoly supports 1 to 4 variables");
}

HomPoly::Key HomPoly::pack(const std::vector<std::uint32_t>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    Key k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > 0xFFFF) throw std::invalid_argument("exponent too large");
        k |= Key(exps[i]) << (kBits * (exps.size() - 1 - i));
    }
    return k;
}

std::vector<std::uint32_t> HomPoly::unpack(Key k) const {
    std::vector<std::uint32_t> e(nvars);
    for (std::uint32_t i = 0; i < nvars; ++i) e[i] = std::uint32_t((k >> (kBits * (nvars - 1 - i))) & 0xFFFF);
    return e;
}

HomPoly HomPoly::constant(std::uint32_t p, std::uint32_t nvars, std::int64_t c) {
    HomPoly h(p, nvars);
    std::int64_t r = c % std::int64_t(p);
    if (r < 0) r += p;
    if (r) h.terms.emplace_back(0, Elem(r));
    return h;
}

HomPoly HomPoly::variable(std::uint32_t p, std::uint32_t nvars, std::uint32_t i) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(i) = 1;
    HomPoly h(p, nvars);
    h.terms.emplace_back(pack(e), 1);
    return h;
}

HomPoly HomPoly::from_terms(std::uint32_t p, std::uint32_t nvars,
                            const std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>>& t) {
    HomPoly h(p, nvars);
    int deg = -1;
    std::vector<std::pair<Key, Elem>> raw;
    for (const auto& [exps, c] : t) {
        if (exps.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
        int d = 0;
        for (auto x : exps) d += int(x);
        std::int64_t r = c % std::int64_t(p);
        if (r < 0) r += p;
        if (r == 0) continue;
        if (deg >= 0 && d != deg) throw std::invalid_argument("polynomial is not homogeneous");
        deg = d;
        raw.emplace_back(pack(exps), Elem(r));
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& term : raw) {
        if (!h.terms.empty() && h.terms.back().first == term.first) {
            h.terms.back().second = addp(h.terms.back().second, term.second, p);
            if (!h.terms.back().second) h.terms.pop_back();
        } else {
            h.terms.push_back(term);
        }
    }
    return h;
}

int HomPoly::degree() const { return terms.empty() ? -1 : int(key_degree(terms[0].first, nvars)); }

namespace {

void require_same_degree(const HomPoly& a, const HomPoly& b) {
    require_compatible(a, b);
    if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
        throw std::domain_error("sum of forms of different degrees");
}

}  // namespace

Elem HomPoly::coefficient(const std::vector<std::uint32_t>& exps) const {
    Key k = pack(exps);
    for (const auto& t : terms)
        if (t.first == k) return t.second;
    return 0;
}

std::string HomPoly::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms) {
        if (!s.empty()) s += " + ";
        auto e = unpack(k);
        bool any = false;
        std::string mono;
        for (std::uint32_t i = 0; i < nvars; ++i) {
            if (!e[i]) continue;
            if (any) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            any = true;
        }
        if (!any) s += std::to_string(c);
        else if (c == 1) s += mono;
        else s += std::to_string(c) + "*" + mono;
    }
    return s;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    require_same_degree(a, b);
    HomPoly c(a.p, a.nvars);
    c.terms = merge(a.terms, b.terms, 1, a.p);
    return c;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) {
    require_same_degree(a, b);
    HomPoly c(a.p, a.nvars);
    c.terms = merge(a.terms, b.terms, a.p - 1, a.p);
    return c;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    require_compatible(a, b);
    HomPoly c(a.p, a.nvars);
    if (a.is_zero() || b.is_zero()) return c;
    std::vector<std::pair<HomPoly::Key, Elem>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) raw.emplace_back(ka + kb, mulp(ca, cb, a.p));
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& t : raw) {
        if (!c.terms.empty() && c.terms.back().first == t.first) {
            c.terms.back().second = addp(c.terms.back().second, t.second, a.p);
        } else {
            if (!c.terms.empty() && c.terms.back().second == 0) c.terms.pop_back();
            c.terms.push_back(t);
        }
    }
    if (!c.terms.empty() && c.terms.back().second == 0) c.terms.pop_back();
    return c;
}

HomPoly scale(const HomPoly& a, Elem s) {
    HomPoly c(a.p, a.nvars);
    s %= a.p;
    if (!s) return c;
    c.terms = a.terms;
    for (auto& t : c.terms) t.second = mulp(t.second, s, a.p);
    return c;
}

HomPoly exact_div(const HomPoly& a, const HomPoly& b) {
    require_compatible(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    HomPoly q(a.p, a.nvars);
    auto rem = a.terms;
    Elem lead_inv = invp(b.terms[0].second, a.p);
    HomPoly::Key lb = b.terms[0].first;
    while (!rem.empty()) {
        HomPoly::Key lr = rem[0].first;
        if (!key_divides(lb, lr, a.nvars)) throw std::domain_error("inexact polynomial division");
        HomPoly::Key kq = lr - lb;
        Elem cq = mulp(rem[0].second, lead_inv, a.p);
        q.terms.emplace_back(kq, cq);
        std::vector<std::pair<HomPoly::Key, Elem>> shifted;
        shifted.reserve(b.terms.size());
        for (const auto& [k, c] : b.terms) shifted.emplace_back(k + kq, c);
        rem = merge(rem, shifted, a.p - cq, a.p);
    }
    return q;
}

HomPoly monic(const HomPoly& a) {
    if (a.is_zero()) return a;
    return scale(a, invp(a.terms[0].second, a.p));
}

Elem evaluate(const HomPoly& a, const Field& F, const std::vector<Elem>& point) {
    if (point.size() != a.nvars) throw std::invalid_argument("evaluation point has wrong length");
    Elem s = 0;
    for (const auto& [k, c] : a.terms) {
        auto e = a.unpack(k);
        Elem t = c;
        for (std::uint32_t i = 0; i < a.nvars && t; ++i)
            if (e[i]) t = F.mul(t, F.pow(point[i], e[i]));
        s = F.add(s, t);
    }
    return s;
}

upoly::UPoly dehomogenize_first(const HomPoly& a) {
    if (a.nvars != 2) throw std::invalid_argument("dehomogenize needs two variables");
    upoly::UPoly g;
    for (const auto& [k, c] : a.terms) {
        auto e = a.unpack(k);
        if (g.size() <= e[1]) g.resize(e[1] + 1, 0);
        g[e[1]] = c;
    }
    upoly::trim(g);
    return g;
}

upoly::UPoly dehomogenize_second(const HomPoly& a) {
    if (a.nvars != 2) throw std::invalid_argument("dehomogenize needs two variables");
    upoly::UPoly g;
    for (const auto& [k, c] : a.terms) {
        auto e = a.unpack(k);
        if (g.size() <= e[0]) g.resize(e[0] + 1, 0);
        g[e[0]] = c;
    }
    upoly::trim(g);
    return g;
}

HomPoly homogenize(std::uint32_t p, const upoly::UPoly& g, unsigned shift) {
    HomPoly h(p, 2);
    int d = upoly::degree(g);
    for (int i = 0; i <= d; ++i) {
        if (!g[i]) continue;
        h.terms.emplace_back(HomPoly::pack({std::uint32_t(d - i + int(shift)), std::uint32_t(i)}), g[i] % p);
    }
    return h;
}

}  // namespace cjt
