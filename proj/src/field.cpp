#include "cjt/field.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace cjt {

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

using Poly = std::vector<std::uint32_t>;  // over GF(p), low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t qt = r / nr;
        std::int64_t tmp = t - qt * nt;
        t = nt;
        nt = tmp;
        tmp = r - qt * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return std::uint32_t(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    std::size_t dm = m.size() - 1;
    std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            std::uint64_t sub = std::uint64_t(c) * m[i] % p;
            a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(base, m, p);
    while (k) {
        if (k & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        k >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    Poly f = monic;
    trim(f);
    if (f.size() < 2) return false;
    std::size_t n = f.size() - 1;
    if (n == 1) return true;
    // No factor of degree d <= n/2  <=>  gcd(x^{p^d} - x, f) = 1 for those d.
    Poly x{0, 1};
    Poly xp = x;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        xp = poly_powmod(xp, p, f, p);
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    q_ = std::uint32_t(q);

    if (e == 1) {
        modulus_ = {0, 1};
        inv_table_.assign(p, 0);
        for (std::uint32_t a = 1; a < p; ++a) inv_table_[a] = inv_mod(a, p);
        auto factors = prime_factors(p - 1);
        for (std::uint32_t g = 1; g < p; ++g) {
            bool ok = true;
            for (auto f : factors) {
                std::uint64_t r = 1, b = g, k = (p - 1) / f;
                while (k) {
                    if (k & 1) r = r * b % p;
                    b = b * b % p;
                    k >>= 1;
                }
                if (r == 1) { ok = false; break; }
            }
            if (ok) { primitive_ = g; break; }
        }
        return;
    }

    // Smallest integer code among monic irreducibles: coefficient c_{e-1} most significant.
    Poly mod(e + 1, 0);
    for (std::uint64_t code = 0; code < q; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < e; ++i) {
            mod[i] = std::uint32_t(c % p);
            c /= p;
        }
        mod[e] = 1;
        if (is_irreducible_mod_p(mod, p)) break;
    }
    modulus_ = mod;

    auto to_poly = [&](std::uint64_t code) {
        Poly a(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            a[i] = std::uint32_t(code % p);
            code /= p;
        }
        trim(a);
        return a;
    };
    auto to_code = [&](const Poly& a) {
        std::uint64_t code = 0;
        for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
        return Elem(code);
    };

    auto factors = prime_factors(q - 1);
    for (std::uint64_t cand = p; cand < q; ++cand) {
        Poly g = to_poly(cand);
        bool ok = true;
        for (auto f : factors) {
            Poly r = poly_powmod(g, (q - 1) / f, modulus_, p);
            if (r.size() == 1 && r[0] == 1) { ok = false; break; }
        }
        if (ok) { primitive_ = Elem(cand); break; }
    }

    // exp table by repeated multiplication with the generator, digit-wise.
    std::uint32_t n = q_ - 1;
    exp_.assign(2 * std::size_t(n), 0);
    log_.assign(q_, kNoLog);
    Poly gp = to_poly(primitive_);
    Poly cur{1};
    for (std::uint32_t k = 0; k < n; ++k) {
        Elem code = to_code(cur);
        exp_[k] = code;
        exp_[k + n] = code;
        log_[code] = k;
        cur = poly_mulmod(cur, gp, modulus_, p);
    }
    zech_.assign(n, kNoLog);
    for (std::uint32_t k = 0; k < n; ++k) {
        Elem c = exp_[k];
        std::uint32_t c0 = c % p;
        Elem c1 = c - c0 + (c0 + 1) % p;
        zech_[k] = c1 == 0 ? kNoLog : log_[c1];
    }
    neg_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t x = a, mult = 1, out = 0;
        for (std::uint32_t i = 0; i < e; ++i) {
            std::uint32_t d = x % p;
            x /= p;
            out += ((p - d) % p) * mult;
            mult *= p;
        }
        neg_table_[a] = out;
    }
    if (q_ <= 1024) {
        std::size_t qq = q_;
        add_table_.assign(qq * qq, 0);
        mul_table_.assign(qq * qq, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * qq + b] = zech_add(a, b);
                mul_table_[a * qq + b] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
            }
    }
}

Elem Field::zech_add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t n = q_ - 1;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + n - la;
    std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (e_ == 1) return inv_table_[a];
    std::uint32_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("expected " + std::to_string(e_) + " coefficients");
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        code = code * p_ + c[i];
    }
    return Elem(code);
}

std::string Field::name() const {
    return "GF(" + std::to_string(p_) + (e_ > 1 ? "^" + std::to_string(e_) : std::string()) + ")";
}

FieldPtr make_field(std::uint64_t p, std::int64_t e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
    if (p > Field::kMaxPrime) throw std::invalid_argument("characteristic too large");
    std::uint64_t q = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > Field::kMaxOrder) throw std::invalid_argument("field order exceeds supported size");
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, std::int64_t>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(std::uint32_t(p), std::uint32_t(e));
    cache.emplace(key, f);
    return f;
}

}  // namespace cjt
