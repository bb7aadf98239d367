#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjt {

// Elements of GF(p^e) are stored as integer codes c_0 + c_1 p + ... + c_{e-1} p^{e-1}
// where c_i are the power-basis coefficients.  Prime-field residues keep the same
// code in every extension, so base change from GF(p) is the identity on codes.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Largest supported field order.  Extension fields keep log/antilog tables.
    static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 23;
    static constexpr std::uint32_t kMaxPrime = 65521;

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    bool is_prime() const { return e_ == 1; }
    // Monic modulus, low degree first, length e+1.  For e = 1 this is x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        if (e_ == 1) {
            std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return zech_add(a, b);
    }
    Elem neg(Elem a) const {
        if (a == 0) return 0;
        if (e_ == 1) return p_ - a;
        return neg_table_[a];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (e_ == 1) return Elem(std::uint64_t(a) * b % p_);
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    // Image of an integer under Z -> GF(p) -> GF(p^e).
    Elem from_int(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += p_;
        return Elem(r);
    }
    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;
    bool in_prime_field(Elem a) const { return a < p_; }

    // Generator of the multiplicative group (extension fields and small primes).
    Elem primitive() const { return primitive_; }

    // Dense tables for fast row operations on small extension fields; empty otherwise.
    const std::vector<Elem>& add_table() const { return add_table_; }
    const std::vector<Elem>& mul_table() const { return mul_table_; }

    bool same(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
    std::string name() const;

    Field(std::uint32_t p, std::uint32_t e);

private:
    Elem zech_add(Elem a, Elem b) const;

    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 1;
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<Elem> exp_;            // length 2(q-1), exp_[k] = g^k
    std::vector<std::uint32_t> zech_;  // zech_[n] = log(1 + g^n), kNoLog if zero
    std::vector<Elem> neg_table_;
    std::vector<Elem> inv_table_;
    std::vector<Elem> add_table_, mul_table_;
};

bool is_prime(std::uint64_t n);

// Memoized; the same (p, e) always yields the same object.
FieldPtr make_field(std::uint64_t p, std::int64_t e);

// Polynomial helpers over GF(p) on coefficient vectors (low degree first), used for
// modulus selection and exposed for tests.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace cjt
