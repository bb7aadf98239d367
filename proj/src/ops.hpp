#pragma once

// Row kernels specialised by field type.  Small primes get compile-time moduli so the
// inner loops vectorise; small extension fields use dense add/mul tables.

#include <cstddef>
#include <cstdint>

#include "cjt/field.hpp"

namespace cjt::detail {

template <std::uint32_t P>
struct FixedPrimeOps {
    static constexpr bool kLazyAccumulate = true;
    Elem add(Elem a, Elem b) const { return (a + b) % P; }
    Elem mul(Elem a, Elem b) const { return (a * b) % P; }
    Elem neg(Elem a) const { return a == 0 ? 0 : P - a; }
    Elem inv(Elem a) const {
        Elem r = 1, b = a;
        std::uint32_t k = P - 2;
        while (k) {
            if (k & 1) r = r * b % P;
            b = b * b % P;
            k >>= 1;
        }
        return r;
    }
    // dst += f * src
    void axpy(Elem* __restrict dst, const Elem* __restrict src, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + f * src[i]) % P;
    }
    void scale(Elem* dst, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] * f) % P;
    }
    // Unreduced accumulation; (P-1)^2 * n stays below 2^32 for every realistic n.
    void acc(std::uint32_t* __restrict dst, const Elem* __restrict src, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] += f * src[i];
    }
    void reduce(const std::uint32_t* src, Elem* dst, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] % P;
    }
};

struct RuntimePrimeOps {
    static constexpr bool kLazyAccumulate = false;
    std::uint32_t p;
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        std::uint64_t r = 1, b = a;
        std::uint32_t k = p - 2;
        while (k) {
            if (k & 1) r = r * b % p;
            b = b * b % p;
            k >>= 1;
        }
        return Elem(r);
    }
    void axpy(Elem* __restrict dst, const Elem* __restrict src, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = Elem((dst[i] + std::uint64_t(f) * src[i]) % p);
    }
    void scale(Elem* dst, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = Elem(std::uint64_t(dst[i]) * f % p);
    }
};

struct TableOps {
    static constexpr bool kLazyAccumulate = false;
    const Field* F;
    const Elem* addt;
    const Elem* mult;
    std::size_t q;
    Elem add(Elem a, Elem b) const { return addt[a * q + b]; }
    Elem mul(Elem a, Elem b) const { return mult[a * q + b]; }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem inv(Elem a) const { return F->inv(a); }
    void axpy(Elem* __restrict dst, const Elem* __restrict src, Elem f, std::size_t n) const {
        const Elem* mrow = mult + f * q;
        for (std::size_t i = 0; i < n; ++i) dst[i] = addt[dst[i] * q + mrow[src[i]]];
    }
    void scale(Elem* dst, Elem f, std::size_t n) const {
        const Elem* mrow = mult + f * q;
        for (std::size_t i = 0; i < n; ++i) dst[i] = mrow[dst[i]];
    }
};

struct GenericOps {
    static constexpr bool kLazyAccumulate = false;
    const Field* F;
    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem inv(Elem a) const { return F->inv(a); }
    void axpy(Elem* dst, const Elem* src, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i)
            if (src[i]) dst[i] = F->add(dst[i], F->mul(f, src[i]));
    }
    void scale(Elem* dst, Elem f, std::size_t n) const {
        for (std::size_t i = 0; i < n; ++i) dst[i] = F->mul(dst[i], f);
    }
};

template <class Fn>
decltype(auto) with_ops(const Field& F, Fn&& fn) {
    if (F.e() == 1) {
        switch (F.p()) {
            case 2: return fn(FixedPrimeOps<2>{});
            case 3: return fn(FixedPrimeOps<3>{});
            case 5: return fn(FixedPrimeOps<5>{});
            case 7: return fn(FixedPrimeOps<7>{});
            default: return fn(RuntimePrimeOps{F.p()});
        }
    }
    if (!F.mul_table().empty())
        return fn(TableOps{&F, F.add_table().data(), F.mul_table().data(), F.q()});
    return fn(GenericOps{&F});
}

}  // namespace cjt::detail
