#include "cjt/jordan.hpp"

#include <regex>
#include <stdexcept>
#include <tuple>

namespace cjt {

JordanType::JordanType(std::uint32_t cap, std::vector<std::uint64_t> c) : p(cap), counts(std::move(c)) {
    if (counts.size() != p) throw std::invalid_argument("Jordan type needs exactly p counts");
}

JordanType JordanType::blocks(std::uint32_t cap, const std::vector<std::pair<std::uint32_t, std::uint64_t>>& b) {
    JordanType t(cap);
    for (auto [size, mult] : b) {
        if (size < 1 || size > cap) throw std::invalid_argument("block size out of range");
        t.counts[size - 1] += mult;
    }
    return t;
}

std::uint64_t JordanType::dim() const {
    std::uint64_t d = 0;
    for (std::uint32_t i = 1; i <= p; ++i) d += i * counts[i - 1];
    return d;
}

std::vector<std::uint64_t> JordanType::power_ranks() const {
    // rank a^j = sum over blocks of size i > j of (i - j)
    std::vector<std::uint64_t> r(p + 1, 0);
    for (std::uint32_t j = 0; j <= p; ++j)
        for (std::uint32_t i = j + 1; i <= p; ++i) r[j] += (i - j) * counts[i - 1];
    return r;
}

bool JordanType::is_projective() const {
    for (std::uint32_t i = 1; i < p; ++i)
        if (counts[i - 1]) return false;
    return true;
}

std::string JordanType::pretty() const {
    std::string s;
    for (std::uint32_t i = p; i >= 1; --i) {
        if (!counts[i - 1]) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(counts[i - 1]) + "[" + std::to_string(i) + "]";
    }
    return s.empty() ? "0" : s;
}

const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::GREATER: return "GREATER";
        case Dominance::EQUAL: return "EQUAL";
        case Dominance::LESS: return "LESS";
        case Dominance::INCOMPARABLE: return "INCOMPARABLE";
    }
    return "?";
}

JordanType from_ranks(std::uint32_t p, const std::vector<std::uint64_t>& ranks) {
    auto rk = [&](std::size_t j) -> std::int64_t { return j < ranks.size() ? std::int64_t(ranks[j]) : 0; };
    JordanType t(p);
    for (std::uint32_t j = 1; j <= p; ++j) {
        std::int64_t a = rk(j - 1) - 2 * rk(j) + rk(j + 1);
        if (a < 0) throw std::logic_error("inconsistent rank sequence");
        t.counts[j - 1] = std::uint64_t(a);
    }
    return t;
}

JordanType from_nilpotent(const Matrix& a, std::uint32_t p) {
    auto r = cjt::power_ranks(a, p);
    if (r.back() != 0) throw std::domain_error("matrix is not nilpotent of order at most p");
    std::vector<std::uint64_t> ranks(r.begin(), r.end());
    return from_ranks(p, ranks);
}

Dominance dominance_compare(const JordanType& a, const JordanType& b) {
    if (a.p != b.p) throw std::invalid_argument("dominance_compare: block-size caps differ");
    if (a.dim() != b.dim()) throw std::invalid_argument("dominance_compare: dimensions differ");
    if (a.counts == b.counts) return Dominance::EQUAL;
    // Partition dominance, read through ranks of powers: a >= b iff rank a^j >= rank b^j for all j.
    // The weighted tail sums sum_{i>=j} i a_i are not equivalent to this order.
    auto ra = a.power_ranks(), rb = b.power_ranks();
    bool ge = true, le = true;
    for (std::uint32_t j = 1; j < a.p; ++j) {
        if (ra[j] < rb[j]) ge = false;
        if (ra[j] > rb[j]) le = false;
    }
    if (ge) return Dominance::GREATER;
    if (le) return Dominance::LESS;
    return Dominance::INCOMPARABLE;
}

bool dominates(const JordanType& a, const JordanType& b) {
    auto d = dominance_compare(a, b);
    return d == Dominance::GREATER || d == Dominance::EQUAL;
}

JordanType stable(const JordanType& a) {
    JordanType s = a;
    if (s.p) s.counts[s.p - 1] = 0;
    return s;
}

JordanType tensor_type(const JordanType& a, const JordanType& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor_type: block-size caps differ");
    std::uint32_t p = a.p;
    JordanType t(p);
    for (std::uint32_t x = 1; x <= p; ++x) {
        if (!a.counts[x - 1]) continue;
        for (std::uint32_t y = 1; y <= p; ++y) {
            if (!b.counts[y - 1]) continue;
            std::uint64_t mult = a.counts[x - 1] * b.counts[y - 1];
            std::uint32_t i = std::min(x, y), j = std::max(x, y);
            // signed: the non-projective range is empty when j = p
            std::int64_t top = i + j <= p ? std::int64_t(j + i) - 1 : 2 * std::int64_t(p) - 1 - i - j;
            for (std::int64_t s = j - i + 1; s <= top; s += 2) t.counts[std::size_t(s - 1)] += mult;
            if (i + j > p) t.counts[p - 1] += mult * (i + j - p);
        }
    }
    return t;
}

JordanType operator+(const JordanType& a, const JordanType& b) {
    if (a.p != b.p) throw std::invalid_argument("sum of Jordan types with different caps");
    JordanType t = a;
    for (std::uint32_t i = 0; i < a.p; ++i) t.counts[i] += b.counts[i];
    return t;
}

JordanType parse_pretty(std::uint32_t p, const std::string& s) {
    JordanType t(p);
    if (s == "0") return t;
    static const std::regex term(R"(\s*(\d+)\s*\[\s*(\d+)\s*\]\s*(\+|$))");
    auto it = std::sregex_iterator(s.begin(), s.end(), term);
    std::size_t consumed = 0;
    for (; it != std::sregex_iterator(); ++it) {
        if (std::size_t(it->position()) != consumed) break;
        std::uint64_t m = std::stoull((*it)[1]);
        std::uint32_t size = std::uint32_t(std::stoul((*it)[2]));
        if (size < 1 || size > p) throw std::invalid_argument("block size out of range in '" + s + "'");
        t.counts[size - 1] += m;
        consumed += it->length();
    }
    if (consumed != s.size()) throw std::invalid_argument("cannot parse Jordan type '" + s + "'");
    return t;
}

}  // namespace cjt
