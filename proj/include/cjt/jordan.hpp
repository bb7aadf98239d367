#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cjt/matrix.hpp"

namespace cjt {

// Block counts a_1..a_p of a nilpotent operator with blocks of size at most p.
struct JordanType {
    std::uint32_t p = 0;
    std::vector<std::uint64_t> counts;  // counts[i-1] = a_i

    JordanType() = default;
    explicit JordanType(std::uint32_t cap) : p(cap), counts(cap, 0) {}
    JordanType(std::uint32_t cap, std::vector<std::uint64_t> c);
    // {{size, multiplicity}, ...}
    static JordanType blocks(std::uint32_t cap, const std::vector<std::pair<std::uint32_t, std::uint64_t>>& b);

    std::uint64_t count(std::uint32_t size) const { return counts.at(size - 1); }
    std::uint64_t dim() const;
    // rank of a^j for j = 0..p
    std::vector<std::uint64_t> power_ranks() const;
    bool is_projective() const;
    // "3[3] + 2[2]", descending block size; "0" for the empty type.
    std::string pretty() const;

    bool operator==(const JordanType& o) const { return p == o.p && counts == o.counts; }
    bool operator!=(const JordanType& o) const { return !(*this == o); }
    bool operator<(const JordanType& o) const { return std::tie(p, counts) < std::tie(o.p, o.counts); }
};

enum class Dominance { GREATER, EQUAL, LESS, INCOMPARABLE };
const char* to_string(Dominance d);

JordanType from_ranks(std::uint32_t p, const std::vector<std::uint64_t>& ranks);
// Throws std::domain_error unless a^p = 0.
JordanType from_nilpotent(const Matrix& a, std::uint32_t p);
// Partition dominance (ranks of powers); throws on different dimensions or caps.
Dominance dominance_compare(const JordanType& a, const JordanType& b);
// a >= b in the dominance order (GREATER or EQUAL).
bool dominates(const JordanType& a, const JordanType& b);
JordanType stable(const JordanType& a);
JordanType tensor_type(const JordanType& a, const JordanType& b);
JordanType operator+(const JordanType& a, const JordanType& b);
JordanType parse_pretty(std::uint32_t p, const std::string& s);

}  // namespace cjt
