#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qplab/rational.hpp"

namespace qplab {

// Finite multiset A of positive integers; duplicate values are kept and
// act as distinguishable part sources.
class Multiset {
public:
    explicit Multiset(std::vector<std::int64_t> parts);

    // "1,1,1,1,300" (whitespace tolerated around entries)
    static Multiset parse(std::string_view csv);

    // JSON array of positive integers, e.g. "[1,1,1,1,300]"
    static Multiset from_json_array(std::string_view json);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t k() const { return parts_.size(); }

    Int lcm() const;
    std::int64_t gcd() const;
    Int power_sum(unsigned long m) const;  // s_m = sum a_i^m
    Int product() const;

    // Sorted parts joined with commas; the cache/reporting key.
    std::string canonical_string() const;

    // True iff every multisubset of the given size has gcd 1. Prime
    // criterion: fails iff some prime divides at least `size` elements.
    bool gcd_condition(std::size_t size) const;

    bool operator==(const Multiset& rhs) const { return parts_ == rhs.parts_; }

private:
    std::vector<std::int64_t> parts_;  // sorted ascending
};

}  // namespace qplab
