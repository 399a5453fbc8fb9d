#include "qplab/multiset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qplab {

Multiset::Multiset(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("multiset must be nonempty");
    for (auto a : parts_)
        if (a < 1) throw std::invalid_argument("multiset parts must be positive integers");
    std::sort(parts_.begin(), parts_.end());
}

Multiset Multiset::parse(std::string_view csv) {
    std::vector<std::int64_t> parts;
    std::string token;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        std::size_t end = token.size();
        while (end > pos && std::isspace(static_cast<unsigned char>(token[end - 1]))) --end;
        token = token.substr(pos, end - pos);
        if (token.empty()) throw std::invalid_argument("empty entry in multiset literal");
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad multiset entry: " + token);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty multiset literal");
    return Multiset(std::move(parts));
}

Multiset Multiset::from_json_array(std::string_view json) {
    nlohmann::json arr = nlohmann::json::parse(json);
    if (!arr.is_array()) throw std::invalid_argument("multiset JSON must be an array of integers");
    std::vector<std::int64_t> parts;
    for (const auto& entry : arr) {
        if (!entry.is_number_integer())
            throw std::invalid_argument("multiset JSON must be an array of integers");
        parts.push_back(entry.get<std::int64_t>());
    }
    return Multiset(std::move(parts));
}

Int Multiset::lcm() const {
    Int acc(1);
    for (auto a : parts_) {
        Int z(static_cast<long>(a));
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), z.get_mpz_t());
    }
    return acc;
}

std::int64_t Multiset::gcd() const {
    std::int64_t g = 0;
    for (auto a : parts_) g = std::gcd(g, a);
    return g;
}

Int Multiset::power_sum(unsigned long m) const {
    Int acc(0);
    for (auto a : parts_) acc += int_pow(Int(static_cast<long>(a)), m);
    return acc;
}

Int Multiset::product() const {
    Int acc(1);
    for (auto a : parts_) acc *= Int(static_cast<long>(a));
    return acc;
}

std::string Multiset::canonical_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    return out.str();
}

bool Multiset::gcd_condition(std::size_t size) const {
    if (size < 1 || size > k())
        throw std::invalid_argument("gcd_condition: size out of range 1..k");
    // count, for each prime divisor of any part, how many parts it divides
    std::map<std::int64_t, std::size_t> divisible_count;
    for (auto a : parts_) {
        std::int64_t rest = a;
        for (std::int64_t p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                ++divisible_count[p];
                while (rest % p == 0) rest /= p;
            }
        }
        if (rest > 1) ++divisible_count[rest];
    }
    for (const auto& [prime, count] : divisible_count)
        if (count >= size) return false;
    return true;
}

}  // namespace qplab
