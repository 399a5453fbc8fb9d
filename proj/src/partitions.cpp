#include "qplab/partitions.hpp"

#include <stdexcept>

namespace qplab {

PartitionSeries series(const Multiset& A, long N) {
    if (N < 0) throw std::invalid_argument("series: N must be >= 0");
    std::vector<Int> v(static_cast<std::size_t>(N) + 1, Int(0));
    v[0] = 1;
    for (auto a : A.parts())
        for (long n = a; n <= N; ++n)
            v[static_cast<std::size_t>(n)] += v[static_cast<std::size_t>(n - a)];
    return PartitionSeries{A, std::move(v)};
}

namespace {
Int count_from(const std::vector<std::int64_t>& parts, std::size_t idx, long remaining) {
    if (remaining == 0) return 1;
    if (idx == parts.size()) return 0;
    Int total(0);
    for (long used = 0; used <= remaining; used += parts[idx])
        total += count_from(parts, idx + 1, remaining - used);
    return total;
}
}  // namespace

Int brute_force_count(const Multiset& A, long n) {
    if (n < 0) return 0;
    return count_from(A.parts(), 0, n);
}

}  // namespace qplab
