#include "admkit/partitions.hpp"

#include <map>
#include <vector>

namespace admkit {

namespace {

std::vector<std::uint64_t> build_vir_table() {
    // Multiply out prod_j (1-q^j)^-1 as a bounded knapsack.
    std::vector<std::uint64_t> p(kVirPartitionCutoff + 1, 0);
    p[0] = 1;
    for (long j = 1; j <= kVirPartitionCutoff; ++j)
        for (long n = j; n <= kVirPartitionCutoff; ++n) p[n] += p[n - j];
    return p;
}

std::vector<std::uint64_t> build_ns_table() {
    // Doubled grades: even parts 2j with unbounded multiplicity, odd parts
    // 2j-1 with multiplicity at most one.
    std::vector<std::uint64_t> p(kNsPartitionCutoffX2 + 1, 0);
    p[0] = 1;
    for (long j = 2; j <= kNsPartitionCutoffX2; j += 2)
        for (long n = j; n <= kNsPartitionCutoffX2; ++n) p[n] += p[n - j];
    for (long j = 1; j <= kNsPartitionCutoffX2; j += 2)
        for (long n = kNsPartitionCutoffX2; n >= j; --n) p[n] += p[n - j];
    return p;
}

// Table indexed by (b, a+b): a ranges over [-b, cutoff-b].
std::map<std::pair<long, long>, std::uint64_t> build_aff_table() {
    const long B = kAffPartitionCutoff;
    std::map<std::pair<long, long>, std::uint64_t> p;
    p[{0, 0}] = 1;
    // Roots ordered deterministically; each is a knapsack item with
    // unbounded multiplicity. alpha itself allows unbounded a at b=0, but
    // the a-range is capped by the cutoff on a+b and a >= -b.
    std::vector<std::pair<long, long>> roots;
    roots.push_back({1, 0});  // alpha
    for (long n = 1; n <= B; ++n) {
        roots.push_back({1, n});   // alpha + n delta
        roots.push_back({-1, n});  // -alpha + n delta
        roots.push_back({0, n});   // n delta
    }
    for (const auto& [ra, rb] : roots) {
        std::map<std::pair<long, long>, std::uint64_t> next = p;
        // Unbounded-knapsack sweep, in place on `next`, ascending in (b, a);
        // every predecessor (a-ra, b-rb) is final before (a, b) is touched.
        for (long b = 0; b <= B; ++b) {
            for (long a = -2 * B; a <= 2 * B; ++a) {
                long pa = a - ra, pb = b - rb;
                if (pb < 0 || pb > B || pa < -2 * B || pa > 2 * B) continue;
                auto it = next.find({pa, pb});
                if (it == next.end() || it->second == 0) continue;
                next[{a, b}] += it->second;
            }
        }
        p = std::move(next);
    }
    return p;
}

}  // namespace

std::uint64_t vir_partition(long n) {
    static const std::vector<std::uint64_t> table = build_vir_table();
    if (n < 0) return 0;
    if (n > kVirPartitionCutoff)
        throw CutoffError("vir_partition cutoff exceeded at n=" + std::to_string(n));
    return table[static_cast<size_t>(n)];
}

std::uint64_t ns_partition_x2(long n2) {
    static const std::vector<std::uint64_t> table = build_ns_table();
    if (n2 < 0) return 0;
    if (n2 > kNsPartitionCutoffX2)
        throw CutoffError("ns_partition cutoff exceeded at 2n=" + std::to_string(n2));
    return table[static_cast<size_t>(n2)];
}

std::uint64_t affine_sl2_partition(long a, long b) {
    static const auto table = build_aff_table();
    if (b < 0) return 0;
    if (a < -b) return 0;
    if (a + b > kAffPartitionCutoff || b > kAffPartitionCutoff)
        throw CutoffError("affine_sl2_partition cutoff exceeded");
    auto it = table.find({a, b});
    return it == table.end() ? 0 : it->second;
}

}  // namespace admkit
