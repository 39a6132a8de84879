#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace admkit {

struct CutoffError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Graded dimensions of the negative parts of the three algebras, i.e. the
// partition functions appearing in the determinant formulas. Tables are
// built once on first use (thread-safe magic statics) up to fixed cutoffs;
// exceeding a cutoff throws CutoffError, never truncates.

inline constexpr long kVirPartitionCutoff = 64;
inline constexpr long kNsPartitionCutoffX2 = 64;  // grades are stored doubled
inline constexpr long kAffPartitionCutoff = 12;   // bound on a+b

// Number of integer partitions of n.
std::uint64_t vir_partition(long n);

// Coefficient of q^(n2/2) in prod (1-q^j)^-1 (1+q^(j-1/2)); n2 = doubled grade.
std::uint64_t ns_partition_x2(long n2);

// Number of multisets of positive roots of affine sl2 summing to a*alpha+b*delta.
// Roots: alpha+n*delta (n>=0), -alpha+n*delta (n>=1), n*delta (n>=1, mult 1).
// a may be negative (down to -b); b must be nonnegative.
std::uint64_t affine_sl2_partition(long a, long b);

}  // namespace admkit
