#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kneser {

using BigCount = boost::multiprecision::cpp_int;

/// Thrown when a request exceeds a representation or configured size limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGroundSet = 64;

/// A k-element subset of the ground set {1..n}. Element i is bit i-1 of mask.
///
/// Colexicographic order on k-subsets coincides with numeric order of the
/// masks, so sorting masks sorts sets in colex order.
struct KSubset {
    std::uint64_t mask = 0;
    int n = 0;
    int k = 0;

    bool contains(int element) const { return (mask >> (element - 1)) & 1u; }
    std::vector<int> elements() const;
    std::string to_string() const;

    friend bool operator==(const KSubset&, const KSubset&) = default;
    friend auto operator<=>(const KSubset& a, const KSubset& b) { return a.mask <=> b.mask; }
};

/// Builds a subset from 1-based elements; throws std::domain_error on
/// duplicates or out-of-range elements.
KSubset make_subset(int n, const std::vector<int>& elements);

/// Validates a raw mask for ground set size n (bits above n must be clear).
KSubset subset_from_mask(int n, std::uint64_t mask);

/// Exact binomial that fits in 64 bits; only valid for a <= 64.
std::uint64_t binomial_u64(int a, int b);

/// Colex rank in 0..C(n,k)-1: sum over the i-th smallest element e_i of C(e_i - 1, i).
std::uint64_t rank(const KSubset& s);
KSubset unrank(int n, int k, std::uint64_t r);

/// Default cap on the number of subsets a single enumeration may materialize.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// All k-subsets of [n] in colex order (position == rank).
std::vector<KSubset> enumerate_ksubsets(int n, int k,
                                        std::uint64_t max_count = kDefaultEnumerationCap);

/// True iff no two elements are cyclically consecutive in 1..n.
/// The empty set and singletons are stable.
bool is_stable(const KSubset& s);

/// Stable k-subsets of [n] in colex order.
std::vector<KSubset> enumerate_stable_ksubsets(int n, int k,
                                               std::uint64_t max_count = kDefaultEnumerationCap);

/// Largest stable subset of the cycle 1..n contained in the given point mask.
int max_stable_subset_size(int n, std::uint64_t mask);

BigCount binomial_exact(std::int64_t a, std::int64_t b);

/// ln C(a, b) for 0 <= b <= a. Small-side products are summed term by term;
/// otherwise a long double log-gamma difference is used.
double ln_binomial(std::int64_t a, std::int64_t b);

/// Same quantity for real-valued arguments (used when t*d exceeds int64).
long double ln_binomial_real(long double a, long double b);

/// Natural log of a positive big integer, accurate to double precision.
double ln_big(const BigCount& x);

/// Ceiling division of nonnegative big integers.
BigCount ceil_div(const BigCount& num, const BigCount& den);

}  // namespace kneser
