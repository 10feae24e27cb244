#include "kneser/setfam.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace kneser {

namespace {

std::uint64_t ground_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_ground(int n, int k) {
    if (n > kMaxGroundSet)
        throw CapacityError("ground set size " + std::to_string(n) + " exceeds 64");
    if (n < 0 || k < 0)
        throw std::domain_error("n and k must be nonnegative");
    if (k > n)
        throw std::domain_error("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

// Next mask with the same popcount (Gosper's hack). Returns 0 past the last
// subset of [n].
std::uint64_t next_same_popcount(std::uint64_t x, int n) {
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    if (ripple == 0) return 0;  // overflowed past bit 63
    std::uint64_t next = (((ripple ^ x) >> 2) / low) | ripple;
    if (n < 64 && (next >> n) != 0) return 0;
    return next;
}

template <class Keep>
std::vector<KSubset> enumerate_filtered(int n, int k, std::uint64_t max_count, Keep keep) {
    check_ground(n, k);
    std::vector<KSubset> out;
    if (k == 0) {
        KSubset empty{0, n, 0};
        if (keep(empty)) out.push_back(empty);
        return out;
    }
    std::uint64_t x = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (x != 0) {
        KSubset s{x, n, k};
        if (keep(s)) {
            if (out.size() >= max_count)
                throw CapacityError("enumeration exceeds " + std::to_string(max_count) + " subsets");
            out.push_back(s);
        }
        if (k == 64) break;
        x = next_same_popcount(x, n);
    }
    return out;
}

}  // namespace

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(k);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string KSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

KSubset make_subset(int n, const std::vector<int>& elements) {
    check_ground(n, 0);
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw std::domain_error("element out of range 1..n");
        const std::uint64_t bit = std::uint64_t{1} << (e - 1);
        if (mask & bit) throw std::domain_error("duplicate element");
        mask |= bit;
    }
    return KSubset{mask, n, static_cast<int>(elements.size())};
}

KSubset subset_from_mask(int n, std::uint64_t mask) {
    check_ground(n, 0);
    if ((mask & ~ground_mask(n)) != 0) throw std::domain_error("mask has bits outside 1..n");
    return KSubset{mask, n, std::popcount(mask)};
}

std::uint64_t binomial_u64(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (a > 64) throw CapacityError("binomial_u64 requires a <= 64");
    b = std::min(b, a - b);
    // C(64,32) < 2^63; the running product C(a-b+i, i) stays exact in 128 bits.
    unsigned __int128 r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t rank(const KSubset& s) {
    std::uint64_t r = 0;
    int i = 1;
    for (std::uint64_t m = s.mask; m != 0; m &= m - 1, ++i) r += binomial_u64(std::countr_zero(m), i);
    return r;
}

KSubset unrank(int n, int k, std::uint64_t r) {
    check_ground(n, k);
    if (r >= binomial_u64(n, k)) throw std::out_of_range("rank out of range");
    std::uint64_t mask = 0;
    int hi = n;
    for (int i = k; i >= 1; --i) {
        // largest c < hi with C(c, i) <= r
        int c = hi - 1;
        while (binomial_u64(c, i) > r) --c;
        mask |= std::uint64_t{1} << c;
        r -= binomial_u64(c, i);
        hi = c;
    }
    return KSubset{mask, n, k};
}

std::vector<KSubset> enumerate_ksubsets(int n, int k, std::uint64_t max_count) {
    check_ground(n, k);
    if (binomial_u64(n, k) > max_count)
        throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds enumeration cap");
    return enumerate_filtered(n, k, max_count, [](const KSubset&) { return true; });
}

bool is_stable(const KSubset& s) {
    if (s.k <= 1) return true;
    const std::uint64_t all = ground_mask(s.n);
    // rotate left by one within n bits: element i -> i+1, element n -> 1
    const std::uint64_t rotated = ((s.mask << 1) | (s.mask >> (s.n - 1))) & all;
    return (s.mask & rotated) == 0;
}

namespace {

// Appends, in increasing mask order, every r-subset of {1..top} with no two
// consecutive elements (not cyclically), OR-ed with `upper`. Element 1 is
// skipped when avoid_first is set.
void stable_paths(int top, int r, bool avoid_first, std::uint64_t upper, int n, int k,
                  std::uint64_t max_count, std::vector<KSubset>& out) {
    if (r == 0) {
        if (out.size() >= max_count)
            throw CapacityError("enumeration exceeds " + std::to_string(max_count) + " subsets");
        out.push_back(KSubset{upper, n, k});
        return;
    }
    for (int e = 2 * r - 1; e <= top; ++e) {
        if (e == 1 && avoid_first) continue;
        stable_paths(e - 2, r - 1, avoid_first, upper | (std::uint64_t{1} << (e - 1)), n, k, max_count, out);
    }
}

}  // namespace

std::vector<KSubset> enumerate_stable_ksubsets(int n, int k, std::uint64_t max_count) {
    check_ground(n, k);
    std::vector<KSubset> out;
    if (k <= 1) return enumerate_ksubsets(n, k, max_count);
    // Largest element below n: ordinary path condition on 1..n-1.
    // Largest element n: the rest must also avoid 1 (cyclic neighbour of n).
    for (int e = 2 * k - 1; e <= n; ++e) {
        const bool top_is_n = (e == n);
        stable_paths(e - 2, k - 1, top_is_n, std::uint64_t{1} << (e - 1), n, k, max_count, out);
    }
    return out;
}

int max_stable_subset_size(int n, std::uint64_t mask) {
    mask &= ground_mask(n);
    if (mask == 0) return 0;
    if (mask == ground_mask(n)) return n == 1 ? 1 : n / 2;
    // Rotate so that position 0 is absent; then runs of consecutive points
    // are paths and a path of m points holds ceil(m/2) stable points.
    int start = 0;
    while ((mask >> start) & 1u) ++start;
    int total = 0;
    int run = 0;
    for (int step = 1; step <= n; ++step) {
        const int pos = (start + step) % n;
        if ((mask >> pos) & 1u) {
            ++run;
        } else {
            total += (run + 1) / 2;
            run = 0;
        }
    }
    return total + (run + 1) / 2;
}

BigCount binomial_exact(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::domain_error("binomial arguments must be nonnegative");
    if (b > a) return 0;
    b = std::min(b, a - b);
    BigCount r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

long double ln_binomial_real(long double a, long double b) {
    if (b < 0 || b > a) throw std::domain_error("ln_binomial requires 0 <= b <= a");
    const long double small = std::min(b, a - b);
    if (small == 0) return 0.0L;
    if (small <= 64 && small == std::floor(small)) {
        long double s = 0;
        const long double base = a - small;
        for (long double i = 1; i <= small; i += 1) s += std::log1p(base / i);
        return s;
    }
    return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
}

double ln_binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) throw std::domain_error("ln_binomial requires 0 <= b <= a");
    return static_cast<double>(ln_binomial_real(static_cast<long double>(a), static_cast<long double>(b)));
}

double ln_big(const BigCount& x) {
    if (x <= 0) throw std::domain_error("ln_big requires a positive argument");
    const auto bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
    if (bits <= 64) return std::log(static_cast<double>(x.convert_to<std::uint64_t>()));
    const long shift = bits - 64;
    const BigCount top = x >> shift;
    return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
           static_cast<double>(shift) * std::log(2.0);
}

BigCount ceil_div(const BigCount& num, const BigCount& den) {
    if (den <= 0) throw std::domain_error("ceil_div requires a positive divisor");
    return (num + den - 1) / den;
}

}  // namespace kneser
