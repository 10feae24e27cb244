#include "kneser/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace kneser {

namespace {

const long double kLn3 = std::log(3.0L);

long double to_ld(const BigCount& x) { return x.convert_to<long double>(); }

// ln(exp(a) + exp(b))
long double log_add(long double a, long double b) {
    const long double hi = std::max(a, b);
    const long double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double rhs_from(std::int64_t n, std::int64_t d, const BigCount& t) {
    const long double ln_t = ln_big(t);
    const long double term1 = std::exp(std::log(static_cast<long double>(n)) + std::log(kLn3) - 2 * ln_t);
    const long double term2 = 2 * std::exp(std::log1p(std::log(static_cast<long double>(d))) - ln_t);
    return static_cast<double>(term1 + term2);
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("0 ≤ p ≤ 1");
}

std::int64_t max_ell(std::int64_t n, std::int64_t k) {
    // d >= 2  <=>  l <= (n - 2k - 1) / 2
    const std::int64_t top = n - 2 * k - 1;
    return top < 2 ? 0 : top / 2;
}

bool holds_at(std::int64_t n, std::int64_t k, std::int64_t ell, double lhs) {
    const auto dp = derived_params(n, k, ell);
    return lhs > rhs_from(n, dp.d, dp.t);
}

GapResult gap_for(std::int64_t n, std::int64_t k, std::int64_t ell) {
    return {ell, 2 * ell, n - 2 * k - 2 * ell + 2};
}

}  // namespace

DerivedParams derived_params(std::int64_t n, std::int64_t k, std::int64_t ell) {
    if (k < 2) throw PreconditionError("k ≥ 2");
    if (ell < 1) throw PreconditionError("ℓ ≥ 1");
    const std::int64_t d = n - 2 * k - 2 * ell + 1;
    if (d < 2) throw PreconditionError("d ≥ 2");
    return {d, ceil_div(binomial_exact(k + ell, k), BigCount(d))};
}

double condition_rhs(std::int64_t n, std::int64_t k, std::int64_t ell) {
    const auto dp = derived_params(n, k, ell);
    return rhs_from(n, dp.d, dp.t);
}

DerivedParams TheoremParams::validate() const {
    auto dp = derived_params(n, k, ell);
    check_probability(p);
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("0 < ε < 1");
    return dp;
}

bool condition_holds(const TheoremParams& params) {
    const auto dp = params.validate();
    return (1.0 - params.eps) * params.p > rhs_from(params.n, dp.d, dp.t);
}

double ln_g(const BigCount& t1, const BigCount& t2, std::int64_t d, double p) {
    check_probability(p);
    if (t1 < 1 || t2 < 1) throw std::domain_error("t1 and t2 must be at least 1");
    if (d < 2) throw PreconditionError("d ≥ 2");
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    const long double a = to_ld(t1), b = to_ld(t2), dd = static_cast<long double>(d);
    const long double value = ln_binomial_real(a * dd, a) + ln_binomial_real(b * dd, b) +
                              a * b * std::log1p(-static_cast<long double>(p));
    return static_cast<double>(value);
}

namespace {

// sum_{i=1..m} log1p(i / base)
long double sum_log1p(long double m, long double base) {
    if (m / base > 1e-4L) {
        if (m > 4096) return std::lgamma(base + m + 1) - std::lgamma(base + 1) - m * std::log(base);
        long double acc = 0;
        for (long double i = 1; i <= m; ++i) acc += std::log1p(i / base);
        return acc;
    }
    // x <= 1e-4: three series terms leave an error below m x^4
    const long double s1 = m * (m + 1) / 2, s2 = s1 * (2 * m + 1) / 3, s3 = s1 * s1;
    return s1 / base - s2 / (2 * base * base) + s3 / (3 * base * base * base);
}

}  // namespace

double ln_g_step(const BigCount& t, std::int64_t d, double p) {
    check_probability(p);
    if (t < 1) throw std::domain_error("t must be at least 1");
    if (d < 2) throw PreconditionError("d ≥ 2");
    // C((t+1)d, t+1) / C(td, t) = prod_{i<=d} (td+i) / ((t+1) prod_{i<d} (t(d-1)+i))
    const long double tt = to_ld(t), dd = static_cast<long double>(d);
    const long double ratio = dd * std::log(dd) - (dd - 1) * std::log(dd - 1) - std::log1p(1 / tt) +
                              sum_log1p(dd, tt * dd) - sum_log1p(dd - 1, tt * (dd - 1));
    return static_cast<double>(ratio + tt * std::log1p(-static_cast<long double>(p)));
}

bool g_is_decreasing(std::int64_t d, const BigCount& t, double p) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    if (d < 2) throw PreconditionError("d ≥ 2");
    return static_cast<long double>(p) > (1 + std::log(static_cast<long double>(d))) / to_ld(t);
}

double ln_pA_first_bound(std::int64_t n_, std::int64_t k, std::int64_t ell, double p_) {
    const auto dp = derived_params(n_, k, ell);
    check_probability(p_);
    const long double n = static_cast<long double>(n_);
    const long double t = to_ld(dp.t);
    const long double d = static_cast<long double>(dp.d);
    const long double log_comp = p_ == 1.0 ? -std::numeric_limits<long double>::infinity() : std::log1p(-static_cast<long double>(p_));
    return static_cast<double>(n * kLn3 + 2 * ln_binomial_real(t * d, t) + t * t * log_comp);
}

PABoundChain ln_pA_bound(const TheoremParams& params) {
    const auto dp = params.validate();
    const long double n = static_cast<long double>(params.n);
    const long double t = to_ld(dp.t);
    const long double d = static_cast<long double>(dp.d);
    const long double p = params.p;

    PABoundChain c;
    c.l1 = ln_pA_first_bound(params.n, params.k, params.ell, params.p);
    if (!condition_holds(params)) return c;
    c.l2 = static_cast<double>(n * kLn3 + 2 * t * (1 + std::log(d)) - p * t * t);
    c.l3 = static_cast<double>(-t * t * static_cast<long double>(params.eps) * p);
    c.l4 = static_cast<double>(-static_cast<long double>(params.eps) * n * kLn3);
    c.conclusive = true;
    return c;
}

std::optional<GapResult> best_gap_linear(std::int64_t n, std::int64_t k, double p, double eps) {
    if (k < 2) throw PreconditionError("k ≥ 2");
    const double lhs = (1.0 - eps) * p;
    for (std::int64_t ell = 1; ell <= max_ell(n, k); ++ell)
        if (holds_at(n, k, ell, lhs)) return gap_for(n, k, ell);
    return std::nullopt;
}

// The rhs is non-increasing in l: C(k+l, k) grows and d shrinks, so t never
// decreases, and ln d decreases. The condition is therefore monotone in l and
// its first success can be bisected.
std::optional<GapResult> best_gap(std::int64_t n, std::int64_t k, double p, double eps) {
    if (k < 2) throw PreconditionError("k ≥ 2");
    constexpr std::int64_t kLinearRange = 4096;
    const std::int64_t top = max_ell(n, k);
    if (top <= kLinearRange) return best_gap_linear(n, k, p, eps);
    const double lhs = (1.0 - eps) * p;
    if (!holds_at(n, k, top, lhs)) return std::nullopt;
    std::int64_t lo = 1, hi = top;  // invariant: holds at hi
    if (holds_at(n, k, lo, lhs)) return gap_for(n, k, lo);
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (holds_at(n, k, mid, lhs))
            hi = mid;
        else
            lo = mid;
    }
    return gap_for(n, k, hi);
}

RegimeReport corollary_regime_report(std::int64_t n, std::int64_t k, double p, double eps,
                                     std::span<const std::int64_t> extra_ells) {
    if (k < 2) throw PreconditionError("k ≥ 2");
    check_probability(p);
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("0 < ε < 1");

    std::set<std::int64_t> ells{1, 2};
    for (auto l : extra_ells)
        if (l >= 1) ells.insert(l);

    RegimeReport report;
    const long double ln_n = std::log(static_cast<long double>(n));
    for (std::int64_t ell : ells) {
        RegimeEntry e;
        e.ell = ell;
        e.lhs = (1.0 - eps) * p;
        e.d = n - 2 * k - 2 * ell + 1;
        e.certified_gap = 2 * ell;
        e.chi_lower = e.d + 1;
        e.regime = ell == 1   ? "l = 1 regime (n - 2k << sqrt n)"
                   : ell == 2 ? "l = 2 regime (k >> n^(3/4))"
                              : "fixed-l regime (p >> n^3/k^(2l) + n(1+ln n)/k^l)";
        // ln(n^3 / x^(2a) + n (1 + ln n) / x^a)
        auto surrogate = [&](long double ln_x, long double a) {
            return static_cast<double>(log_add(3 * ln_n - 2 * a * ln_x, ln_n + std::log1p(ln_n) - a * ln_x));
        };
        e.ln_fixed_l_surrogate = surrogate(std::log(static_cast<long double>(k)), static_cast<long double>(ell));
        e.ln_fixed_k_surrogate = surrogate(std::log(static_cast<long double>(ell)), static_cast<long double>(k));
        try {
            const auto dp = derived_params(n, k, ell);
            e.valid = true;
            e.t = dp.t;
            e.rhs = rhs_from(n, dp.d, dp.t);
            e.condition = e.lhs > e.rhs;
            e.t_over_sqrt_n = static_cast<double>(to_ld(dp.t) / std::sqrt(static_cast<long double>(n)));
        } catch (const PreconditionError& err) {
            e.invalid_reason = err.what();
        }
        if (e.condition)
            report.certifications.push_back("gap <= " + std::to_string(e.certified_gap) + ": chi(SG_{n,k}(p)) >= " +
                                            std::to_string(e.chi_lower) + " via " + e.regime +
                                            "; condition satisfied at these finite parameters");
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace kneser
