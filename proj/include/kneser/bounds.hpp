#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kneser/setfam.hpp"

namespace kneser {

/// A violated parameter precondition; `constraint()` names it, e.g. "d ≥ 2".
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(std::string constraint)
        : std::domain_error(constraint + " violated"), constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

struct DerivedParams {
    std::int64_t d = 0;  // n - 2k - 2l + 1
    BigCount t;          // ceil(C(k+l, k) / d)
};

/// Throws PreconditionError for k < 2, l < 1 or d < 2.
DerivedParams derived_params(std::int64_t n, std::int64_t k, std::int64_t ell);

/// t^-2 n ln 3 + 2 t^-1 (1 + ln d), evaluated through logarithms.
double condition_rhs(std::int64_t n, std::int64_t k, std::int64_t ell);

struct TheoremParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t ell = 0;
    double p = 0.0;
    double eps = 0.0;

    /// Checks the integer preconditions plus 0 <= p <= 1 and 0 < eps < 1.
    DerivedParams validate() const;
};

/// (1 - eps) p > rhs, strictly.
bool condition_holds(const TheoremParams& params);

/// ln C(t1 d, t1) + ln C(t2 d, t2) + t1 t2 ln(1 - p); -inf at p = 1.
double ln_g(const BigCount& t1, const BigCount& t2, std::int64_t d, double p);

/// ln g(t+1, t) - ln g(t, t), computed from the binomial ratio so it stays
/// accurate when ln g itself is far beyond double resolution.
double ln_g_step(const BigCount& t, std::int64_t d, double p);

/// p > (1 + ln d) / t: the ratio g(t+1, t) / g(t, t) is then below 1.
bool g_is_decreasing(std::int64_t d, const BigCount& t, double p);

/// Successive log-bounds on P(A). L2..L4 are present only when the
/// condition holds; otherwise the chain stops at L1 and is not conclusive.
struct PABoundChain {
    double l1 = 0;  // n ln3 + 2 ln C(td, t) + t^2 ln(1-p)
    std::optional<double> l2;  // n ln3 + 2 t (1 + ln d) - p t^2  ( = t^2 (rhs - p) )
    std::optional<double> l3;  // -t^2 eps p
    std::optional<double> l4;  // -eps n ln3
    bool conclusive = false;
};

PABoundChain ln_pA_bound(const TheoremParams& params);

/// L1 alone; it does not depend on eps.
double ln_pA_first_bound(std::int64_t n, std::int64_t k, std::int64_t ell, double p);

struct GapResult {
    std::int64_t ell = 0;
    std::int64_t gap = 0;        // 2 ell
    std::int64_t chi_lower = 0;  // d + 1 = n - 2k - 2 ell + 2
};

/// Smallest l >= 1 with d >= 2 for which the condition holds, if any.
std::optional<GapResult> best_gap(std::int64_t n, std::int64_t k, double p, double eps);

/// Linear reference scan for best_gap (used to cross-check the bisection).
std::optional<GapResult> best_gap_linear(std::int64_t n, std::int64_t k, double p, double eps);

struct RegimeEntry {
    std::int64_t ell = 0;
    bool valid = false;  // d >= 2
    std::string invalid_reason;
    std::int64_t d = 0;
    BigCount t;
    double rhs = 0;
    double lhs = 0;  // (1 - eps) p
    bool condition = false;
    std::int64_t certified_gap = 0;
    std::int64_t chi_lower = 0;
    std::string regime;
    double t_over_sqrt_n = 0;      // l = 1, 2 regimes need t to outgrow sqrt(n)
    double ln_fixed_l_surrogate = 0;  // ln(n^3 / k^(2l) + n (1 + ln n) / k^l)
    double ln_fixed_k_surrogate = 0;  // ln(n^3 / l^(2k) + n (1 + ln n) / l^k)
};

struct RegimeReport {
    std::vector<RegimeEntry> entries;
    std::vector<std::string> certifications;
};

/// Evaluates l = 1, 2 and any extra values; lists the gap bounds the
/// condition certifies at these finite parameters.
RegimeReport corollary_regime_report(std::int64_t n, std::int64_t k, double p, double eps,
                                     std::span<const std::int64_t> extra_ells = {});

}  // namespace kneser
