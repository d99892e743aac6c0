#ifndef LATSEC_SECRECY_HPP
#define LATSEC_SECRECY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latsec/gleason.hpp"
#include "latsec/numbers.hpp"
#include "latsec/weight_enumerator.hpp"

namespace latsec {

// f_C(t) = W_C(sqrt(1+t), sqrt(1-t)) for t strictly inside (0,1).
HighReal f_of_t(const WeightEnumerator& we, const HighReal& t);
// log f_C(t), computed by max-shifted compensated log-sum-exp. Same value as
// log(f_of_t) but stays in range for enumerators far beyond double range.
HighReal log_f_of_t(const WeightEnumerator& we, const HighReal& t);

// Secrecy function Xi(tau) = 2^(n/2) / f_C(t(tau)) of the Construction A
// packing. Requires |C| = 2^(n/2) (unit volume); other sizes get a
// normalization error pointing at the scaled analysis.
HighReal secrecy_function(const WeightEnumerator& we, const HighReal& tau);

// Xi(tau) as a ratio of theta series, valid for any code size M: the
// reference lattice is nu Z^n with nu^n = 2^(n/2) / M.
HighReal secrecy_function_theta_ratio(const WeightEnumerator& we, const HighReal& tau);

struct StrongGain {
    HighReal xi;
    HighReal t_star;
    HighReal tau_star;
    bool conjecture_verified = false;  // |t* - 1/sqrt(2)| < 1e-8
};
// Global minimum of f_C on (0,1): 1024-point coarse grid, golden-section
// refinement of every detected basin to an interval below 1e-14.
StrongGain strong_secrecy_gain(const WeightEnumerator& we);

// Xi at the symmetry point tau = 1, i.e. 2^(n/2) / f_C(1/sqrt(2)).
HighReal weak_secrecy_gain(const WeightEnumerator& we);
// Log-domain route to the same value.
HighReal log_weak_secrecy_gain(const WeightEnumerator& we);

struct SymmetryResidual {
    HighReal tau;
    HighReal residual;  // |Xi(s*tau) - Xi(s/tau)| / Xi(s*tau), s = nu^-2
};
std::vector<SymmetryResidual> symmetry_check(const WeightEnumerator& we,
                                             const std::vector<HighReal>& taus,
                                             const HighReal& nu = HighReal(1));

// Sign pattern of f'_C: decreasing on (0, 1/sqrt(2)), increasing after.
enum class SignVerdict { kConfirmed, kRefuted, kInconclusive };
struct DerivativeAnalysis {
    SignVerdict verdict = SignVerdict::kInconclusive;
    // Refined locations of the derivative's sign changes.
    std::vector<HighReal> sign_changes;
    // Grid interval that could not be classified, when inconclusive.
    std::optional<std::pair<HighReal, HighReal>> offending;
};
DerivativeAnalysis derivative_sign_analysis(const WeightEnumerator& we);

// Exact value of sum_w A_w / (w+1); smaller is better for weak
// secrecy-optimality (necessary condition).
BigRational necessary_condition_score(const WeightEnumerator& we);

struct ScoreOrdering {
    std::vector<BigRational> scores;
    std::vector<std::size_t> ascending;  // index order, best candidate first
    // dominance[i][j] = +1 when phi_i(u) <= phi_j(u) on the whole u-grid
    // (code i at least as good everywhere), -1 for the reverse, 0 if mixed.
    std::vector<std::vector<int>> dominance;
};
ScoreOrdering compare_scores(const std::vector<WeightEnumerator>& codes, int grid_points = 512);

struct SecrecyReport {
    std::string name;
    int n = 0;
    HighReal weak_gain;
    HighReal strong_gain;
    HighReal t_star;
    HighReal tau_star;
    bool conjecture_verified = false;
    // One of "certified", "grid-verified", "inconclusive".
    std::string condition_status;
    BigRational necessary_score;
    std::vector<SymmetryResidual> symmetry;
    HighReal symmetry_max_residual;
    std::optional<GleasonCoeffs> gleason;           // even FSD codes
    std::optional<SufficientCondition> sufficient;  // even FSD codes, n >= 8
};

// Full report: gains, minimizer, symmetry residuals on a default tau list,
// Theorem-style condition checks.
SecrecyReport analyze_secrecy(const std::string& name, const WeightEnumerator& we);

}  // namespace latsec

#endif
