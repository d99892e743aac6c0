#ifndef LATSEC_GLEASON_HPP
#define LATSEC_GLEASON_HPP

#include <vector>

#include "latsec/numbers.hpp"
#include "latsec/weight_enumerator.hpp"

namespace latsec {

// Exact coefficients of f_C(t) = 2^(n/2) sum_r a_r (t^4 - t^2 + 1)^r, the
// decomposition available for even formally self-dual enumerators.
struct GleasonCoeffs {
    std::vector<BigRational> a;  // a_0 .. a_{floor(n/8)}
    bool residual_ok = false;
};

// Solves the exact rational linear system matching f_C(t) / 2^(n/2) against
// powers of h(t) = t^4 - t^2 + 1 and verifies every remaining polynomial
// coefficient. Requires all weights even and |C| = 2^(n/2); an enumerator
// outside the even-FSD ring is rejected.
GleasonCoeffs gleason_decompose(const WeightEnumerator& we);

// Positivity check of sum_{r>=1} r a_r h^(r-1) over h in [3/4, 1], the
// closed superset of the range of h(t) on (0,1). A positive certified
// minimum pins the strong secrecy gain to tau = 1.
struct SufficientCondition {
    enum class Verdict { kCertified, kNotCertified, kNotApplicable };
    Verdict verdict = Verdict::kNotApplicable;
    BigRational minimum;       // certified minimum over [3/4, 1]
    bool minimum_exact = false;  // exact for polynomial degree <= 2, else a
                                 // rigorous lower bound
};
SufficientCondition sufficient_condition_check(const GleasonCoeffs& coeffs);

}  // namespace latsec

#endif
