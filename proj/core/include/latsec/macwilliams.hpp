#ifndef LATSEC_MACWILLIAMS_HPP
#define LATSEC_MACWILLIAMS_HPP

#include <optional>

#include "latsec/code.hpp"
#include "latsec/weight_enumerator.hpp"

namespace latsec {

// Coefficient map of (1/M) * W(x+y, x-y), expanded with exact integer
// arithmetic (Krawtchouk binomial convolution). Throws validation_error if
// some coefficient is not divisible by M, i.e. the pair (W, M) cannot arise
// from a normalized MacWilliams identity.
WeightEnumerator macwilliams_transform(const WeightEnumerator& we, const BigInt& m);

struct FsdCertificate {
    bool is_fsd = false;
    enum class Reason {
        kOk,                    // enumerator is a fixed point of the transform
        kSizeNotTwoPowHalfN,    // M != 2^(n/2), ruled out before transforming
        kNonIntegralTransform,  // transform has non-integral coefficients
        kEnumeratorMismatch,    // transform differs from the enumerator
    };
    Reason reason = Reason::kEnumeratorMismatch;
    std::optional<WeightEnumerator> transformed;  // (1/M) W(x+y,x-y) when integral
    std::optional<int> first_mismatch;            // smallest differing weight
};

// Checks W_C(x,y) = (1/M) W_C(x+y, x-y), with the size condition M = 2^(n/2)
// verified first and reported as its own failure reason.
FsdCertificate is_formally_self_dual(const WeightEnumerator& we);
FsdCertificate is_formally_self_dual(const Code& code, const EnumerationLimits& limits = {});

}  // namespace latsec

#endif
