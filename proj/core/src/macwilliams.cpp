#include "latsec/macwilliams.hpp"

#include <vector>

namespace latsec {

namespace {

// Pascal triangle up to row n, exact.
std::vector<std::vector<BigInt>> binomials(int n) {
    std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return c;
}

}  // namespace

WeightEnumerator macwilliams_transform(const WeightEnumerator& we, const BigInt& m) {
    if (m <= 0) throw validation_error("code size must be positive");
    int n = we.length();
    auto bin = binomials(n);

    // Coefficient of x^(n-j) y^j in sum_w A_w (x+y)^(n-w) (x-y)^w is
    // sum_w A_w K_j(w) with the Krawtchouk number
    // K_j(w) = sum_i (-1)^i C(w,i) C(n-w, j-i).
    WeightEnumerator out(n);
    for (int j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (int w = 0; w <= n; ++w) {
            const BigInt& a = we.count(w);
            if (a == 0) continue;
            BigInt k = 0;
            int lo = std::max(0, j - (n - w));
            int hi = std::min(w, j);
            for (int i = lo; i <= hi; ++i) {
                BigInt term = bin[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)] *
                              bin[static_cast<std::size_t>(n - w)][static_cast<std::size_t>(j - i)];
                if (i & 1)
                    k -= term;
                else
                    k += term;
            }
            acc += a * k;
        }
        if (acc % m != 0)
            throw validation_error("transform coefficient at weight " + std::to_string(j) +
                                   " is not divisible by M = " + m.str() +
                                   "; (W, M) cannot arise from the normalized identity");
        out.count(j) = acc / m;
    }
    return out;
}

FsdCertificate is_formally_self_dual(const WeightEnumerator& we) {
    FsdCertificate cert;
    int n = we.length();
    BigInt m = we.size();
    if (n % 2 != 0 || m != (BigInt(1) << (n / 2))) {
        cert.reason = FsdCertificate::Reason::kSizeNotTwoPowHalfN;
        return cert;
    }
    try {
        cert.transformed = macwilliams_transform(we, m);
    } catch (const validation_error&) {
        cert.reason = FsdCertificate::Reason::kNonIntegralTransform;
        return cert;
    }
    for (int w = 0; w <= n; ++w)
        if (cert.transformed->count(w) != we.count(w)) {
            cert.first_mismatch = w;
            cert.reason = FsdCertificate::Reason::kEnumeratorMismatch;
            return cert;
        }
    cert.is_fsd = true;
    cert.reason = FsdCertificate::Reason::kOk;
    return cert;
}

FsdCertificate is_formally_self_dual(const Code& code, const EnumerationLimits& limits) {
    return is_formally_self_dual(code.weight_enumerator(limits));
}

}  // namespace latsec
