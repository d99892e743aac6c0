#include "latsec/theta.hpp"

#include <boost/math/constants/constants.hpp>

#include "latsec/errors.hpp"

namespace latsec {

HighReal pi_value() { return boost::math::constants::pi<HighReal>(); }

HighReal sqrt_half() {
    static const HighReal v = sqrt(HighReal(0.5));
    return v;
}

namespace {

const HighReal kRelStop("1e-60");

// theta3/theta4: 1 + 2 sum_{m>=1} (+-1)^m q^(m^2).
// Exponent gaps grow, so the tail after m terms is dominated by a geometric
// series with ratio q^(2m+3).
ThetaValue theta34(const HighReal& q, bool alternating) {
    HighReal sum = 1;
    HighReal term = q;       // q^(m^2)
    HighReal step = q * q;   // q^(2m+1) -> multiply into term each iteration
    bool negate = alternating;
    int m = 1;
    while (true) {
        sum += negate ? -2 * term : 2 * term;
        HighReal next = term * step * q;  // q^((m+1)^2) = q^(m^2) q^(2m+1)
        HighReal ratio = step * q * q * q;
        HighReal tail = 2 * next / (1 - ratio);
        if (tail < kRelStop * abs(sum)) return {sum, tail};
        term = next;
        step *= q * q;
        negate = alternating && !negate;
        ++m;
        if (m > 100000) throw std::runtime_error("theta series failed to converge");
    }
}

// theta2: 2 q^(1/4) sum_{m>=0} q^(m^2+m).
ThetaValue theta2(const HighReal& q) {
    HighReal sum = 1;
    HighReal term = 1;  // q^(m^2+m)
    int m = 0;
    while (true) {
        HighReal next = term * pow(q, 2 * (m + 1));  // q^((m+1)^2+(m+1)) = term * q^(2m+2)
        HighReal ratio = pow(q, 2 * (m + 2));
        HighReal tail = next / (1 - ratio);
        if (tail < kRelStop * sum) {
            HighReal front = 2 * pow(q, HighReal(1) / 4);
            return {front * sum, front * tail};
        }
        sum += next;
        term = next;
        ++m;
        if (m > 100000) throw std::runtime_error("theta series failed to converge");
    }
}

}  // namespace

ThetaValue jacobi_theta_bounded(int kind, const HighReal& tau) {
    if (tau <= 0) throw validation_error("jacobi theta requires tau > 0");
    HighReal q = exp(-pi_value() * tau);
    switch (kind) {
        case 2: return theta2(q);
        case 3: return theta34(q, false);
        case 4: return theta34(q, true);
        default: throw validation_error("theta kind must be 2, 3 or 4");
    }
}

HighReal jacobi_theta(int kind, const HighReal& tau) {
    return jacobi_theta_bounded(kind, tau).value;
}

HighReal s_of_tau(const HighReal& tau) {
    return jacobi_theta(4, tau) / jacobi_theta(3, tau);
}

HighReal t_of_tau(const HighReal& tau) {
    HighReal s = s_of_tau(tau);
    return s * s;
}

HighReal s_product_form(const HighReal& tau, int factors) {
    HighReal prod = 1;
    for (int m = 1; m <= factors; ++m) {
        HighReal x = tanh((HighReal(m) - HighReal(0.5)) * pi_value() * tau);
        prod *= x * x;
    }
    return prod;
}

HighReal tau_of_t(const HighReal& t) {
    if (!(t > 0 && t < 1))
        throw validation_error("tau_of_t requires t strictly inside (0,1)");
    HighReal lo("1e-5"), hi(64);
    while (t_of_tau(lo) >= t) {
        lo /= 10;
        if (lo < HighReal("1e-9"))
            throw validation_error("t too close to 0 to invert");
    }
    while (t_of_tau(hi) < t) {
        hi *= 2;
        if (hi > HighReal(1024))
            throw validation_error("t too close to 1 to invert");
    }
    const HighReal eps("1e-20");
    while (hi - lo > eps) {
        HighReal mid = (lo + hi) / 2;
        if (t_of_tau(mid) < t)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace latsec
