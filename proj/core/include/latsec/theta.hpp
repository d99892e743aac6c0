#ifndef LATSEC_THETA_HPP
#define LATSEC_THETA_HPP

#include "latsec/numbers.hpp"

namespace latsec {

// A theta evaluation together with the rigorous bound on the discarded tail.
struct ThetaValue {
    HighReal value;
    HighReal tail_bound;
};

// Jacobi theta constants on the imaginary axis, q = e^(-pi tau):
//   kind 2: sum_m q^((m+1/2)^2)     kind 3: sum_m q^(m^2)
//   kind 4: sum_m (-q)^(m^2)
// Series are summed until the tail is provably below 10^-60 relative.
ThetaValue jacobi_theta_bounded(int kind, const HighReal& tau);
HighReal jacobi_theta(int kind, const HighReal& tau);

// s(tau) = theta4(i tau) / theta3(i tau), strictly increasing from 0 to 1.
HighReal s_of_tau(const HighReal& tau);
// t(tau) = s(tau)^2; t(1) = 1/sqrt(2).
HighReal t_of_tau(const HighReal& tau);

// Product form prod_m tanh^2((m - 1/2) pi tau) of s(tau); used as an
// independent cross-check of the series route.
HighReal s_product_form(const HighReal& tau, int factors = 64);

// Inverse of the monotone map t(tau), by bisection to |interval| < 1e-20.
HighReal tau_of_t(const HighReal& t);

}  // namespace latsec

#endif
