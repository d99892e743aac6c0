#ifndef LATSEC_THETA_PACKING_HPP
#define LATSEC_THETA_PACKING_HPP

#include <cstdint>
#include <vector>

#include "latsec/qseries.hpp"
#include "latsec/theta.hpp"
#include "latsec/weight_enumerator.hpp"

namespace latsec {

// Theta series of the Construction A packing of a code with weight
// enumerator W: W(theta3(2z), theta2(2z)).
//
// Numeric form, evaluated at z = i*tau.
HighReal theta_construction_a(const WeightEnumerator& we, const HighReal& tau);
// Exact q-series form up to the given truncation (in half-exponent units).
QSeries theta_construction_a_series(const WeightEnumerator& we,
                                    std::int64_t truncation2 = QSeries::kDefaultTruncation);

// Theta series of a periodic packing scale * (translates + base_c Z^n), with
// scale given by its exact square. Exact shell counts by lattice-point
// enumeration up to the series truncation.
//
// When one translate class is the zero class the distance-invariant form
// sum_j sum_lambda q^(|lambda + u_j|^2) is used (the caller asserts distance
// invariance). Otherwise the symmetrized average over translate pairs is
// taken; if that average is not integral on some shell the packing has no
// integral spectrum and the call fails.
QSeries theta_periodic_packing(const BigRational& scale_sq,
                               const std::vector<std::vector<std::int64_t>>& translates,
                               std::int64_t base_c,
                               std::int64_t truncation2 = QSeries::kDefaultTruncation);

}  // namespace latsec

#endif
