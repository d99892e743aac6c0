#include "latsec/theta_packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "latsec/errors.hpp"

namespace latsec {

HighReal QSeries::evaluate(const HighReal& tau) const {
    if (tau <= 0) throw validation_error("series evaluation requires tau > 0");
    HighReal qh = exp(-pi_value() * tau / 2);  // q^(1/2)
    HighReal sum = 0;
    HighReal power = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(truncation()); ++i) {
        if (coef_[i] != 0) sum += to_real(coef_[i]) * power;
        power *= qh;
    }
    return sum;
}

HighReal theta_construction_a(const WeightEnumerator& we, const HighReal& tau) {
    if (tau <= 0) throw validation_error("theta evaluation requires tau > 0");
    int n = we.length();
    HighReal a = jacobi_theta(3, 2 * tau);
    HighReal b = jacobi_theta(2, 2 * tau);
    HighReal r = b / a;
    // W(a, b) = a^n sum_w A_w r^w
    HighReal sum = 0;
    HighReal rw = 1;
    for (int w = 0; w <= n; ++w) {
        if (we.count(w) != 0) sum += to_real(we.count(w)) * rw;
        rw *= r;
    }
    return sum * pow(a, n);
}

QSeries theta_construction_a_series(const WeightEnumerator& we, std::int64_t truncation2) {
    int n = we.length();
    // theta3(2z): exponents 2m^2 (half units 4m^2); theta2(2z): exponents
    // (2m+1)^2/2 (half units (2m+1)^2).
    QSeries th3(truncation2), th2(truncation2);
    th3.coefficient2(0) = 1;
    for (std::int64_t m = 1; 4 * m * m < truncation2; ++m) th3.coefficient2(4 * m * m) += 2;
    for (std::int64_t m = 0; (2 * m + 1) * (2 * m + 1) < truncation2; ++m)
        th2.coefficient2((2 * m + 1) * (2 * m + 1)) += 2;

    std::vector<QSeries> pow3, pow2;
    pow3.reserve(static_cast<std::size_t>(n) + 1);
    pow2.reserve(static_cast<std::size_t>(n) + 1);
    pow3.push_back(QSeries::one(truncation2));
    pow2.push_back(QSeries::one(truncation2));
    for (int i = 1; i <= n; ++i) {
        pow3.push_back(pow3.back() * th3);
        pow2.push_back(pow2.back() * th2);
    }

    QSeries out(truncation2);
    for (int w = 0; w <= n; ++w) {
        if (we.count(w) == 0) continue;
        QSeries term = pow3[static_cast<std::size_t>(n - w)] * pow2[static_cast<std::size_t>(w)];
        term *= we.count(w);
        out += term;
    }
    if (out.is_zero())
        throw validation_error("truncation order " + std::to_string(truncation2) +
                               " is too small to contain any nonzero theta term");
    return out;
}

namespace {

// Enumerates all x = v + c z (z integer vector) with |x|^2 <= nn_max and adds
// 1 to shells[|x|^2], by depth-first search over coordinates.
void enumerate_coset(const std::vector<std::int64_t>& v, std::int64_t c, std::int64_t nn_max,
                     std::size_t dim, std::int64_t partial,
                     std::map<std::int64_t, BigInt>& shells) {
    if (dim == v.size()) {
        shells[partial] += 1;
        return;
    }
    std::int64_t budget = nn_max - partial;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(budget))) + 2;
    std::int64_t vi = v[dim];
    // x = vi + c z in [-r, r]
    std::int64_t zlo = (-r - vi) / c - 2, zhi = (r - vi) / c + 2;
    for (std::int64_t z = zlo; z <= zhi; ++z) {
        std::int64_t x = vi + c * z;
        std::int64_t nn = partial + x * x;
        if (nn <= nn_max) enumerate_coset(v, c, nn_max, dim + 1, nn, shells);
    }
}

}  // namespace

QSeries theta_periodic_packing(const BigRational& scale_sq,
                               const std::vector<std::vector<std::int64_t>>& translates,
                               std::int64_t base_c, std::int64_t truncation2) {
    if (scale_sq <= 0) throw validation_error("squared scale must be positive");
    if (base_c < 1) throw validation_error("base lattice scale must be a positive integer");
    if (translates.empty()) throw validation_error("at least one translate is required");
    std::size_t n = translates.front().size();
    if (n == 0) throw validation_error("translates must have positive dimension");

    // Canonical residues mod the base lattice; translates must be distinct.
    std::vector<std::vector<std::int64_t>> res;
    for (const auto& u : translates) {
        if (u.size() != n) throw validation_error("translates must share one dimension");
        std::vector<std::int64_t> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = ((u[i] % base_c) + base_c) % base_c;
        res.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = i + 1; j < res.size(); ++j)
            if (res[i] == res[j])
                throw validation_error("translates coincide modulo the base lattice");

    const BigInt num = boost::multiprecision::numerator(scale_sq);
    const BigInt den = boost::multiprecision::denominator(scale_sq);
    // Largest raw |x|^2 whose scaled half-exponent 2 * scale_sq * |x|^2 stays
    // below the truncation.
    BigInt nn_big = (BigInt(truncation2) * den - 1) / (2 * num);
    auto nn_max = nn_big.convert_to<std::int64_t>();

    auto shells_of = [&](const std::vector<std::int64_t>& v) {
        std::map<std::int64_t, BigInt> shells;
        enumerate_coset(v, base_c, nn_max, 0, 0, shells);
        return shells;
    };

    auto to_series = [&](const std::map<std::int64_t, BigInt>& shells,
                         const BigInt& divisor) {
        QSeries out(truncation2);
        for (const auto& [nn, count] : shells) {
            BigInt half_num = 2 * num * nn;
            if (half_num % den != 0)
                throw validation_error("scaled norm " + std::to_string(nn) +
                                       " does not land on the half-integer exponent grid");
            BigInt idx = half_num / den;
            if (idx >= truncation2) continue;
            if (count % divisor != 0)
                throw validation_error(
                    "averaged shell count is not integral; packing has no integral spectrum");
            out.coefficient2(idx.convert_to<std::int64_t>()) += count / divisor;
        }
        return out;
    };

    bool has_zero = std::any_of(res.begin(), res.end(), [](const auto& r) {
        return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
    });

    std::map<std::int64_t, BigInt> shells;
    if (has_zero) {
        // Distance-invariant form: shells of every translate relative to 0.
        for (const auto& r : res)
            for (const auto& [nn, c] : shells_of(r)) shells[nn] += c;
        return to_series(shells, 1);
    }
    // Symmetrized form: average the pairwise difference spectra.
    for (const auto& rj : res)
        for (const auto& rl : res) {
            std::vector<std::int64_t> diff(n);
            for (std::size_t i = 0; i < n; ++i)
                diff[i] = (((rj[i] - rl[i]) % base_c) + base_c) % base_c;
            for (const auto& [nn, c] : shells_of(diff)) shells[nn] += c;
        }
    return to_series(shells, BigInt(res.size()));
}

}  // namespace latsec
