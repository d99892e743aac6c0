#include "latsec/gleason.hpp"

#include <algorithm>

#include "latsec/errors.hpp"

namespace latsec {

namespace {

// Exact integer coefficient vector of f_C(t) = sum_w A_w (1+t)^((n-w)/2) (1-t)^(w/2)
// for an even-weight enumerator of even length (degree <= n/2).
std::vector<BigInt> fc_polynomial(const WeightEnumerator& we) {
    int n = we.length();
    int deg = n / 2;
    std::vector<BigInt> out(static_cast<std::size_t>(deg) + 1);
    // Binomial rows up to deg.
    std::vector<std::vector<BigInt>> bin(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        bin[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            bin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                bin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                bin[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    for (int w = 0; w <= n; w += 2) {
        const BigInt& a = we.count(w);
        if (a == 0) continue;
        int e1 = (n - w) / 2, e2 = w / 2;
        for (int i = 0; i <= e1; ++i)
            for (int j = 0; j <= e2; ++j) {
                BigInt term = a * bin[static_cast<std::size_t>(e1)][static_cast<std::size_t>(i)] *
                              bin[static_cast<std::size_t>(e2)][static_cast<std::size_t>(j)];
                if (j & 1)
                    out[static_cast<std::size_t>(i + j)] -= term;
                else
                    out[static_cast<std::size_t>(i + j)] += term;
            }
    }
    return out;
}

}  // namespace

GleasonCoeffs gleason_decompose(const WeightEnumerator& we) {
    int n = we.length();
    if (n % 2 != 0) throw validation_error("decomposition requires even length");
    if (!we.all_weights_even())
        throw validation_error("decomposition requires all codeword weights even");
    if (we.size() != (BigInt(1) << (n / 2)))
        throw validation_error("decomposition requires |C| = 2^(n/2)");

    int big_r = n / 8;
    int deg = n / 2;

    // Columns: coefficient vectors of h(t)^r, h = t^4 - t^2 + 1.
    std::vector<std::vector<BigRational>> hpow(static_cast<std::size_t>(big_r) + 1);
    hpow[0] = {BigRational(1)};
    const std::vector<BigRational> h = {BigRational(1), BigRational(0), BigRational(-1),
                                        BigRational(0), BigRational(1)};
    for (int r = 1; r <= big_r; ++r) {
        const auto& prev = hpow[static_cast<std::size_t>(r - 1)];
        std::vector<BigRational> next(prev.size() + 4);
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j) next[i + j] += prev[i] * h[j];
        hpow[static_cast<std::size_t>(r)] = std::move(next);
    }

    auto column = [&](int r, int d) -> BigRational {
        const auto& p = hpow[static_cast<std::size_t>(r)];
        return d < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(d)] : BigRational(0);
    };

    std::vector<BigInt> f = fc_polynomial(we);
    BigInt scale = BigInt(1) << (n / 2);
    auto rhs = [&](int d) { return BigRational(f[static_cast<std::size_t>(d)], scale); };

    // Gauss elimination on the (deg+1) x (R+1) overdetermined system; the
    // solution is then verified against every row.
    int cols = big_r + 1;
    std::vector<std::vector<BigRational>> m(static_cast<std::size_t>(deg) + 1);
    std::vector<BigRational> b(static_cast<std::size_t>(deg) + 1);
    for (int d = 0; d <= deg; ++d) {
        m[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(cols));
        for (int r = 0; r < cols; ++r) m[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)] = column(r, d);
        b[static_cast<std::size_t>(d)] = rhs(d);
    }
    std::vector<int> pivot_rows;
    int row_search = 0;
    for (int c = 0; c < cols; ++c) {
        int p = -1;
        for (int d = row_search; d <= deg; ++d)
            if (m[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] != 0) {
                p = d;
                break;
            }
        if (p < 0) throw validation_error("degenerate decomposition system");
        std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(row_search)]);
        std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(row_search)]);
        for (int d = 0; d <= deg; ++d) {
            if (d == row_search) continue;
            auto& rowd = m[static_cast<std::size_t>(d)];
            if (rowd[static_cast<std::size_t>(c)] == 0) continue;
            BigRational f2 = rowd[static_cast<std::size_t>(c)] /
                             m[static_cast<std::size_t>(row_search)][static_cast<std::size_t>(c)];
            for (int cc = 0; cc < cols; ++cc)
                rowd[static_cast<std::size_t>(cc)] -=
                    f2 * m[static_cast<std::size_t>(row_search)][static_cast<std::size_t>(cc)];
            b[static_cast<std::size_t>(d)] -= f2 * b[static_cast<std::size_t>(row_search)];
        }
        pivot_rows.push_back(row_search);
        ++row_search;
    }
    GleasonCoeffs out;
    out.a.assign(static_cast<std::size_t>(cols), BigRational(0));
    for (int c = 0; c < cols; ++c) {
        int pr = pivot_rows[static_cast<std::size_t>(c)];
        out.a[static_cast<std::size_t>(c)] =
            b[static_cast<std::size_t>(pr)] / m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c)];
    }

    // Every coefficient of f/2^(n/2) must be reproduced exactly.
    for (int d = 0; d <= deg; ++d) {
        BigRational acc(0);
        for (int r = 0; r < cols; ++r) acc += out.a[static_cast<std::size_t>(r)] * column(r, d);
        if (acc != rhs(d))
            throw validation_error("enumerator is not representable in the even-FSD ring");
    }
    BigRational total(0);
    for (const auto& ar : out.a) total += ar;
    if (total != 1) throw validation_error("decomposition coefficients do not sum to 1");
    out.residual_ok = true;
    return out;
}

namespace {

BigRational eval_poly(const std::vector<BigRational>& c, const BigRational& x) {
    BigRational v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

// Interval Horner over [a, b] with 0 < a < b; returns an enclosure of the
// polynomial's range.
std::pair<BigRational, BigRational> interval_eval(const std::vector<BigRational>& c,
                                                  const BigRational& a, const BigRational& b) {
    BigRational lo(0), hi(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        BigRational cand[4] = {lo * a, lo * b, hi * a, hi * b};
        lo = *std::min_element(cand, cand + 4) + *it;
        hi = *std::max_element(cand, cand + 4) + *it;
    }
    return {lo, hi};
}

}  // namespace

SufficientCondition sufficient_condition_check(const GleasonCoeffs& coeffs) {
    SufficientCondition out;
    if (coeffs.a.size() <= 1) {
        out.verdict = SufficientCondition::Verdict::kNotApplicable;
        return out;
    }
    // P(h) = sum_{r>=1} r a_r h^(r-1)
    std::vector<BigRational> p(coeffs.a.size() - 1);
    for (std::size_t r = 1; r < coeffs.a.size(); ++r) p[r - 1] = BigRational(r) * coeffs.a[r];
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    const BigRational lo(3, 4), hi(1);

    int deg = static_cast<int>(p.size()) - 1;
    if (deg <= 2) {
        std::vector<BigRational> candidates = {eval_poly(p, lo), eval_poly(p, hi)};
        if (deg == 2) {
            BigRational vertex = -p[1] / (2 * p[2]);
            if (vertex > lo && vertex < hi) candidates.push_back(eval_poly(p, vertex));
        }
        out.minimum = *std::min_element(candidates.begin(), candidates.end());
        out.minimum_exact = true;
    } else {
        // Branch and bound with exact interval arithmetic: keep the lowest
        // sampled value as upper bound, discard boxes proven above it, and
        // accumulate a rigorous lower bound from the resolved boxes.
        BigRational best = std::min(eval_poly(p, lo), eval_poly(p, hi));
        BigRational floor_bound = best;
        std::vector<std::pair<BigRational, BigRational>> stack{{lo, hi}};
        const BigRational width_eps(1, BigInt(1) << 80);
        const BigRational tight_eps(1, BigInt(1) << 120);
        int budget = 200000;
        while (!stack.empty() && budget-- > 0) {
            auto [a, b] = stack.back();
            stack.pop_back();
            auto [elo, ehi] = interval_eval(p, a, b);
            if (elo >= best) continue;  // cannot improve the minimum here
            BigRational mid = (a + b) / 2;
            best = std::min(best, eval_poly(p, mid));
            if (b - a < width_eps || ehi - elo < tight_eps) {
                floor_bound = std::min(floor_bound, elo);
                continue;
            }
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
        for (const auto& [a, b] : stack)
            floor_bound = std::min(floor_bound, interval_eval(p, a, b).first);
        out.minimum = std::min(best, floor_bound);
        out.minimum_exact = false;
    }
    out.verdict = out.minimum > 0 ? SufficientCondition::Verdict::kCertified
                                  : SufficientCondition::Verdict::kNotCertified;
    return out;
}

}  // namespace latsec
