#ifndef LATSEC_QSERIES_HPP
#define LATSEC_QSERIES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "latsec/errors.hpp"
#include "latsec/numbers.hpp"

namespace latsec {

// Truncated formal power series in q with exponents on the half-integer grid
// and exact integer coefficients. Exponents are indexed by twice their value
// ("half units"), so slot i holds the coefficient of q^(i/2). Terms with
// 2*exponent >= truncation() are absent; arithmetic keeps every coefficient
// below the minimum truncation of its operands exact.
class QSeries {
  public:
    static constexpr std::int64_t kDefaultTruncation = 64;  // exponents < 32

    explicit QSeries(std::int64_t truncation2 = kDefaultTruncation)
        : coef_(checked_size(truncation2)) {}

    static QSeries one(std::int64_t truncation2 = kDefaultTruncation) {
        QSeries s(truncation2);
        s.coef_[0] = 1;
        return s;
    }

    std::int64_t truncation() const { return static_cast<std::int64_t>(coef_.size()); }

    // Coefficient of q^(half_exponent / 2).
    const BigInt& coefficient2(std::int64_t half_exponent) const {
        return coef_.at(static_cast<std::size_t>(half_exponent));
    }
    BigInt& coefficient2(std::int64_t half_exponent) {
        return coef_.at(static_cast<std::size_t>(half_exponent));
    }
    // Coefficient of q^e for integer e.
    const BigInt& coefficient(std::int64_t e) const { return coefficient2(2 * e); }

    bool is_zero() const {
        for (const auto& c : coef_)
            if (c != 0) return false;
        return true;
    }

    QSeries& operator+=(const QSeries& o) {
        resize_down(std::min(truncation(), o.truncation()));
        for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
        return *this;
    }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries out(std::min(a.truncation(), b.truncation()));
        std::int64_t t = out.truncation();
        for (std::int64_t i = 0; i < std::min(a.truncation(), t); ++i) {
            if (a.coef_[static_cast<std::size_t>(i)] == 0) continue;
            std::int64_t jmax = std::min(b.truncation(), t - i);
            for (std::int64_t j = 0; j < jmax; ++j) {
                if (b.coef_[static_cast<std::size_t>(j)] == 0) continue;
                out.coef_[static_cast<std::size_t>(i + j)] +=
                    a.coef_[static_cast<std::size_t>(i)] * b.coef_[static_cast<std::size_t>(j)];
            }
        }
        return out;
    }

    QSeries& operator*=(const BigInt& s) {
        for (auto& c : coef_) c *= s;
        return *this;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

    // Partial sum at q = e^(-pi tau); the discarded tail is outside this
    // value (callers bound it from the truncation order).
    HighReal evaluate(const HighReal& tau) const;

    // Sparse view: map 2*exponent -> coefficient, zero terms omitted.
    std::map<std::int64_t, BigInt> as_map() const {
        std::map<std::int64_t, BigInt> m;
        for (std::size_t i = 0; i < coef_.size(); ++i)
            if (coef_[i] != 0) m[static_cast<std::int64_t>(i)] = coef_[i];
        return m;
    }

  private:
    static std::size_t checked_size(std::int64_t truncation2) {
        if (truncation2 <= 0) throw validation_error("series truncation order must be positive");
        if (truncation2 > (std::int64_t{1} << 24))
            throw resource_limit_error("series truncation order too large");
        return static_cast<std::size_t>(truncation2);
    }
    void resize_down(std::int64_t t) { coef_.resize(checked_size(t)); }

    std::vector<BigInt> coef_;
};

}  // namespace latsec

#endif
