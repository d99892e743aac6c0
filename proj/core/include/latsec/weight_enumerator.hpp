#ifndef LATSEC_WEIGHT_ENUMERATOR_HPP
#define LATSEC_WEIGHT_ENUMERATOR_HPP

#include <map>
#include <vector>

#include "latsec/errors.hpp"
#include "latsec/numbers.hpp"

namespace latsec {

// The weight distribution of an (n, M) binary code: counts[w] is the number
// of codewords of Hamming weight w. This is W_C(x,y) in coefficient form.
class WeightEnumerator {
  public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(int n) : n_(n), counts_(static_cast<std::size_t>(n) + 1) {
        if (n < 0 || n > 128) throw validation_error("code length must be in [0,128]");
    }
    WeightEnumerator(int n, const std::map<int, BigInt>& counts) : WeightEnumerator(n) {
        for (const auto& [w, a] : counts) {
            if (w < 0 || w > n) throw validation_error("weight outside [0,n]");
            if (a < 0) throw validation_error("negative weight count");
            counts_[static_cast<std::size_t>(w)] = a;
        }
    }

    int length() const { return n_; }

    const BigInt& count(int w) const { return counts_.at(static_cast<std::size_t>(w)); }
    BigInt& count(int w) { return counts_.at(static_cast<std::size_t>(w)); }

    // M = sum_w A_w, the code size.
    BigInt size() const {
        BigInt m = 0;
        for (const auto& a : counts_) m += a;
        return m;
    }

    bool all_weights_even() const {
        for (int w = 1; w <= n_; w += 2)
            if (counts_[static_cast<std::size_t>(w)] != 0) return false;
        return true;
    }

    // Smallest nonzero weight with A_w > 0, or -1 if none.
    int min_nonzero_weight() const {
        for (int w = 1; w <= n_; ++w)
            if (counts_[static_cast<std::size_t>(w)] != 0) return w;
        return -1;
    }

    std::map<int, BigInt> as_map() const {
        std::map<int, BigInt> m;
        for (int w = 0; w <= n_; ++w)
            if (counts_[static_cast<std::size_t>(w)] != 0) m[w] = counts_[static_cast<std::size_t>(w)];
        return m;
    }

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

    // Enumerator of the direct sum: polynomial product (weights add across
    // the concatenated blocks).
    friend WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b) {
        WeightEnumerator out(a.n_ + b.n_);
        for (int u = 0; u <= a.n_; ++u) {
            if (a.counts_[static_cast<std::size_t>(u)] == 0) continue;
            for (int v = 0; v <= b.n_; ++v) {
                if (b.counts_[static_cast<std::size_t>(v)] == 0) continue;
                out.counts_[static_cast<std::size_t>(u + v)] +=
                    a.counts_[static_cast<std::size_t>(u)] * b.counts_[static_cast<std::size_t>(v)];
            }
        }
        return out;
    }

  private:
    int n_ = 0;
    std::vector<BigInt> counts_{BigInt(0)};
};

}  // namespace latsec

#endif
