#ifndef LATSEC_CODE_HPP
#define LATSEC_CODE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latsec/bitword.hpp"
#include "latsec/numbers.hpp"
#include "latsec/weight_enumerator.hpp"

namespace latsec {

// Cap on enumeration work. 2^36 messages keeps [70,35] codes tractable while
// refusing runaway inputs; callers may raise it explicitly.
struct EnumerationLimits {
    std::uint64_t max_messages = std::uint64_t{1} << 36;
    std::uint64_t max_explicit_words = std::uint64_t{1} << 24;
};

// A binary (n, M) code in one of two stored representations:
//  - generator rows of a linear [n, k] code (rows checked independent),
//  - an explicit sorted list of codewords (no duplicates).
// Codes built from Z4 generators via gray_map() or from convolutional
// polynomial pairs via tailbite() end up in one of these two forms.
// Immutable after construction; the weight enumerator is computed once on
// demand and shared between copies.
class Code {
  public:
    Code() = default;

    static Code linear(std::string name, int n, std::vector<Bitword> rows);
    static Code explicit_set(std::string name, int n, std::vector<Bitword> words);

    const std::string& name() const { return name_; }
    Code renamed(std::string name) const;

    int length() const { return n_; }
    bool is_linear() const { return linear_.has_value(); }
    // Dimension k of a linear code.
    int dimension() const;
    BigInt size() const;
    bool contains_zero() const;

    const std::vector<Bitword>& generator_rows() const;

    // All codewords, sorted. For linear codes this enumerates 2^k words and
    // is subject to the explicit-word cap.
    const std::vector<Bitword>& codewords(const EnumerationLimits& limits = {}) const;

    const WeightEnumerator& weight_enumerator(const EnumerationLimits& limits = {}) const;

  private:
    struct Cache;

    std::string name_;
    int n_ = 0;
    std::optional<std::vector<Bitword>> linear_;  // generator rows if linear
    std::shared_ptr<Cache> cache_;
};

// Exact weight distribution of a code (eq-style message enumeration for
// linear codes, direct counting otherwise).
WeightEnumerator weight_enumerator(const Code& code, const EnumerationLimits& limits = {});

// Binary image of a Z4-linear code under the Gray map
// 0 -> (0,0), 1 -> (0,1), 2 -> (1,1), 3 -> (1,0),
// as an explicit deduplicated set of length 2 * z4_length.
Code gray_map(std::string name, const std::vector<std::vector<std::uint8_t>>& z4_rows,
              int z4_length, const EnumerationLimits& limits = {});

// Concatenation code C1 x ... x Cm. Linear if every summand is linear. The
// weight enumerator is the product of the summands' enumerators.
Code direct_sum(std::span<const Code> codes, const EnumerationLimits& limits = {});

struct DistanceInvariance {
    bool invariant = false;
    // First codeword (in sorted order) whose distance multiset differs from
    // the first codeword's, when not invariant.
    std::optional<Bitword> violator;
};

// Necessary condition for geometric uniformity: every codeword sees the same
// multiset of Hamming distances. Linear codes pass trivially.
DistanceInvariance distance_invariance_check(const Code& code, const EnumerationLimits& limits = {});

// Minimum nonzero Hamming distance and the number of codewords at that
// distance from a fixed codeword (equal to A_d for linear and
// distance-invariant codes). Rejects single-codeword codes.
int min_distance(const Code& code, const EnumerationLimits& limits = {});
std::uint64_t kissing_number(const Code& code, const EnumerationLimits& limits = {});

}  // namespace latsec

#endif
