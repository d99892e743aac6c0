#ifndef LATSEC_BITWORD_HPP
#define LATSEC_BITWORD_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "latsec/errors.hpp"

namespace latsec {

// A binary word of up to 128 bits, packed into two machine words.
// Bit i is the i-th coordinate of the codeword (coordinate 0 first in the
// string form).
struct Bitword {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int kMaxBits = 128;

    constexpr bool test(int i) const {
        return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
    }
    constexpr void set(int i, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        std::uint64_t& limb = i < 64 ? lo : hi;
        limb = v ? (limb | m) : (limb & ~m);
    }
    constexpr int popcount() const {
        return std::popcount(lo) + std::popcount(hi);
    }
    constexpr bool is_zero() const { return lo == 0 && hi == 0; }

    friend constexpr Bitword operator^(Bitword a, Bitword b) {
        return {a.lo ^ b.lo, a.hi ^ b.hi};
    }
    friend constexpr Bitword operator&(Bitword a, Bitword b) {
        return {a.lo & b.lo, a.hi & b.hi};
    }
    constexpr Bitword& operator^=(Bitword o) {
        lo ^= o.lo;
        hi ^= o.hi;
        return *this;
    }
    friend constexpr bool operator==(Bitword, Bitword) = default;
    friend constexpr auto operator<=>(Bitword a, Bitword b) {
        // Lexicographic in coordinate order: coordinate 0 is most significant.
        std::uint64_t ra = bitrev(a.lo), rb = bitrev(b.lo);
        if (ra != rb) return ra <=> rb;
        return bitrev(a.hi) <=> bitrev(b.hi);
    }

    // Hamming distance.
    friend constexpr int distance(Bitword a, Bitword b) {
        return (a ^ b).popcount();
    }

    // Circular left shift by s positions within an n-bit word.
    Bitword rotl(int s, int n) const;

    std::string to_string(int n) const;
    static Bitword from_string(std::string_view bits);

  private:
    static constexpr std::uint64_t bitrev(std::uint64_t x) {
        x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
        x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
        x = ((x & 0x0f0f0f0f0f0f0f0full) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0full);
        x = ((x & 0x00ff00ff00ff00ffull) << 8) | ((x >> 8) & 0x00ff00ff00ff00ffull);
        x = ((x & 0x0000ffff0000ffffull) << 16) | ((x >> 16) & 0x0000ffff0000ffffull);
        return (x << 32) | (x >> 32);
    }
};

inline Bitword Bitword::rotl(int s, int n) const {
    Bitword out;
    for (int i = 0; i < n; ++i)
        if (test(i)) out.set((i + s) % n);
    return out;
}

inline std::string Bitword::to_string(int n) const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Bitword Bitword::from_string(std::string_view bits) {
    if (bits.size() > kMaxBits)
        throw validation_error("codeword longer than 128 bits: " + std::string(bits));
    Bitword w;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            w.set(static_cast<int>(i));
        else if (bits[i] != '0')
            throw validation_error("codeword string must be over {0,1}: " + std::string(bits));
    }
    return w;
}

struct BitwordHash {
    std::size_t operator()(const Bitword& w) const {
        std::uint64_t x = w.lo * 0x9e3779b97f4a7c15ull;
        x ^= w.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x);
    }
};

}  // namespace latsec

#endif
