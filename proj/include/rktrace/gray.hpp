#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rktrace/ring.hpp"

namespace rktrace {

struct BinaryWord {
    std::size_t length = 0;
    std::vector<std::uint64_t> words; // bit j = words[j >> 6] >> (j & 63)

    static BinaryWord zeros(std::size_t n) {
        return {n, std::vector<std::uint64_t>((n + 63) / 64, 0)};
    }

    bool get(std::size_t j) const { return (words[j >> 6] >> (j & 63)) & 1; }

    void set(std::size_t j, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (v)
            words[j >> 6] |= bit;
        else
            words[j >> 6] &= ~bit;
    }

    void xor_with(const BinaryWord& o) {
        if (o.length != length) throw std::invalid_argument("word length mismatch");
        for (std::size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_zero() const {
        for (std::uint64_t w : words)
            if (w) return false;
        return true;
    }

    // true when o's support is contained in ours
    bool covers(const BinaryWord& o) const {
        for (std::size_t i = 0; i < words.size(); ++i)
            if (o.words[i] & ~words[i]) return false;
        return true;
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend bool operator<(const BinaryWord& a, const BinaryWord& b) {
        if (a.length != b.length) return a.length < b.length;
        for (std::size_t i = a.words.size(); i-- > 0;)
            if (a.words[i] != b.words[i]) return a.words[i] < b.words[i];
        return false;
    }
};

// hex serialization: bit j of the word = bit (j mod 4) of hex digit j/4,
// digits written left to right; lengths not divisible by 4 pad with zeros
inline std::string word_to_hex(const BinaryWord& y) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve((y.length + 3) / 4);
    for (std::size_t d = 0; d * 4 < y.length; ++d) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            const std::size_t j = d * 4 + b;
            if (j < y.length && y.get(j)) v |= 1u << b;
        }
        s += digits[v];
    }
    return s;
}

inline std::string word_to_bit_string(const BinaryWord& y) {
    std::string s;
    s.reserve(y.length);
    for (std::size_t j = 0; j < y.length; ++j) s += y.get(j) ? '1' : '0';
    return s;
}

inline BinaryWord word_from_bit_string(const std::string& s) {
    BinaryWord y = BinaryWord::zeros(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] != '0' && s[j] != '1') throw std::invalid_argument("expected a 0/1 string");
        y.set(j, s[j] == '1');
    }
    return y;
}

// single-coordinate Gray image of an F_2-coefficient element given as its
// coefficient mask t (bit A = coefficient of u_A): split off the last
// generator, t = (lo, hi) with hi the coefficients of monomials containing
// u_k, and map to (image of hi, image of lo+hi)
inline std::uint32_t gray_mask(int k, std::uint32_t t) {
    if (k == 0) return t & 1;
    const unsigned h = 1u << (k - 1); // half width in bits
    const std::uint32_t lo = t & ((1u << h) - 1), hi = t >> h;
    return gray_mask(k - 1, hi) | (gray_mask(k - 1, lo ^ hi) << h);
}

// per-coordinate Lee weight = Hamming weight of the single-coordinate image
inline int lee_weight_mask(int k, std::uint32_t t) {
    return std::popcount(gray_mask(k, t));
}

namespace detail {

// whole-vector recursion: the image of a length-n vector is two length-
// (2^(k-1) n) blocks, block 1 from the u_k parts, block 2 from the sums
inline std::vector<std::uint8_t> gray_bits(int k, const std::vector<std::uint32_t>& v) {
    if (k == 0) {
        std::vector<std::uint8_t> bits(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) bits[i] = static_cast<std::uint8_t>(v[i] & 1);
        return bits;
    }
    const unsigned h = 1u << (k - 1);
    std::vector<std::uint32_t> hi(v.size()), mix(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        hi[i] = v[i] >> h;
        mix[i] = (v[i] & ((1u << h) - 1)) ^ hi[i];
    }
    std::vector<std::uint8_t> a = gray_bits(k - 1, hi);
    std::vector<std::uint8_t> b = gray_bits(k - 1, mix);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace detail

inline BinaryWord gray_map_masks(int k, const std::vector<std::uint32_t>& masks) {
    const std::vector<std::uint8_t> bits = detail::gray_bits(k, masks);
    BinaryWord y = BinaryWord::zeros(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) y.set(j, true);
    return y;
}

inline std::vector<std::uint32_t> coefficient_masks(const std::vector<RingElement>& word) {
    std::vector<std::uint32_t> masks;
    masks.reserve(word.size());
    for (const RingElement& a : word) {
        if (!r_has_f2_coeffs(a))
            throw std::invalid_argument("gray map needs F_2 coefficients");
        std::uint32_t t = 0;
        for (int A = 0; A < a.spec.ncoeffs(); ++A) t |= (a.c[A] & 1) << A;
        masks.push_back(t);
    }
    return masks;
}

inline BinaryWord gray_map(const std::vector<RingElement>& word) {
    if (word.empty()) return BinaryWord::zeros(0);
    return gray_map_masks(word[0].spec.k, coefficient_masks(word));
}

inline std::size_t lee_weight(const std::vector<RingElement>& word) {
    return gray_map(word).popcount();
}

// independent weight oracle: 2 w_H(y) = length - sum of (-1)^y_j
inline std::int64_t hamming_via_character_sum(const BinaryWord& y) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < y.length; ++j) s += y.get(j) ? -1 : 1;
    return (static_cast<std::int64_t>(y.length) - s) / 2;
}

} // namespace rktrace
