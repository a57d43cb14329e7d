#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rktrace {

// polynomials over F_2 as bit masks, bit i = coefficient of x^i

inline int poly_degree(std::uint64_t p) {
    return p ? 63 - std::countl_zero(p) : -1;
}

inline std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
    const int df = poly_degree(f);
    for (int d = poly_degree(a); d >= df; d = poly_degree(a))
        a ^= f << (d - df);
    return a;
}

// smallest nontrivial divisor of degree <= m/2, or 0 when none exists;
// a reducible degree-m polynomial always has such a factor
inline std::uint64_t reducible_factor(std::uint64_t f, int m) {
    for (int d = 1; 2 * d <= m; ++d)
        for (std::uint64_t g = std::uint64_t{1} << d; g < (std::uint64_t{2} << d); ++g)
            if (poly_mod(f, g) == 0) return g;
    return 0;
}

inline std::string hex_string(std::uint64_t v) {
    static const char digits[] = "0123456789abcdef";
    if (v == 0) return "0x0";
    std::string s;
    while (v) {
        s.insert(s.begin(), digits[v & 0xf]);
        v >>= 4;
    }
    return "0x" + s;
}

struct FieldSpec {
    int m = 1;
    std::uint32_t modulus = 0x2;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElement {
    std::uint32_t rep = 0;
    FieldSpec spec{};

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// lexicographically smallest irreducible polynomial of each degree
inline std::uint32_t default_modulus(int m) {
    static const std::uint32_t table[17] = {
        0,       0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,
        0x11b,   0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,
        0x1002b,
    };
    return table[m];
}

inline FieldSpec make_field(int m, std::optional<std::uint32_t> modulus = std::nullopt) {
    if (m < 1 || m > 16)
        throw std::out_of_range("field degree m must be in [1,16], got " + std::to_string(m));
    const std::uint32_t f = modulus ? *modulus : default_modulus(m);
    if (poly_degree(f) != m)
        throw std::invalid_argument("modulus " + hex_string(f) + " does not have degree " +
                                    std::to_string(m));
    if (std::uint64_t g = reducible_factor(f, m))
        throw std::invalid_argument("reducible modulus " + hex_string(f) + ": divisible by " +
                                    hex_string(g));
    return {m, f};
}

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw std::invalid_argument("field spec mismatch");
}

inline FieldElement fe(const FieldSpec& spec, std::uint32_t rep) {
    if (rep >> spec.m)
        throw std::invalid_argument("element rep " + std::to_string(rep) +
                                    " out of range for m=" + std::to_string(spec.m));
    return {rep, spec};
}

inline std::uint32_t fe_mul_rep(const FieldSpec& spec, std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(poly_mod(poly_mul(a, b), spec.modulus));
}

inline FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.spec, b.spec);
    return {a.rep ^ b.rep, a.spec};
}

inline FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.spec, b.spec);
    return {fe_mul_rep(a.spec, a.rep, b.rep), a.spec};
}

inline FieldElement fe_frobenius(const FieldElement& a) {
    return {fe_mul_rep(a.spec, a.rep, a.rep), a.spec};
}

inline FieldElement fe_inv(const FieldElement& a) {
    if (a.rep == 0) throw std::domain_error("division by zero: 0 has no inverse");
    // a^(2^m - 2) by square and multiply
    std::uint32_t acc = 1, base = a.rep;
    std::uint64_t e = (std::uint64_t{1} << a.spec.m) - 2;
    while (e) {
        if (e & 1) acc = fe_mul_rep(a.spec, acc, base);
        base = fe_mul_rep(a.spec, base, base);
        e >>= 1;
    }
    return {acc, a.spec};
}

inline int fe_tr_rep(const FieldSpec& spec, std::uint32_t a) {
    // tr(a) = a + a^2 + a^4 + ... + a^(2^(m-1)), lands in {0,1}
    std::uint32_t sum = 0, t = a;
    for (int j = 0; j < spec.m; ++j) {
        sum ^= t;
        t = fe_mul_rep(spec, t, t);
    }
    return static_cast<int>(sum & 1);
}

inline int fe_tr(const FieldElement& a) {
    return fe_tr_rep(a.spec, a.rep);
}

// sum over x of (-1)^tr(z*x), x ranging over the field or its nonzero part
inline std::int64_t character_sum(const FieldElement& z, bool over_units) {
    std::int64_t s = 0;
    const std::uint32_t size = std::uint32_t{1} << z.spec.m;
    for (std::uint32_t x = over_units ? 1 : 0; x < size; ++x)
        s += fe_tr_rep(z.spec, fe_mul_rep(z.spec, z.rep, x)) ? -1 : 1;
    return s;
}

} // namespace rktrace
