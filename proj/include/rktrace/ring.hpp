#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rktrace/gf2m.hpp"

namespace rktrace {

// the ring F_{2^m}[u_1..u_k] / (u_i^2 = 0, u_i u_j = u_j u_i): an element is
// one field coefficient per subset A of {1..k}, stored at index mask A where
// bit i-1 of the mask says whether u_i divides the monomial; mask 0 is the
// constant term.  k=1 coefficients in F_2 is the base ring the Gray map and
// trace land in.

struct RingSpec {
    int k = 1;
    FieldSpec field{};

    int ncoeffs() const { return 1 << k; }
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

inline RingSpec make_ring(int k, const FieldSpec& field) {
    if (k < 1 || k > 4)
        throw std::out_of_range("k must be in [1,4], got " + std::to_string(k));
    return {k, field};
}

struct RingElement {
    RingSpec spec{};
    std::vector<std::uint32_t> c; // field reps, index = subset mask

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b) {
    if (!(a == b)) throw std::invalid_argument("ring spec mismatch");
}

inline RingElement r_zero(const RingSpec& spec) {
    return {spec, std::vector<std::uint32_t>(spec.ncoeffs(), 0)};
}

inline RingElement r_one(const RingSpec& spec) {
    RingElement a = r_zero(spec);
    a.c[0] = 1;
    return a;
}

inline RingElement r_from_coeffs(const RingSpec& spec, std::vector<std::uint32_t> coeffs) {
    if (static_cast<int>(coeffs.size()) != spec.ncoeffs())
        throw std::invalid_argument("expected " + std::to_string(spec.ncoeffs()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    for (std::uint32_t rep : coeffs)
        if (rep >> spec.field.m)
            throw std::invalid_argument("coefficient rep " + std::to_string(rep) +
                                        " out of range for m=" + std::to_string(spec.field.m));
    return {spec, std::move(coeffs)};
}

inline FieldElement r_coeff(const RingElement& a, int mask) {
    return {a.c[mask], a.spec.field};
}

inline bool r_is_zero(const RingElement& a) {
    for (std::uint32_t v : a.c)
        if (v) return false;
    return true;
}

inline RingElement r_add(const RingElement& a, const RingElement& b) {
    require_same_ring(a.spec, b.spec);
    RingElement r = a;
    for (int i = 0; i < a.spec.ncoeffs(); ++i) r.c[i] ^= b.c[i];
    return r;
}

// (sum c_A u_A)(sum d_B u_B) = sum over disjoint A,B of c_A d_B u_{A|B};
// overlapping pairs vanish because u_i^2 = 0
inline RingElement r_mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a.spec, b.spec);
    const int nc = a.spec.ncoeffs();
    RingElement r = r_zero(a.spec);
    for (int A = 0; A < nc; ++A) {
        if (a.c[A] == 0) continue;
        for (int B = 0; B < nc; ++B) {
            if ((A & B) || b.c[B] == 0) continue;
            r.c[A | B] ^= fe_mul_rep(a.spec.field, a.c[A], b.c[B]);
        }
    }
    return r;
}

inline RingElement r_scale(const FieldElement& s, const RingElement& a) {
    require_same_field(s.spec, a.spec.field);
    RingElement r = a;
    for (auto& v : r.c) v = fe_mul_rep(a.spec.field, s.rep, v);
    return r;
}

inline bool r_is_unit(const RingElement& a) {
    return a.c[0] != 0;
}

inline RingElement r_inv(const RingElement& a) {
    if (!r_is_unit(a)) throw std::domain_error("non-unit has no inverse");
    // a = c0 (1 + nu) with nu nilpotent, so 1/a = (1/c0) sum_{t=0}^{k} nu^t
    const FieldElement inv0 = fe_inv(r_coeff(a, 0));
    RingElement nu = r_scale(inv0, a);
    nu.c[0] ^= 1;
    RingElement sum = r_one(a.spec);
    RingElement p = nu;
    for (int t = 1; t <= a.spec.k; ++t) {
        sum = r_add(sum, p);
        p = r_mul(p, nu);
    }
    return r_scale(inv0, sum);
}

// canonical integer encoding: coefficient reps packed mask-major, mask 0 in
// the low m bits; every enumeration and serialization order derives from it
inline std::uint64_t r_encode(const RingElement& a) {
    const int m = a.spec.field.m;
    if (m * a.spec.ncoeffs() > 64)
        throw std::out_of_range("encoding exceeds 64 bits for m=" + std::to_string(m) +
                                ", k=" + std::to_string(a.spec.k));
    std::uint64_t e = 0;
    for (int A = a.spec.ncoeffs() - 1; A >= 0; --A) e = (e << m) | a.c[A];
    return e;
}

inline RingElement r_decode(const RingSpec& spec, std::uint64_t e) {
    const int m = spec.field.m;
    if (m * spec.ncoeffs() > 64)
        throw std::out_of_range("encoding exceeds 64 bits");
    RingElement a = r_zero(spec);
    const std::uint64_t cm = (std::uint64_t{1} << m) - 1;
    for (int A = 0; A < spec.ncoeffs(); ++A) {
        a.c[A] = static_cast<std::uint32_t>(e & cm);
        e >>= m;
    }
    if (e) throw std::invalid_argument("encoding has excess high bits");
    return a;
}

inline void require_enumerable(const RingSpec& spec) {
    if (spec.field.m * spec.ncoeffs() > 24)
        throw std::out_of_range("enumeration guardrail: m*2^k must be <= 24, got " +
                                std::to_string(spec.field.m * spec.ncoeffs()));
}

// all units (constant coefficient nonzero) in ascending encoding order;
// length (2^m - 1) * 2^(m(2^k - 1))
inline std::vector<RingElement> enumerate_units(const RingSpec& spec) {
    require_enumerable(spec);
    const int m = spec.field.m;
    const std::uint64_t nil_count = std::uint64_t{1} << (m * (spec.ncoeffs() - 1));
    const std::uint64_t unit_reps = (std::uint64_t{1} << m) - 1;
    std::vector<RingElement> units;
    units.reserve(static_cast<std::size_t>(nil_count * unit_reps));
    for (std::uint64_t rest = 0; rest < nil_count; ++rest)
        for (std::uint64_t c0 = 1; c0 <= unit_reps; ++c0)
            units.push_back(r_decode(spec, (rest << m) | c0));
    return units;
}

// coefficient-wise field squaring (a ring automorphism, not ring squaring)
inline RingElement frobenius_op(const RingElement& a) {
    RingElement r = a;
    for (auto& v : r.c) v = fe_mul_rep(a.spec.field, v, v);
    return r;
}

// bit A of the result = field trace of coefficient A
inline std::uint32_t trace_mask(const RingElement& a) {
    std::uint32_t t = 0;
    for (int A = 0; A < a.spec.ncoeffs(); ++A)
        t |= static_cast<std::uint32_t>(fe_tr_rep(a.spec.field, a.c[A])) << A;
    return t;
}

// Tr(a) = sum of the m Frobenius iterates of a; coefficient-wise this is the
// field trace, so the result has coefficients in {0,1} and can be read as an
// element of the k-generator ring over F_2
inline RingElement trace_down(const RingElement& a) {
    const std::uint32_t t = trace_mask(a);
    RingElement r = r_zero(a.spec);
    for (int A = 0; A < a.spec.ncoeffs(); ++A) r.c[A] = (t >> A) & 1;
    return r;
}

inline bool r_has_f2_coeffs(const RingElement& a) {
    for (std::uint32_t v : a.c)
        if (v > 1) return false;
    return true;
}

// text form: decimal coefficient list in mask order, e.g. "[2,3]"
inline std::string r_to_text(const RingElement& a) {
    std::string s = "[";
    for (int A = 0; A < a.spec.ncoeffs(); ++A) {
        if (A) s += ',';
        s += std::to_string(a.c[A]);
    }
    return s + "]";
}

inline RingElement r_from_text(const RingSpec& spec, const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("ring element text must look like [c0,c1,...]");
    std::vector<std::uint32_t> coeffs;
    std::string cur;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
            coeffs.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    if (cur.empty())
        throw std::invalid_argument("ring element text must look like [c0,c1,...]");
    coeffs.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
    return r_from_coeffs(spec, std::move(coeffs));
}

// compact form: the canonical encoding in hex (m-bit fields, mask 0 low)
inline std::string r_to_hex(const RingElement& a) {
    return hex_string(r_encode(a));
}

} // namespace rktrace
