#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rktrace/bigint.hpp"
#include "rktrace/bitmat.hpp"
#include "rktrace/errors.hpp"
#include "rktrace/gray.hpp"
#include "rktrace/ring.hpp"

namespace rktrace {

struct WeightDistribution {
    std::map<BigInt, BigInt> entries; // weight -> frequency
    BigInt total = 0;

    void add(const BigInt& weight, const BigInt& frequency) {
        entries[weight] += frequency;
        total += frequency;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// the code C = {ev(a) : a in the ring}, ev(a) = (Tr(a x)) over x in L, with
// L the unit group in canonical ascending-encoding order
struct CodeSpec {
    RingSpec ring{};
    std::uint64_t n = 0; // ring length |L|
    std::uint64_t N = 0; // binary length 2^k n
    int K = 0;           // binary dimension m 2^k
    std::vector<RingElement> L;
    std::unordered_map<std::uint64_t, std::uint32_t> index; // encoding -> coordinate
    std::vector<std::uint8_t> lee_table; // Lee weight per coefficient mask

    int m() const { return ring.field.m; }
    int k() const { return ring.k; }
    std::uint64_t ring_size() const { return std::uint64_t{1} << K; }
};

inline CodeSpec make_code(int m, int k, std::optional<std::uint32_t> modulus = std::nullopt) {
    CodeSpec code;
    code.ring = make_ring(k, make_field(m, modulus));
    require_enumerable(code.ring);
    code.L = enumerate_units(code.ring);
    code.n = code.L.size();
    code.N = code.n << k;
    code.K = m << k;
    code.index.reserve(code.L.size());
    for (std::uint32_t i = 0; i < code.L.size(); ++i)
        code.index.emplace(r_encode(code.L[i]), i);
    code.lee_table.resize(std::size_t{1} << code.ring.ncoeffs());
    for (std::size_t t = 0; t < code.lee_table.size(); ++t)
        code.lee_table[t] =
            static_cast<std::uint8_t>(lee_weight_mask(k, static_cast<std::uint32_t>(t)));
    return code;
}

inline std::vector<RingElement> evaluate(const CodeSpec& code, const RingElement& a) {
    require_same_ring(code.ring, a.spec);
    std::vector<RingElement> word;
    word.reserve(code.n);
    for (const RingElement& x : code.L) word.push_back(trace_down(r_mul(a, x)));
    return word;
}

// coefficient masks of ev(a), the form every hot path consumes
inline std::vector<std::uint32_t> evaluate_masks(const CodeSpec& code, const RingElement& a) {
    require_same_ring(code.ring, a.spec);
    std::vector<std::uint32_t> masks;
    masks.reserve(code.n);
    for (const RingElement& x : code.L) masks.push_back(trace_mask(r_mul(a, x)));
    return masks;
}

inline std::uint64_t lee_weight_of_masks(const CodeSpec& code, const std::vector<std::uint32_t>& masks) {
    std::uint64_t w = 0;
    for (std::uint32_t t : masks) w += code.lee_table[t];
    return w;
}

inline std::vector<std::pair<RingElement, std::vector<RingElement>>> enumerate_code(const CodeSpec& code) {
    std::vector<std::pair<RingElement, std::vector<RingElement>>> out;
    out.reserve(code.ring_size());
    for (std::uint64_t e = 0; e < code.ring_size(); ++e) {
        RingElement a = r_decode(code.ring, e);
        out.emplace_back(a, evaluate(code, a));
    }
    return out;
}

inline WeightDistribution predicted_distribution(int m, int k) {
    if (m < 2) throw std::invalid_argument("m >= 2 required");
    if (k < 1 || k > 4) throw std::out_of_range("k must be in [1,4]");
    const unsigned e = static_cast<unsigned>(m) * ((1u << k) - 1);
    const BigInt w1 = pow2(static_cast<unsigned>(k - 1) + e) * (pow2(m) - 1);
    const BigInt w2 = pow2(static_cast<unsigned>(m) * (1u << k) + k - 1);
    WeightDistribution d;
    d.add(0, 1);
    d.add(w1, pow2(static_cast<unsigned>(m) * (1u << k)) - pow2(m));
    d.add(w2, pow2(m) - 1);
    return d;
}

// three-case weight formula: zero maps to 0; nonzero field multiples of the
// full monomial u_1..u_k reach 2^(m 2^k + k - 1); everything else lands on
// 2^(k-1) (2^m - 1) 2^(m(2^k - 1))
inline BigInt theoretical_lee_weight(const RingElement& a) {
    const int m = a.spec.field.m, k = a.spec.k;
    if (m < 2) throw std::invalid_argument("m >= 2 required");
    if (r_is_zero(a)) return 0;
    bool top_multiple = a.c[a.spec.ncoeffs() - 1] != 0;
    for (int A = 0; A + 1 < a.spec.ncoeffs() && top_multiple; ++A)
        if (a.c[A]) top_multiple = false;
    if (top_multiple) return pow2(static_cast<unsigned>(m) * (1u << k) + k - 1);
    return pow2(static_cast<unsigned>(k - 1) + static_cast<unsigned>(m) * ((1u << k) - 1)) *
           (pow2(m) - 1);
}

struct CodeScan {
    std::map<std::uint64_t, std::uint64_t> distribution;
    std::optional<std::uint64_t> first_case_mismatch; // encoding of the offender
};

// one pass over all 2^K codewords: observed Lee weights plus agreement with
// the three-case formula; partitioned over contiguous encoding ranges with a
// deterministic in-order merge
inline CodeScan scan_code(const CodeSpec& code, unsigned threads = 1) {
    const std::uint64_t total = code.ring_size();
    if (threads == 0) threads = 1;
    if (threads > total) threads = static_cast<unsigned>(total);

    std::vector<CodeScan> parts(threads);
    auto worker = [&](unsigned t) {
        const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
        CodeScan& part = parts[t];
        for (std::uint64_t e = lo; e < hi; ++e) {
            const RingElement a = r_decode(code.ring, e);
            const std::uint64_t w = lee_weight_of_masks(code, evaluate_masks(code, a));
            ++part.distribution[w];
            if (!part.first_case_mismatch && BigInt(w) != theoretical_lee_weight(a))
                part.first_case_mismatch = e;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    CodeScan merged;
    for (const CodeScan& part : parts) {
        for (const auto& [w, f] : part.distribution) merged.distribution[w] += f;
        if (!merged.first_case_mismatch && part.first_case_mismatch)
            merged.first_case_mismatch = part.first_case_mismatch;
    }
    return merged;
}

inline WeightDistribution weight_distribution(const CodeSpec& code, unsigned threads = 1) {
    WeightDistribution d;
    for (const auto& [w, f] : scan_code(code, threads).distribution) d.add(w, f);
    return d;
}

// rows are the images of ev on the basis elements with encoding 2^r
// (field power basis crossed with the subset monomials, encoding order)
inline BitMatrix binary_generator_matrix(const CodeSpec& code) {
    std::vector<BinaryWord> rows;
    rows.reserve(code.K);
    for (int r = 0; r < code.K; ++r) {
        const RingElement basis = r_decode(code.ring, std::uint64_t{1} << r);
        rows.push_back(gray_map_masks(code.k(), evaluate_masks(code, basis)));
    }
    BitMatrix g = BitMatrix::from_rows(rows);
    const std::size_t rk = rank(g);
    if (rk != static_cast<std::size_t>(code.K))
        throw violation_error("generator-rank",
                              "internal inconsistency: rank " + std::to_string(rk) +
                                  " != K = " + std::to_string(code.K));
    return g;
}

// the permutation with L[pi(i)] = u * L[i]; composing a codeword with pi
// turns ev(a) into ev(a u), so the code is carried onto itself
inline std::vector<std::uint32_t> coordinate_permutation(const CodeSpec& code, const RingElement& u) {
    require_same_ring(code.ring, u.spec);
    if (!r_is_unit(u)) throw std::invalid_argument("coordinate action needs a unit");
    std::vector<std::uint32_t> pi(code.n);
    for (std::uint64_t i = 0; i < code.n; ++i)
        pi[i] = code.index.at(r_encode(r_mul(u, code.L[i])));
    return pi;
}

} // namespace rktrace
