#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rktrace/bigint.hpp"
#include "rktrace/errors.hpp"
#include "rktrace/trace_code.hpp"

namespace rktrace {

// closed-form parameters of the construction at (m, k): ring length n,
// binary length N, binary dimension K, minimum Lee distance d
struct CodeParameters {
    BigInt n, N, d;
    int K;
};

inline CodeParameters code_parameters(int m, int k) {
    if (m < 2) throw std::invalid_argument("m >= 2 required");
    if (k < 1 || k > 16) throw std::out_of_range("k must be in [1,16]");
    const unsigned e = static_cast<unsigned>(m) * ((1u << k) - 1);
    CodeParameters p;
    p.n = (pow2(m) - 1) * pow2(e);
    p.N = p.n << k;
    p.K = m << k;
    p.d = (pow2(m) - 1) * pow2(e + static_cast<unsigned>(k) - 1);
    return p;
}

struct OptimalityReport {
    BigInt N, d;
    int K = 0;
    BigInt griesmer_sum_at_d;
    BigInt griesmer_sum_at_d_plus_1;
    bool optimal = false;
    BigInt gap_identity_value; // griesmer_sum_at_d_plus_1 - N
};

inline BigInt griesmer_sum(int K, const BigInt& d) {
    if (K < 1 || d < 1) throw std::invalid_argument("griesmer sum needs K >= 1, d >= 1");
    BigInt s = 0;
    for (int i = 0; i < K; ++i) s += ceil_shr(d, static_cast<unsigned>(i));
    return s;
}

// a [N, K, d+1] code would violate the Griesmer bound exactly when the sum
// at d+1 exceeds N, which certifies that [N, K, d] is distance optimal
inline OptimalityReport is_distance_optimal(const BigInt& N, int K, const BigInt& d) {
    OptimalityReport r;
    r.N = N;
    r.K = K;
    r.d = d;
    r.griesmer_sum_at_d = griesmer_sum(K, d);
    r.griesmer_sum_at_d_plus_1 = griesmer_sum(K, d + 1);
    r.optimal = r.griesmer_sum_at_d <= N && r.griesmer_sum_at_d_plus_1 > N;
    r.gap_identity_value = r.griesmer_sum_at_d_plus_1 - N;
    return r;
}

// checks the two ceiling regimes of the gap computation term by term, then
// asserts the closed form (2^k - 1)(m - 1) + k for the total gap; a mismatch
// raises a violation report carrying both values
inline BigInt griesmer_gap_identity(int m, int k) {
    const CodeParameters p = code_parameters(m, k);
    const BigInt d1 = p.d + 1;
    const unsigned P = static_cast<unsigned>(m) * ((1u << k) - 1) + static_cast<unsigned>(k) - 1;
    BigInt direct = 0;
    for (int j = 0; j < p.K; ++j) {
        const BigInt term = ceil_shr(d1, static_cast<unsigned>(j));
        const BigInt expect =
            static_cast<unsigned>(j) <= P
                ? (pow2(m) - 1) * pow2(P - static_cast<unsigned>(j)) + 1
                : pow2(static_cast<unsigned>(m) * (1u << k) + static_cast<unsigned>(k) - 1 -
                       static_cast<unsigned>(j));
        if (term != expect)
            throw violation_error("griesmer-ceiling-regimes",
                                  "(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                      ") term j=" + std::to_string(j) + " is " + term.str() +
                                      ", regime formula gives " + expect.str());
        direct += term;
    }
    const BigInt gap = direct - p.N;
    const BigInt closed = (pow2(k) - 1) * (m - 1) + k;
    if (gap != closed)
        throw violation_error("griesmer-gap-identity",
                              "(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                  ") direct gap " + gap.str() + " != closed form " + closed.str());
    return gap;
}

inline bool ab_minimality_condition(const BigInt& w_min, const BigInt& w_max) {
    if (w_min <= 0 || w_min > w_max)
        throw std::invalid_argument("need 0 < w_min <= w_max");
    return 2 * w_min > w_max;
}

// 2 w_1 - w_2 = 2^(k-1) 2^(m(2^k-1)) (2^m - 2); positive exactly when m >= 2
inline BigInt minimality_margin(int m, int k) {
    if (m < 1) throw std::invalid_argument("m >= 1 required");
    if (k < 1 || k > 16) throw std::out_of_range("k must be in [1,16]");
    const unsigned e = static_cast<unsigned>(m) * ((1u << k) - 1);
    return pow2(static_cast<unsigned>(k - 1) + e) * (pow2(m) - 2);
}

// pairwise support-inclusion scan; returns the indices of codewords whose
// support strictly contains the support of another nonzero codeword
inline std::vector<std::size_t> brute_force_minimality(const std::vector<BinaryWord>& code) {
    if (code.size() * code.size() > (std::size_t{1} << 20))
        throw std::out_of_range("pair guardrail: |code|^2 must be <= 2^20");
    std::vector<std::size_t> offenders;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i].is_zero()) continue;
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (i == j || code[j].is_zero()) continue;
            if (code[i].covers(code[j]) && code[i] != code[j]) {
                offenders.push_back(i);
                break;
            }
        }
    }
    return offenders;
}

// every nonzero x must be witnessed by some a with Tr(a x) != 0
inline bool nondegeneracy_check(const RingSpec& spec) {
    require_enumerable(spec);
    const std::uint64_t size = std::uint64_t{1} << (spec.field.m * spec.ncoeffs());
    for (std::uint64_t xe = 1; xe < size; ++xe) {
        const RingElement x = r_decode(spec, xe);
        bool witnessed = false;
        for (std::uint64_t ae = 1; ae < size && !witnessed; ++ae)
            witnessed = trace_mask(r_mul(r_decode(spec, ae), x)) != 0;
        if (!witnessed)
            throw violation_error("nondegeneracy",
                                  "x = " + r_to_text(x) + " has Tr(a x) = 0 for every a");
    }
    return true;
}

// a dual Lee distance of 3 or more would force the packing count 1 + N to
// fit under 2^K; true means that inequality fails, refuting distance >= 3
inline bool sphere_packing_step(int m, int k) {
    const CodeParameters p = code_parameters(m, k);
    return pow2(static_cast<unsigned>(p.K)) < 1 + p.N;
}

// product in the k-generator ring over F_2 on coefficient masks
inline std::uint32_t rk_mul_mask(int k, std::uint32_t s, std::uint32_t t) {
    const int nc = 1 << k;
    std::uint32_t out = 0;
    for (int A = 0; A < nc; ++A) {
        if (!((s >> A) & 1)) continue;
        for (int B = 0; B < nc; ++B)
            if (((t >> B) & 1) && !(A & B)) out ^= 1u << (A | B);
    }
    return out;
}

struct DualEntry {
    std::uint32_t position = 0;   // coordinate index into L
    std::uint32_t value_mask = 0; // coefficient mask of the entry
};

struct DualSearchResult {
    std::optional<std::vector<DualEntry>> found_weight_1;
    std::optional<std::vector<DualEntry>> found_weight_2;
    int d_prime_lower_bound = 1;
    std::optional<int> d_prime;
};

namespace detail {

// orthogonality against the m module generators suffices: evaluation is
// linear over the base ring, so spans are generated by the field power basis
inline bool dual_candidate_ok(const CodeSpec& code,
                              const std::vector<std::vector<std::uint32_t>>& gens,
                              const std::vector<DualEntry>& entries) {
    for (const auto& gen : gens) {
        std::uint32_t acc = 0;
        for (const DualEntry& e : entries) acc ^= rk_mul_mask(code.k(), e.value_mask, gen[e.position]);
        if (acc) return false;
    }
    return true;
}

inline void dual_reverify(const CodeSpec& code, const std::vector<DualEntry>& entries) {
    for (std::uint64_t ae = 0; ae < code.ring_size(); ++ae) {
        const RingElement a = r_decode(code.ring, ae);
        std::uint32_t acc = 0;
        for (const DualEntry& e : entries)
            acc ^= rk_mul_mask(code.k(), e.value_mask, trace_mask(r_mul(a, code.L[e.position])));
        if (acc)
            throw violation_error("dual-witness-reverify",
                                  "witness fails orthogonality at a encoding " + std::to_string(ae));
    }
}

} // namespace detail

// exhaustive search for dual codewords of Lee weight <= max_lee: single
// entries of weight 1 or 2, then pairs of weight-1 entries; candidates are
// scanned positions ascending, entry masks ascending, singles before pairs,
// so the first witness is canonical; any returned witness is re-verified
// against every ring element
inline DualSearchResult dual_low_weight_search(const CodeSpec& code, int max_lee) {
    if (max_lee < 1 || max_lee > 2) throw std::invalid_argument("max_lee must be 1 or 2");
    const int m = code.m();
    std::vector<std::vector<std::uint32_t>> gens;
    gens.reserve(m);
    for (int t = 0; t < m; ++t)
        gens.push_back(evaluate_masks(code, r_decode(code.ring, std::uint64_t{1} << t)));

    const std::uint32_t nmasks = 1u << code.ring.ncoeffs();
    std::vector<std::uint32_t> lee1, lee2;
    for (std::uint32_t t = 1; t < nmasks; ++t) {
        if (code.lee_table[t] == 1) lee1.push_back(t);
        if (code.lee_table[t] == 2) lee2.push_back(t);
    }

    DualSearchResult result;
    auto try_singles = [&](const std::vector<std::uint32_t>& masks)
        -> std::optional<std::vector<DualEntry>> {
        for (std::uint32_t pos = 0; pos < code.n; ++pos)
            for (std::uint32_t g : masks) {
                std::vector<DualEntry> cand{{pos, g}};
                if (detail::dual_candidate_ok(code, gens, cand)) return cand;
            }
        return std::nullopt;
    };

    result.found_weight_1 = try_singles(lee1);
    if (max_lee >= 2) {
        result.found_weight_2 = try_singles(lee2);
        if (!result.found_weight_2) {
            for (std::uint32_t i = 0; i < code.n && !result.found_weight_2; ++i)
                for (std::uint32_t j = i + 1; j < code.n && !result.found_weight_2; ++j)
                    for (std::uint32_t gi : lee1) {
                        bool found = false;
                        for (std::uint32_t gj : lee1) {
                            std::vector<DualEntry> cand{{i, gi}, {j, gj}};
                            if (detail::dual_candidate_ok(code, gens, cand)) {
                                result.found_weight_2 = cand;
                                found = true;
                                break;
                            }
                        }
                        if (found) break;
                    }
        }
    }

    if (result.found_weight_1) detail::dual_reverify(code, *result.found_weight_1);
    if (result.found_weight_2) detail::dual_reverify(code, *result.found_weight_2);

    if (result.found_weight_1) {
        result.d_prime_lower_bound = 1;
        result.d_prime = 1;
    } else if (result.found_weight_2) {
        result.d_prime_lower_bound = 2;
        result.d_prime = 2;
    } else {
        result.d_prime_lower_bound = max_lee + 1;
    }
    return result;
}

} // namespace rktrace
