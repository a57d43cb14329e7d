#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rktrace/analysis.hpp"
#include "rktrace/bigint.hpp"
#include "rktrace/bitmat.hpp"
#include "rktrace/errors.hpp"
#include "rktrace/trace_code.hpp"

namespace rktrace {

// dealing happens in the dual of the binary image: a random dual codeword c
// gives the secret c_0 and the shares c_1..c_{N-1}; a coalition recovers the
// secret exactly when column 0 of the dealer matrix lies in the span of its
// own columns, equivalently when some codeword of the binary image has bit 0
// set and the rest of its support inside the coalition
struct SharingScheme {
    CodeSpec code;
    BitMatrix generator;     // K x N
    BitMatrix dealer_matrix; // (N - K) x N, rows span the dual
    std::uint64_t seed = 0;
    std::string rng_id = "mt19937_64";

    std::size_t participants() const { return static_cast<std::size_t>(code.N) - 1; }
};

struct AccessStructure {
    std::vector<std::vector<std::uint32_t>> minimal_sets;
    std::vector<std::uint32_t> dictators;
};

inline SharingScheme build_scheme(int m, int k, std::uint64_t seed,
                                  std::optional<std::uint32_t> modulus = std::nullopt) {
    if (m < 2) throw std::invalid_argument("m >= 2 required");
    SharingScheme s;
    s.code = make_code(m, k, modulus);
    s.generator = binary_generator_matrix(s.code);
    s.dealer_matrix = nullspace(s.generator);
    s.seed = seed;
    const std::size_t expect = static_cast<std::size_t>(s.code.N) - s.code.K;
    if (s.dealer_matrix.rows != expect)
        throw violation_error("dealer-rank", "dual basis has " + std::to_string(s.dealer_matrix.rows) +
                                                 " rows, expected " + std::to_string(expect));
    // orthogonality of every dealer row against every generator row
    for (std::size_t r = 0; r < s.dealer_matrix.rows; ++r)
        for (std::size_t g = 0; g < s.generator.rows; ++g) {
            std::uint64_t parity = 0;
            for (std::size_t w = 0; w < s.generator.stride; ++w)
                parity ^= s.dealer_matrix.data[r * s.dealer_matrix.stride + w] &
                          s.generator.data[g * s.generator.stride + w];
            if (std::popcount(parity) & 1)
                throw violation_error("dealer-orthogonality",
                                      "dual row " + std::to_string(r) +
                                          " not orthogonal to generator row " + std::to_string(g));
        }
    return s;
}

namespace detail {

// the random message is filled from successive 64-bit draws, low bits first,
// so dealing is bit-exact reproducible from (m, k, seed, secret)
inline std::vector<std::uint8_t> random_message(std::size_t nbits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> u(nbits);
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < nbits; ++i) {
        if ((i & 63) == 0) w = rng();
        u[i] = static_cast<std::uint8_t>((w >> (i & 63)) & 1);
    }
    return u;
}

inline std::vector<std::uint8_t> deal_with_seed(const SharingScheme& s, int secret,
                                                std::uint64_t seed) {
    if (secret != 0 && secret != 1) throw std::invalid_argument("secret must be a bit");
    std::vector<std::uint8_t> u = random_message(s.dealer_matrix.rows, seed);
    BinaryWord c = combine_rows(s.dealer_matrix, u);
    if (static_cast<int>(c.get(0)) != secret) {
        // flip one message bit whose dealer row is nonzero at the secret
        // position; the result stays uniform on the matching coset
        std::size_t j = s.dealer_matrix.rows;
        for (std::size_t r = 0; r < s.dealer_matrix.rows; ++r)
            if (s.dealer_matrix.get(r, 0)) {
                j = r;
                break;
            }
        if (j == s.dealer_matrix.rows)
            throw violation_error("secret-column", "every dual codeword vanishes at position 0");
        u[j] ^= 1;
        c.xor_with(s.dealer_matrix.row_word(j));
    }
    std::vector<std::uint8_t> bits(c.length);
    for (std::size_t i = 0; i < c.length; ++i) bits[i] = c.get(i) ? 1 : 0;
    return bits;
}

} // namespace detail

// returns the dealt dual codeword as bits: index 0 is the secret, index i
// is participant i's share
inline std::vector<std::uint8_t> deal(const SharingScheme& s, int secret) {
    return detail::deal_with_seed(s, secret, s.seed);
}

// solves column_0 = sum over the coalition of lambda_i column_i, then
// combines the matching shares; an unsolvable system means unauthorized
inline std::optional<int> reconstruct(const SharingScheme& s,
                                      const std::vector<std::uint32_t>& coalition,
                                      const std::map<std::uint32_t, int>& shares) {
    std::vector<std::uint32_t> t(coalition);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (std::uint32_t p : t) {
        if (p < 1 || p > s.participants())
            throw std::invalid_argument("unknown participant " + std::to_string(p));
        if (!shares.count(p))
            throw std::invalid_argument("missing share for participant " + std::to_string(p));
    }
    const std::size_t rows = s.dealer_matrix.rows;
    BitMatrix cols = BitMatrix::zeros(rows, t.size());
    BinaryWord rhs = BinaryWord::zeros(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < t.size(); ++j) cols.set(r, j, s.dealer_matrix.get(r, t[j]));
        rhs.set(r, s.dealer_matrix.get(r, 0));
    }
    const auto lambda = solve(cols, rhs);
    if (!lambda) return std::nullopt;
    int secret = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        if ((*lambda)[j]) secret ^= shares.at(t[j]) & 1;
    return secret;
}

// minimal access sets are the supports (minus the secret position) of the
// codewords of the binary image with bit 0 set; valid once every nonzero
// codeword is minimal, which is checked first
inline AccessStructure minimal_access_sets(const SharingScheme& s) {
    const std::uint64_t count = std::uint64_t{1} << s.code.K;
    std::vector<BinaryWord> nonzero;
    nonzero.reserve(count - 1);
    std::vector<BinaryWord> with_secret_bit;
    for (std::uint64_t e = 1; e < count; ++e) {
        std::vector<std::uint8_t> coeffs(s.code.K);
        for (int r = 0; r < s.code.K; ++r) coeffs[r] = (e >> r) & 1;
        BinaryWord c = combine_rows(s.generator, coeffs);
        if (c.get(0)) with_secret_bit.push_back(c);
        nonzero.push_back(std::move(c));
    }
    const std::vector<std::size_t> offenders = brute_force_minimality(nonzero);
    if (!offenders.empty())
        throw violation_error("minimality",
                              std::to_string(offenders.size()) +
                                  " non-minimal codewords; access structure undefined");

    std::set<std::vector<std::uint32_t>> sets;
    for (const BinaryWord& c : with_secret_bit) {
        std::vector<std::uint32_t> supp;
        for (std::size_t j = 1; j < c.length; ++j)
            if (c.get(j)) supp.push_back(static_cast<std::uint32_t>(j));
        sets.insert(std::move(supp));
    }

    AccessStructure acc;
    acc.minimal_sets.assign(sets.begin(), sets.end());
    for (std::size_t i = 0; i < acc.minimal_sets.size(); ++i)
        for (std::size_t j = 0; j < acc.minimal_sets.size(); ++j)
            if (i != j &&
                std::includes(acc.minimal_sets[i].begin(), acc.minimal_sets[i].end(),
                              acc.minimal_sets[j].begin(), acc.minimal_sets[j].end()))
                throw violation_error("access-antichain",
                                      "minimal set " + std::to_string(j) + " inside set " +
                                          std::to_string(i));
    if (!acc.minimal_sets.empty()) {
        std::vector<std::uint32_t> inter = acc.minimal_sets[0];
        for (const auto& set : acc.minimal_sets) {
            std::vector<std::uint32_t> next;
            std::set_intersection(inter.begin(), inter.end(), set.begin(), set.end(),
                                  std::back_inserter(next));
            inter = std::move(next);
        }
        acc.dictators = std::move(inter);
    }
    return acc;
}

struct ProbeReport {
    bool uniform = false;
    BigInt count_secret0, count_secret1; // from the first trial
    unsigned trials_run = 0;
};

namespace detail {

// number of dealer messages u consistent with the given affine constraints:
// rows are dealer-matrix columns, rhs the observed bits
inline BigInt consistent_message_count(const SharingScheme& s,
                                       const std::vector<std::uint32_t>& positions,
                                       const std::vector<int>& observed) {
    const std::size_t rows = s.dealer_matrix.rows;
    BitMatrix sys = BitMatrix::zeros(positions.size(), rows + 1);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t r = 0; r < rows; ++r) sys.set(i, r, s.dealer_matrix.get(r, positions[i]));
        sys.set(i, rows, observed[i] & 1);
    }
    const std::vector<std::size_t> pivots = rref(sys);
    if (!pivots.empty() && pivots.back() == rows) return 0; // inconsistent
    return pow2(static_cast<unsigned>(rows - pivots.size()));
}

} // namespace detail

// exact count of dealer messages matching the coalition's observed shares,
// split by secret value; an unauthorized coalition must see a 50/50 split
inline ProbeReport perfectness_probe(const SharingScheme& s,
                                     const std::vector<std::uint32_t>& coalition,
                                     unsigned trials) {
    std::map<std::uint32_t, int> dummy;
    for (std::uint32_t p : coalition) dummy[p] = 0;
    if (reconstruct(s, coalition, dummy).has_value())
        throw std::invalid_argument("probe needs an unauthorized coalition");

    ProbeReport report;
    report.uniform = true;
    for (unsigned trial = 0; trial < trials; ++trial) {
        const int dealt_secret = static_cast<int>(trial & 1);
        const std::vector<std::uint8_t> bits =
            detail::deal_with_seed(s, dealt_secret, s.seed + trial);
        std::vector<std::uint32_t> positions(coalition);
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
        std::vector<int> observed;
        observed.reserve(positions.size() + 1);
        for (std::uint32_t p : positions) observed.push_back(bits[p]);

        positions.insert(positions.begin(), 0);
        observed.insert(observed.begin(), 0);
        BigInt c0 = detail::consistent_message_count(s, positions, observed);
        observed[0] = 1;
        BigInt c1 = detail::consistent_message_count(s, positions, observed);
        if (trial == 0) {
            report.count_secret0 = c0;
            report.count_secret1 = c1;
        }
        if (c0 != c1 || c0 == 0) report.uniform = false;
        ++report.trials_run;
    }
    return report;
}

} // namespace rktrace
