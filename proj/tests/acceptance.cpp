// acceptance gate: one line per criterion, nonzero exit on any failure
#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <rktrace/rktrace.hpp>

using namespace rktrace;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << name;
    if (!note.empty()) std::cout << "  [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::map<std::uint64_t, std::uint64_t> observed(int m, int k) {
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& [w, f] : scan_code(make_code(m, k), 1).distribution) out[w] = f;
    return out;
}

void weight_spectra() {
    using Dist = std::map<std::uint64_t, std::uint64_t>;
    const bool ok = observed(2, 1) == Dist{{0, 1}, {12, 12}, {16, 3}} &&
                    observed(3, 1) == Dist{{0, 1}, {56, 56}, {64, 7}} &&
                    observed(2, 2) == Dist{{0, 1}, {384, 252}, {512, 3}};
    report(1, "weight-spectrum", ok);
}

void weight_cases() {
    bool ok = true;
    std::string note;
    for (const auto& [m, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        const CodeScan scan = scan_code(make_code(m, k), 1);
        if (scan.first_case_mismatch) {
            ok = false;
            note = "mismatch at (m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
        }
    }
    report(2, "weight-cases", ok, note);
}

void griesmer() {
    bool ok = is_distance_optimal(24, 4, 12).optimal && is_distance_optimal(112, 6, 56).optimal &&
              is_distance_optimal(768, 8, 384).optimal;
    std::string note;
    for (int m = 2; m <= 6; ++m)
        for (int k = 1; k <= 4; ++k) {
            try {
                const BigInt gap = griesmer_gap_identity(m, k);
                if (gap != BigInt((1 << k) - 1) * (m - 1) + k) {
                    ok = false;
                    note = "unexpected gap value at (m=" + std::to_string(m) +
                           ",k=" + std::to_string(k) + ")";
                }
            } catch (const violation_error& e) {
                ok = false;
                if (!note.empty()) note += "; ";
                note += e.witness;
            }
        }
    report(3, "griesmer-optimality", ok, note);
}

void minimality() {
    bool ok = true;
    std::string note;
    for (int m = 2; m <= 8 && ok; ++m)
        for (int k = 1; k <= 4 && ok; ++k)
            if (minimality_margin(m, k) <= 0) {
                ok = false;
                note = "margin fails at m=" + std::to_string(m) + ",k=" + std::to_string(k);
            }
    for (const auto& [m, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
        if (!ok) break;
        const CodeSpec code = make_code(m, k);
        const BitMatrix g = binary_generator_matrix(code);
        std::vector<BinaryWord> words;
        for (std::uint64_t e = 1; e < code.ring_size(); ++e) {
            std::vector<std::uint8_t> coeffs(static_cast<std::size_t>(code.K));
            for (int r = 0; r < code.K; ++r) coeffs[static_cast<std::size_t>(r)] = (e >> r) & 1;
            words.push_back(combine_rows(g, coeffs));
        }
        if (!brute_force_minimality(words).empty()) {
            ok = false;
            note = "non-minimal codeword at (m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
        }
    }
    report(4, "minimality", ok, note);
}

void nondegeneracy() {
    bool ok = true;
    std::string note;
    for (const auto& [m, k] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
        try {
            if (!nondegeneracy_check(make_ring(k, make_field(m)))) ok = false;
        } catch (const violation_error& e) {
            ok = false;
            note = e.witness;
        }
    }
    report(5, "nondegeneracy", ok, note);
}

void dual_distance() {
    bool ok = true;
    std::string note;
    for (const auto& [m, k] : {std::pair{2, 1}, std::pair{3, 1}}) {
        const DualSearchResult r = dual_low_weight_search(make_code(m, k), 2);
        if (r.found_weight_1 || !r.found_weight_2 || !r.d_prime || *r.d_prime != 2) {
            ok = false;
            note = "dual search off at (m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")";
        }
    }
    report(6, "dual-distance", ok, note);
}

void group_action() {
    const CodeSpec code = make_code(2, 1);
    bool ok = true;
    std::string note;

    std::vector<std::vector<std::uint32_t>> cache;
    for (std::uint64_t ae = 0; ae < code.ring_size(); ++ae)
        cache.push_back(evaluate_masks(code, r_decode(code.ring, ae)));

    std::vector<std::vector<std::uint32_t>> perms;
    for (const RingElement& u : code.L) perms.push_back(coordinate_permutation(code, u));
    if (perms.size() != 12) {
        ok = false;
        note = "expected 12 unit permutations";
    }

    // the permuted codeword of a is the codeword of a u, so the set is fixed
    for (std::size_t iu = 0; iu < perms.size() && ok; ++iu)
        for (std::uint64_t ae = 0; ae < code.ring_size() && ok; ++ae) {
            const RingElement a = r_decode(code.ring, ae);
            const std::uint64_t be = r_encode(r_mul(a, code.L[iu]));
            for (std::uint32_t i = 0; i < code.n; ++i)
                if (cache[ae][perms[iu][i]] != cache[be][i]) {
                    ok = false;
                    note = "composition identity fails";
                    break;
                }
        }

    // regular: each (from, to) coordinate pair is realized by exactly one unit
    std::vector<int> counts(code.n * code.n, 0);
    for (const auto& pi : perms)
        for (std::uint32_t i = 0; i < code.n; ++i) ++counts[i * code.n + pi[i]];
    for (int c : counts)
        if (c != 1) {
            ok = false;
            note = "action is not regular";
            break;
        }
    report(7, "group-action", ok, note);
}

void character_sums() {
    bool ok = true;
    std::string note;
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const std::size_t len = 1 + static_cast<std::size_t>(rng() % 512);
        BinaryWord w = BinaryWord::zeros(len);
        for (std::size_t i = 0; i < len; ++i)
            if (rng() & 1) w.set(i, true);
        if (hamming_via_character_sum(w) != static_cast<std::int64_t>(w.popcount())) {
            ok = false;
            note = "weight-by-character-sum mismatch at trial " + std::to_string(trial);
        }
    }
    for (int m = 2; m <= 8 && ok; ++m) {
        const FieldSpec f = make_field(m);
        for (std::uint32_t z = 1; z < (1u << m) && ok; ++z) {
            if (character_sum(fe(f, z), false) != 0 || character_sum(fe(f, z), true) != -1) {
                ok = false;
                note = "character sum off at m=" + std::to_string(m) + ", z=" + std::to_string(z);
            }
        }
    }
    report(8, "character-sums", ok, note);
}

void secret_sharing() {
    bool ok = true;
    std::string note;
    const SharingScheme s = build_scheme(2, 1, 20240817);
    const AccessStructure a = minimal_access_sets(s);
    if (a.dictators.empty()) {
        ok = false;
        note = "dictator set is empty";
    }
    for (int secret = 0; secret <= 1 && ok; ++secret) {
        const auto word = deal(s, secret);
        std::map<std::uint32_t, int> shares;
        for (std::size_t p = 1; p < word.size(); ++p)
            shares[static_cast<std::uint32_t>(p)] = word[p];
        for (const auto& coalition : a.minimal_sets) {
            const auto got = reconstruct(s, coalition, shares);
            if (!got || *got != secret) {
                ok = false;
                note = "minimal coalition failed to reconstruct";
                break;
            }
        }
    }
    // every singleton, plus random small coalitions, must stay perfectly blind
    std::mt19937_64 rng(7);
    std::vector<std::vector<std::uint32_t>> blind;
    for (std::uint32_t p = 1; p <= s.participants(); ++p) blind.push_back({p});
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint32_t> c;
        const std::size_t size = 2 + rng() % 9; // below every minimal-set size
        while (c.size() < size) {
            const std::uint32_t p = 1 + static_cast<std::uint32_t>(rng() % s.participants());
            if (std::find(c.begin(), c.end(), p) == c.end()) c.push_back(p);
        }
        blind.push_back(c);
    }
    for (const auto& coalition : blind) {
        if (!ok) break;
        const ProbeReport r = perfectness_probe(s, coalition, 4);
        if (!r.uniform || r.count_secret0 != r.count_secret1 || r.count_secret0 == 0) {
            ok = false;
            note = "consistency counts are not balanced";
        }
    }
    report(9, "secret-sharing", ok, note);
}

void basis_invariance() {
    const VerifyReport a = run_verify(3, 1, 0xbu);
    const VerifyReport b = run_verify(3, 1, 0xdu);
    bool ok = a.observed == b.observed && a.claims.size() == b.claims.size();
    if (ok)
        for (std::size_t i = 0; i < a.claims.size(); ++i)
            if (a.claims[i].claim != b.claims[i].claim ||
                a.claims[i].verified != b.claims[i].verified)
                ok = false;
    report(10, "basis-invariance", ok && a.all_verified && b.all_verified);
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    weight_spectra();
    weight_cases();
    griesmer();
    minimality();
    nondegeneracy();
    dual_distance();
    group_action();
    character_sums();
    secret_sharing();
    basis_invariance();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed")
              << " in " << elapsed << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
