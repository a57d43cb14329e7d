#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rktrace/analysis.hpp"
#include "rktrace/trace_code.hpp"

namespace rktrace {

using Json = nlohmann::json;

// exact integers go through as JSON numbers while they are safely
// representable, as decimal strings beyond that
inline Json big_json(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v >= 0 && v < lim) return static_cast<std::uint64_t>(v);
    if (v < 0 && -v < lim) return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json distribution_json(const WeightDistribution& d) {
    Json arr = Json::array();
    for (const auto& [w, f] : d.entries)
        arr.push_back(Json{{"weight", big_json(w)}, {"frequency", big_json(f)}});
    return arr;
}

inline Json code_report_json(int m, int k, const BigInt& n, const BigInt& N, int K,
                             const WeightDistribution& d, bool matches_prediction) {
    return Json{{"m", m},
                {"k", k},
                {"n", big_json(n)},
                {"N", big_json(N)},
                {"K", K},
                {"distribution", distribution_json(d)},
                {"matches_prediction", matches_prediction}};
}

struct ClaimReport {
    std::string claim;
    Json parameters;
    bool verified = false;
    std::string witness; // empty when there is nothing to point at
    double elapsed = 0;  // seconds

    Json to_json() const {
        Json j{{"claim", claim},
               {"parameters", parameters},
               {"status", verified ? "verified" : "violated"},
               {"elapsed", elapsed}};
        if (!witness.empty()) j["witness"] = witness;
        return j;
    }
};

struct VerifyReport {
    int m = 0, k = 0;
    std::uint32_t modulus = 0;
    std::vector<ClaimReport> claims;
    WeightDistribution observed;
    bool all_verified = true;

    Json to_json() const {
        Json arr = Json::array();
        for (const ClaimReport& c : claims) arr.push_back(c.to_json());
        return Json{{"m", m},
                    {"k", k},
                    {"modulus", hex_string(modulus)},
                    {"claims", arr},
                    {"all_verified", all_verified}};
    }
};

namespace detail {

class ClaimRunner {
  public:
    ClaimRunner(VerifyReport& report, Json parameters)
        : report_(report), parameters_(std::move(parameters)) {}

    // fn returns pass/fail and may set the witness text; violations thrown
    // by checked operations become failed claims with their witness
    void run(const std::string& claim, const std::function<bool(std::string&)>& fn) {
        ClaimReport c;
        c.claim = claim;
        c.parameters = parameters_;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.verified = fn(c.witness);
        } catch (const violation_error& e) {
            c.verified = false;
            c.witness = e.witness;
        }
        c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!c.verified) report_.all_verified = false;
        report_.claims.push_back(std::move(c));
    }

  private:
    VerifyReport& report_;
    Json parameters_;
};

inline std::string entries_text(const CodeSpec& code, const std::vector<DualEntry>& entries) {
    std::string s;
    for (const DualEntry& e : entries) {
        if (!s.empty()) s += ", ";
        std::string gamma = "[";
        for (int A = 0; A < code.ring.ncoeffs(); ++A) {
            if (A) gamma += ',';
            gamma += std::to_string((e.value_mask >> A) & 1);
        }
        gamma += "]";
        s += "position " + std::to_string(e.position) + " value " + gamma;
    }
    return s;
}

} // namespace detail

// runs the full claim suite at one parameter point, in a fixed order:
// enumeration, weight spectrum, per-codeword weights, distance optimality
// with the gap identity, minimality, nondegeneracy, dual distance, and the
// coordinate group action
inline VerifyReport run_verify(int m, int k, std::optional<std::uint32_t> modulus = std::nullopt,
                               unsigned threads = 1) {
    if (m < 2) throw std::invalid_argument("m >= 2 required");
    const CodeSpec code = make_code(m, k, modulus);

    VerifyReport report;
    report.m = m;
    report.k = k;
    report.modulus = code.ring.field.modulus;

    detail::ClaimRunner runner(
        report, Json{{"m", m}, {"k", k}, {"modulus", hex_string(code.ring.field.modulus)}});

    runner.run("code-enumeration", [&](std::string& witness) {
        const CodeParameters p = code_parameters(m, k);
        if (BigInt(code.n) != p.n || BigInt(code.N) != p.N || code.K != p.K) {
            witness = "lengths disagree with the closed forms";
            return false;
        }
        // distinct codewords by linearity: only a = 0 may evaluate to zero
        for (std::uint64_t ae = 1; ae < code.ring_size(); ++ae) {
            const RingElement a = r_decode(code.ring, ae);
            bool nonzero = false;
            for (const RingElement& x : code.L) {
                if (trace_mask(r_mul(a, x)) != 0) {
                    nonzero = true;
                    break;
                }
            }
            if (!nonzero) {
                witness = "ev collapses a = " + r_to_text(a);
                return false;
            }
        }
        return true;
    });

    CodeScan scan;
    runner.run("weight-spectrum", [&](std::string& witness) {
        scan = scan_code(code, threads);
        WeightDistribution observed;
        for (const auto& [w, f] : scan.distribution) observed.add(w, f);
        report.observed = observed;
        const WeightDistribution predicted = predicted_distribution(m, k);
        if (observed == predicted) return true;
        for (const auto& [w, f] : predicted.entries) {
            const auto it = observed.entries.find(w);
            if (it == observed.entries.end() || it->second != f) {
                witness = "weight " + w.str() + ": predicted frequency " + f.str() + ", observed " +
                          (it == observed.entries.end() ? std::string("0") : it->second.str());
                return false;
            }
        }
        witness = "observed spectrum has extra weights";
        return false;
    });

    runner.run("weight-cases", [&](std::string& witness) {
        if (!scan.first_case_mismatch) return true;
        const RingElement a = r_decode(code.ring, *scan.first_case_mismatch);
        witness = "a = " + r_to_text(a) + " disagrees with the case formula";
        return false;
    });

    runner.run("griesmer-optimality", [&](std::string& witness) {
        const CodeParameters p = code_parameters(m, k);
        const OptimalityReport opt = is_distance_optimal(p.N, p.K, p.d);
        if (!opt.optimal) {
            witness = "sum at d is " + opt.griesmer_sum_at_d.str() + ", at d+1 is " +
                      opt.griesmer_sum_at_d_plus_1.str() + ", N = " + p.N.str();
            return false;
        }
        griesmer_gap_identity(m, k); // throws a violation on mismatch
        return true;
    });

    runner.run("minimality", [&](std::string& witness) {
        const WeightDistribution predicted = predicted_distribution(m, k);
        const BigInt w1 = std::next(predicted.entries.begin())->first;
        const BigInt w2 = std::prev(predicted.entries.end())->first;
        const BigInt margin = minimality_margin(m, k);
        const bool ab = ab_minimality_condition(w1, w2);
        if (ab != (margin > 0) || 2 * w1 - w2 != margin) {
            witness = "weight-ratio condition and margin formula disagree";
            return false;
        }
        if (!ab) {
            witness = "2 w_1 <= w_2";
            return false;
        }
        const std::uint64_t count = code.ring_size();
        if ((count - 1) * (count - 1) > (std::uint64_t{1} << 20)) {
            witness = "support scan skipped: pair guardrail";
            return true;
        }
        const BitMatrix g = binary_generator_matrix(code);
        std::vector<BinaryWord> words;
        words.reserve(count - 1);
        for (std::uint64_t e = 1; e < count; ++e) {
            std::vector<std::uint8_t> coeffs(code.K);
            for (int r = 0; r < code.K; ++r) coeffs[r] = (e >> r) & 1;
            words.push_back(combine_rows(g, coeffs));
        }
        const std::vector<std::size_t> offenders = brute_force_minimality(words);
        if (!offenders.empty()) {
            witness = std::to_string(offenders.size()) + " non-minimal codewords, first at index " +
                      std::to_string(offenders.front());
            return false;
        }
        return true;
    });

    runner.run("nondegeneracy", [&](std::string&) { return nondegeneracy_check(code.ring); });

    runner.run("dual-distance", [&](std::string& witness) {
        const DualSearchResult r = dual_low_weight_search(code, 2);
        if (r.found_weight_1) {
            witness = "weight-1 dual codeword: " + detail::entries_text(code, *r.found_weight_1);
            return false;
        }
        if (!r.found_weight_2) {
            witness = "no dual codeword of Lee weight 2 found";
            return false;
        }
        if (!sphere_packing_step(m, k)) {
            witness = "packing count does not refute dual distance >= 3";
            return false;
        }
        witness = "weight-2 dual codeword: " + detail::entries_text(code, *r.found_weight_2);
        return true;
    });

    runner.run("group-action", [&](std::string& witness) {
        const bool full = code.n <= 256;
        // cached codeword masks make the composition identity a table lookup
        std::vector<std::vector<std::uint32_t>> cache;
        const bool cache_fits = code.ring_size() * code.n <= (std::uint64_t{1} << 26);
        if (cache_fits) {
            cache.reserve(code.ring_size());
            for (std::uint64_t ae = 0; ae < code.ring_size(); ++ae)
                cache.push_back(evaluate_masks(code, r_decode(code.ring, ae)));
        }
        std::vector<std::vector<std::uint32_t>> perms;
        perms.reserve(code.n);
        for (const RingElement& u : code.L) perms.push_back(coordinate_permutation(code, u));

        for (std::size_t iu = 0; iu < perms.size(); ++iu) {
            std::vector<std::uint32_t> sorted = perms[iu];
            std::sort(sorted.begin(), sorted.end());
            for (std::uint32_t i = 0; i < code.n; ++i)
                if (sorted[i] != i) {
                    witness = "unit " + r_to_text(code.L[iu]) + " does not permute coordinates";
                    return false;
                }
        }

        // composing with the permutation of u carries ev(a) to ev(a u)
        const std::uint64_t a_limit = cache_fits ? code.ring_size() : std::min<std::uint64_t>(code.ring_size(), 256);
        for (std::size_t iu = 0; iu < perms.size(); ++iu) {
            const std::vector<std::uint32_t>& pi = perms[iu];
            for (std::uint64_t ae = 0; ae < a_limit; ++ae) {
                const RingElement a = r_decode(code.ring, ae);
                const RingElement au = r_mul(a, code.L[iu]);
                const std::vector<std::uint32_t> ca_own =
                    cache_fits ? std::vector<std::uint32_t>() : evaluate_masks(code, a);
                const std::vector<std::uint32_t> cb_own =
                    cache_fits ? std::vector<std::uint32_t>() : evaluate_masks(code, au);
                const std::vector<std::uint32_t>& ca = cache_fits ? cache[ae] : ca_own;
                const std::vector<std::uint32_t>& cb = cache_fits ? cache[r_encode(au)] : cb_own;
                for (std::uint32_t i = 0; i < code.n; ++i)
                    if (ca[pi[i]] != cb[i]) {
                        witness = "composition identity fails for a = " + r_to_text(a) +
                                  ", u = " + r_to_text(code.L[iu]);
                        return false;
                    }
            }
        }

        if (full) {
            // regular action: every (from, to) pair is realized by exactly one unit
            std::vector<std::uint32_t> counts(code.n * code.n, 0);
            for (const auto& pi : perms)
                for (std::uint32_t i = 0; i < code.n; ++i) ++counts[i * code.n + pi[i]];
            for (std::uint64_t c : counts)
                if (c != 1) {
                    witness = "action is not regular";
                    return false;
                }
        } else {
            // transitivity via the orbit of coordinate 0, freeness on a sample
            std::vector<bool> hit(code.n, false);
            for (const auto& pi : perms) hit[pi[0]] = true;
            for (bool h : hit)
                if (!h) {
                    witness = "orbit of coordinate 0 is not everything";
                    return false;
                }
            witness = "regularity checked on the orbit of coordinate 0 (size guardrail)";
        }
        return true;
    });

    return report;
}

// closed-form summary used by the info command: parameters, predicted
// spectrum, the optimality verdict, and the gap identity value
struct InfoReport {
    int m = 0, k = 0;
    std::uint32_t modulus = 0;
    CodeParameters params{};
    WeightDistribution predicted;
    OptimalityReport optimality;
    std::optional<BigInt> gap_identity; // absent when the identity fails
    std::string gap_witness;            // filled on failure
    bool ok = true;

    Json to_json() const {
        Json j{{"m", m},
               {"k", k},
               {"modulus", hex_string(modulus)},
               {"n", big_json(params.n)},
               {"N", big_json(params.N)},
               {"K", params.K},
               {"distribution", distribution_json(predicted)},
               {"griesmer_sum_at_d", big_json(optimality.griesmer_sum_at_d)},
               {"griesmer_sum_at_d_plus_1", big_json(optimality.griesmer_sum_at_d_plus_1)},
               {"optimal", optimality.optimal}};
        if (gap_identity)
            j["gap_identity"] = big_json(*gap_identity);
        else
            j["gap_identity_violation"] = gap_witness;
        return j;
    }
};

inline InfoReport make_info_report(int m, int k, std::optional<std::uint32_t> modulus = std::nullopt) {
    InfoReport info;
    const FieldSpec field = make_field(m, modulus);
    info.m = m;
    info.k = k;
    info.modulus = field.modulus;
    info.params = code_parameters(m, k);
    info.predicted = predicted_distribution(m, k);
    info.optimality = is_distance_optimal(info.params.N, info.params.K, info.params.d);
    info.ok = info.optimality.optimal;
    try {
        info.gap_identity = griesmer_gap_identity(m, k);
    } catch (const violation_error& e) {
        info.gap_witness = e.witness;
        info.ok = false;
    }
    return info;
}

} // namespace rktrace
