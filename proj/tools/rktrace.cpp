#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <rktrace/rktrace.hpp>

namespace {

using namespace rktrace;

std::optional<std::uint32_t> parse_modulus(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("modulus must be a hex mask, got '" + s + "'");
    }
    if (pos != s.size() || v > 0xffffffffull)
        throw std::invalid_argument("modulus must be a hex mask, got '" + s + "'");
    return static_cast<std::uint32_t>(v);
}

unsigned default_threads() {
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

std::vector<std::uint32_t> parse_coalition(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const unsigned long v = std::stoul(tok, &pos, 10);
        if (pos != tok.size()) throw std::invalid_argument("bad participant '" + tok + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw std::invalid_argument("coalition is empty");
    return out;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << body;
    if (!out.flush()) throw std::invalid_argument("cannot write " + path);
}

int cmd_info(int m, int k, const std::string& modulus, const std::string& format) {
    const InfoReport info = make_info_report(m, k, parse_modulus(modulus));
    if (format == "json") {
        std::cout << info.to_json().dump(2) << "\n";
    } else {
        const auto w1 = std::next(info.predicted.entries.begin());
        const auto w2 = std::prev(info.predicted.entries.end());
        std::cout << "m = " << info.m << ", k = " << info.k
                  << ", modulus = " << hex_string(info.modulus) << "\n"
                  << "n = " << info.params.n << "\n"
                  << "N = " << info.params.N << ", K = " << info.params.K << "\n"
                  << "w_1 = " << w1->first << " (frequency " << w1->second << ")\n"
                  << "w_2 = " << w2->first << " (frequency " << w2->second << ")\n"
                  << "griesmer sum at d = " << info.optimality.griesmer_sum_at_d << ", at d+1 = "
                  << info.optimality.griesmer_sum_at_d_plus_1 << ", N = " << info.params.N << "\n"
                  << "optimal = " << (info.optimality.optimal ? "true" : "false") << "\n";
        if (info.gap_identity)
            std::cout << "gap identity = " << *info.gap_identity << "\n";
        else
            std::cout << "gap identity violated: " << info.gap_witness << "\n";
    }
    return info.ok ? 0 : 1;
}

int cmd_verify(int m, int k, const std::string& modulus, unsigned threads,
               const std::string& format) {
    const VerifyReport report = run_verify(m, k, parse_modulus(modulus), threads);
    if (format == "text") {
        for (const ClaimReport& c : report.claims) {
            std::cout << (c.verified ? "verified  " : "VIOLATED  ") << c.claim;
            if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
            std::cout << "\n";
        }
        std::cout << (report.all_verified ? "all claims verified" : "claims violated") << "\n";
    } else {
        std::cout << report.to_json().dump(2) << "\n";
    }
    return report.all_verified ? 0 : 1;
}

int cmd_export(const std::string& what, int m, int k, const std::string& modulus, unsigned threads,
               const std::string& format, const std::string& out) {
    const CodeSpec code = make_code(m, k, parse_modulus(modulus));

    if (what == "matrix") {
        const BitMatrix g = binary_generator_matrix(code);
        if (format == "csv") {
            std::string body;
            for (std::size_t r = 0; r < g.rows; ++r) {
                for (std::size_t c = 0; c < g.cols; ++c) {
                    if (c) body += ',';
                    body += g.get(r, c) ? '1' : '0';
                }
                body += '\n';
            }
            write_text(out, body);
        } else if (format == "hex" || format == "text") {
            std::string body;
            for (std::size_t r = 0; r < g.rows; ++r) body += word_to_hex(g.row_word(r)) + "\n";
            write_text(out, body);
        } else if (format == "json") {
            Json rows = Json::array();
            for (std::size_t r = 0; r < g.rows; ++r) rows.push_back(word_to_hex(g.row_word(r)));
            const Json j{{"m", m},           {"k", k},
                         {"modulus", hex_string(code.ring.field.modulus)},
                         {"N", code.N},      {"K", code.K},
                         {"rows", rows}};
            write_text(out, j.dump(2) + "\n");
        } else {
            throw std::invalid_argument("matrix formats: csv, hex, json");
        }
        return 0;
    }

    if (what == "codewords") {
        if (format == "csv") {
            std::string body;
            for (std::uint64_t ae = 0; ae < code.ring_size(); ++ae) {
                const RingElement a = r_decode(code.ring, ae);
                const auto masks = evaluate_masks(code, a);
                const BinaryWord y = gray_map_masks(code.ring.k, masks);
                body += r_to_hex(a) + "," + std::to_string(y.popcount()) + "," +
                        word_to_bit_string(y) + "\n";
            }
            write_text(out, body);
        } else if (format == "json") {
            Json arr = Json::array();
            for (std::uint64_t ae = 0; ae < code.ring_size(); ++ae) {
                const RingElement a = r_decode(code.ring, ae);
                const BinaryWord y = gray_map_masks(code.ring.k, evaluate_masks(code, a));
                arr.push_back(Json{{"a", r_to_hex(a)},
                                   {"weight", y.popcount()},
                                   {"bits", word_to_bit_string(y)}});
            }
            const Json j{{"m", m},
                         {"k", k},
                         {"modulus", hex_string(code.ring.field.modulus)},
                         {"codewords", arr}};
            write_text(out, j.dump(2) + "\n");
        } else {
            throw std::invalid_argument("codeword formats: csv, json");
        }
        return 0;
    }

    if (what == "distribution") {
        const WeightDistribution d = weight_distribution(code, threads);
        const bool matches = d == predicted_distribution(m, k);
        if (format == "csv") {
            std::string body;
            for (const auto& [w, f] : d.entries) body += w.str() + "," + f.str() + "\n";
            write_text(out, body);
        } else if (format == "json") {
            const Json j =
                code_report_json(m, k, BigInt(code.n), BigInt(code.N), code.K, d, matches);
            write_text(out, j.dump(2) + "\n");
        } else {
            throw std::invalid_argument("distribution formats: csv, json");
        }
        return matches ? 0 : 1;
    }

    throw std::invalid_argument("export targets: matrix, codewords, distribution");
}

int cmd_sss_access(int m, int k, const std::string& modulus, std::uint64_t seed,
                   const std::string& format) {
    const SharingScheme s = build_scheme(m, k, seed, parse_modulus(modulus));
    const AccessStructure a = minimal_access_sets(s);
    if (format == "text") {
        for (const auto& set : a.minimal_sets) {
            std::string line;
            for (std::uint32_t p : set) {
                if (!line.empty()) line += ',';
                line += std::to_string(p);
            }
            std::cout << "{" << line << "}\n";
        }
        std::cout << "dictators:";
        for (std::uint32_t p : a.dictators) std::cout << " " << p;
        std::cout << "\n";
    } else {
        Json sets = Json::array();
        for (const auto& set : a.minimal_sets) sets.push_back(set);
        const Json j{{"m", m},
                     {"k", k},
                     {"modulus", hex_string(s.code.ring.field.modulus)},
                     {"participants", s.participants()},
                     {"minimal_sets", sets},
                     {"dictators", a.dictators}};
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_sss_deal(int m, int k, const std::string& modulus, int secret, std::uint64_t seed,
                 const std::string& out) {
    const std::optional<std::uint32_t> mod = parse_modulus(modulus);
    const SharingScheme s = build_scheme(m, k, seed, mod);
    const std::vector<std::uint8_t> word = deal(s, secret);
    Json shares = Json::array();
    for (std::size_t p = 1; p < word.size(); ++p)
        shares.push_back(Json{{"participant", p}, {"bit", static_cast<int>(word[p])}});
    Json j{{"m", m},
           {"k", k},
           {"seed", seed},
           {"rng", s.rng_id},
           {"secret_position", 0},
           {"shares", shares}};
    if (mod) j["modulus"] = hex_string(*mod);
    write_text(out, j.dump(2) + "\n");
    return 0;
}

int cmd_sss_reconstruct(const std::string& shares_path, const std::string& coalition_text) {
    std::ifstream in(shares_path);
    if (!in) throw std::invalid_argument("cannot read " + shares_path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed share file: " + std::string(e.what()));
    }
    if (!j.contains("m") || !j.contains("k") || !j.contains("seed") || !j.contains("shares"))
        throw std::invalid_argument("malformed share file: missing fields");
    const int m = j.at("m").get<int>();
    const int k = j.at("k").get<int>();
    const std::uint64_t seed = j.at("seed").get<std::uint64_t>();
    std::optional<std::uint32_t> mod;
    if (j.contains("modulus")) mod = parse_modulus(j.at("modulus").get<std::string>());

    std::map<std::uint32_t, int> shares;
    for (const Json& entry : j.at("shares"))
        shares[entry.at("participant").get<std::uint32_t>()] = entry.at("bit").get<int>();

    const SharingScheme s = build_scheme(m, k, seed, mod);
    const std::vector<std::uint32_t> coalition = parse_coalition(coalition_text);
    const std::optional<int> secret = reconstruct(s, coalition, shares);
    if (secret)
        std::cout << *secret << "\n";
    else
        std::cout << "unauthorized\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-weight trace codes over F_{2^m}[u_1..u_k], with verification, export, and secret sharing"};
    app.require_subcommand(1);

    int m = 0, k = 0, secret = 0;
    std::string modulus, out, what, shares_path, coalition;
    std::string info_format = "text", verify_format = "json", export_format = "csv",
                access_format = "json";
    unsigned threads = default_threads();
    std::uint64_t seed = 0;

    CLI::App* info = app.add_subcommand("info", "closed-form parameters and verdicts");
    info->add_option("--m", m, "field extension degree")->required();
    info->add_option("--k", k, "number of nilpotent generators")->required();
    info->add_option("--modulus", modulus, "field modulus as a hex mask");
    info->add_option("--format", info_format, "text or json");

    CLI::App* verify = app.add_subcommand("verify", "exhaustive claim checks");
    verify->add_option("--m", m, "field extension degree")->required();
    verify->add_option("--k", k, "number of nilpotent generators")->required();
    verify->add_option("--modulus", modulus, "field modulus as a hex mask");
    verify->add_option("--threads", threads, "worker count");
    verify->add_option("--format", verify_format, "json or text");

    CLI::App* exp = app.add_subcommand("export", "write matrix, codewords, or distribution");
    exp->add_option("what", what, "matrix, codewords, or distribution")->required();
    exp->add_option("--m", m, "field extension degree")->required();
    exp->add_option("--k", k, "number of nilpotent generators")->required();
    exp->add_option("--modulus", modulus, "field modulus as a hex mask");
    exp->add_option("--threads", threads, "worker count");
    exp->add_option("--format", export_format, "csv, hex (matrix), or json");
    exp->add_option("--out", out, "output path")->required();

    CLI::App* sss = app.add_subcommand("sss", "secret sharing on the binary image");
    sss->require_subcommand(1);

    CLI::App* access = sss->add_subcommand("access", "minimal access sets and dictators");
    access->add_option("--m", m, "field extension degree")->required();
    access->add_option("--k", k, "number of nilpotent generators")->required();
    access->add_option("--modulus", modulus, "field modulus as a hex mask");
    access->add_option("--seed", seed, "dealer seed");
    access->add_option("--format", access_format, "json or text");

    CLI::App* deal = sss->add_subcommand("deal", "deal shares into a file");
    deal->add_option("--m", m, "field extension degree")->required();
    deal->add_option("--k", k, "number of nilpotent generators")->required();
    deal->add_option("--modulus", modulus, "field modulus as a hex mask");
    deal->add_option("--secret", secret, "secret bit")->required()->check(CLI::Range(0, 1));
    deal->add_option("--seed", seed, "dealer seed");
    deal->add_option("--out", out, "share file path")->required();

    CLI::App* rec = sss->add_subcommand("reconstruct", "recover the secret from shares");
    rec->add_option("--shares", shares_path, "share file path")->required();
    rec->add_option("--coalition", coalition, "comma-separated participants")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(m, k, modulus, info_format);
        if (*verify) return cmd_verify(m, k, modulus, threads, verify_format);
        if (*exp) return cmd_export(what, m, k, modulus, threads, export_format, out);
        if (*access) return cmd_sss_access(m, k, modulus, seed, access_format);
        if (*deal) return cmd_sss_deal(m, k, modulus, secret, seed, out);
        if (*rec) return cmd_sss_reconstruct(shares_path, coalition);
    } catch (const rktrace::violation_error& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
