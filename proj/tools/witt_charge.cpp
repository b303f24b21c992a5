// Copyright (c) 2026 The witt-charge authors.
// SPDX-License-Identifier: Apache-2.0
//
// witt-charge: command-line surface over the exact Witt-word calculus.
// Exit codes: 0 success, 1 verification failure, 2 usage/precondition error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "wittcharge/wittcharge.hpp"

namespace wc = wittcharge;

namespace {

struct Config {
    std::string format = "json";
    long precision_start = 64;
    long precision_cap = 16384;
    int threads = 1;
    wc::i64 rank_cap = 5;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Roots of unity are rendered as zeta(d)^a in the flat formats.
std::string flat_value(const wc::Json& v) {
    if (v.is_object() && v.size() == 2 && v.contains("order") && v.contains("exp"))
        return wc::RootOfUnity(v["order"].get<wc::i64>(), v["exp"].get<wc::i64>()).to_string();
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const wc::Json& result, const Config& cfg) {
    if (cfg.format == "json") {
        std::cout << result.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [key, value] : result.items())
            std::cout << csv_quote(key) << "," << csv_quote(flat_value(value)) << "\n";
        return;
    }
    // markdown
    std::cout << "| key | value |\n|---|---|\n";
    for (const auto& [key, value] : result.items())
        std::cout << "| " << key << " | " << flat_value(value) << " |\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact central-charge and signature calculus for Witt-group generators"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("WITT_CHARGE_THREADS")) cfg.threads = std::atoi(env);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision_start, "Starting precision (bits) for certified signs")
        ->capture_default_str();
    app.add_option("--precision-cap", cfg.precision_cap, "Precision cap (bits)")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (reserved; evaluation is exact and deterministic)");
    app.add_option("--rank-cap", cfg.rank_cap, "Largest rank for full category enumeration")
        ->capture_default_str();

    // category <r>
    wc::i64 cat_r = 1;
    bool cat_full = false, cat_closed = false;
    auto* cat = app.add_subcommand("category", "Invariants of the rank-r category");
    cat->add_option("r", cat_r, "rank")->required();
    cat->add_flag("--full", cat_full, "include per-simple data");
    cat->add_flag("--closed-form", cat_closed, "closed forms only, no enumeration");

    // signature
    wc::i64 sig_rank = 1, sig_k = 1, sig_modulus = 0;
    auto* sig = app.add_subcommand("signature", "Signature of sigma_k on the rank-r generator");
    sig->add_option("--rank", sig_rank)->required();
    sig->add_option("--k", sig_k)->required();
    sig->add_option("--modulus", sig_modulus, "Galois modulus (default 32r)");

    // gauss-sum
    wc::i64 gs_rank = 1, gs_n = 1;
    auto* gs = app.add_subcommand("gauss-sum", "Exact Gauss sum tau_n of the rank-r category");
    gs->add_option("--rank", gs_rank)->required();
    gs->add_option("--n", gs_n)->capture_default_str();

    // central-charge
    wc::i64 cc_rank = 1, cc_n = 1;
    auto* cc = app.add_subcommand("central-charge", "Central charge xi_n of the rank-r category");
    cc->add_option("--rank", cc_rank)->required();
    cc->add_option("--n", cc_n)->capture_default_str();

    // witt eval / witt kernel
    auto* witt = app.add_subcommand("witt", "Witt-word operations");
    witt->require_subcommand(1);
    std::string ev_word;
    wc::i64 ev_k = 1, ev_modulus = 0;
    auto* ev = witt->add_subcommand("eval", "Evaluate Xi at sigma_k");
    ev->add_option("--word", ev_word, "e.g. \"C5^3 * C23 * I^-2 * Ap3\"")->required();
    ev->add_option("--k", ev_k)->capture_default_str();
    ev->add_option("--modulus", ev_modulus, "default: the word modulus");
    std::string kn_word;
    bool kn_certify = false;
    auto* kn = witt->add_subcommand("kernel", "Kernel criterion: xi1 = 1 and trivial signature");
    kn->add_option("--word", kn_word)->required();
    kn->add_flag("--certify", kn_certify, "search for a distinguishing witness instead of sweeping");

    // sequence
    wc::i64 seq_z = 0, seq_count = 11;
    bool seq_primes = false;
    auto* seq = app.add_subcommand("sequence", "Greedy coprime sequence a_z");
    seq->add_option("z", seq_z)->capture_default_str();
    seq->add_option("count", seq_count)->capture_default_str();
    seq->add_flag("--primes", seq_primes, "prime terms only");

    // verify
    std::string verify_suite;
    wc::i64 vf_depth = -1, vf_z = 0;
    auto* vf = app.add_subcommand("verify", "Run a named verification suite");
    vf->add_option("suite", verify_suite, "lemma5.1 prop5.2 eq5.5 thm4.1 lemma6.2 prop6.3 thm6.7 prop6.9 eq6.1 all")
        ->required();
    vf->add_option("--depth", vf_depth, "structure-suite depth override");
    vf->add_option("--z", vf_z, "sequence index for the structure suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.precision_start < 8 || cfg.precision_start > cfg.precision_cap) {
            std::cerr << "error: invalid precision configuration\n";
            return 2;
        }
        wc::kSignPrecisionStart = cfg.precision_start;
        wc::kSignPrecisionCap = cfg.precision_cap;

        if (cat->parsed()) {
            if (cat_r < 1) throw wc::OutOfRange("rank must be >= 1");
            if (cat_closed) {
                wc::WittGenerator g = wc::WittGenerator::so_odd(cat_r);
                wc::Json out{{"r", cat_r},
                             {"fs_exponent", g.fs_exponent},
                             {"fs_exact", g.fs_exact},
                             {"xi1", wc::to_json(g.xi1)},
                             {"sqrt_dim", wc::to_json(g.sqrt_dim())}};
                emit(out, cfg);
                return 0;
            }
            if (cat_r > cfg.rank_cap) throw wc::OutOfRange("rank above enumeration cap; use --closed-form");
            emit(wc::to_json(wc::build_category(cat_r), cat_full), cfg);
            return 0;
        }
        if (sig->parsed()) {
            wc::WittGenerator g = wc::WittGenerator::so_odd(sig_rank);
            wc::i64 M = sig_modulus > 0 ? sig_modulus : 32 * sig_rank;
            bool exact = wc::mod_pos(sig_k, 4) == 1 && wc::gcd_ll(wc::mod_pos(sig_k, sig_rank) == 0
                                                                      ? sig_rank
                                                                      : wc::mod_pos(sig_k, sig_rank),
                                                                  sig_rank) == 1;
            int s = wc::generator_signature(g, sig_k, M);
            emit(wc::Json{{"rank", sig_rank},
                          {"k", sig_k},
                          {"modulus", M},
                          {"signature", s},
                          {"path", exact ? "exact" : "certified-numeric"}},
                 cfg);
            return 0;
        }
        if (gs->parsed() || cc->parsed()) {
            wc::i64 r = gs->parsed() ? gs_rank : cc_rank;
            wc::i64 n = gs->parsed() ? gs_n : cc_n;
            if (r < 1 || r > cfg.rank_cap) throw wc::OutOfRange("rank outside enumeration cap");
            const wc::CategoryInvariants inv = wc::build_category(r);
            if (gs->parsed()) {
                emit(wc::Json{{"r", r}, {"n", n}, {"tau", wc::to_json(wc::gauss_sum(inv, n))}}, cfg);
            } else {
                emit(wc::Json{{"r", r}, {"n", n}, {"xi", wc::to_json(wc::central_charge(inv, n))}},
                     cfg);
            }
            return 0;
        }
        if (ev->parsed()) {
            wc::WittWord w = wc::parse_word(ev_word);
            wc::i64 M = ev_modulus > 0 ? ev_modulus : wc::word_modulus(w);
            wc::GaloisElem sigma(M, wc::mod_pos(ev_k, M));
            emit(wc::Json{{"word", w.to_string()},
                          {"modulus", M},
                          {"k", wc::mod_pos(ev_k, M)},
                          {"xi", wc::to_json(wc::Xi_eval(w, sigma))}},
                 cfg);
            return 0;
        }
        if (kn->parsed()) {
            wc::WittWord w = wc::parse_word(kn_word);
            wc::KernelReport rep =
                wc::kernel_test(w, kn_certify ? wc::KernelMode::certify : wc::KernelMode::exhaustive);
            emit(wc::to_json(w, rep), cfg);
            return 0;
        }
        if (seq->parsed()) {
            auto terms = wc::a_sequence(seq_z, seq_count, seq_primes);
            emit(wc::Json{{"z", seq_z}, {"count", seq_count}, {"primes_only", seq_primes},
                          {"terms", terms}},
                 cfg);
            return 0;
        }
        if (vf->parsed()) {
            std::vector<wc::CheckResult> results;
            if (verify_suite == "thm6.7" && vf_depth >= 0) {
                auto f = wc::a_sequence(vf_z, vf_depth + 1);
                wc::StructureReport rep = wc::verify_structure(f, vf_depth);
                wc::CheckResult res{"structure-depth-" + std::to_string(vf_depth)};
                for (const std::string& fail : rep.failures) res.fail(fail);
                if (res.pass)
                    res.detail = std::to_string(rep.classes + 1) + " classes verified (" +
                                 std::to_string(rep.classes) + " nontrivial distinguished)";
                results.push_back(res);
            } else {
                results = wc::run_suite(verify_suite);
            }
            bool all_pass = true;
            wc::Json rows = wc::Json::array();
            for (const wc::CheckResult& r : results) {
                all_pass = all_pass && r.pass;
                rows.push_back(wc::Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            }
            emit(wc::Json{{"suite", verify_suite}, {"pass", all_pass}, {"results", rows}}, cfg);
            return all_pass ? 0 : 1;
        }
    } catch (const wc::UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
