// seqc: measures of pseudorandomness for binary sequences.
//
// Subcommands: analyze, expected, pairs, construct, verify, selftest.
// Exit codes: 0 ok, 2 parse error, 3 precondition violation,
// 4 reference-table mismatch, 5 property failure.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqc/aperiodic.hpp"
#include "seqc/bitseq.hpp"
#include "seqc/constructions.hpp"
#include "seqc/expectation.hpp"
#include "seqc/numtheory.hpp"
#include "seqc/parallel.hpp"
#include "seqc/periodic.hpp"
#include "seqc/reference_tables.hpp"
#include "seqc/suites.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTableMismatch = 4;
constexpr int kExitPropertyFailure = 5;

seqc::Measures parse_measures(const std::string& list) {
    seqc::Measures m;
    if (list.empty()) return seqc::Measures::all();
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
        if (item == "rat") m.rat = true;
        else if (item == "2adic") m.two_adic = true;
        else if (item == "lin") m.lin = true;
        else if (item == "linexp") m.linexp = true;
        else throw std::invalid_argument("unknown measure '" + item + "' (rat, 2adic, lin, linexp)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return m;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string rational_str(const seqc::BigRational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json witness_json(const seqc::RationalApproximation& a) {
    return json{{"q", a.q.get_str()}, {"f", a.f.get_str()}, {"norm", a.norm.get_str()}};
}

json periodic_report_json(const seqc::PeriodicAdicReport& r) {
    return json{{"T", r.T},
                {"value", r.value.get_str()},
                {"modulus", r.modulus.get_str()},
                {"divisor", r.divisor.get_str()},
                {"connection", r.connection.get_str()},
                {"lambda_bits", r.lambda_bits}};
}

std::string profile_csv(const seqc::ComplexityProfile& p) {
    std::string s;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(p.entries[i]);
    }
    return s;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& input, long periodic_T, const std::string& measures_list,
                const std::string& format) {
    const seqc::Measures measures = parse_measures(measures_list);
    const seqc::FiniteWord w = seqc::parse_word(input);
    const bool as_json = format == "json";

    if (periodic_T >= 0) {
        if (static_cast<std::size_t>(periodic_T) != w.size())
            throw std::domain_error("analyze: --periodic " + std::to_string(periodic_T) +
                                    " but the input has length " + std::to_string(w.size()));
        const seqc::PeriodicSequence seq(w);
        const seqc::SymmetricAdicReport adic = seqc::adic_symmetric_periodic(seq);
        const std::size_t L = seqc::linear_complexity_periodic(seq);
        const std::size_t L_rev =
            seqc::linear_complexity_periodic(seqc::PeriodicSequence(seqc::reverse(w)));
        if (as_json) {
            json out{{"format_version", 1},
                     {"mode", "periodic"},
                     {"adic", periodic_report_json(adic.forward)},
                     {"adic_rev", periodic_report_json(adic.backward)},
                     {"min_lambda", adic.min_lambda},
                     {"L", L},
                     {"L_rev", L_rev},
                     {"L_sym", std::min(L, L_rev)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "T\t" << adic.forward.T << "\n";
            std::cout << "value\t" << adic.forward.value.get_str() << "\n";
            std::cout << "connection\t" << adic.forward.connection.get_str() << "\n";
            std::cout << "connection_rev\t" << adic.backward.connection.get_str() << "\n";
            std::cout << "lambda\t" << fixed6(adic.forward.lambda_bits) << "\n";
            std::cout << "lambda_rev\t" << fixed6(adic.backward.lambda_bits) << "\n";
            std::cout << "lambda_sym\t" << fixed6(adic.min_lambda) << "\n";
            std::cout << "L\t" << L << "\n";
            std::cout << "L_rev\t" << L_rev << "\n";
            std::cout << "L_sym\t" << std::min(L, L_rev) << "\n";
        }
        return kExitOk;
    }

    json out{{"format_version", 1}, {"mode", "aperiodic"}, {"N", w.size()}};
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("N", std::to_string(w.size()));
    if (measures.rat || measures.two_adic) {
        const auto fwd = seqc::rational_complexity(w);
        const auto rev = seqc::rational_complexity(seqc::reverse(w));
        const seqc::Natural sym = std::min(fwd.norm, rev.norm);
        if (measures.rat) {
            out["rat"] = {{"forward", witness_json(fwd)},
                          {"reverse", witness_json(rev)},
                          {"sym_norm", w.size() >= 2 ? sym.get_str() : "undefined"}};
            rows.emplace_back("Lambda", fwd.norm.get_str());
            rows.emplace_back("Lambda_rev", rev.norm.get_str());
            rows.emplace_back("Lambda_sym", w.size() >= 2 ? sym.get_str() : "-");
        }
        if (measures.two_adic) {
            out["2adic"] = {{"forward", seqc::log2_natural(fwd.norm)},
                            {"reverse", seqc::log2_natural(rev.norm)},
                            {"sym", w.size() >= 2 ? json(seqc::log2_natural(sym)) : json()}};
            rows.emplace_back("lambda", fixed6(seqc::log2_natural(fwd.norm)));
            rows.emplace_back("lambda_rev", fixed6(seqc::log2_natural(rev.norm)));
            rows.emplace_back("lambda_sym",
                              w.size() >= 2 ? fixed6(seqc::log2_natural(sym)) : "-");
        }
    }
    if (measures.lin || measures.linexp) {
        const auto prof = seqc::bm_profile(w);
        const auto prof_rev = seqc::bm_profile(seqc::reverse(w));
        const std::size_t L = prof.final_length(), L_rev = prof_rev.final_length();
        const std::size_t L_sym = std::min(L, L_rev);
        if (measures.lin) {
            out["lin"] = {{"forward", L},
                          {"reverse", L_rev},
                          {"sym", L_sym},
                          {"profile", prof.entries},
                          {"profile_rev", prof_rev.entries}};
            rows.emplace_back("L", std::to_string(L));
            rows.emplace_back("L_rev", std::to_string(L_rev));
            rows.emplace_back("L_sym", std::to_string(L_sym));
            rows.emplace_back("profile", profile_csv(prof));
        }
        if (measures.linexp) {
            out["linexp"] = {{"forward", seqc::pow2(L).get_str()},
                             {"reverse", seqc::pow2(L_rev).get_str()},
                             {"sym", seqc::pow2(L_sym).get_str()}};
            rows.emplace_back("2^L", seqc::pow2(L).get_str());
            rows.emplace_back("2^L_sym", seqc::pow2(L_sym).get_str());
        }
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : rows) std::cout << k << "\t" << v << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- expected

int run_asymptotics(unsigned n_min, unsigned n_max, unsigned threads, const std::string& format) {
    const auto rows = seqc::asymptotics_report(n_min, n_max, threads);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"N", r.N},
                           {"e_rat", r.e_rat},
                           {"e_rat_sym", r.e_rat_sym},
                           {"e_2adic", r.e_2adic},
                           {"e_2adic_sym", r.e_2adic_sym},
                           {"e_lin", r.e_lin},
                           {"e_lin_sym", r.e_lin_sym},
                           {"half_N_minus_log2_N", r.bound_lin},
                           {"two_pow_half_N", r.bound_rat},
                           {"diff_ratio", r.ratio}});
        std::cout << json{{"format_version", 1},
                          {"note", "report only; log(N) rendered base 2 by convention; the "
                                   "ratio column (e_rat - e_rat_sym)/2^{N/2} is informational"},
                          {"rows", arr}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "N\te_rat\te_rat_sym\te_2adic\te_2adic_sym\te_lin\te_lin_sym\t"
                     "N/2-log2(N)\t2^(N/2)\tdiff_ratio\n";
        for (const auto& r : rows)
            std::cout << r.N << "\t" << fixed6(r.e_rat) << "\t" << fixed6(r.e_rat_sym) << "\t"
                      << fixed6(r.e_2adic) << "\t" << fixed6(r.e_2adic_sym) << "\t"
                      << fixed6(r.e_lin) << "\t" << fixed6(r.e_lin_sym) << "\t"
                      << fixed6(r.bound_lin) << "\t" << fixed6(r.bound_rat) << "\t"
                      << fixed6(r.ratio) << "\n";
        std::cerr << "note: report only; log(N) rendered base 2 by convention\n";
    }
    return kExitOk;
}

int run_expected(unsigned n_min, unsigned n_max, const std::string& measures_list,
                 bool check_paper, unsigned threads, const std::string& format) {
    if (n_min < 1 || n_min > n_max || n_max > 24)
        throw std::domain_error("expected: need 1 <= min <= max <= 24");
    const seqc::Measures measures = parse_measures(measures_list);
    const bool as_json = format == "json";

    std::vector<std::string> mismatches;
    auto check_against = [&](unsigned n, const seqc::BigRational& diff, bool is_rat) {
        const auto& table = is_rat ? std::vector<seqc::reference::DiffRow>(
                                         seqc::reference::kRatDiffs.begin(),
                                         seqc::reference::kRatDiffs.end())
                                   : std::vector<seqc::reference::DiffRow>(
                                         seqc::reference::kLinExpDiffs.begin(),
                                         seqc::reference::kLinExpDiffs.end());
        for (const auto& row : table) {
            if (row.N != n) continue;
            const seqc::BigRational printed = seqc::reference::parse_decimal(row.printed);
            seqc::BigRational err = diff - printed;
            if (err < 0) err = -err;
            if (err > seqc::BigRational(1, 1000))
                mismatches.push_back((is_rat ? std::string("rat") : std::string("linexp")) +
                                     " N=" + std::to_string(n) + ": computed " +
                                     seqc::format_diff_3dp(diff) + " printed " + row.printed);
        }
    };

    // TSV header
    if (!as_json) {
        std::string header = "N";
        if (measures.rat) header += "\te_rat\te_rat_sym\tdiff_rat";
        if (measures.two_adic) header += "\te_2adic\te_2adic_sym\tdiff_2adic";
        if (measures.lin) header += "\te_lin\te_lin_sym\tdiff_lin";
        if (measures.linexp) header += "\te_linexp\te_linexp_sym\tdiff_linexp";
        std::cout << header << "\n";
    }
    for (unsigned n = n_min; n <= n_max; ++n) {
        const seqc::ExpectationRow row = seqc::enumerate_expectations(n, measures, threads);
        if (as_json) {
            json j{{"format_version", 1}, {"N", n}};
            if (measures.rat) {
                j["e_rat"] = {{"exact", rational_str(row.e_rat)}, {"value", row.e_rat.get_d()}};
                j["e_rat_sym"] = {{"exact", rational_str(row.e_rat_sym)},
                                  {"value", row.e_rat_sym.get_d()}};
                j["diff_rat"] = seqc::format_diff_3dp(row.e_rat - row.e_rat_sym);
            }
            if (measures.two_adic) {
                j["e_2adic"] = row.e_2adic;
                j["e_2adic_sym"] = row.e_2adic_sym;
                j["diff_2adic"] = row.e_2adic - row.e_2adic_sym;
            }
            if (measures.lin) {
                j["e_lin"] = {{"exact", rational_str(row.e_lin)}, {"value", row.e_lin.get_d()}};
                j["e_lin_sym"] = {{"exact", rational_str(row.e_lin_sym)},
                                  {"value", row.e_lin_sym.get_d()}};
                j["diff_lin"] = seqc::format_diff_3dp(row.e_lin - row.e_lin_sym);
            }
            if (measures.linexp) {
                j["e_linexp"] = {{"exact", rational_str(row.e_linexp)},
                                 {"value", row.e_linexp.get_d()}};
                j["e_linexp_sym"] = {{"exact", rational_str(row.e_linexp_sym)},
                                     {"value", row.e_linexp_sym.get_d()}};
                j["diff_linexp"] = seqc::format_diff_3dp(row.e_linexp - row.e_linexp_sym);
            }
            std::cout << j.dump() << "\n";
        } else {
            std::string line = std::to_string(n);
            if (measures.rat)
                line += "\t" + fixed6(row.e_rat.get_d()) + "\t" + fixed6(row.e_rat_sym.get_d()) +
                        "\t" + seqc::format_diff_3dp(row.e_rat - row.e_rat_sym);
            if (measures.two_adic)
                line += "\t" + fixed6(row.e_2adic) + "\t" + fixed6(row.e_2adic_sym) + "\t" +
                        fixed6(row.e_2adic - row.e_2adic_sym);
            if (measures.lin)
                line += "\t" + fixed6(row.e_lin.get_d()) + "\t" + fixed6(row.e_lin_sym.get_d()) +
                        "\t" + seqc::format_diff_3dp(row.e_lin - row.e_lin_sym);
            if (measures.linexp)
                line += "\t" + fixed6(row.e_linexp.get_d()) + "\t" +
                        fixed6(row.e_linexp_sym.get_d()) + "\t" +
                        seqc::format_diff_3dp(row.e_linexp - row.e_linexp_sym);
            std::cout << line << "\n";
        }
        if (check_paper && measures.rat) check_against(n, row.e_rat - row.e_rat_sym, true);
        if (check_paper && measures.linexp)
            check_against(n, row.e_linexp - row.e_linexp_sym, false);
    }
    if (check_paper && !mismatches.empty()) {
        for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
        return kExitTableMismatch;
    }
    return kExitOk;
}

// ------------------------------------------------------------------- pairs

int run_pairs(const std::string& bits_range, const std::string& mode_str, bool check_paper,
              const std::string& format) {
    const auto dots = bits_range.find("..");
    unsigned t_min = 0, t_max = 0;
    try {
        if (dots == std::string::npos) {
            t_min = t_max = static_cast<unsigned>(std::stoul(bits_range));
        } else {
            t_min = static_cast<unsigned>(std::stoul(bits_range.substr(0, dots)));
            t_max = static_cast<unsigned>(std::stoul(bits_range.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        std::cerr << "pairs: cannot parse --bits '" << bits_range << "' (expected e.g. 2..8)\n";
        return kExitParse;
    }
    seqc::PairMode mode;
    if (mode_str == "pp") mode = seqc::PairMode::PrimePrime;
    else if (mode_str == "pc") mode = seqc::PairMode::PrimeComposite;
    else throw std::invalid_argument("pairs: --mode must be pp or pc");

    const auto pairs = seqc::enumerate_reversible_pairs(t_min, t_max, mode);
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : pairs)
            arr.push_back({{"p", p.p.get_str()},
                           {"q", p.q.get_str()},
                           {"ord_p", p.ord_p.get_str()},
                           {"ord_q", p.ord_q.get_str()},
                           {"q_is_prime", p.q_is_prime}});
        std::cout << json{{"format_version", 1}, {"pairs", arr}}.dump(2) << "\n";
    } else {
        std::cout << "p\tq\tord_p\tord_q\n";
        for (const auto& p : pairs)
            std::cout << p.p.get_str() << "\t" << p.q.get_str() << "\t" << p.ord_p.get_str()
                      << "\t" << p.ord_q.get_str() << "\n";
    }

    if (!check_paper) return kExitOk;

    std::vector<seqc::reference::PairRow> printed;
    if (mode == seqc::PairMode::PrimePrime)
        printed.assign(seqc::reference::kPrimePrimePairs.begin(),
                       seqc::reference::kPrimePrimePairs.end());
    else
        printed.assign(seqc::reference::kPrimeCompositePairs.begin(),
                       seqc::reference::kPrimeCompositePairs.end());

    std::vector<std::string> mismatches;
    for (const auto& row : printed) {
        const seqc::ReversiblePair* found = nullptr;
        for (const auto& p : pairs)
            if (p.p == row.p && p.q == row.q) {
                found = &p;
                break;
            }
        if (!found) {
            mismatches.push_back("printed pair (" + std::to_string(row.p) + "," +
                                 std::to_string(row.q) + ") not produced");
            continue;
        }
        if (found->ord_p != row.ord_p)
            mismatches.push_back("pair (" + std::to_string(row.p) + "," + std::to_string(row.q) +
                                 "): printed ord_p " + std::to_string(row.ord_p) + ", computed " +
                                 found->ord_p.get_str());
        if (found->ord_q != row.ord_q)
            mismatches.push_back("pair (" + std::to_string(row.p) + "," + std::to_string(row.q) +
                                 "): printed ord_q " + std::to_string(row.ord_q) + ", computed " +
                                 found->ord_q.get_str());
    }
    // Completeness: the prime-prime table is the full list for its range, so
    // unlisted rows are errors there; the prime-composite table is declaredly
    // "a list", so extras are reported as notes only.
    for (const auto& p : pairs) {
        bool listed = false;
        for (const auto& row : printed)
            if (p.p == row.p && p.q == row.q) listed = true;
        if (listed) continue;
        const std::string desc = "(" + p.p.get_str() + "," + p.q.get_str() + "," +
                                 p.ord_p.get_str() + "," + p.ord_q.get_str() + ")";
        if (mode == seqc::PairMode::PrimePrime)
            mismatches.push_back("computed pair " + desc + " missing from the printed table");
        else
            std::cerr << "note: computed pair " << desc << " is not in the printed table\n";
    }
    if (!mismatches.empty()) {
        for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
        return kExitTableMismatch;
    }
    return kExitOk;
}

// --------------------------------------------------------------- construct

int run_construct(const std::string& family_name_str, const std::vector<std::string>& kv,
                  const std::string& tail_opt, std::uint64_t seed, bool check,
                  const std::string& format) {
    const auto fam = seqc::family_from_name(family_name_str);
    if (!fam) throw std::invalid_argument("construct: unknown family '" + family_name_str + "'");
    seqc::FamilySpec spec;
    spec.family = *fam;
    for (const std::string& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("construct: parameters are key=value, got '" + item + "'");
        spec.params[item.substr(0, eq)] = seqc::Natural(item.substr(eq + 1), 10);
    }
    if (!tail_opt.empty()) {
        if (tail_opt == "random") {
            const unsigned long n = spec.get_ul("N"), k = spec.get_ul("k");
            if (k + 1 > n) throw std::invalid_argument("construct: need k < N for a random tail");
            std::mt19937_64 rng(seed);
            const unsigned bits = static_cast<unsigned>(n - k - 1);
            const std::uint64_t tail = bits == 0 ? 0 : (rng() & ((std::uint64_t{1} << bits) - 1));
            spec.params["tail"] = seqc::Natural(static_cast<unsigned long>(tail));
        } else {
            spec.params["tail"] = seqc::Natural(tail_opt, 10);
        }
    }
    const seqc::BuildResult built = seqc::build(spec);
    json j{{"format_version", 1}, {"family", seqc::family_name(spec.family)}};
    for (const auto& [k, v] : spec.params) j["params"][k] = v.get_str();
    std::string bits;
    if (std::holds_alternative<seqc::FiniteWord>(built)) {
        const auto& w = std::get<seqc::FiniteWord>(built);
        bits = w.to_string();
        j["kind"] = "word";
        j["N"] = w.size();
        j["value"] = seqc::evaluate2(w).get_str();
    } else {
        const auto& p = std::get<seqc::PeriodicSequence>(built);
        bits = p.initial().to_string();
        j["kind"] = "periodic";
        j["T"] = p.period();
        j["value"] = seqc::evaluate2(p.initial()).get_str();
    }
    j["bits"] = bits;

    int exit_code = kExitOk;
    if (check) {
        const seqc::FamilyReport rep = seqc::verify_family(spec);
        json claims = json::array();
        for (const auto& c : rep.claims) {
            claims.push_back({{"claim", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            if (!c.pass) exit_code = kExitPropertyFailure;
        }
        j["claims"] = claims;
        j["all_pass"] = rep.all_pass;
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << bits << "\n";
        if (check) {
            for (const auto& c : j["claims"])
                std::cout << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\t"
                          << c["claim"].get<std::string>() << "\t"
                          << c["detail"].get<std::string>() << "\n";
        }
    }
    return exit_code;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& suite, unsigned threads, std::uint64_t seed,
               std::uint64_t random_count, const std::string& format) {
    seqc::SuiteResult result;
    if (suite == "lin-eq-sym") {
        result = seqc::suite_lin_eq_sym(10, random_count ? random_count : 10000, 128, seed);
    } else if (suite == "mersenne") {
        result = seqc::suite_mersenne({2, 3, 5, 7, 13}, threads);
    } else if (suite == "theorem1-all") {
        result = seqc::suite_theorem1_all();
    } else if (suite == "families") {
        result = seqc::suite_families(12);
    } else if (suite == "oracle-equivalence") {
        result = seqc::suite_oracle_equivalence(14, random_count ? random_count : 100000, 15, 40,
                                                seed, threads);
    } else if (suite == "counting") {
        result = seqc::suite_counting(16, threads);
    } else {
        throw std::invalid_argument(
            "verify: unknown suite '" + suite +
            "' (lin-eq-sym, mersenne, theorem1-all, families, oracle-equivalence, counting)");
    }
    if (format == "json") {
        json j{{"format_version", 1},
               {"suite", result.suite},
               {"checks", result.checks},
               {"pass", result.pass()},
               {"failures", result.failures}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result.suite << "\t" << (result.pass() ? "PASS" : "FAIL") << "\t"
                  << result.checks << " checks\n";
        for (const auto& f : result.failures) std::cout << "FAIL\t" << f << "\n";
    }
    if (!result.pass()) {
        std::cerr << "verify: first failing assertion: " << result.failures.front() << "\n";
        return kExitPropertyFailure;
    }
    return kExitOk;
}

int run_selftest(unsigned threads, const std::string& format) {
    std::vector<seqc::SuiteResult> results;
    results.push_back(seqc::suite_lin_eq_sym(8, 500, 64, 12345));
    results.push_back(seqc::suite_mersenne({2, 3, 5, 7}, threads));
    results.push_back(seqc::suite_theorem1_all());
    results.push_back(seqc::suite_families(9));
    results.push_back(seqc::suite_oracle_equivalence(10, 200, 11, 24, 12345, threads));
    results.push_back(seqc::suite_counting(10, threads));

    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass();
        if (format == "json") {
            arr.push_back({{"suite", r.suite},
                           {"checks", r.checks},
                           {"pass", r.pass()},
                           {"failures", r.failures}});
        } else {
            std::cout << r.suite << "\t" << (r.pass() ? "PASS" : "FAIL") << "\t" << r.checks
                      << " checks\n";
            for (const auto& f : r.failures) std::cout << "FAIL\t" << f << "\n";
        }
    }
    if (format == "json")
        std::cout << json{{"format_version", 1}, {"suites", arr}, {"pass", all}}.dump(2) << "\n";
    return all ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seqc: ordinary and symmetric pseudorandomness measures (2-adic/rational and "
                 "linear complexity) of binary sequences"};
    app.require_subcommand(1);

    std::string format = "tsv";
    unsigned threads = 0;
    app.add_option("--format", format, "Output format: tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--threads", threads,
                   "Worker threads (default: SEQC_THREADS env or hardware concurrency)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Measures of one sequence and its reverse")->fallthrough();
    std::string input, measures_list;
    long periodic_T = -1;
    analyze->add_option("sequence", input, "Bits ('0110...') or value 'v/N' (or 'nat:v/N')")
        ->required();
    analyze->add_option("--periodic", periodic_T, "Treat the input as one period of length T");
    analyze->add_option("--measures", measures_list, "Comma list of rat,2adic,lin,linexp");

    // expected
    auto* expected = app.add_subcommand("expected", "Expected values over all 2^N words")->fallthrough();
    unsigned n_min = 2, n_max = 16;
    bool check_paper_expected = false;
    std::string measures_expected;
    expected->add_option("--min", n_min, "Smallest N")->required();
    expected->add_option("--max", n_max, "Largest N")->required();
    expected->add_option("--measures", measures_expected, "Comma list of rat,2adic,lin,linexp");
    expected->add_flag("--check-paper", check_paper_expected,
                       "Compare differences against the published tables, exit 4 on mismatch");
    bool asymptotics = false;
    expected->add_flag("--asymptotics", asymptotics,
                       "Report-only table of expected values next to the asymptotic bound "
                       "expressions");

    // pairs
    auto* pairs = app.add_subcommand("pairs", "Enumerate base-2 reversible pairs")->fallthrough();
    std::string bits_range = "2..8", mode_str = "pp";
    bool check_paper_pairs = false;
    pairs->add_option("--bits", bits_range, "Bit-length range t_min..t_max")->required();
    pairs->add_option("--mode", mode_str, "pp (both prime) or pc (prime p, composite q)")
        ->required();
    pairs->add_flag("--check-paper", check_paper_pairs,
                    "Compare against the published tables, exit 4 on mismatch");

    // construct
    auto* construct = app.add_subcommand("construct", "Build a sequence family instance")->fallthrough();
    std::string family_str, tail_opt;
    std::vector<std::string> kv;
    std::uint64_t seed = 12345;
    bool check_flag = false;
    construct->add_option("--family", family_str,
                          "intro21, theorem1, example1..example4, remark5, remark6A, remark6B")
        ->required();
    construct->add_option("params", kv, "Family parameters as key=value");
    construct->add_option("--tail", tail_opt, "Tail bits as an integer, or 'random'");
    construct->add_option("--seed", seed, "Seed for --tail random");
    construct->add_flag("--check", check_flag, "Verify the family's claims, exit 5 on failure");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
    std::string suite;
    std::uint64_t verify_seed = 12345, random_count = 0;
    verify->add_option("--suite", suite,
                       "lin-eq-sym, mersenne, theorem1-all, families, oracle-equivalence, counting")
        ->required();
    verify->add_option("--seed", verify_seed, "Seed for randomized checks");
    verify->add_option("--random-count", random_count, "Override the randomized sample size");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Quick subset of every suite")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*analyze) return run_analyze(input, periodic_T, measures_list, format);
        if (*expected)
            return asymptotics
                       ? run_asymptotics(n_min, n_max, threads, format)
                       : run_expected(n_min, n_max, measures_expected, check_paper_expected,
                                      threads, format);
        if (*pairs) return run_pairs(bits_range, mode_str, check_paper_pairs, format);
        if (*construct)
            return run_construct(family_str, kv, tail_opt, seed, check_flag, format);
        if (*verify) return run_verify(suite, threads, verify_seed, random_count, format);
        if (*selftest) return run_selftest(threads, format);
    } catch (const seqc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
