// Command-line surface: evaluation, reciprocity checks, level-set
// enumeration, divisibility-theorem scans, census runs and naive-vs-fast
// benchmarks, with table/CSV/JSON output.
//
// Exit codes: 0 success, 1 domain error (invalid mathematical input),
// 2 usage error (malformed command line), 3 verification failure (scan
// violation, failed corollary/fixture, or reciprocity mismatch).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dedekind/dedekind.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

using dedekind::Format;
using dedekind::Int;
using dedekind::Rational;

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::table;
}

std::string json_line(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void emit_value(Format format, const std::string& csv_header,
                const std::string& csv_row, const nlohmann::ordered_json& obj,
                const std::string& table_text) {
    switch (format) {
    case Format::csv:
        std::cout << csv_header << '\n' << csv_row << '\n';
        break;
    case Format::json:
        std::cout << json_line(obj);
        break;
    case Format::table:
        std::cout << table_text;
        break;
    }
}

int emit_reciprocity(Format format, const nlohmann::ordered_json& fields,
                     const std::string& csv_header, const std::string& csv_row,
                     const Rational& lhs, const Rational& rhs) {
    bool equal = lhs == rhs;
    std::string table = "lhs = " + lhs.to_string() + "\nrhs = " + rhs.to_string() +
                        "\nequal = " + (equal ? "true" : "false") + "\n";
    emit_value(format, csv_header, csv_row, fields, table);
    return equal ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dedekind / Dedekind-Rademacher sums: evaluation, identity "
                 "verification, level sets, census, benchmarks"};
    app.require_subcommand(1);

    std::string format_name = "table";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    std::int64_t es_a = 0, es_b = 0;
    auto* eval_s = app.add_subcommand("eval-s", "evaluate s(a,b)");
    eval_s->add_option("a", es_a)->required();
    eval_s->add_option("b", es_b)->required();

    std::int64_t er_n = 0, er_a = 0, er_b = 0;
    auto* eval_r = app.add_subcommand("eval-r", "evaluate r_n(a,b)");
    eval_r->add_option("n", er_n)->required();
    eval_r->add_option("a", er_a)->required();
    eval_r->add_option("b", er_b)->required();

    std::int64_t rc_a = 0, rc_b = 0;
    auto* recip = app.add_subcommand(
        "recip-check", "check s(a,b) + s(b,a) against the reciprocity right-hand side");
    recip->add_option("a", rc_a)->required();
    recip->add_option("b", rc_b)->required();

    std::int64_t rr_n = 0, rr_a = 0, rr_b = 0;
    auto* recip_r = app.add_subcommand(
        "recip-check-r",
        "check r_n(a,b) + r_n(b,a) against the reciprocity right-hand side");
    recip_r->add_option("n", rr_n)->required();
    recip_r->add_option("a", rr_a)->required();
    recip_r->add_option("b", rr_b)->required();

    std::int64_t cl_b = 0;
    auto* classes = app.add_subcommand("classes", "level sets of s(.,b) over the units mod b");
    classes->add_option("b", cl_b)->required();

    std::int64_t cn_b = 0;
    std::string cn_c;
    auto* count = app.add_subcommand("count", "number of solutions of s(x,b) = c");
    count->add_option("b", cn_b)->required();
    count->add_option("c", cn_c, "target value as p/q")->required();

    std::string verify_kind;
    std::int64_t v_b_max = 150, v_n_max = 12, v_p_max = 100;
    auto* verify = app.add_subcommand("verify", "run divisibility / corollary / fixture scans");
    verify->add_option("kind", verify_kind)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm3", "cor1", "fixtures"}));
    verify->add_option("--b-max", v_b_max, "largest modulus scanned")->check(CLI::PositiveNumber);
    verify->add_option("--n-max", v_n_max, "largest shift n scanned")->check(CLI::NonNegativeNumber);
    verify->add_option("--p-max", v_p_max, "largest prime checked")->check(CLI::PositiveNumber);

    std::int64_t census_min = 1, census_max = 0;
    auto* census_cmd = app.add_subcommand("census", "per-modulus level-set statistics");
    census_cmd->add_option("--b-min", census_min)->check(CLI::PositiveNumber);
    census_cmd->add_option("--b-max", census_max)->required()->check(CLI::PositiveNumber);

    unsigned bench_bits = 0;
    std::int64_t bench_trials = 8;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time naive vs fast evaluation");
    bench_cmd->add_option("--bits", bench_bits, "modulus width in bits")
        ->required()
        ->check(CLI::Range(2u, 512u));
    bench_cmd->add_option("--trials", bench_trials)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format format = parse_format(format_name);

    try {
        if (eval_s->parsed()) {
            Rational value = dedekind::dedekind_fast(Int(es_a), Int(es_b));
            emit_value(format, "a,b,value",
                       std::to_string(es_a) + ',' + std::to_string(es_b) + ',' +
                           value.to_string(),
                       {{"a", es_a}, {"b", es_b}, {"value", value.to_string()}},
                       value.to_string() + "\n");
            return kExitOk;
        }

        if (eval_r->parsed()) {
            Rational value = dedekind::rademacher_naive(Int(er_n), Int(er_a), Int(er_b));
            emit_value(format, "n,a,b,value",
                       std::to_string(er_n) + ',' + std::to_string(er_a) + ',' +
                           std::to_string(er_b) + ',' + value.to_string(),
                       {{"n", er_n}, {"a", er_a}, {"b", er_b}, {"value", value.to_string()}},
                       value.to_string() + "\n");
            return kExitOk;
        }

        if (recip->parsed()) {
            Rational lhs = dedekind::dedekind_naive(Int(rc_a), Int(rc_b)) +
                           dedekind::dedekind_naive(Int(rc_b), Int(rc_a));
            Rational rhs = dedekind::dedekind_reciprocity_rhs(Int(rc_a), Int(rc_b));
            bool equal = lhs == rhs;
            return emit_reciprocity(
                format,
                {{"a", rc_a}, {"b", rc_b}, {"lhs", lhs.to_string()},
                 {"rhs", rhs.to_string()}, {"equal", equal}},
                "a,b,lhs,rhs,equal",
                std::to_string(rc_a) + ',' + std::to_string(rc_b) + ',' +
                    lhs.to_string() + ',' + rhs.to_string() + ',' +
                    (equal ? "true" : "false"),
                lhs, rhs);
        }

        if (recip_r->parsed()) {
            Rational lhs = dedekind::rademacher_naive(Int(rr_n), Int(rr_a), Int(rr_b)) +
                           dedekind::rademacher_naive(Int(rr_n), Int(rr_b), Int(rr_a));
            Rational rhs =
                dedekind::rademacher_reciprocity_rhs(Int(rr_n), Int(rr_a), Int(rr_b));
            bool equal = lhs == rhs;
            return emit_reciprocity(
                format,
                {{"n", rr_n}, {"a", rr_a}, {"b", rr_b}, {"lhs", lhs.to_string()},
                 {"rhs", rhs.to_string()}, {"equal", equal}},
                "n,a,b,lhs,rhs,equal",
                std::to_string(rr_n) + ',' + std::to_string(rr_a) + ',' +
                    std::to_string(rr_b) + ',' + lhs.to_string() + ',' +
                    rhs.to_string() + ',' + (equal ? "true" : "false"),
                lhs, rhs);
        }

        if (classes->parsed()) {
            std::cout << dedekind::render_level_sets(dedekind::level_sets(Int(cl_b)), format);
            return kExitOk;
        }

        if (count->parsed()) {
            Rational target = Rational::from_string(cn_c);
            std::int64_t n = dedekind::count_solutions(Int(cn_b), target);
            emit_value(format, "b,c,count",
                       std::to_string(cn_b) + ',' + target.to_string() + ',' +
                           std::to_string(n),
                       {{"b", cn_b}, {"c", target.to_string()}, {"count", n}},
                       std::to_string(n) + "\n");
            return kExitOk;
        }

        if (verify->parsed()) {
            if (verify_kind == "thm1") {
                std::vector<dedekind::TheoremReport> reports;
                std::int64_t violations = 0;
                for (std::int64_t b = 1; b <= v_b_max; ++b)
                    for (auto& r : dedekind::scan_theorem1(Int(b))) {
                        if (r.verdict == dedekind::Verdict::violation) ++violations;
                        reports.push_back(std::move(r));
                    }
                std::cout << dedekind::render_reports(reports, format);
                std::cerr << "thm1: b in [1," << v_b_max << "], " << reports.size()
                          << " equal-sum pairs, " << violations << " violations\n";
                return violations == 0 ? kExitOk : kExitViolation;
            }
            if (verify_kind == "thm3") {
                std::vector<dedekind::TheoremReport> reports;
                std::int64_t violations = 0;
                for (std::int64_t b = 1; b <= v_b_max; ++b)
                    for (std::int64_t n = 0; n <= v_n_max; ++n)
                        for (auto& r : dedekind::scan_theorem3(Int(n), Int(b))) {
                            if (r.verdict == dedekind::Verdict::violation) ++violations;
                            reports.push_back(std::move(r));
                        }
                std::cout << dedekind::render_reports(reports, format);
                std::cerr << "thm3: b in [1," << v_b_max << "], n in [0," << v_n_max
                          << "], " << reports.size() << " equal-sum pairs, "
                          << violations << " violations\n";
                return violations == 0 ? kExitOk : kExitViolation;
            }
            if (verify_kind == "cor1") {
                std::vector<std::pair<std::int64_t, bool>> results;
                bool all = true;
                for (std::int64_t p = 2; p <= v_p_max; ++p) {
                    if (!dedekind::is_prime_trial(Int(p))) continue;
                    bool ok = dedekind::verify_corollary1(Int(p));
                    all = all && ok;
                    results.emplace_back(p, ok);
                }
                if (format == Format::csv) {
                    std::cout << "p,holds\n";
                    for (auto& [p, ok] : results)
                        std::cout << p << ',' << (ok ? "true" : "false") << '\n';
                } else if (format == Format::json) {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (auto& [p, ok] : results)
                        arr.push_back({{"p", p}, {"holds", ok}});
                    std::cout << json_line(arr);
                } else {
                    for (auto& [p, ok] : results)
                        std::cout << "p=" << p << " " << (ok ? "ok" : "FAIL") << '\n';
                }
                std::cerr << "cor1: " << results.size() << " primes checked, "
                          << (all ? "all hold" : "FAILURES FOUND") << '\n';
                return all ? kExitOk : kExitViolation;
            }
            // fixtures
            auto fixtures = dedekind::counterexample_fixtures();
            bool all = true;
            if (format == Format::csv) {
                std::cout << "fixture,holds\n";
                for (auto& f : fixtures) {
                    all = all && f.holds;
                    std::cout << f.description << ',' << (f.holds ? "true" : "false") << '\n';
                }
            } else if (format == Format::json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (auto& f : fixtures) {
                    all = all && f.holds;
                    arr.push_back({{"fixture", f.description}, {"holds", f.holds}});
                }
                std::cout << json_line(arr);
            } else {
                for (auto& f : fixtures) {
                    all = all && f.holds;
                    std::cout << f.description << " " << (f.holds ? "ok" : "FAIL") << '\n';
                }
            }
            return all ? kExitOk : kExitViolation;
        }

        if (census_cmd->parsed()) {
            auto rows = dedekind::census(Int(census_min), Int(census_max));
            std::cout << dedekind::render_census(rows, format);
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            auto records = dedekind::run_bench(bench_bits,
                                               static_cast<std::uint64_t>(bench_trials),
                                               bench_seed);
            std::cout << dedekind::render_bench(records, format);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    return kExitUsage;
}
