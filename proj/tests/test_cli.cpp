#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include <dedekind/dedekind.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DEDEKIND_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval-s prints the exact sum value") {
    auto r = run_cli("eval-s 37 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-13/16\n");

    CHECK(run_cli("eval-s 33 40").out == "-5/16\n");
    CHECK(run_cli("eval-s -1 5").out == "-1/5\n");
    CHECK(run_cli("eval-s 1 1").out == "0\n");
}

TEST_CASE("eval-s output formats mirror each other") {
    CHECK(run_cli("--format csv eval-s 37 40").out == "a,b,value\n37,40,-13/16\n");

    auto j = nlohmann::json::parse(run_cli("--format json eval-s 37 40").out);
    CHECK(j["a"] == 37);
    CHECK(j["b"] == 40);
    CHECK(j["value"] == "-13/16");
}

TEST_CASE("eval-r prints the exact shifted sum value") {
    CHECK(run_cli("eval-r 6 3 23").out == "-3/92\n");
    CHECK(run_cli("eval-r 6 11 23").out == "43/92\n");
    CHECK(run_cli("eval-r 0 37 40").out == "-13/16\n");
}

TEST_CASE("domain errors exit with code 1") {
    CHECK(run_cli("eval-s 5 10").exit_code == 1);
    CHECK(run_cli("eval-s 1 0").exit_code == 1);
    CHECK(run_cli("eval-r -1 1 5").exit_code == 1);
    CHECK(run_cli("recip-check-r 0 3 23").exit_code == 1);   // n below the stated range
    CHECK(run_cli("recip-check-r 99 3 23").exit_code == 1);  // n above the stated range
    CHECK(run_cli("census --b-min 5 --b-max 2").exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("eval-s 7").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("count 5 zzz").exit_code == 2);
    CHECK(run_cli("bench --bits 10 --trials 0").exit_code == 2);
    CHECK(run_cli("bench --trials 4").exit_code == 2);
    CHECK(run_cli("census").exit_code == 2);
    CHECK(run_cli("verify nonsense").exit_code == 2);
    CHECK(run_cli("--format yaml eval-s 1 2").exit_code == 2);
}

TEST_CASE("recip-check reports both sides and the verdict") {
    auto r = run_cli("--format csv recip-check 2 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a,b,lhs,rhs,equal\n2,7,1/14,1/14,true\n");

    auto table = run_cli("recip-check 37 40");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("lhs = ") != std::string::npos);
    CHECK(table.out.find("rhs = ") != std::string::npos);
    CHECK(table.out.find("equal = true") != std::string::npos);
}

TEST_CASE("recip-check-r reports both sides and the verdict") {
    auto j = nlohmann::json::parse(run_cli("--format json recip-check-r 6 3 23").out);
    CHECK(j["n"] == 6);
    CHECK(j["lhs"] == j["rhs"]);
    CHECK(j["equal"] == true);
    CHECK(run_cli("recip-check-r 6 3 23").exit_code == 0);
}

TEST_CASE("classes emits the deterministic level-set table") {
    auto r = run_cli("--format csv classes 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "b,value,size,members\n"
                   "5,-1/5,1,4\n"
                   "5,0,2,2 3\n"
                   "5,1/5,1,1\n");

    auto j = nlohmann::json::parse(run_cli("--format json classes 5").out);
    REQUIRE(j.size() == 3);
    CHECK(j[1]["value"] == "0");
    CHECK(j[1]["members"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("count matches the library and re-parses its own rationals") {
    auto table40 = dedekind::level_sets(40);
    auto target = dedekind::Rational(-13, 16);
    auto expected = dedekind::count_solutions(40, target);
    CHECK(expected >= 1);
    CHECK(run_cli("count 40 -13/16").out == std::to_string(expected) + "\n");

    CHECK(run_cli("count 5 0").out == "2\n");
    CHECK(run_cli("count 5 1/7").out == "0\n");
    CHECK(run_cli("--format csv count 5 0").out == "b,c,count\n5,0,2\n");

    // round trip: every value printed by classes re-parses to the same count
    for (const auto& [value, members] : table40.entries) {
        auto r = run_cli("count 40 " + value.to_string());
        CHECK(r.out == std::to_string(members.size()) + "\n");
    }
}

TEST_CASE("verify subcommands gate on violations") {
    CHECK(run_cli("verify fixtures").exit_code == 0);
    CHECK(run_cli("verify thm1 --b-max 30").exit_code == 0);
    CHECK(run_cli("verify thm3 --b-max 15 --n-max 4").exit_code == 0);
    CHECK(run_cli("verify cor1 --p-max 30").exit_code == 0);

    auto csv = run_cli("--format csv verify thm1 --b-max 20");
    CHECK(csv.out.rfind("b,a1,a2,s1,s2,sums_equal,divisible,verdict\n", 0) == 0);
    CHECK(csv.out.find("violation") == std::string::npos);

    auto j = nlohmann::json::parse(run_cli("--format json verify cor1 --p-max 20").out);
    for (const auto& row : j) CHECK(row["holds"] == true);

    auto fx = run_cli("--format csv verify fixtures");
    CHECK(fx.out.rfind("fixture,holds\n", 0) == 0);
    CHECK(fx.out.find("false") == std::string::npos);
}

TEST_CASE("census output is stable and mirrors the library") {
    auto first = run_cli("--format csv census --b-min 1 --b-max 20");
    auto second = run_cli("--format csv census --b-min 1 --b-max 20");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out ==
          dedekind::render_census(dedekind::census(1, 20), dedekind::Format::csv));
    CHECK(first.out.find("1,0,0,0,0,0\n") != std::string::npos);

    auto j = nlohmann::json::parse(run_cli("--format json census --b-min 40 --b-max 40").out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["b"] == 40);
    CHECK(j[0]["r"] == 2);
    CHECK(j[0]["phi"] == 16);
}

TEST_CASE("bench produces matching checksums and deterministic inputs") {
    auto j = nlohmann::json::parse(run_cli("--format json bench --bits 10 --trials 3 --seed 7").out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["method"] == "naive");
    CHECK(j[1]["method"] == "fast");
    CHECK(j[0]["skipped"] == false);
    CHECK(j[1]["skipped"] == false);
    CHECK(j[0]["checksum"] == j[1]["checksum"]);
    CHECK(j[0]["trials"] == 3);

    // identical request: all seed-determined fields repeat exactly
    auto k = nlohmann::json::parse(run_cli("--format json bench --bits 10 --trials 3 --seed 7").out);
    for (int i = 0; i < 2; ++i) {
        CHECK(j[i]["method"] == k[i]["method"]);
        CHECK(j[i]["b_bits"] == k[i]["b_bits"]);
        CHECK(j[i]["trials"] == k[i]["trials"]);
        CHECK(j[i]["checksum"] == k[i]["checksum"]);
        CHECK(j[i]["skipped"] == k[i]["skipped"]);
    }
}

TEST_CASE("bench skips the naive method beyond its feasibility cutoff") {
    auto j = nlohmann::json::parse(run_cli("--format json bench --bits 30 --trials 2 --seed 5").out);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["method"] == "naive");
    CHECK(j[0]["skipped"] == true);
    CHECK(j[0]["checksum"] == "0");
    CHECK(j[0]["mean_time_ns"] == 0);
    CHECK(j[1]["method"] == "fast");
    CHECK(j[1]["skipped"] == false);
}
