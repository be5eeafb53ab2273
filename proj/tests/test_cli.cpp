#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = superroot::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("superroot_test_" + name);
    std::ofstream(path) << content;
    return path;
}

int count_lines(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    int n = 0;
    for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
    return n;
}

} // namespace

TEST_CASE("affine G(3) as JSON") {
    const auto r = run({"build", "--family", "G3", "--affine", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("type") == "G(3)^");
    CHECK(j.at("base").size() == 4);
    CHECK(j.at("diagram").at("nodes").size() == 4);
}

TEST_CASE("theorem B census for B(0,3) has no failures") {
    const auto r = run({"census", "--family", "B(0,n)", "--n", "3", "--check", "theorem-b"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find(" 0 fail") != std::string::npos);
}

TEST_CASE("D(2,1;0) is rejected with the library message") {
    const auto r = run({"roots", "--family", "D21a", "--a", "0"});
    CHECK(r.code == 1);
    CHECK(r.err == "parameter a must avoid {0,-1}\n");
    CHECK(r.out.empty());
    CHECK(run({"roots", "--family", "D21a", "--a", "-1"}).code == 1);
    // A(n,n) falls back to ambient coordinates rather than failing.
    const auto ann = run({"build", "--family", "A", "--m", "1", "--n", "1", "--json"});
    CHECK(ann.code == 0);
    CHECK(nlohmann::json::parse(ann.out).at("ambient_only") == true);
}

TEST_CASE("usage errors name the offending token") {
    const auto check = [](std::vector<std::string> args, const std::string& needle) {
        const auto r = run(args);
        CAPTURE(r.err);
        CHECK(r.code == 2);
        CHECK(r.err.rfind("usage error: ", 0) == 0);
        CHECK(r.err.find(needle) != std::string::npos);
    };
    check({}, "command is required");
    check({"frob"}, "frob");
    check({"--bogus"}, "--bogus");
    check({"roots", "--family", "G3", "--bogus"}, "--bogus");
    check({"roots"}, "--family");
    check({"roots", "--family", "E8"}, "E8");
    check({"roots", "--family", "G3", "--depth", "x"}, "--depth");
    check({"roots", "--family", "G3", "--depth", "-2"}, "--depth");
    check({"roots", "--family", "G3", "--format", "yaml"}, "--format");
    check({"roots", "--family", "G3", "--json", "--format", "dot"}, "--json");
    check({"base", "--family", "G3", "--reflect", "q1"}, "--reflect");
    check({"parabolic", "--family", "G3", "--subset", "0,9"}, "--subset");
    check({"census", "--family", "G3", "--check", "nope"}, "--check");
    check({"character", "--kind", "nope"}, "--kind");
    check({"roots", "--family", "D21a", "--a", "1/0"}, "--a");
    check({"roots", "--family", "G3", "--config", "/nonexistent/superroot.json"}, "--config");
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("census") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"census", "--family", "D21a", "--a", "2", "--depth", "3", "--json"},
             {"verify", "--suite", "delta", "--json"},
             {"levi", "--family", "F4", "--subset", "2,3,4", "--json"},
             {"roots", "--family", "B", "--m", "1", "--n", "2", "--affine", "--depth", "2", "--json"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("census JSON is newline-delimited") {
    const auto r = run({"census", "--family", "G3", "--depth", "3", "--json"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) CHECK(nlohmann::json::parse(line).contains("components"));
    CHECK(lines == 16);
    const auto dedup = run({"census", "--family", "G3", "--depth", "3", "--json", "--dedup", "--no-full"});
    CHECK(count_lines(dedup.out, "{") < 15);
}

TEST_CASE("DOT diagrams") {
    const auto r = run({"diagram", "--family", "F4", "--affine", "--format", "dot"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("graph \"", 0) == 0);
    CHECK(count_lines(r.out, "[label=\"alpha_") == 5);
    CHECK(count_lines(r.out, " -- ") == 4);
    CHECK(count_lines(r.out, "toward=") == 1);
    CHECK(count_lines(run({"diagram", "--family", "G3", "--format", "dot"}).out, "[label=") == 3);
    CHECK(run({"roots", "--family", "G3", "--format", "dot"}).code == 1);
}

TEST_CASE("character output") {
    const auto r = run({"character", "--rank", "1", "--depth", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1 + q + 2q^2 + 3q^3 + 5q^4 + 7q^5") != std::string::npos);
    const auto z = run({"character", "--rank", "1", "--level", "0"});
    CHECK(z.code == 1);
    CHECK(z.err == "level must be nonzero\n");
    const auto w = run({"character", "--kind", "weight", "--family", "B0", "--n", "1", "--mu", "1,2"});
    REQUIRE(w.code == 0);
    CHECK(w.out == "3\n");
}

TEST_CASE("roots filters") {
    const auto all = run({"roots", "--family", "G3", "--json"});
    const auto odd = run({"roots", "--family", "G3", "--parity", "odd", "--sign", "positive", "--json"});
    REQUIRE(all.code == 0);
    REQUIRE(odd.code == 0);
    CHECK(nlohmann::json::parse(all.out).size() == 28);
    CHECK(nlohmann::json::parse(odd.out).size() == 7);
}

TEST_CASE("base changes through the command line") {
    const auto r = run({"base", "--family", "C", "--n", "3", "--reflect", "o1", "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("is_base") == true);
    // alpha_0 of C(n) is odd, alpha_2 is even.
    CHECK(run({"base", "--family", "C", "--n", "3", "--reflect", "o0"}).code == 0);
    CHECK(run({"base", "--family", "C", "--n", "3", "--reflect", "o1,e3"}).code == 0);
    const auto bad = run({"base", "--family", "C", "--n", "3", "--reflect", "o2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("odd reflection") != std::string::npos);
    CHECK(run({"base", "--family", "C", "--n", "3", "--fixture", "c-case2", "--json"}).code == 0);
}

TEST_CASE("explicit parabolics through the command line") {
    const auto r = run({"parabolic", "--family", "G3", "--explicit", "G3-case3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("parabolic") == true);
    CHECK(j.at("zero").size() == 8);
}

TEST_CASE("config file and environment, flags win") {
    const auto cfg = scratch("cfg.json", R"({"depth": 1, "imaginary_multiplicity": 2})");
    const auto base_args = std::vector<std::string>{"roots", "--family", "B0", "--n", "1", "--affine", "--json"};
    const auto count = [](const Run& r) { return nlohmann::json::parse(r.out).size(); };

    auto args = base_args;
    args.insert(args.end(), {"--config", cfg.string(), "--depth", "2"});
    const auto flagged = run(args);
    REQUIRE(flagged.code == 0);

    args = base_args;
    args.insert(args.end(), {"--config", cfg.string()});
    const auto configured = run(args);
    REQUIRE(configured.code == 0);
    // B(0,1) has 4 roots; depth d gives 4(2d+1) real plus 2d imaginary.
    CHECK(count(configured) == 4 * 3 + 2);
    CHECK(count(flagged) == 4 * 5 + 4);

    ::setenv("SUPERROOT_CONFIG", cfg.string().c_str(), 1);
    const auto env = run(base_args);
    ::unsetenv("SUPERROOT_CONFIG");
    REQUIRE(env.code == 0);
    CHECK(count(env) == 4 * 3 + 2);

    const auto bad = scratch("bad.json", "{ depth: ");
    const auto r = run({"roots", "--family", "G3", "--config", bad.string()});
    CHECK(r.code == 2);
}

TEST_CASE("whitelists") {
    const auto wl = scratch("wl.json", R"([{"pattern": "case 5", "note": "not closed as printed"},
                                           {"pattern": "case 6", "note": "not closed as printed"}])");
    const auto plain = run({"verify", "--suite", "explicit", "--family", "B", "--m", "2", "--n", "1", "--depth", "3", "--json"});
    REQUIRE(plain.code == 0);
    const auto jp = nlohmann::json::parse(plain.out);
    CHECK(jp.at("summary").at("fail").get<int>() > 0);
    const auto listed = run({"verify", "--suite", "explicit", "--family", "B", "--m", "2", "--n", "1", "--depth", "3",
                             "--json", "--whitelist", wl.string()});
    REQUIRE(listed.code == 0);
    const auto jl = nlohmann::json::parse(listed.out);
    CHECK(jl.at("summary").at("fail") == 0);
    CHECK(jl.at("summary").at("whitelisted") == jp.at("summary").at("fail"));
}
