#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessberg/catalog.hpp"
#include "hessberg/cli.hpp"
#include "hessberg/errors.hpp"
#include "hessberg/text.hpp"

using namespace hessberg;

namespace {

Root rt(std::vector<int> c) { return Root{std::move(c)}; }

std::string golden(const std::string& name) {
    std::string path = std::string(HESSBERG_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("root expressions parse in both syntaxes") {
    CHECK(parse_root_text("[1,1]", 2) == rt({1, 1}));
    CHECK(parse_root_text(" -[1,1] ", 2) == rt({-1, -1}));
    CHECK(parse_root_text("a1+a2", 2) == rt({1, 1}));
    CHECK(parse_root_text("3a1+2a2", 2) == rt({3, 2}));
    CHECK(parse_root_text("-a1-a2", 2) == rt({-1, -1}));
    CHECK(parse_root_text("a2", 2) == rt({0, 1}));
    CHECK(parse_root_text("2a1", 2) == rt({2, 0}));
    CHECK(parse_root_text("a1 + a2", 2) == rt({1, 1}));
}

TEST_CASE("malformed root expressions are rejected") {
    CHECK_THROWS_AS(parse_root_text("", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("[1]", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("[1,2", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("[0,0]", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("a1-a1", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("a0", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("a3", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("a1 a2", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("q1", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("2", 2), InputError);
    CHECK_THROWS_AS(parse_root_text("[1,x]", 2), InputError);
}

TEST_CASE("root formatting round-trips through the parser") {
    CHECK(root_symbolic(rt({1, 1})) == "a1+a2");
    CHECK(root_symbolic(rt({-1, -1})) == "-a1-a2");
    CHECK(root_symbolic(rt({3, 2})) == "3a1+2a2");
    CHECK(root_symbolic(rt({0, 1})) == "a2");
    CHECK(root_symbolic(rt({2, -1})) == "2a1-a2");
    CHECK(root_vector_text(rt({1, 1})) == "[1,1]");
    CHECK(root_vector_text(rt({-1, 0})) == "[-1,0]");

    for (const char* type : {"G2", "B3", "A3"}) {
        RootSystem rs(parse_cartan_type(type));
        for (int id = 0; id < rs.num_roots(); ++id) {
            Root r = rs.root(id);
            CHECK(parse_root_text(root_symbolic(r), rs.rank()) == r);
            CHECK(parse_root_text(root_vector_text(r), rs.rank()) == r);
        }
    }
}

TEST_CASE("words parse and format") {
    CHECK(parse_word_text("e", 2).empty());
    CHECK(parse_word_text("", 2).empty());
    CHECK(parse_word_text("s1 s2 s1", 2) == std::vector<int>{0, 1, 0});
    CHECK(parse_word_text("  s2   s1 ", 2) == std::vector<int>{1, 0});
    CHECK(word_text({}) == "e");
    CHECK(word_text({0, 1}) == "s1 s2");
    CHECK(parse_word_text(word_text({0, 1, 0}), 2) == std::vector<int>{0, 1, 0});

    CHECK_THROWS_AS(parse_word_text("e s1", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("s1 e", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("s0", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("s3", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("x1", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("s", 2), InputError);
    CHECK_THROWS_AS(parse_word_text("s1x", 2), InputError);
}

TEST_CASE("Levi masks parse from index lists") {
    CHECK(parse_levi_text("", 3) == 0u);
    CHECK(parse_levi_text("1", 3) == 1u);
    CHECK(parse_levi_text("1,2", 3) == 3u);
    CHECK(parse_levi_text("2,1", 3) == 3u);
    CHECK(parse_levi_text("3", 3) == 4u);
    CHECK_THROWS_AS(parse_levi_text("0", 3), InputError);
    CHECK_THROWS_AS(parse_levi_text("4", 3), InputError);
    CHECK_THROWS_AS(parse_levi_text("1,,2", 3), InputError);

    CHECK(levi_text(0u, 3).empty());
    CHECK(levi_text(5u, 3) == "1,3");
    for (std::uint32_t mask = 0; mask < 8; ++mask)
        CHECK(parse_levi_text(levi_text(mask, 3), 3) == mask);
}

TEST_CASE("Hessenberg space expressions") {
    RootSystem a2(parse_cartan_type("A2"));
    CHECK(parse_hessenberg_text(a2, "neg=") == hessenberg_minimal());
    CHECK(parse_hessenberg_text(a2, "h=2,3,3") == parse_hessenberg_text(a2, "neg=-a1,-a2"));
    // Commas inside coefficient vectors do not split the list.
    CHECK(parse_hessenberg_text(a2, "neg=-a1,-a2,-[1,1]") == hessenberg_full(a2));
    CHECK(parse_hessenberg_text(a2, "neg=-[1,1],-a1,-a2") == hessenberg_full(a2));

    CHECK_THROWS_WITH_AS(parse_hessenberg_text(a2, "all"),
                         "--hess all is only valid for catalog-style commands", InputError);
    CHECK_THROWS_AS(parse_hessenberg_text(a2, "junk"), InputError);
    CHECK_THROWS_AS(parse_hessenberg_text(a2, "neg=a1"), InputError);
    CHECK_THROWS_AS(parse_hessenberg_text(a2, "neg=-[1,2]"), InputError);

    RootSystem b2(parse_cartan_type("B2"));
    CHECK_THROWS_AS(parse_hessenberg_text(b2, "h=1,2"), InputError);
}

TEST_CASE("nilpotent support expressions") {
    RootSystem a2(parse_cartan_type("A2"));
    CHECK(parse_nilpotent_text(a2, "").phi_n.none());
    NilpotentSupport n = parse_nilpotent_text(a2, "a1,a1+a2");
    CHECK(n.phi_n.count() == 2);
    CHECK(n.phi_n.test(*a2.positive_id_of(rt({1, 0}))));
    CHECK(n.phi_n.test(*a2.positive_id_of(rt({1, 1}))));
    CHECK(parse_nilpotent_text(a2, "[1,1]").phi_n.test(*a2.positive_id_of(rt({1, 1}))));
    CHECK_THROWS_AS(parse_nilpotent_text(a2, "-a1"), InputError);
    CHECK_THROWS_AS(parse_nilpotent_text(a2, "[1,2]"), InputError);
}

TEST_CASE("csv fields are quoted only when needed") {
    CHECK(csv_quote("abc") == "abc");
    CHECK(csv_quote("").empty());
    CHECK(csv_quote("a,b") == "\"a,b\"");
    CHECK(csv_quote("a\"b") == "\"a\"\"b\"");
    CHECK(csv_quote("a\nb") == "\"a\nb\"");
    CHECK(csv_quote("[1,4,1,0]") == "\"[1,4,1,0]\"");
}

TEST_CASE("vector rendering for counts and spaces") {
    CHECK(counts_vector_text({1, 4, 1, 0}) == "[1,4,1,0]");
    CHECK(counts_vector_text({}) == "[]");

    RootSystem a2(parse_cartan_type("A2"));
    CHECK(space_vector_text(a2, hessenberg_minimal()) == "[]");
    // Negatives are listed by ascending positive id, so -a2 precedes -a1.
    CHECK(space_vector_text(a2, parse_hessenberg_text(a2, "h=2,3,3")) == "[[0,-1],[-1,0]]");
    CHECK(space_vector_text(a2, hessenberg_full(a2)) == "[[0,-1],[-1,0],[-1,-1]]");
}

TEST_CASE("digest uses 64-bit fnv1a") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("hello") == 0xa430d84680aabd0bull);
    CHECK(digest_line("") == "fnv1a64:cbf29ce484222325");
    CHECK(digest_line("hello") == "fnv1a64:a430d84680aabd0b");
}

TEST_CASE("cli output matches the frozen bytes") {
    struct Case {
        std::vector<std::string> args;
        const char* file;
    };
    const Case cases[] = {
        {{"betti", "--type", "A2", "--levi", "", "--hess", "h=2,3,3", "--format", "json"},
         "betti_a2_h233.json"},
        {{"catalog", "--type", "A1", "--format", "csv"}, "catalog_a1.csv"},
        {{"chain", "--type", "A2", "--nilpotent", "a2", "--hess", "neg=", "--start", "s1 s2"},
         "chain_a2.json"},
        {{"connected", "--type", "A2", "--levi", "", "--hess", "h=2,3,3"}, "connected_a2.txt"},
        {{"fixed-points", "--type", "A2", "--nilpotent", "a1,a2", "--hess", "h=2,3,3",
          "--format", "json"},
         "fixed_points_a2.json"},
        {{"hessenberg-enumerate", "--type", "A2", "--format", "json"}, "hessenberg_a2.json"},
    };
    for (const Case& c : cases) {
        CliResult r = run_cli(c.args);
        CHECK_MESSAGE(r.code == 0, c.file, " stderr: ", r.err);
        CHECK_MESSAGE(r.out == golden(c.file), c.file);
    }
}

TEST_CASE("cli rejects bad invocations with exit code one") {
    CliResult r = run_cli({"describe", "--type", "Z9"});
    CHECK(r.code == 1);
    CHECK(r.err.find("unsupported Cartan type Z9") != std::string::npos);

    r = run_cli({"connected", "--type", "A2", "--levi", "", "--hess", "neg=",
                 "--format", "csv"});
    CHECK(r.code == 1);
    CHECK(r.err.find("csv output is not supported for this command") != std::string::npos);

    r = run_cli({"betti", "--type", "A2", "--hess", "h=3,2,3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("nondecreasing") != std::string::npos);

    r = run_cli({"chain", "--type", "A2", "--nilpotent", "a1+a2", "--hess", "neg=",
                 "--start", "s1 s2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("not a fixed point") != std::string::npos);

    r = run_cli({});
    CHECK(r.code != 0);
}

TEST_CASE("cli enforces the element cap unless forced") {
    CliResult r = run_cli({"betti", "--type", "E7", "--hess", "neg="});
    CHECK(r.code == 1);
    CHECK(r.err.find("pass --force to override") != std::string::npos);

    r = run_cli({"hessenberg-enumerate", "--type", "E7"});
    CHECK(r.code == 1);
    CHECK(r.err.find("guarded at rank 4") != std::string::npos);
}

TEST_CASE("betti json output re-parses with the advertised shape") {
    CliResult r = run_cli({"betti", "--type", "B2", "--levi", "1", "--hess", "neg=-a1",
                           "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["cartan"] == "B2");
    CHECK(j["levi"] == nlohmann::json::array({1}));
    CHECK(j["hess_neg"].size() == 1);
    CHECK(j["betti"].is_array());
    CHECK(j["betti"].size() == 5);
    CHECK(j["cells"].size() == 8);
    long long total = 0;
    for (const auto& b : j["betti"]) total += b.get<long long>();
    CHECK(total == 8);
    for (const auto& cell : j["cells"]) {
        CHECK(cell.contains("w"));
        CHECK(cell.contains("y"));
        CHECK(cell.contains("v"));
        CHECK(cell.contains("dim"));
    }
    CHECK(j.contains("connected"));
    CHECK(j.contains("witness"));
}

TEST_CASE("chain json lists coefficient vectors for each step") {
    CliResult r = run_cli({"chain", "--type", "A2", "--nilpotent", "a2", "--hess", "neg=",
                           "--start", "s1 s2"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["start"] == "s1 s2");
    CHECK(j["end"] == "e");
    REQUIRE(j["steps"].size() == 2);
    CHECK(j["steps"][0]["gamma"] == nlohmann::json::array({1, 1}));
    CHECK(j["steps"][0]["w_after"] == "s1");
    CHECK(j["steps"][1]["gamma"] == nlohmann::json::array({1, 0}));
    CHECK(j["steps"][1]["w_after"] == "e");
}
