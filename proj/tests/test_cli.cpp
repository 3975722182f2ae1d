#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "graphfair/cli.hpp"
#include "graphfair/fixtures.hpp"
#include "graphfair/io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace graphfair;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("graphfair-test-" + std::to_string(::getpid()) + "-" +
                                             std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("instances round-trip") {
    Rng rng(50);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = testing::pick(rng, 1, 8);
        Instance in{testing::random_connected(n, rng), {random_additive(n, 20, rng)}};
        if (n <= 5) {
            in.agents.push_back(testing::random_monotone_table(n, 7, rng));
        }
        for (bool canonical : {true, false}) {
            const auto text = write_instance(in, canonical);
            const auto back = parse_instance(text);
            CHECK(back.graph == in.graph);
            CHECK(back.agents == in.agents);
            CHECK(write_instance(back, canonical) == text);
        }
    }
    for (const auto& name : fixture_names()) {
        const auto fx = get_fixture(name);
        CHECK(parse_instance(write_instance(fx.instance)).agents == fx.instance.agents);
    }
}

TEST_CASE("allocations round-trip") {
    const Allocation a({{0, 2}, {}, {1, 3}});
    CHECK(write_allocation(a) == "{\"bundles\":[[0,2],[],[1,3]]}\n");
    CHECK(parse_allocation(write_allocation(a)) == a);
    CHECK(parse_allocation(write_allocation(a, false)) == a);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_instance("{"), InvalidInput);
    CHECK_THROWS_AS(parse_instance(R"({"graph":{"vertices":2,"edges":[[0,1]]}})"), InvalidInput);
    CHECK_THROWS_AS(parse_instance(R"({"graph":{"vertices":2,"edges":[[0,1]]},"agents":[{"type":"additive","values":[1]}]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_instance(R"({"graph":{"vertices":3,"edges":[[0,1]]},"agents":[{"type":"additive","values":[1,1,1]}]})"),
                    InvalidInput);
    CHECK_THROWS_AS(parse_instance(R"({"graph":{"vertices":1,"edges":[]},"agents":[{"type":"fancy"}]})"), InvalidInput);
    CHECK_THROWS_AS(parse_allocation(R"({"bundles":[[1,"x"]]})"), InvalidInput);
}

TEST_CASE("solve and verify") {
    TempDir tmp;
    REQUIRE(call({"fixture", "--name", "prop3.2-mnw-half", "--out", tmp / "p.json"}).code == cli::kOk);
    const auto solved = call({"solve", "--algo", "brute-mnw", "--in", tmp / "p.json", "--out", tmp / "a.json"});
    REQUIRE(solved.code == cli::kOk);
    const auto info = nlohmann::json::parse(solved.out);
    CHECK(info["nash_product"] == "4");
    CHECK(call({"verify", "--criterion", "pmms", "--alpha", "1/2", "--in", tmp / "p.json", "--alloc", tmp / "a.json"})
              .code == cli::kOk);

    REQUIRE(call({"gen", "--shape", "gnp", "--vertices", "8", "--agents", "2", "--seed", "3", "--out",
                  tmp / "g.json"})
                .code == cli::kOk);
    REQUIRE(call({"solve", "--algo", "two34", "--in", tmp / "g.json", "--out", tmp / "b.json"}).code == cli::kOk);
    CHECK(call({"verify", "--criterion", "pmms", "--alpha", "3/4", "--in", tmp / "g.json", "--alloc", tmp / "b.json"})
              .code == cli::kOk);
}

TEST_CASE("verify reports a witness on failure") {
    TempDir tmp;
    REQUIRE(call({"fixture", "--name", "prop2.2-ef1-not-pmms", "--out", tmp / "f.json"}).code == cli::kOk);
    write_text_file(tmp / "a.json", write_allocation(Allocation({{0}, {1, 2}})));
    const auto r = call({"verify", "--criterion", "pmms", "--in", tmp / "f.json", "--alloc", tmp / "a.json"});
    CHECK(r.code == cli::kCheckFailed);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["witness"]["agent"] == 0);
    CHECK(j["witness"]["other"] == 1);
    CHECK(call({"verify", "--criterion", "ef1", "--in", tmp / "f.json", "--alloc", tmp / "a.json"}).code == cli::kOk);
    CHECK(call({"verify", "--criterion", "pmms", "--alpha", "0.5", "--in", tmp / "f.json", "--alloc", tmp / "a.json"})
              .code == cli::kMalformed);
}

TEST_CASE("generation is reproducible") {
    TempDir tmp;
    for (const char* shape : {"path", "tree", "cycle", "unicyclic", "star", "gnp"}) {
        const std::vector<std::string> base{"gen",     "--shape", shape, "--vertices", "7", "--agents", "3",
                                            "--seed",  "7",       "--canonical"};
        auto a = base, b = base;
        a.insert(a.end(), {"--out", tmp / "a.json"});
        b.insert(b.end(), {"--out", tmp / "b.json"});
        REQUIRE(call(a).code == cli::kOk);
        REQUIRE(call(b).code == cli::kOk);
        CHECK(slurp(tmp.path() / "a.json") == slurp(tmp.path() / "b.json"));
        const auto in = read_instance_file(tmp / "a.json");
        CHECK(in.graph.size() == 7);
        CHECK(in.n_agents() == 3);
    }
    const auto c = call({"gen", "--shape", "path", "--vertices", "5", "--seed", "8", "--canonical"});
    const auto d = call({"gen", "--shape", "path", "--vertices", "5", "--seed", "9", "--canonical"});
    CHECK(c.out != d.out);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    write_text_file(tmp / "bad.json", "{\"graph\":");
    CHECK(call({"solve", "--in", tmp / "bad.json"}).code == cli::kMalformed);
    CHECK(call({"solve", "--in", tmp / "missing.json"}).code == cli::kMalformed);
    CHECK(call({"frobnicate"}).code == cli::kMalformed);

    REQUIRE(call({"gen", "--shape", "star", "--vertices", "5", "--agents", "3", "--out", tmp / "s.json"}).code ==
            cli::kOk);
    CHECK(call({"solve", "--algo", "path3", "--in", tmp / "s.json"}).code == cli::kPrecondition);

    REQUIRE(call({"gen", "--shape", "gnp", "--vertices", "14", "--agents", "4", "--out", tmp / "big.json"}).code ==
            cli::kOk);
    CHECK(call({"solve", "--algo", "brute-mnw", "--in", tmp / "big.json"}).code == cli::kSizeGuard);
    CHECK(call({"solve", "--in", tmp / "big.json"}).code == cli::kSizeGuard);
}

TEST_CASE("oracle values") {
    TempDir tmp;
    const Instance in{ItemGraph::path(4), {UtilityFunction::additive({1, 3, 3, 1})}};
    write_text_file(tmp / "i.json", write_instance(in));
    CHECK(call({"oracle", "--value", "pmms", "--bundle", "0,1,2", "--in", tmp / "i.json"}).out == "3\n");
    CHECK(call({"oracle", "--value", "mu", "--k", "3", "--in", tmp / "i.json"}).out == "1\n");
    CHECK(call({"oracle", "--value", "mms", "--in", tmp / "i.json"}).out == "8\n");
    CHECK(call({"oracle", "--agent", "2", "--in", tmp / "i.json"}).code == cli::kMalformed);
}

TEST_CASE("bench report") {
    TempDir tmp;
    fs::create_directories(tmp.path() / "set");
    for (int seed = 0; seed < 6; ++seed) {
        REQUIRE(call({"gen", "--shape", seed % 2 ? "path" : "gnp", "--vertices", "7", "--agents",
                      seed % 2 ? "3" : "2", "--seed", std::to_string(seed), "--out",
                      (tmp.path() / "set" / ("i" + std::to_string(seed) + ".json")).string()})
                    .code == cli::kOk);
    }
    REQUIRE(call({"bench", "--dir", (tmp.path() / "set").string(), "--out", tmp / "report.json"}).code == cli::kOk);
    const auto j = nlohmann::json::parse(slurp(tmp.path() / "report.json"));
    REQUIRE(j["instances"].size() == 6);
    for (const auto& row : j["instances"]) {
        REQUIRE(row.contains("agents"));
        for (const auto& a : row["agents"]) {
            const long long num = a["ratio_num"], den = a["ratio_den"];
            if (row["algo"] == "two34") {
                CHECK(4 * num >= 3 * den);
            } else {
                CHECK(num == den);
            }
            CHECK(a.contains("utility"));
            CHECK(a.contains("pmms"));
        }
    }
    CHECK(j.contains("global_min_ratio"));
}

TEST_CASE("fixture subcommand") {
    const auto list = call({"fixture", "--list"});
    CHECK(list.out.find("prop3.2-mnw-half\n") != std::string::npos);
    CHECK(call({"fixture", "--name", "lemma6.6-pmms-smms-not-leximin", "--check"}).code == cli::kOk);
    CHECK(call({"fixture", "--name", "nope"}).code == cli::kMalformed);
}

#ifdef GRAPHFAIR_CLI_PATH
TEST_CASE("the installed binary") {
    TempDir tmp;
    const std::string cmd = std::string(GRAPHFAIR_CLI_PATH) + " gen --shape tree --vertices 6 --agents 2 --seed 4 --out " +
                            (tmp / "t.json");
    REQUIRE(std::system(cmd.c_str()) == 0);
    const std::string solve = std::string(GRAPHFAIR_CLI_PATH) + " solve --in " + (tmp / "t.json") + " --out " +
                              (tmp / "a.json") + " > " + (tmp / "log.txt");
    CHECK(std::system(solve.c_str()) == 0);
    CHECK(read_allocation_file(tmp / "a.json").agents() == 2);
}
#endif

}
