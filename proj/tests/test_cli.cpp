#include <chromgh/io.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using namespace chromgh;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("chromgh_cli_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(CHROMGH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

io::json load(const std::string& path) { return io::json::parse(io::read_file(path)); }

}  // namespace

TEST_CASE("gen-example and gh") {
    TempDir dir;
    REQUIRE(run("gen-example ex-cgh-chi2 --out " + (dir / "a.json")) == 0);
    REQUIRE(run("gen-example ex-cgh-chi3 --out " + (dir / "b.json")) == 0);
    const auto a = io::parse_pair(dir / "a.json");
    CHECK(a.size() > 0);

    REQUIRE(run("gh " + (dir / "a.json") + " " + (dir / "a.json") + " --out " + (dir / "self.json")) == 0);
    const auto self = load(dir / "self.json");
    CHECK(self["exact"] == 0.0);
    CHECK(self["certified"] == true);

    // A tiny budget stops early but still reports certified bounds.
    REQUIRE(run("gh " + (dir / "a.json") + " " + (dir / "b.json") + " --budget 50 --out " + (dir / "cut.json")) == 0);
    const auto cut = load(dir / "cut.json");
    CHECK(cut["exact"].is_null());
    CHECK(cut["certified"] == false);
    CHECK(io::parse_number(cut["lower"]) <= io::parse_number(cut["upper"]));
}

TEST_CASE("sixpack writes six diagrams") {
    TempDir dir;
    REQUIRE(run("gen-example ex-sixpack-chi1 --out " + (dir / "p.json")) == 0);
    io::write_file(dir / "lambda.json", R"({"maximal_faces": [[0]]})");
    io::write_file(dir / "gamma.json", R"({"maximal_faces": [[0, 1]]})");
    const std::string out = dir / "six";
    REQUIRE(run("sixpack " + (dir / "p.json") + " --lambda " + (dir / "lambda.json") + " --gamma " +
                (dir / "gamma.json") + " --degree 0 --out " + out) == 0);
    for (const char* kind : {"dom", "cod", "img", "ker", "cok", "rel"}) {
        const auto path = out + "/" + kind + ".json";
        REQUIRE(fs::exists(path));
        CHECK(io::parse_diagram_text(io::read_file(path)).degree == 0);
    }
    CHECK(io::parse_diagram_text(io::read_file(out + "/ker.json")).points.size() == 1);

    REQUIRE(run("bottleneck " + out + "/cod.json " + out + "/cod.json --out " + (dir / "db.json")) == 0);
    CHECK(io::parse_number(load(dir / "db.json")["bottleneck"]) == 0);
}

TEST_CASE("validate and constraints") {
    TempDir dir;
    io::write_file(dir / "p.json", R"({"points": [[0], [1], [3]], "colors": {"0": 0, "2": 1}})");
    REQUIRE(run("validate " + (dir / "p.json") + " --out " + (dir / "v.json")) == 0);
    const auto v = load(dir / "v.json");
    CHECK(v["points"] == 3);
    CHECK(v["diameter"] == 3.0);

    io::write_file(dir / "c.json", R"({"universe": [0, 1], "sets": [[0]]})");
    REQUIRE(run("constraints --C " + (dir / "c.json") + " --out " + (dir / "s.json")) == 0);
    CHECK(load(dir / "s.json").contains("topology"));
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run("") == 2);
    CHECK(run("gh " + (dir / "missing.json") + " " + (dir / "missing.json")) == 2);
    CHECK(run("gen-example no-such-example") == 2);
    io::write_file(dir / "bad.json", "{\"points\": [[0],\n");
    CHECK(run("validate " + (dir / "bad.json")) == 2);
    // Well-formed but not a metric.
    io::write_file(dir / "asym.json", R"({"distance_matrix": [[0, 1], [2, 0]]})");
    CHECK(run("validate " + (dir / "asym.json")) == 1);
    CHECK(run("--help") == 0);
}

TEST_CASE("short stability run") {
    TempDir dir;
    REQUIRE(run("stability-test --seed 3 --trials 5 --out " + (dir / "r.json")) == 0);
    const auto r = load(dir / "r.json");
    CHECK(r["summary"]["failures"] == 0);
}
