#include "doctest.h"

#include "fairdom/verify.hpp"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" FAIRDOM_CLI "\" " + args;
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fairdom_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void round_trips(const std::string& text) {
    const ojson j = ojson::parse(text);
    CHECK(j.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("count") {
    CHECK(run("count cycle:9 --size 3").out == "3\n");
    CHECK(run("count knn:4 --size 2 --method formula").out == "16\n");
    CHECK(run("count empty:3 --size 3").out == "1\n");
    CHECK(run("count cycle:8 --size 4 --method oracle").out == "14\n");
    CHECK(run("count complete:40 --size 20 --method auto").out == "137846528820\n");
    CHECK(run("count 'corona(path:3,complete:1)' --size 3").out == "2\n");
    const Run csv = run("count cycle:9 --size 3 --format csv");
    CHECK(csv.out == "graph,order,size,method,count\ncycle:9,9,3,formula,3\n");
}

TEST_CASE("listing") {
    CHECK(run("count cycle:9 --size 3 --list").out == "{1,4,7}\n{2,5,8}\n{3,6,9}\n");
    CHECK(run("enum cycle:6 --size 2 --zero-based").out == "{0,3}\n{1,4}\n{2,5}\n");
    CHECK(run("enum complete:3 --size 3").out == "{1,2,3}\n");
    CHECK(run("enum cycle:6 --size 2 --format csv").out == "size,set\n2,1 4\n2,2 5\n2,3 6\n");
    CHECK(run("count cycle:9 --size 3 --list --method formula").code == 1);
}

TEST_CASE("poly, fd and table") {
    CHECK(run("poly complete:4").out == "d_f(1)=4\nd_f(2)=6\nd_f(3)=4\nd_f(4)=1\n");
    const Run p5 = run("poly path:5 --format json");
    CHECK(ojson::parse(p5.out)["coefficients"] == ojson::parse(R"({"2":"2","3":"4","4":"5","5":"1"})"));
    CHECK(ojson::parse(run("poly empty:2 --format json").out)["coefficients"] == ojson::parse(R"({"2":"1"})"));
    CHECK(run("poly complete:40").code == 0);

    CHECK(run("fd cycle:5").out == "3\n");
    CHECK(run("fd empty:4").out == "4\n");
    CHECK(run("fd cycle:6 --k 2").out == "3\n");

    CHECK(run("table path --max-n 1").out == "n\\j\t1\n1\t1\n");
    CHECK(run("table path --max-n 1 --format csv").out == "n,1\n1,1\n");
    CHECK(run("table star --max-n 4").code == 1);
    const Run a = run("table cycle --max-n 12 --format csv");
    const Run b = run("table cycle --max-n 12 --format csv --workers 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json output round-trips") {
    for (const char* args :
         {"count cycle:9 --size 3", "count cycle:9 --size 3 --list", "enum knn:2 --size 2", "poly cactus:3",
          "fd friendship:3", "fd cycle:6 --k 2", "table cycle --max-n 8", "verify cycle --n 3..8"}) {
        const Run r = run(std::string(args) + " --format json");
        INFO(args);
        CHECK(r.code == 0);
        round_trips(r.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run("count cycle:2 --size 1").code == 1);
    CHECK(run("count cycle:9").code == 1);
    CHECK(run("count cycle:9 --size 10").code == 1);
    CHECK(run("count path:9 --size 4 --method formula").code == 1);
    CHECK(run("nonsense").code == 1);
    CHECK(run("count --size 1").code == 1);
    const Run cap = run("count cycle:40 --size 3 --method oracle 2>&1");
    CHECK(cap.code == 2);
    CHECK(cap.out.find("cap of 28") != std::string::npos);
    CHECK(run("poly path:40").code == 2);
    CHECK(run("fd cycle:30").code == 2);
    CHECK(run("count cycle:30 --size 10 --method oracle --cap 30").out == "3\n");
}

TEST_CASE("graph sources and config") {
    const fs::path edges = scratch("star.txt");
    std::ofstream(edges) << "# star\nn 4\n1 2\n1 3\n1 4\n";
    CHECK(run("count --edges " + edges.string() + " --size 1").out == "1\n");
    CHECK(run("enum --edges " + edges.string() + " --size 3").out == "{1,2,3}\n{1,2,4}\n{1,3,4}\n{2,3,4}\n");
    CHECK(run("count cycle:4 --edges " + edges.string() + " --size 1").code == 1);

    const fs::path cfg = scratch("small.cfg");
    std::ofstream(cfg) << "# tight cap\ncap = 8\nworkers=2\n";
    CHECK(run("count cycle:9 --size 3 --method oracle --config " + cfg.string()).code == 2);
    CHECK(run("count cycle:9 --size 3 --method oracle --config " + cfg.string() + " --cap 9").out == "3\n");
    CHECK(run("count cycle:9 --size 3 --method oracle", "FAIRDOM_CONFIG=" + cfg.string()).code == 2);
    CHECK(run("count cycle:8 --size 3 --method oracle", "FAIRDOM_CONFIG=" + cfg.string()).code == 0);
    const fs::path broken = scratch("broken.cfg");
    std::ofstream(broken) << "colour=blue\n";
    CHECK(run("fd cycle:5 --config " + broken.string()).code == 1);
}

TEST_CASE("determinism across workers") {
    for (const char* size : {"7", "10"}) {
        const std::string args = std::string("enum cycle:20 --size ") + size;
        const Run one = run(args + " --workers 1");
        CHECK(one.code == 0);
        CHECK(run(args + " --workers 2").out == one.out);
        CHECK(run(args + " --workers 8").out == one.out);
    }
}

TEST_CASE("verify") {
    const Run cycles = run("verify cycle --n 3..12");
    CHECK(cycles.code == 0);
    CHECK(cycles.out.find("cycle n=6 k=4  oracle=15  table=9") != std::string::npos);
    CHECK(run("verify knn --n 1..6").code == 0);
    CHECK(run("verify path --n 1..12").code == 0);
    CHECK(run("verify cycle --n 3..9 --k 2..3").code == 0);
    CHECK(run("verify cycle --n 9..3").code == 1);
    CHECK(run("verify corona").code == 1);

    // Dropping the (6,4) entry turns the run into a mismatch.
    const fs::path trimmed = scratch("trimmed.tsv");
    {
        std::ifstream in(fairdom::default_data_dir() + "/expected_errata.tsv");
        std::ofstream out(trimmed);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("cycle\t6\t4\t", 0) != 0) out << line << '\n';
    }
    const Run mismatch = run("verify cycle --n 3..12 --errata " + trimmed.string());
    CHECK(mismatch.code == 3);
    CHECK(mismatch.out.find("unexpected: cycle\t6\t4") != std::string::npos);

    const fs::path report = scratch("report.tsv");
    const fs::path found = scratch("found.tsv");
    CHECK(run("verify all --report " + report.string() + " --emit-errata " + found.string()).code == 0);
    std::ifstream f(found), e(fairdom::default_data_dir() + "/expected_errata.tsv");
    std::stringstream fs_, es;
    fs_ << f.rdbuf();
    es << e.rdbuf();
    std::istringstream a(fs_.str()), b(es.str());
    CHECK(fairdom::parse_errata(a) == fairdom::parse_errata(b));

    const Run first = run("verify all --format csv");
    CHECK(run("verify all --format csv").out == first.out);
}

// Where a closed form answers, it matches the oracle unless the cell is a committed erratum.
TEST_CASE("formula and oracle methods agree outside the errata list") {
    const auto expected = fairdom::load_expected_errata();
    const auto is_erratum = [&](const std::string& family, int n, int k, const std::string& source) {
        for (const auto& e : expected)
            if (e.family == family && e.n == n && e.k == k &&
                ("," + e.failing + ",").find("," + source + ",") != std::string::npos)
                return true;
        return false;
    };
    const std::vector<std::tuple<std::string, int, int, int>> families = {
        {"cycle", 3, 10, 0}, {"path", 1, 10, 0}, {"knn", 1, 4, 0},     {"friendship", 1, 4, 1},
        {"cactus", 1, 4, 1}, {"complete", 1, 7, 0}, {"empty", 1, 4, 0}};
    int compared = 0;
    for (const auto& [name, lo, hi, odd] : families)
        for (int n = lo; n <= hi; ++n) {
            const int order = name == "knn" ? 2 * n : odd ? 2 * n + 1 : n;
            for (int k = 1; k <= order; ++k) {
                const std::string g = name + ":" + std::to_string(n) + " --size " + std::to_string(k);
                const Run formula = run("count " + g + " --method formula --format json");
                if (formula.code != 0) continue;
                const ojson f = ojson::parse(formula.out);
                const Run oracle = run("count " + g + " --method oracle");
                ++compared;
                INFO(g);
                const std::string value = f["count"].get<std::string>() + "\n";
                if (is_erratum(name, n, k, f["source"].get<std::string>())) CHECK(value != oracle.out);
                else CHECK(value == oracle.out);
            }
        }
    CHECK(compared > 100);
}
