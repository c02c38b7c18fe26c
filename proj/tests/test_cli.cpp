#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Workdir
{
    fs::path dir;

    Workdir()
    {
        dir = fs::temp_directory_path() / ("tomo_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }

    std::string put(const std::string& name, const std::string& body) const
    {
        const auto p = dir / name;
        std::ofstream(p, std::ios::binary) << body;
        return p.string();
    }

    std::string get(const std::string& name) const
    {
        std::ifstream in(dir / name, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

int run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " \"" TOMO_CLI_PATH "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* const kFeasible = "REC\nk 2 nu 1 t 0\nm 2 n 2\nR 1 0\nC 0 1\nV\n1 1 1\nEND\n";
const char* const kInfeasible = "REC\nk 2 nu 1 t 0\nm 2 n 2\nR 1 0\nC 0 1\nV\n1 1 0\nEND\n";
const char* const kWindow = "WREC\nk 2 t 0\nm 2 n 2\nR 1 1\nC 1 1\nW\n1 1 = 2\nEND\n";

} // namespace

TEST_CASE("solve and verify")
{
    Workdir w;
    const auto inst = w.put("a.rec", kFeasible);
    const auto sol = (w.dir / "a.sol").string();
    CHECK(run("solve " + inst + " --out " + sol) == 0);
    CHECK(w.get("a.sol") == "SOL 2 2\n00\n01\n");
    CHECK(run("verify " + inst + " " + sol) == 0);
    CHECK(run("solve " + inst + " --method k10") == 0);
    CHECK(run("solve " + inst + " --method kv2") == 2);
    CHECK(run("solve " + w.put("b.rec", kInfeasible)) == 1);
    CHECK(run("verify " + w.put("b.rec", kInfeasible) + " " + sol) == 1);
}

TEST_CASE("input errors")
{
    Workdir w;
    CHECK(run("solve " + (w.dir / "missing.rec").string()) == 2);
    CHECK(run("solve " + w.put("bad.rec", "REC\nk 2 nu 1 t 0\n")) == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("transform invert " + w.put("a.rec", kFeasible)) == 2);
    CHECK(run("transform zero-pad " + w.put("w.wrec", kWindow)) == 2);
}

TEST_CASE("oracle, limits and environment budget")
{
    Workdir w;
    const auto wrec = w.put("w.wrec", kWindow);
    CHECK(run("oracle " + wrec) == 0);
    CHECK(run("oracle " + wrec + " --enumerate 5 --out " + (w.dir / "all.sol").string()) == 0);
    CHECK(w.get("all.sol") == "SOL 2 2\n10\n01\nSOL 2 2\n01\n10\n");
    CHECK(run("solve " + wrec) == 0);
    CHECK(run("solve " + wrec + " --method k10") == 2);

    // 6x6 of k = 1 with unit sums: many permutations, so a tiny budget runs out
    std::string big = "REC\nk 1 nu 1 t 0\nm 6 n 6\nR 1 1 1 1 1 1\nC 1 1 1 1 1 1\nV\n";
    for (int j = 1; j <= 6; ++j)
        for (int i = 1; i <= 6; ++i)
            big += std::to_string(i) + " " + std::to_string(j) + " 1\n";
    big += "END\n";
    const auto big_path = w.put("big.rec", big);
    CHECK(run("oracle " + big_path + " --max-nodes 3") == 3);
    CHECK(run("oracle " + big_path, "TOMO_MAX_NODES=3") == 3);
    CHECK(run("oracle " + big_path, "TOMO_MAX_NODES=abc") == 2);
    CHECK(run("oracle " + big_path) == 0);
    CHECK(run("oracle " + big_path + " --max-cells 10") == 3);
}

TEST_CASE("reduce, transform, gen, render")
{
    Workdir w;
    const auto tcol = w.put("t.tcol", "TCOL\nm 1 n 1\nR1 1\nR2 0\nC1 1\nC2 0\nEND\n");
    CHECK(run("reduce three-color " + tcol + " --out " + (w.dir / "r.rec").string()) == 0);
    CHECK(w.get("r.rec") == "REC\nk 2 nu 1 t 1\nm 2 n 2\nR 1 0\nC 1 0\nV\n1 1 1\nEND\n");

    const auto wrec = w.put("w.wrec", kWindow);
    CHECK(run("transform invert " + wrec + " --out " + (w.dir / "inv.wrec").string()) == 0);
    CHECK(w.get("inv.wrec") == "WREC\nk 2 t 0\nm 2 n 2\nR 1 1\nC 1 1\nW\n1 1 = 2\nEND\n");
    CHECK(run("transform zero-pad --k 4 " + wrec) == 0);
    CHECK(run("transform one-pad --k 4 " + wrec) == 0);
    CHECK(run("transform pad-k --k 3 " + w.put("a.rec", kFeasible)) == 0);

    const auto prefix = (w.dir / "g").string();
    CHECK(run("gen --m 6 --n 4 --k 2 --nu 1 --t 0 --density 0.5 --seed 4 --out-prefix " + prefix) == 0);
    CHECK(run("verify " + prefix + ".rec " + prefix + ".sol") == 0);
    CHECK(run("solve " + prefix + ".rec") == 0);

    const auto sol = w.put("x.sol", "SOL 2 2\n10\n00\n");
    CHECK(run("render " + sol + " --out " + (w.dir / "x.txt").string()) == 0);
    CHECK(w.get("x.txt") == "#.\n..\n");
    CHECK(run("render " + sol + " --format pgm --out " + (w.dir / "x.pgm").string()) == 0);
    CHECK(w.get("x.pgm").substr(0, 11) == "P5\n2 2\n255\n");
    CHECK(run("render " + sol + " --format png") == 2);
}
