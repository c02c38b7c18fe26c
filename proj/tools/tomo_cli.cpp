// Command-line front end.
//
// Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 input error,
// 3 resource limit.

#include "tomo/error.hpp"
#include "tomo/generate.hpp"
#include "tomo/io.hpp"
#include "tomo/oracle.hpp"
#include "tomo/reductions.hpp"
#include "tomo/render.hpp"
#include "tomo/solvers.hpp"
#include "tomo/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw tomo::InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& data, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw tomo::InputError("cannot write " + out_path);
    out << data;
}

tomo::OracleLimits limits_from(long long max_nodes, long long max_cells)
{
    tomo::OracleLimits lim;
    if (const char* env = std::getenv("TOMO_MAX_NODES")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw tomo::InputError("TOMO_MAX_NODES must be a positive integer");
        lim.max_nodes = v;
    }
    if (max_nodes > 0)
        lim.max_nodes = max_nodes;
    if (max_cells > 0)
        lim.max_cells = max_cells;
    return lim;
}

tomo::Method parse_method(const std::string& s)
{
    if (s == "auto")
        return tomo::Method::AUTO;
    if (s == "rec1")
        return tomo::Method::REC1;
    if (s == "k10")
        return tomo::Method::K10;
    if (s == "kv2")
        return tomo::Method::KV2;
    if (s == "oracle")
        return tomo::Method::ORACLE;
    throw tomo::InputError("unknown method " + s);
}

int report_oracle(const tomo::OracleResult& r, const std::string& out_path)
{
    switch (r.status) {
    case tomo::OracleStatus::FEASIBLE:
        std::cerr << "FEASIBLE (oracle, " << r.nodes << " nodes)\n";
        emit(tomo::write_solution(*r.image), out_path);
        return kExitOk;
    case tomo::OracleStatus::INFEASIBLE:
        std::cerr << "INFEASIBLE (oracle, " << r.nodes << " nodes)\n";
        return kExitNo;
    case tomo::OracleStatus::LIMIT:
        std::cerr << "ORACLE_LIMIT (" << r.nodes << " nodes)\n";
        return kExitLimit;
    }
    return kExitInput;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Binary matrix reconstruction from row and column sums under block and window constraints"};
    app.require_subcommand(1);

    std::string input;
    std::string second;
    std::string out_path;
    std::string method_name = "auto";
    long long max_nodes = 0;
    long long max_cells = 0;
    std::size_t enumerate_cap = 0;
    int target_k = 0;
    std::string format = "ascii";

    auto* solve = app.add_subcommand("solve", "Solve a REC (or WREC, via the oracle) instance");
    solve->add_option("file", input, "Instance file")->required();
    solve->add_option("--method", method_name, "auto|rec1|k10|kv2|oracle")
        ->check(CLI::IsMember({"auto", "rec1", "k10", "kv2", "oracle"}));
    solve->add_option("--out", out_path, "Write the solution here instead of stdout");
    solve->add_option("--max-nodes", max_nodes, "Oracle search-node budget");
    solve->add_option("--max-cells", max_cells, "Oracle grid-size guard");

    auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
    verify->add_option("instance", input, "Instance file")->required();
    verify->add_option("solution", second, "Solution file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact search on a REC or WREC instance");
    oracle->add_option("file", input, "Instance file")->required();
    oracle->add_option("--enumerate", enumerate_cap, "List up to CAP solutions");
    oracle->add_option("--out", out_path, "Write output here instead of stdout");
    oracle->add_option("--max-nodes", max_nodes, "Search-node budget");
    oracle->add_option("--max-cells", max_cells, "Grid-size guard");

    auto* reduce = app.add_subcommand("reduce", "Instance reductions");
    reduce->require_subcommand(1);
    auto* three_color = reduce->add_subcommand("three-color", "Three-color tomography to Rec(2,1,1)");
    three_color->add_option("file", input, "TCOL file")->required();
    three_color->add_option("--out", out_path, "Write the instance here instead of stdout");

    std::string transform_kind;
    auto* transform = app.add_subcommand("transform", "Instance transformations");
    transform->add_option("kind", transform_kind, "invert|zero-pad|one-pad|pad-k")
        ->required()
        ->check(CLI::IsMember({"invert", "zero-pad", "one-pad", "pad-k"}));
    transform->add_option("file", input, "Instance file")->required();
    transform->add_option("--k", target_k, "Target window side");
    transform->add_option("--out", out_path, "Write the instance here instead of stdout");

    int gm = 0, gn = 0, gk = 0, gnu = 1, gt = 0;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::string prefix;
    auto* gen = app.add_subcommand("gen", "Generate a planted instance and its witness");
    gen->add_option("--m", gm, "Columns")->required();
    gen->add_option("--n", gn, "Rows")->required();
    gen->add_option("--k", gk, "Block side")->required();
    gen->add_option("--nu", gnu, "Block cap");
    gen->add_option("--t", gt, "Pattern class (0, 1, 2)");
    gen->add_option("--density", density, "Probability that a block is nonempty");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--out-prefix", prefix, "Write PREFIX.rec and PREFIX.sol");

    auto* render = app.add_subcommand("render", "Render a solution");
    render->add_option("solution", input, "Solution file")->required();
    render->add_option("--format", format, "ascii|pgm")->check(CLI::IsMember({"ascii", "pgm"}));
    render->add_option("--out", out_path, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed()) {
            const auto lim = limits_from(max_nodes, max_cells);
            const auto inst = tomo::parse_instance(read_file(input));
            const auto method = parse_method(method_name);
            if (const auto* w = std::get_if<tomo::WRecInstance>(&inst)) {
                if (method != tomo::Method::AUTO && method != tomo::Method::ORACLE)
                    throw tomo::InputError("WREC instances are solved by the oracle only");
                return report_oracle(tomo::oracle_solve(*w, lim), out_path);
            }
            const auto& rec = std::get<tomo::RecInstance>(inst);
            const auto res = tomo::solve(rec, method, lim);
            std::cerr << tomo::to_string(res.status) << " (" << tomo::to_string(res.method) << ")\n";
            if (res.status == tomo::SolveStatus::FEASIBLE) {
                emit(tomo::write_solution(*res.image), out_path);
                return kExitOk;
            }
            return res.status == tomo::SolveStatus::INFEASIBLE ? kExitNo : kExitLimit;
        }

        if (verify->parsed()) {
            const auto inst = tomo::parse_instance(read_file(input));
            const auto x = tomo::parse_solution(read_file(second));
            const auto report = std::visit(
                [&x](const auto& i) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(i)>, tomo::RecInstance>)
                        return tomo::verify_rec(i, x);
                    else
                        return tomo::verify_wrec(i, x);
                },
                inst);
            if (report.ok()) {
                std::cout << "VALID\n";
                return kExitOk;
            }
            std::cout << "INVALID (" << report.size() << " violations)\n";
            for (const auto& v : report.violations)
                std::cout << "  " << tomo::describe(v) << '\n';
            return kExitNo;
        }

        if (oracle->parsed()) {
            const auto lim = limits_from(max_nodes, max_cells);
            const auto inst = tomo::parse_instance(read_file(input));
            if (enumerate_cap == 0)
                return std::visit([&](const auto& i) { return report_oracle(tomo::oracle_solve(i, lim), out_path); }, inst);
            const auto e = std::visit([&](const auto& i) { return tomo::oracle_enumerate(i, lim, enumerate_cap); }, inst);
            std::string text;
            for (const auto& x : e.solutions)
                text += tomo::write_solution(x);
            emit(text, out_path);
            std::cerr << e.solutions.size() << " solution(s)" << (e.truncated ? " (truncated)" : "")
                      << (e.limit ? " (limit reached)" : "") << ", " << e.nodes << " nodes\n";
            if (e.limit)
                return kExitLimit;
            return e.solutions.empty() ? kExitNo : kExitOk;
        }

        if (three_color->parsed()) {
            const auto tc = tomo::parse_three_color(read_file(input));
            emit(tomo::write_instance(tomo::three_color_to_rec(tc)), out_path);
            return kExitOk;
        }

        if (transform->parsed()) {
            const auto inst = tomo::parse_instance(read_file(input));
            if (transform_kind == "invert") {
                emit(tomo::write_instance(tomo::t1_invert(std::get<tomo::WRecInstance>(inst))), out_path);
                return kExitOk;
            }
            if (target_k < 2)
                throw tomo::InputError("--k K (K >= 2) is required for " + transform_kind);
            if (transform_kind == "pad-k")
                emit(tomo::write_instance(tomo::pad_to_k(std::get<tomo::RecInstance>(inst), target_k)), out_path);
            else if (transform_kind == "zero-pad")
                emit(tomo::write_instance(tomo::t2_zero_pad(std::get<tomo::WRecInstance>(inst), target_k)), out_path);
            else
                emit(tomo::write_instance(tomo::t3_one_pad(std::get<tomo::WRecInstance>(inst), target_k)), out_path);
            return kExitOk;
        }

        if (gen->parsed()) {
            const auto planted = tomo::gen_planted(gm, gn, gk, gnu, gt, density, seed);
            if (prefix.empty()) {
                emit(tomo::write_instance(planted.instance), "");
            }
            else {
                emit(tomo::write_instance(planted.instance), prefix + ".rec");
                emit(tomo::write_solution(planted.witness), prefix + ".sol");
            }
            return kExitOk;
        }

        if (render->parsed()) {
            const auto x = tomo::parse_solution(read_file(input));
            emit(tomo::render(x, format == "pgm" ? tomo::RenderFormat::PGM : tomo::RenderFormat::ASCII), out_path);
            return kExitOk;
        }
    }
    catch (const std::bad_variant_access&) {
        std::cerr << "error: instance kind does not fit this transformation (invert/zero-pad/one-pad need WREC, pad-k needs REC)\n";
        return kExitInput;
    }
    catch (const tomo::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const tomo::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLimit;
    }
    return kExitInput;
}
