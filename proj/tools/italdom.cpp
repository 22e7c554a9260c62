// italdom: generate Sierpinski graphs, build and verify Italian dominating
// functions, and solve for exact domination numbers.
//
// Exit codes: 0 valid / proven, 1 invalid / unproven, 2 usage or input error.

#include "italdom/constructions.hpp"
#include "italdom/errors.hpp"
#include "italdom/io.hpp"
#include "italdom/solver.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace italdom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text(path, text);
}

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text)
{
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw InvalidInput("bad range '" + text + "' (expected A..B)");
    }
    if (r.lo > r.hi)
        throw InvalidInput("empty range '" + text + "'");
    return r;
}

std::string verdict(const Graph& g, const WeightFunction& f)
{
    if (verify_pid(g, f).valid)
        return "valid PID";
    if (verify_idf(g, f).valid)
        return "valid IDF";
    return "invalid";
}

// gen -------------------------------------------------------------------------

struct GraphChoice {
    std::string graph_path;
    std::vector<int> sierpinski;
    int complete = 0;
    int path = 0;
};

Graph load_graph(const GraphChoice& c)
{
    if (!c.graph_path.empty())
        return graph_from_json(read_json_file(c.graph_path));
    if (c.complete > 0)
        return build_complete(c.complete);
    if (c.path > 0)
        return build_path(c.path);
    if (c.sierpinski.size() == 2)
        return build_sierpinski(c.sierpinski[0], c.sierpinski[1]).graph();
    throw InvalidInput("no graph given: use --graph, --sierpinski N T, --complete K or --path M");
}

int cmd_gen(const std::vector<int>& nt, int complete, int path, const std::string& format, const std::string& out)
{
    GraphChoice choice;
    choice.sierpinski = nt;
    choice.complete = complete;
    choice.path = path;
    const Graph g = load_graph(choice);
    if (format == "dot")
        emit(to_dot(g), out);
    else
        emit(graph_to_json(g).dump(2) + "\n", out);
    return exit_ok;
}

// construct -------------------------------------------------------------------

int cmd_construct(int n, int t, const std::string& out, const std::string& graph_out)
{
    const SierpinskiGraph g = build_sierpinski(n, t);
    const Construction c = construct(n, t);
    const auto weight = total_weight(c.weights);
    const std::string v = verdict(g, c.weights);

    json doc = weights_to_json(g, c.weights);
    doc["regime"] = std::string(regime_name(c.regime));
    doc["closed_form"] = c.closed_form;
    doc["total_weight"] = weight;
    doc["verdict"] = v;
    emit(doc.dump(2) + "\n", out);
    if (!graph_out.empty())
        write_text(graph_out, graph_to_json(g).dump(2) + "\n");

    std::cerr << "S(K_" << n << "," << t << ") regime " << regime_name(c.regime) << ": weight " << weight
              << ", closed form " << c.closed_form << ", " << v << "\n";
    return v == "valid PID" && weight == c.closed_form ? exit_ok : exit_fail;
}

// verify ----------------------------------------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& weights_path, const std::string& variant)
{
    const Graph g = graph_from_json(read_json_file(graph_path));
    const WeightFunction f = weights_from_json(read_json_file(weights_path), g);
    const Variant var = parse_variant(variant);
    const auto report = verify(g, f, var);
    std::cout << report_to_json(g, report, var).dump(2) << "\n";
    return report.valid ? exit_ok : exit_fail;
}

// solve -----------------------------------------------------------------------

struct SolveOptions {
    GraphChoice graph;
    std::string variant = "italian";
    std::string engine = "auto";
    std::uint64_t budget = SearchConfig{}.node_budget;
    std::int64_t cutoff = -1;
    bool seed_construction = false;
    bool enumerate = false;
    std::size_t cap = SearchConfig{}.solution_cap;
    std::string out;
};

int cmd_solve(const SolveOptions& o)
{
    const Graph g = load_graph(o.graph);
    const Variant var = parse_variant(o.variant);
    SearchConfig config;
    config.node_budget = o.budget;
    config.solution_cap = o.cap;
    if (o.cutoff >= 0)
        config.weight_cutoff = o.cutoff;
    if (o.seed_construction) {
        if (g.family() != Family::sierpinski)
            throw InvalidInput("--seed-construction needs a Sierpinski graph");
        config.seed = construct(g.param_n(), g.param_t()).weights;
    }
    const Engine engine = o.engine == "auto" ? default_engine(g, config) : parse_engine(o.engine);
    const SolveResult r = solve(g, var, engine, config);
    json doc = solve_result_to_json(r);
    int code = r.proven ? exit_ok : exit_fail;
    if (o.enumerate) {
        const auto e = enumerate_optima(g, var, config, r.proven ? std::optional(r.optimum) : std::nullopt);
        json optima = json::array();
        for (const auto& f : e.optima)
            optima.push_back(std::vector<int>(f.values().begin(), f.values().end()));
        doc["optima"] = std::move(optima);
        doc["enumeration_complete"] = e.complete;
    }
    emit(doc.dump(2) + "\n", o.out);
    return code;
}

// table -----------------------------------------------------------------------

struct TableRow {
    int n, t;
    std::int64_t vertices;
    std::string regime;
    std::int64_t italian, perfect, construction;
    bool construction_valid;
    std::optional<SolveResult> solved_italian, solved_perfect;
};

std::string flag(const std::optional<bool>& b)
{
    return b ? (*b ? "true" : "false") : "-";
}

int cmd_table(const std::string& n_range, const std::string& t_range, bool csv, std::uint64_t budget,
              int solve_limit)
{
    const Range nr = parse_range(n_range);
    const Range tr = parse_range(t_range);
    if (nr.lo < 2 || tr.lo < 1)
        throw InvalidInput("table needs n >= 2 and t >= 1");

    const std::vector<std::string> header{"n",         "t",           "vertices",       "regime",
                                          "gamma_I",   "gamma_I_p",   "construction",   "construction_valid",
                                          "solver_I",  "solver_I_p",  "agree_weight",   "agree_solver_I",
                                          "agree_solver_I_p"};
    std::vector<std::vector<std::string>> rows;
    bool all_agree = true;
    for (int n = nr.lo; n <= nr.hi; ++n)
        for (int t = tr.lo; t <= tr.hi; ++t) {
            const SierpinskiGraph g = build_sierpinski(n, t);
            const Construction c = construct(n, t);
            const auto weight = total_weight(c.weights);
            const bool valid = verify_pid(g, c.weights).valid;
            const auto gi = closed_form_italian(n, t);
            const auto gp = closed_form_perfect(n, t);

            std::optional<SolveResult> si, sp;
            SearchConfig config;
            config.node_budget = budget;
            if (n == 2) {
                si = solve(g, Variant::italian, Engine::path_dp, config);
                sp = solve(g, Variant::perfect, Engine::path_dp, config);
            } else if (g.size() <= solve_limit) {
                config.seed = c.weights;
                si = solve_branch_bound(g, Variant::italian, config);
                sp = solve_branch_bound(g, Variant::perfect, config);
            }
            auto proven_value = [](const std::optional<SolveResult>& r) -> std::string {
                if (!r)
                    return "-";
                return std::to_string(r->optimum) + (r->proven ? "" : "?");
            };
            auto agrees = [](const std::optional<SolveResult>& r, std::int64_t expected) -> std::optional<bool> {
                if (!r || !r->proven)
                    return std::nullopt;
                return r->optimum == expected;
            };
            const bool weight_ok = weight == gi && weight == gp && valid;
            const auto ai = agrees(si, gi);
            const auto ap = agrees(sp, gp);
            all_agree = all_agree && weight_ok && ai.value_or(true) && ap.value_or(true);
            rows.push_back({std::to_string(n), std::to_string(t), std::to_string(g.size()),
                            std::string(regime_name(c.regime)), std::to_string(gi), std::to_string(gp),
                            std::to_string(weight), valid ? "true" : "false", proven_value(si), proven_value(sp),
                            flag(weight_ok), flag(ai), flag(ap)});
        }

    if (csv) {
        auto line = [](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i)
                s += (i ? "," : "") + cells[i];
            return s + "\n";
        };
        std::cout << line(header);
        for (const auto& r : rows)
            std::cout << line(r);
    } else {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            width[i] = header[i].size();
            for (const auto& r : rows)
                width[i] = std::max(width[i], r[i].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                std::cout << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
            std::cout << "\n";
        };
        line(header);
        for (const auto& r : rows)
            line(r);
    }
    return all_agree ? exit_ok : exit_fail;
}

// export ----------------------------------------------------------------------

int cmd_export(const std::string& graph_path, const std::string& weights_path, const std::string& out)
{
    const Graph g = graph_from_json(read_json_file(graph_path));
    std::optional<WeightFunction> f;
    if (!weights_path.empty())
        f = weights_from_json(read_json_file(weights_path), g);
    emit(to_dot(g, f), out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Italian domination on Sierpinski graphs S(K_n,t)"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate S(K_n,t), K_n or P_m as JSON or DOT");
    std::vector<int> gen_nt;
    int gen_complete = 0;
    int gen_path = 0;
    std::string gen_format = "json";
    std::string gen_out;
    gen->add_option("n_t", gen_nt, "Alphabet size n and level t")->expected(2);
    gen->add_option("--complete", gen_complete, "Generate K_n instead")->check(CLI::PositiveNumber);
    gen->add_option("--path", gen_path, "Generate P_m instead")->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

    // construct
    auto* con = app.add_subcommand("construct", "Build the optimal dominating function for S(K_n,t)");
    int con_n = 0;
    int con_t = 0;
    std::string con_out;
    std::string con_graph_out;
    con->add_option("n", con_n, "Alphabet size")->required();
    con->add_option("t", con_t, "Level")->required();
    con->add_option("-o,--output", con_out, "Weight file path (default stdout)");
    con->add_option("--graph-out", con_graph_out, "Also write the graph JSON here");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a weight file against a graph file");
    std::string ver_graph;
    std::string ver_weights;
    std::string ver_variant = "perfect";
    ver->add_option("graph", ver_graph, "Graph JSON")->required();
    ver->add_option("weights", ver_weights, "Weight JSON")->required();
    ver->add_option("--variant", ver_variant, "italian or perfect")->check(CLI::IsMember({"italian", "perfect"}));

    // solve
    auto* sol = app.add_subcommand("solve", "Compute the exact (perfect) Italian domination number");
    SolveOptions so;
    auto* graph_opts = sol->add_option_group("graph");
    graph_opts->add_option("--graph", so.graph.graph_path, "Graph JSON file");
    graph_opts->add_option("--sierpinski", so.graph.sierpinski, "n t")->expected(2);
    graph_opts->add_option("--complete", so.graph.complete, "K_n")->check(CLI::PositiveNumber);
    graph_opts->add_option("--path", so.graph.path, "P_m")->check(CLI::PositiveNumber);
    graph_opts->require_option(1);
    sol->add_option("--variant", so.variant, "italian or perfect")->check(CLI::IsMember({"italian", "perfect"}));
    sol->add_option("--engine", so.engine, "auto, exhaustive, path-dp or branch-bound")
        ->check(CLI::IsMember({"auto", "exhaustive", "path-dp", "branch-bound"}));
    sol->add_option("--budget", so.budget, "Branch-and-bound node budget")->check(CLI::PositiveNumber);
    sol->add_option("--cutoff", so.cutoff, "Stop once a witness of at most this weight is found");
    sol->add_flag("--seed-construction", so.seed_construction, "Seed the incumbent with the explicit construction");
    sol->add_flag("--enumerate", so.enumerate, "Also list all optimal functions");
    sol->add_option("--cap", so.cap, "Most optima to list")->check(CLI::PositiveNumber);
    sol->add_option("-o,--output", so.out, "Output path (default stdout)");

    // table
    auto* tab = app.add_subcommand("table", "Closed forms, constructions and solver optima over a grid");
    std::string tab_n = "3..5";
    std::string tab_t = "1..3";
    bool tab_csv = false;
    std::uint64_t tab_budget = SearchConfig{}.node_budget;
    int tab_solve_limit = 27;
    tab->add_option("--n", tab_n, "Range A..B of alphabet sizes");
    tab->add_option("--t", tab_t, "Range A..B of levels");
    tab->add_flag("--csv", tab_csv, "CSV output");
    tab->add_option("--budget", tab_budget, "Node budget per solve")->check(CLI::PositiveNumber);
    tab->add_option("--solve-limit", tab_solve_limit, "Largest vertex count to solve exactly (n >= 3)");

    // export
    auto* exp = app.add_subcommand("export", "Write DOT for a graph, coloured by weight when given");
    std::string exp_graph;
    std::string exp_weights;
    std::string exp_out;
    exp->add_option("graph", exp_graph, "Graph JSON")->required();
    exp->add_option("--weights", exp_weights, "Weight JSON");
    exp->add_option("-o,--output", exp_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen)
            return cmd_gen(gen_nt, gen_complete, gen_path, gen_format, gen_out);
        if (*con)
            return cmd_construct(con_n, con_t, con_out, con_graph_out);
        if (*ver)
            return cmd_verify(ver_graph, ver_weights, ver_variant);
        if (*sol)
            return cmd_solve(so);
        if (*tab)
            return cmd_table(tab_n, tab_t, tab_csv, tab_budget, tab_solve_limit);
        if (*exp)
            return cmd_export(exp_graph, exp_weights, exp_out);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_fail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
