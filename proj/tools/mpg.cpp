// mpg: command-line front end for the mean-payoff / energy-game toolkit.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 internal failure, 3 verify failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "mpg/arena.hpp"
#include "mpg/io.hpp"
#include "mpg/lattice.hpp"
#include "mpg/oracle.hpp"
#include "mpg/ttpg.hpp"
#include "mpg/values.hpp"
#include "mpg/verify.hpp"

namespace {

using namespace mpg;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInternal = 2;
constexpr int kVerifyFailed = 3;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void setup_logging()
{
    auto logger = spdlog::stderr_logger_mt("mpg");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    const char* env = std::getenv("MPG_LOG");
    const std::string level = env != nullptr ? env : "";
    if (level == "quiet")
        spdlog::set_level(spdlog::level::off);
    else if (level == "info")
        spdlog::set_level(spdlog::level::info);
    else if (level == "debug")
        spdlog::set_level(spdlog::level::debug);
    else
        spdlog::set_level(spdlog::level::warn);
}

bool want_json(const std::string& format)
{
    return format == "json";
}

// --- solve -----------------------------------------------------------------

int cmd_solve(const std::string& file, const std::string& format)
{
    const Arena a = load_arena(file);
    SolveStats stats;
    const ValueAssignment vals = solve_values(a, &stats);
    spdlog::info("solved {} vertices with {} probes", a.num_vertices(), stats.probes);
    const ErgodicPartition part = ergodic_partition(a, vals);
    const std::vector<ClassSolution> classes = solve_classes(part);
    const PositionalStrategy s = synthesize_optimal(a, vals);
    if (!is_optimal(a, vals, s)) throw std::logic_error("synthesized strategy is not optimal");

    if (want_json(format)) {
        Json out = values_to_json(a, vals);
        Json cls = Json::array();
        for (const ClassSolution& c : classes) {
            Json names = Json::array();
            for (VertexId v : c.vertices) names.push_back(a.name(v));
            cls.push_back(Json{{"nu", rational_to_json(c.nu)},
                               {"vertices", std::move(names)},
                               {"least_sepm", energy_to_json(c.reweighted, c.least_sepm)}});
        }
        out["classes"] = std::move(cls);
        out["strategy"] = strategy_to_json(a, s);
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    std::cout << "values:\n";
    for (VertexId v = 0; v < a.num_vertices(); ++v) std::cout << "  " << a.name(v) << ' ' << vals[v] << '\n';
    for (const ClassSolution& c : classes) {
        std::cout << "class " << c.nu << " (scale " << c.reweighted.scale() << "): "
                  << energy_to_text(c.reweighted, c.least_sepm) << '\n';
    }
    std::cout << "strategy: " << strategy_to_text(a, s) << '\n';
    return kOk;
}

// --- enum ------------------------------------------------------------------

int cmd_enum(const std::string& file, std::size_t list, const std::string& format)
{
    const Arena a = load_arena(file);
    const ValueAssignment vals = solve_values(a);
    const ErgodicPartition part = ergodic_partition(a, vals);
    const bool json = want_json(format);
    DecomposeOptions dopts;
    dopts.max_listed = list;

    Json classes = Json::array();
    for (const ValueClass& c : part.classes) {
        const Arena& g = c.subgame;
        EnumerationObserver obs;
        if (!json) {
            std::cout << "class " << c.nu << " (" << g.num_vertices() << " vertices)\n";
            obs.on_sepm = [&](std::size_t id, const EnergyFunction& f) {
                std::cout << "sepm " << id << ": " << energy_to_text(g, f) << std::endl;
            };
            obs.on_subgame = [&](const BasicSubgame& b) {
                std::cout << "subgame " << b.id << ": sepm " << b.sepm_id << ", removed";
                if (b.removed_arcs.empty()) std::cout << " none";
                for (ArcId e : b.removed_arcs) {
                    const Arc& arc = g.arc(e);
                    std::cout << ' ' << g.name(arc.src) << "->" << g.name(arc.dst);
                }
                std::cout << std::endl;
            };
        }
        const EnumerationResult r = enumerate(g, c.nu, json ? nullptr : &obs);
        spdlog::info("class {}: {} least-SEPM runs, {} pruned children", c.nu.str(), r.sepm_computations,
                     r.pruned_children);
        const std::vector<DeltaBlock> blocks = decompose(g, c.nu, r.energy, dopts);

        if (json) {
            classes.push_back(enum_report_json(g, r, blocks));
            continue;
        }
        for (const DeltaBlock& b : blocks) {
            std::cout << "delta " << b.sepm_id << ": " << b.count << " strateg" << (b.count == 1 ? "y" : "ies") << '\n';
            for (const PositionalStrategy& s : b.strategies) std::cout << "  " << strategy_to_text(g, s) << '\n';
            if (b.count > b.strategies.size()) std::cout << "  ... " << b.count - b.strategies.size() << " more\n";
        }
        std::cout << "summary: " << r.energy.elements.size() << " extremal SEPMs, " << r.subgames.nodes.size()
                  << " basic subgames\n";
        if (r.degenerate()) std::cout << "degenerate: |B*| > |X*|\n";
    }
    if (json) std::cout << Json{{"classes", std::move(classes)}}.dump(2) << '\n';
    return kOk;
}

// --- ttpg ------------------------------------------------------------------

int cmd_ttpg(const std::string& file, std::optional<std::size_t> k, const std::string& variant, bool fixpoint,
             bool by_value, const std::string& format)
{
    if (variant != "plain" && variant != "min") throw UsageError("--variant must be plain or min");
    if (fixpoint && variant != "min") throw UsageError("--fixpoint needs --variant min");
    if (!fixpoint && !k) throw UsageError("--k is required unless --fixpoint is given");

    Arena a = load_arena(file);
    if (by_value) {
        const ValueAssignment vals = solve_values(a);
        for (const Rational& x : vals) {
            if (x != vals.front()) throw UsageError("--reweight-by-value needs an arena where every vertex has the same value");
        }
        a = reweight(a, vals.front());
        spdlog::info("reweighted by {} (scale {})", vals.front().str(), a.scale());
    }
    const bool json = want_json(format);
    const TtpgKind kind = variant == "plain" ? TtpgKind::Plain : TtpgKind::Min;

    Json out = Json::object();
    if (fixpoint) {
        const TtpgFixpoint fp = min_ttpg_fixpoint(a);
        const bool agrees = fp.f == least_sepm(a);
        if (json) {
            out["fixpoint"] = Json{{"k_reached", fp.k_reached},
                                   {"k_bound", fp.k_bound},
                                   {"agrees_with_least_sepm", agrees},
                                   {"energy", energy_to_json(a, fp.f)}};
        } else {
            std::cout << "k_reached: " << fp.k_reached << '\n'
                      << "k_bound: " << fp.k_bound << '\n'
                      << "agrees_with_least_sepm: " << (agrees ? "yes" : "no") << '\n'
                      << "f: " << energy_to_text(a, fp.f) << '\n';
        }
        if (!agrees) throw std::logic_error("Min-k-TTPG fixpoint differs from the least SEPM");
    }
    if (k) {
        const TruncatedValueTable t = kind == TtpgKind::Plain ? plain_ttpg(a, *k) : min_ttpg(a, *k);
        if (json)
            out["table"] = ttpg_table_json(a, t);
        else
            std::cout << ttpg_table_tsv(a, t);
    }
    if (json) std::cout << out.dump(2) << '\n';
    return kOk;
}

// --- verify ----------------------------------------------------------------

struct RandomSpec
{
    std::size_t n = 0, max_out = 0;
    Weight w = 0;
    std::uint64_t seed = 0, count = 0;
};

int cmd_verify(const std::optional<std::string>& file, const std::vector<std::string>& random_args,
               const VerifyOptions& opts, const std::string& reproducer, const std::string& format)
{
    std::vector<Arena> arenas;
    std::vector<std::string> labels;
    if (file) {
        arenas.push_back(load_arena(*file));
        labels.push_back(*file);
    }
    if (!random_args.empty()) {
        if (random_args.size() != 5) throw UsageError("--random takes: n max_out w_max seed count");
        RandomSpec r;
        try {
            r.n = std::stoull(random_args[0]);
            r.max_out = std::stoull(random_args[1]);
            r.w = std::stoll(random_args[2]);
            r.seed = std::stoull(random_args[3]);
            r.count = std::stoull(random_args[4]);
        } catch (const std::exception&) {
            throw UsageError("--random arguments must be integers");
        }
        for (std::uint64_t i = 0; i < r.count; ++i) {
            arenas.push_back(oracle::gen_random_arena(r.n, r.max_out, r.w, r.seed + i));
            labels.push_back("random(" + random_args[0] + "," + random_args[1] + "," + random_args[2] + "," +
                             std::to_string(r.seed + i) + ")");
        }
    }
    if (arenas.empty()) throw UsageError("verify needs a file or --random");

    const std::vector<VerifyReport> reports = verify_many(arenas, opts);
    std::size_t failed = 0;
    std::optional<std::size_t> first_bad;
    Json items = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const VerifyReport& rep = reports[i];
        if (!rep.ok()) {
            ++failed;
            if (!first_bad) first_bad = i;
        }
        if (want_json(format)) {
            Json checks = Json::object();
            for (const CheckResult& c : rep.checks) checks[c.name] = Json{{"ok", c.ok}, {"detail", c.detail}};
            items.push_back(Json{{"arena", labels[i]},
                                 {"ok", rep.ok()},
                                 {"classes", rep.classes},
                                 {"recursion_edges", rep.recursion_edges},
                                 {"degenerate", rep.degenerate},
                                 {"checks", std::move(checks)}});
            continue;
        }
        std::cout << labels[i] << ": " << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.classes << " classes, "
                  << rep.recursion_edges << " recursion edges" << (rep.degenerate ? ", degenerate: |B*| > |X*|" : "")
                  << ")\n";
        for (const CheckResult& c : rep.checks) {
            if (!c.ok) std::cout << "  " << c.name << ": " << c.detail << '\n';
        }
    }
    if (first_bad) {
        std::ofstream os(reproducer);
        os << serialize_arena(arenas[*first_bad]);
        spdlog::warn("wrote reproducer for {} to {}", labels[*first_bad], reproducer);
    }
    if (want_json(format))
        std::cout << Json{{"ok", failed == 0}, {"arenas", std::move(items)}}.dump(2) << '\n';
    else
        std::cout << "verify: " << reports.size() << " arenas, " << failed << " failed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_dot(const std::string& file)
{
    std::cout << arena_to_dot(load_arena(file));
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"Mean payoff games: values, energy lattices, truncated games"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string file;
    auto* solve = app.add_subcommand("solve", "Values, per-class least SEPMs and an optimal strategy");
    solve->add_option("file", file, "Arena file")->required();
    add_format(solve);

    std::size_t list = 16;
    auto* en = app.add_subcommand("enum", "Extremal SEPMs, basic subgames and the optimal-strategy decomposition");
    en->add_option("file", file, "Arena file")->required();
    en->add_option("--list-strategies", list, "Strategies listed per block (counts are always exact)");
    add_format(en);

    std::optional<std::size_t> k;
    std::string variant = "plain";
    bool fixpoint = false, by_value = false;
    auto* tt = app.add_subcommand("ttpg", "Truncated total-payoff tables");
    tt->add_option("file", file, "Arena file")->required();
    tt->add_option("--k", k, "Horizon");
    tt->add_option("--variant", variant, "plain or min");
    tt->add_flag("--fixpoint", fixpoint, "Iterate the Min variant to agreement with the least SEPM");
    tt->add_flag("--reweight-by-value", by_value, "Reweight a single-valued arena by its value first");
    add_format(tt);

    std::optional<std::string> vfile;
    std::vector<std::string> random_args;
    VerifyOptions vopts;
    std::string reproducer = "mpg-reproducer.arena";
    auto* ver = app.add_subcommand("verify", "Differential checks against the brute-force oracle");
    ver->add_option("file", vfile, "Arena file");
    ver->add_option("--random", random_args, "n max_out w_max seed count")->expected(5);
    ver->add_option("--max-strategies", vopts.max_strategies, "Bound on Player-0 positional strategies");
    ver->add_option("--jobs", vopts.jobs, "Worker threads");
    ver->add_option("--reproducer", reproducer, "Where to write the first failing arena");
    add_format(ver);

    auto* dot = app.add_subcommand("dot", "Graphviz rendering");
    dot->add_option("file", file, "Arena file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(file, format);
        if (*en) return cmd_enum(file, list, format);
        if (*tt) return cmd_ttpg(file, k, variant, fixpoint, by_value, format);
        if (*ver) return cmd_verify(vfile, random_args, vopts, reproducer, format);
        if (*dot) return cmd_dot(file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const oracle::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        // invalid_argument derives from logic_error but signals bad input.
        if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
            std::cerr << "error: " << e.what() << '\n';
            return kUsage;
        }
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
