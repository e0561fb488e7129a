// Command-line front end: generate instances, analyze them, run best-response
// dynamics, and sweep the closed-form price-of-stability curves to CSV.
//
// Exit codes: 0 success, 2 usage or validation problem, 3 search budget
// exceeded, 4 theorem violation (a claim the engine relies on failed on
// concrete data — that is a bug report, not an input problem).

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "dpg/dpg.hpp"

namespace {

using dpg::Rational;

struct GenOptions {
    std::string id;
    std::string out;
    std::string in;
    std::string alpha;
    std::string eps;
    long long n = -1;
    long long k = -1;
    long long clique_size = -1;
};

struct AnalyzeOptions {
    std::string file;
    std::string out;
    long long budget = dpg::kDefaultSearchBudget;
};

struct DynamicsOptions {
    std::string file;
    std::string out;
    std::string start = "preferred";
    std::string schedule = "two-phase";
    long long seed = 0;
    long long budget = dpg::kDefaultSearchBudget;
};

struct SweepOptions {
    std::string curve;
    std::string out;
    std::string alphas;
    std::string alpha_start, alpha_end, alpha_step;
    std::string eps = "1/1000";
};

int run_gen(const GenOptions& opt) {
    dpg::json j;
    std::string summary;
    const dpg::ConstructionId id = dpg::construction_id_from_string(opt.id);

    if (id == dpg::ConstructionId::AnchoredFromDiscrete) {
        if (opt.in.empty())
            throw dpg::ValidationError("anchored_from_discrete needs --in <instance file>");
        auto loaded = dpg::load_instance_file(opt.in);
        if (!loaded.discrete)
            throw dpg::ValidationError("anchored_from_discrete expects a discrete instance");
        dpg::AnchoredInstance image = dpg::discrete_to_anchored(*loaded.discrete);
        j = dpg::anchored_to_json(image);
        summary = "anchored instance, n=" + std::to_string(image.node_count());
    } else {
        dpg::NamedConstruction c{id, {}};
        if (!opt.alpha.empty()) c.params["alpha"] = Rational::parse(opt.alpha);
        if (!opt.eps.empty()) c.params["eps"] = Rational::parse(opt.eps);
        if (opt.n >= 0) c.params["n"] = Rational(opt.n);
        if (opt.k >= 0) c.params["k"] = Rational(opt.k);
        if (opt.clique_size >= 0) c.params["clique_size"] = Rational(opt.clique_size);
        dpg::BuiltConstruction built = dpg::build_construction(c);
        if (!built.instance.empty()) {
            j = dpg::instance_to_json(built.instance.front());
            summary = "instance, n=" + std::to_string(built.instance.front().node_count()) +
                      ", strategies=" + std::to_string(built.instance.front().strategy_count());
        } else {
            j = dpg::anchored_to_json(built.anchored.front());
            summary = "anchored instance, n=" + std::to_string(built.anchored.front().node_count());
        }
    }

    dpg::write_json_file(opt.out, j);
    std::cout << "wrote " << opt.out << " (" << summary << ")\n";
    return 0;
}

void print_report(const dpg::AnalysisReport& r) {
    std::cout << "opt_cost: " << r.opt_cost << "\n"
              << "best_eq_cost: " << r.best_eq_cost << "\n"
              << "worst_eq_cost: " << r.worst_eq_cost << "\n"
              << "pos: " << r.pos << "\n"
              << "poa: " << (r.poa ? r.poa->str() : std::string("inf")) << "\n"
              << "num_optima: " << r.num_optima << "\n"
              << "num_equilibria: " << r.num_equilibria << "\n";
}

int run_analyze(const AnalyzeOptions& opt) {
    auto loaded = dpg::load_instance_file(opt.file);
    dpg::AnalysisReport report = loaded.discrete ? dpg::analyze(*loaded.discrete, opt.budget)
                                                 : dpg::anchored_analyze(*loaded.anchored, opt.budget);
    print_report(report);
    if (!opt.out.empty()) dpg::write_json_file(opt.out, dpg::report_to_json(report));
    return 0;
}

dpg::StrategyVector parse_start(const dpg::Instance& inst, const DynamicsOptions& opt) {
    if (opt.start == "preferred") return inst.preferred_vector();
    if (opt.start == "optimum") return dpg::potential_min_optimum(inst, opt.budget);
    if (opt.start == "random") {
        std::mt19937_64 gen(static_cast<uint64_t>(opt.seed));
        dpg::StrategyVector z(inst.node_count());
        for (int& s : z) s = static_cast<int>(gen() % inst.strategy_count());
        return z;
    }
    // comma-separated strategy indices
    dpg::StrategyVector z;
    std::stringstream ss(opt.start);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            z.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw dpg::ValidationError("bad start vector entry '" + tok + "'");
        }
    }
    inst.check_vector(z);
    return z;
}

int run_dynamics(const DynamicsOptions& opt) {
    auto loaded = dpg::load_instance_file(opt.file);
    if (!loaded.discrete)
        throw dpg::ValidationError("dynamics run on discrete instances only");
    const dpg::Instance& inst = *loaded.discrete;
    const dpg::StrategyVector z0 = parse_start(inst, opt);

    dpg::Trace trace;
    if (opt.schedule == "two-phase") {
        trace = dpg::two_phase_schedule(inst, z0);
    } else if (opt.schedule == "first") {
        trace = dpg::potential_descent(inst, z0, dpg::MovePicker::FirstImproving);
    } else if (opt.schedule == "best") {
        trace = dpg::potential_descent(inst, z0, dpg::MovePicker::BestImproving);
    } else if (opt.schedule == "coherent") {
        trace = dpg::potential_descent(inst, z0, dpg::MovePicker::CoherentTree);
    } else {
        throw dpg::ValidationError("unknown schedule '" + opt.schedule + "'");
    }

    const dpg::json j = dpg::trace_to_json(trace);
    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        dpg::write_json_file(opt.out, j);
        std::cout << "wrote " << opt.out << " (moves: " << trace.moves.size()
                  << ", end cost: " << dpg::social_cost(inst, trace.end) << ")\n";
    }
    return 0;
}

std::vector<Rational> sweep_alphas(const SweepOptions& opt) {
    std::vector<Rational> alphas;
    if (!opt.alphas.empty()) {
        std::stringstream ss(opt.alphas);
        std::string tok;
        while (std::getline(ss, tok, ',')) alphas.push_back(Rational::parse(tok));
    } else {
        if (opt.alpha_start.empty() || opt.alpha_end.empty() || opt.alpha_step.empty())
            throw dpg::ValidationError("sweep needs --alphas or --alpha-start/end/step");
        Rational a = Rational::parse(opt.alpha_start);
        const Rational end = Rational::parse(opt.alpha_end);
        const Rational step = Rational::parse(opt.alpha_step);
        if (!(step > Rational(0))) throw dpg::ValidationError("--alpha-step must be positive");
        for (; a <= end; a += step) alphas.push_back(a);
    }
    if (alphas.empty()) throw dpg::ValidationError("empty alpha list");
    for (const Rational& a : alphas)
        if (a < Rational(0) || a > Rational(1))
            throw dpg::ValidationError("alpha " + a.str() + " outside [0,1]");
    std::sort(alphas.begin(), alphas.end());
    return alphas;
}

int run_sweep(const SweepOptions& opt) {
    const std::vector<Rational> alphas = sweep_alphas(opt);
    const Rational eps = Rational::parse(opt.eps);

    std::ostringstream csv;
    csv << "alpha,alpha_decimal,value,curve_id\n";
    for (const Rational& a : alphas) {
        Rational value;
        if (opt.curve == "pos_upper_two") {
            value = dpg::pos_upper_bound_two(a);
        } else if (opt.curve == "path_lower") {
            value = dpg::lower_bound_curve(a, eps).ratio;
        } else if (opt.curve == "single_dev_lower") {
            if (a > Rational(1, 2))
                throw dpg::OutOfRange("single-deviation curve is defined for alpha <= 1/2");
            value = Rational(2) / (Rational(2) - a);
        } else {
            throw dpg::ValidationError("unknown curve '" + opt.curve + "'");
        }
        csv << a << "," << dpg::decimal_string(a) << "," << value << "," << opt.curve << "\n";
    }

    if (opt.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out);
        if (!out) throw dpg::ValidationError("cannot write '" + opt.out + "'");
        out << csv.str();
        std::cout << "wrote " << opt.out << " (" << alphas.size() << " rows)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete preference games: exact costs, equilibria and PoS curves"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named instance family");
    cmd_gen->add_option("--id", gen.id, "construction id")->required();
    cmd_gen->add_option("--out", gen.out, "output instance file")->required();
    cmd_gen->add_option("--in", gen.in, "source instance (anchored_from_discrete)");
    cmd_gen->add_option("--alpha", gen.alpha, "alpha as p/q");
    cmd_gen->add_option("--eps", gen.eps, "epsilon as p/q");
    cmd_gen->add_option("--n", gen.n, "path length parameter");
    cmd_gen->add_option("--k", gen.k, "family size parameter");
    cmd_gen->add_option("--clique-size", gen.clique_size, "override the faithful clique size");

    AnalyzeOptions an;
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "exact optimum/equilibria report");
    cmd_analyze->add_option("file", an.file, "instance file")->required();
    cmd_analyze->add_option("--out", an.out, "write the report JSON here");
    cmd_analyze->add_option("--budget", an.budget, "search budget (|L|^n limit)");

    DynamicsOptions dyn;
    CLI::App* cmd_dynamics = app.add_subcommand("dynamics", "run best-response dynamics");
    cmd_dynamics->add_option("file", dyn.file, "instance file")->required();
    cmd_dynamics->add_option("--start", dyn.start, "preferred|optimum|random|comma list");
    cmd_dynamics->add_option("--schedule", dyn.schedule, "two-phase|first|best|coherent");
    cmd_dynamics->add_option("--seed", dyn.seed, "seed for --start random");
    cmd_dynamics->add_option("--budget", dyn.budget, "search budget for --start optimum");
    cmd_dynamics->add_option("--out", dyn.out, "write the trace JSON here");

    SweepOptions sw;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "evaluate a PoS curve over alphas to CSV");
    cmd_sweep->add_option("--curve", sw.curve, "pos_upper_two|path_lower|single_dev_lower")
        ->required();
    cmd_sweep->add_option("--alphas", sw.alphas, "comma-separated alphas (p/q)");
    cmd_sweep->add_option("--alpha-start", sw.alpha_start, "sweep start (p/q)");
    cmd_sweep->add_option("--alpha-end", sw.alpha_end, "sweep end (p/q)");
    cmd_sweep->add_option("--alpha-step", sw.alpha_step, "sweep step (p/q)");
    cmd_sweep->add_option("--eps", sw.eps, "epsilon for path_lower (default 1/1000)");
    cmd_sweep->add_option("--out", sw.out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_analyze->parsed()) return run_analyze(an);
        if (cmd_dynamics->parsed()) return run_dynamics(dyn);
        if (cmd_sweep->parsed()) return run_sweep(sw);
    } catch (const dpg::TheoremViolation& e) {
        std::cerr << "dpg: theorem violation: " << e.what() << "\n";
        return 4;
    } catch (const dpg::SearchTooLarge& e) {
        std::cerr << "dpg: " << e.what() << "\n";
        return 3;
    } catch (const dpg::Error& e) {
        std::cerr << "dpg: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
