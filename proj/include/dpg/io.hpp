#ifndef DPG_IO_HPP
#define DPG_IO_HPP

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dpg/dynamics.hpp"
#include "dpg/errors.hpp"
#include "dpg/instance.hpp"
#include "dpg/optimize.hpp"

namespace dpg {

using nlohmann::json;

// Rationals travel as exact "p/q" strings (integers without the "/1"),
// never as decimals.

inline json metric_to_json(const Metric& m) {
    json j;
    switch (m.kind()) {
        case MetricKind::Matrix: {
            j["kind"] = "matrix";
            json rows = json::array();
            for (int i = 0; i < m.size(); ++i) {
                json row = json::array();
                for (int k = 0; k < m.size(); ++k) row.push_back(m.dist(i, k).str());
                rows.push_back(std::move(row));
            }
            j["dist"] = std::move(rows);
            break;
        }
        case MetricKind::Tree: {
            j["kind"] = "tree";
            j["strategies"] = m.size();
            json edges = json::array();
            for (const auto& e : m.tree_edges())
                edges.push_back(json::array({e.u, e.v, e.length.str()}));
            j["edges"] = std::move(edges);
            break;
        }
        case MetricKind::Line: {
            j["kind"] = "line";
            json pos = json::array();
            for (const auto& p : m.line_positions()) pos.push_back(p.str());
            j["positions"] = std::move(pos);
            break;
        }
        case MetricKind::Cycle:
            j["kind"] = "cycle";
            j["size"] = m.cycle_size();
            break;
    }
    return j;
}

inline Metric metric_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "matrix") {
        std::vector<std::vector<Rational>> d;
        for (const auto& row : j.at("dist")) {
            d.emplace_back();
            for (const auto& x : row) d.back().push_back(Rational::parse(x.get<std::string>()));
        }
        return make_metric(d);
    }
    if (kind == "tree") {
        std::vector<TreeEdge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                             Rational::parse(e.at(2).get<std::string>())});
        return tree_metric(j.at("strategies").get<int>(), std::move(edges));
    }
    if (kind == "line") {
        std::vector<Rational> pos;
        for (const auto& p : j.at("positions")) pos.push_back(Rational::parse(p.get<std::string>()));
        return line_metric(pos);
    }
    if (kind == "cycle") return cycle_metric(j.at("size").get<int>());
    throw ValidationError("unknown metric kind '" + kind + "'");
}

inline json edges_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    return edges;
}

inline std::vector<std::pair<int, int>> edges_from_json(const json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return out;
}

inline json instance_to_json(const Instance& inst) {
    json j;
    j["n"] = inst.node_count();
    j["edges"] = edges_to_json(inst.graph());
    j["metric"] = metric_to_json(inst.metric());
    j["preferred"] = inst.preferred();
    j["alpha"] = inst.alpha().str();
    return j;
}

inline Instance instance_from_json(const json& j) {
    return Instance(Graph(j.at("n").get<int>(), edges_from_json(j.at("edges"))),
                    metric_from_json(j.at("metric")),
                    j.at("preferred").get<std::vector<int>>(),
                    Rational::parse(j.at("alpha").get<std::string>()));
}

inline json anchored_to_json(const AnchoredInstance& inst) {
    json j;
    j["n"] = inst.node_count();
    j["edges"] = edges_to_json(inst.graph());
    j["metric"] = metric_to_json(inst.metric());
    json fixed = json::array();
    for (int v : inst.fixed_nodes())
        fixed.push_back(json{{"node", v}, {"preferred", inst.fixed_preference(v)}});
    j["fixed"] = std::move(fixed);
    j["strategic"] = inst.strategic_nodes();
    return j;
}

inline AnchoredInstance anchored_from_json(const json& j) {
    std::vector<std::pair<int, int>> fixed;
    for (const auto& f : j.at("fixed"))
        fixed.push_back({f.at("node").get<int>(), f.at("preferred").get<int>()});
    AnchoredInstance inst(Graph(j.at("n").get<int>(), edges_from_json(j.at("edges"))),
                          metric_from_json(j.at("metric")), std::move(fixed));
    if (j.contains("strategic")) {
        const auto declared = j.at("strategic").get<std::vector<int>>();
        if (declared != inst.strategic_nodes())
            throw ValidationError("strategic node list does not match the fixed/strategic partition");
    }
    return inst;
}

// Either a discrete or an anchored instance, depending on the file.
struct LoadedInstance {
    std::optional<Instance> discrete;
    std::optional<AnchoredInstance> anchored;
};

inline LoadedInstance instance_from_json_any(const json& j) {
    LoadedInstance out;
    if (j.contains("fixed"))
        out.anchored = anchored_from_json(j);
    else
        out.discrete = instance_from_json(j);
    return out;
}

inline json trace_to_json(const Trace& t) {
    json j;
    j["start"] = t.start;
    json moves = json::array();
    for (const Move& m : t.moves)
        moves.push_back(json{{"player", m.player},
                             {"from", m.from},
                             {"to", m.to},
                             {"cost_delta", m.cost_delta.str()},
                             {"phi_after", m.phi_after.str()}});
    j["moves"] = std::move(moves);
    j["end"] = t.end;
    return j;
}

inline json report_to_json(const AnalysisReport& r) {
    json j;
    j["opt_cost"] = r.opt_cost.str();
    j["opt_vector"] = r.opt_vector;
    j["best_eq_cost"] = r.best_eq_cost.str();
    j["worst_eq_cost"] = r.worst_eq_cost.str();
    j["best_eq_vector"] = r.best_eq_vector;
    j["pos"] = r.pos.str();
    j["poa"] = r.poa ? json(r.poa->str()) : json("inf");
    j["num_optima"] = r.num_optima;
    j["num_equilibria"] = r.num_equilibria;
    return j;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

inline LoadedInstance load_instance_file(const std::string& path) {
    try {
        return instance_from_json_any(read_json_file(path));
    } catch (const json::exception& e) {
        throw ValidationError("bad instance file '" + path + "': " + e.what());
    }
}

} // namespace dpg

#endif // DPG_IO_HPP
