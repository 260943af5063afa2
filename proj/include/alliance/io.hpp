#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "alliance/alliance.hpp"
#include "alliance/exact.hpp"
#include "alliance/graph.hpp"
#include "alliance/reductions.hpp"
#include "alliance/tree_dp.hpp"
#include "alliance/type_partition.hpp"
#include "alliance/weighted.hpp"

namespace alliance {

using json = nlohmann::json;

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// "3,0,7" -> {0,3,7}. Whitespace around entries is ignored; an empty string
/// gives the empty set.
inline VertexSet parse_vertex_list(std::string_view text) {
    std::vector<Vertex> out;
    text = detail::trim(text);
    if (text.empty()) return {};
    while (true) {
        auto comma = text.find(',');
        auto item = detail::trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0)
            throw std::invalid_argument("bad vertex '" + std::string(item) + "' in list");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return VertexSet(std::move(out));
}

inline json to_json(const VertexSet &s) { return json(s.members()); }

inline json to_json(const ProtectionReport &r) {
    json per = json::array();
    for (auto [v, st] : r.status) per.push_back({{"vertex", v}, {"status", to_string(st)}});
    return {{"protection", per}, {"connected", r.connected}, {"alliance", r.is_alliance}};
}

/// Result of a solver run. `method` names how minimality of the witness was
/// established: "enumeration" or "marginal-certificate".
struct ResultRecord {
    std::string status = "none";  ///< found | none | error
    std::optional<VertexSet> witness;
    std::optional<ProtectionReport> certificate;
    std::string method;
    double time_ms = 0;
    std::optional<std::vector<int>> class_counts;
    std::string message;

    json to_json() const {
        json j{{"status", status}, {"time_ms", time_ms}};
        if (witness) {
            j["size"] = witness->size();
            j["witness"] = alliance::to_json(*witness);
        } else {
            j["size"] = 0;
            j["witness"] = json::array();
        }
        if (certificate) {
            j["certificate"] = alliance::to_json(*certificate);
            j["certificate"]["minimality"] = method;
        }
        if (class_counts) j["class_counts"] = *class_counts;
        if (!message.empty()) j["message"] = message;
        return j;
    }
};

/// Builds the record for a solve result, attaching the protection report.
inline ResultRecord make_record(const Graph &g, const SolveResult &r, std::string method, double time_ms) {
    ResultRecord rec;
    rec.time_ms = time_ms;
    if (!r.found) return rec;
    rec.status = "found";
    rec.witness = r.witness;
    rec.certificate = protection_report(g, r.witness);
    rec.method = std::move(method);
    return rec;
}

inline json partition_to_json(const TypePartition &p, const TypeGraph &tg) {
    json classes = json::array();
    for (std::size_t i = 0; i < p.count(); ++i)
        classes.push_back({{"members", p.classes[i]}, {"kind", to_string(p.kinds[i])}});
    json edges = json::array();
    for (auto [a, b] : tg.edges()) edges.push_back({a, b});
    return {{"nd", p.count()}, {"classes", classes}, {"type_graph_edges", edges}};
}

inline json dp_to_json(const RootedTree &t, const DPTable &dp) {
    auto score = [](Score s) { return s.finite() ? json(s.value()) : json("-inf"); };
    json rows = json::array();
    for (Vertex v : t.order)
        rows.push_back({{"vertex", v},
                        {"0", score(dp.out[v])},
                        {"1c", score(dp.in_children[v])},
                        {"1p", score(dp.in_parent[v])}});
    return {{"root", t.root}, {"rows", rows}};
}

inline json edges_to_json(const Graph &g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

/// {"n", "edges", "necessary", "forbidden", "k", "roles"}.
inline json to_json(const AnnotatedInstance &inst) {
    return {{"n", inst.graph.order()},
            {"edges", edges_to_json(inst.graph)},
            {"necessary", inst.necessary.members()},
            {"forbidden", inst.forbidden.members()},
            {"k", inst.k},
            {"roles", inst.roles}};
}

inline json to_json(const RootedInstance &inst) {
    return {{"n", inst.graph.order()},
            {"edges", edges_to_json(inst.graph)},
            {"root", inst.root},
            {"k", inst.k},
            {"roles", inst.roles}};
}

/// Accepts the annotated instance format; "weights" is ignored when present
/// and missing annotation fields default to empty.
inline AnnotatedInstance annotated_from_json(const json &j) {
    try {
        AnnotatedInstance inst;
        int n = j.at("n").get<int>();
        if (n < 0) throw std::invalid_argument("negative vertex count");
        auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
        inst.graph = Graph::from_edges(n, edges);
        inst.necessary = VertexSet(j.value("necessary", std::vector<Vertex>{}));
        inst.forbidden = VertexSet(j.value("forbidden", std::vector<Vertex>{}));
        inst.k = j.value("k", 0LL);
        inst.roles = j.value("roles", RoleTable{});
        require_members_of(inst.graph, inst.necessary);
        require_members_of(inst.graph, inst.forbidden);
        return inst;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
    }
}

inline bool operator==(const AnnotatedInstance &a, const AnnotatedInstance &b) {
    return a.graph == b.graph && a.necessary == b.necessary && a.forbidden == b.forbidden && a.k == b.k &&
           a.roles == b.roles;
}

}  // namespace alliance
