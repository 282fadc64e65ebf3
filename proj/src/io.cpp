#include "cmenger/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cmenger {

using nlohmann::json;

json instance_to_json(const Instance& inst) {
    json j;
    j["version"] = kInstanceFormatVersion;
    j["n"] = inst.graph.vertex_count();
    json edges = json::array();
    for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    j["S"] = inst.s;
    j["T"] = inst.t;
    j["params"] = {{"k", inst.k}, {"c", inst.c}, {"d", inst.d}};
    j["label"] = inst.label;
    if (inst.seed) j["seed"] = *inst.seed;
    return j;
}

namespace {

VertexSet read_set(const json& j, const char* key, int n) {
    if (!j.contains(key)) return {};
    const json& a = j.at(key);
    if (!a.is_array()) throw input_error(std::string(key) + " must be an array");
    VertexSet out;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw input_error(std::string(key) + " entries must be integers");
        int v = x.get<int>();
        if (v < 0 || v >= n) throw input_error(std::string(key) + " vertex out of range");
        out.push_back(v);
    }
    return normalize(out);
}

}  // namespace

Instance instance_from_json(const json& j) {
    try {
        if (!j.is_object()) throw input_error("instance must be a JSON object");
        if (j.contains("version") && j.at("version").get<int>() != kInstanceFormatVersion)
            throw input_error("unsupported instance version");
        const int n = j.at("n").get<int>();
        if (n < 0) throw input_error("n must be non-negative");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw input_error("edges must be pairs");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        std::sort(edges.begin(), edges.end());
        Instance inst;
        inst.graph = Graph(n, edges);
        inst.s = read_set(j, "S", n);
        inst.t = read_set(j, "T", n);
        if (j.contains("params")) {
            const json& p = j.at("params");
            inst.k = p.value("k", inst.k);
            inst.c = p.value("c", inst.c);
            inst.d = p.value("d", inst.d);
        }
        inst.label = j.value("label", std::string("instance"));
        if (inst.label.empty()) throw input_error("label must be nonempty");
        if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
        return inst;
    } catch (const json::exception& e) {
        throw input_error(std::string("instance schema: ") + e.what());
    }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string serialize_instance(const Instance& inst) { return dump_canonical(instance_to_json(inst)); }

Instance parse_instance(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw input_error(std::string("JSON parse error: ") + e.what());
        }
        return instance_from_json(j);
    }
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::size_t m = 0;
    std::vector<Edge> edges;
    Instance inst;
    inst.label = "edge-list";
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "S" || head == "T") {
            VertexSet& dst = head == "S" ? inst.s : inst.t;
            int v;
            while (ls >> v) dst.push_back(v);
            continue;
        }
        std::istringstream hs(line);
        long long a, b;
        if (!(hs >> a >> b)) throw input_error("edge list: malformed line '" + line + "'");
        if (n < 0) {
            n = static_cast<int>(a);
            m = static_cast<std::size_t>(b);
        } else {
            edges.emplace_back(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
        }
    }
    if (n < 0) throw input_error("edge list: missing 'n m' header");
    if (edges.size() != m) throw input_error("edge list: header announces a different edge count");
    std::sort(edges.begin(), edges.end());
    inst.graph = Graph(n, edges);
    check_vertices(inst.graph, inst.s);
    check_vertices(inst.graph, inst.t);
    inst.s = normalize(inst.s);
    inst.t = normalize(inst.t);
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << text;
}

json path_to_json(const Path& p) { return json(p); }

json witness_to_json(const SubdivisionWitness& w) {
    json paths = json::array();
    for (const auto& p : w.edge_paths) paths.push_back(path_to_json(p));
    return {{"d", w.d}, {"branch_map", w.branch_map}, {"edge_paths", paths}, {"max_edge_length", w.max_edge_length()}};
}

json table_to_json(const ConstantTable& t) {
    return {{"k", t.k},   {"c", t.c},   {"d", t.d},   {"c_eff", t.c_eff}, {"c1", t.c1}, {"c2", t.c2},
            {"c3", t.c3}, {"c4", t.c4}, {"c5", t.c5}, {"c6", t.c6},       {"c7", t.c7}, {"c8", t.c8},
            {"c9", t.c9}};
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["kind"] = certificate_kind(cert);
    if (auto* fp = std::get_if<FarPaths>(&cert)) {
        j["parts"] = fp->parts;
    } else if (auto* sep = std::get_if<Separator>(&cert)) {
        j["centers"] = sep->x;
        j["radius"] = sep->radius;
    } else {
        j["witness"] = witness_to_json(std::get<SubdivisionWitness>(cert));
    }
    return j;
}

}  // namespace cmenger
