#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cmenger/io.hpp"
#include "cmenger/shrink.hpp"
#include "cmenger/solver.hpp"
#include "cmenger/testbed.hpp"
#include "cmenger/tree.hpp"

using namespace cmenger;
using nlohmann::json;

namespace {

constexpr int kExitFarPaths = 0;
constexpr int kExitSeparator = 10;
constexpr int kExitWitness = 20;
constexpr int kExitError = 1;
constexpr int kExitAbsent = 3;

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

void print_witness(const SubdivisionWitness& w) {
    std::cout << "branch map: " << join(w.branch_map) << "\n";
    for (std::size_t i = 0; i < w.edge_paths.size(); ++i)
        std::cout << "edge " << binary_tree_parent(static_cast<int>(i) + 1) << "-" << i + 1 << ": "
                  << join(w.edge_paths[i]) << "\n";
}

int exit_for(const Certificate& cert) {
    switch (cert.index()) {
        case 0: return kExitFarPaths;
        case 1: return kExitSeparator;
        default: return kExitWitness;
    }
}

int cmd_gen(const std::string& kind, const std::vector<int>& params, std::uint64_t seed, const std::string& out) {
    Instance inst = kind == "worked_example" ? gen_worked_example() : gen_family(family_from_name(kind), params, seed);
    std::string text = serialize_instance(inst);
    if (out.empty() || out == "-") std::cout << text;
    else write_text_file(out, text);
    return 0;
}

int cmd_solve(const std::string& path, std::optional<int> k, std::optional<std::int64_t> c, std::optional<int> d,
              bool emit_json) {
    Instance inst = read_instance_file(path);
    int kk = k.value_or(inst.k), dd = d.value_or(inst.d);
    std::int64_t cc = c.value_or(inst.c);
    SolveReport rep = solve(inst.graph, inst.s, inst.t, kk, cc, dd);
    Verdict v = verify_certificate(inst.graph, inst.s, inst.t, kk, cc, dd, rep.table, rep.certificate);
    if (emit_json) {
        json j;
        j["certificate"] = certificate_to_json(rep.certificate);
        j["constants"] = table_to_json(rep.table);
        j["verified"] = v.ok;
        if (!v.ok) j["verification_error"] = v.reason;
        j["trace"] = rep.trace;
        std::cout << dump_canonical(j);
    } else {
        std::cout << "certificate: " << certificate_kind(rep.certificate) << "\n";
        if (auto* fp = std::get_if<FarPaths>(&rep.certificate)) {
            for (std::size_t i = 0; i < fp->parts.size(); ++i) std::cout << "part " << i << ": " << join(fp->parts[i]) << "\n";
        } else if (auto* sep = std::get_if<Separator>(&rep.certificate)) {
            std::cout << "centers: " << join(sep->x) << "\nradius: " << sep->radius << "\n";
        } else {
            print_witness(std::get<SubdivisionWitness>(rep.certificate));
        }
        std::cout << "constants: " << table_to_json(rep.table).dump() << "\n";
        for (const auto& line : rep.trace) std::cout << "step: " << line << "\n";
        std::cout << "verified: " << (v.ok ? "yes" : "no (" + v.reason + ")") << "\n";
    }
    return v.ok ? exit_for(rep.certificate) : kExitError;
}

int cmd_oracle(const std::string& path, const std::string& mode, int count, int dist_value, bool force, bool emit_json) {
    Instance inst = read_instance_file(path);
    json j;
    j["mode"] = mode;
    int code;
    if (mode == "paths") {
        auto found = oracle_far_paths(inst.graph, inst.s, inst.t, count, dist_value, force);
        j["found"] = found.has_value();
        if (found) j["paths"] = *found;
        code = found ? kExitFarPaths : kExitAbsent;
    } else if (mode == "separator") {
        auto found = oracle_separator(inst.graph, inst.s, inst.t, count, dist_value, force);
        j["found"] = found.has_value();
        if (found) j["centers"] = *found;
        code = found ? kExitSeparator : kExitAbsent;
    } else {
        throw input_error("mode must be 'paths' or 'separator'");
    }
    if (emit_json) {
        std::cout << dump_canonical(j);
    } else {
        std::cout << (j["found"].get<bool>() ? "found" : "absent") << "\n";
        if (j.contains("paths"))
            for (const auto& p : j["paths"]) std::cout << "path: " << join(p.get<std::vector<int>>()) << "\n";
        if (j.contains("centers")) std::cout << "centers: " << join(j["centers"].get<std::vector<int>>()) << "\n";
    }
    return code;
}

int cmd_check_subdivision(const std::string& path, int d, int l, bool emit_json) {
    Instance inst = read_instance_file(path);
    auto w = contains_subdivision(inst.graph, d, l);
    if (emit_json) {
        json j{{"found", w.has_value()}};
        if (w) j["witness"] = witness_to_json(*w);
        std::cout << dump_canonical(j);
    } else if (w) {
        std::cout << "found\n";
        print_witness(*w);
    } else {
        std::cout << "absent\n";
    }
    return w ? kExitWitness : 0;
}

int cmd_pathwidth(const std::string& path, bool emit_json) {
    Instance inst = read_instance_file(path);
    int pw = pathwidth_exact(inst.graph);
    if (emit_json) std::cout << dump_canonical(json{{"pathwidth", pw}, {"n", inst.graph.vertex_count()}});
    else std::cout << "pathwidth: " << pw << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coarse Menger certificates: far path families, ball separators, binary-tree subdivisions"};
    app.require_subcommand(1);
    int code = 0;

    auto* gen = app.add_subcommand("gen", "Write a generated instance file");
    std::string gen_kind, gen_out;
    std::vector<int> gen_params;
    std::uint64_t gen_seed = 1;
    gen->add_option("kind", gen_kind, "worked_example, binary_tree, subdivided_tree, grid, caterpillar, random_bounded_pw")
        ->required();
    gen->add_option("params", gen_params, "Integer parameters of the family");
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("-o,--out", gen_out, "Output path (stdout when omitted)");
    gen->callback([&] { code = cmd_gen(gen_kind, gen_params, gen_seed, gen_out); });

    auto* sol = app.add_subcommand("solve", "Compute and verify a certificate");
    std::string sol_path;
    std::optional<int> sol_k, sol_d;
    std::optional<std::int64_t> sol_c;
    bool sol_json = false;
    sol->add_option("instance", sol_path)->required();
    sol->add_option("-k", sol_k, "Number of paths minus one (defaults to the file)");
    sol->add_option("-c", sol_c, "Distance parameter (defaults to the file)");
    sol->add_option("-d", sol_d, "Binary tree depth (defaults to the file)");
    sol->add_flag("--emit-json", sol_json);
    sol->callback([&] { code = cmd_solve(sol_path, sol_k, sol_c, sol_d, sol_json); });

    auto* ora = app.add_subcommand("oracle", "Exhaustive search for far paths or a ball separator");
    std::string ora_path, ora_mode = "paths";
    int ora_count = 2, ora_dist = 0;
    bool ora_force = false, ora_json = false;
    ora->add_option("instance", ora_path)->required();
    ora->add_option("--mode", ora_mode)->check(CLI::IsMember({"paths", "separator"}));
    ora->add_option("-m,-k,--count", ora_count, "Paths wanted (paths) or centers allowed (separator)");
    ora->add_option("-c,-r,--distance", ora_dist, "Distance bound (paths) or ball radius (separator)");
    ora->add_flag("--force", ora_force, "Run past the exhaustive caps");
    ora->add_flag("--emit-json", ora_json);
    ora->callback([&] { code = cmd_oracle(ora_path, ora_mode, ora_count, ora_dist, ora_force, ora_json); });

    auto* chk = app.add_subcommand("check-subdivision", "Search for an l-subdivision of H_d");
    std::string chk_path;
    int chk_d = 3, chk_l = 1;
    bool chk_json = false;
    chk->add_option("instance", chk_path)->required();
    chk->add_option("-d", chk_d);
    chk->add_option("-l", chk_l);
    chk->add_flag("--emit-json", chk_json);
    chk->callback([&] { code = cmd_check_subdivision(chk_path, chk_d, chk_l, chk_json); });

    auto* pw = app.add_subcommand("pathwidth", "Exact path-width (small graphs)");
    std::string pw_path;
    bool pw_json = false;
    pw->add_option("instance", pw_path)->required();
    pw->add_flag("--emit-json", pw_json);
    pw->callback([&] { code = cmd_pathwidth(pw_path, pw_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return code;
}
