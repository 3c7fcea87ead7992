#include "graphfair/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphfair/envy.hpp"
#include "graphfair/errors.hpp"
#include "graphfair/graph_efx.hpp"
#include "graphfair/hef.hpp"
#include "graphfair/io.hpp"
#include "graphfair/solvers.hpp"
#include "graphfair/sweeping.hpp"

namespace graphfair {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
}

ItemSet parse_hidden_json(const std::string& text, int items) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("hidden set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("hidden") || !j["hidden"].is_array()) {
        throw ParseError("hidden set JSON: expected {\"hidden\": [ids...]}");
    }
    ItemSet s;
    for (const auto& id : j["hidden"]) {
        const int g = id.get<int>();
        if (g < 0 || g >= items) throw ParseError("hidden set JSON: item id out of range");
        s.insert(g);
    }
    return s;
}

std::string hidden_to_json(const ItemSet& s) {
    nlohmann::json j;
    j["hidden"] = std::vector<int>(s.begin(), s.end());
    return j.dump();
}

Graph graph_from_family(const std::string& family, int n) {
    if (family == "path") return make_path(n);
    if (family == "star") return make_star(n);
    if (family == "complete") return make_complete(n);
    throw ParseError("unknown graph family '" + family + "'");
}

KindMix mix_from_string(const std::string& s) {
    if (s == "goods") return KindMix::Goods;
    if (s == "chores") return KindMix::Chores;
    if (s == "mixed") return KindMix::Mixed;
    throw ParseError("unknown mix '" + s + "', expected goods|chores|mixed");
}

void require_partition(const Instance& inst, const Allocation& x) {
    if (!x.is_partition_of(inst.item_count())) throw std::logic_error("solver produced a non-partition");
}

int cmd_solve(const std::string& algorithm, const std::string& input, int center, std::vector<int> cover,
              int component_index, std::uint64_t budget, int max_rounds, bool include_last_edge,
              const std::string& trace_out, std::ostream& out, std::ostream& err) {
    auto [inst, g] = parse_instance_json(read_file(input));

    if (algorithm == "sweep") {
        SweepConfig config;
        config.max_rounds = max_rounds;
        config.include_last_edge_in_reverse = include_last_edge;
        const SweepResult res = sweep(inst, config);
        if (!trace_out.empty()) {
            write_output(trace_out, write_trace_csv({{input, res.trace}}), out);
        }
        if (res.trace.outcome != SweepOutcome::Success) {
            err << (res.trace.outcome == SweepOutcome::Failure ? "sweep stalled with strong envy remaining"
                                                               : "sweep hit the round cap")
                << " after " << res.trace.rounds << " round(s)\n";
            return 1;
        }
        out << write_allocation_json(res.allocation) << "\n";
        return 0;
    }

    if (algorithm == "brute") {
        const auto found = brute_force_efx_search(inst, g, budget);
        if (!found) {
            err << "exhausted every assignment: no allocation avoids strong envy on this graph\n";
            return 1;
        }
        out << write_allocation_json(*found) << "\n";
        return 0;
    }

    if (algorithm == "vcrr") {
        const auto components = connected_components(g);
        if (component_index < 0 || component_index >= static_cast<int>(components.size())) {
            throw BadSize("component index out of range");
        }
        const auto& component = components[static_cast<std::size_t>(component_index)];
        if (cover.empty()) {
            const auto full = min_vertex_cover_exact(g);
            for (int v : full) {
                if (std::binary_search(component.begin(), component.end(), v)) cover.push_back(v);
            }
        }
        const VcrrResult res = vertex_cover_round_robin(inst, g, component, cover);
        nlohmann::json j;
        j["bundles"] = nlohmann::json::array();
        for (const auto& b : res.allocation.bundles) j["bundles"].push_back(std::vector<int>(b.begin(), b.end()));
        j["hidden"] = std::vector<int>(res.hidden.items.begin(), res.hidden.items.end());
        out << j.dump() << "\n";
        return 0;
    }

    Allocation x = Allocation::empty(inst.agent_count());
    if (algorithm == "star") {
        x = star_efx(inst, g, center);
    } else if (algorithm == "thm1") {
        x = core_identical_efx(inst, g, validate_thm1_shape(inst, g));
    } else if (algorithm == "thm2") {
        x = consistent_core_efx(inst, g, validate_thm2_shape(inst, g));
    } else if (algorithm == "thm3") {
        x = two_type_core_efx(inst, g, validate_thm3_shape(inst, g));
    } else if (algorithm == "p4") {
        x = three_edge_path_efx(inst, g);
    } else if (algorithm == "chores1") {
        x = core_identical_efx_chores(inst, g, validate_thm1_shape(inst, g));
    } else if (algorithm == "chores2") {
        x = consistent_core_efx_chores(inst, g, validate_thm2_shape(inst, g));
    } else if (algorithm == "lex4") {
        x = lex_mixed_diameter4(inst, g);
    } else {
        throw ParseError("unknown algorithm '" + algorithm + "'");
    }
    require_partition(inst, x);
    if (!is_g_efx(inst, x, g)) throw std::logic_error("solver output failed verification");
    out << write_allocation_json(x) << "\n";
    return 0;
}

int cmd_sweep_batch(const std::string& spliddit, int random_count, std::uint64_t seed, int agents, int items,
                    long max_value, int max_rounds, const std::string& trace_out, std::ostream& out,
                    std::ostream& err) {
    std::vector<BatchItem> batch;
    if (!spliddit.empty()) {
        SplidditData data = ingest_spliddit_file(spliddit);
        for (const auto& w : data.warnings) err << "warning: " << w << "\n";
        batch = std::move(data.instances);
    } else {
        for (int k = 0; k < random_count; ++k) {
            batch.push_back({"rnd-" + std::to_string(k),
                             gen_random_instance(agents, items, max_value, KindMix::Goods, seed + k)});
        }
    }
    if (batch.empty()) throw ParseError("nothing to run: give --spliddit or --random");
    SweepConfig config;
    config.max_rounds = max_rounds;
    const BatchResult res = run_batch(batch, config);
    out << "instances: " << batch.size() << "\n";
    for (const auto& [rounds, count] : res.rounds_histogram) {
        out << "rounds " << rounds << ": " << count << "\n";
    }
    out << "failures: " << res.failures << "\n";
    out << "round-capped: " << res.round_capped << "\n";
    if (!trace_out.empty()) {
        std::vector<std::pair<std::string, SweepTrace>> traces;
        for (const auto& [id, run] : res.runs) traces.emplace_back(id, run.trace);
        write_output(trace_out, write_trace_csv(traces), out);
    }
    return (res.failures == 0 && res.round_capped == 0) ? 0 : 1;
}

int cmd_gen(const std::string& family, int agents, int items, long max_value, const std::string& mix,
            std::uint64_t seed, const std::string& graph_family, int scale, const std::string& out_path,
            std::ostream& out) {
    if (family == "random") {
        const Instance inst = gen_random_instance(agents, items, max_value, mix_from_string(mix), seed);
        const Graph g = graph_from_family(graph_family, agents);
        write_output(out_path, write_instance_json(inst, g), out);
        return 0;
    }
    if (family == "lowerbound") {
        const Graph g = graph_from_family(graph_family, agents);
        const Instance inst = gen_lower_bound_instance(g, scale);
        write_output(out_path, write_instance_json(inst, g), out);
        return 0;
    }
    if (family == "hiddennottight") {
        const Instance inst = gen_random_instance(agents, agents, max_value, KindMix::Goods, seed);
        const StarBridgeCliqueRun run = star_bridge_clique_protocol(inst);
        nlohmann::json j = nlohmann::json::parse(write_instance_json(inst, run.graph));
        j["allocation"] = nlohmann::json::array();
        for (const auto& b : run.allocation.bundles) j["allocation"].push_back(std::vector<int>(b.begin(), b.end()));
        j["hidden"] = std::vector<int>(run.hidden.items.begin(), run.hidden.items.end());
        write_output(out_path, j.dump(2), out);
        return 0;
    }
    throw ParseError("unknown family '" + family + "', expected random|lowerbound|hiddennottight");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph-constrained fair allocation toolkit"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run a construction and print the allocation");
    std::string algorithm, input, trace_out;
    int center = 0, component_index = 0, max_rounds = 1000;
    bool include_last_edge = false;
    std::uint64_t budget = 10'000'000;
    std::vector<int> cover;
    solve->add_option("--algorithm", algorithm, "star|thm1|thm2|thm3|p4|chores1|chores2|lex4|vcrr|sweep|brute")
        ->required();
    solve->add_option("--input", input, "instance JSON file")->required();
    solve->add_option("--center", center, "star center agent (star)");
    solve->add_option("--cover", cover, "vertex cover, comma separated (vcrr)")->delimiter(',');
    solve->add_option("--component-index", component_index, "which connected component to allocate (vcrr)");
    solve->add_option("--budget", budget, "assignment budget (brute)");
    solve->add_option("--max-rounds", max_rounds, "round cap (sweep)");
    solve->add_flag("--include-last-edge", include_last_edge, "repair the last edge again on the reverse pass");
    solve->add_option("--trace-out", trace_out, "write the potential trace CSV here (sweep)");

    // verify efx|hef
    auto* verify = app.add_subcommand("verify", "check a property of a given allocation");
    verify->require_subcommand(1);
    std::string v_input, v_alloc, v_hidden;
    bool v_uniform = false;
    auto* v_efx = verify->add_subcommand("efx", "no strong envy along any edge");
    auto* v_hef = verify->add_subcommand("hef", "envy-free along edges once a hidden set is removed");
    for (auto* sub : {v_efx, v_hef}) {
        sub->add_option("--input", v_input, "instance JSON file")->required();
        sub->add_option("--allocation", v_alloc, "allocation JSON file")->required();
    }
    v_hef->add_option("--hidden", v_hidden, "hidden set JSON file (default: empty set)");
    v_hef->add_flag("--uniform", v_uniform, "at most one hidden item per bundle");

    // minhide
    auto* minhide = app.add_subcommand("minhide", "smallest hidden set making the allocation pass");
    std::string m_input, m_alloc;
    bool m_uniform = false;
    int m_max_items = 18;
    minhide->add_option("--input", m_input, "instance JSON file")->required();
    minhide->add_option("--allocation", m_alloc, "allocation JSON file")->required();
    minhide->add_flag("--uniform", m_uniform, "at most one hidden item per bundle");
    minhide->add_option("--max-items", m_max_items, "refuse instances with more candidate items than this");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    std::string g_family, g_mix = "goods", g_graph = "path", g_out;
    int g_agents = 4, g_items = 6, g_scale = -1;
    long g_max_value = 1000;
    std::uint64_t g_seed = 0;
    gen->add_option("family", g_family, "random|lowerbound|hiddennottight")->required();
    gen->add_option("--agents", g_agents, "number of agents");
    gen->add_option("--items", g_items, "number of items (random)");
    gen->add_option("--max-value", g_max_value, "largest absolute item value");
    gen->add_option("--mix", g_mix, "goods|chores|mixed (random)");
    gen->add_option("--seed", g_seed, "RNG seed");
    gen->add_option("--graph", g_graph, "path|star|complete");
    gen->add_option("--scale", g_scale, "item count for lowerbound, -1 = agents^3");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // sweep-batch
    auto* batch = app.add_subcommand("sweep-batch", "sweep many instances and print a rounds histogram");
    std::string b_spliddit, b_trace_out;
    int b_random = 0, b_agents = 4, b_items = 6, b_max_rounds = 1000;
    long b_max_value = 1000;
    std::uint64_t b_seed = 0;
    batch->add_option("--spliddit", b_spliddit, "CSV of goods valuations: instance_id,agent_index,points...");
    batch->add_option("--random", b_random, "generate this many random goods instances instead");
    batch->add_option("--seed", b_seed, "RNG seed for --random");
    batch->add_option("--agents", b_agents, "agents per random instance");
    batch->add_option("--items", b_items, "items per random instance");
    batch->add_option("--max-value", b_max_value, "largest item value for --random");
    batch->add_option("--max-rounds", b_max_rounds, "round cap per instance");
    batch->add_option("--trace-out", b_trace_out, "write all potential traces as CSV");

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "graph diagnostics");
    graph_cmd->require_subcommand(1);
    std::string gr_input, gr_shape;
    bool gr_approx = false;
    auto* gr_cover = graph_cmd->add_subcommand("cover", "vertex cover of the instance graph");
    auto* gr_diameter = graph_cmd->add_subcommand("diameter", "diameter of the instance graph");
    auto* gr_validate = graph_cmd->add_subcommand("validate-shape", "find a core/outer split for a construction");
    for (auto* sub : {gr_cover, gr_diameter, gr_validate}) {
        sub->add_option("--input", gr_input, "instance JSON file")->required();
    }
    gr_cover->add_flag("--approx", gr_approx, "matching-based 2-approximation instead of exact");
    gr_validate->add_option("--shape", gr_shape, "thm1|thm2|thm3")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(algorithm, input, center, cover, component_index, budget, max_rounds, include_last_edge,
                             trace_out, out, err);
        }
        if (verify->parsed()) {
            auto [inst, g] = parse_instance_json(read_file(v_input));
            const Allocation x = parse_allocation_json(read_file(v_alloc), inst.agent_count(), inst.item_count());
            if (!x.is_partition_of(inst.item_count())) {
                err << "allocation is not a partition of the items\n";
                return 1;
            }
            bool ok = false;
            if (v_efx->parsed()) {
                ok = is_g_efx(inst, x, g);
            } else {
                HiddenSet hidden;
                if (!v_hidden.empty()) hidden.items = parse_hidden_json(read_file(v_hidden), inst.item_count());
                ok = is_g_hef(inst, x, g, hidden, v_uniform);
            }
            out << (ok ? "yes" : "no") << "\n";
            return ok ? 0 : 1;
        }
        if (minhide->parsed()) {
            auto [inst, g] = parse_instance_json(read_file(m_input));
            const Allocation x = parse_allocation_json(read_file(m_alloc), inst.agent_count(), inst.item_count());
            const auto s = min_hidden_set(inst, x, g, m_uniform, m_max_items);
            if (!s) {
                err << "no hidden set works under the one-per-bundle restriction\n";
                return 1;
            }
            out << hidden_to_json(s->items) << "\n";
            return 0;
        }
        if (gen->parsed()) {
            return cmd_gen(g_family, g_agents, g_items, g_max_value, g_mix, g_seed, g_graph, g_scale, g_out, out);
        }
        if (batch->parsed()) {
            return cmd_sweep_batch(b_spliddit, b_random, b_seed, b_agents, b_items, b_max_value, b_max_rounds,
                                   b_trace_out, out, err);
        }
        if (graph_cmd->parsed()) {
            auto [inst, g] = parse_instance_json(read_file(gr_input));
            (void)inst;
            if (gr_cover->parsed()) {
                const auto c = gr_approx ? vertex_cover_2approx(g) : min_vertex_cover_exact(g);
                nlohmann::json j;
                j["cover"] = c;
                j["size"] = c.size();
                out << j.dump() << "\n";
                return 0;
            }
            if (gr_diameter->parsed()) {
                out << diameter(g) << "\n";
                return 0;
            }
            CoreStructure s;
            if (gr_shape == "thm1") {
                s = validate_thm1_shape(inst, g);
            } else if (gr_shape == "thm2") {
                s = validate_thm2_shape(inst, g);
            } else if (gr_shape == "thm3") {
                s = validate_thm3_shape(inst, g);
            } else {
                throw ParseError("unknown shape '" + gr_shape + "', expected thm1|thm2|thm3");
            }
            nlohmann::json j;
            j["core_groups"] = s.core_groups;
            j["outer"] = s.outer;
            out << j.dump() << "\n";
            return 0;
        }
    } catch (const ShapeMismatch& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const DiameterTooSmall& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace graphfair
