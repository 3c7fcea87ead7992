#include "graphfair/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "graphfair/errors.hpp"

namespace graphfair {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(where + ": expected \"p/q\" string or integer");
}

json rational_to_json(const Rational& r) { return to_string(r); }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            fields.push_back("");
        } else {
            const auto end = field.find_last_not_of(" \t\r");
            fields.push_back(field.substr(begin, end - begin + 1));
        }
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

long long parse_int_field(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(where + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace

ParsedInstance parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance JSON: expected an object");
    if (!j.contains("agents") || !j["agents"].is_number_integer()) {
        throw ParseError("instance JSON: missing integer field 'agents'");
    }
    const int n = j["agents"].get<int>();
    if (!j.contains("items") || !j["items"].is_array()) throw ParseError("instance JSON: missing array 'items'");

    std::vector<Item> items;
    for (const auto& it : j["items"]) {
        if (!it.is_object() || !it.contains("id") || !it.contains("kind")) {
            throw ParseError("instance JSON: each item needs 'id' and 'kind'");
        }
        const std::string kind = it["kind"].get<std::string>();
        if (kind != "good" && kind != "chore") {
            throw ParseError("instance JSON: item kind must be 'good' or 'chore', got '" + kind + "'");
        }
        items.push_back({it["id"].get<int>(), kind == "good" ? ItemKind::Good : ItemKind::Chore});
    }
    const int m = static_cast<int>(items.size());

    if (!j.contains("valuations") || !j["valuations"].is_array()) {
        throw ParseError("instance JSON: missing array 'valuations'");
    }
    if (static_cast<int>(j["valuations"].size()) != n) {
        throw ParseError("instance JSON: 'valuations' must have one entry per agent");
    }
    std::vector<Valuation> vals;
    int agent = 0;
    for (const auto& v : j["valuations"]) {
        const std::string where = "valuations[" + std::to_string(agent) + "]";
        if (!v.is_object() || !v.contains("type")) throw ParseError(where + ": expected object with 'type'");
        const std::string type = v["type"].get<std::string>();
        if (type == "additive") {
            if (!v.contains("values") || !v["values"].is_array()) throw ParseError(where + ": missing 'values'");
            AdditiveValuation add;
            for (const auto& x : v["values"]) add.values.push_back(rational_from_json(x, where));
            vals.emplace_back(std::move(add));
        } else if (type == "table") {
            if (!v.contains("entries") || !v["entries"].is_array()) throw ParseError(where + ": missing 'entries'");
            if (m > 16) throw ParseError(where + ": table valuations limited to 16 items");
            std::vector<Rational> by_subset(std::size_t{1} << m);
            std::vector<bool> filled(std::size_t{1} << m, false);
            for (const auto& entry : v["entries"]) {
                if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array()) {
                    throw ParseError(where + ": each entry is [[ids...], value]");
                }
                std::size_t mask = 0;
                for (const auto& id : entry[0]) {
                    const int g = id.get<int>();
                    if (g < 0 || g >= m) throw ParseError(where + ": item id out of range in entry");
                    mask |= std::size_t{1} << g;
                }
                if (filled[mask]) throw ParseError(where + ": duplicate subset in table");
                filled[mask] = true;
                by_subset[mask] = rational_from_json(entry[1], where);
            }
            if (!std::all_of(filled.begin(), filled.end(), [](bool b) { return b; })) {
                throw ParseError(where + ": table must cover every subset");
            }
            vals.emplace_back(TableValuation{std::move(by_subset)});
        } else if (type == "lexicographic") {
            if (!v.contains("priority") || !v["priority"].is_array()) throw ParseError(where + ": missing 'priority'");
            LexicographicValuation lex;
            for (const auto& id : v["priority"]) lex.priority.push_back(id.get<int>());
            vals.emplace_back(std::move(lex));
        } else {
            throw ParseError(where + ": unknown valuation type '" + type + "'");
        }
        ++agent;
    }

    if (!j.contains("graph") || !j["graph"].is_object()) throw ParseError("instance JSON: missing object 'graph'");
    const auto& gj = j["graph"];
    if (!gj.contains("type")) throw ParseError("instance JSON: graph needs a 'type'");
    const std::string gtype = gj["type"].get<std::string>();
    const int gn = gj.contains("n") ? gj["n"].get<int>() : n;
    if (gn != n) {
        throw ParseError("instance JSON: graph is on " + std::to_string(gn) + " vertices but there are " +
                         std::to_string(n) + " agents");
    }
    Graph graph;
    if (gtype == "path") {
        graph = make_path(gn);
    } else if (gtype == "star") {
        graph = make_star(gn);
    } else if (gtype == "complete") {
        graph = make_complete(gn);
    } else if (gtype == "custom") {
        if (!gj.contains("edges") || !gj["edges"].is_array()) {
            throw ParseError("instance JSON: custom graph needs 'edges'");
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : gj["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("instance JSON: each edge is [a, b]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        try {
            graph = Graph(gn, std::move(edges));
        } catch (const Error& err) {
            throw ParseError(std::string("instance JSON: ") + err.what());
        }
    } else {
        throw ParseError("instance JSON: unknown graph type '" + gtype + "'");
    }

    try {
        return ParsedInstance{Instance::create(std::move(items), std::move(vals)), std::move(graph)};
    } catch (const Error& err) {
        throw ParseError(std::string("instance JSON: ") + err.what());
    }
}

std::string write_instance_json(const Instance& inst, const Graph& g) {
    json j;
    j["agents"] = inst.agent_count();
    j["items"] = json::array();
    for (const auto& item : inst.items()) {
        j["items"].push_back({{"id", item.id}, {"kind", item.kind == ItemKind::Good ? "good" : "chore"}});
    }
    j["valuations"] = json::array();
    for (int a = 0; a < inst.agent_count(); ++a) {
        const Valuation& v = inst.valuation(a);
        json vj;
        if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
            vj["type"] = "additive";
            vj["values"] = json::array();
            for (const auto& x : add->values) vj["values"].push_back(rational_to_json(x));
        } else if (const auto* tab = std::get_if<TableValuation>(&v)) {
            vj["type"] = "table";
            vj["entries"] = json::array();
            for (std::size_t mask = 0; mask < tab->by_subset.size(); ++mask) {
                json ids = json::array();
                for (int g2 = 0; g2 < inst.item_count(); ++g2) {
                    if (mask & (std::size_t{1} << g2)) ids.push_back(g2);
                }
                vj["entries"].push_back(json::array({ids, rational_to_json(tab->by_subset[mask])}));
            }
        } else {
            const auto& lex = std::get<LexicographicValuation>(v);
            vj["type"] = "lexicographic";
            vj["priority"] = lex.priority;
        }
        j["valuations"].push_back(std::move(vj));
    }
    j["graph"]["type"] = "custom";
    j["graph"]["n"] = g.vertex_count();
    j["graph"]["edges"] = json::array();
    for (auto [a, b] : g.edges()) j["graph"]["edges"].push_back(json::array({a, b}));
    return j.dump(2);
}

Allocation parse_allocation_json(const std::string& text, int agents, int items) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("allocation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("bundles") || !j["bundles"].is_array()) {
        throw ParseError("allocation JSON: expected {\"bundles\": [[...], ...]}");
    }
    if (static_cast<int>(j["bundles"].size()) != agents) {
        throw ParseError("allocation JSON: expected one bundle per agent");
    }
    Allocation x = Allocation::empty(agents);
    int a = 0;
    for (const auto& b : j["bundles"]) {
        if (!b.is_array()) throw ParseError("allocation JSON: each bundle is an array of item ids");
        for (const auto& id : b) {
            const int g = id.get<int>();
            if (g < 0 || g >= items) throw ParseError("allocation JSON: item id out of range");
            if (!x.bundles[static_cast<std::size_t>(a)].insert(g).second) {
                throw ParseError("allocation JSON: duplicate item in a bundle");
            }
        }
        ++a;
    }
    return x;
}

std::string write_allocation_json(const Allocation& x) {
    json j;
    j["bundles"] = json::array();
    for (const auto& b : x.bundles) j["bundles"].push_back(std::vector<int>(b.begin(), b.end()));
    return j.dump();
}

SplidditData ingest_spliddit(std::istream& in) {
    SplidditData out;
    // id -> (agent_index -> points); ordered by first appearance.
    std::vector<std::string> id_order;
    std::map<std::string, std::map<long long, std::vector<long long>>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_line(line);
        if (fields[0] == "instance_id") continue;  // header
        const std::string where = "line " + std::to_string(lineno);
        if (fields.size() < 3) throw ParseError(where + ": expected instance_id,agent_index,points...");
        const std::string id = fields[0];
        const long long agent_idx = parse_int_field(fields[1], where);
        std::vector<long long> points;
        for (std::size_t f = 2; f < fields.size(); ++f) {
            const long long p = parse_int_field(fields[f], where);
            if (p < 0) throw ParseError(where + ": negative points");
            points.push_back(p);
        }
        if (rows.find(id) == rows.end()) id_order.push_back(id);
        auto& agents = rows[id];
        if (!agents.empty() && agents.begin()->second.size() != points.size()) {
            throw ParseError(where + ": ragged row, instance '" + id + "' has rows of different width");
        }
        if (!agents.emplace(agent_idx, std::move(points)).second) {
            throw ParseError(where + ": duplicate agent " + std::to_string(agent_idx) + " in instance '" + id + "'");
        }
    }
    for (const auto& id : id_order) {
        const auto& agents = rows[id];
        const int m = static_cast<int>(agents.begin()->second.size());
        std::vector<Item> items;
        for (int g = 0; g < m; ++g) items.push_back({g, ItemKind::Good});
        std::vector<Valuation> vals;
        int renumbered = 0;
        for (const auto& [idx, points] : agents) {
            AdditiveValuation add;
            long long total = 0;
            for (long long p : points) {
                add.values.emplace_back(p);
                total += p;
            }
            if (total != 1000) {
                out.warnings.push_back("instance '" + id + "' agent " + std::to_string(idx) + ": points sum to " +
                                       std::to_string(total) + ", expected 1000");
            }
            vals.emplace_back(std::move(add));
            ++renumbered;
        }
        (void)renumbered;
        out.instances.push_back({id, Instance::create(std::move(items), std::move(vals))});
    }
    return out;
}

SplidditData ingest_spliddit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return ingest_spliddit(in);
}

Instance gen_random_instance(int n, int m, long max_value, KindMix mix, std::uint64_t seed) {
    if (n < 1 || m < 0 || max_value < 0) throw BadSize("bad generator parameters");
    std::mt19937_64 rng(seed);
    // Modulo keeps the draw identical across standard libraries.
    auto draw = [&](long hi) { return static_cast<long>(rng() % static_cast<std::uint64_t>(hi + 1)); };
    std::vector<Item> items;
    for (int g = 0; g < m; ++g) {
        ItemKind kind = ItemKind::Good;
        if (mix == KindMix::Chores) kind = ItemKind::Chore;
        if (mix == KindMix::Mixed) kind = (rng() % 2 == 0) ? ItemKind::Good : ItemKind::Chore;
        items.push_back({g, kind});
    }
    std::vector<Valuation> vals;
    for (int a = 0; a < n; ++a) {
        AdditiveValuation add;
        for (int g = 0; g < m; ++g) {
            long v = draw(max_value);
            if (items[static_cast<std::size_t>(g)].kind == ItemKind::Chore) v = -v;
            add.values.emplace_back(v);
        }
        vals.emplace_back(std::move(add));
    }
    return Instance::create(std::move(items), std::move(vals));
}

std::string write_trace_csv(const std::vector<std::pair<std::string, SweepTrace>>& traces) {
    std::string out = "instance_id,round,phi1,phi2,phi3\n";
    for (const auto& [id, trace] : traces) {
        for (std::size_t r = 0; r < trace.samples.size(); ++r) {
            const auto& s = trace.samples[r];
            out += id + "," + std::to_string(r) + "," + to_string(s.phi1) + "," + to_string(s.phi2) + "," +
                   to_string(s.phi3) + "\n";
        }
    }
    return out;
}

std::vector<std::pair<std::string, std::vector<PotentialSample>>> parse_trace_csv(const std::string& text) {
    std::vector<std::pair<std::string, std::vector<PotentialSample>>> out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_line(line);
        if (fields[0] == "instance_id") continue;
        if (fields.size() != 5) throw ParseError("trace CSV line " + std::to_string(lineno) + ": expected 5 fields");
        const std::string where = "trace CSV line " + std::to_string(lineno);
        const long long round = parse_int_field(fields[1], where);
        PotentialSample s{parse_rational(fields[2]), parse_rational(fields[3]), parse_rational(fields[4])};
        if (out.empty() || out.back().first != fields[0]) out.emplace_back(fields[0], std::vector<PotentialSample>{});
        auto& samples = out.back().second;
        if (static_cast<long long>(samples.size()) != round) {
            throw ParseError(where + ": rounds out of order");
        }
        samples.push_back(std::move(s));
    }
    return out;
}

}  // namespace graphfair
