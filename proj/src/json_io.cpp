#include "cfcolor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cfcolor {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing JSON field: ") + key);
    return j.at(key);
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": array expected");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw InputError(std::string(what) + ": inner array expected");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw InputError(std::string(what) + ": integer expected");
            r.push_back(x.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.vertex_count();
    j["edges"] = h.edges();
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    const int n = field(j, "n").get<int>();
    return Hypergraph(n, int_matrix(field(j, "edges"), "edges"));
}

Json lists_to_json(const ColorListFamily& lists) {
    Json j;
    j["lists"] = lists.lists();
    return j;
}

ColorListFamily lists_from_json(const Json& j) {
    return ColorListFamily(int_matrix(field(j, "lists"), "lists"));
}

Json coloring_to_json(const Coloring& c) {
    Json j;
    j["colors"] = c;
    return j;
}

Coloring coloring_from_json(const Json& j) {
    const Json& arr = field(j, "colors");
    if (!arr.is_array()) throw InputError("colors: array expected");
    Coloring c;
    for (const auto& x : arr) c.push_back(x.get<int>());
    return c;
}

Json points_to_json(const PointSet& p) {
    Json arr = Json::array();
    for (const auto& pt : p.points()) arr.push_back({pt.x, pt.y});
    Json j;
    j["points"] = arr;
    return j;
}

PointSet points_from_json(const Json& j) {
    const Json& arr = field(j, "points");
    if (!arr.is_array()) throw InputError("points: array expected");
    std::vector<Point> pts;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 2)
            throw InputError("points: [x, y] pairs expected");
        pts.push_back({row[0].get<long long>(), row[1].get<long long>()});
    }
    return PointSet(std::move(pts));
}

Json discs_to_json(const DiscFamily& d) {
    Json arr = Json::array();
    for (const auto& disc : d.discs()) arr.push_back({disc.cx, disc.cy, disc.r2});
    Json j;
    j["discs"] = arr;
    return j;
}

DiscFamily discs_from_json(const Json& j) {
    const Json& arr = field(j, "discs");
    if (!arr.is_array()) throw InputError("discs: array expected");
    std::vector<Disc> ds;
    for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3)
            throw InputError("discs: [cx, cy, r2] triples expected");
        ds.push_back({row[0].get<long long>(), row[1].get<long long>(),
                      row[2].get<long long>()});
    }
    return DiscFamily(std::move(ds));
}

Json graph_to_json(const PlanarGraph& g) {
    Json j;
    j["n"] = g.vertex_count();
    j["adj"] = g.adjacency();
    return j;
}

PlanarGraph graph_from_json(const Json& j) {
    const int n = field(j, "n").get<int>();
    auto adj = int_matrix(field(j, "adj"), "adj");
    if (static_cast<int>(adj.size()) != n)
        throw InputError("adjacency size does not match n");
    return PlanarGraph::from_adjacency(adj);
}

Json trace_to_json(const PotentialTrace& trace) {
    Json arr = Json::array();
    for (const auto& it : trace.iterations) {
        Json row;
        row["t"] = it.t;
        row["c"] = it.color;
        row["Vc_size"] = it.candidate_count;
        Json pots = Json::array();
        for (const auto& p : it.class_potentials)
            pots.push_back(to_fraction_string(p));
        row["class_potentials"] = pots;
        row["chosen"] = it.chosen_class;
        row["P"] = to_fraction_string(it.potential_before);
        arr.push_back(std::move(row));
    }
    return arr;
}

Json witness_to_json(const PartitionWitness& w) {
    Json j;
    j["base"] = w.base_coloring;
    Json assign = Json::array();
    for (auto [color, cls] : w.class_of_color) assign.push_back({color, cls});
    j["class_of_color"] = assign;
    j["pruned_lists"] = w.pruned_lists;
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

Json load_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace cfcolor
