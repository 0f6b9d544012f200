#include "nodal/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace nodal {

namespace {

struct RawVertex {
    int id;
    int weight;
};
struct RawEdge {
    int id;
    int u;
    int v;
};
struct RawCoord {
    int edge_id;
    int side;
    Rational value;
};
struct RawGlue {
    int edge_id;
    Rational left;
    Rational right;
};

struct RawFile {
    std::vector<RawVertex> vertices;
    std::vector<RawEdge> edges;
    std::vector<RawCoord> coords;
    std::map<int, long long> degrees;  // vertex id -> degree
    std::vector<RawGlue> glues;
    std::optional<std::string> multidegree_line;
    bool has_bundle_data = false;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
}

RawFile scan(std::istream& in) {
    RawFile raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);

        if (kind == "vertex") {
            if (toks.size() != 2) fail(lineno, "vertex takes <id> <weight>");
            raw.vertices.push_back({parse_int(toks[0], lineno), parse_int(toks[1], lineno)});
        } else if (kind == "edge") {
            if (toks.size() != 3) fail(lineno, "edge takes <id> <u> <v>");
            raw.edges.push_back({parse_int(toks[0], lineno), parse_int(toks[1], lineno),
                                 parse_int(toks[2], lineno)});
        } else if (kind == "coord") {
            if (toks.size() != 3) fail(lineno, "coord takes <edge-id> <side> <p/q>");
            int side = parse_int(toks[1], lineno);
            if (side != 0 && side != 1) fail(lineno, "coord side must be 0 or 1");
            try {
                raw.coords.push_back({parse_int(toks[0], lineno), side, parse_rational(toks[2])});
            } catch (const std::invalid_argument& e) {
                fail(lineno, e.what());
            }
            raw.has_bundle_data = true;
        } else if (kind == "deg") {
            for (const std::string& t : toks) {
                auto colon = t.find(':');
                if (colon == std::string::npos) fail(lineno, "deg entries look like <v>:<int>");
                int v = parse_int(t.substr(0, colon), lineno);
                int d = parse_int(t.substr(colon + 1), lineno);
                if (!raw.degrees.emplace(v, d).second) {
                    fail(lineno, "duplicate degree for vertex " + std::to_string(v));
                }
            }
            raw.has_bundle_data = true;
        } else if (kind == "glue") {
            if (toks.size() != 3) fail(lineno, "glue takes <edge-id> <p/q> <p/q>");
            try {
                raw.glues.push_back({parse_int(toks[0], lineno), parse_rational(toks[1]),
                                     parse_rational(toks[2])});
            } catch (const std::invalid_argument& e) {
                fail(lineno, e.what());
            }
            raw.has_bundle_data = true;
        } else if (kind == "multidegree") {
            if (raw.multidegree_line) fail(lineno, "duplicate multidegree line");
            std::string rest;
            for (const std::string& t : toks) rest += t + " ";
            raw.multidegree_line = rest;
        } else {
            fail(lineno, "unknown item '" + kind + "'");
        }
    }
    return raw;
}

DualGraph build_graph(const RawFile& raw) {
    std::vector<int> ids, weights;
    std::map<int, int> index;
    for (const RawVertex& v : raw.vertices) {
        if (!index.emplace(v.id, static_cast<int>(ids.size())).second) {
            throw ParseError("duplicate vertex id " + std::to_string(v.id));
        }
        ids.push_back(v.id);
        weights.push_back(v.weight);
    }
    std::vector<Edge> edges;
    std::map<int, int> edge_index;
    for (const RawEdge& e : raw.edges) {
        auto u = index.find(e.u);
        auto v = index.find(e.v);
        if (u == index.end() || v == index.end()) {
            throw ParseError("edge id " + std::to_string(e.id) + " references unknown vertex");
        }
        if (!edge_index.emplace(e.id, static_cast<int>(edges.size())).second) {
            throw ParseError("duplicate edge id " + std::to_string(e.id));
        }
        edges.push_back(Edge{e.id, u->second, v->second});
    }
    return DualGraph(std::move(ids), std::move(weights), std::move(edges));
}

}  // namespace

GraphFile read_graph_file(std::istream& in) {
    RawFile raw = scan(in);
    GraphFile out{build_graph(raw), std::nullopt};
    if (raw.multidegree_line) {
        out.multidegree = parse_multidegree(out.graph, *raw.multidegree_line);
    }
    return out;
}

GraphFile read_graph_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph_file(in);
}

void write_graph_file(std::ostream& out, const DualGraph& g,
                      const std::optional<Multidegree>& d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "vertex " << g.vertex_id(v) << " " << g.weight(v) << "\n";
    }
    for (const Edge& e : g.edges()) {
        out << "edge " << e.id << " " << g.vertex_id(e.u) << " " << g.vertex_id(e.v) << "\n";
    }
    if (d) out << "multidegree " << format_multidegree(g, *d) << "\n";
}

namespace {

int edge_index_or_throw(const DualGraph& g, int edge_id) {
    try {
        return g.edge_by_id(edge_id);
    } catch (const std::invalid_argument&) {
        throw ParseError("unknown edge id " + std::to_string(edge_id));
    }
}

}  // namespace

GluedLineBundle read_bundle_file(std::istream& in) {
    RawFile raw = scan(in);
    DualGraph g = build_graph(raw);

    std::vector<EdgeCoords> coords(g.edge_count());
    std::vector<std::array<bool, 2>> have(g.edge_count(), {false, false});
    for (const RawCoord& c : raw.coords) {
        int i = edge_index_or_throw(g, c.edge_id);
        if (have[i][c.side]) {
            throw ParseError("duplicate coord for edge " + std::to_string(c.edge_id));
        }
        have[i][c.side] = true;
        (c.side == 0 ? coords[i].at_u : coords[i].at_v) = c.value;
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!have[i][0] || !have[i][1]) {
            throw ParseError("missing coord for edge " + std::to_string(g.edge(i).id));
        }
    }

    std::vector<long long> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = raw.degrees.find(g.vertex_id(v));
        if (it == raw.degrees.end()) {
            throw ParseError("missing degree for vertex " + std::to_string(g.vertex_id(v)));
        }
        deg[v] = it->second;
    }

    std::vector<Gluing> gl(g.edge_count());
    std::vector<bool> have_glue(g.edge_count(), false);
    for (const RawGlue& gg : raw.glues) {
        int i = edge_index_or_throw(g, gg.edge_id);
        if (have_glue[i]) throw ParseError("duplicate glue for edge " + std::to_string(gg.edge_id));
        have_glue[i] = true;
        gl[i] = Gluing{gg.left, gg.right};
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!have_glue[i]) {
            throw ParseError("missing glue for edge " + std::to_string(g.edge(i).id));
        }
    }
    return GluedLineBundle(RationalCurveModel(std::move(g), std::move(coords)),
                           Multidegree(std::move(deg)), std::move(gl));
}

GluedLineBundle read_bundle_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_bundle_file(in);
}

void write_bundle_file(std::ostream& out, const GluedLineBundle& b) {
    const DualGraph& g = b.graph();
    write_graph_file(out, g);
    for (int i = 0; i < g.edge_count(); ++i) {
        out << "coord " << g.edge(i).id << " 0 " << to_string(b.model().coords(i).at_u) << "\n";
        out << "coord " << g.edge(i).id << " 1 " << to_string(b.model().coords(i).at_v) << "\n";
    }
    out << "deg " << format_multidegree(g, b.degree()) << "\n";
    for (int i = 0; i < g.edge_count(); ++i) {
        out << "glue " << g.edge(i).id << " " << to_string(b.gluing(i).left) << " "
            << to_string(b.gluing(i).right) << "\n";
    }
}

Multidegree parse_multidegree(const DualGraph& g, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::map<int, long long> seen;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) {
            throw ParseError("multidegree entries look like <v>:<int>, got '" + tok + "'");
        }
        int v = std::stoi(tok.substr(0, colon));
        long long d = std::stoll(tok.substr(colon + 1));
        if (!seen.emplace(v, d).second) {
            throw ParseError("duplicate multidegree entry for vertex " + std::to_string(v));
        }
    }
    std::vector<long long> values(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto it = seen.find(g.vertex_id(v));
        if (it == seen.end()) {
            throw ParseError("multidegree misses vertex " + std::to_string(g.vertex_id(v)));
        }
        values[v] = it->second;
        seen.erase(it);
    }
    if (!seen.empty()) {
        throw ParseError("multidegree references unknown vertex " +
                         std::to_string(seen.begin()->first));
    }
    return Multidegree(std::move(values));
}

std::string format_multidegree(const DualGraph& g, const Multidegree& d) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
    std::string out;
    for (int v : order) {
        if (!out.empty()) out += " ";
        out += std::to_string(g.vertex_id(v)) + ":" + std::to_string(d[v]);
    }
    return out;
}

}  // namespace nodal
