#include "winertia/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "winertia/matrix.hpp"

namespace winertia {

// --- WeightedGraph ---------------------------------------------------------

std::size_t WeightedGraph::add_vertex(std::string label) {
    if (label.empty()) throw GraphError("empty vertex label");
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    const std::size_t id = labels_.size();
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return id;
}

void WeightedGraph::add_edge(std::size_t u, std::size_t v, Rational weight) {
    if (u >= order() || v >= order()) throw GraphError("edge references an unknown vertex");
    if (u == v) throw GraphError("self-loop at vertex " + labels_[u]);
    if (sgn(weight) <= 0) {
        throw GraphError("non-positive weight " + to_string(weight) + " on edge " + labels_[u] +
                         "-" + labels_[v]);
    }
    if (adj_[u].contains(v)) {
        throw GraphError("duplicate edge " + labels_[u] + "-" + labels_[v]);
    }
    weight.canonicalize();
    adj_[u].emplace(v, weight);
    adj_[v].emplace(u, std::move(weight));
    ++edge_count_;
}

void WeightedGraph::add_edge(const std::string& u, const std::string& v, Rational weight) {
    if (u == v) throw GraphError("self-loop at vertex " + u);
    const auto iu = add_vertex(u);
    const auto iv = add_vertex(v);
    add_edge(iu, iv, std::move(weight));
}

std::optional<std::size_t> WeightedGraph::find(std::string_view label) const {
    if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t WeightedGraph::index_of(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw GraphError("unknown vertex '" + std::string(label) + "'");
}

bool WeightedGraph::has_edge(std::size_t u, std::size_t v) const {
    return u < order() && adj_[u].contains(v);
}

const Rational& WeightedGraph::weight(std::size_t u, std::size_t v) const {
    auto it = adj_.at(u).find(v);
    if (it == adj_[u].end()) throw GraphError("no edge " + labels_[u] + "-" + labels_.at(v));
    return it->second;
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u) {
        for (const auto& [v, w] : adj_[u]) {
            if (u < v) out.push_back({u, v, w});
        }
    }
    return out;
}

WeightedGraph WeightedGraph::induced(std::span<const std::size_t> keep) const {
    std::vector<char> kept(order(), 0);
    for (auto v : keep) kept.at(v) = 1;
    WeightedGraph h;
    std::vector<std::size_t> remap(order(), 0);
    for (std::size_t v = 0; v < order(); ++v) {
        if (kept[v]) remap[v] = h.add_vertex(labels_[v]);
    }
    for (const auto& e : edges()) {
        if (kept[e.u] && kept[e.v]) h.add_edge(remap[e.u], remap[e.v], e.weight);
    }
    return h;
}

WeightedGraph WeightedGraph::without(std::span<const std::size_t> drop) const {
    std::vector<char> dropped(order(), 0);
    for (auto v : drop) dropped.at(v) = 1;
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < order(); ++v) {
        if (!dropped[v]) keep.push_back(v);
    }
    return induced(keep);
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
}

std::vector<std::tuple<std::string, std::string, Rational>> label_edges(const WeightedGraph& g) {
    std::vector<std::tuple<std::string, std::string, Rational>> out;
    for (const auto& e : g.edges()) {
        auto a = g.label(e.u);
        auto b = g.label(e.v);
        if (b < a) std::swap(a, b);
        out.emplace_back(std::move(a), std::move(b), e.weight);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- Inertia ---------------------------------------------------------------

Inertia Inertia::from_signs(std::size_t pos, std::size_t neg, std::size_t n) {
    if (pos + neg > n) throw std::logic_error("inertia exceeds the vertex count");
    return {pos, neg, n - pos - neg};
}

std::string to_string(const Inertia& in) {
    return "i+=" + std::to_string(in.pos) + " i-=" + std::to_string(in.neg) +
           " i0=" + std::to_string(in.zero);
}

std::ostream& operator<<(std::ostream& os, const Inertia& in) { return os << to_string(in); }

// --- classification ---------------------------------------------------------

std::string_view to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::Tree: return "tree";
        case ComponentClass::Unicyclic: return "unicyclic";
        case ComponentClass::Bicyclic: return "bicyclic";
        case ComponentClass::Unsupported: return "unsupported";
    }
    return "?";
}

std::string_view to_string(GraphKind k) {
    switch (k) {
        case GraphKind::EmptyEdgeSetForest: return "empty-edge-set-forest";
        case GraphKind::Tree: return "tree";
        case GraphKind::Forest: return "forest";
        case GraphKind::Unicyclic: return "unicyclic";
        case GraphKind::Bicyclic: return "bicyclic";
        case GraphKind::UnicyclicForestMix: return "unicyclic-forest-mix";
        case GraphKind::BicyclicMix: return "bicyclic-mix";
        case GraphKind::Unsupported: return "unsupported";
    }
    return "?";
}

ComponentClass classify_component(std::size_t n, std::size_t m) {
    if (m + 1 == n) return ComponentClass::Tree;
    if (m == n) return ComponentClass::Unicyclic;
    if (m == n + 1) return ComponentClass::Bicyclic;
    return ComponentClass::Unsupported;
}

std::vector<std::vector<std::size_t>> component_vertex_sets(const WeightedGraph& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (const auto& [w, _] : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<WeightedGraph> connected_components(const WeightedGraph& g) {
    std::vector<WeightedGraph> out;
    for (const auto& set : component_vertex_sets(g)) out.push_back(g.induced(set));
    return out;
}

bool is_connected(const WeightedGraph& g) { return component_vertex_sets(g).size() <= 1; }

bool is_acyclic(const WeightedGraph& g) {
    return g.size() + component_vertex_sets(g).size() == g.order();
}

GraphClass classify(const WeightedGraph& g) {
    GraphClass out;
    std::size_t trees = 0, unicyclic = 0, bicyclic = 0, unsupported = 0;
    for (const auto& set : component_vertex_sets(g)) {
        std::size_t twice_m = 0;
        for (auto v : set) twice_m += g.degree(v);
        const auto c = classify_component(set.size(), twice_m / 2);
        out.components.push_back(c);
        switch (c) {
            case ComponentClass::Tree: ++trees; break;
            case ComponentClass::Unicyclic: ++unicyclic; break;
            case ComponentClass::Bicyclic: ++bicyclic; break;
            case ComponentClass::Unsupported: ++unsupported; break;
        }
    }
    const std::size_t comps = out.components.size();
    if (unsupported > 0) {
        out.kind = GraphKind::Unsupported;
    } else if (bicyclic > 0) {
        out.kind = comps == 1 ? GraphKind::Bicyclic : GraphKind::BicyclicMix;
    } else if (unicyclic > 0) {
        out.kind = comps == 1 ? GraphKind::Unicyclic : GraphKind::UnicyclicForestMix;
    } else if (g.size() == 0 && g.order() != 1) {
        out.kind = GraphKind::EmptyEdgeSetForest;
    } else {
        out.kind = comps == 1 ? GraphKind::Tree : GraphKind::Forest;
    }
    return out;
}

SymRationalMatrix adjacency_matrix(const WeightedGraph& g) {
    SymRationalMatrix m(g.order());
    for (const auto& e : g.edges()) m.set(e.u, e.v, e.weight);
    return m;
}

// --- parsing ---------------------------------------------------------------

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

void add_parsed_edge(WeightedGraph& g, const std::string& u, const std::string& v,
                     std::string_view weight_text, std::size_t line) {
    Rational w;
    try {
        w = parse_rational(weight_text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
    }
    if (sgn(w) <= 0) throw ParseError(line, "non-positive weight " + std::string(weight_text));
    if (u == v) throw ParseError(line, "self-loop at vertex " + u);
    const auto iu = g.add_vertex(u);
    const auto iv = g.add_vertex(v);
    if (g.has_edge(iu, iv)) throw ParseError(line, "duplicate edge " + u + "-" + v);
    g.add_edge(iu, iv, w);
}

WeightedGraph parse_edge_list(std::string_view text) {
    WeightedGraph g;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.front().starts_with("vertices:")) {
            tokens.front().erase(0, std::string_view("vertices:").size());
            for (auto& t : tokens) {
                if (!t.empty()) g.add_vertex(std::move(t));
            }
            continue;
        }
        if (tokens.size() != 3) {
            throw ParseError(line_no, "expected '<u> <v> <weight>', got " +
                                          std::to_string(tokens.size()) + " fields");
        }
        add_parsed_edge(g, tokens[0], tokens[1], tokens[2], line_no);
    }
    return g;
}

std::string json_id(const nlohmann::json& j, std::size_t entry) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError(entry, "vertex id must be a string or an integer");
}

WeightedGraph parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(0, "JSON graph must be an object");

    WeightedGraph g;
    if (auto it = doc.find("vertices"); it != doc.end()) {
        if (!it->is_array()) throw ParseError(0, "\"vertices\" must be an array");
        for (const auto& v : *it) g.add_vertex(json_id(v, 0));
    }
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) throw ParseError(0, "\"edges\" must be an array");
        std::size_t entry = 0;
        for (const auto& e : *it) {
            ++entry;
            if (!e.is_array() || e.size() != 3) {
                throw ParseError(entry, "edge must be [u, v, weight]");
            }
            std::string weight_text;
            if (e[2].is_string()) {
                weight_text = e[2].get<std::string>();
            } else if (e[2].is_number_integer()) {
                weight_text = std::to_string(e[2].get<long long>());
            } else {
                throw ParseError(entry, "weight must be \"num/den\" or an integer");
            }
            add_parsed_edge(g, json_id(e[0], entry), json_id(e[1], entry), weight_text, entry);
        }
    }
    return g;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Json ? parse_json(text) : parse_edge_list(text);
}

std::string serialize_graph(const WeightedGraph& g, GraphFormat format) {
    if (format == GraphFormat::Json) {
        nlohmann::json doc;
        doc["vertices"] = g.labels();
        doc["edges"] = nlohmann::json::array();
        for (const auto& e : g.edges()) {
            doc["edges"].push_back({g.label(e.u), g.label(e.v), to_string(e.weight)});
        }
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
    for (const auto& e : g.edges()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << to_string(e.weight) << '\n';
    }
    return out.str();
}

}  // namespace winertia
