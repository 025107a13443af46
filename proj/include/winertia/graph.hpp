#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "winertia/rational.hpp"

namespace winertia {

class SymRationalMatrix;

/// Violation of a WeightedGraph invariant (self-loop, parallel edge, weight <= 0,
/// unknown vertex).
class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::size_t u;
    std::size_t v;
    Rational weight;
};

/// Simple undirected graph with exact positive edge weights.
///
/// Vertices are addressed either by label or by dense index; index order is the
/// order in which labels were first added, and it is the row order of the
/// adjacency matrix. Subgraph operations preserve the relative vertex order.
class WeightedGraph {
  public:
    WeightedGraph() = default;

    /// Returns the index of `label`, adding it if it is new.
    std::size_t add_vertex(std::string label);

    void add_edge(std::size_t u, std::size_t v, Rational weight);
    /// Adds missing endpoints first.
    void add_edge(const std::string& u, const std::string& v, Rational weight);

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;

    const std::map<std::size_t, Rational>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool has_edge(std::size_t u, std::size_t v) const;
    const Rational& weight(std::size_t u, std::size_t v) const;

    /// All edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

    /// Subgraph induced on `keep` (any order, duplicates ignored); vertex order
    /// follows this graph's order.
    WeightedGraph induced(std::span<const std::size_t> keep) const;
    /// Subgraph induced on the complement of `drop`.
    WeightedGraph without(std::span<const std::size_t> drop) const;

    /// Same labels in the same order and the same weighted edges.
    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::map<std::size_t, Rational>> adj_;
    std::size_t edge_count_ = 0;
};

/// Edge set keyed by labels: (min label, max label, weight), sorted. Two graphs
/// with equal label-edge sets and vertex sets are the same graph up to order.
std::vector<std::tuple<std::string, std::string, Rational>> label_edges(const WeightedGraph& g);

struct Inertia {
    std::size_t pos = 0;
    std::size_t neg = 0;
    std::size_t zero = 0;

    std::size_t order() const { return pos + neg + zero; }

    /// Builds (pos, neg, n - pos - neg); throws std::logic_error if pos + neg > n.
    static Inertia from_signs(std::size_t pos, std::size_t neg, std::size_t n);

    Inertia& operator+=(const Inertia& o) {
        pos += o.pos;
        neg += o.neg;
        zero += o.zero;
        return *this;
    }
    friend Inertia operator+(Inertia a, const Inertia& b) { return a += b; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// "i+=1 i-=2 i0=0"
std::string to_string(const Inertia& in);
std::ostream& operator<<(std::ostream& os, const Inertia& in);

enum class ComponentClass { Tree, Unicyclic, Bicyclic, Unsupported };

enum class GraphKind {
    EmptyEdgeSetForest,
    Tree,
    Forest,
    Unicyclic,
    Bicyclic,
    UnicyclicForestMix,
    BicyclicMix,
    Unsupported,
};

struct GraphClass {
    GraphKind kind = GraphKind::EmptyEdgeSetForest;
    std::vector<ComponentClass> components;
};

std::string_view to_string(ComponentClass c);
std::string_view to_string(GraphKind k);

/// Classifies a connected graph with `n` vertices and `m` edges by cyclomatic number.
ComponentClass classify_component(std::size_t n, std::size_t m);

GraphClass classify(const WeightedGraph& g);

/// Vertex index sets of the connected components, each sorted, ordered by their
/// smallest index.
std::vector<std::vector<std::size_t>> component_vertex_sets(const WeightedGraph& g);

std::vector<WeightedGraph> connected_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

bool is_acyclic(const WeightedGraph& g);

SymRationalMatrix adjacency_matrix(const WeightedGraph& g);

// --- text formats ----------------------------------------------------------

enum class GraphFormat { EdgeList, Json };

/// Input that does not conform to the edge-list or JSON grammar. `line()` is the
/// 1-based line of an edge list, or the 1-based edge entry of a JSON document
/// (0 when the whole document is malformed).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

WeightedGraph parse_graph(std::string_view text, GraphFormat format);

/// Always writes every vertex (edge list: `vertices:` header) so that parsing
/// the result reproduces the vertex order.
std::string serialize_graph(const WeightedGraph& g, GraphFormat format);

}  // namespace winertia
