#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "winertia/graph.hpp"

namespace winertia {

/// Matching number q(g) of a forest (leaf-first greedy).
/// Throws GraphError if g contains a cycle.
std::size_t max_matching_forest(const WeightedGraph& g);

/// True iff some maximum matching of the tree misses v, i.e. q(t - v) = q(t).
/// A single-vertex tree's vertex is mismatched by convention.
/// Throws GraphError if t is not a tree or v is out of range.
bool is_mismatched(const WeightedGraph& t, std::size_t v);

/// Repeatedly deletes vertices of degree <= 1. Throws GraphError when nothing
/// is left (g is a forest).
WeightedGraph two_core(const WeightedGraph& g);

enum class BaseKind { Cycle, Infinity, Theta };

std::string_view to_string(BaseKind k);

/// Canonical description of a cycle, an ∞(p, l, q) or a θ(p, l, q) graph.
///
/// Cycle: `a` holds the n cycle weights; a_path the cycle vertices with
///   a[i] = w(a_path[i], a_path[i+1 mod n]).
/// Infinity: cycles C_p (a) and C_q (b) with junctions a_path[0], b_path[0];
///   c_path runs from a_path[0] to b_path[0] (l vertices, a single vertex when
///   l = 1) with c[i] = w(c_path[i], c_path[i+1]). Canonically p <= q.
/// Theta: three hub-to-hub paths of p, l, q vertices, each listed from hub u to
///   hub v; a, b, c hold p-1, l-1, q-1 weights with a[0] at u. Canonically
///   p <= l <= q.
struct BaseDescriptor {
    BaseKind kind = BaseKind::Cycle;
    std::size_t p = 0;
    std::size_t l = 0;
    std::size_t q = 0;
    std::vector<Rational> a, b, c;
    std::vector<std::string> a_path, b_path, c_path;

    std::size_t vertex_count() const;

    /// Rebuilds the base as a graph on the mapped labels (a_path, then the
    /// remaining c_path vertices, then b_path).
    WeightedGraph to_graph() const;

    /// e.g. "cycle(5)", "infinity(3,1,3)", "theta(2,3,5)"
    std::string name() const;

    /// Checks the shape invariants; throws std::invalid_argument.
    void validate() const;
};

/// Reads the ∞/θ/cycle structure off a 2-core. Throws GraphError when the core
/// matches none of the three shapes.
BaseDescriptor describe_base(const WeightedGraph& core);

struct HangingTree {
    std::string root;
    WeightedGraph tree;
    bool matched_at_root = false;
};

/// One tree per core vertex, in core vertex order. Each tree is the maximal
/// connected induced subgraph of g containing the root and no other core vertex.
std::vector<HangingTree> hanging_trees(const WeightedGraph& g, const WeightedGraph& core);

}  // namespace winertia
