#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "winertia/closed_forms.hpp"
#include "winertia/graph.hpp"
#include "winertia/structure.hpp"

namespace winertia {

enum class WeightRegime { RandomRational, UnitWeights, ForceEqualityBranch };

struct GenSpec {
    /// Tree, Forest, Unicyclic or Bicyclic.
    GraphKind target = GraphKind::Tree;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    WeightRegime regime = WeightRegime::RandomRational;
    /// Branch id for ForceEqualityBranch; see equality_branches().
    std::string branch;
};

using Rng = std::mt19937_64;

/// k/d with k in [1, 20], d in [1, 10].
Rational random_weight(Rng& rng);

/// Deterministic in spec. Vertices are labelled 1..n in shuffled order.
/// Throws std::invalid_argument for infeasible specs.
WeightedGraph generate(const GenSpec& spec);

/// Branch ids accepted by ForceEqualityBranch: "cycle" (unicyclic target) and,
/// for bicyclic targets, every id that branch_key() can return.
const std::vector<std::string>& equality_branches();

/// The branch id of the weight condition that decides d, or "" when the
/// evaluation of d consults none.
std::string branch_key(const BaseDescriptor& d);

/// Builds a base of the given shape with weights from `weight`.
/// Labels are "b0", "b1", ... in a_path, c_path, b_path order.
BaseDescriptor make_base(BaseKind kind, std::size_t p, std::size_t l, std::size_t q,
                         const std::function<Rational()>& weight);

/// All ∞ and θ shapes (Cycle excluded) with at most n vertices, as (kind, p, l, q).
struct BaseShape {
    BaseKind kind;
    std::size_t p, l, q;
    std::size_t vertices() const;
};
std::vector<BaseShape> bicyclic_shapes(std::size_t max_vertices);

/// Rewrites one weight of d so that governing_condition(d) has the requested
/// relation. Returns false if no single weight enters the condition as a
/// monomial of degree +-1.
bool force_relation(BaseDescriptor& d, Relation want, Rng& rng);

/// Same for the alternating-product condition of a cycle.
bool force_cycle_relation(std::vector<Rational>& weights, Relation want, Rng& rng);

/// ∞(row.p, row.l, row.q) with random weights adjusted so that the row's
/// condition has relation `want` (ignored for unconditional rows).
BaseDescriptor table1_witness(const Table1Row& row, Relation want, Rng& rng);

/// Grows g to n vertices by uniform attachment of new vertices.
void attach_random_forest(WeightedGraph& g, std::size_t n, Rng& rng,
                          const std::function<Rational()>& weight);

/// Random tree on n vertices (uniform attachment).
WeightedGraph random_tree(std::size_t n, Rng& rng, const std::function<Rational()>& weight);

/// Copies g with labels 1..n assigned to a random permutation of its vertices,
/// inserted in label order.
WeightedGraph shuffle_labels(const WeightedGraph& g, Rng& rng);

}  // namespace winertia
