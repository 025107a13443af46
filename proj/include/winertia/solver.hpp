#pragma once

#include <string>
#include <utility>
#include <vector>

#include "winertia/closed_forms.hpp"
#include "winertia/graph.hpp"
#include "winertia/reduction.hpp"

namespace winertia {

enum class SolveMethod {
    Forest,
    CycleClosedForm,
    UnicyclicTypeI,
    UnicyclicTypeII,
    BicyclicTypeI,
    BicyclicTypeII,
    OracleFallback,
};

std::string_view to_string(SolveMethod m);

struct SolveOptions {
    /// Evaluate every ∞/θ representative by the oracle as well and throw
    /// std::logic_error on disagreement.
    bool cross_check = false;
};

struct SolveResult {
    Inertia inertia;
    ReductionTrace trace;
    /// One tag per connected component, in component order.
    std::vector<SolveMethod> methods;
    /// Closed-form rules used for ∞/θ bases along the way.
    std::vector<std::string> base_rules;

    void merge(const SolveResult& other);
};

/// Structural inertia: component split, then forest / unicyclic / bicyclic
/// decomposition. Components with two or more independent cycles beyond
/// bicyclic go to the oracle.
SolveResult solve(const WeightedGraph& g, const SolveOptions& opts = {});

/// Throws GraphError unless g is connected and unicyclic.
SolveResult solve_unicyclic(const WeightedGraph& g, const SolveOptions& opts = {});

/// Throws GraphError unless g is connected and bicyclic.
SolveResult solve_bicyclic(const WeightedGraph& g, const SolveOptions& opts = {});

/// A tree joined at `root` to k vertices of a disjoint graph `rest`.
struct JoinSpec {
    WeightedGraph tree;
    std::string root;
    WeightedGraph rest;
    /// (vertex of rest, weight of the edge root-vertex); 1 <= k <= |rest|.
    std::vector<std::pair<std::string, Rational>> links;
};

/// Throws GraphError on a malformed join (tree not a tree, overlapping labels,
/// unknown link targets, repeated links, k out of range).
WeightedGraph build_join(const JoinSpec& spec);

enum class JoinRule {
    MatchedRoot,     // In = In(tree) + In(rest)
    MismatchedRoot,  // In = In(tree - root) + In(rest + root)
};

struct JoinSplit {
    JoinRule rule;
    WeightedGraph first;
    WeightedGraph second;
};

/// Chooses the additive split of the joined graph from whether the root is
/// matched in the tree; In(join) = In(first) + In(second) on (i+, i-).
JoinSplit joining_decompose(const JoinSpec& spec);

}  // namespace winertia
