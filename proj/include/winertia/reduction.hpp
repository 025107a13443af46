#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "winertia/graph.hpp"

namespace winertia {

enum class ReductionRule { PendantPair, PathContract, ComponentSplit, TypeIDecompose, TypeIICut };

std::string_view to_string(ReductionRule r);

struct AddedEdge {
    std::string u;
    std::string v;
    Rational weight;

    friend bool operator==(const AddedEdge&, const AddedEdge&) = default;
};

/// Contribution to (i+, i-) of one rewrite.
struct SignOffset {
    std::size_t pos = 0;
    std::size_t neg = 0;

    SignOffset& operator+=(const SignOffset& o) {
        pos += o.pos;
        neg += o.neg;
        return *this;
    }
    friend SignOffset operator+(SignOffset a, const SignOffset& b) { return a += b; }
    friend bool operator==(const SignOffset&, const SignOffset&) = default;
};

struct ReductionStep {
    ReductionRule rule;
    std::vector<std::string> removed;
    std::vector<AddedEdge> added;
    SignOffset offset;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;

    SignOffset offset() const;
    void append(const ReductionTrace& other);
};

/// `rule removed=[a,b] added=[(u,v,w)] offset=(+p,+n)`, one step per line.
std::string serialize_trace(const ReductionTrace& trace);

struct Rewrite {
    WeightedGraph graph;
    SignOffset offset;
    ReductionStep step;
};

/// Removes pendant vertex v and its neighbour; offset (1, 1).
/// Throws GraphError if v is not pendant.
Rewrite delete_pendant_pair(const WeightedGraph& g, std::size_t v);

/// `path` lists six consecutive vertices x0..x5 whose interior x1..x4 all have
/// degree 2; with path weights a1..a5 the interior is replaced by an edge
/// x0-x5 of weight a1*a3*a5/(a2*a4). Offset (2, 2).
/// Throws GraphError if the path is not such a run or the new edge would be a
/// loop or parallel to an existing edge.
Rewrite contract_degree2_path(const WeightedGraph& g, std::span<const std::size_t> path);

/// Weight of the edge replacing a 5-edge path of degree-2 interior vertices.
Rational contracted_weight(std::span<const Rational, 5> path_weights);

/// Applies pendant-pair deletions (first pendant in vertex order) until none
/// remain, then one contraction, and repeats until neither rule applies.
/// In(g) = In(result) + trace offset on (i+, i-).
std::pair<WeightedGraph, ReductionTrace> reduce_to_core(const WeightedGraph& g);

}  // namespace winertia
