#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "winertia/graph.hpp"
#include "winertia/reduction.hpp"
#include "winertia/structure.hpp"

namespace winertia {

enum class Relation { LT, EQ, GT };

std::string_view to_string(Relation r);

/// A weight condition `lhs ? rhs` that selects a closed-form branch. Both sides
/// are positive products and quotients of base weights.
struct CaseCondition {
    std::string id;
    Rational lhs;
    Rational rhs;

    Relation relation() const;
};

/// (q, q, n - 2q) for a forest with matching number q. Throws GraphError on a cycle.
Inertia forest_inertia(const WeightedGraph& g);

/// Inertia of the cycle with the given weights in cyclic order.
/// Throws std::invalid_argument for fewer than three weights.
Inertia cycle_inertia(std::span<const Rational> weights);

/// prod(a_1, a_3, ...) vs prod(a_2, a_4, ...); decides C_n for n = 0 mod 4.
CaseCondition cycle_condition(std::span<const Rational> weights);

struct Representative {
    BaseDescriptor base;
    /// Number of four-vertex contractions (k + s + t).
    std::size_t folds = 0;
    ReductionTrace trace;
};

/// Shrinks the cycles/paths of an ∞ or θ descriptor by four vertices at a time
/// (contracting from the junction / hub u inward) down to the closed-form
/// ranges: ∞ cycles to [3, 6] and the connector to [1, 5]; θ paths to [2, 5],
/// except that a path is left at 6 whenever shrinking it to 2 would create a
/// second hub-to-hub edge. Cycle descriptors are returned unchanged.
Representative reduce_representative(const BaseDescriptor& d);

struct BaseEvaluation {
    Inertia inertia;
    Representative representative;
    /// Which closed form evaluated the representative, e.g. "table1",
    /// "c4-join", "theta(3,3,q)", "oracle-fallback".
    std::string rule;
    std::optional<CaseCondition> condition;
    bool oracle_fallback = false;
};

/// Closed-form inertia of a cycle, ∞ or θ base. With `cross_check`, the
/// representative is also evaluated by the congruence oracle and a mismatch
/// throws std::logic_error.
BaseEvaluation evaluate_base(const BaseDescriptor& d, bool cross_check = false);

/// Throws std::invalid_argument unless d is a valid Infinity descriptor.
Inertia infinity_base_inertia(const BaseDescriptor& d);
/// Throws std::invalid_argument unless d is a valid Theta descriptor.
Inertia theta_base_inertia(const BaseDescriptor& d);

/// The first weight condition consulted when evaluating d, if any.
std::optional<CaseCondition> governing_condition(const BaseDescriptor& d);

/// One row of the ∞(p, l, q) table for p, q in {3, 5}, 1 <= l <= 5.
struct Table1Row {
    std::size_t p, l, q;
    bool conditional;
    /// (i+, i-) per branch, indexed by Relation (LT, EQ, GT); all three equal
    /// for unconditional rows.
    std::array<std::array<std::size_t, 2>, 3> values;
};

const std::vector<Table1Row>& table1_rows();

/// The row condition for an ∞ representative with p <= q, p, q in {3, 5};
/// nullopt for unconditional rows.
std::optional<CaseCondition> table1_condition(const BaseDescriptor& rep);

}  // namespace winertia
