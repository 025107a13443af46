#include "winertia/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "winertia/matrix.hpp"
#include "winertia/structure.hpp"

namespace winertia {

std::string_view to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::Forest: return "Forest";
        case SolveMethod::CycleClosedForm: return "CycleClosedForm";
        case SolveMethod::UnicyclicTypeI: return "UnicyclicTypeI";
        case SolveMethod::UnicyclicTypeII: return "UnicyclicTypeII";
        case SolveMethod::BicyclicTypeI: return "BicyclicTypeI";
        case SolveMethod::BicyclicTypeII: return "BicyclicTypeII";
        case SolveMethod::OracleFallback: return "OracleFallback";
    }
    return "?";
}

void SolveResult::merge(const SolveResult& other) {
    inertia += other.inertia;
    trace.append(other.trace);
    methods.insert(methods.end(), other.methods.begin(), other.methods.end());
    base_rules.insert(base_rules.end(), other.base_rules.begin(), other.base_rules.end());
}

namespace {

void require_connected_class(const WeightedGraph& g, ComponentClass want, const char* who) {
    if (g.empty() || !is_connected(g) || classify_component(g.order(), g.size()) != want) {
        throw GraphError(std::string(who) + ": input is not a connected " +
                         std::string(to_string(want)) + " graph");
    }
}

std::vector<std::size_t> indices_of(const WeightedGraph& g, const WeightedGraph& sub) {
    std::vector<std::size_t> out;
    for (const auto& l : sub.labels()) out.push_back(g.index_of(l));
    return out;
}

ReductionStep split_step(ReductionRule rule, const WeightedGraph& removed, const Inertia& part) {
    return {rule, removed.labels(), {}, {part.pos, part.neg}};
}

const HangingTree* first_matched_root(const std::vector<HangingTree>& trees) {
    for (const auto& t : trees) {
        if (t.matched_at_root) {
            if (t.tree.order() < 2) throw std::logic_error("single-vertex hanging tree marked matched");
            return &t;
        }
    }
    return nullptr;
}

}  // namespace

SolveResult solve(const WeightedGraph& g, const SolveOptions& opts) {
    SolveResult out;
    const auto sets = component_vertex_sets(g);
    if (sets.size() > 1) {
        out.trace.steps.push_back({ReductionRule::ComponentSplit, {}, {}, {0, 0}});
    }
    for (const auto& set : sets) {
        const WeightedGraph h = g.induced(set);
        switch (classify_component(h.order(), h.size())) {
            case ComponentClass::Tree:
                out.merge({forest_inertia(h), {}, {SolveMethod::Forest}, {}});
                break;
            case ComponentClass::Unicyclic: out.merge(solve_unicyclic(h, opts)); break;
            case ComponentClass::Bicyclic: out.merge(solve_bicyclic(h, opts)); break;
            case ComponentClass::Unsupported:
                out.merge({inertia_oracle(h), {}, {SolveMethod::OracleFallback}, {}});
                break;
        }
    }
    out.inertia = Inertia::from_signs(out.inertia.pos, out.inertia.neg, g.order());
    return out;
}

SolveResult solve_unicyclic(const WeightedGraph& g, const SolveOptions&) {
    require_connected_class(g, ComponentClass::Unicyclic, "solve_unicyclic");
    const WeightedGraph core = two_core(g);
    const auto trees = hanging_trees(g, core);
    SolveResult out;

    if (const HangingTree* t = first_matched_root(trees)) {
        const WeightedGraph rest = g.without(indices_of(g, t->tree));
        if (!is_acyclic(rest)) {
            throw std::logic_error("unicyclic type I remainder is not acyclic");
        }
        const Inertia part = forest_inertia(t->tree);
        out.trace.steps.push_back(split_step(ReductionRule::TypeIDecompose, t->tree, part));
        out.inertia = part + forest_inertia(rest);
        out.methods = {SolveMethod::UnicyclicTypeI};
        return out;
    }

    const WeightedGraph forest = g.without(indices_of(g, core));
    const Inertia part = forest_inertia(forest);
    const BaseDescriptor cycle = describe_base(core);
    if (forest.order() > 0) {
        out.trace.steps.push_back(split_step(ReductionRule::TypeIICut, forest, part));
    }
    out.inertia = part + cycle_inertia(cycle.a);
    out.methods = {forest.order() == 0 ? SolveMethod::CycleClosedForm
                                       : SolveMethod::UnicyclicTypeII};
    return out;
}

SolveResult solve_bicyclic(const WeightedGraph& g, const SolveOptions& opts) {
    require_connected_class(g, ComponentClass::Bicyclic, "solve_bicyclic");
    const WeightedGraph core = two_core(g);
    const auto trees = hanging_trees(g, core);
    SolveResult out;

    if (const HangingTree* t = first_matched_root(trees)) {
        const WeightedGraph rest = g.without(indices_of(g, t->tree));
        for (auto c : classify(rest).components) {
            if (c != ComponentClass::Tree && c != ComponentClass::Unicyclic) {
                throw std::logic_error("bicyclic type I remainder has a non-unicyclic cycle component");
            }
        }
        const Inertia part = forest_inertia(t->tree);
        out.trace.steps.push_back(split_step(ReductionRule::TypeIDecompose, t->tree, part));
        const SolveResult sub = solve(rest, opts);
        out.inertia = part + sub.inertia;
        out.trace.append(sub.trace);
        out.base_rules = sub.base_rules;
        out.methods = {SolveMethod::BicyclicTypeI};
        return out;
    }

    const WeightedGraph forest = g.without(indices_of(g, core));
    const Inertia part = forest_inertia(forest);
    if (forest.order() > 0) {
        out.trace.steps.push_back(split_step(ReductionRule::TypeIICut, forest, part));
    }
    const BaseEvaluation ev = evaluate_base(describe_base(core), opts.cross_check);
    out.trace.append(ev.representative.trace);
    out.inertia = part + ev.inertia;
    out.methods = {SolveMethod::BicyclicTypeII};
    out.base_rules = {ev.rule};
    return out;
}

// --- k-joining -----------------------------------------------------------------

WeightedGraph build_join(const JoinSpec& spec) {
    const auto& t = spec.tree;
    if (t.empty() || !is_connected(t) || !is_acyclic(t)) {
        throw GraphError("build_join: first part is not a tree");
    }
    if (!t.find(spec.root)) throw GraphError("build_join: root is not a tree vertex");
    if (spec.links.empty() || spec.links.size() > spec.rest.order()) {
        throw GraphError("build_join: need 1 <= k <= |rest| links");
    }
    WeightedGraph g = t;
    for (const auto& l : spec.rest.labels()) {
        if (t.find(l)) throw GraphError("build_join: vertex '" + l + "' appears in both parts");
        g.add_vertex(l);
    }
    for (const auto& e : spec.rest.edges()) {
        g.add_edge(spec.rest.label(e.u), spec.rest.label(e.v), e.weight);
    }
    std::set<std::string> seen;
    for (const auto& [target, w] : spec.links) {
        if (!spec.rest.find(target)) {
            throw GraphError("build_join: link target '" + target + "' is not in rest");
        }
        if (!seen.insert(target).second) throw GraphError("build_join: repeated link " + target);
        g.add_edge(spec.root, target, w);
    }
    return g;
}

JoinSplit joining_decompose(const JoinSpec& spec) {
    const WeightedGraph g = build_join(spec);
    const auto root = spec.tree.index_of(spec.root);
    if (!is_mismatched(spec.tree, root)) {
        return {JoinRule::MatchedRoot, spec.tree, spec.rest};
    }
    const std::array<std::size_t, 1> drop{root};
    std::vector<std::size_t> rest_plus_root{g.index_of(spec.root)};
    for (const auto& l : spec.rest.labels()) rest_plus_root.push_back(g.index_of(l));
    return {JoinRule::MismatchedRoot, spec.tree.without(drop), g.induced(rest_plus_root)};
}

}  // namespace winertia
