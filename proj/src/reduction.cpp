#include "winertia/reduction.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace winertia {

std::string_view to_string(ReductionRule r) {
    switch (r) {
        case ReductionRule::PendantPair: return "PendantPair";
        case ReductionRule::PathContract: return "PathContract";
        case ReductionRule::ComponentSplit: return "ComponentSplit";
        case ReductionRule::TypeIDecompose: return "TypeIDecompose";
        case ReductionRule::TypeIICut: return "TypeIICut";
    }
    return "?";
}

SignOffset ReductionTrace::offset() const {
    SignOffset total;
    for (const auto& s : steps) total += s.offset;
    return total;
}

void ReductionTrace::append(const ReductionTrace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

std::string serialize_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    for (const auto& s : trace.steps) {
        out << to_string(s.rule) << " removed=[";
        for (std::size_t i = 0; i < s.removed.size(); ++i) out << (i ? "," : "") << s.removed[i];
        out << "] added=[";
        for (std::size_t i = 0; i < s.added.size(); ++i) {
            const auto& e = s.added[i];
            out << (i ? "," : "") << '(' << e.u << ',' << e.v << ',' << to_string(e.weight) << ')';
        }
        out << "] offset=(+" << s.offset.pos << ",+" << s.offset.neg << ")\n";
    }
    return out.str();
}

Rewrite delete_pendant_pair(const WeightedGraph& g, std::size_t v) {
    if (v >= g.order() || g.degree(v) != 1) {
        throw GraphError("delete_pendant_pair: vertex is not pendant");
    }
    const std::size_t u = g.neighbors(v).begin()->first;
    const std::array<std::size_t, 2> drop{v, u};
    Rewrite r{g.without(drop), {1, 1}, {}};
    r.step = {ReductionRule::PendantPair, {g.label(v), g.label(u)}, {}, r.offset};
    return r;
}

Rational contracted_weight(std::span<const Rational, 5> w) {
    Rational out = w[0] * w[2] * w[4] / (w[1] * w[3]);
    out.canonicalize();
    return out;
}

Rewrite contract_degree2_path(const WeightedGraph& g, std::span<const std::size_t> path) {
    if (path.size() != 6) throw GraphError("contract_degree2_path: path must have six vertices");
    for (auto v : path) {
        if (v >= g.order()) throw GraphError("contract_degree2_path: unknown vertex");
    }
    std::array<std::size_t, 6> sorted{};
    std::copy(path.begin(), path.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw GraphError("contract_degree2_path: new edge would be a loop or path repeats a vertex");
    }
    for (std::size_t i = 1; i <= 4; ++i) {
        if (g.degree(path[i]) != 2) {
            throw GraphError("contract_degree2_path: interior vertex " + g.label(path[i]) +
                             " does not have degree 2");
        }
    }
    std::array<Rational, 5> w;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!g.has_edge(path[i], path[i + 1])) {
            throw GraphError("contract_degree2_path: vertices are not consecutive on a path");
        }
        w[i] = g.weight(path[i], path[i + 1]);
    }
    if (g.has_edge(path[0], path[5])) {
        throw GraphError("contract_degree2_path: new edge would duplicate " + g.label(path[0]) +
                         "-" + g.label(path[5]));
    }

    const Rational weight = contracted_weight(w);
    Rewrite r{g.without(path.subspan(1, 4)), {2, 2}, {}};
    r.graph.add_edge(g.label(path[0]), g.label(path[5]), weight);
    r.step = {ReductionRule::PathContract,
              {g.label(path[1]), g.label(path[2]), g.label(path[3]), g.label(path[4])},
              {{g.label(path[0]), g.label(path[5]), weight}},
              r.offset};
    return r;
}

namespace {

std::optional<std::size_t> first_pendant(const WeightedGraph& g) {
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) return v;
    }
    return std::nullopt;
}

/// First contractible run, scanning start vertices in index order and then
/// their neighbours in index order as direction.
std::optional<std::array<std::size_t, 6>> first_contractible_run(const WeightedGraph& g) {
    for (std::size_t x1 = 0; x1 < g.order(); ++x1) {
        if (g.degree(x1) != 2) continue;
        for (const auto& [dir, _] : g.neighbors(x1)) {
            std::array<std::size_t, 6> run{};
            run[1] = x1;
            run[2] = dir;
            for (const auto& [other, _w] : g.neighbors(x1)) {
                if (other != dir) run[0] = other;
            }
            bool ok = true;
            for (std::size_t i = 2; i <= 4 && ok; ++i) {
                if (g.degree(run[i]) != 2) {
                    ok = false;
                    break;
                }
                std::size_t next = run[i - 1];
                for (const auto& [x, _w] : g.neighbors(run[i])) {
                    if (x != run[i - 1]) next = x;
                }
                run[i + 1] = next;
            }
            if (!ok) continue;
            auto sorted = run;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            if (g.has_edge(run[0], run[5])) continue;
            return run;
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<WeightedGraph, ReductionTrace> reduce_to_core(const WeightedGraph& g) {
    WeightedGraph cur = g;
    ReductionTrace trace;
    while (true) {
        if (auto v = first_pendant(cur)) {
            auto r = delete_pendant_pair(cur, *v);
            trace.steps.push_back(std::move(r.step));
            cur = std::move(r.graph);
            continue;
        }
        if (auto run = first_contractible_run(cur)) {
            auto r = contract_degree2_path(cur, *run);
            trace.steps.push_back(std::move(r.step));
            cur = std::move(r.graph);
            continue;
        }
        break;
    }
    return {std::move(cur), std::move(trace)};
}

}  // namespace winertia
