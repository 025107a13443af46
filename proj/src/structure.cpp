#include "winertia/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace winertia {

std::size_t max_matching_forest(const WeightedGraph& g) {
    if (!is_acyclic(g)) throw GraphError("max_matching_forest: input contains a cycle");
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::deque<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.push_back(v);
    }

    std::size_t matched = 0;
    while (!leaves.empty()) {
        const auto v = leaves.front();
        leaves.pop_front();
        if (removed[v] || deg[v] != 1) continue;
        std::size_t u = n;
        for (const auto& [w, _] : g.neighbors(v)) {
            if (!removed[w]) {
                u = w;
                break;
            }
        }
        ++matched;
        removed[v] = removed[u] = 1;
        for (const auto& [x, _] : g.neighbors(u)) {
            if (removed[x]) continue;
            if (--deg[x] == 1) leaves.push_back(x);
        }
    }
    return matched;
}

bool is_mismatched(const WeightedGraph& t, std::size_t v) {
    if (v >= t.order()) throw GraphError("is_mismatched: vertex not in tree");
    if (!is_connected(t) || !is_acyclic(t)) throw GraphError("is_mismatched: input is not a tree");
    if (t.order() == 1) return true;
    const std::array<std::size_t, 1> drop{v};
    return max_matching_forest(t.without(drop)) == max_matching_forest(t);
}

WeightedGraph two_core(const WeightedGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (removed[v]) continue;
        removed[v] = 1;
        for (const auto& [w, _] : g.neighbors(v)) {
            if (!removed[w] && --deg[w] == 1) stack.push_back(w);
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v]) keep.push_back(v);
    }
    if (keep.empty()) throw GraphError("two_core: graph is a forest");
    return g.induced(keep);
}

// --- base descriptors --------------------------------------------------------

std::string_view to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Cycle: return "cycle";
        case BaseKind::Infinity: return "infinity";
        case BaseKind::Theta: return "theta";
    }
    return "?";
}

std::size_t BaseDescriptor::vertex_count() const {
    switch (kind) {
        case BaseKind::Cycle: return p;
        case BaseKind::Infinity: return p + q + l - 2;
        case BaseKind::Theta: return p + l + q - 4;
    }
    return 0;
}

std::string BaseDescriptor::name() const {
    const std::string head(to_string(kind));
    if (kind == BaseKind::Cycle) return head + "(" + std::to_string(p) + ")";
    return head + "(" + std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(q) +
           ")";
}

void BaseDescriptor::validate() const {
    auto fail = [this](const std::string& why) {
        throw std::invalid_argument("invalid " + name() + " descriptor: " + why);
    };
    for (const auto* ws : {&a, &b, &c}) {
        for (const auto& w : *ws) {
            if (sgn(w) <= 0) fail("non-positive weight");
        }
    }
    switch (kind) {
        case BaseKind::Cycle:
            if (p < 3) fail("cycle shorter than 3");
            if (a.size() != p || a_path.size() != p) fail("weight/vertex count mismatch");
            break;
        case BaseKind::Infinity:
            if (p < 3 || q < 3 || l < 1) fail("parameters out of range");
            if (a.size() != p || b.size() != q || c.size() != l - 1) fail("weight count mismatch");
            if (a_path.size() != p || b_path.size() != q || c_path.size() != l) {
                fail("vertex count mismatch");
            }
            if (c_path.front() != a_path.front() || c_path.back() != b_path.front()) {
                fail("connecting path does not join the junctions");
            }
            break;
        case BaseKind::Theta: {
            if (std::min({p, l, q}) < 2) fail("path shorter than 2");
            if ((p == 2) + (l == 2) + (q == 2) > 1) fail("more than one path of length 2");
            if (a.size() != p - 1 || b.size() != l - 1 || c.size() != q - 1) {
                fail("weight count mismatch");
            }
            if (a_path.size() != p || b_path.size() != l || c_path.size() != q) {
                fail("vertex count mismatch");
            }
            for (const auto* path : {&b_path, &c_path}) {
                if (path->front() != a_path.front() || path->back() != a_path.back()) {
                    fail("paths do not share hubs");
                }
            }
            break;
        }
    }
}

WeightedGraph BaseDescriptor::to_graph() const {
    WeightedGraph g;
    for (const auto& v : a_path) g.add_vertex(v);
    for (const auto& v : c_path) g.add_vertex(v);
    for (const auto& v : b_path) g.add_vertex(v);

    auto add_path = [&g](const std::vector<std::string>& path, const std::vector<Rational>& ws,
                         bool closed) {
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const auto& next = (closed && i + 1 == path.size()) ? path.front() : path.at(i + 1);
            g.add_edge(path[i], next, ws[i]);
        }
    };
    switch (kind) {
        case BaseKind::Cycle: add_path(a_path, a, true); break;
        case BaseKind::Infinity:
            add_path(a_path, a, true);
            add_path(c_path, c, false);
            add_path(b_path, b, true);
            break;
        case BaseKind::Theta:
            add_path(a_path, a, false);
            add_path(b_path, b, false);
            add_path(c_path, c, false);
            break;
    }
    return g;
}

namespace {

/// A walk from `start` through degree-2 vertices up to the first vertex of
/// another degree (or back to start). verts includes both ends.
struct Walk {
    std::vector<std::size_t> verts;
    std::vector<Rational> weights;

    std::size_t end() const { return verts.back(); }

    Walk reversed() const {
        return {{verts.rbegin(), verts.rend()}, {weights.rbegin(), weights.rend()}};
    }
};

Walk walk_from(const WeightedGraph& g, std::size_t start, std::size_t first) {
    Walk w{{start}, {g.weight(start, first)}};
    std::size_t prev = start, cur = first;
    while (cur != start && g.degree(cur) == 2) {
        w.verts.push_back(cur);
        std::size_t next = prev;
        for (const auto& [x, _] : g.neighbors(cur)) {
            if (x != prev) next = x;
        }
        w.weights.push_back(g.weight(cur, next));
        prev = cur;
        cur = next;
    }
    w.verts.push_back(cur);
    return w;
}

/// Loop rooted at `junction`, oriented to minimize the weight word.
/// Returns (vertices starting at the junction, weights).
std::pair<std::vector<std::size_t>, std::vector<Rational>> canonical_loop(const Walk& loop) {
    Walk fwd = loop;
    Walk bwd = loop.reversed();
    const Walk& best = bwd.weights < fwd.weights ? bwd : fwd;
    std::vector<std::size_t> verts(best.verts.begin(), best.verts.end() - 1);
    return {verts, best.weights};
}

std::vector<std::string> labels_of(const WeightedGraph& g, const std::vector<std::size_t>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

BaseDescriptor describe_cycle(const WeightedGraph& core) {
    const std::size_t start = 0;
    auto nbrs = core.neighbors(start).begin();
    const auto first = nbrs->first;
    const auto second = std::next(nbrs)->first;
    const Walk fwd = walk_from(core, start, first);
    const Walk bwd = walk_from(core, start, second);
    const Walk& best = bwd.weights < fwd.weights ? bwd : fwd;

    BaseDescriptor d;
    d.kind = BaseKind::Cycle;
    d.p = core.order();
    d.a = best.weights;
    d.a_path = labels_of(core, {best.verts.begin(), best.verts.end() - 1});
    return d;
}

BaseDescriptor describe_infinity(const WeightedGraph& core, const Walk& loop_x, const Walk& loop_y,
                                 const Walk& bridge) {
    struct Candidate {
        std::vector<std::size_t> a_verts, b_verts;
        std::vector<Rational> a, b;
        Walk bridge;
    };
    auto make = [](const Walk& first, const Walk& second, Walk path) {
        auto [av, aw] = canonical_loop(first);
        auto [bv, bw] = canonical_loop(second);
        return Candidate{std::move(av), std::move(bv), std::move(aw), std::move(bw),
                         std::move(path)};
    };
    Candidate best = make(loop_x, loop_y, bridge);
    const std::size_t px = loop_x.weights.size(), py = loop_y.weights.size();
    if (px > py) {
        best = make(loop_y, loop_x, bridge.reversed());
    } else if (px == py) {
        Candidate alt = make(loop_y, loop_x, bridge.reversed());
        auto key = [](const Candidate& c) { return std::tie(c.a, c.bridge.weights, c.b); };
        if (key(alt) < key(best)) best = std::move(alt);
    }

    BaseDescriptor d;
    d.kind = BaseKind::Infinity;
    d.p = best.a.size();
    d.q = best.b.size();
    d.a = std::move(best.a);
    d.b = std::move(best.b);
    d.a_path = labels_of(core, best.a_verts);
    d.b_path = labels_of(core, best.b_verts);
    if (best.bridge.verts.size() == 1) {
        d.l = 1;
        d.c_path = {d.a_path.front()};
    } else {
        d.l = best.bridge.verts.size();
        d.c = best.bridge.weights;
        d.c_path = labels_of(core, best.bridge.verts);
    }
    return d;
}

BaseDescriptor describe_theta(const WeightedGraph& core, const std::array<Walk, 3>& walks) {
    std::optional<std::array<Walk, 3>> best;
    auto less = [](const std::array<Walk, 3>& x, const std::array<Walk, 3>& y) {
        return std::tie(x[0].weights, x[1].weights, x[2].weights) <
               std::tie(y[0].weights, y[1].weights, y[2].weights);
    };
    std::array<int, 3> perm{0, 1, 2};
    do {
        for (int flip = 0; flip < 2; ++flip) {
            std::array<Walk, 3> cand;
            for (int i = 0; i < 3; ++i) {
                cand[i] = flip ? walks[perm[i]].reversed() : walks[perm[i]];
            }
            if (!(cand[0].weights.size() <= cand[1].weights.size() &&
                  cand[1].weights.size() <= cand[2].weights.size())) {
                continue;
            }
            if (!best || less(cand, *best)) best = std::move(cand);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    BaseDescriptor d;
    d.kind = BaseKind::Theta;
    const auto& w = *best;
    d.p = w[0].verts.size();
    d.l = w[1].verts.size();
    d.q = w[2].verts.size();
    d.a = w[0].weights;
    d.b = w[1].weights;
    d.c = w[2].weights;
    d.a_path = labels_of(core, w[0].verts);
    d.b_path = labels_of(core, w[1].verts);
    d.c_path = labels_of(core, w[2].verts);
    return d;
}

}  // namespace

BaseDescriptor describe_base(const WeightedGraph& core) {
    if (core.order() < 3 || !is_connected(core)) {
        throw GraphError("describe_base: core is not a connected cycle, infinity or theta graph");
    }
    std::vector<std::size_t> branch;  // vertices of degree > 2
    for (std::size_t v = 0; v < core.order(); ++v) {
        const auto d = core.degree(v);
        if (d < 2) throw GraphError("describe_base: core has a vertex of degree < 2");
        if (d > 2) branch.push_back(v);
    }

    BaseDescriptor d;
    if (branch.empty()) {
        d = describe_cycle(core);
    } else if (branch.size() == 1 && core.degree(branch[0]) == 4) {
        const auto x = branch[0];
        std::vector<Walk> loops;
        std::unordered_set<std::size_t> used;
        for (const auto& [nb, _] : core.neighbors(x)) {
            if (used.contains(nb)) continue;
            Walk w = walk_from(core, x, nb);
            if (w.end() != x) throw GraphError("describe_base: unexpected branch structure");
            used.insert(w.verts[1]);
            used.insert(w.verts[w.verts.size() - 2]);
            loops.push_back(std::move(w));
        }
        if (loops.size() != 2) throw GraphError("describe_base: unexpected branch structure");
        d = describe_infinity(core, loops[0], loops[1], Walk{{x}, {}});
    } else if (branch.size() == 2 && core.degree(branch[0]) == 3 && core.degree(branch[1]) == 3) {
        const auto x = branch[0], y = branch[1];
        std::vector<Walk> to_y;
        std::optional<Walk> loop_x;
        for (const auto& [nb, _] : core.neighbors(x)) {
            Walk w = walk_from(core, x, nb);
            if (w.end() == y) {
                to_y.push_back(std::move(w));
            } else if (w.end() == x) {
                if (!loop_x) loop_x = std::move(w);
            } else {
                throw GraphError("describe_base: unexpected branch structure");
            }
        }
        if (to_y.size() == 3) {
            d = describe_theta(core, {to_y[0], to_y[1], to_y[2]});
        } else if (to_y.size() == 1 && loop_x) {
            std::optional<Walk> loop_y;
            for (const auto& [nb, _] : core.neighbors(y)) {
                Walk w = walk_from(core, y, nb);
                if (w.end() == y) {
                    loop_y = std::move(w);
                    break;
                }
            }
            if (!loop_y) throw GraphError("describe_base: unexpected branch structure");
            d = describe_infinity(core, *loop_x, *loop_y, to_y[0]);
        } else {
            throw GraphError("describe_base: unexpected branch structure");
        }
    } else {
        throw GraphError("describe_base: core is not a cycle, infinity or theta graph");
    }
    if (d.vertex_count() != core.order()) {
        throw GraphError("describe_base: core has vertices outside the recognized shape");
    }
    d.validate();
    return d;
}

std::vector<HangingTree> hanging_trees(const WeightedGraph& g, const WeightedGraph& core) {
    std::vector<char> in_core(g.order(), 0);
    for (const auto& label : core.labels()) in_core[g.index_of(label)] = 1;

    std::vector<HangingTree> out;
    for (const auto& label : core.labels()) {
        const auto root = g.index_of(label);
        std::vector<std::size_t> members{root};
        std::vector<char> seen(g.order(), 0);
        seen[root] = 1;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (const auto& [w, _] : g.neighbors(members[head])) {
                if (seen[w] || in_core[w]) continue;
                seen[w] = 1;
                members.push_back(w);
            }
        }
        HangingTree ht;
        ht.root = label;
        ht.tree = g.induced(members);
        ht.matched_at_root = !is_mismatched(ht.tree, ht.tree.index_of(label));
        out.push_back(std::move(ht));
    }
    return out;
}

}  // namespace winertia
