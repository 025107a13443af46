#include "winertia/testgen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace winertia {

Rational random_weight(Rng& rng) {
    std::uniform_int_distribution<int> num(1, 20), den(1, 10);
    const int k = num(rng);
    Rational w(k, den(rng));
    w.canonicalize();
    return w;
}

std::size_t BaseShape::vertices() const {
    return kind == BaseKind::Infinity ? p + q + l - 2 : p + l + q - 4;
}

std::vector<BaseShape> bicyclic_shapes(std::size_t max_vertices) {
    std::vector<BaseShape> out;
    for (std::size_t p = 3; p + 2 <= max_vertices; ++p) {
        for (std::size_t q = p; p + q - 1 <= max_vertices; ++q) {
            for (std::size_t l = 1; p + q + l - 2 <= max_vertices; ++l) {
                out.push_back({BaseKind::Infinity, p, l, q});
            }
        }
    }
    for (std::size_t p = 2; p <= max_vertices; ++p) {
        for (std::size_t l = std::max<std::size_t>(p, 3); p + 2 * l - 4 <= max_vertices; ++l) {
            for (std::size_t q = l; p + l + q - 4 <= max_vertices; ++q) {
                out.push_back({BaseKind::Theta, p, l, q});
            }
        }
    }
    return out;
}

BaseDescriptor make_base(BaseKind kind, std::size_t p, std::size_t l, std::size_t q,
                         const std::function<Rational()>& weight) {
    BaseDescriptor d;
    d.kind = kind;
    d.p = p;
    d.l = l;
    d.q = q;
    std::size_t next = 0;
    auto fresh = [&next] { return "b" + std::to_string(next++); };
    auto fill = [&](std::vector<Rational>& ws, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) ws.push_back(weight());
    };
    switch (kind) {
        case BaseKind::Cycle:
            for (std::size_t i = 0; i < p; ++i) d.a_path.push_back(fresh());
            fill(d.a, p);
            d.l = d.q = 0;
            break;
        case BaseKind::Infinity: {
            for (std::size_t i = 0; i < p; ++i) d.a_path.push_back(fresh());
            d.c_path.push_back(d.a_path[0]);
            for (std::size_t i = 1; i < l; ++i) d.c_path.push_back(fresh());
            d.b_path.push_back(d.c_path.back());
            for (std::size_t i = 1; i < q; ++i) d.b_path.push_back(fresh());
            fill(d.a, p);
            fill(d.c, l - 1);
            fill(d.b, q);
            break;
        }
        case BaseKind::Theta: {
            const std::string u = fresh(), v = fresh();
            auto path = [&](std::size_t len) {
                std::vector<std::string> out{u};
                for (std::size_t i = 2; i < len; ++i) out.push_back(fresh());
                out.push_back(v);
                return out;
            };
            d.a_path = path(p);
            d.c_path = path(q);
            d.b_path = path(l);
            fill(d.a, p - 1);
            fill(d.c, q - 1);
            fill(d.b, l - 1);
            break;
        }
    }
    d.validate();
    return d;
}

std::string branch_key(const BaseDescriptor& d) {
    const auto ev = evaluate_base(d);
    if (!ev.condition) return "";
    return ev.rule == "table1" ? ev.condition->id : ev.rule;
}

const std::vector<std::string>& equality_branches() {
    static const std::vector<std::string> ids{
        "cycle",         "table1(3,2,3)", "table1(3,4,3)", "table1(3,1,5)", "table1(3,3,5)",
        "table1(3,5,5)", "table1(5,2,5)", "table1(5,4,5)", "c4-join",       "theta(2,6,q)",
        "theta(3,3,q)",  "theta(4,4,q)",  "theta(5,5,q)",  "theta(2,4,3)",  "theta(2,4,5)",
    };
    return ids;
}

namespace {

Rational ratio(const CaseCondition& c) { return c.lhs / c.rhs; }

/// Sets x so that r1 * x^e lands on the requested side of 1.
Rational solve_monomial(const Rational& r1, int e, Relation want) {
    Rational x = e == 1 ? Rational(1 / r1) : r1;
    if (want == Relation::GT) x = e == 1 ? Rational(x * 2) : Rational(x / 2);
    if (want == Relation::LT) x = e == 1 ? Rational(x / 2) : Rational(x * 2);
    x.canonicalize();
    return x;
}

/// Exponent of x in `f(x)` if f(x) = K x^{+-1}, else 0.
template <typename F>
int monomial_exponent(F&& f) {
    const auto r1 = f(Rational(1));
    const auto r2 = f(Rational(2));
    const auto r3 = f(Rational(3));
    if (!r1 || !r2 || !r3) return 0;
    if (*r2 == *r1 * 2 && *r3 == *r1 * 3) return 1;
    if (*r2 * 2 == *r1 && *r3 * 3 == *r1) return -1;
    return 0;
}

}  // namespace

bool force_relation(BaseDescriptor& d, Relation want, Rng& rng) {
    const auto first = governing_condition(d);
    if (!first) return false;
    std::vector<std::pair<std::vector<Rational>*, std::size_t>> slots;
    for (auto* ws : {&d.a, &d.b, &d.c}) {
        for (std::size_t i = 0; i < ws->size(); ++i) slots.emplace_back(ws, i);
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    for (auto [ws, i] : slots) {
        const Rational saved = (*ws)[i];
        auto at = [&](const Rational& x) -> std::optional<Rational> {
            (*ws)[i] = x;
            const auto c = governing_condition(d);
            if (!c || c->id != first->id) return std::nullopt;
            return ratio(*c);
        };
        const int e = monomial_exponent(at);
        if (e == 0) {
            (*ws)[i] = saved;
            continue;
        }
        (*ws)[i] = solve_monomial(*at(Rational(1)), e, want);
        if (governing_condition(d)->relation() == want) return true;
        (*ws)[i] = saved;
    }
    return false;
}

bool force_cycle_relation(std::vector<Rational>& weights, Relation want, Rng& rng) {
    if (weights.empty()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
    const std::size_t i = pick(rng);
    auto at = [&](const Rational& x) -> std::optional<Rational> {
        weights[i] = x;
        return ratio(cycle_condition(weights));
    };
    const int e = monomial_exponent(at);
    if (e == 0) return false;
    weights[i] = solve_monomial(*at(Rational(1)), e, want);
    return cycle_condition(weights).relation() == want;
}

BaseDescriptor table1_witness(const Table1Row& row, Relation want, Rng& rng) {
    BaseDescriptor d =
        make_base(BaseKind::Infinity, row.p, row.l, row.q, [&rng] { return random_weight(rng); });
    if (row.conditional && !force_relation(d, want, rng)) {
        throw std::logic_error("table1_witness: cannot force " + d.name());
    }
    return d;
}

void attach_random_forest(WeightedGraph& g, std::size_t n, Rng& rng,
                          const std::function<Rational()>& weight) {
    std::size_t next = 0;
    while (g.order() < n) {
        std::string label;
        do {
            label = "t" + std::to_string(next++);
        } while (g.find(label));
        const std::size_t parent =
            g.order() == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng);
        const bool root = g.order() == 0;
        const auto v = g.add_vertex(label);
        if (!root) g.add_edge(parent, v, weight());
    }
}

WeightedGraph random_tree(std::size_t n, Rng& rng, const std::function<Rational()>& weight) {
    WeightedGraph g;
    attach_random_forest(g, n, rng, weight);
    return g;
}

WeightedGraph shuffle_labels(const WeightedGraph& g, Rng& rng) {
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    WeightedGraph out;
    std::vector<std::string> name(g.order());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        name[perm[k]] = std::to_string(k + 1);
        out.add_vertex(name[perm[k]]);
    }
    for (const auto& e : g.edges()) out.add_edge(name[e.u], name[e.v], e.weight);
    return out;
}

namespace {

std::vector<BaseShape> shapes_for_branch(std::size_t n, const std::string& branch) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::string>, std::vector<BaseShape>> memo;
    std::lock_guard lock(mu);
    const auto key = std::make_pair(n, branch);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<BaseShape> out;
    for (const auto& s : bicyclic_shapes(n)) {
        if (branch_key(make_base(s.kind, s.p, s.l, s.q, [] { return Rational(1); })) == branch) {
            out.push_back(s);
        }
    }
    memo.emplace(key, out);
    return out;
}

template <typename T>
const T& pick_one(const std::vector<T>& v, Rng& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

WeightedGraph generate(const GenSpec& spec) {
    Rng rng(spec.seed);
    const std::size_t n = spec.n;
    std::function<Rational()> weight = [&rng] { return random_weight(rng); };
    if (spec.regime == WeightRegime::UnitWeights) weight = [] { return Rational(1); };
    auto infeasible = [&](const std::string& why) {
        return std::invalid_argument("generate: " + why);
    };
    if (n == 0) throw infeasible("n must be at least 1");
    const bool force = spec.regime == WeightRegime::ForceEqualityBranch;

    switch (spec.target) {
        case GraphKind::Tree:
        case GraphKind::Forest: {
            if (force) throw infeasible("forests have no weight conditions to force");
            if (spec.target == GraphKind::Tree) return shuffle_labels(random_tree(n, rng, weight), rng);
            WeightedGraph g;
            const std::size_t extra_root =
                n > 1 ? std::uniform_int_distribution<std::size_t>(1, n - 1)(rng) : 0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto v = g.add_vertex("t" + std::to_string(i));
                const bool root = i == 0 || i == extra_root ||
                                  std::uniform_int_distribution<int>(0, 3)(rng) == 0;
                if (!root) {
                    g.add_edge(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), v, weight());
                }
            }
            return shuffle_labels(g, rng);
        }
        case GraphKind::Unicyclic: {
            if (n < 3) throw infeasible("a unicyclic graph needs at least 3 vertices");
            std::size_t len = std::uniform_int_distribution<std::size_t>(3, n)(rng);
            if (force) {
                if (spec.branch != "cycle") throw infeasible("unknown unicyclic branch " + spec.branch);
                if (n < 4) throw infeasible("the cycle branch needs a cycle of length 4k");
                len = 4 * std::uniform_int_distribution<std::size_t>(1, n / 4)(rng);
            }
            BaseDescriptor d = make_base(BaseKind::Cycle, len, 0, 0, weight);
            if (force && !force_cycle_relation(d.a, Relation::EQ, rng)) {
                throw std::logic_error("generate: could not force the cycle condition");
            }
            WeightedGraph g = d.to_graph();
            attach_random_forest(g, n, rng, weight);
            return shuffle_labels(g, rng);
        }
        case GraphKind::Bicyclic: {
            if (n < 4) throw infeasible("a bicyclic graph needs at least 4 vertices");
            const auto shapes = force ? shapes_for_branch(n, spec.branch) : bicyclic_shapes(n);
            if (shapes.empty()) {
                throw infeasible("no base for branch '" + spec.branch + "' within " +
                                 std::to_string(n) + " vertices");
            }
            const auto& s = pick_one(shapes, rng);
            BaseDescriptor d = make_base(s.kind, s.p, s.l, s.q, weight);
            if (force && !force_relation(d, Relation::EQ, rng)) {
                throw std::logic_error("generate: could not force " + spec.branch + " on " + d.name());
            }
            WeightedGraph g = d.to_graph();
            attach_random_forest(g, n, rng, weight);
            return shuffle_labels(g, rng);
        }
        default: throw infeasible("unsupported target class");
    }
}

}  // namespace winertia
