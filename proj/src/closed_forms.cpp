#include "winertia/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "winertia/matrix.hpp"
#include "winertia/solver.hpp"

namespace winertia {

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::LT: return "<";
        case Relation::EQ: return "=";
        case Relation::GT: return ">";
    }
    return "?";
}

Relation CaseCondition::relation() const {
    const int c = cmp(lhs, rhs);
    return c < 0 ? Relation::LT : (c == 0 ? Relation::EQ : Relation::GT);
}

Inertia forest_inertia(const WeightedGraph& g) {
    const auto q = max_matching_forest(g);
    return Inertia::from_signs(q, q, g.order());
}

CaseCondition cycle_condition(std::span<const Rational> weights) {
    CaseCondition c{"cycle-alternating", 1, 1};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        (i % 2 == 0 ? c.lhs : c.rhs) *= weights[i];
    }
    return c;
}

Inertia cycle_inertia(std::span<const Rational> weights) {
    const std::size_t n = weights.size();
    if (n < 3) throw std::invalid_argument("cycle_inertia: a cycle needs at least 3 weights");
    switch (n % 4) {
        case 0:
            if (cycle_condition(weights).relation() == Relation::EQ) {
                return {n / 2 - 1, n / 2 - 1, 2};
            }
            return {n / 2, n / 2, 0};
        case 1: return {(n + 1) / 2, (n - 1) / 2, 0};
        case 2: return {n / 2, n / 2, 0};
        default: return {(n - 1) / 2, (n + 1) / 2, 0};
    }
}

namespace {

Inertia path_inertia(std::size_t vertices) {
    return Inertia::from_signs(vertices / 2, vertices / 2, vertices);
}

template <typename T>
std::vector<T> reversed(const std::vector<T>& v) {
    return {v.rbegin(), v.rend()};
}

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Contracts path[1..4] of a weighted path (weights[i] between path[i] and
/// path[i+1]; for a closed cycle the last weight wraps to path[0]).
void fold_front(std::vector<Rational>& weights, std::vector<std::string>& path,
                Representative& rep) {
    const std::array<Rational, 5> run{weights[0], weights[1], weights[2], weights[3], weights[4]};
    const Rational w = contracted_weight(run);
    ReductionStep step{ReductionRule::PathContract,
                       {path[1], path[2], path[3], path[4]},
                       {{path[0], path[5 % path.size()], w}},
                       {2, 2}};
    weights.erase(weights.begin(), weights.begin() + 4);
    weights[0] = w;
    path.erase(path.begin() + 1, path.begin() + 5);
    rep.trace.steps.push_back(std::move(step));
    ++rep.folds;
}

std::size_t theta_target(std::size_t len) { return len < 6 ? len : (len - 2) % 4 + 2; }

// --- ∞ representatives -----------------------------------------------------

struct Partial {
    std::size_t pos = 0, neg = 0;
    std::string rule;
    std::optional<CaseCondition> condition;
    bool fallback = false;
};

std::vector<std::size_t> indices_of(const WeightedGraph& g, const std::vector<std::string>& ls) {
    std::vector<std::size_t> out;
    for (const auto& l : ls) out.push_back(g.index_of(l));
    return out;
}

/// Lemma-style join of a C4 or C6 (one ∞ cycle) to the rest of the base.
Partial evaluate_cycle_join(const BaseDescriptor& rep, const std::vector<Rational>& cyc,
                            const std::vector<std::string>& cyc_path) {
    const WeightedGraph g = rep.to_graph();
    const auto all = indices_of(g, cyc_path);
    const std::vector<std::size_t> others(all.begin() + 1, all.end());
    const WeightedGraph rest = g.without(all);
    Partial out;
    if (cyc.size() == 6) {
        const auto in = solve(rest).inertia;
        out = {3 + in.pos, 3 + in.neg, "c6-join", std::nullopt, false};
        return out;
    }
    CaseCondition cond{"c4-join", cyc[0] * cyc[2], cyc[1] * cyc[3]};
    if (cond.relation() == Relation::EQ) {
        const auto in = solve(g.without(others)).inertia;
        out = {1 + in.pos, 1 + in.neg, "c4-join", cond, false};
    } else {
        const auto in = solve(rest).inertia;
        out = {2 + in.pos, 2 + in.neg, "c4-join", cond, false};
    }
    return out;
}

Partial evaluate_infinity_rep(const BaseDescriptor& rep) {
    if (rep.p == 4 || rep.p == 6) return evaluate_cycle_join(rep, rep.a, rep.a_path);
    if (rep.q == 4 || rep.q == 6) return evaluate_cycle_join(rep, rep.b, rep.b_path);

    const auto& rows = table1_rows();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Table1Row& r) {
        return r.p == rep.p && r.l == rep.l && r.q == rep.q;
    });
    if (it == rows.end()) throw std::logic_error("no table row for " + rep.name());
    Partial out;
    out.rule = "table1";
    std::size_t branch = static_cast<std::size_t>(Relation::EQ);
    if (it->conditional) {
        out.condition = table1_condition(rep);
        branch = static_cast<std::size_t>(out.condition->relation());
    }
    out.pos = it->values[branch][0];
    out.neg = it->values[branch][1];
    return out;
}

// --- θ representatives -----------------------------------------------------

struct Slot {
    std::size_t len;
    const std::vector<Rational>* w;
};

Partial evaluate_theta_rep(const BaseDescriptor& rep) {
    std::array<Slot, 3> slots{Slot{rep.p, &rep.a}, Slot{rep.l, &rep.b}, Slot{rep.q, &rep.c}};
    auto find_len = [&](std::size_t len, int skip = -1) -> int {
        for (int i = 0; i < 3; ++i) {
            if (i != skip && slots[i].len == len) return i;
        }
        return -1;
    };
    auto third = [](int i, int j) { return 3 - i - j; };
    Partial out;

    // θ(2, 6, q): the 6-path folds onto the hub edge.
    if (int s6 = find_len(6); s6 >= 0) {
        const int s2 = find_len(2);
        if (s2 < 0) throw std::logic_error("θ representative with a 6-path but no 2-path");
        const auto& a = *slots[s2].w;
        const auto& b = *slots[s6].w;
        const auto& c = *slots[third(s2, s6)].w;
        std::vector<Rational> cyc{a[0] + b[0] * b[2] * b[4] / (b[1] * b[3])};
        cyc = concat(cyc, reversed(c));
        const auto in = cycle_inertia(cyc);
        out = {2 + in.pos, 2 + in.neg, "theta(2,6,q)", std::nullopt, false};
        if (cyc.size() % 4 == 0) out.condition = cycle_condition(cyc);
        return out;
    }

    // Two paths of equal length 3, 4 or 5.
    for (int i = 0; i < 3; ++i) {
        const int j = find_len(slots[i].len, i);
        if (j < 0 || j < i || slots[i].len < 3) continue;
        const auto& a = *slots[i].w;
        const auto& b = *slots[j].w;
        const Slot other = slots[third(i, j)];
        const auto& c = *other.w;
        switch (slots[i].len) {
            case 3: {
                CaseCondition cond{"theta(3,3,q)", a[0] * b[1], a[1] * b[0]};
                if (cond.relation() == Relation::EQ) {
                    const auto in = cycle_inertia(concat(a, reversed(c)));
                    out = {in.pos, in.neg, "theta(3,3,q)", cond, false};
                } else {
                    const auto in = path_inertia(other.len - 2);
                    out = {2 + in.pos, 2 + in.neg, "theta(3,3,q)", cond, false};
                }
                return out;
            }
            case 4: {
                std::vector<Rational> cyc = a;
                cyc[2] = a[2] + b[0] * a[1] * b[2] / (a[0] * b[1]);
                cyc = concat(cyc, reversed(c));
                const auto in = cycle_inertia(cyc);
                out = {1 + in.pos, 1 + in.neg, "theta(4,4,q)", std::nullopt, false};
                if (cyc.size() % 4 == 0) out.condition = cycle_condition(cyc);
                return out;
            }
            case 5: {
                CaseCondition cond{"theta(5,5,q)", a[0] * b[1] * a[2] * b[3],
                                   b[0] * a[1] * b[2] * a[3]};
                if (cond.relation() == Relation::EQ) {
                    const auto in = cycle_inertia(concat(a, reversed(c)));
                    out = {1 + in.pos, 1 + in.neg, "theta(5,5,q)", cond, false};
                } else {
                    const auto in = path_inertia(other.len + 2);
                    out = {2 + in.pos, 2 + in.neg, "theta(5,5,q)", cond, false};
                }
                return out;
            }
            default: break;
        }
    }

    // Three distinct lengths.
    const int s2 = find_len(2), s3 = find_len(3), s4 = find_len(4), s5 = find_len(5);
    if (s2 >= 0 && s4 >= 0 && (s3 >= 0 || s5 >= 0)) {
        const auto& a = *slots[s2].w;
        const auto& b = *slots[s4].w;
        CaseCondition cond{s3 >= 0 ? "theta(2,4,3)" : "theta(2,4,5)", a[0] * b[1], b[0] * b[2]};
        const auto r = cond.relation();
        if (s3 >= 0) {
            out.pos = r == Relation::LT ? 3 : 2;
            out.neg = r == Relation::GT ? 3 : 2;
        } else {
            out.pos = r == Relation::GT ? 4 : 3;
            out.neg = r == Relation::LT ? 4 : 3;
        }
        out.rule = cond.id;
        out.condition = cond;
        return out;
    }
    if (s2 >= 0 && s3 >= 0 && s5 >= 0) return {3, 3, "theta(2,3,5)", std::nullopt, false};
    if (s3 >= 0 && s4 >= 0 && s5 >= 0) return {4, 4, "theta(3,4,5)", std::nullopt, false};

    const auto in = inertia_oracle(rep.to_graph());
    return {in.pos, in.neg, "oracle-fallback", std::nullopt, true};
}

}  // namespace

Representative reduce_representative(const BaseDescriptor& d) {
    d.validate();
    Representative rep{d, 0, {}};
    auto& b = rep.base;
    switch (d.kind) {
        case BaseKind::Cycle: break;
        case BaseKind::Infinity:
            while (b.p > 6) {
                fold_front(b.a, b.a_path, rep);
                b.p -= 4;
            }
            while (b.q > 6) {
                fold_front(b.b, b.b_path, rep);
                b.q -= 4;
            }
            while (b.l > 5) {
                fold_front(b.c, b.c_path, rep);
                b.l -= 4;
            }
            if (b.p > b.q) {
                std::swap(b.p, b.q);
                std::swap(b.a, b.b);
                std::swap(b.a_path, b.b_path);
                b.c = reversed(b.c);
                b.c_path = reversed(b.c_path);
            }
            break;
        case BaseKind::Theta: {
            std::array<std::size_t*, 3> len{&b.p, &b.l, &b.q};
            std::array<std::size_t, 3> target{};
            bool original_two = false;
            for (int i = 0; i < 3; ++i) {
                target[i] = theta_target(*len[i]);
                original_two = original_two || *len[i] == 2;
            }
            bool two_taken = original_two;
            for (int i = 0; i < 3; ++i) {
                if (target[i] != 2 || *len[i] == 2) continue;
                if (two_taken) target[i] = 6;
                two_taken = true;
            }
            std::array<std::vector<Rational>*, 3> ws{&b.a, &b.b, &b.c};
            std::array<std::vector<std::string>*, 3> paths{&b.a_path, &b.b_path, &b.c_path};
            for (int i = 0; i < 3; ++i) {
                while (*len[i] > target[i]) {
                    fold_front(*ws[i], *paths[i], rep);
                    *len[i] -= 4;
                }
            }
            break;
        }
    }
    return rep;
}

BaseEvaluation evaluate_base(const BaseDescriptor& d, bool cross_check) {
    BaseEvaluation ev;
    ev.representative = reduce_representative(d);
    const auto& rep = ev.representative.base;
    const std::size_t n = d.vertex_count();

    Partial part;
    switch (d.kind) {
        case BaseKind::Cycle: {
            const auto in = cycle_inertia(d.a);
            part = {in.pos, in.neg, "cycle", std::nullopt, false};
            if (d.p % 4 == 0) part.condition = cycle_condition(d.a);
            break;
        }
        case BaseKind::Infinity: part = evaluate_infinity_rep(rep); break;
        case BaseKind::Theta: part = evaluate_theta_rep(rep); break;
    }
    if (cross_check && !part.fallback) {
        const auto oracle = inertia_oracle(rep.to_graph());
        if (oracle.pos != part.pos || oracle.neg != part.neg) {
            throw std::logic_error("closed form for " + rep.name() + " (" + part.rule +
                                   ") disagrees with the oracle: got " + std::to_string(part.pos) +
                                   "," + std::to_string(part.neg) + ", oracle " +
                                   to_string(oracle));
        }
    }
    const std::size_t extra = 2 * ev.representative.folds;
    ev.inertia = Inertia::from_signs(part.pos + extra, part.neg + extra, n);
    ev.rule = std::move(part.rule);
    ev.condition = std::move(part.condition);
    ev.oracle_fallback = part.fallback;
    return ev;
}

Inertia infinity_base_inertia(const BaseDescriptor& d) {
    if (d.kind != BaseKind::Infinity) throw std::invalid_argument("not an infinity descriptor");
    return evaluate_base(d).inertia;
}

Inertia theta_base_inertia(const BaseDescriptor& d) {
    if (d.kind != BaseKind::Theta) throw std::invalid_argument("not a theta descriptor");
    return evaluate_base(d).inertia;
}

std::optional<CaseCondition> governing_condition(const BaseDescriptor& d) {
    return evaluate_base(d).condition;
}

const std::vector<Table1Row>& table1_rows() {
    using R = Table1Row;
    // values: {LT, EQ, GT}
    static const std::vector<Table1Row> rows{
        R{3, 1, 3, false, {{{2, 3}, {2, 3}, {2, 3}}}},
        R{3, 2, 3, true, {{{3, 3}, {2, 3}, {2, 4}}}},
        R{3, 3, 3, false, {{{3, 4}, {3, 4}, {3, 4}}}},
        R{3, 4, 3, true, {{{4, 4}, {3, 4}, {3, 5}}}},
        R{3, 5, 3, false, {{{4, 5}, {4, 5}, {4, 5}}}},
        R{3, 1, 5, true, {{{4, 3}, {3, 3}, {3, 4}}}},
        R{3, 2, 5, false, {{{4, 4}, {4, 4}, {4, 4}}}},
        R{3, 3, 5, true, {{{5, 4}, {4, 4}, {4, 5}}}},
        R{3, 4, 5, false, {{{5, 5}, {5, 5}, {5, 5}}}},
        R{3, 5, 5, true, {{{6, 5}, {5, 5}, {5, 6}}}},
        R{5, 1, 5, false, {{{5, 4}, {5, 4}, {5, 4}}}},
        R{5, 2, 5, true, {{{5, 5}, {5, 4}, {6, 4}}}},
        R{5, 3, 5, false, {{{6, 5}, {6, 5}, {6, 5}}}},
        R{5, 4, 5, true, {{{6, 6}, {6, 5}, {7, 5}}}},
        R{5, 5, 5, false, {{{7, 6}, {7, 6}, {7, 6}}}},
    };
    return rows;
}

std::optional<CaseCondition> table1_condition(const BaseDescriptor& rep) {
    const auto& a = rep.a;
    const auto& b = rep.b;
    const auto& c = rep.c;
    auto sq = [](const Rational& x) { return Rational(x * x); };
    const std::string id = "table1" + rep.name().substr(std::string("infinity").size());
    if (rep.p == rep.q) {
        // Both cycles of length 3 or 5: 4 * prod(odd a, odd b) / prod(even a, even b).
        Rational alt = 4;
        for (std::size_t i = 0; i < rep.p; ++i) {
            if (i % 2 == 0) {
                alt *= a[i] * b[i];
            } else {
                alt /= a[i] * b[i];
            }
        }
        if (rep.l == 2) return CaseCondition{id, alt, sq(c[0])};
        if (rep.l == 4) return CaseCondition{id, alt * sq(c[1]), sq(c[0]) * sq(c[2])};
        return std::nullopt;
    }
    // p = 3, q = 5.
    const Rational x = a[0] * a[2] / a[1];
    const Rational y = b[0] * b[2] * b[4] / (b[1] * b[3]);
    if (rep.l == 1) return CaseCondition{id, x, y};
    if (rep.l == 3) return CaseCondition{id, x * sq(c[1]), y * sq(c[0])};
    if (rep.l == 5) return CaseCondition{id, x * sq(c[1]) * sq(c[3]), y * sq(c[0]) * sq(c[2])};
    return std::nullopt;
}

}  // namespace winertia
