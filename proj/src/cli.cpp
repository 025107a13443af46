#include "winertia/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "winertia/closed_forms.hpp"
#include "winertia/matrix.hpp"
#include "winertia/reduction.hpp"
#include "winertia/solver.hpp"
#include "winertia/structure.hpp"
#include "winertia/testgen.hpp"

namespace winertia::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

WeightedGraph read_graph(const CliConfig& c, std::istream& in) {
    std::ostringstream buf;
    if (c.input == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(c.input, std::ios::binary);
        if (!f) throw InputError("cannot open " + c.input);
        buf << f.rdbuf();
    }
    return parse_graph(buf.str(), c.format);
}

json inertia_json(const Inertia& in) {
    return {{"pos", in.pos}, {"neg", in.neg}, {"zero", in.zero}};
}

json pair_json(std::size_t pos, std::size_t neg) { return json::array({pos, neg}); }

std::string join_methods(const SolveResult& r) {
    std::string s;
    for (auto m : r.methods) s += (s.empty() ? "" : ",") + std::string(to_string(m));
    return s;
}

int cmd_inertia(const CliConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const WeightedGraph g = read_graph(c, in);
    if (c.dump_matrix) out << dump_matrix(adjacency_matrix(g));

    std::optional<SolveResult> structural;
    std::optional<Inertia> oracle;
    if (c.method != Method::Oracle) structural = solve(g, {c.method == Method::Both});
    if (c.method != Method::Structural) oracle = inertia_oracle(g);
    const bool match = !structural || !oracle || structural->inertia == *oracle;

    if (c.output == Output::Json) {
        json j{{"n", g.order()}};
        if (structural) {
            j["structural"] = inertia_json(structural->inertia);
            json tags = json::array();
            for (auto m : structural->methods) tags.push_back(std::string(to_string(m)));
            j["methods"] = tags;
            j["base_rules"] = structural->base_rules;
        }
        if (oracle) j["oracle"] = inertia_json(*oracle);
        j["inertia"] = inertia_json(structural ? structural->inertia : *oracle);
        if (structural && oracle) j["match"] = match;
        out << j.dump() << '\n';
    } else {
        if (structural) {
            out << to_string(structural->inertia) << '\n';
            out << "methods: " << join_methods(*structural) << '\n';
        }
        if (oracle) out << to_string(*oracle) << '\n';
        if (structural && oracle) out << (match ? "match" : "mismatch") << '\n';
    }
    if (!match) {
        err << "error: structural " << to_string(structural->inertia) << " differs from oracle "
            << to_string(*oracle) << '\n';
        return exit_code::mismatch;
    }
    return exit_code::ok;
}

std::string base_name(const WeightedGraph& component) {
    try {
        return describe_base(two_core(component)).name();
    } catch (const GraphError&) {
        return "";
    }
}

int cmd_classify(const CliConfig& c, std::istream& in, std::ostream& out) {
    const WeightedGraph g = read_graph(c, in);
    const GraphClass cls = classify(g);
    const auto comps = connected_components(g);
    std::vector<std::string> bases;
    json jc = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto k = cls.components[i];
        std::string base;
        if (k == ComponentClass::Unicyclic || k == ComponentClass::Bicyclic) {
            base = base_name(comps[i]);
            if (!base.empty()) bases.push_back(base);
        }
        json e{{"class", std::string(to_string(k))}, {"order", comps[i].order()}};
        if (!base.empty()) e["base"] = base;
        jc.push_back(e);
    }
    if (c.output == Output::Json) {
        out << json{{"class", std::string(to_string(cls.kind))}, {"components", jc}}.dump() << '\n';
    } else {
        out << to_string(cls.kind);
        for (const auto& b : bases) out << ' ' << b;
        out << '\n';
    }
    return exit_code::ok;
}

int cmd_reduce(const CliConfig& c, std::istream& in, std::ostream& out) {
    const WeightedGraph g = read_graph(c, in);
    const auto [core, trace] = reduce_to_core(g);
    const auto off = trace.offset();
    if (c.output == Output::Json) {
        json steps = json::array();
        for (const auto& s : trace.steps) {
            json added = json::array();
            for (const auto& e : s.added) added.push_back({e.u, e.v, to_string(e.weight)});
            steps.push_back({{"rule", std::string(to_string(s.rule))},
                             {"removed", s.removed},
                             {"added", added},
                             {"offset", pair_json(s.offset.pos, s.offset.neg)}});
        }
        out << json{{"steps", steps},
                    {"offset", pair_json(off.pos, off.neg)},
                    {"core", json::parse(serialize_graph(core, GraphFormat::Json))}}
                   .dump()
            << '\n';
    } else {
        out << serialize_trace(trace);
        out << "offset=(+" << off.pos << ",+" << off.neg << ")\n";
        out << "core:\n" << serialize_graph(core, GraphFormat::EdgeList);
    }
    return exit_code::ok;
}

std::size_t min_order(GraphKind k) {
    switch (k) {
        case GraphKind::Unicyclic: return 3;
        case GraphKind::Bicyclic: return 4;
        default: return 1;
    }
}

/// Per-instance spec for verify/gen: instance i gets its own seed and size.
GenSpec instance_spec(const CliConfig& c, std::size_t i, WeightRegime regime) {
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::array<std::uint32_t, 4> raw{};
    seq.generate(raw.begin(), raw.end());
    const std::array<std::uint64_t, 2> words{(std::uint64_t{raw[0]} << 32) | raw[1],
                                             (std::uint64_t{raw[2]} << 32) | raw[3]};
    const std::size_t lo = min_order(c.graph_class);
    if (c.n < lo) throw UsageError("--n is below the minimum order for this class");
    GenSpec s;
    s.target = c.graph_class;
    s.n = lo + words[0] % (c.n - lo + 1);
    s.seed = words[1];
    s.regime = regime;
    return s;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
    std::size_t matched = 0;
    for (std::size_t i = 0; i < c.count; ++i) {
        const auto regime = i % 2 ? WeightRegime::UnitWeights : WeightRegime::RandomRational;
        const GenSpec spec = instance_spec(c, i, regime);
        const WeightedGraph g = generate(spec);
        const Inertia s = solve(g, {true}).inertia;
        const Inertia o = inertia_oracle(g);
        if (s == o) {
            ++matched;
        } else {
            err << "error: instance " << i << " (n=" << spec.n << ", seed=" << spec.seed
                << "): structural " << to_string(s) << " oracle " << to_string(o) << '\n';
        }
    }
    if (c.output == Output::Json) {
        out << json{{"class", std::string(to_string(c.graph_class))},
                    {"count", c.count},
                    {"matched", matched}}
                   .dump()
            << '\n';
    } else {
        out << matched << '/' << c.count << " match\n";
    }
    return matched == c.count ? exit_code::ok : exit_code::mismatch;
}

int cmd_gen(const CliConfig& c, std::ostream& out) {
    for (std::size_t i = 0; i < c.count; ++i) {
        const GenSpec spec = instance_spec(c, i, WeightRegime::RandomRational);
        const WeightedGraph g = generate(spec);
        if (c.format == GraphFormat::EdgeList) {
            if (i) out << '\n';
            out << "# " << to_string(c.graph_class) << " n=" << spec.n << " seed=" << spec.seed
                << '\n';
        }
        out << serialize_graph(g, c.format);
    }
    return exit_code::ok;
}

std::string weights_text(const std::vector<Rational>& ws) {
    std::string s = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + to_string(ws[i]);
    return s + "]";
}

int cmd_table1(const CliConfig& c, std::ostream& out, std::ostream& err) {
    Rng rng(c.seed);
    std::size_t total = 0, good = 0;
    json rows = json::array();
    for (const auto& row : table1_rows()) {
        const std::vector<Relation> branches =
            row.conditional ? std::vector{Relation::LT, Relation::EQ, Relation::GT}
                            : std::vector{Relation::EQ};
        for (auto r : branches) {
            const BaseDescriptor d = table1_witness(row, r, rng);
            const auto expect = row.values[static_cast<std::size_t>(r)];
            const Inertia closed = infinity_base_inertia(d);
            const Inertia oracle = inertia_oracle(d.to_graph());
            const bool ok = closed.pos == expect[0] && closed.neg == expect[1] &&
                            oracle.pos == expect[0] && oracle.neg == expect[1];
            ++total;
            good += ok;
            const std::string branch = row.conditional ? std::string(to_string(r)) : "any";
            if (c.output == Output::Json) {
                std::vector<std::string> a, b, cc;
                for (const auto& w : d.a) a.push_back(to_string(w));
                for (const auto& w : d.b) b.push_back(to_string(w));
                for (const auto& w : d.c) cc.push_back(to_string(w));
                rows.push_back({{"base", d.name()},
                                {"branch", branch},
                                {"weights", {{"a", a}, {"b", b}, {"c", cc}}},
                                {"expected", pair_json(expect[0], expect[1])},
                                {"closed_form", pair_json(closed.pos, closed.neg)},
                                {"oracle", pair_json(oracle.pos, oracle.neg)},
                                {"match", ok}});
            } else {
                out << d.name() << ' ' << branch << " a=" << weights_text(d.a)
                    << " b=" << weights_text(d.b) << " c=" << weights_text(d.c) << " expected=("
                    << expect[0] << ',' << expect[1] << ") closed=(" << closed.pos << ','
                    << closed.neg << ") oracle=(" << oracle.pos << ',' << oracle.neg << ") "
                    << (ok ? "match" : "MISMATCH") << '\n';
            }
            if (!ok) err << "error: " << d.name() << " branch " << branch << " mismatch\n";
        }
    }
    if (c.output == Output::Json) {
        out << json{{"rows", rows}, {"branches", total}, {"matched", good}}.dump() << '\n';
    } else {
        out << good << '/' << total << " branches match\n";
    }
    return good == total ? exit_code::ok : exit_code::mismatch;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Inertia: return cmd_inertia(config, in, out, err);
            case Command::Classify: return cmd_classify(config, in, out);
            case Command::Reduce: return cmd_reduce(config, in, out);
            case Command::Verify: return cmd_verify(config, out, err);
            case Command::Gen: return cmd_gen(config, out);
            case Command::Table1: return cmd_table1(config, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse;
    }
    return exit_code::usage;
}

}  // namespace winertia::cli
