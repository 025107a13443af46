#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "winertia/graph.hpp"

namespace winertia::cli {

enum class Command { Inertia, Classify, Reduce, Verify, Gen, Table1 };
enum class Method { Structural, Oracle, Both };
enum class Output { Human, Json };

struct CliConfig {
    Command command = Command::Inertia;
    /// Path, or "-" for the input stream.
    std::string input = "-";
    GraphFormat format = GraphFormat::EdgeList;
    Method method = Method::Structural;
    Output output = Output::Human;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::size_t n = 12;
    GraphKind graph_class = GraphKind::Tree;
    bool dump_matrix = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int mismatch = 3;
}  // namespace exit_code

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace winertia::cli
