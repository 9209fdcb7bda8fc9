#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgr/signed_graph.hpp"

namespace sgr {

// Line-oriented text format, one graph per file:
//   n <N>          vertex count, exactly once, before any edge
//   e <u> <v> <s>  edge with sign s in {+,-}; vertices 0-indexed
//   l <v> <label>  optional vertex label (rest of line)
//   c <v> <color>  optional coloring entry (colors are 1-based)
//   #              comment; blank lines ignored
// The writer emits edges sorted (u, v, + before -), then labels, then colors.

struct LoadedGraph {
    SignedGraph graph;
    std::vector<int> coloring;  // empty when the file carries no c lines
};

LoadedGraph read_graph(std::istream& in);
LoadedGraph load_graph_file(const std::string& path);

void write_graph(std::ostream& out, const SignedGraph& g,
                 const std::vector<int>* coloring = nullptr);
void save_graph_file(const std::string& path, const SignedGraph& g,
                     const std::vector<int>* coloring = nullptr);

std::string graph_to_string(const SignedGraph& g, const std::vector<int>* coloring = nullptr);

// FNV-1a digest of a file's raw bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace sgr
