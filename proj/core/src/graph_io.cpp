#include "sgr/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sgr/intmath.hpp"

namespace sgr {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw std::runtime_error("graph format: line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
    int n = -1;
    std::vector<SignedEdge> edges;
    std::vector<std::pair<int, std::string>> labels;
    std::vector<std::pair<int, int>> colors;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (n >= 0) parse_fail(line_no, "duplicate n header");
            if (!(ls >> n) || n < 0) parse_fail(line_no, "bad vertex count");
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before n header");
            int u, v;
            std::string s;
            if (!(ls >> u >> v >> s) || s.size() != 1) parse_fail(line_no, "bad edge line");
            auto sign = sign_from_char(s[0]);
            if (!sign) parse_fail(line_no, "bad edge sign (expected + or -)");
            edges.push_back({u, v, *sign});
        } else if (tag == "l") {
            if (n < 0) parse_fail(line_no, "label before n header");
            int v;
            if (!(ls >> v)) parse_fail(line_no, "bad label line");
            std::string rest;
            std::getline(ls, rest);
            std::size_t s0 = rest.find_first_not_of(" \t");
            std::size_t s1 = rest.find_last_not_of(" \t\r");
            if (s0 == std::string::npos) parse_fail(line_no, "empty label");
            labels.emplace_back(v, rest.substr(s0, s1 - s0 + 1));
        } else if (tag == "c") {
            if (n < 0) parse_fail(line_no, "color before n header");
            int v, c;
            if (!(ls >> v >> c)) parse_fail(line_no, "bad color line");
            colors.emplace_back(v, c);
        } else {
            parse_fail(line_no, "unknown directive '" + tag + "'");
        }
    }
    if (n < 0) throw std::runtime_error("graph format: missing n header");

    std::vector<std::string> label_vec;
    if (!labels.empty()) {
        label_vec.assign(n, "");
        for (auto& [v, text] : labels) {
            if (v < 0 || v >= n) throw std::runtime_error("graph format: label vertex out of range");
            label_vec[v] = std::move(text);
        }
    }

    LoadedGraph out{SignedGraph(n, std::move(edges), std::move(label_vec)), {}};
    if (!colors.empty()) {
        out.coloring.assign(n, 0);
        for (auto [v, c] : colors) {
            if (v < 0 || v >= n) throw std::runtime_error("graph format: color vertex out of range");
            out.coloring[v] = c;
        }
    }
    return out;
}

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const SignedGraph& g, const std::vector<int>* coloring) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& e : g.edges())
        out << "e " << e.u << " " << e.v << " " << sign_char(e.sign) << "\n";
    if (g.has_labels()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.label(v).empty()) out << "l " << v << " " << g.label(v) << "\n";
    }
    if (coloring && !coloring->empty()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if ((*coloring)[v] != 0) out << "c " << v << " " << (*coloring)[v] << "\n";
    }
}

void save_graph_file(const std::string& path, const SignedGraph& g,
                     const std::vector<int>* coloring) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_graph(out, g, coloring);
}

std::string graph_to_string(const SignedGraph& g, const std::vector<int>* coloring) {
    std::ostringstream os;
    write_graph(os, g, coloring);
    return os.str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for digest: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return std::string(out);
}

}  // namespace sgr
