#ifndef LPT_IO_HPP
#define LPT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lpt/errors.hpp"
#include "lpt/graph.hpp"

namespace lpt {

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    throw InputError("unknown graph format '" + name + "' (expected edgelist or graph6)");
}

// "n m" header, then m lines "u v" with 0-based ids. Blank lines and lines
// starting with '#' are skipped.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) { throw InputError("line " + std::to_string(line_no) + ": " + what); };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto read_pair = [&](long long& a, long long& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b)) fail("expected two integers");
        if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
    };
    if (!next_line()) throw InputError("empty edge list");
    long long n = 0, m = 0;
    read_pair(n, m);
    if (n < 0 || m < 0 || n > 1'000'000) fail("invalid header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        long long u = 0, v = 0;
        read_pair(u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line()) fail("more lines than the declared edge count");
    return g;
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// graph6: N(n) followed by the upper triangle in column order, six bits per
// printable character (value + 63), most significant bit first.
inline std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw InputError("graph6 writer supports at most 258047 vertices");
    }
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph parse_graph6(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw InputError("graph6: empty string");
    for (char c : s)
        if (c < 63 || c > 126) throw InputError("graph6: character outside 63..126");
    std::size_t at = 0;
    long long n = 0;
    if (s[0] != 126) {
        n = s[0] - 63;
        at = 1;
    } else if (s.size() >= 2 && s[1] == 126) {
        throw InputError("graph6: graphs above 258047 vertices are not supported");
    } else {
        if (s.size() < 4) throw InputError("graph6: truncated size field");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        at = 4;
    }
    const long long pairs = n * (n - 1) / 2;
    const std::size_t expect = static_cast<std::size_t>((pairs + 5) / 6);
    if (s.size() - at != expect)
        throw InputError("graph6: expected " + std::to_string(expect) + " data characters, found " + std::to_string(s.size() - at));
    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int c = s[at + static_cast<std::size_t>(k / 6)] - 63;
            if ((c >> (5 - k % 6)) & 1) g.add_edge(u, v);
        }
    const int pad = static_cast<int>(expect * 6 - static_cast<std::size_t>(pairs));
    if (pad > 0 && ((s.back() - 63) & ((1 << pad) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
    return g;
}

// Nonempty lines of a graph6 file, each decoded.
inline std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Graph> out;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline GraphFormat guess_format(const std::string& path) {
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    auto graphs = parse_graph6_lines(text);
    if (graphs.size() != 1) throw InputError("expected exactly one graph6 line, found " + std::to_string(graphs.size()));
    return graphs.front();
}

inline Graph read_graph(const std::string& path, GraphFormat format) { return parse_graph(read_text_file(path), format); }

}  // namespace lpt

#endif  // LPT_IO_HPP
