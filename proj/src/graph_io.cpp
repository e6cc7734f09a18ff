#include "deficiency/graph_io.hpp"

#include "deficiency/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace deficiency {

namespace {

constexpr int kBias = 63;
constexpr long kMaxOrder = 68719476735L;  // 2^36 - 1

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(char c)
{
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw InputError(std::string("graph6: invalid byte '") + c + "'");
    return v;
}

long read_order(std::string_view s, std::size_t& pos)
{
    if (s.empty()) throw InputError("graph6: empty string");
    if (s[0] != '~') {
        pos = 1;
        return sextet(s[0]);
    }
    int groups = 3;
    pos = 1;
    if (s.size() > 1 && s[1] == '~') {
        groups = 6;
        pos = 2;
    }
    if (s.size() < pos + groups) throw InputError("graph6: truncated size header");
    long n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | sextet(s[pos++]);
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    std::size_t pos = 0;
    const long n = read_order(s, pos);
    if (n > 1'000'000) throw SizeError("graph6: order " + std::to_string(n) + " is beyond desk scale");

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != bytes)
        throw InputError("graph6: expected " + std::to_string(bytes) + " payload bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(s.size() - pos));

    GraphBuilder b(static_cast<int>(n));
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = sextet(s[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(u, v);
        }
    if (bits % 6 != 0) {
        const int last = sextet(s[pos + bytes - 1]);
        const int pad = static_cast<int>(6 - bits % 6);
        if (last & ((1 << pad) - 1)) throw InputError("graph6: non-zero padding bits");
    }
    return b.finish();
}

std::string emit_graph6(const Graph& g)
{
    const long n = g.order();
    if (n > kMaxOrder) throw SizeError("graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_adjacency_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::istringstream fields{std::string(body)};
        if (n < 0) {
            if (!(fields >> n) || n < 0) throw InputError("adjacency list: bad vertex count on line " + std::to_string(lineno));
            continue;
        }
        Vertex u = 0;
        Vertex v = 0;
        if (!(fields >> u >> v)) throw InputError("adjacency list: expected 'u v' on line " + std::to_string(lineno));
        std::string extra;
        if (fields >> extra) throw InputError("adjacency list: trailing text on line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw InputError("adjacency list: missing vertex count");
    return Graph::build(n, edges);
}

std::string emit_adjacency_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string_view body = trim(text);
    // graph6 bytes start at '?', so a leading digit can only be a vertex count.
    if (body.empty() || !std::isdigit(static_cast<unsigned char>(body.front()))) return parse_graph6(body);
    return parse_adjacency_list(body);
}

}  // namespace deficiency
