#include "propb/hypergraph_file.hpp"

#include <charconv>
#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace propb {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t number(std::string_view tok, std::size_t line)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseFailure(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text)
{
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, p = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto toks = tokens_of(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;

        if (!have_header) {
            if (toks.size() != 3)
                throw ParseFailure(line_no, "header must be 'n p m'");
            n = number(toks[0], line_no);
            p = number(toks[1], line_no);
            m = number(toks[2], line_no);
            if (n == 0)
                throw ParseFailure(line_no, "uniformity n must be positive");
            if (p > std::numeric_limits<Vertex>::max())
                throw ParseFailure(line_no, "vertex count too large");
            have_header = true;
            continue;
        }

        if (edges.size() == m)
            throw ParseFailure(line_no, "more than the " + std::to_string(m) + " edges declared in the header");
        if (toks.size() != n)
            throw ParseFailure(line_no, "edge has " + std::to_string(toks.size()) + " vertices, expected " +
                                            std::to_string(n));
        Edge e;
        for (auto tok : toks) {
            const auto v = number(tok, line_no);
            if (v >= p)
                throw ParseFailure(line_no, "vertex " + std::to_string(v) + " out of range [0, " +
                                                std::to_string(p) + ")");
            e.push_back(static_cast<Vertex>(v));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw ParseFailure(line_no, "edge repeats a vertex");
        if (!seen.insert(e).second)
            throw ParseFailure(line_no, "duplicate edge");
        edges.push_back(std::move(e));
    }

    if (!have_header)
        throw ParseFailure(line_no == 0 ? 1 : line_no, "missing header 'n p m'");
    if (edges.size() != m)
        throw ParseFailure(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    return normalize(std::move(edges), n, p);
}

Hypergraph read_hypergraph_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string render_hypergraph(const Hypergraph& h)
{
    std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.vertex_count()) + " " +
                      std::to_string(h.edge_count()) + "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace propb
