#include "tfree/edge_list.hpp"

#include "tfree/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tfree {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line_no)
{
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(token) + "'");
    }
    return value;
}

}  // namespace

Digraph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::vector<Arc> arcs;
    std::vector<std::size_t> arc_lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <N>'");
            }
            n = parse_index(tokens[1], line_no);
            have_header = true;
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
        }
        const std::size_t u = parse_index(tokens[0], line_no);
        const std::size_t v = parse_index(tokens[1], line_no);
        if (u >= n || v >= n) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex label out of range");
        }
        if (u == v) {
            throw ParseError("line " + std::to_string(line_no) + ": self-loop");
        }
        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        arc_lines.push_back(line_no);
    }
    if (!have_header) {
        throw ParseError("missing header 'n <N>'");
    }
    DigraphBuilder b(n);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (!b.add_arc(arcs[i].from, arcs[i].to)) {
            throw ParseError("line " + std::to_string(arc_lines[i]) + ": duplicate arc");
        }
    }
    return b.build();
}

Digraph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

Digraph load_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g)
{
    out << "n " << g.vertex_count() << '\n';
    for (const Arc& a : g.arcs()) {
        out << a.from << ' ' << a.to << '\n';
    }
}

std::string to_edge_list(const Digraph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace tfree
