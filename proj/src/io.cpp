#include "patex/io.hpp"

#include "patex/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace patex::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<int> values;
};

std::vector<int> parse_ints(const std::string& text, std::size_t line_number)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
            ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc{} || ptr != text.data() + j)
            throw InputError("line " + std::to_string(line_number) + ": expected an integer, got '" + text.substr(i, j - i) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

std::vector<Line> content_lines(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#')
            continue;
        lines.push_back({number, parse_ints(text, number)});
    }
    if (lines.empty())
        throw InputError("empty input: missing header line");
    return lines;
}

}  // namespace

BinaryMatrix read_matrix(std::istream& in)
{
    auto lines = content_lines(in);
    const auto& header = lines.front().values;
    if (header.empty() || header[0] < 2 || header.size() != static_cast<std::size_t>(header[0]) + 1)
        throw InputError("line " + std::to_string(lines.front().number) + ": header must be 'd n_1 ... n_d' with d >= 2");
    std::vector<int> extents(header.begin() + 1, header.end());
    std::vector<Coord> ones;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].values.size() != extents.size())
            throw InputError("line " + std::to_string(lines[i].number) + ": expected " + std::to_string(extents.size()) + " coordinates");
        ones.push_back(lines[i].values);
    }
    return BinaryMatrix(std::move(extents), std::move(ones));
}

OrderedHypergraph read_hypergraph(std::istream& in)
{
    auto lines = content_lines(in);
    const auto& header = lines.front().values;
    if (header.size() != 1 || header[0] < 0)
        throw InputError("line " + std::to_string(lines.front().number) + ": header must be the vertex count 'n'");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& e = lines[i].values;
        for (std::size_t j = 1; j < e.size(); ++j)
            if (e[j] <= e[j - 1])
                throw InputError("line " + std::to_string(lines[i].number) + ": edge vertices must be strictly increasing");
        edges.push_back(e);
    }
    return OrderedHypergraph(header[0], std::move(edges));
}

void write_matrix(std::ostream& out, const BinaryMatrix& m)
{
    out << m.dimension();
    for (int n : m.extents())
        out << ' ' << n;
    out << '\n';
    for (const auto& c : m.ones()) {
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? " " : "") << c[i];
        out << '\n';
    }
}

void write_hypergraph(std::ostream& out, const OrderedHypergraph& h)
{
    out << h.vertex_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

BinaryMatrix parse_matrix(const std::string& text)
{
    std::istringstream in(text);
    return read_matrix(in);
}

OrderedHypergraph parse_hypergraph(const std::string& text)
{
    std::istringstream in(text);
    return read_hypergraph(in);
}

std::string format_matrix(const BinaryMatrix& m)
{
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

std::string format_hypergraph(const OrderedHypergraph& h)
{
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

BinaryMatrix load_matrix(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    return read_matrix(in);
}

OrderedHypergraph load_hypergraph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    return read_hypergraph(in);
}

void save_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
}

}  // namespace patex::io
