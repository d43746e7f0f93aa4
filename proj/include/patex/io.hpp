#pragma once

#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace patex::io {

// Matrix text format:
//   line 1:      d n_1 ... n_d
//   other lines: one 1-entry as d space-separated integers
// Hypergraph text format:
//   line 1:      n
//   other lines: one edge as increasing space-separated vertices
// Blank lines and lines starting with '#' are ignored on input.
// Writers emit the header, then entries/edges in lexicographic order,
// single spaces, '\n' line endings and no comments.

BinaryMatrix read_matrix(std::istream& in);
OrderedHypergraph read_hypergraph(std::istream& in);

void write_matrix(std::ostream& out, const BinaryMatrix& m);
void write_hypergraph(std::ostream& out, const OrderedHypergraph& h);

BinaryMatrix parse_matrix(const std::string& text);
OrderedHypergraph parse_hypergraph(const std::string& text);
std::string format_matrix(const BinaryMatrix& m);
std::string format_hypergraph(const OrderedHypergraph& h);

BinaryMatrix load_matrix(const std::filesystem::path& path);
OrderedHypergraph load_hypergraph(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);

}  // namespace patex::io
