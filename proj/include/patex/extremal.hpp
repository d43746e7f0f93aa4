#pragma once

#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace patex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

struct SearchOptions {
    /// Worker threads for branch-and-bound; results do not depend on this.
    unsigned workers = 1;
    /// Largest candidate edge size in hypergraph searches. Unset means the pattern's vertex count.
    std::optional<int> edge_cap;
    /// Ignore edge_cap and consider every nonempty subset of [n].
    bool exact = false;
    /// Upper limit on the number of branching items (cells or candidate edges); at most 64.
    int max_items = 64;
    /// Largest n that count_avoiders enumerates without an explicit edge cap.
    int max_uncapped_count_n = 4;
};

using Witness = std::variant<BinaryMatrix, OrderedHypergraph>;

struct SearchCertificate {
    long long value = 0;
    Witness witness;
    /// Set by an independent re-check: the witness avoids the pattern and its weight equals value.
    bool verified = false;
};

/// ex(B, n): most 1-entries in an n x n matrix avoiding B (B must be 2-dimensional).
SearchCertificate ex_matrix(const BinaryMatrix& pattern, int n, const SearchOptions& options = {});

/// f(B, d, n): most 1-entries in a d-matrix of side n avoiding B.
SearchCertificate f_multi(const BinaryMatrix& pattern, int d, int n, const SearchOptions& options = {});

/// gex(Q, n): most edges of an ordered graph on [n] avoiding the 2-uniform pattern Q.
SearchCertificate gex_graph(const OrderedHypergraph& pattern, int n, const SearchOptions& options = {});

/// ex_e(H, n): most edges of a hypergraph on [n] avoiding H.
SearchCertificate exe_hyper(const OrderedHypergraph& pattern, int n, const SearchOptions& options = {});

/// ex_i(H, n): largest weight (sum of edge sizes) of a hypergraph on [n] avoiding H.
SearchCertificate exi_hyper(const OrderedHypergraph& pattern, int n, const SearchOptions& options = {});

/// |M(H, n)|: number of hypergraphs on [n] avoiding H, by enumeration.
BigInt count_avoiders(const OrderedHypergraph& pattern, int n, const SearchOptions& options = {});

/// Candidate edges used by the hypergraph searches: nonempty subsets of [n] of size <= cap, in lexicographic order.
std::vector<Edge> candidate_edges(int n, int cap);

/// Re-checks a certificate against the pattern with the containment module.
bool verify_certificate(const SearchCertificate& cert, const BinaryMatrix& pattern);
bool verify_certificate(const SearchCertificate& cert, const OrderedHypergraph& pattern, bool weight_is_edge_sizes);

struct TableRow {
    int n = 0;
    BigInt value;
    std::string witness_file;
};

/// Extremal values of one pattern for a range of n.
class ExtremalTable {
public:
    ExtremalTable(std::string pattern_id, int dimension, std::vector<TableRow> rows);

    const std::string& pattern_id() const { return pattern_id_; }
    int dimension() const { return dimension_; }
    const std::vector<TableRow>& rows() const { return rows_; }

    /// value / n^(d-1) for row i.
    Rational ratio(std::size_t i) const;
    /// value / n for row i.
    Rational linear_ratio(std::size_t i) const;

    /// True when value/n never decreases from one row to the next.
    bool ratios_nondecreasing() const;

private:
    std::string pattern_id_;
    int dimension_;
    std::vector<TableRow> rows_;
};

/// value(n_max) / n_max, the running linear-growth estimate. Descriptive only.
Rational estimate_limit(const ExtremalTable& table);

}  // namespace patex
