#pragma once

#include "patex/containment.hpp"
#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace patex {

/// Appends a first column and a last row: `p` sits on rows 1..k1, columns 2..k2+1, plus a 1-entry at (k1+1, 1).
BinaryMatrix corner_pad(const BinaryMatrix& p);

/// n x n matrix with a 1 at (i, j) for every edge {i, j}, i < j, of the ordered graph `a`.
BinaryMatrix bipartite_double(const OrderedHypergraph& a);

/**
 * Given an embedding of `pattern` (a matrix with a 1-entry at (k1, 1)) in
 * bipartite_double(graph), returns the increasing vertex map r_1..r_k1,
 * c_1..c_k2 that embeds the pattern's associated graph into `graph`.
 * Throws PostconditionError if the rows do not all precede the columns.
 */
HypergraphEmbedding lift_doubling_embedding(const OrderedHypergraph& graph, const BinaryMatrix& pattern,
                                            const MatrixEmbedding& embedding);

/**
 * Replicates a bipartite graph on [2n] (parts [n] and [n+1, 2n]) between
 * every pair of consecutive intervals I_k = [(k-1)n+1, kn] of [nt]: each
 * edge {i, n+j} yields {(k-1)n+i, kn+j} for k = 1..t-1.
 */
OrderedHypergraph blowup_graph(const OrderedHypergraph& a, int n, int t);

/// Side-d d-matrix with 1-entries at the d cyclic shifts of (1, ..., d).
BinaryMatrix cyclic_pattern(int d);

/// Boundary condition on a d-permutation hypergraph of length t: for each i in [d-1] some edge contains {i*t, i*t+1}.
bool satisfies_boundary_condition(const OrderedHypergraph& h);

struct CyclicPadResult {
    OrderedHypergraph hypergraph;
    BinaryMatrix matrix;
    bool contains_input = false;
    bool boundary = false;
};

/// Substitutes the matrix of `h` for the (1, ..., d) entry of cyclic_pattern(d); re-checks containment and the boundary condition.
CyclicPadResult cyclic_pad(const OrderedHypergraph& h);

/**
 * Grows a d-permutation matrix one step at a time until its length is
 * `max_length`, inserting a new 1-entry at coordinate 2 on every axis.
 * Returns the input followed by each successor. Every step is re-checked
 * (permutation shape, containment of the predecessor, boundary condition);
 * a failed check raises PostconditionError.
 */
std::vector<BinaryMatrix> chain_patterns(const BinaryMatrix& start, int max_length);

/// One chain step, without re-checks.
BinaryMatrix insert_after_first_cross_section(const BinaryMatrix& p);

enum class TruncationCap { kd, k_plus_d_times_d };

std::string to_string(TruncationCap cap);

struct NormalizeReport {
    OrderedHypergraph without_small;  ///< edges of size < d dropped
    OrderedHypergraph truncated;      ///< edges above the threshold cut to their smallest vertices
    int threshold = 0;
    TruncationCap cap = TruncationCap::kd;
    /// For every edge of `truncated`: how many edges of `without_small` map onto it.
    std::map<Edge, int> multiplicity;
    int max_multiplicity = 0;
    int truncated_edges = 0;
};

NormalizeReport normalize_edges(const OrderedHypergraph& g, int k, int d, TruncationCap cap = TruncationCap::kd);

struct GeneratorConfig {
    BinaryMatrix pattern;
    int n = 0;
    /// Unset selects p = 1/2 * n^(-(k_1 + ... + k_d - d) / (w(B) - 1)).
    std::optional<double> p;
    std::uint64_t seed = 0;
    int trials = 1;
};

/// Name of the pseudo-random generator; recorded in statistics.
inline constexpr const char* rng_name = "mt19937_64";

double default_probability(const BinaryMatrix& pattern, int n);

struct AvoiderStats {
    std::uint64_t seed = 0;
    double p = 0;
    std::size_t initial_weight = 0;
    std::size_t deletions = 0;
    std::size_t final_weight = 0;
    /// n^d p - p^w(B) * prod C(n, k_i)
    double expected_weight = 0;
    /// n^d p - (e n)^(k_1+...+k_d) / (k_1^k_1 ... k_d^k_d) * p^w(B)
    double analytic_target = 0;
};

struct RandomAvoider {
    BinaryMatrix matrix;
    AvoiderStats stats;
};

/**
 * Samples a side-n d-matrix with independent 1-entries at rate p, then
 * scans every submatrix index tuple in lexicographic order and, whenever
 * the selected submatrix represents the pattern, clears the copy's
 * lexicographically greatest 1-entry. Uses the trial seed as given.
 */
RandomAvoider random_avoider(const GeneratorConfig& cfg, std::uint64_t seed);

/// Runs cfg.trials trials with seeds cfg.seed XOR trial index.
std::vector<RandomAvoider> random_avoiders(const GeneratorConfig& cfg);

/// Maps each edge of a hypergraph on [tn] to the set of intervals I_i = [(i-1)t+1, it] it meets.
OrderedHypergraph interval_contract(const OrderedHypergraph& g, int t);

}  // namespace patex
