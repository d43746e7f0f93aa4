#pragma once

#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace patex {

/// Selected host indices per axis (1-indexed, strictly increasing); axis l has one index per pattern extent on l.
struct MatrixEmbedding {
    std::vector<std::vector<int>> indices;

    bool operator==(const MatrixEmbedding&) const = default;
};

/// Increasing vertex map f (pattern vertex v -> vertex_map[v-1]) and injective edge map g (pattern edge i -> host edge edge_map[i]).
struct HypergraphEmbedding {
    std::vector<int> vertex_map;
    std::vector<std::size_t> edge_map;

    bool operator==(const HypergraphEmbedding&) const = default;
};

/// ones(b) is a subset of ones(a); the extents must match.
bool represents(const BinaryMatrix& a, const BinaryMatrix& b);

/// The submatrix of `a` picked out by `embedding`, re-indexed to 1..k_l per axis.
BinaryMatrix submatrix(const BinaryMatrix& a, const MatrixEmbedding& embedding);

/// Lexicographically least embedding of `b` into `a` (axis 1 indices compared first), or nullopt if `a` avoids `b`.
std::optional<MatrixEmbedding> matrix_contains(const BinaryMatrix& a, const BinaryMatrix& b);

bool verify_matrix_embedding(const BinaryMatrix& a, const BinaryMatrix& b, const MatrixEmbedding& embedding);

/**
 * Hypergraph containment: increasing f on vertices, injective g on edges
 * with f(e) a subset of g(e). Returns the embedding with lexicographically
 * least f; for that f, g is the lexicographically least injective choice.
 * Vertex counts above 64 raise CapacityError.
 */
std::optional<HypergraphEmbedding> hypergraph_contains(const OrderedHypergraph& host, const OrderedHypergraph& pattern);

bool verify_hypergraph_embedding(const OrderedHypergraph& host, const OrderedHypergraph& pattern,
                                 const HypergraphEmbedding& embedding);

/// Same vertex count and the increasing bijection maps edges onto edges; on [n] this is edge-set equality.
bool order_isomorphic(const OrderedHypergraph& a, const OrderedHypergraph& b);

/**
 * Decides containment of two d-partite d-uniform hypergraphs both directly
 * and through their associated matrices; returns the common answer and
 * throws ConsistencyError if the two routes disagree.
 *
 * The pattern must have no isolated vertex: an isolated pattern vertex may
 * be placed in a host part other than its own, which the matrix route
 * cannot express.
 */
bool klazar_marcus_check(const OrderedHypergraph& host, const PartsSpec& host_parts,
                         const OrderedHypergraph& pattern, const PartsSpec& pattern_parts);

}  // namespace patex
