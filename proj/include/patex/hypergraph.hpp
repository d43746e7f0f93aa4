#pragma once

#include "patex/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patex {

/// A hyperedge as a strictly increasing list of 1-indexed vertices.
using Edge = std::vector<int>;

/**
 * Ordered hypergraph on the vertex set [n] with its natural order.
 *
 * Edges are nonempty, pairwise distinct, canonicalized to increasing vertex
 * lists and kept in lexicographic order.
 */
class OrderedHypergraph {
public:
    OrderedHypergraph(int vertex_count, std::vector<Edge> edges);

    /// Builds the hypergraph on arbitrary integer labels by compressing them to [n] in increasing order.
    static OrderedHypergraph from_labels(std::vector<int> labels, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t weight() const;

    bool is_uniform(std::size_t d) const;
    bool has_edge(std::span<const int> edge) const;

    /// Vertices lying in no edge.
    std::vector<int> isolated_vertices() const;

    bool operator==(const OrderedHypergraph&) const = default;

    std::string to_string() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Boundaries 0 = k_0 < k_1 < ... < k_d = n of the d consecutive parts I_i = [k_{i-1}+1, k_i].
class PartsSpec {
public:
    explicit PartsSpec(std::vector<int> boundaries);

    static PartsSpec from_sizes(std::span<const int> sizes);
    static PartsSpec equal(int parts, int size);

    const std::vector<int>& boundaries() const { return boundaries_; }
    int part_count() const { return static_cast<int>(boundaries_.size()) - 1; }
    int vertex_count() const { return boundaries_.back(); }
    int size(int part) const;
    std::vector<int> sizes() const;

    /// 1-indexed part containing `v`.
    int part_of(int v) const;

    bool operator==(const PartsSpec&) const = default;

private:
    std::vector<int> boundaries_;
};

struct AssociatedHypergraph {
    OrderedHypergraph graph;
    PartsSpec parts;
};

/// Each 1-entry (c_1..c_d) becomes the edge { offset_j + c_j }, offset_j = n_1 + ... + n_{j-1}.
AssociatedHypergraph associated_hypergraph(const BinaryMatrix& m);

/// Inverse of associated_hypergraph; requires `h` to be d-uniform and d-partite for `parts`.
BinaryMatrix associated_matrix(const OrderedHypergraph& h, const PartsSpec& parts);

/// Every edge has at most one vertex per part (and parts cover exactly [n]).
bool is_d_partite(const OrderedHypergraph& h, const PartsSpec& parts);

/// Returns the length k when `h` is a d-permutation hypergraph (d taken from its edge size).
std::optional<int> is_d_permutation_hypergraph(const OrderedHypergraph& h);

/// The parts of a d-permutation hypergraph of length k: d parts of size k.
PartsSpec permutation_parts(const OrderedHypergraph& h);

}  // namespace patex
