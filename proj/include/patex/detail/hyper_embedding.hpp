#pragma once

#include "patex/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace patex::detail {

/// Vertex v occupies bit v-1.
using VertexMask = std::uint64_t;

inline constexpr int max_mask_vertices = 64;

struct MaskHypergraph {
    int n = 0;
    std::vector<VertexMask> edges;
};

MaskHypergraph to_masks(const OrderedHypergraph& h);
VertexMask edge_mask(const Edge& e);

struct HyperMatch {
    std::vector<int> vertex_map;
    std::vector<std::size_t> edge_map;
};

/// Core of hypergraph_contains on bitmask edges. Host edges must be in lexicographic order for the tie-break to be lexicographic.
std::optional<HyperMatch> find_hyper_embedding(const MaskHypergraph& host, const MaskHypergraph& pattern);

}  // namespace patex::detail
