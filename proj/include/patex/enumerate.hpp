#pragma once

#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <vector>

namespace patex::enumerate {

/// All permutations of [k] in lexicographic order.
std::vector<std::vector<int>> permutations(int k);

/// Every d-permutation matrix of length k, ordered by its permutation tuple.
std::vector<BinaryMatrix> d_permutation_matrices(int d, int k);

/// All 2^(product of extents) matrices of the given extents, in order of their cell bitmask.
std::vector<BinaryMatrix> matrices(const std::vector<int>& extents);

/// All 2-uniform hypergraphs on [n], in order of their edge bitmask.
std::vector<OrderedHypergraph> graphs(int n);

}  // namespace patex::enumerate
