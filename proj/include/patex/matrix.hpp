#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patex {

/// A 1-indexed coordinate tuple, one component per axis.
using Coord = std::vector<int>;

/**
 * Sparse d-dimensional 0-1 matrix on [n_1] x ... x [n_d].
 *
 * Only the coordinates of 1-entries are stored, sorted lexicographically.
 * Instances are immutable once built; the constructor validates every
 * coordinate against the extents and rejects duplicates.
 */
class BinaryMatrix {
public:
    BinaryMatrix(std::vector<int> extents, std::vector<Coord> ones);

    static BinaryMatrix zeros(std::vector<int> extents);
    static BinaryMatrix cube(int dimension, int side, std::vector<Coord> ones);

    int dimension() const { return static_cast<int>(extents_.size()); }
    const std::vector<int>& extents() const { return extents_; }
    int extent(int axis) const { return extents_.at(static_cast<std::size_t>(axis - 1)); }
    const std::vector<Coord>& ones() const { return ones_; }
    std::size_t weight() const { return ones_.size(); }

    bool at(std::span<const int> coord) const;

    /// True if some 1-entry agrees with `coord` on its first `length` components.
    bool has_prefix(std::span<const int> coord, std::size_t length) const;

    bool operator==(const BinaryMatrix&) const = default;

    std::string to_string() const;

private:
    std::vector<int> extents_;
    std::vector<Coord> ones_;
};

/// Same as the BinaryMatrix constructor; kept as a free function for call sites that read better that way.
BinaryMatrix make_matrix(std::vector<int> extents, std::vector<Coord> ones);

/// d-1 permutations of [k] (one-line notation, 1-indexed) defining a d-permutation matrix.
class PermutationSpec {
public:
    PermutationSpec(int length, std::vector<std::vector<int>> perms);

    int length() const { return length_; }
    int dimension() const { return static_cast<int>(perms_.size()) + 1; }
    const std::vector<std::vector<int>>& perms() const { return perms_; }

private:
    int length_;
    std::vector<std::vector<int>> perms_;
};

bool is_permutation(std::span<const int> perm);

/// Side-k matrix with 1-entries at (i, pi_1(i), ..., pi_{d-1}(i)) for i in [k].
BinaryMatrix d_permutation_matrix(const PermutationSpec& spec);

/// k x kj matrix: each 1 of the permutation matrix of `perm` becomes a 1 x j block of ones.
BinaryMatrix j_tuple_matrix(std::span<const int> perm, int j);

/// 1-entries whose `axis`-th component equals `value`.
std::vector<Coord> cross_section(const BinaryMatrix& a, int axis, int value);

/// 1-entries along the `axis`-row selected by `fixed` (the d-1 components of every other axis, in axis order).
std::vector<Coord> row(const BinaryMatrix& a, int axis, std::span<const int> fixed);

std::vector<int> distance_vector(std::span<const int> a, std::span<const int> b);

/// Number of ordered pairs of distinct 1-entries whose distance vector is `x`.
std::size_t repetition_count(const BinaryMatrix& p, std::span<const int> x);

bool is_r_repeated(const BinaryMatrix& p, std::span<const int> x, std::size_t r);

struct Repetition {
    std::size_t count = 0;
    std::vector<int> vector;  // lexicographically least nonzero vector attaining `count`; empty if weight < 2
};

Repetition max_repetition(const BinaryMatrix& p);

/// True if every axis-cross-section of `a` holds exactly one 1-entry.
bool has_one_per_cross_section(const BinaryMatrix& a);

}  // namespace patex
