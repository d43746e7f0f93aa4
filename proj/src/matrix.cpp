#include "patex/matrix.hpp"

#include "patex/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace patex {

namespace {

std::string coord_string(std::span<const int> c)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
        out << (i ? "," : "") << c[i];
    out << ')';
    return out.str();
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::vector<int> extents, std::vector<Coord> ones)
    : extents_(std::move(extents)), ones_(std::move(ones))
{
    if (extents_.size() < 2)
        throw InputError("matrix dimension must be at least 2");
    for (int n : extents_)
        if (n < 1)
            throw InputError("matrix extents must be positive");
    for (const auto& c : ones_) {
        if (c.size() != extents_.size())
            throw InputError("coordinate " + coord_string(c) + " has wrong dimension");
        for (std::size_t l = 0; l < c.size(); ++l)
            if (c[l] < 1 || c[l] > extents_[l])
                throw InputError("coordinate " + coord_string(c) + " out of range");
    }
    std::sort(ones_.begin(), ones_.end());
    auto dup = std::adjacent_find(ones_.begin(), ones_.end());
    if (dup != ones_.end())
        throw InputError("duplicate coordinate " + coord_string(*dup));
}

BinaryMatrix BinaryMatrix::zeros(std::vector<int> extents)
{
    return BinaryMatrix(std::move(extents), {});
}

BinaryMatrix BinaryMatrix::cube(int dimension, int side, std::vector<Coord> ones)
{
    return BinaryMatrix(std::vector<int>(static_cast<std::size_t>(std::max(dimension, 0)), side), std::move(ones));
}

bool BinaryMatrix::at(std::span<const int> coord) const
{
    return std::binary_search(ones_.begin(), ones_.end(), coord,
        [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
}

bool BinaryMatrix::has_prefix(std::span<const int> coord, std::size_t length) const
{
    auto prefix = coord.first(length);
    auto it = std::lower_bound(ones_.begin(), ones_.end(), prefix,
        [length](const Coord& a, std::span<const int> p) {
            return std::lexicographical_compare(a.begin(), a.begin() + static_cast<long>(length), p.begin(), p.end());
        });
    return it != ones_.end() && std::equal(prefix.begin(), prefix.end(), it->begin());
}

std::string BinaryMatrix::to_string() const
{
    std::ostringstream out;
    out << "extents " << coord_string(extents_) << " ones {";
    for (std::size_t i = 0; i < ones_.size(); ++i)
        out << (i ? "," : "") << coord_string(ones_[i]);
    out << '}';
    return out.str();
}

BinaryMatrix make_matrix(std::vector<int> extents, std::vector<Coord> ones)
{
    return BinaryMatrix(std::move(extents), std::move(ones));
}

bool is_permutation(std::span<const int> perm)
{
    std::vector<bool> seen(perm.size() + 1, false);
    for (int v : perm) {
        if (v < 1 || v > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

PermutationSpec::PermutationSpec(int length, std::vector<std::vector<int>> perms)
    : length_(length), perms_(std::move(perms))
{
    if (length_ < 1)
        throw InputError("permutation length must be positive");
    if (perms_.empty())
        throw InputError("a d-permutation needs at least one permutation (d >= 2)");
    for (const auto& p : perms_)
        if (static_cast<int>(p.size()) != length_ || !is_permutation(p))
            throw InputError("not a permutation of [" + std::to_string(length_) + "]");
}

BinaryMatrix d_permutation_matrix(const PermutationSpec& spec)
{
    const int k = spec.length();
    std::vector<Coord> ones;
    ones.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        Coord c{i};
        for (const auto& p : spec.perms())
            c.push_back(p[static_cast<std::size_t>(i - 1)]);
        ones.push_back(std::move(c));
    }
    return BinaryMatrix::cube(spec.dimension(), k, std::move(ones));
}

BinaryMatrix j_tuple_matrix(std::span<const int> perm, int j)
{
    if (j < 1)
        throw InputError("j-tuple width must be at least 1");
    if (perm.empty() || !is_permutation(perm))
        throw InputError("j-tuple matrix needs a permutation");
    const int k = static_cast<int>(perm.size());
    std::vector<Coord> ones;
    for (int i = 1; i <= k; ++i) {
        const int base = (perm[static_cast<std::size_t>(i - 1)] - 1) * j;
        for (int c = 1; c <= j; ++c)
            ones.push_back({i, base + c});
    }
    return BinaryMatrix({k, k * j}, std::move(ones));
}

std::vector<Coord> cross_section(const BinaryMatrix& a, int axis, int value)
{
    if (axis < 1 || axis > a.dimension())
        throw InputError("axis out of range");
    if (value < 1 || value > a.extent(axis))
        throw InputError("cross-section index out of range");
    std::vector<Coord> out;
    for (const auto& c : a.ones())
        if (c[static_cast<std::size_t>(axis - 1)] == value)
            out.push_back(c);
    return out;
}

std::vector<Coord> row(const BinaryMatrix& a, int axis, std::span<const int> fixed)
{
    const int d = a.dimension();
    if (axis < 1 || axis > d)
        throw InputError("axis out of range");
    if (static_cast<int>(fixed.size()) != d - 1)
        throw InputError("a row is selected by d-1 fixed components");
    for (int l = 1, f = 0; l <= d; ++l) {
        if (l == axis)
            continue;
        const int v = fixed[static_cast<std::size_t>(f++)];
        if (v < 1 || v > a.extent(l))
            throw InputError("row index out of range");
    }
    std::vector<Coord> out;
    for (const auto& c : a.ones()) {
        bool match = true;
        for (int l = 1, f = 0; l <= d && match; ++l) {
            if (l == axis)
                continue;
            match = c[static_cast<std::size_t>(l - 1)] == fixed[static_cast<std::size_t>(f++)];
        }
        if (match)
            out.push_back(c);
    }
    return out;
}

std::vector<int> distance_vector(std::span<const int> a, std::span<const int> b)
{
    if (a.size() != b.size())
        throw InputError("distance vector needs equal-length coordinates");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = b[i] - a[i];
    return out;
}

std::size_t repetition_count(const BinaryMatrix& p, std::span<const int> x)
{
    std::size_t count = 0;
    for (const auto& a : p.ones())
        for (const auto& b : p.ones())
            if (a != b && std::ranges::equal(distance_vector(a, b), x))
                ++count;
    return count;
}

bool is_r_repeated(const BinaryMatrix& p, std::span<const int> x, std::size_t r)
{
    return repetition_count(p, x) >= r;
}

Repetition max_repetition(const BinaryMatrix& p)
{
    std::map<std::vector<int>, std::size_t> counts;
    for (const auto& a : p.ones())
        for (const auto& b : p.ones())
            if (a != b)
                ++counts[distance_vector(a, b)];
    Repetition best;
    for (const auto& [v, n] : counts)
        if (n > best.count)
            best = {n, v};
    return best;
}

bool has_one_per_cross_section(const BinaryMatrix& a)
{
    for (int l = 1; l <= a.dimension(); ++l) {
        std::vector<int> hits(static_cast<std::size_t>(a.extent(l)) + 1, 0);
        for (const auto& c : a.ones())
            ++hits[static_cast<std::size_t>(c[static_cast<std::size_t>(l - 1)])];
        for (int v = 1; v <= a.extent(l); ++v)
            if (hits[static_cast<std::size_t>(v)] != 1)
                return false;
    }
    return true;
}

}  // namespace patex
