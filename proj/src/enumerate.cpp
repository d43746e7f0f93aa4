#include "patex/enumerate.hpp"

#include "patex/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace patex::enumerate {

std::vector<std::vector<int>> permutations(int k)
{
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<BinaryMatrix> d_permutation_matrices(int d, int k)
{
    const auto perms = permutations(k);
    std::vector<BinaryMatrix> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(d - 1), 0);
    while (true) {
        std::vector<std::vector<int>> chosen;
        for (auto i : pick)
            chosen.push_back(perms[i]);
        out.push_back(d_permutation_matrix(PermutationSpec(k, std::move(chosen))));
        int pos = d - 2;
        while (pos >= 0 && ++pick[static_cast<std::size_t>(pos)] == perms.size())
            pick[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            break;
    }
    return out;
}

std::vector<BinaryMatrix> matrices(const std::vector<int>& extents)
{
    std::size_t cells = 1;
    for (int n : extents)
        cells *= static_cast<std::size_t>(n);
    if (cells > 24)
        throw CapacityError("refusing to enumerate 2^" + std::to_string(cells) + " matrices");
    std::vector<Coord> coords;
    Coord c(extents.size(), 1);
    for (std::size_t i = 0; i < cells; ++i) {
        coords.push_back(c);
        for (int l = static_cast<int>(c.size()) - 1; l >= 0; --l) {
            if (++c[static_cast<std::size_t>(l)] <= extents[static_cast<std::size_t>(l)])
                break;
            c[static_cast<std::size_t>(l)] = 1;
        }
    }
    std::vector<BinaryMatrix> out;
    out.reserve(std::size_t{1} << cells);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
        std::vector<Coord> ones;
        for (std::size_t i = 0; i < cells; ++i)
            if ((mask >> i) & 1u)
                ones.push_back(coords[i]);
        out.emplace_back(extents, std::move(ones));
    }
    return out;
}

std::vector<OrderedHypergraph> graphs(int n)
{
    std::vector<Edge> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.push_back({i, j});
    if (pairs.size() > 24)
        throw CapacityError("refusing to enumerate all graphs on " + std::to_string(n) + " vertices");
    std::vector<OrderedHypergraph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u)
                edges.push_back(pairs[i]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace patex::enumerate
