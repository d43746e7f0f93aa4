#pragma once

// Brute-force reference implementations. Slow and obviously correct; the
// tests compare the library against these on small inputs.

#include "patex/hypergraph.hpp"
#include "patex/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using patex::BinaryMatrix;
using patex::Coord;
using patex::Edge;
using patex::OrderedHypergraph;

/// Every increasing k-subset of [n].
inline std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Tries every choice of index subsets on every axis.
inline bool matrix_contains(const BinaryMatrix& a, const BinaryMatrix& b)
{
    const int d = a.dimension();
    if (b.dimension() != d)
        return false;
    std::vector<std::vector<std::vector<int>>> choices;
    for (int l = 1; l <= d; ++l) {
        if (b.extent(l) > a.extent(l))
            return false;
        choices.push_back(subsets(a.extent(l), b.extent(l)));
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    while (true) {
        bool all = true;
        for (const auto& c : b.ones()) {
            Coord image(c.size());
            for (std::size_t l = 0; l < c.size(); ++l)
                image[l] = choices[l][pick[l]].at(static_cast<std::size_t>(c[l] - 1));
            if (!a.at(image)) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
        int l = d - 1;
        while (l >= 0 && ++pick[static_cast<std::size_t>(l)] == choices[static_cast<std::size_t>(l)].size())
            pick[static_cast<std::size_t>(l--)] = 0;
        if (l < 0)
            return false;
    }
}

/// All coordinates of the cube [n]^d in lexicographic order.
inline std::vector<Coord> cube_cells(int d, int n)
{
    std::vector<Coord> out;
    Coord c(static_cast<std::size_t>(d), 1);
    while (true) {
        out.push_back(c);
        int l = d - 1;
        while (l >= 0 && ++c[static_cast<std::size_t>(l)] > n)
            c[static_cast<std::size_t>(l--)] = 1;
        if (l < 0)
            return out;
    }
}

/// Largest weight over all 2^(n^d) side-n d-matrices avoiding b.
inline long long max_avoider_weight(const BinaryMatrix& b, int d, int n)
{
    const auto cells = cube_cells(d, n);
    long long best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells.size()); ++mask) {
        const int w = std::popcount(mask);
        if (w <= best)
            continue;
        std::vector<Coord> ones;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if ((mask >> i) & 1u)
                ones.push_back(cells[i]);
        if (!matrix_contains(BinaryMatrix::cube(d, n, ones), b))
            best = w;
    }
    return best;
}

/// Definition-level hypergraph containment: every increasing f, then every injective g.
inline bool hypergraph_contains(const OrderedHypergraph& g, const OrderedHypergraph& h)
{
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
        return false;
    for (const auto& f : subsets(g.vertex_count(), h.vertex_count())) {
        std::vector<bool> used(g.edge_count(), false);
        std::function<bool(std::size_t)> assign = [&](std::size_t i) {
            if (i == h.edge_count())
                return true;
            Edge image;
            for (int v : h.edges()[i])
                image.push_back(f[static_cast<std::size_t>(v - 1)]);
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                if (used[j] || !std::includes(g.edges()[j].begin(), g.edges()[j].end(), image.begin(), image.end()))
                    continue;
                used[j] = true;
                if (assign(i + 1))
                    return true;
                used[j] = false;
            }
            return false;
        };
        if (assign(0))
            return true;
    }
    return false;
}

/// Every nonempty subset of [n] in lexicographic order.
inline std::vector<Edge> all_edges(int n, int cap)
{
    std::vector<Edge> out;
    for (int k = 1; k <= cap; ++k)
        for (auto& s : subsets(n, k))
            out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls fn on every hypergraph on [n] whose edges come from `cands`.
inline void for_each_hypergraph(int n, const std::vector<Edge>& cands, const std::function<void(const OrderedHypergraph&)>& fn)
{
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cands.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if ((mask >> i) & 1u)
                edges.push_back(cands[i]);
        fn(OrderedHypergraph(n, std::move(edges)));
    }
}

struct HyperExtremes {
    long long edges = -1;
    long long weight = -1;
    long long count = 0;
};

/// ex_e, ex_i and |M(H, n)| over hypergraphs with edges of size <= cap.
inline HyperExtremes hyper_extremes(const OrderedHypergraph& h, int n, int cap)
{
    HyperExtremes r;
    for_each_hypergraph(n, all_edges(n, cap), [&](const OrderedHypergraph& g) {
        if (hypergraph_contains(g, h))
            return;
        ++r.count;
        r.edges = std::max<long long>(r.edges, static_cast<long long>(g.edge_count()));
        r.weight = std::max<long long>(r.weight, static_cast<long long>(g.weight()));
    });
    return r;
}

}  // namespace oracle
