#include "patex/containment.hpp"

#include "patex/detail/embedding.hpp"
#include "patex/detail/hyper_embedding.hpp"
#include "patex/errors.hpp"

#include <algorithm>
#include <bit>

namespace patex {

namespace detail {

VertexMask edge_mask(const Edge& e)
{
    VertexMask m = 0;
    for (int v : e)
        m |= VertexMask{1} << (v - 1);
    return m;
}

MaskHypergraph to_masks(const OrderedHypergraph& h)
{
    if (h.vertex_count() > max_mask_vertices)
        throw CapacityError("hypergraph containment supports at most 64 vertices, got " + std::to_string(h.vertex_count()));
    MaskHypergraph out{h.vertex_count(), {}};
    out.edges.reserve(h.edge_count());
    for (const auto& e : h.edges())
        out.edges.push_back(edge_mask(e));
    return out;
}

namespace {

VertexMask bits_above(int v)
{
    return v >= 64 ? 0 : ~VertexMask{0} << v;
}

class HyperSearch {
public:
    HyperSearch(const MaskHypergraph& host, const MaskHypergraph& pattern) : host_(host), pattern_(pattern)
    {
        const auto m = pattern.edges.size();
        first_vertex_.resize(m);
        size_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            first_vertex_[i] = std::countr_zero(pattern.edges[i]) + 1;
            size_[i] = std::popcount(pattern.edges[i]);
        }
        f_.assign(static_cast<std::size_t>(pattern.n) + 1, 0);
    }

    std::optional<HyperMatch> run()
    {
        if (pattern_.n > host_.n || pattern_.edges.size() > host_.edges.size())
            return std::nullopt;
        if (!dfs(1))
            return std::nullopt;
        return HyperMatch{std::vector<int>(f_.begin() + 1, f_.end()), g_};
    }

private:
    VertexMask image(std::size_t edge, int upto, int& mapped) const
    {
        VertexMask img = 0;
        mapped = 0;
        for (VertexMask e = pattern_.edges[edge]; e; e &= e - 1) {
            const int v = std::countr_zero(e) + 1;
            if (v > upto)
                break;
            img |= VertexMask{1} << (f_[static_cast<std::size_t>(v)] - 1);
            ++mapped;
        }
        return img;
    }

    // Some host edge can still cover every pattern edge touched so far.
    bool edges_feasible(int v) const
    {
        const int fv = f_[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < pattern_.edges.size(); ++i) {
            if (first_vertex_[i] > v)
                continue;
            int mapped = 0;
            const VertexMask img = image(i, v, mapped);
            const int missing = size_[i] - mapped;
            bool ok = false;
            for (VertexMask h : host_.edges)
                if ((h & img) == img && std::popcount(h & bits_above(fv)) >= missing) {
                    ok = true;
                    break;
                }
            if (!ok)
                return false;
        }
        return true;
    }

    bool augment(std::size_t i, std::vector<int>& owner, std::vector<char>& seen,
                 const std::vector<char>& blocked) const
    {
        for (std::size_t j : compatible_[i]) {
            if (blocked[j] || seen[j])
                continue;
            seen[j] = 1;
            if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), owner, seen, blocked)) {
                owner[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }

    // Pattern edges from..m-1 can be matched into unblocked host edges.
    bool matchable(std::size_t from, const std::vector<char>& blocked) const
    {
        std::vector<int> owner(host_.edges.size(), -1);
        for (std::size_t i = from; i < compatible_.size(); ++i) {
            std::vector<char> seen(host_.edges.size(), 0);
            if (!augment(i, owner, seen, blocked))
                return false;
        }
        return true;
    }

    bool assign_edges()
    {
        const auto m = pattern_.edges.size();
        compatible_.assign(m, {});
        for (std::size_t i = 0; i < m; ++i) {
            int mapped = 0;
            const VertexMask img = image(i, pattern_.n, mapped);
            for (std::size_t j = 0; j < host_.edges.size(); ++j)
                if ((host_.edges[j] & img) == img)
                    compatible_[i].push_back(j);
            if (compatible_[i].empty())
                return false;
        }
        std::vector<char> blocked(host_.edges.size(), 0);
        if (!matchable(0, blocked))
            return false;
        g_.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            bool placed = false;
            for (std::size_t j : compatible_[i]) {
                if (blocked[j])
                    continue;
                blocked[j] = 1;
                if (matchable(i + 1, blocked)) {
                    g_[i] = j;
                    placed = true;
                    break;
                }
                blocked[j] = 0;
            }
            if (!placed)
                return false;  // unreachable once matchable(0) holds
        }
        return true;
    }

    bool dfs(int v)
    {
        if (v > pattern_.n)
            return assign_edges();
        const int lo = f_[static_cast<std::size_t>(v - 1)] + 1;
        const int hi = host_.n - (pattern_.n - v);
        for (int x = lo; x <= hi; ++x) {
            f_[static_cast<std::size_t>(v)] = x;
            if (edges_feasible(v) && dfs(v + 1))
                return true;
        }
        return false;
    }

    const MaskHypergraph& host_;
    const MaskHypergraph& pattern_;
    std::vector<int> first_vertex_, size_;
    std::vector<int> f_;
    std::vector<std::vector<std::size_t>> compatible_;
    std::vector<std::size_t> g_;
};

struct SparseHost {
    const BinaryMatrix& m;
    bool one(std::span<const int> c) const { return m.at(c); }
    bool has_prefix(std::span<const int> c, std::size_t n) const { return m.has_prefix(c, n); }
};

}  // namespace

std::optional<HyperMatch> find_hyper_embedding(const MaskHypergraph& host, const MaskHypergraph& pattern)
{
    return HyperSearch(host, pattern).run();
}

}  // namespace detail

bool represents(const BinaryMatrix& a, const BinaryMatrix& b)
{
    if (a.extents() != b.extents())
        throw InputError("represents() needs matrices of equal extents");
    return std::ranges::includes(a.ones(), b.ones());
}

BinaryMatrix submatrix(const BinaryMatrix& a, const MatrixEmbedding& embedding)
{
    const auto d = static_cast<std::size_t>(a.dimension());
    if (embedding.indices.size() != d)
        throw InputError("embedding dimension mismatch");
    std::vector<int> extents;
    for (const auto& axis : embedding.indices)
        extents.push_back(static_cast<int>(axis.size()));
    std::vector<Coord> ones;
    for (const auto& c : a.ones()) {
        Coord local(d);
        bool inside = true;
        for (std::size_t l = 0; l < d && inside; ++l) {
            const auto& axis = embedding.indices[l];
            auto it = std::lower_bound(axis.begin(), axis.end(), c[l]);
            inside = it != axis.end() && *it == c[l];
            if (inside)
                local[l] = static_cast<int>(it - axis.begin()) + 1;
        }
        if (inside)
            ones.push_back(std::move(local));
    }
    return BinaryMatrix(std::move(extents), std::move(ones));
}

std::optional<MatrixEmbedding> matrix_contains(const BinaryMatrix& a, const BinaryMatrix& b)
{
    detail::SparseHost host{a};
    auto found = detail::EmbeddingSearch<detail::SparseHost>(host, a.extents(), b).run();
    if (!found)
        return std::nullopt;
    return MatrixEmbedding{std::move(*found)};
}

bool verify_matrix_embedding(const BinaryMatrix& a, const BinaryMatrix& b, const MatrixEmbedding& embedding)
{
    const auto d = static_cast<std::size_t>(a.dimension());
    if (embedding.indices.size() != d || b.dimension() != a.dimension())
        return false;
    for (std::size_t l = 0; l < d; ++l) {
        const auto& axis = embedding.indices[l];
        if (static_cast<int>(axis.size()) != b.extents()[l])
            return false;
        for (std::size_t j = 0; j < axis.size(); ++j)
            if (axis[j] < 1 || axis[j] > a.extents()[l] || (j > 0 && axis[j] <= axis[j - 1]))
                return false;
    }
    return represents(submatrix(a, embedding), b);
}

std::optional<HypergraphEmbedding> hypergraph_contains(const OrderedHypergraph& host, const OrderedHypergraph& pattern)
{
    auto found = detail::find_hyper_embedding(detail::to_masks(host), detail::to_masks(pattern));
    if (!found)
        return std::nullopt;
    return HypergraphEmbedding{std::move(found->vertex_map), std::move(found->edge_map)};
}

bool verify_hypergraph_embedding(const OrderedHypergraph& host, const OrderedHypergraph& pattern,
                                 const HypergraphEmbedding& embedding)
{
    const auto& f = embedding.vertex_map;
    const auto& g = embedding.edge_map;
    if (f.size() != static_cast<std::size_t>(pattern.vertex_count()) || g.size() != pattern.edge_count())
        return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] < 1 || f[i] > host.vertex_count() || (i > 0 && f[i] <= f[i - 1]))
            return false;
    std::vector<std::size_t> used(g);
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] >= host.edge_count())
            return false;
        Edge image;
        for (int v : pattern.edges()[i])
            image.push_back(f[static_cast<std::size_t>(v - 1)]);
        if (!std::ranges::includes(host.edges()[g[i]], image))
            return false;
    }
    return true;
}

bool order_isomorphic(const OrderedHypergraph& a, const OrderedHypergraph& b)
{
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

bool klazar_marcus_check(const OrderedHypergraph& host, const PartsSpec& host_parts,
                         const OrderedHypergraph& pattern, const PartsSpec& pattern_parts)
{
    const int d = host_parts.part_count();
    if (pattern_parts.part_count() != d)
        throw InputError("host and pattern must have the same number of parts");
    if (!pattern.isolated_vertices().empty())
        throw InputError("pattern has an isolated vertex");
    // associated_matrix validates uniformity and partiteness.
    const BinaryMatrix host_matrix = associated_matrix(host, host_parts);
    const BinaryMatrix pattern_matrix = associated_matrix(pattern, pattern_parts);
    const bool by_graph = hypergraph_contains(host, pattern).has_value();
    const bool by_matrix = matrix_contains(host_matrix, pattern_matrix).has_value();
    if (by_graph != by_matrix)
        throw ConsistencyError("hypergraph containment (" + std::string(by_graph ? "yes" : "no") +
                               ") disagrees with associated-matrix containment (" +
                               std::string(by_matrix ? "yes" : "no") + ") for host " + host.to_string() +
                               " and pattern " + pattern.to_string());
    return by_graph;
}

}  // namespace patex
