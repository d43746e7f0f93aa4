#include "patex/hypergraph.hpp"

#include "patex/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace patex {

OrderedHypergraph::OrderedHypergraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges))
{
    if (n_ < 0)
        throw InputError("vertex count must be nonnegative");
    for (auto& e : edges_) {
        if (e.empty())
            throw InputError("empty edges are not allowed");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InputError("edge repeats a vertex");
        if (e.front() < 1 || e.back() > n_)
            throw InputError("edge vertex out of range [1, " + std::to_string(n_) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
}

OrderedHypergraph OrderedHypergraph::from_labels(std::vector<int> labels, const std::vector<Edge>& edges)
{
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) {
        Edge m;
        for (int v : e) {
            auto it = std::lower_bound(labels.begin(), labels.end(), v);
            if (it == labels.end() || *it != v)
                throw InputError("edge uses an unknown vertex label");
            m.push_back(static_cast<int>(it - labels.begin()) + 1);
        }
        mapped.push_back(std::move(m));
    }
    return OrderedHypergraph(static_cast<int>(labels.size()), std::move(mapped));
}

std::size_t OrderedHypergraph::weight() const
{
    std::size_t w = 0;
    for (const auto& e : edges_)
        w += e.size();
    return w;
}

bool OrderedHypergraph::is_uniform(std::size_t d) const
{
    return std::ranges::all_of(edges_, [d](const Edge& e) { return e.size() == d; });
}

bool OrderedHypergraph::has_edge(std::span<const int> edge) const
{
    return std::binary_search(edges_.begin(), edges_.end(), edge,
        [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
}

std::vector<int> OrderedHypergraph::isolated_vertices() const
{
    std::vector<bool> covered(static_cast<std::size_t>(n_) + 1, false);
    for (const auto& e : edges_)
        for (int v : e)
            covered[static_cast<std::size_t>(v)] = true;
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

std::string OrderedHypergraph::to_string() const
{
    std::ostringstream out;
    out << "n=" << n_ << " edges {";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        out << (i ? "," : "") << '{';
        for (std::size_t j = 0; j < edges_[i].size(); ++j)
            out << (j ? "," : "") << edges_[i][j];
        out << '}';
    }
    out << '}';
    return out.str();
}

PartsSpec::PartsSpec(std::vector<int> boundaries) : boundaries_(std::move(boundaries))
{
    if (boundaries_.size() < 2 || boundaries_.front() != 0)
        throw InputError("part boundaries must start at 0 and name at least one part");
    for (std::size_t i = 1; i < boundaries_.size(); ++i)
        if (boundaries_[i] <= boundaries_[i - 1])
            throw InputError("part boundaries must be strictly increasing");
}

PartsSpec PartsSpec::from_sizes(std::span<const int> sizes)
{
    std::vector<int> b{0};
    for (int s : sizes)
        b.push_back(b.back() + s);
    return PartsSpec(std::move(b));
}

PartsSpec PartsSpec::equal(int parts, int size)
{
    std::vector<int> sizes(static_cast<std::size_t>(parts), size);
    return from_sizes(sizes);
}

int PartsSpec::size(int part) const
{
    return boundaries_.at(static_cast<std::size_t>(part)) - boundaries_.at(static_cast<std::size_t>(part - 1));
}

std::vector<int> PartsSpec::sizes() const
{
    std::vector<int> out;
    for (int i = 1; i <= part_count(); ++i)
        out.push_back(size(i));
    return out;
}

int PartsSpec::part_of(int v) const
{
    auto it = std::lower_bound(boundaries_.begin() + 1, boundaries_.end(), v);
    if (v < 1 || it == boundaries_.end())
        throw InputError("vertex outside the parts");
    return static_cast<int>(it - boundaries_.begin());
}

AssociatedHypergraph associated_hypergraph(const BinaryMatrix& m)
{
    PartsSpec parts = PartsSpec::from_sizes(m.extents());
    std::vector<Edge> edges;
    edges.reserve(m.weight());
    for (const auto& c : m.ones()) {
        Edge e(c.size());
        for (std::size_t j = 0; j < c.size(); ++j)
            e[j] = parts.boundaries()[j] + c[j];
        edges.push_back(std::move(e));
    }
    return {OrderedHypergraph(parts.vertex_count(), std::move(edges)), std::move(parts)};
}

bool is_d_partite(const OrderedHypergraph& h, const PartsSpec& parts)
{
    if (parts.vertex_count() != h.vertex_count())
        return false;
    for (const auto& e : h.edges()) {
        int last = 0;
        for (int v : e) {
            const int p = parts.part_of(v);
            if (p == last)
                return false;
            last = p;
        }
    }
    return true;
}

BinaryMatrix associated_matrix(const OrderedHypergraph& h, const PartsSpec& parts)
{
    const auto d = static_cast<std::size_t>(parts.part_count());
    if (d < 2)
        throw InputError("an associated matrix needs at least two parts");
    if (!h.is_uniform(d))
        throw InputError("hypergraph is not " + std::to_string(d) + "-uniform");
    if (!is_d_partite(h, parts))
        throw InputError("hypergraph is not " + std::to_string(d) + "-partite for the given parts");
    std::vector<Coord> ones;
    ones.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        Coord c(d);
        // d-partite and d-uniform: the j-th smallest vertex sits in part j.
        for (std::size_t j = 0; j < d; ++j)
            c[j] = e[j] - parts.boundaries()[j];
        ones.push_back(std::move(c));
    }
    return BinaryMatrix(parts.sizes(), std::move(ones));
}

std::optional<int> is_d_permutation_hypergraph(const OrderedHypergraph& h)
{
    if (h.edge_count() == 0)
        return std::nullopt;
    const std::size_t d = h.edges().front().size();
    if (d < 2 || !h.is_uniform(d) || h.vertex_count() % static_cast<int>(d) != 0)
        return std::nullopt;
    const int k = h.vertex_count() / static_cast<int>(d);
    if (h.edge_count() != static_cast<std::size_t>(k))
        return std::nullopt;
    if (!h.isolated_vertices().empty())
        return std::nullopt;
    if (!is_d_partite(h, PartsSpec::equal(static_cast<int>(d), k)))
        return std::nullopt;
    return k;
}

PartsSpec permutation_parts(const OrderedHypergraph& h)
{
    auto k = is_d_permutation_hypergraph(h);
    if (!k)
        throw InputError("not a d-permutation hypergraph");
    return PartsSpec::equal(h.vertex_count() / *k, *k);
}

}  // namespace patex
