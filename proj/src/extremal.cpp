#include "patex/extremal.hpp"

#include "patex/containment.hpp"
#include "patex/detail/branch_bound.hpp"
#include "patex/detail/embedding.hpp"
#include "patex/detail/hyper_embedding.hpp"
#include "patex/errors.hpp"

#include <algorithm>
#include <bit>

namespace patex {

std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

using detail::ItemMask;
using detail::item_bit;

void check_item_limit(long long items, const SearchOptions& options, const std::string& what)
{
    const int limit = std::min(options.max_items, 64);
    if (items > limit)
        throw CapacityError(what + " needs " + std::to_string(items) + " branching items; the limit is " +
                            std::to_string(limit));
}

/// Cubic d-matrix of side n stored as one bit per cell in row-major (lexicographic) order.
struct DenseCube {
    int d;
    int n;
    ItemMask cells;

    bool one(std::span<const int> c) const
    {
        int index = 0;
        for (int v : c)
            index = index * n + (v - 1);
        return (cells >> index) & 1u;
    }
};

class MatrixProblem {
public:
    MatrixProblem(const BinaryMatrix& pattern, int d, int n) : pattern_(pattern), d_(d), n_(n)
    {
        cells_ = 1;
        for (int l = 0; l < d; ++l)
            cells_ *= n;
        extents_.assign(static_cast<std::size_t>(d), n);
        const Coord& last = pattern.ones().back();
        pins_.position.resize(static_cast<std::size_t>(d));
        pins_.value.resize(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l)
            pins_.position[static_cast<std::size_t>(l)] = last[static_cast<std::size_t>(l)] - 1;
        init_line_cap();
    }

    int item_count() const { return cells_; }
    long long weight(int) const { return 1; }

    // Cells are added in lexicographic order, so a new copy must send the
    // pattern's lexicographically greatest 1-entry onto the new cell.
    bool blocked(ItemMask sel, int item) const
    {
        detail::Pins pins = pins_;
        int rest = item;
        for (int l = d_ - 1; l >= 0; --l) {
            pins.value[static_cast<std::size_t>(l)] = rest % n_ + 1;
            rest /= n_;
        }
        DenseCube host{d_, n_, sel | item_bit(item)};
        return detail::EmbeddingSearch<DenseCube>(host, extents_, pattern_, &pins).run().has_value();
    }

    bool avoids(ItemMask sel) const
    {
        DenseCube host{d_, n_, sel};
        return !detail::EmbeddingSearch<DenseCube>(host, extents_, pattern_).run().has_value();
    }

    long long upper_bound(ItemMask sel, int item, long long current) const
    {
        const long long remaining = cells_ - item;
        if (!line_cap_)
            return current + remaining;
        const int cap = *line_cap_;
        const int line = item / n_;
        const int lines = cells_ / n_;
        const ItemMask line_bits = (item_bit(n_) - 1) << (line * n_);
        const int in_line = std::popcount(sel & line_bits);
        const long long here = std::min<long long>(n_ - item % n_, std::max(0, cap - in_line));
        return current + here + static_cast<long long>(lines - line - 1) * std::min(n_, cap);
    }

    BinaryMatrix to_matrix(ItemMask sel) const
    {
        std::vector<Coord> ones;
        for (ItemMask s = sel; s; s &= s - 1) {
            int rest = std::countr_zero(s);
            Coord c(static_cast<std::size_t>(d_));
            for (int l = d_ - 1; l >= 0; --l) {
                c[static_cast<std::size_t>(l)] = rest % n_ + 1;
                rest /= n_;
            }
            ones.push_back(std::move(c));
        }
        return BinaryMatrix::cube(d_, n_, std::move(ones));
    }

private:
    // A pattern confined to one line along the last axis caps the 1-entries of every such host line.
    void init_line_cap()
    {
        for (int l = 0; l + 1 < d_; ++l)
            if (pattern_.extents()[static_cast<std::size_t>(l)] != 1)
                return;
        const int k = pattern_.extents().back();
        if (k > n_)
            return;
        std::vector<Coord> line_pattern;
        for (const auto& c : pattern_.ones())
            line_pattern.push_back({1, c.back()});
        const BinaryMatrix row_pattern({1, k}, line_pattern);
        int best = 0;
        for (ItemMask s = 0; s < item_bit(n_); ++s) {
            const int w = std::popcount(s);
            if (w <= best)
                continue;
            std::vector<Coord> ones;
            for (int j = 0; j < n_; ++j)
                if ((s >> j) & 1u)
                    ones.push_back({1, j + 1});
            if (!matrix_contains(BinaryMatrix({1, n_}, std::move(ones)), row_pattern))
                best = w;
        }
        line_cap_ = best;
    }

    const BinaryMatrix& pattern_;
    int d_, n_;
    int cells_;
    std::vector<int> extents_;
    detail::Pins pins_;
    std::optional<int> line_cap_;
};

class HyperProblem {
public:
    HyperProblem(const OrderedHypergraph& pattern, int n, std::vector<Edge> candidates, bool weigh_by_size)
        : pattern_(detail::to_masks(pattern)), n_(n), candidates_(std::move(candidates))
    {
        for (const auto& e : candidates_) {
            masks_.push_back(detail::edge_mask(e));
            weights_.push_back(weigh_by_size ? static_cast<long long>(e.size()) : 1);
        }
    }

    int item_count() const { return static_cast<int>(candidates_.size()); }
    long long weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }

    bool blocked(ItemMask sel, int item) const { return !avoids(sel | item_bit(item)); }

    bool avoids(ItemMask sel) const
    {
        detail::MaskHypergraph host{n_, {}};
        for (ItemMask s = sel; s; s &= s - 1)
            host.edges.push_back(masks_[static_cast<std::size_t>(std::countr_zero(s))]);
        return !detail::find_hyper_embedding(host, pattern_).has_value();
    }

    OrderedHypergraph to_hypergraph(ItemMask sel) const
    {
        std::vector<Edge> edges;
        for (ItemMask s = sel; s; s &= s - 1)
            edges.push_back(candidates_[static_cast<std::size_t>(std::countr_zero(s))]);
        return OrderedHypergraph(n_, std::move(edges));
    }

private:
    detail::MaskHypergraph pattern_;
    int n_;
    std::vector<Edge> candidates_;
    std::vector<detail::VertexMask> masks_;
    std::vector<long long> weights_;
};

/// Adds the suffix weight the engine expects from upper_bound for problems without a custom bound.
template <class P>
struct SuffixBound : P {
    using P::P;
    std::vector<long long> suffix;

    void init()
    {
        suffix.assign(static_cast<std::size_t>(this->item_count()) + 1, 0);
        for (int i = this->item_count() - 1; i >= 0; --i)
            suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + this->weight(i);
    }

    long long upper_bound(ItemMask, int i, long long current) const { return current + suffix[static_cast<std::size_t>(i)]; }
};

void validate_n(int n)
{
    if (n < 1)
        throw InputError("n must be at least 1");
}

SearchCertificate run_matrix_search(const BinaryMatrix& pattern, int d, int n, const SearchOptions& options)
{
    validate_n(n);
    if (pattern.dimension() != d)
        throw InputError("pattern dimension " + std::to_string(pattern.dimension()) + " does not match d = " + std::to_string(d));
    if (pattern.weight() == 0)
        throw InputError("pattern weight 0: every matrix contains it");
    long long cells = 1;
    for (int l = 0; l < d && cells <= 64; ++l)
        cells *= n;
    check_item_limit(cells, options, "side-" + std::to_string(n) + " " + std::to_string(d) + "-matrix search");

    MatrixProblem problem(pattern, d, n);
    auto outcome = detail::BranchAndBound<MatrixProblem>(problem, options.workers).run();
    if (!outcome)
        throw InputError("pattern weight 0: every matrix contains it");
    SearchCertificate cert{outcome->value, problem.to_matrix(outcome->selection), false};
    cert.verified = verify_certificate(cert, pattern);
    return cert;
}

std::vector<Edge> hyper_candidates(int n, int cap, const SearchOptions& options, const std::string& what)
{
    long long count = 0;
    long long binom = 1;
    for (int s = 1; s <= cap; ++s) {
        binom = binom * (n - s + 1) / s;
        count += binom;
    }
    check_item_limit(count, options, what);
    return candidate_edges(n, cap);
}

SearchCertificate run_hyper_search(const OrderedHypergraph& pattern, int n, std::vector<Edge> candidates,
                                   bool weigh_by_size, const SearchOptions& options)
{
    SuffixBound<HyperProblem> problem(pattern, n, std::move(candidates), weigh_by_size);
    problem.init();
    auto outcome = detail::BranchAndBound<SuffixBound<HyperProblem>>(problem, options.workers).run();
    if (!outcome)
        throw InputError("pattern has no edges: every hypergraph contains it");
    SearchCertificate cert{outcome->value, problem.to_hypergraph(outcome->selection), false};
    cert.verified = verify_certificate(cert, pattern, weigh_by_size);
    return cert;
}

int hyper_cap(const OrderedHypergraph& pattern, int n, const SearchOptions& options)
{
    int cap = n;
    if (!options.exact)
        cap = options.edge_cap.value_or(pattern.vertex_count());
    if (cap < 1)
        throw InputError("edge-size cap must be at least 1");
    return std::min(cap, n);
}

}  // namespace

std::vector<Edge> candidate_edges(int n, int cap)
{
    std::vector<Edge> out;
    Edge current;
    auto extend = [&](auto&& self, int next) -> void {
        for (int v = next; v <= n; ++v) {
            current.push_back(v);
            out.push_back(current);
            if (static_cast<int>(current.size()) < cap)
                self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

SearchCertificate ex_matrix(const BinaryMatrix& pattern, int n, const SearchOptions& options)
{
    if (pattern.dimension() != 2)
        throw InputError("ex() takes a 2-dimensional pattern");
    return run_matrix_search(pattern, 2, n, options);
}

SearchCertificate f_multi(const BinaryMatrix& pattern, int d, int n, const SearchOptions& options)
{
    return run_matrix_search(pattern, d, n, options);
}

SearchCertificate gex_graph(const OrderedHypergraph& pattern, int n, const SearchOptions& options)
{
    validate_n(n);
    if (!pattern.is_uniform(2))
        throw InputError("gex() takes a 2-uniform pattern");
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    check_item_limit(pairs, options, "graph search");
    std::vector<Edge> candidates;
    for (auto& e : candidate_edges(n, 2))
        if (e.size() == 2)
            candidates.push_back(std::move(e));
    return run_hyper_search(pattern, n, std::move(candidates), false, options);
}

SearchCertificate exe_hyper(const OrderedHypergraph& pattern, int n, const SearchOptions& options)
{
    validate_n(n);
    const int cap = hyper_cap(pattern, n, options);
    auto candidates = hyper_candidates(n, cap, options, "hypergraph search");
    return run_hyper_search(pattern, n, std::move(candidates), false, options);
}

SearchCertificate exi_hyper(const OrderedHypergraph& pattern, int n, const SearchOptions& options)
{
    validate_n(n);
    const int cap = hyper_cap(pattern, n, options);
    auto candidates = hyper_candidates(n, cap, options, "hypergraph search");
    return run_hyper_search(pattern, n, std::move(candidates), true, options);
}

BigInt count_avoiders(const OrderedHypergraph& pattern, int n, const SearchOptions& options)
{
    validate_n(n);
    int cap = n;
    if (!options.exact && options.edge_cap)
        cap = std::min(*options.edge_cap, n);
    if (cap < 1)
        throw InputError("edge-size cap must be at least 1");
    if (cap == n && n > options.max_uncapped_count_n)
        throw CapacityError("counting all hypergraphs on [" + std::to_string(n) + "] is beyond the enumeration limit n <= " +
                            std::to_string(options.max_uncapped_count_n) + "; pass an edge-size cap");
    SuffixBound<HyperProblem> problem(pattern, n, hyper_candidates(n, cap, options, "avoider count"), false);
    problem.init();
    return detail::count_feasible(problem);
}

bool verify_certificate(const SearchCertificate& cert, const BinaryMatrix& pattern)
{
    const auto* m = std::get_if<BinaryMatrix>(&cert.witness);
    if (!m)
        return false;
    return static_cast<long long>(m->weight()) == cert.value && !matrix_contains(*m, pattern).has_value();
}

bool verify_certificate(const SearchCertificate& cert, const OrderedHypergraph& pattern, bool weight_is_edge_sizes)
{
    const auto* h = std::get_if<OrderedHypergraph>(&cert.witness);
    if (!h)
        return false;
    const auto size = weight_is_edge_sizes ? h->weight() : h->edge_count();
    return static_cast<long long>(size) == cert.value && !hypergraph_contains(*h, pattern).has_value();
}

ExtremalTable::ExtremalTable(std::string pattern_id, int dimension, std::vector<TableRow> rows)
    : pattern_id_(std::move(pattern_id)), dimension_(dimension), rows_(std::move(rows))
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].n < 1)
            throw InputError("table rows need n >= 1");
        if (i > 0 && rows_[i].n <= rows_[i - 1].n)
            throw InputError("table rows must be sorted by strictly increasing n");
        if (i > 0 && rows_[i].value < rows_[i - 1].value)
            throw ConsistencyError("extremal values decrease from n=" + std::to_string(rows_[i - 1].n) +
                                   " to n=" + std::to_string(rows_[i].n));
    }
}

Rational ExtremalTable::ratio(std::size_t i) const
{
    const auto& r = rows_.at(i);
    BigInt scale = 1;
    for (int l = 0; l + 1 < dimension_; ++l)
        scale *= r.n;
    return Rational(r.value, scale);
}

Rational ExtremalTable::linear_ratio(std::size_t i) const
{
    const auto& r = rows_.at(i);
    return Rational(r.value, BigInt(r.n));
}

bool ExtremalTable::ratios_nondecreasing() const
{
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (linear_ratio(i) < linear_ratio(i - 1))
            return false;
    return true;
}

Rational estimate_limit(const ExtremalTable& table)
{
    if (table.rows().empty())
        throw InputError("cannot estimate a limit from an empty table");
    return table.linear_ratio(table.rows().size() - 1);
}

}  // namespace patex
