#include "patex/constructions.hpp"

#include "patex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace patex {

BinaryMatrix corner_pad(const BinaryMatrix& p)
{
    if (p.dimension() != 2)
        throw InputError("corner_pad takes a 2-dimensional matrix");
    const int k1 = p.extent(1);
    const int k2 = p.extent(2);
    std::vector<Coord> ones;
    for (const auto& c : p.ones())
        ones.push_back({c[0], c[1] + 1});
    ones.push_back({k1 + 1, 1});
    return BinaryMatrix({k1 + 1, k2 + 1}, std::move(ones));
}

BinaryMatrix bipartite_double(const OrderedHypergraph& a)
{
    if (!a.is_uniform(2))
        throw InputError("bipartite_double takes an ordered graph (2-uniform)");
    const int n = a.vertex_count();
    if (n < 1)
        throw InputError("bipartite_double needs at least one vertex");
    std::vector<Coord> ones;
    for (const auto& e : a.edges())
        ones.push_back({e[0], e[1]});
    return BinaryMatrix({n, n}, std::move(ones));
}

HypergraphEmbedding lift_doubling_embedding(const OrderedHypergraph& graph, const BinaryMatrix& pattern,
                                            const MatrixEmbedding& embedding)
{
    const auto& rows = embedding.indices.at(0);
    const auto& cols = embedding.indices.at(1);
    if (rows.empty() || cols.empty() || rows.back() >= cols.front())
        throw PostconditionError("embedding rows do not all precede its columns");
    const auto q = associated_hypergraph(pattern).graph;
    HypergraphEmbedding out;
    out.vertex_map = rows;
    out.vertex_map.insert(out.vertex_map.end(), cols.begin(), cols.end());
    for (const auto& e : q.edges()) {
        Edge image{out.vertex_map[static_cast<std::size_t>(e[0] - 1)], out.vertex_map[static_cast<std::size_t>(e[1] - 1)]};
        auto it = std::lower_bound(graph.edges().begin(), graph.edges().end(), image);
        if (it == graph.edges().end() || *it != image)
            throw PostconditionError("lifted edge is missing from the graph");
        out.edge_map.push_back(static_cast<std::size_t>(it - graph.edges().begin()));
    }
    if (!verify_hypergraph_embedding(graph, q, out))
        throw PostconditionError("lifted map is not a hypergraph embedding");
    return out;
}

OrderedHypergraph blowup_graph(const OrderedHypergraph& a, int n, int t)
{
    if (t < 2)
        throw InputError("blow-up needs t >= 2");
    if (n < 1 || a.vertex_count() != 2 * n)
        throw InputError("blow-up input must live on [2n]");
    std::vector<Edge> edges;
    for (const auto& e : a.edges()) {
        if (e.size() != 2 || e[0] > n || e[1] <= n)
            throw InputError("blow-up input must be bipartite across [n] and [n+1, 2n]");
        const int i = e[0];
        const int j = e[1] - n;
        for (int k = 1; k <= t - 1; ++k)
            edges.push_back({(k - 1) * n + i, k * n + j});
    }
    return OrderedHypergraph(n * t, std::move(edges));
}

BinaryMatrix cyclic_pattern(int d)
{
    if (d < 2)
        throw InputError("cyclic pattern needs d >= 2");
    std::vector<Coord> ones;
    for (int s = 0; s < d; ++s) {
        Coord c(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l)
            c[static_cast<std::size_t>(l)] = (l - s + d) % d + 1;
        ones.push_back(std::move(c));
    }
    return BinaryMatrix::cube(d, d, std::move(ones));
}

bool satisfies_boundary_condition(const OrderedHypergraph& h)
{
    auto k = is_d_permutation_hypergraph(h);
    if (!k)
        return false;
    const int t = *k;
    const int d = h.vertex_count() / t;
    for (int i = 1; i <= d - 1; ++i) {
        const int a = i * t;
        const int b = i * t + 1;
        const bool found = std::ranges::any_of(h.edges(), [&](const Edge& e) {
            return std::ranges::binary_search(e, a) && std::ranges::binary_search(e, b);
        });
        if (!found)
            return false;
    }
    return true;
}

CyclicPadResult cyclic_pad(const OrderedHypergraph& h)
{
    auto k = is_d_permutation_hypergraph(h);
    if (!k)
        throw InputError("cyclic_pad takes a d-permutation hypergraph");
    const int d = h.vertex_count() / *k;
    const BinaryMatrix p = associated_matrix(h, PartsSpec::equal(d, *k));
    const BinaryMatrix q = cyclic_pattern(d);

    // Axis l (0-based) of q has value l+1 only in the entry (1, ..., d); that
    // index widens to k indices and every later index shifts by k-1.
    std::vector<Coord> ones;
    for (const auto& c : q.ones()) {
        bool diagonal = true;
        for (int l = 0; l < d; ++l)
            diagonal = diagonal && c[static_cast<std::size_t>(l)] == l + 1;
        if (diagonal)
            continue;
        Coord moved(c);
        for (int l = 0; l < d; ++l)
            if (moved[static_cast<std::size_t>(l)] > l + 1)
                moved[static_cast<std::size_t>(l)] += *k - 1;
        ones.push_back(std::move(moved));
    }
    for (const auto& c : p.ones()) {
        Coord moved(c);
        for (int l = 0; l < d; ++l)
            moved[static_cast<std::size_t>(l)] += l;
        ones.push_back(std::move(moved));
    }
    BinaryMatrix matrix = BinaryMatrix::cube(d, *k + d - 1, std::move(ones));
    OrderedHypergraph padded = associated_hypergraph(matrix).graph;
    CyclicPadResult out{padded, matrix, false, false};
    out.contains_input = hypergraph_contains(padded, h).has_value();
    out.boundary = satisfies_boundary_condition(padded);
    return out;
}

BinaryMatrix insert_after_first_cross_section(const BinaryMatrix& p)
{
    const int d = p.dimension();
    const int k = p.extent(1);
    std::vector<Coord> ones;
    for (const auto& c : p.ones()) {
        Coord moved(c);
        for (auto& v : moved)
            if (v >= 2)
                ++v;
        ones.push_back(std::move(moved));
    }
    ones.push_back(Coord(static_cast<std::size_t>(d), 2));
    return BinaryMatrix::cube(d, k + 1, std::move(ones));
}

std::vector<BinaryMatrix> chain_patterns(const BinaryMatrix& start, int max_length)
{
    const auto& ext = start.extents();
    if (std::ranges::adjacent_find(ext, std::ranges::not_equal_to{}) != ext.end() || !has_one_per_cross_section(start))
        throw InputError("chain_patterns takes a d-permutation matrix");
    if (start.extent(1) < 2)
        throw InputError("chain_patterns needs length at least 2");
    if (!satisfies_boundary_condition(associated_hypergraph(start).graph))
        throw InputError("chain_patterns needs a start pattern satisfying the boundary condition");
    std::vector<BinaryMatrix> chain{start};
    while (chain.back().extent(1) < max_length) {
        const BinaryMatrix& prev = chain.back();
        BinaryMatrix next = insert_after_first_cross_section(prev);
        if (!has_one_per_cross_section(next))
            throw PostconditionError("chain step is not a permutation matrix");
        if (!matrix_contains(next, prev))
            throw PostconditionError("chain step does not contain its predecessor");
        if (!satisfies_boundary_condition(associated_hypergraph(next).graph))
            throw PostconditionError("chain step violates the boundary condition");
        chain.push_back(std::move(next));
    }
    return chain;
}

std::string to_string(TruncationCap cap)
{
    return cap == TruncationCap::kd ? "kd" : "(k+d)d";
}

NormalizeReport normalize_edges(const OrderedHypergraph& g, int k, int d, TruncationCap cap)
{
    if (k < 1 || d < 1)
        throw InputError("normalize_edges needs k, d >= 1");
    const int threshold = cap == TruncationCap::kd ? k * d : (k + d) * d;
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (static_cast<int>(e.size()) >= d)
            kept.push_back(e);
    std::map<Edge, int> multiplicity;
    int cut = 0;
    for (const auto& e : kept) {
        Edge image = e;
        if (static_cast<int>(image.size()) > threshold) {
            image.resize(static_cast<std::size_t>(threshold));
            ++cut;
        }
        ++multiplicity[image];
    }
    std::vector<Edge> truncated;
    int max_mult = 0;
    for (const auto& [e, m] : multiplicity) {
        truncated.push_back(e);
        max_mult = std::max(max_mult, m);
    }
    return NormalizeReport{OrderedHypergraph(g.vertex_count(), std::move(kept)),
                           OrderedHypergraph(g.vertex_count(), std::move(truncated)),
                           threshold,
                           cap,
                           std::move(multiplicity),
                           max_mult,
                           cut};
}

double default_probability(const BinaryMatrix& pattern, int n)
{
    const auto w = static_cast<double>(pattern.weight());
    if (pattern.weight() <= 1)
        throw InputError("the deletion method needs a pattern of weight at least 2");
    double side_sum = 0;
    for (int k : pattern.extents())
        side_sum += k;
    const double exponent = (side_sum - pattern.dimension()) / (w - 1);
    return 0.5 * std::pow(static_cast<double>(n), -exponent);
}

namespace {

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Advances one increasing index list over [n]; false once it wraps.
bool next_combination(std::vector<int>& c, int n)
{
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
            return true;
        }
    }
    return false;
}

void first_combination(std::vector<int>& c)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<int>(i) + 1;
}

}  // namespace

RandomAvoider random_avoider(const GeneratorConfig& cfg, std::uint64_t seed)
{
    const BinaryMatrix& b = cfg.pattern;
    const int d = b.dimension();
    const int n = cfg.n;
    if (n < 1)
        throw InputError("side n must be at least 1");
    if (b.weight() <= 1)
        throw InputError("the deletion method needs a pattern of weight at least 2");
    const double p = cfg.p.value_or(default_probability(b, n));
    if (!(p > 0.0 && p <= 1.0))
        throw InputError("probability must lie in (0, 1]");
    std::size_t cells = 1;
    for (int l = 0; l < d; ++l)
        cells *= static_cast<std::size_t>(n);

    std::mt19937_64 rng(seed);
    std::vector<char> a(cells, 0);
    std::size_t initial = 0;
    for (auto& cell : a) {
        // 53 high bits as a uniform double in [0, 1); independent of the standard library's distributions.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        cell = u < p;
        initial += static_cast<std::size_t>(cell);
    }

    auto flat = [&](const Coord& c) {
        std::size_t index = 0;
        for (int v : c)
            index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
        return index;
    };

    std::size_t deletions = 0;
    bool fits = true;
    for (int l = 0; l < d; ++l)
        fits = fits && b.extents()[static_cast<std::size_t>(l)] <= n;
    if (fits) {
        std::vector<std::vector<int>> sel(static_cast<std::size_t>(d));
        for (int l = 0; l < d; ++l) {
            sel[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(b.extents()[static_cast<std::size_t>(l)]));
            first_combination(sel[static_cast<std::size_t>(l)]);
        }
        Coord image(static_cast<std::size_t>(d));
        auto map = [&](const Coord& pc) -> const Coord& {
            for (int l = 0; l < d; ++l)
                image[static_cast<std::size_t>(l)] = sel[static_cast<std::size_t>(l)][static_cast<std::size_t>(pc[static_cast<std::size_t>(l)] - 1)];
            return image;
        };
        while (true) {
            bool copy = true;
            for (const auto& pc : b.ones())
                if (!a[flat(map(pc))]) {
                    copy = false;
                    break;
                }
            if (copy) {
                // The pattern's greatest 1-entry maps to the copy's greatest coordinate.
                a[flat(map(b.ones().back()))] = 0;
                ++deletions;
            }
            int l = d - 1;
            while (l >= 0 && !next_combination(sel[static_cast<std::size_t>(l)], n)) {
                first_combination(sel[static_cast<std::size_t>(l)]);
                --l;
            }
            if (l < 0)
                break;
        }
    }

    std::vector<Coord> ones;
    for (std::size_t index = 0; index < cells; ++index) {
        if (!a[index])
            continue;
        Coord c(static_cast<std::size_t>(d));
        std::size_t rest = index;
        for (int l = d - 1; l >= 0; --l) {
            c[static_cast<std::size_t>(l)] = static_cast<int>(rest % static_cast<std::size_t>(n)) + 1;
            rest /= static_cast<std::size_t>(n);
        }
        ones.push_back(std::move(c));
    }
    BinaryMatrix out = BinaryMatrix::cube(d, n, std::move(ones));
    if (matrix_contains(out, b))
        throw PostconditionError("repaired matrix still contains the pattern");

    AvoiderStats stats;
    stats.seed = seed;
    stats.p = p;
    stats.initial_weight = initial;
    stats.deletions = deletions;
    stats.final_weight = out.weight();
    const double w = static_cast<double>(b.weight());
    double copies = 1;
    double side_sum = 0;
    double normalizer = 1;
    for (int k : b.extents()) {
        copies *= binomial(n, k);
        side_sum += k;
        normalizer *= std::pow(static_cast<double>(k), k);
    }
    const double cells_p = static_cast<double>(cells) * p;
    stats.expected_weight = cells_p - std::pow(p, w) * copies;
    stats.analytic_target = cells_p - std::pow(std::numbers::e * n, side_sum) / normalizer * std::pow(p, w);
    return {std::move(out), stats};
}

std::vector<RandomAvoider> random_avoiders(const GeneratorConfig& cfg)
{
    if (cfg.trials < 1)
        throw InputError("trials must be at least 1");
    std::vector<RandomAvoider> out;
    out.reserve(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t)
        out.push_back(random_avoider(cfg, cfg.seed ^ static_cast<std::uint64_t>(t)));
    return out;
}

OrderedHypergraph interval_contract(const OrderedHypergraph& g, int t)
{
    if (t < 1)
        throw InputError("interval length t must be at least 1");
    if (g.vertex_count() % t != 0)
        throw InputError("vertex count " + std::to_string(g.vertex_count()) + " is not divisible by t = " + std::to_string(t));
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Edge c;
        for (int v : e) {
            const int interval = (v - 1) / t + 1;
            if (c.empty() || c.back() != interval)
                c.push_back(interval);
        }
        edges.push_back(std::move(c));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedHypergraph(g.vertex_count() / t, std::move(edges));
}

}  // namespace patex
