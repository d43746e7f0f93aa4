#include "doctest.h"

#include "patex/errors.hpp"
#include "patex/hypergraph.hpp"
#include "patex/io.hpp"
#include "patex/matrix.hpp"

#include <map>
#include <random>

using namespace patex;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, std::vector<int> extents, int percent)
{
    std::vector<Coord> ones;
    Coord c(extents.size(), 1);
    while (true) {
        if (static_cast<int>(rng() % 100) < percent)
            ones.push_back(c);
        int l = static_cast<int>(c.size()) - 1;
        while (l >= 0 && ++c[static_cast<std::size_t>(l)] > extents[static_cast<std::size_t>(l)])
            c[static_cast<std::size_t>(l--)] = 1;
        if (l < 0)
            break;
    }
    return BinaryMatrix(std::move(extents), std::move(ones));
}

}  // namespace

TEST_SUITE("core")
{
    TEST_CASE("make_matrix validates and normalizes")
    {
        const auto id = make_matrix({2, 2}, {{2, 2}, {1, 1}});
        CHECK(id.ones() == std::vector<Coord>{{1, 1}, {2, 2}});
        CHECK(id.weight() == 2);
        CHECK_THROWS_AS(make_matrix({2, 2}, {{3, 1}}), InputError);
        CHECK_THROWS_AS(make_matrix({2, 2}, {{1, 1}, {1, 1}}), InputError);
        CHECK_THROWS_AS(make_matrix({2}, {}), InputError);
        CHECK_THROWS_AS(make_matrix({2, 0}, {}), InputError);
        CHECK_THROWS_AS(make_matrix({2, 2}, {{1, 1, 1}}), InputError);
        const auto z = make_matrix({2, 2, 2}, {});
        CHECK(z.weight() == 0);
        CHECK(z.dimension() == 3);
    }

    TEST_CASE("d_permutation_matrix")
    {
        CHECK(d_permutation_matrix(PermutationSpec(2, {{1, 2}})).ones() == std::vector<Coord>{{1, 1}, {2, 2}});
        CHECK(d_permutation_matrix(PermutationSpec(3, {{2, 3, 1}})).ones() ==
              std::vector<Coord>{{1, 2}, {2, 3}, {3, 1}});
        CHECK(d_permutation_matrix(PermutationSpec(2, {{1, 2}, {1, 2}})).ones() ==
              std::vector<Coord>{{1, 1, 1}, {2, 2, 2}});
        CHECK_THROWS_AS(PermutationSpec(3, {{1, 1, 2}}), InputError);
        CHECK_THROWS_AS(PermutationSpec(2, {}), InputError);
    }

    TEST_CASE("d_permutation_matrix has one entry per cross-section")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int k = 1 + static_cast<int>(rng() % 5);
            const int d = 2 + static_cast<int>(rng() % 3);
            std::vector<std::vector<int>> perms;
            for (int i = 0; i < d - 1; ++i) {
                std::vector<int> p(static_cast<std::size_t>(k));
                for (int v = 0; v < k; ++v)
                    p[static_cast<std::size_t>(v)] = v + 1;
                std::shuffle(p.begin(), p.end(), rng);
                perms.push_back(p);
            }
            const auto m = d_permutation_matrix(PermutationSpec(k, perms));
            CHECK(m.weight() == static_cast<std::size_t>(k));
            CHECK(has_one_per_cross_section(m));
            CHECK(is_d_permutation_hypergraph(associated_hypergraph(m).graph) == k);
        }
    }

    TEST_CASE("j_tuple_matrix")
    {
        const std::vector<int> id{1, 2};
        CHECK(j_tuple_matrix(id, 2).ones() == std::vector<Coord>{{1, 1}, {1, 2}, {2, 3}, {2, 4}});
        const std::vector<int> swap{2, 1};
        const auto m = j_tuple_matrix(swap, 3);
        CHECK(m.extents() == std::vector<int>{2, 6});
        CHECK(m.ones() == std::vector<Coord>{{1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 2}, {2, 3}});
        const std::vector<int> p{3, 1, 2};
        CHECK(j_tuple_matrix(p, 1) == d_permutation_matrix(PermutationSpec(3, {p})));
        CHECK_THROWS_AS(j_tuple_matrix(id, 0), InputError);
    }

    TEST_CASE("associated hypergraph and matrix")
    {
        const auto id = make_matrix({2, 2}, {{1, 1}, {2, 2}});
        const auto a = associated_hypergraph(id);
        CHECK(a.graph == OrderedHypergraph(4, {{1, 3}, {2, 4}}));
        CHECK(a.parts.sizes() == std::vector<int>{2, 2});
        CHECK(associated_hypergraph(make_matrix({2, 3}, {})).graph.edge_count() == 0);
        const auto diag = make_matrix({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}});
        CHECK(associated_hypergraph(diag).graph == OrderedHypergraph(6, {{1, 3, 5}, {2, 4, 6}}));

        CHECK(associated_matrix(OrderedHypergraph(4, {{1, 3}, {2, 4}}), PartsSpec::equal(2, 2)) == id);
        CHECK_THROWS_AS(associated_matrix(OrderedHypergraph(4, {{1, 2}}), PartsSpec::equal(2, 2)), InputError);
        CHECK_THROWS_AS(associated_matrix(OrderedHypergraph(4, {{1, 3, 4}}), PartsSpec::equal(2, 2)), InputError);
        CHECK(associated_matrix(OrderedHypergraph(5, {}), PartsSpec::from_sizes(std::vector<int>{2, 3})) ==
              make_matrix({2, 3}, {}));
    }

    TEST_CASE("associated round trip and weight (random)")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const int d = 2 + static_cast<int>(rng() % 2);
            std::vector<int> ext;
            for (int l = 0; l < d; ++l)
                ext.push_back(1 + static_cast<int>(rng() % 4));
            const auto m = random_matrix(rng, ext, 35);
            const auto a = associated_hypergraph(m);
            CHECK(associated_matrix(a.graph, a.parts) == m);
            CHECK(a.graph.weight() == static_cast<std::size_t>(d) * m.weight());
            CHECK(a.graph.edge_count() == m.weight());
            CHECK(a.graph.is_uniform(static_cast<std::size_t>(d)));
            CHECK(is_d_partite(a.graph, a.parts));
        }
    }

    TEST_CASE("cross sections and rows")
    {
        const auto id = make_matrix({2, 2}, {{1, 1}, {2, 2}});
        CHECK(cross_section(id, 1, 2) == std::vector<Coord>{{2, 2}});
        CHECK(cross_section(make_matrix({3, 3}, {}), 2, 3).empty());
        const auto diag = make_matrix({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}});
        CHECK(cross_section(diag, 3, 1) == std::vector<Coord>{{1, 1, 1}});
        CHECK_THROWS_AS(cross_section(id, 3, 1), InputError);
        CHECK_THROWS_AS(cross_section(id, 1, 3), InputError);

        const std::vector<int> row1{1};
        const std::vector<int> col2{2};
        CHECK(row(id, 2, row1) == std::vector<Coord>{{1, 1}});
        CHECK(row(id, 1, col2) == std::vector<Coord>{{2, 2}});
        CHECK(row(make_matrix({2, 2}, {}), 1, col2).empty());
        const std::vector<int> bad{1, 1};
        CHECK_THROWS_AS(row(id, 1, bad), InputError);
    }

    TEST_CASE("distance vectors and repetition")
    {
        const std::vector<int> a{1, 1}, b{2, 2}, c{3, 1}, e{1, 4};
        CHECK(distance_vector(a, b) == std::vector<int>{1, 1});
        CHECK(distance_vector(a, a) == std::vector<int>{0, 0});
        CHECK(distance_vector(c, e) == std::vector<int>{-2, 3});
        CHECK(distance_vector(e, c) == std::vector<int>{2, -3});

        const auto id3 = d_permutation_matrix(PermutationSpec(3, {{1, 2, 3}}));
        const std::vector<int> diag{1, 1};
        CHECK(repetition_count(id3, diag) == 2);
        CHECK(is_r_repeated(id3, diag, 2));
        CHECK_FALSE(is_r_repeated(id3, diag, 3));

        const auto perm = d_permutation_matrix(PermutationSpec(4, {{2, 4, 1, 3}}));
        for (int c2 = -3; c2 <= 3; ++c2) {
            if (c2 == 0)
                continue;
            const std::vector<int> x{0, c2};
            CHECK_FALSE(is_r_repeated(perm, x, 1));
        }

        // Brute-force over all pairs: the length-4 identity repeats (1,1) and (-1,-1) three times each and nothing more often.
        const auto id4 = d_permutation_matrix(PermutationSpec(4, {{1, 2, 3, 4}}));
        std::map<std::vector<int>, std::size_t> counts;
        for (const auto& p : id4.ones())
            for (const auto& q : id4.ones())
                if (p != q)
                    ++counts[distance_vector(p, q)];
        std::size_t best = 0;
        for (const auto& [v, n] : counts)
            best = std::max(best, n);
        const auto rep = max_repetition(id4);
        CHECK(rep.count == best);
        CHECK(rep.count == 3);
        CHECK(rep.vector == std::vector<int>{-1, -1});  // least of the tied (1,1) and (-1,-1)
        CHECK(max_repetition(make_matrix({2, 2}, {{1, 1}})).count == 0);
    }

    TEST_CASE("hypergraph construction")
    {
        const OrderedHypergraph h(4, {{3, 1}, {2, 4}});
        CHECK(h.edges() == std::vector<Edge>{{1, 3}, {2, 4}});
        CHECK(h.weight() == 4);
        CHECK_THROWS_AS(OrderedHypergraph(3, {{}}), InputError);
        CHECK_THROWS_AS(OrderedHypergraph(3, {{1, 1}}), InputError);
        CHECK_THROWS_AS(OrderedHypergraph(3, {{4}}), InputError);
        CHECK_THROWS_AS(OrderedHypergraph(3, {{1, 2}, {2, 1}}), InputError);
        const auto f = OrderedHypergraph::from_labels({10, 20, 30}, {{10, 30}});
        CHECK(f == OrderedHypergraph(3, {{1, 3}}));
        CHECK(OrderedHypergraph(4, {{1, 3}}).isolated_vertices() == std::vector<int>{2, 4});
    }

    TEST_CASE("parts and permutation hypergraphs")
    {
        CHECK_THROWS_AS(PartsSpec(std::vector<int>{0, 2, 2}), InputError);
        CHECK_THROWS_AS(PartsSpec(std::vector<int>{1, 2}), InputError);
        const auto parts = PartsSpec::equal(2, 2);
        CHECK(parts.part_of(2) == 1);
        CHECK(parts.part_of(3) == 2);
        CHECK(is_d_partite(OrderedHypergraph(4, {{1, 3}, {2, 4}}), parts));
        CHECK_FALSE(is_d_partite(OrderedHypergraph(4, {{1, 2}}), parts));

        CHECK(is_d_permutation_hypergraph(OrderedHypergraph(4, {{1, 3}, {2, 4}})) == 2);
        CHECK_FALSE(is_d_permutation_hypergraph(OrderedHypergraph(4, {{1, 3}})));
        CHECK_FALSE(is_d_permutation_hypergraph(OrderedHypergraph(4, {{1, 2}, {3, 4}})));
        CHECK(is_d_permutation_hypergraph(OrderedHypergraph(6, {{1, 4, 5}, {2, 3, 6}})) == 2);
    }
}

TEST_SUITE("io")
{
    TEST_CASE("matrix format round trip")
    {
        const auto m = make_matrix({2, 3}, {{1, 2}, {2, 3}});
        const std::string text = io::format_matrix(m);
        CHECK(text == "2 2 3\n1 2\n2 3\n");
        CHECK(io::parse_matrix(text) == m);
        CHECK(io::parse_matrix("# comment\n\n2 2 3\n# another\n2 3\n1 2\n") == m);
    }

    TEST_CASE("hypergraph format round trip")
    {
        const OrderedHypergraph h(5, {{1, 3, 5}, {2}});
        const std::string text = io::format_hypergraph(h);
        CHECK(text == "5\n1 3 5\n2\n");
        CHECK(io::parse_hypergraph(text) == h);
        CHECK(io::parse_hypergraph("3\n") == OrderedHypergraph(3, {}));
    }

    TEST_CASE("parse errors")
    {
        CHECK_THROWS_AS(io::parse_matrix(""), InputError);
        CHECK_THROWS_AS(io::parse_matrix("2 2 2\n1 3\n"), InputError);
        CHECK_THROWS_AS(io::parse_matrix("2 2 2\n1\n"), InputError);
        CHECK_THROWS_AS(io::parse_matrix("2 2 x\n"), InputError);
        CHECK_THROWS_AS(io::parse_hypergraph("3\n2 1\n"), InputError);
        CHECK_THROWS_AS(io::parse_hypergraph("3\n1 4\n"), InputError);
        CHECK_THROWS_AS(io::parse_hypergraph("3 3\n"), InputError);
        CHECK_THROWS_AS(io::load_matrix("/nonexistent/file.txt"), InputError);
    }

    TEST_CASE("random round trips")
    {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            const auto m = random_matrix(rng, {1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), 2}, 40);
            CHECK(io::parse_matrix(io::format_matrix(m)) == m);
            const auto a = associated_hypergraph(m).graph;
            CHECK(io::parse_hypergraph(io::format_hypergraph(a)) == a);
        }
    }
}
