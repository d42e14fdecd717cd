#include <doctest.h>

#include <random>
#include <set>

#include "hyperrig/rigidity.hpp"
#include "hyperrig/sparsity.hpp"
#include "oracles.hpp"

using namespace hyperrig;

namespace {

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, int max_edges)
{
    auto all = complete_hypergraph(n, k, false).edges();
    std::shuffle(all.begin(), all.end(), rng);
    const int m = static_cast<int>(rng() % (std::min<int>(max_edges, static_cast<int>(all.size())) + 1));
    all.resize(m);
    return Hypergraph(k, default_labels(n), all);
}

Hypergraph prism()
{
    return graph_from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

bool is_spanning_forest_cover(const Hypergraph& g, const std::vector<HyperEdge>& tree)
{
    const int n = g.num_vertices();
    if (static_cast<int>(tree.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : tree) {
        if (!g.has_edge(e)) return false;
        int a = find(e.entries[0]);
        int b = find(e.entries[1]);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool lp_condition_by_rank(const Hypergraph& g)
{
    if (!is_two_connected(g)) return false;
    for (const auto& e : g.edges())
        if (is_locally_rigid(remove_edge(g, e), lp_model(2, 4)).verdict != Verdict::locally_rigid) return false;
    return true;
}

}  // namespace

TEST_SUITE("sparsity")
{
    TEST_CASE("sparsity examples")
    {
        Hypergraph tri = graph_from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
        Hypergraph k4 = complete_hypergraph(4, 2, true);
        CHECK(is_sparse(tri, {2, 3, 2}));
        CHECK(is_tight(tri, {2, 3, 2}));
        CHECK_FALSE(is_sparse(k4, {2, 3, 2}));
        CHECK(sparsity_rank(k4, {2, 3, 2}) == 5);
        CHECK(sparsity_rank(graph_from_pairs(4, {}), {2, 3, 2}) == 0);
        Hypergraph db = oracle::double_banana();
        CHECK(db.num_edges() == 18);
        CHECK(is_sparse(db, {3, 6, 2}));
        CHECK(sparsity_rank(db, {3, 6, 2}) == 18);
        CHECK_THROWS_AS(is_sparse(tri, {-1, 0, 2}), InputError);
        CHECK_THROWS_AS(is_sparse(tri, {2, 3, 3}), InputError);
        CHECK_THROWS_AS(pebble_game_basis(db, {3, 6, 2}), InputError);
    }

    TEST_CASE("expected rank bound")
    {
        CHECK(expected_rank_bound(complete_hypergraph(4, 2, true), euclidean(2)) == 5);
        CHECK(expected_rank_bound(hypergraph_from_words("aaa aab abc"), sym_tensor(1, 3)) == 3);
        // Graphs have k = 2 < n_Gamma = 3 in three dimensions, outside the bound's hypotheses.
        CHECK_THROWS_AS(expected_rank_bound(oracle::double_banana(), euclidean(3)), InputError);
        CHECK_THROWS_AS(expected_rank_bound(hypergraph_from_words("aaa"), chow(1, 3)), InputError);
    }

    TEST_CASE("pebble game rank equals the partition formula and brute force")
    {
        std::mt19937_64 rng(31);
        const std::vector<std::pair<int, int>> params{{1, 0}, {2, 2}, {2, 3}, {3, 6}};
        int compared = 0;
        for (int k = 2; k <= 3; ++k)
            for (const auto& [a, b] : params) {
                if (b > a * k - 1) continue;
                for (int t = 0; t < 60; ++t) {
                    const int n = 1 + static_cast<int>(rng() % 5);
                    Hypergraph g = random_hypergraph(rng, n, k, 8);
                    auto es = oracle::entries_of(g);
                    const int r = sparsity_rank(g, {a, b, k});
                    CHECK(r == oracle::partition_rank_formula(es, a, b));
                    CHECK(r == oracle::max_sparse_subset(n, es, a, b));
                    CHECK(is_sparse(g, {a, b, k}) == oracle::sparse_by_definition(n, es, a, b));
                    // Limiting the number of blocks can only raise the minimum.
                    if (!es.empty()) CHECK(oracle::partition_rank_formula_bounded(es, a, b, k) >= r);
                    ++compared;
                }
            }
        CHECK(compared == 420);
    }

    TEST_CASE("pebble game basis is sparse and spanning")
    {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 40; ++t) {
            Hypergraph g = random_hypergraph(rng, 5, 3, 12);
            auto basis = pebble_game_basis(g, {2, 3, 3});
            Hypergraph b = with_edges(g, basis);
            CHECK(is_sparse(b, {2, 3, 3}));
            CHECK(sparsity_rank(b, {2, 3, 3}) == sparsity_rank(g, {2, 3, 3}));
        }
    }

    TEST_CASE("Geiringer-Laman examples")
    {
        CHECK(geiringer_laman_rigid(complete_hypergraph(4, 2, true)));
        CHECK_FALSE(geiringer_laman_rigid(graph_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
        CHECK(geiringer_laman_rigid(prism()));
        CHECK_THROWS_AS(geiringer_laman_rigid(hypergraph_from_words("abc")), InputError);
    }

    TEST_CASE("Geiringer-Laman agrees with the rigidity matrix")
    {
        for (int n = 2; n <= 5; ++n)
            for (const auto& pairs : oracle::graphs_up_to_iso(n)) {
                Hypergraph g = graph_from_pairs(n, pairs);
                const bool rigid = is_locally_rigid(g, euclidean(2)).verdict == Verdict::locally_rigid;
                CHECK(geiringer_laman_rigid(g) == rigid);
            }
    }

    TEST_CASE("spanning tree packing")
    {
        Hypergraph k4 = complete_hypergraph(4, 2, true);
        auto forests = spanning_tree_decomposition(k4, 2);
        REQUIRE(forests.has_value());
        REQUIRE(forests->size() == 2);
        std::set<HyperEdge> used;
        for (const auto& t : *forests) {
            CHECK(is_spanning_forest_cover(k4, t));
            for (const auto& e : t) CHECK(used.insert(e).second);
        }
        CHECK_FALSE(spanning_tree_packing(graph_from_pairs(4, {{0, 1}, {1, 2}, {1, 3}}), 2));
        Hypergraph k5 = complete_hypergraph(5, 2, true);
        CHECK(spanning_tree_packing(remove_edge(k5, k5.edges().front()), 2));
        CHECK_FALSE(spanning_tree_packing(graph_from_pairs(4, {{0, 1}, {2, 3}}), 1));
        CHECK(spanning_tree_packing(k5, 1));
    }

    TEST_CASE("two-connectivity")
    {
        CHECK(is_two_connected(complete_hypergraph(3, 2, true)));
        CHECK_FALSE(is_two_connected(graph_from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
        CHECK_FALSE(is_two_connected(graph_from_pairs(3, {{0, 1}, {1, 2}})));
        CHECK(is_two_connected(prism()));
    }

    TEST_CASE("lp plane global condition examples")
    {
        CHECK_FALSE(lp_plane_global_condition(complete_hypergraph(4, 2, true)));
        CHECK(lp_plane_global_condition(complete_hypergraph(5, 2, true)));
        CHECK_FALSE(lp_plane_global_condition(graph_from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
        CHECK_THROWS_AS(lp_plane_global_condition(graph_from_pairs(2, {{0, 1}})), InputError);
    }

    TEST_CASE("lp plane condition agrees with deletion rigidity")
    {
        for (int n = 3; n <= 5; ++n)
            for (const auto& pairs : oracle::graphs_up_to_iso(n)) {
                Hypergraph g = graph_from_pairs(n, pairs);
                if (!is_two_connected(g)) continue;
                CHECK(lp_plane_global_condition(g) == lp_condition_by_rank(g));
            }
    }
}
