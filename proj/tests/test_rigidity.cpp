#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hyperrig/rigidity.hpp"
#include "hyperrig/sparsity.hpp"
#include "oracles.hpp"

using namespace hyperrig;

namespace {

GenericPoint<RationalField> values(int d, std::vector<mpq_class> v) { return point_from_values(RationalField(), d, v); }

std::vector<HyperEdge> random_subset(const std::vector<HyperEdge>& all, std::mt19937_64& rng, int percent)
{
    std::vector<HyperEdge> out;
    for (const auto& e : all)
        if (static_cast<int>(rng() % 100) < percent) out.push_back(e);
    return out;
}

// Row scale between the library Jacobian and the true derivative.
int row_scale(const MeasurementModel& m)
{
    if (m.kind == FormKind::euclidean || m.kind == FormKind::pseudo_euclidean) return 2;
    if (m.kind == FormKind::lp) return m.exponent;
    return 1;
}

}  // namespace

TEST_SUITE("rigidity")
{
    TEST_CASE("measurement examples")
    {
        RationalField q;
        CHECK(measurement(hypergraph_from_words("aaa"), sym_tensor(1, 3), q, values(1, {2})) ==
              std::vector<mpq_class>{8});
        CHECK(measurement(hypergraph_from_words("ab"), euclidean(1), q, values(1, {0, 3})) ==
              std::vector<mpq_class>{9});
        // Entries equal the coordinate-sum of the Hadamard product of the edge's points.
        Hypergraph g = hypergraph_from_words("abc abd bcd");
        auto p = sample_generic_point(q, 4, 3, 17);
        auto vals = measurement(g, sym_tensor(3, 3), q, p);
        for (int r = 0; r < g.num_edges(); ++r) {
            mpq_class s = 0;
            for (int c = 0; c < 3; ++c) {
                mpq_class prod = 1;
                for (int v : g.edges()[r].entries) prod *= p.at(v, c);
                s += prod;
            }
            CHECK(vals[r] == s);
        }
        CHECK_THROWS_AS(measurement(g, euclidean(2), q, p), InputError);
    }

    TEST_CASE("Jacobian examples")
    {
        RationalField q;
        Hypergraph ex46 = hypergraph_from_words("aaa aab abc");
        auto j = jacobian(ex46, sym_tensor(1, 3), q, values(1, {2, 3, 5}));
        CHECK(j.row(0) == std::vector<mpq_class>{12, 0, 0});
        CHECK(j.row(1) == std::vector<mpq_class>{12, 4, 0});
        CHECK(j.row(2) == std::vector<mpq_class>{15, 10, 6});
        CHECK(rank(j) == 3);

        auto e = jacobian(hypergraph_from_words("ab"), euclidean(2), q, values(2, {0, 0, 1, 0}));
        CHECK(e.row(0) == std::vector<mpq_class>{-1, 0, 1, 0});

        Hypergraph ex61 = hypergraph_from_words("aaa aab abc bcd");
        auto j61 = jacobian(ex61, sym_tensor(2, 3), q, sample_generic_point(q, 4, 2, 3));
        const int abc = *ex61.find_edge(ex61.edge_from_labels({"a", "b", "c"}));
        const int d = ex61.index_of("d");
        CHECK(j61(abc, 2 * d) == 0);
        CHECK(j61(abc, 2 * d + 1) == 0);
    }

    TEST_CASE("Jacobian agrees with forward-mode differentiation")
    {
        RationalField q;
        std::mt19937_64 rng(1);
        const std::vector<MeasurementModel> models{euclidean(2),       pseudo_euclidean(2, 1), lp_model(2, 4),
                                                   inner_product(2),   volume(2),              sym_tensor(2, 3),
                                                   skew_tensor(1, 3),  chow(1, 3),             sym_tensor(1, 4)};
        for (const auto& m : models) {
            Hypergraph all = complete_hypergraph(m.k + 1, m.k, false);
            for (int t = 0; t < 5; ++t) {
                Hypergraph g = with_edges(all, random_subset(all.edges(), rng, 60));
                auto p = sample_generic_point(RationalField(50), g.num_vertices(), m.d, rng());
                auto lib = jacobian(g, m, q, p);
                auto ref = oracle::jacobian_by_duals(g, m, p.coords);
                for (int r = 0; r < g.num_edges(); ++r)
                    for (int c = 0; c < lib.cols(); ++c) CHECK(lib(r, c) * row_scale(m) == ref[r][c]);
            }
        }
    }

    TEST_CASE("block structure for multiaffine models")
    {
        RationalField q;
        std::mt19937_64 rng(2);
        for (const auto& m : {sym_tensor(2, 3), skew_tensor(1, 3), inner_product(3), chow(1, 3), volume(2)}) {
            Hypergraph g = complete_hypergraph(4, m.k, false);
            auto p = sample_generic_point(q, 4, m.d, rng());
            auto j = jacobian(g, m, q, p);
            for (int r = 0; r < g.num_edges(); ++r) {
                const HyperEdge& e = g.edges()[r];
                for (int v = 0; v < 4; ++v) {
                    std::vector<mpq_class> expect(m.d, 0);
                    if (e.contains(v)) {
                        auto grad = gradient(m, q, edge_points(p, e.remove_one(v)));
                        int sign = (m.antisymmetric() && e.position(v) % 2 == 1) ? -1 : 1;
                        if (m.antisymmetric() && !e.is_simple()) sign = 0;
                        for (int c = 0; c < m.d; ++c) expect[c] = sign * e.multiplicity(v) * grad[c];
                    }
                    for (int c = 0; c < m.d; ++c) CHECK(j(r, v * m.d + c) == expect[c]);
                }
            }
        }
    }

    TEST_CASE("generic rank and local rigidity")
    {
        Hypergraph ex46 = hypergraph_from_words("aaa aab abc");
        CHECK(generic_rank(ex46, sym_tensor(1, 3)).rank == 3);
        CHECK(generic_rank(complete_hypergraph(3, 4, false), sym_tensor(5, 4)).rank < 15);
        CHECK(generic_rank(Hypergraph(3, default_labels(3), {}), sym_tensor(1, 3)).rank == 0);

        auto r = is_locally_rigid(ex46, sym_tensor(1, 3));
        CHECK(r.verdict == Verdict::locally_rigid);
        CHECK(r.rank == 3);
        auto k4 = is_locally_rigid(complete_hypergraph(4, 2, true), euclidean(2));
        CHECK(k4.verdict == Verdict::locally_rigid);
        CHECK(k4.rank == 5);
        auto db = is_locally_rigid(oracle::double_banana(), euclidean(3));
        CHECK(db.rank == 17);
        CHECK(db.verdict == Verdict::flexible);
        auto small = is_locally_rigid(hypergraph_from_words("ab"), euclidean(3));
        CHECK(small.verdict == Verdict::below_n_gamma);
        CHECK_THROWS_AS(is_locally_rigid(ex46, chow(1, 3)), InputError);

        // Partite model: K_{2,2,2} under sym_tensor(1,3) uses d_Gamma^x = 2.
        auto part = is_locally_rigid(complete_partite({2, 2, 2}), sym_tensor(1, 3));
        CHECK(part.partite);
        CHECK(part.d_gamma == 2);
        CHECK(part.rank <= 6 - 2);
        CHECK(part.verdict == Verdict::locally_rigid);
    }

    TEST_CASE("rigidity matroid oracle")
    {
        CHECK(matroid_independent(3, sym_tensor(2, 3), {HyperEdge({0, 1, 2})}));
        std::vector<HyperEdge> g2{HyperEdge({0, 0, 0, 0}), HyperEdge({0, 0, 1, 1}), HyperEdge({1, 1, 1, 1})};
        CHECK_FALSE(matroid_independent(2, sym_tensor(1, 4), g2));
        CHECK(matroid_rank(2, sym_tensor(1, 4), g2) == 2);
        auto k4 = complete_hypergraph(4, 2, true).edges();
        CHECK_FALSE(matroid_independent(4, euclidean(2), k4));
        CHECK(matroid_rank(4, euclidean(2), k4) == 5);
        CHECK(matroid_rank(4, euclidean(2), {}) == 0);
        CHECK(matroid_rank(8, euclidean(3), oracle::double_banana().edges()) == 17);

        CHECK(find_circuit(4, euclidean(2), k4).size() == 6);
        CHECK(find_circuit(2, sym_tensor(1, 4), g2).size() == 3);
        CHECK_THROWS_AS(find_circuit(3, sym_tensor(1, 3), {HyperEdge({0, 1, 2})}), InputError);
    }

    TEST_CASE("matroid rank is monotone and submodular")
    {
        std::mt19937_64 rng(9);
        RigidityMatroid m(5, sym_tensor(1, 3));
        const auto& ground = m.ground();
        for (int t = 0; t < 50; ++t) {
            auto a = random_subset(ground, rng, 30);
            std::vector<HyperEdge> b = a;
            for (const auto& e : ground)
                if (rng() % 3 == 0 && std::find(b.begin(), b.end(), e) == b.end()) b.push_back(e);
            CHECK(m.rank(a) <= m.rank(b));
            auto c = random_subset(ground, rng, 30);
            std::set<HyperEdge> uni(a.begin(), a.end()), inter;
            for (const auto& e : c) {
                if (uni.count(e)) inter.insert(e);
            }
            uni.insert(c.begin(), c.end());
            CHECK(m.rank({uni.begin(), uni.end()}) + m.rank({inter.begin(), inter.end()}) <= m.rank(a) + m.rank(c));
        }
    }

    TEST_CASE("single product form matches the multiplicity incidence matrix")
    {
        auto incidence_rank = [](int n, const std::vector<HyperEdge>& f) {
            std::vector<std::vector<mpq_class>> rows;
            for (const auto& e : f) {
                std::vector<mpq_class> r(n, 0);
                for (int v : e.entries) r[v] += 1;
                rows.push_back(r);
            }
            return oracle::rational_rank(rows);
        };
        RigidityMatroid m3(3, sym_tensor(1, 3));
        const auto& g3 = m3.ground();
        for (unsigned s = 0; s < (1u << g3.size()); ++s) {
            std::vector<HyperEdge> f;
            for (std::size_t i = 0; i < g3.size(); ++i)
                if (s >> i & 1) f.push_back(g3[i]);
            CHECK(m3.rank(f) == incidence_rank(3, f));
        }
        RigidityMatroid m4(4, sym_tensor(1, 3));
        std::mt19937_64 rng(12);
        for (int t = 0; t < 300; ++t) {
            auto f = random_subset(m4.ground(), rng, 25);
            CHECK(m4.rank(f) == incidence_rank(4, f));
        }
    }

    TEST_CASE("matroid rank is bounded by the sparsity count")
    {
        std::mt19937_64 rng(21);
        for (int k : {2, 3})
            for (int d : {1, 2})
                for (int n = 2; n <= 5; ++n) {
                    MeasurementModel m = sym_tensor(d, k);
                    Hypergraph all = complete_hypergraph(n, k, false);
                    for (int t = 0; t < 6; ++t) {
                        Hypergraph g = with_edges(all, random_subset(all.edges(), rng, 50));
                        CHECK(matroid_rank(n, m, g.edges()) <= expected_rank_bound(g, m));
                    }
                }
    }

    TEST_CASE("vertex stability")
    {
        Hypergraph ex46 = hypergraph_from_words("aaa aab abc");
        CHECK(is_stable_vertex(ex46, sym_tensor(1, 3), "a"));
        Hypergraph lonely(3, {"a", "b", "c", "z"}, {HyperEdge({0, 1, 2})});
        CHECK_FALSE(is_stable_vertex(lonely, sym_tensor(1, 3), "z"));
        // Every edge at v also contains u: the cofactor rows are all orthogonal to p(u).
        Hypergraph common = hypergraph_from_words("vua vub vuc abc");
        CHECK_FALSE(is_stable_vertex(common, skew_tensor(1, 3), "v"));
        Hypergraph spread = hypergraph_from_words("vab vbc vca abc");
        CHECK(is_stable_vertex(spread, skew_tensor(1, 3), "v"));
        CHECK_THROWS_AS(is_stable_vertex(ex46, euclidean(1), "a"), InputError);
    }

    TEST_CASE("extension checks")
    {
        Hypergraph ex46 = hypergraph_from_words("aaa aab abc");
        auto ok = check_extension(ex46, sym_tensor(2, 3), "d", {{"a", "b", "d"}, {"b", "c", "d"}});
        CHECK(ok.preserves_rigidity);
        auto ok1 = check_extension(ex46, sym_tensor(1, 3), "d", {{"a", "c", "d"}});
        CHECK(ok1.preserves_rigidity);
        Hypergraph base = hypergraph_from_words("abc abu acu bcu");
        auto bad = check_extension(base, skew_tensor(1, 3), "v", {{"v", "u", "a"}, {"v", "u", "b"}, {"v", "u", "c"}});
        CHECK_FALSE(bad.preserves_rigidity);
        auto none = check_extension(ex46, sym_tensor(1, 3), "d", {});
        CHECK_FALSE(none.preserves_rigidity);
    }

    TEST_CASE("matroid union decomposition")
    {
        auto single = decompose_independent(3, sym_tensor(1, 3), {HyperEdge({0, 1, 2})});
        CHECK(single.size() == 1);
        CHECK(single[0].size() == 1);
        auto empty = decompose_independent(3, sym_tensor(2, 3), {});
        CHECK(empty.size() == 2);
        CHECK(empty[0].empty());

        RigidityMatroid g(3, sym_tensor(2, 3));
        std::vector<HyperEdge> basis;
        for (const auto& e : g.ground()) {
            basis.push_back(e);
            if (!g.independent(basis)) basis.pop_back();
        }
        CHECK(basis.size() == 6);
        auto parts = decompose_independent(3, sym_tensor(2, 3), basis);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].size() + parts[1].size() == 6);
        for (const auto& p : parts) CHECK(matroid_independent(3, product_form(3), p));
        CHECK_THROWS_AS(decompose_independent(3, sym_tensor(2, 3), g.ground()), InputError);
    }

    TEST_CASE("closed-form oracles")
    {
        CHECK(ah_oracle(3, 4, 2));
        CHECK_FALSE(ah_oracle(4, 3, 5));
        CHECK_FALSE(ah_oracle(3, 5, 7));
        CHECK_FALSE(ah_oracle(4, 4, 9));
        CHECK_FALSE(ah_oracle(4, 5, 14));
        CHECK_FALSE(ah_oracle(3, 2, 3));
        CHECK_THROWS_AS(ah_oracle(2, 3, 2), InputError);

        CHECK(veronese_global_oracle(3, 2, 2) == GlobalExpectation::globally_rigid);
        CHECK(veronese_global_oracle(6, 3, 9) == GlobalExpectation::not_globally_rigid);
        CHECK(veronese_global_oracle(3, 4, 2) == GlobalExpectation::globally_rigid);
        CHECK(veronese_global_oracle(3, 2, 5) == GlobalExpectation::out_of_scope);
    }

    TEST_CASE("AH agreement on small complete hypergraphs")
    {
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 6; ++d) {
                bool rigid = is_locally_rigid(complete_hypergraph(n, 3, false), sym_tensor(d, 3), {}, PartiteMode::standard)
                                 .verdict == Verdict::locally_rigid;
                CHECK(rigid == ah_oracle(3, n, d));
            }
    }
}
