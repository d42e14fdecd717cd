#include "hyperrig/sparsity.hpp"

#include <algorithm>
#include <functional>

#include <boost/pending/disjoint_sets.hpp>

#include "hyperrig/errors.hpp"
#include "hyperrig/matroid_union.hpp"

namespace hyperrig {

void validate(const SparsityParams& p)
{
    require(p.a >= 0 && p.b >= 0, "sparsity parameters must be nonnegative");
    require(p.k >= 1, "sparsity uniformity must be positive");
}

namespace {

void check_params(const Hypergraph& g, const SparsityParams& p)
{
    validate(p);
    require(p.k == g.k(), "sparsity parameters are for k=" + std::to_string(p.k) + " but hypergraph is " +
                              std::to_string(g.k()) + "-uniform");
}

// Hypergraph pebble game: a pebbles per vertex; an edge is accepted once b+1 pebbles sit on
// its support, and is then covered by one pebble from its tail vertex.
class PebbleGame {
public:
    PebbleGame(int n, int a, int b) : a_(a), b_(b), pebbles_(n, a), out_(n) {}

    bool insert(const std::vector<int>& support)
    {
        if (a_ * static_cast<long>(support.size()) < b_ + 1) return false;
        for (;;) {
            long total = 0;
            for (int v : support) total += pebbles_[v];
            if (total >= b_ + 1) {
                int tail = *std::find_if(support.begin(), support.end(), [&](int v) { return pebbles_[v] > 0; });
                --pebbles_[tail];
                out_[tail].push_back(static_cast<int>(edges_.size()));
                edges_.push_back(support);
                return true;
            }
            bool moved = false;
            for (int v : support) {
                std::vector<char> seen(pebbles_.size(), 0);
                for (int u : support) seen[u] = 1;
                if (fetch(v, seen)) {
                    moved = true;
                    break;
                }
            }
            if (!moved) return false;
        }
    }

private:
    // Brings a free pebble to v by reversing a path of covered edges.
    bool fetch(int v, std::vector<char>& seen)
    {
        for (std::size_t i = 0; i < out_[v].size(); ++i) {
            const int e = out_[v][i];
            for (int w : edges_[e]) {
                if (w == v || seen[w]) continue;
                seen[w] = 1;
                if (pebbles_[w] > 0 || fetch(w, seen)) {
                    --pebbles_[w];
                    out_[v].erase(out_[v].begin() + static_cast<std::ptrdiff_t>(i));
                    out_[w].push_back(e);
                    ++pebbles_[v];
                    return true;
                }
            }
        }
        return false;
    }

    int a_;
    int b_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> edges_;
};

constexpr int kMaxEnumerationVertices = 24;
constexpr int kMaxEnumerationEdges = 30;

// Maxwell-type count check by enumerating vertex subsets (non-matroidal range).
bool counts_hold(int n, const std::vector<std::vector<int>>& supports, const SparsityParams& p)
{
    require(n <= kMaxEnumerationVertices, "sparsity outside the matroidal range is limited to " +
                                              std::to_string(kMaxEnumerationVertices) + " vertices");
    std::vector<unsigned> masks;
    for (const auto& s : supports) {
        unsigned m = 0;
        for (int v : s) m |= 1u << v;
        masks.push_back(m);
    }
    for (unsigned sub = 1; sub < (1u << n); ++sub) {
        const long limit = static_cast<long>(p.a) * __builtin_popcount(sub) - p.b;
        if (limit < 1) continue;
        long count = 0;
        for (unsigned m : masks)
            if ((m & sub) == m) ++count;
        if (count > limit) return false;
    }
    return true;
}

std::vector<std::vector<int>> supports_of(const Hypergraph& g)
{
    std::vector<std::vector<int>> s;
    for (const auto& e : g.edges()) s.push_back(e.support());
    return s;
}

int max_sparse_subset(int n, const std::vector<std::vector<int>>& supports, const SparsityParams& p)
{
    require(static_cast<int>(supports.size()) <= kMaxEnumerationEdges,
            "sparsity rank outside the matroidal range is limited to " + std::to_string(kMaxEnumerationEdges) +
                " edges");
    int best = 0;
    std::vector<std::vector<int>> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (static_cast<int>(chosen.size() + (supports.size() - i)) <= best) return;
        if (i == supports.size()) {
            best = static_cast<int>(chosen.size());
            return;
        }
        chosen.push_back(supports[i]);
        if (counts_hold(n, chosen, p)) go(i + 1);
        chosen.pop_back();
        go(i + 1);
    };
    go(0);
    return best;
}

}  // namespace

std::vector<HyperEdge> pebble_game_basis(const Hypergraph& g, const SparsityParams& p)
{
    check_params(g, p);
    require(p.matroidal(), "pebble game needs 0 <= b <= ak-1");
    PebbleGame game(g.num_vertices(), p.a, p.b);
    std::vector<HyperEdge> basis;
    for (const auto& e : g.edges())
        if (game.insert(e.support())) basis.push_back(e);
    return basis;
}

int sparsity_rank(const Hypergraph& g, const SparsityParams& p)
{
    check_params(g, p);
    if (p.matroidal()) return static_cast<int>(pebble_game_basis(g, p).size());
    auto s = supports_of(g);
    if (counts_hold(g.num_vertices(), s, p)) return g.num_edges();
    return max_sparse_subset(g.num_vertices(), s, p);
}

bool is_sparse(const Hypergraph& g, const SparsityParams& p)
{
    check_params(g, p);
    if (p.matroidal()) return sparsity_rank(g, p) == g.num_edges();
    return counts_hold(g.num_vertices(), supports_of(g), p);
}

bool is_tight(const Hypergraph& g, const SparsityParams& p)
{
    return is_sparse(g, p) && g.num_edges() == p.a * g.num_vertices() - p.b;
}

int expected_rank_bound(const Hypergraph& g, const MeasurementModel& m)
{
    require(g.k() == m.k, "arity mismatch between hypergraph and model");
    require(m.stabilizer.has_value(), "model " + m.name + " lacks stabilizer metadata");
    const StabilizerInfo& s = *m.stabilizer;
    require(m.k >= s.n_gamma, "rank bound needs k >= n_Gamma (k=" + std::to_string(m.k) +
                                  ", n_Gamma=" + std::to_string(s.n_gamma) + ")");
    require(m.d * m.k - s.d_gamma >= 1, "rank bound needs dk - d_Gamma >= 1");
    return sparsity_rank(g, SparsityParams{m.d, s.d_gamma, m.k});
}

bool geiringer_laman_rigid(const Hypergraph& g)
{
    require(g.k() == 2, "Geiringer-Laman test needs a graph (k=2)");
    require(g.is_simple(), "Geiringer-Laman test needs a simple graph");
    const int n = g.num_vertices();
    if (n <= 1) return true;
    return sparsity_rank(g, SparsityParams{2, 3, 2}) == 2 * n - 3;
}

std::optional<std::vector<std::vector<HyperEdge>>> spanning_tree_decomposition(const Hypergraph& g, int t)
{
    require(g.k() == 2, "spanning tree packing needs a graph (k=2)");
    require(g.is_simple(), "spanning tree packing needs a simple graph");
    require(t >= 1, "tree count must be positive");
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (m < t * (n - 1)) return std::nullopt;
    auto forest = [&](const std::vector<int>& elems) {
        std::vector<int> rank(n), parent(n);
        boost::disjoint_sets<int*, int*> ds(rank.data(), parent.data());
        for (int v = 0; v < n; ++v) ds.make_set(v);
        for (int e : elems) {
            int a = g.edges()[e].entries[0];
            int b = g.edges()[e].entries[1];
            if (ds.find_set(a) == ds.find_set(b)) return false;
            ds.union_set(a, b);
        }
        return true;
    };
    std::vector<int> part = matroid_partition(m, t, forest);
    std::vector<std::vector<HyperEdge>> trees(t);
    for (int e = 0; e < m; ++e)
        if (part[e] >= 0) trees[part[e]].push_back(g.edges()[e]);
    for (const auto& tr : trees)
        if (static_cast<int>(tr.size()) != n - 1) return std::nullopt;
    return trees;
}

bool spanning_tree_packing(const Hypergraph& g, int t) { return spanning_tree_decomposition(g, t).has_value(); }

bool is_two_connected(const Hypergraph& g)
{
    return g.num_vertices() >= 3 && vertex_connectivity(g) >= 2;
}

bool lp_plane_global_condition(const Hypergraph& g)
{
    require(g.k() == 2 && g.is_simple(), "the plane l_p condition needs a simple graph");
    require(g.num_vertices() >= 3, "the plane l_p condition needs at least 3 vertices");
    if (!is_two_connected(g)) return false;
    for (const auto& e : g.edges())
        if (!spanning_tree_packing(remove_edge(g, e), 2)) return false;
    return true;
}

}  // namespace hyperrig
