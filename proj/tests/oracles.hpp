#pragma once

// Independent reference computations used by the tests. They share only the data types
// (Hypergraph, HyperEdge, fields) with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "hyperrig/forms.hpp"
#include "hyperrig/hypergraph.hpp"

namespace oracle {

using hyperrig::HyperEdge;
using hyperrig::Hypergraph;

// ---- sparsity -------------------------------------------------------------------------

inline unsigned vertex_mask(const std::vector<int>& e)
{
    unsigned m = 0;
    for (int v : e) m |= 1u << v;
    return m;
}

// Sparse by definition: every nonempty edge subset F has |F| <= a|V(F)| - b. Checked over
// vertex subsets spanned by edges, which is equivalent.
inline bool sparse_by_definition(int n, const std::vector<std::vector<int>>& edges, int a, int b)
{
    for (unsigned sub = 1; sub < (1u << n); ++sub) {
        long count = 0;
        for (const auto& e : edges)
            if ((vertex_mask(e) & sub) == vertex_mask(e)) ++count;
        if (count > 0 && count > static_cast<long>(a) * __builtin_popcount(sub) - b) return false;
    }
    return true;
}

inline int max_sparse_subset(int n, const std::vector<std::vector<int>>& edges, int a, int b)
{
    int best = 0;
    const int m = static_cast<int>(edges.size());
    for (unsigned s = 0; s < (1u << m); ++s) {
        int c = __builtin_popcount(s);
        if (c <= best) continue;
        std::vector<std::vector<int>> f;
        for (int i = 0; i < m; ++i)
            if (s >> i & 1) f.push_back(edges[i]);
        if (sparse_by_definition(n, f, a, b)) best = c;
    }
    return best;
}

// Count-matroid rank formula: min over partitions of E of sum min(|T|, max(0, a|V(T)| - b)).
inline int partition_rank_formula(const std::vector<std::vector<int>>& edges, int a, int b)
{
    const int m = static_cast<int>(edges.size());
    const unsigned full = (1u << m) - 1;
    std::vector<int> cost(full + 1, 0);
    for (unsigned t = 1; t <= full; ++t) {
        unsigned vm = 0;
        for (int i = 0; i < m; ++i)
            if (t >> i & 1) vm |= vertex_mask(edges[i]);
        const int c = std::max(0, a * __builtin_popcount(vm) - b);
        cost[t] = std::min(__builtin_popcount(t), c);
    }
    std::vector<int> f(full + 1, 0);
    for (unsigned s = 1; s <= full; ++s) {
        const unsigned low = s & (~s + 1);
        int best = 1 << 30;
        for (unsigned t = s; t; t = (t - 1) & s)
            if (t & low) best = std::min(best, cost[t] + f[s & ~t]);
        f[s] = best;
    }
    return f[full];
}

// The same formula restricted to partitions with at most `parts` blocks.
inline int partition_rank_formula_bounded(const std::vector<std::vector<int>>& edges, int a, int b, int parts)
{
    const int m = static_cast<int>(edges.size());
    const unsigned full = (1u << m) - 1;
    std::vector<int> cost(full + 1, 0);
    for (unsigned t = 1; t <= full; ++t) {
        unsigned vm = 0;
        for (int i = 0; i < m; ++i)
            if (t >> i & 1) vm |= vertex_mask(edges[i]);
        cost[t] = std::min(__builtin_popcount(t), std::max(0, a * __builtin_popcount(vm) - b));
    }
    const int inf = 1 << 30;
    std::vector<std::vector<int>> f(parts + 1, std::vector<int>(full + 1, inf));
    f[0][0] = 0;
    for (int p = 1; p <= parts; ++p) {
        f[p][0] = 0;
        for (unsigned s = 1; s <= full; ++s) {
            const unsigned low = s & (~s + 1);
            int best = inf;
            for (unsigned t = s; t; t = (t - 1) & s)
                if ((t & low) && f[p - 1][s & ~t] < inf) best = std::min(best, cost[t] + f[p - 1][s & ~t]);
            f[p][s] = best;
        }
    }
    return f[parts][full];
}

inline std::vector<std::vector<int>> entries_of(const Hypergraph& g)
{
    std::vector<std::vector<int>> out;
    for (const auto& e : g.edges()) out.push_back(e.entries);
    return out;
}

// ---- graph enumeration ----------------------------------------------------------------

// All simple graphs on n vertices up to isomorphism, as 0-based edge lists.
inline std::vector<std::vector<std::pair<int, int>>> graphs_up_to_iso(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::pair<int, int>, int> slot_index;
    for (int i = 0; i < m; ++i) slot_index[slots[i]] = i;
    std::vector<std::vector<int>> image(perms.size(), std::vector<int>(m));
    for (std::size_t q = 0; q < perms.size(); ++q)
        for (int i = 0; i < m; ++i) {
            int a = perms[q][slots[i].first];
            int b = perms[q][slots[i].second];
            image[q][i] = slot_index[{std::min(a, b), std::max(a, b)}];
        }
    std::set<unsigned> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        unsigned canon = mask;
        for (const auto& im : image) {
            unsigned x = 0;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) x |= 1u << im[i];
            canon = std::min(canon, x);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            if (canon >> i & 1) edges.push_back(slots[i]);
        out.push_back(edges);
    }
    return out;
}

// ---- dual-number differentiation ------------------------------------------------------

struct Dual {
    mpq_class a;
    mpq_class b;

    Dual(long v = 0) : a(v), b(0) {}
    Dual(mpq_class x, mpq_class y) : a(std::move(x)), b(std::move(y)) {}
    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
};

// Leibniz expansion over permutations of the columns.
template <class T>
T leibniz(const std::vector<std::vector<T>>& cols, bool with_sign)
{
    const int k = static_cast<int>(cols.size());
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    T total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (p[i] > p[j]) ++inversions;
        T term(1);
        for (int i = 0; i < k; ++i) term = term * cols[i][p[i]];
        if (with_sign && inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Direct polynomial definitions of the catalog forms.
template <class T>
T form_value(const hyperrig::MeasurementModel& m, const std::vector<std::vector<T>>& pts)
{
    using hyperrig::FormKind;
    switch (m.kind) {
    case FormKind::euclidean:
    case FormKind::pseudo_euclidean:
    case FormKind::lp: {
        T s(0);
        const int e = m.kind == FormKind::lp ? m.exponent : 2;
        for (int c = 0; c < m.d; ++c) {
            T diff = pts[0][c] - pts[1][c];
            T pw(1);
            for (int i = 0; i < e; ++i) pw = pw * diff;
            if (m.kind == FormKind::pseudo_euclidean && c >= m.signature)
                s = s - pw;
            else
                s = s + pw;
        }
        return s;
    }
    case FormKind::inner_product: {
        T s(0);
        for (int c = 0; c < m.d; ++c) s = s + pts[0][c] * pts[1][c];
        return s;
    }
    case FormKind::product: {
        T s(1);
        for (const auto& x : pts) s = s * x[0];
        return s;
    }
    case FormKind::determinant:
    case FormKind::permanent:
        return leibniz(pts, m.kind == FormKind::determinant);
    case FormKind::volume: {
        std::vector<std::vector<T>> cols = pts;
        for (auto& c : cols) c.push_back(T(1));
        return leibniz(cols, true);
    }
    case FormKind::copies: {
        const int s = m.base->d;
        T total(0);
        for (int i = 0; i < m.copies; ++i) {
            std::vector<std::vector<T>> sub;
            for (const auto& x : pts) sub.emplace_back(x.begin() + i * s, x.begin() + (i + 1) * s);
            total = total + form_value(*m.base, sub);
        }
        return total;
    }
    }
    return T(0);
}

// Row e of the Jacobian by forward-mode differentiation: entry (v,c) is d f_e / d p(v)_c.
inline std::vector<std::vector<mpq_class>> jacobian_by_duals(const Hypergraph& g, const hyperrig::MeasurementModel& m,
                                                            const std::vector<mpq_class>& coords)
{
    const int d = m.d;
    const int cols = d * g.num_vertices();
    std::vector<std::vector<mpq_class>> out;
    for (const auto& e : g.edges()) {
        std::vector<mpq_class> row(cols, 0);
        for (int v : e.support())
            for (int c = 0; c < d; ++c) {
                std::vector<std::vector<Dual>> pts;
                for (int u : e.entries) {
                    std::vector<Dual> x;
                    for (int cc = 0; cc < d; ++cc)
                        x.emplace_back(coords[u * d + cc], (u == v && cc == c) ? mpq_class(1) : mpq_class(0));
                    pts.push_back(x);
                }
                row[v * d + c] = form_value(m, pts).b;
            }
        out.push_back(row);
    }
    return out;
}

// ---- fixtures -------------------------------------------------------------------------

// Two K5-minus-an-edge "bananas" glued at their missing edge's endpoints 0 and 4.
inline Hypergraph double_banana()
{
    std::vector<std::pair<int, int>> pairs;
    for (const std::vector<int>& part : {std::vector<int>{0, 1, 2, 3, 4}, std::vector<int>{0, 4, 5, 6, 7}})
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!(part[i] == 0 && part[j] == 4)) pairs.emplace_back(part[i], part[j]);
    return hyperrig::graph_from_pairs(8, pairs);
}

// ---- exhaustive partition -------------------------------------------------------------

// True if the items 0..m-1 can be split into t classes each accepted by `ok`.
inline bool exhaustive_partition(int m, int t, const std::function<bool(const std::vector<int>&)>& ok)
{
    std::vector<int> assign(m, 0);
    for (;;) {
        bool good = true;
        for (int p = 0; p < t && good; ++p) {
            std::vector<int> part;
            for (int i = 0; i < m; ++i)
                if (assign[i] == p) part.push_back(i);
            good = ok(part);
        }
        if (good) return true;
        int i = 0;
        while (i < m && ++assign[i] == t) assign[i++] = 0;
        if (i == m) return false;
    }
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline int rational_rank(std::vector<std::vector<mpq_class>> a)
{
    int r = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) piv = i;
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace oracle
