#include "hyperrig/packing.hpp"

#include <algorithm>
#include <set>

#include "hyperrig/errors.hpp"
#include "hyperrig/rigidity.hpp"

namespace hyperrig {

std::string to_string(PackingCondition c)
{
    switch (c) {
    case PackingCondition::P1: return "P1";
    case PackingCondition::P2: return "P2";
    case PackingCondition::P3: return "P3";
    }
    return "?";
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<char>& mask)
{
    return std::all_of(a.begin(), a.end(), [&](int v) { return mask[v] != 0; });
}

}  // namespace

PackingCertificate verify_packing(const Hypergraph& g, const MeasurementModel& m,
                                  const std::vector<std::vector<VertexId>>& family, const ProbeOptions& opt)
{
    check_arity(g, m);
    const MeasurementModel& h = m.copy_base();
    const int t = m.copy_count();
    require(h.stabilizer.has_value(), "base form " + h.name + " lacks stabilizer metadata");
    require(static_cast<int>(family.size()) == t, "family has " + std::to_string(family.size()) +
                                                      " sets but the model is a sum of " + std::to_string(t) +
                                                      " copies");
    const int n = g.num_vertices();
    PackingCertificate cert;
    std::vector<std::vector<char>> masks;
    for (const auto& x : family) {
        std::set<int> idx;
        for (const auto& label : x) idx.insert(g.index_of(label));
        require(idx.size() == x.size(), "family set contains a repeated vertex");
        require(static_cast<int>(idx.size()) >= h.stabilizer->n_gamma,
                "family set smaller than n_Gamma of the base form");
        cert.family.emplace_back(idx.begin(), idx.end());
        std::vector<char> mask(n, 0);
        for (int v : idx) mask[v] = 1;
        masks.push_back(std::move(mask));
    }
    for (int i = 0; i < t; ++i) {
        std::vector<HyperEdge> inside;
        for (const auto& e : g.edges())
            if (subset_of(e.entries, masks[i])) inside.push_back(e);
        cert.closures.push_back(neighbor_closure(g, inside));
    }

    auto fail = [&](PackingCondition c, int set) {
        if (!cert.failing_condition) {
            cert.failing_condition = c;
            cert.failing_set = set;
        }
    };

    for (int i = 0; i < t; ++i) {
        Hypergraph hi(g.k(), g.vertices(), cert.closures[i]);
        RigidityReport r = is_locally_rigid(hi, h, opt, PartiteMode::standard);
        bool ok = r.verdict == Verdict::locally_rigid;
        cert.transcript.push_back({PackingCondition::P1, i, ok, r.rank, r.expected_rank});
        if (!ok) fail(PackingCondition::P1, i);
    }
    for (int i = 0; i < t; ++i) {
        std::vector<VertexId> labels;
        for (int v : cert.family[i]) labels.push_back(g.vertices()[v]);
        Hypergraph sub = induced_subhypergraph(g, labels);
        RigidityReport r = is_locally_rigid(sub, h, opt, PartiteMode::standard);
        bool ok = r.verdict == Verdict::locally_rigid;
        cert.transcript.push_back({PackingCondition::P2, i, ok, r.rank, r.expected_rank});
        if (!ok) fail(PackingCondition::P2, i);
    }
    for (int i = 0; i < t; ++i) {
        bool ok = true;
        for (const auto& e : cert.closures[i]) {
            for (int v : e.support()) {
                HyperEdge rest(e.remove_one(v));
                std::vector<int> supp = rest.support();
                for (int j = 0; j < t && ok; ++j) {
                    if (j == i || !subset_of(supp, masks[j])) continue;
                    ok = false;
                    if (!cert.witness) cert.witness = PackingWitness{i, j, e, v};
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        cert.transcript.push_back({PackingCondition::P3, i, ok, 0, 0});
        if (!ok) fail(PackingCondition::P3, i);
    }
    cert.accepted = !cert.failing_condition.has_value();
    if (cert.failing_condition != PackingCondition::P3) cert.witness.reset();
    return cert;
}

std::vector<std::vector<int>> greedy_sparse_family(int n, int alpha, int beta)
{
    require(n >= 1, "greedy family needs n >= 1");
    require(beta >= 1 && beta <= alpha && alpha <= n, "greedy family needs 1 <= beta <= alpha <= n");
    std::vector<std::vector<int>> family;
    std::vector<int> cur(alpha);
    for (int i = 0; i < alpha; ++i) cur[i] = i + 1;
    for (;;) {
        bool fits = true;
        for (const auto& s : family) {
            std::vector<int> common;
            std::set_intersection(s.begin(), s.end(), cur.begin(), cur.end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) >= beta) {
                fits = false;
                break;
            }
        }
        if (fits) family.push_back(cur);
        int i = alpha - 1;
        while (i >= 0 && cur[i] == n - alpha + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < alpha; ++j) cur[j] = cur[j - 1] + 1;
    }
    return family;
}

CorollaryCheck corollary_check(int n, int k, const MeasurementModel& m, int a, const ProbeOptions& opt)
{
    require(k >= 3, "the packing corollary needs k >= 3");
    require(m.k == k, "model arity does not match k");
    require(a >= 1 && n >= 1, "corollary check needs positive n and a");
    const MeasurementModel& h = m.copy_base();
    require(h.stabilizer.has_value(), "base form " + h.name + " lacks stabilizer metadata");
    const int t = m.copy_count();
    CorollaryCheck out;
    RigidityReport r = is_locally_rigid(complete_hypergraph(a, k, true), h, opt, PartiteMode::standard);
    out.small_complete_rigid = r.verdict == Verdict::locally_rigid;
    out.size_ok = a >= h.stabilizer->n_gamma + 1;
    const int beta = k - 2;
    if (a <= n && beta <= a) {
        out.family_size = static_cast<int>(greedy_sparse_family(n, a, beta).size());
        out.packing_ok = t <= out.family_size;
    }
    out.applies = out.small_complete_rigid && out.size_ok && out.packing_ok;
    if (!out.small_complete_rigid)
        out.detail = "complete simple " + std::to_string(a) + "-vertex hypergraph is not locally rigid for " + h.name;
    else if (!out.size_ok)
        out.detail = "a must exceed n_Gamma of " + h.name;
    else if (!out.packing_ok)
        out.detail = "greedy family has " + std::to_string(out.family_size) + " sets, need " + std::to_string(t);
    else
        out.detail = "all hypotheses hold";
    return out;
}

Hypergraph tridiagonal_hypergraph(int n, int k)
{
    require(n >= 1 && k >= 2, "tridiagonal hypergraph needs n >= 1 and k >= 2");
    std::set<HyperEdge> edges;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            std::vector<int> e(k - 1, v);
            e.push_back(w);
            edges.insert(HyperEdge(e));
        }
    return Hypergraph(k, default_labels(n), {edges.begin(), edges.end()});
}

}  // namespace hyperrig
