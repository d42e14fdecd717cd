#include "hyperrig/rigidity.hpp"

#include <algorithm>
#include <type_traits>

#include "hyperrig/matroid_union.hpp"

namespace hyperrig {

long long binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

RankCertificate generic_rank(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt, int ceiling)
{
    check_arity(g, m);
    const int n = g.num_vertices();
    auto build = [&](const auto& field, std::uint64_t seed) {
        auto p = sample_generic_point(field, n, m.d, seed);
        return jacobian(g, m, field, p);
    };
    return probe_rank_with_confidence(build, opt, m.degree() - 1, ceiling);
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::locally_rigid:
        return "locally_rigid";
    case Verdict::flexible:
        return "flexible";
    case Verdict::below_n_gamma:
        return "below_n_gamma";
    }
    return "unknown";
}

RigidityReport is_locally_rigid(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt,
                                PartiteMode mode)
{
    check_arity(g, m);
    require(m.stabilizer.has_value(),
            "model " + m.name + " lacks stabilizer metadata; supply an estimate via with_stabilizer");
    const StabilizerInfo& s = *m.stabilizer;
    const int n = g.num_vertices();
    RigidityReport rep;
    rep.partite = mode == PartiteMode::partite ||
                  (mode == PartiteMode::automatic && g.partition() && s.d_gamma_partite.has_value());
    bool below = false;
    if (rep.partite) {
        require(g.partition().has_value(), "partite rigidity needs a partitioned hypergraph");
        require(s.d_gamma_partite.has_value(), "model " + m.name + " has no multipartite stabilizer data");
        rep.d_gamma = *s.d_gamma_partite;
        for (const auto& block : *g.partition())
            if (static_cast<int>(block.size()) < s.n_gamma_partite.value_or(0)) below = true;
    } else {
        rep.d_gamma = s.d_gamma;
        below = n < s.n_gamma;
    }
    rep.expected_rank = m.d * n - rep.d_gamma;
    int ceiling = (!below && !s.heuristic) ? rep.expected_rank : -1;
    rep.certificate = generic_rank(g, m, opt, ceiling);
    rep.rank = rep.certificate.rank;
    rep.dof = m.d * n - rep.rank;
    if (below)
        rep.verdict = Verdict::below_n_gamma;
    else
        rep.verdict = rep.rank == rep.expected_rank ? Verdict::locally_rigid : Verdict::flexible;
    return rep;
}

RigidityMatroid::RigidityMatroid(int n, const MeasurementModel& m, const ProbeOptions& opt,
                                 std::vector<HyperEdge> ground)
    : n_(n), ground_(std::move(ground))
{
    require(n >= 1, "matroid needs at least one vertex");
    require(opt.probes >= 1, "at least one probe is required");
    if (ground_.empty()) ground_ = complete_hypergraph(n, m.k, false).edges();
    Hypergraph amb(m.k, default_labels(n), ground_);
    ground_ = amb.edges();
    for (std::size_t i = 0; i < ground_.size(); ++i) index_[ground_[i]] = static_cast<int>(i);
    for_each_probe(opt, [&](const auto& f, std::uint64_t s) {
        auto J = jacobian(amb, m, f, sample_generic_point(f, n, m.d, s));
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, PrimeField>)
            prime_rows_.push_back(std::move(J));
        else
            rational_rows_.push_back(std::move(J));
        return false;
    });
}

int RigidityMatroid::index_of(const HyperEdge& e) const
{
    auto it = index_.find(e);
    require(it != index_.end(), "edge outside the matroid ground set");
    return it->second;
}

std::vector<int> RigidityMatroid::indices(const std::vector<HyperEdge>& f) const
{
    std::vector<int> idx;
    for (const auto& e : f) idx.push_back(index_of(e));
    return idx;
}

int RigidityMatroid::rank_of(const std::vector<int>& idx) const
{
    const int full = static_cast<int>(idx.size());
    int best = 0;
    for (const auto& J : prime_rows_) {
        best = std::max(best, hyperrig::rank(J.select_rows(idx), full));
        if (best == full) return best;
    }
    for (const auto& J : rational_rows_) {
        best = std::max(best, hyperrig::rank(J.select_rows(idx), full));
        if (best == full) return best;
    }
    return best;
}

std::vector<HyperEdge> RigidityMatroid::find_circuit(const std::vector<HyperEdge>& f) const
{
    std::vector<int> cur = indices(f);
    require(!independent_of(cur), "find_circuit: edge set is independent");
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int drop = index_of(f[i]);
        std::vector<int> trial;
        for (int x : cur)
            if (x != drop) trial.push_back(x);
        if (!independent_of(trial)) cur = trial;
    }
    std::sort(cur.begin(), cur.end());
    std::vector<HyperEdge> out;
    for (int x : cur) out.push_back(ground_[x]);
    return out;
}

bool matroid_independent(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f, const ProbeOptions& opt)
{
    if (f.empty()) return true;
    return RigidityMatroid(n, m, opt, f).independent(f);
}

int matroid_rank(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f, const ProbeOptions& opt)
{
    if (f.empty()) return 0;
    return RigidityMatroid(n, m, opt, f).rank(f);
}

std::vector<HyperEdge> find_circuit(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f,
                                    const ProbeOptions& opt)
{
    require(!f.empty(), "find_circuit: empty edge set is independent");
    return RigidityMatroid(n, m, opt, f).find_circuit(f);
}

bool is_stable_vertex(const Hypergraph& g, const MeasurementModel& m, const VertexId& v, const ProbeOptions& opt)
{
    check_arity(g, m);
    const int vi = g.index_of(v);
    bool stable = false;
    for_each_probe(opt, [&](const auto& f, std::uint64_t s) {
        stable = stability_rank(g, m, f, sample_generic_point(f, g.num_vertices(), m.d, s), vi) == m.d;
        return stable;
    });
    return stable;
}

ExtensionCheck check_extension(const Hypergraph& g, const MeasurementModel& m, const VertexId& new_vertex,
                               const std::vector<std::vector<VertexId>>& new_edges, const ProbeOptions& opt)
{
    check_arity(g, m);
    Hypergraph h = d_valent_extension(g, new_vertex, new_edges, false);
    ExtensionCheck out;
    out.incident_edges = static_cast<int>(new_edges.size());
    const int v = h.index_of(new_vertex);
    for_each_probe(opt, [&](const auto& f, std::uint64_t s) {
        int r = stability_rank(h, m, f, sample_generic_point(f, h.num_vertices(), m.d, s), v);
        out.stability_rank = std::max(out.stability_rank, r);
        out.stable = r == m.d;
        return out.stable;
    });
    out.preserves_rigidity = out.stable;
    if (out.stable)
        out.detail = "new vertex is stable: gradient rows have rank d=" + std::to_string(m.d);
    else
        out.detail = "new vertex is not stable: gradient rows have rank " + std::to_string(out.stability_rank) +
                     " < d=" + std::to_string(m.d);
    return out;
}

std::vector<std::vector<HyperEdge>> decompose_independent(int n, const MeasurementModel& m,
                                                          const std::vector<HyperEdge>& f, const ProbeOptions& opt)
{
    const int t = m.copy_count();
    std::vector<std::vector<HyperEdge>> parts(t);
    if (f.empty()) return parts;
    require(matroid_independent(n, m, f, opt), "decompose_independent: edge set is dependent");
    if (t == 1) {
        parts[0] = f;
        return parts;
    }
    RigidityMatroid h(n, m.copy_base(), opt, f);
    std::vector<int> order = h.indices(f);
    auto oracle = [&](const std::vector<int>& elems) {
        std::vector<int> idx;
        for (int e : elems) idx.push_back(order[e]);
        return h.independent_of(idx);
    };
    std::vector<int> assign = matroid_partition(static_cast<int>(f.size()), t, oracle);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (assign[i] < 0)
            throw std::runtime_error("decompose_independent: no partition found for an independent set "
                                     "(probe failure or internal bug)");
        parts[assign[i]].push_back(f[i]);
    }
    return parts;
}

bool ah_oracle(int k, int n, int d)
{
    require(k >= 3, "Alexander-Hirschowitz oracle needs k >= 3");
    require(n >= 1 && d >= 1, "Alexander-Hirschowitz oracle needs n, d >= 1");
    static const int exceptions[][3] = {{3, 5, 7}, {4, 3, 5}, {4, 4, 9}, {4, 5, 14}};
    for (const auto& e : exceptions)
        if (e[0] == k && e[1] == n && e[2] == d) return false;
    return binomial(n + k - 1, k) >= static_cast<long long>(d) * n;
}

std::string to_string(GlobalExpectation g)
{
    switch (g) {
    case GlobalExpectation::globally_rigid:
        return "globally_rigid";
    case GlobalExpectation::not_globally_rigid:
        return "not_globally_rigid";
    case GlobalExpectation::out_of_scope:
        return "out_of_scope";
    }
    return "unknown";
}

GlobalExpectation veronese_global_oracle(int k, int n, int d)
{
    require(k >= 3, "Veronese identifiability oracle needs k >= 3");
    require(n >= 1 && d >= 1, "Veronese identifiability oracle needs n, d >= 1");
    const long long space = binomial(n + k - 1, k);
    const long long need = static_cast<long long>(d) * n;
    auto is = [&](int a, int b, int c) { return k == a && n == b && d == c; };
    if (space > need)
        return (is(6, 3, 9) || is(4, 4, 8) || is(3, 6, 9)) ? GlobalExpectation::not_globally_rigid
                                                            : GlobalExpectation::globally_rigid;
    if (space == need) {
        bool listed = is(3, 4, 5) || is(5, 3, 7) || (n == 2 && d >= 2 && k == 2 * d - 1);
        return listed ? GlobalExpectation::globally_rigid : GlobalExpectation::not_globally_rigid;
    }
    return GlobalExpectation::out_of_scope;
}

}  // namespace hyperrig
