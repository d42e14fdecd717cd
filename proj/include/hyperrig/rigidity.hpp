#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperrig/exactla.hpp"
#include "hyperrig/forms.hpp"
#include "hyperrig/hypergraph.hpp"

namespace hyperrig {

template <class F>
std::vector<std::vector<typename F::Element>> edge_points(const GenericPoint<F>& p, const HyperEdge& e)
{
    std::vector<std::vector<typename F::Element>> pts;
    for (int v : e.entries) pts.push_back(p.vertex(v));
    return pts;
}

template <class F>
std::vector<std::vector<typename F::Element>> edge_points(const GenericPoint<F>& p, const std::vector<int>& e)
{
    std::vector<std::vector<typename F::Element>> pts;
    for (int v : e) pts.push_back(p.vertex(v));
    return pts;
}

// Partial derivative of g in argument slot j. Euclidean-type rows are scaled by 1/2
// (1/p for lp): rows read p(i)-p(j), the usual rigidity-matrix convention.
template <class F>
std::vector<typename F::Element> slot_derivative(const MeasurementModel& m, const F& field,
                                                 const std::vector<std::vector<typename F::Element>>& pts, int j)
{
    using E = typename F::Element;
    switch (m.kind) {
    case FormKind::euclidean:
    case FormKind::pseudo_euclidean:
    case FormKind::lp: {
        const auto& x = pts[j];
        const auto& y = pts[1 - j];
        int e = m.kind == FormKind::lp ? m.exponent : 2;
        std::vector<E> out;
        for (int c = 0; c < m.d; ++c) {
            E diff = x[c] - y[c];
            E v = field.one();
            for (int i = 0; i + 1 < e; ++i) v *= diff;
            if (m.kind == FormKind::pseudo_euclidean && c >= m.signature) v = -v;
            out.push_back(v);
        }
        return out;
    }
    case FormKind::copies:
        if (!m.base->multiaffine()) {
            const int s = m.base->d;
            std::vector<E> out;
            for (int i = 0; i < m.copies; ++i) {
                std::vector<E> g = slot_derivative(*m.base, field, detail::block<F>(pts, i * s, s), j);
                out.insert(out.end(), g.begin(), g.end());
            }
            return out;
        }
        break;
    default:
        break;
    }
    std::vector<std::vector<E>> rest;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        if (i != j) rest.push_back(pts[i]);
    std::vector<E> g = gradient(m, field, rest);
    if (m.antisymmetric() && (j % 2 == 1))
        for (auto& x : g) x = -x;
    return g;
}

inline void check_arity(const Hypergraph& g, const MeasurementModel& m)
{
    require(g.k() == m.k, "arity mismatch: hypergraph is " + std::to_string(g.k()) + "-uniform but model " +
                              m.name + " has k=" + std::to_string(m.k));
}

template <class F>
std::vector<typename F::Element> measurement(const Hypergraph& g, const MeasurementModel& m, const F& field,
                                             const GenericPoint<F>& p)
{
    check_arity(g, m);
    require(p.d == m.d && p.n == g.num_vertices(), "point configuration does not match hypergraph/model");
    std::vector<typename F::Element> out;
    for (const auto& e : g.edges()) out.push_back(evaluate(m, field, edge_points(p, e)));
    return out;
}

// |E| x d|V| Jacobian; rows follow the canonical edge order, column block v*d..v*d+d-1 is vertex v.
template <class F>
ExactMatrix<F> jacobian(const Hypergraph& g, const MeasurementModel& m, const F& field, const GenericPoint<F>& p)
{
    check_arity(g, m);
    require(p.d == m.d && p.n == g.num_vertices(), "point configuration does not match hypergraph/model");
    const int d = m.d;
    ExactMatrix<F> J(field, g.num_edges(), d * g.num_vertices());
    for (int r = 0; r < g.num_edges(); ++r) {
        const HyperEdge& e = g.edges()[r];
        auto pts = edge_points(p, e);
        for (int j = 0; j < e.size(); ++j) {
            auto der = slot_derivative(m, field, pts, j);
            const int v = e.entries[j];
            for (int c = 0; c < d; ++c) J(r, v * d + c) += der[c];
        }
    }
    return J;
}

// Generic rank of the Jacobian by random probing. `ceiling` as in probe_rank_with_confidence.
RankCertificate generic_rank(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt = {},
                             int ceiling = -1);

enum class Verdict { locally_rigid, flexible, below_n_gamma };
std::string to_string(Verdict v);

enum class PartiteMode { automatic, standard, partite };

struct RigidityReport {
    int rank = 0;
    int dof = 0;  // d|V| - rank
    int expected_rank = 0;
    Verdict verdict = Verdict::flexible;
    int d_gamma = 0;
    bool partite = false;
    RankCertificate certificate;
};

RigidityReport is_locally_rigid(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt = {},
                                PartiteMode mode = PartiteMode::automatic);

// Algebraic matroid on a ground set of edges of K_n^k (all of it by default), backed by
// Jacobian rows cached once per probe.
class RigidityMatroid {
public:
    RigidityMatroid(int n, const MeasurementModel& m, const ProbeOptions& opt = {},
                    std::vector<HyperEdge> ground = {});

    int n() const { return n_; }
    const std::vector<HyperEdge>& ground() const { return ground_; }
    int index_of(const HyperEdge& e) const;

    int rank_of(const std::vector<int>& idx) const;
    bool independent_of(const std::vector<int>& idx) const { return rank_of(idx) == static_cast<int>(idx.size()); }
    int rank(const std::vector<HyperEdge>& f) const { return rank_of(indices(f)); }
    bool independent(const std::vector<HyperEdge>& f) const { return independent_of(indices(f)); }
    std::vector<HyperEdge> find_circuit(const std::vector<HyperEdge>& f) const;
    std::vector<int> indices(const std::vector<HyperEdge>& f) const;

private:
    int n_;
    std::vector<HyperEdge> ground_;
    std::map<HyperEdge, int> index_;
    std::vector<ExactMatrix<PrimeField>> prime_rows_;
    std::vector<ExactMatrix<RationalField>> rational_rows_;
};

bool matroid_independent(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f,
                         const ProbeOptions& opt = {});
int matroid_rank(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f, const ProbeOptions& opt = {});
std::vector<HyperEdge> find_circuit(int n, const MeasurementModel& m, const std::vector<HyperEdge>& f,
                                    const ProbeOptions& opt = {});

// Rank of the d-column block of vertex v over the edges containing v, at point p.
template <class F>
int stability_rank(const Hypergraph& g, const MeasurementModel& m, const F& field, const GenericPoint<F>& p, int v)
{
    require(m.multiaffine(), "vertex stability is defined for multiaffine models only");
    require(v >= 0 && v < g.num_vertices(), "stability: vertex out of range");
    std::vector<int> rows;
    for (int r = 0; r < g.num_edges(); ++r)
        if (g.edges()[r].contains(v)) rows.push_back(r);
    if (rows.empty()) return 0;
    ExactMatrix<F> J = jacobian(g, m, field, p);
    ExactMatrix<F> B(field, static_cast<int>(rows.size()), m.d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int c = 0; c < m.d; ++c) B(static_cast<int>(i), c) = J(rows[i], v * m.d + c);
    return rank(B);
}

template <class F>
bool is_stable_vertex(const Hypergraph& g, const MeasurementModel& m, const F& field, const GenericPoint<F>& p,
                      int v)
{
    return stability_rank(g, m, field, p, v) == m.d;
}

// Stability at random points: true if some probe has full rank d.
bool is_stable_vertex(const Hypergraph& g, const MeasurementModel& m, const VertexId& v, const ProbeOptions& opt = {});

struct ExtensionCheck {
    bool preserves_rigidity = false;
    bool stable = false;
    int incident_edges = 0;
    int stability_rank = 0;
    std::string detail;
};

ExtensionCheck check_extension(const Hypergraph& g, const MeasurementModel& m, const VertexId& new_vertex,
                               const std::vector<std::vector<VertexId>>& new_edges, const ProbeOptions& opt = {});

// Splits F (independent for m = t copies of h) into t parts independent for h.
std::vector<std::vector<HyperEdge>> decompose_independent(int n, const MeasurementModel& m,
                                                          const std::vector<HyperEdge>& f,
                                                          const ProbeOptions& opt = {});

bool ah_oracle(int k, int n, int d);

enum class GlobalExpectation { globally_rigid, not_globally_rigid, out_of_scope };
std::string to_string(GlobalExpectation g);
GlobalExpectation veronese_global_oracle(int k, int n, int d);

long long binomial(int n, int k);

}  // namespace hyperrig
