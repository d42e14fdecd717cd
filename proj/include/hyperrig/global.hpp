#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperrig/exactla.hpp"
#include "hyperrig/forms.hpp"
#include "hyperrig/hypergraph.hpp"
#include "hyperrig/rigidity.hpp"

namespace hyperrig {

// A sorted (k-1)-multiset of vertex indices.
using Slice = std::vector<int>;

// E^(k-1): every sigma with sigma + v in E for some v, in lexicographic order.
std::vector<Slice> slice_set(const Hypergraph& g);
std::string slice_label(const Hypergraph& g, const Slice& s);

// sign(e, v) = (-1)^(pos) for the 0-based position of v in the sorted edge.
int edge_sign(const HyperEdge& e, int v);

template <class F>
std::vector<std::vector<typename F::Element>> stress_basis(const Hypergraph& g, const MeasurementModel& m,
                                                           const F& field, const GenericPoint<F>& p)
{
    return left_kernel_basis(jacobian(g, m, field, p));
}

// |V| x |E^(k-1)| matrix with entry (v, sigma) = m_e(v) w(e) for e = sigma + v
// (times sign(e, v) when `signed_variant`).
template <class F>
ExactMatrix<F> weighted_adjacency(const Hypergraph& g, const F& field, const std::vector<typename F::Element>& w,
                                  bool signed_variant, const std::vector<Slice>& slices)
{
    require(static_cast<int>(w.size()) == g.num_edges(), "weight vector has " + std::to_string(w.size()) +
                                                             " entries but the hypergraph has " +
                                                             std::to_string(g.num_edges()) + " edges");
    std::map<Slice, int> col;
    for (std::size_t i = 0; i < slices.size(); ++i) col[slices[i]] = static_cast<int>(i);
    ExactMatrix<F> a(field, g.num_vertices(), static_cast<int>(slices.size()));
    for (int r = 0; r < g.num_edges(); ++r) {
        const HyperEdge& e = g.edges()[r];
        for (int v : e.support()) {
            typename F::Element x = field.from_int(e.multiplicity(v)) * w[r];
            if (signed_variant && edge_sign(e, v) < 0) x = -x;
            a(v, col.at(e.remove_one(v))) = x;
        }
    }
    return a;
}

template <class F>
ExactMatrix<F> weighted_adjacency(const Hypergraph& g, const F& field, const std::vector<typename F::Element>& w,
                                  bool signed_variant)
{
    return weighted_adjacency(g, field, w, signed_variant, slice_set(g));
}

// d x |E^(k-1)| matrix whose column sigma is grad g(p(sigma)).
template <class F>
ExactMatrix<F> slice_gradients(const Hypergraph& g, const MeasurementModel& m, const F& field,
                               const GenericPoint<F>& p, const std::vector<Slice>& slices)
{
    check_arity(g, m);
    ExactMatrix<F> out(field, m.d, static_cast<int>(slices.size()));
    for (std::size_t s = 0; s < slices.size(); ++s) {
        auto grad = gradient(m, field, edge_points(p, slices[s]));
        for (int c = 0; c < m.d; ++c) out(c, static_cast<int>(s)) = grad[c];
    }
    return out;
}

// Dimension of the common right kernel of A_{G,w} over the given stresses; the
// matrices are stacked and one kernel is taken.
template <class F>
int shared_kernel_dim(const Hypergraph& g, const F& field, const std::vector<std::vector<typename F::Element>>& stresses,
                      bool signed_variant)
{
    const std::vector<Slice> slices = slice_set(g);
    const int cols = static_cast<int>(slices.size());
    const int nv = g.num_vertices();
    ExactMatrix<F> stack(field, nv * static_cast<int>(stresses.size()), cols);
    for (std::size_t i = 0; i < stresses.size(); ++i) {
        ExactMatrix<F> a = weighted_adjacency(g, field, stresses[i], signed_variant, slices);
        for (int r = 0; r < nv; ++r)
            for (int c = 0; c < cols; ++c) stack(static_cast<int>(i) * nv + r, c) = a(r, c);
    }
    return cols - rank(stack);
}

template <class F>
int shared_kernel_dim(const Hypergraph& g, const MeasurementModel& m, const F& field, const GenericPoint<F>& p,
                      bool signed_variant)
{
    return shared_kernel_dim(g, field, stress_basis(g, m, field, p), signed_variant);
}

enum class GlobalVerdict { certified_globally_rigid, inconclusive };
std::string to_string(GlobalVerdict v);

struct ConditionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct StressCertificate {
    GlobalVerdict verdict = GlobalVerdict::inconclusive;
    std::string reason;
    bool signed_adjacency = false;
    int rank = 0;
    int expected_rank = 0;
    int vertices = 0;
    int slices = 0;
    int d = 0;
    int shared_kernel_dim = 0;
    std::vector<std::vector<std::string>> stress_basis;
    std::vector<ConditionCheck> conditions;
    FieldConfig field;
    std::uint64_t seed = 0;
    int probes_used = 0;

    bool certified() const { return verdict == GlobalVerdict::certified_globally_rigid; }
};

nlohmann::json to_json(const StressCertificate& c);

namespace detail {

template <class F>
StressCertificate certify_at(const Hypergraph& g, const MeasurementModel& m, const F& field, const GenericPoint<F>& p,
                             bool signed_variant, bool size_condition)
{
    const StabilizerInfo& s = *m.stabilizer;
    StressCertificate c;
    c.signed_adjacency = signed_variant;
    c.vertices = g.num_vertices();
    c.d = m.d;
    c.field = field.config();
    c.seed = p.seed;
    ExactMatrix<F> J = jacobian(g, m, field, p);
    c.rank = rank(J);
    c.expected_rank = m.d * g.num_vertices() - s.d_gamma;
    auto stresses = left_kernel_basis(J);
    for (const auto& w : stresses) {
        std::vector<std::string> row;
        for (const auto& x : w) row.push_back(to_string(x));
        c.stress_basis.push_back(std::move(row));
    }
    const std::vector<Slice> slices = slice_set(g);
    c.slices = static_cast<int>(slices.size());

    const bool rigid = g.num_vertices() >= s.n_gamma && c.rank == c.expected_rank;
    c.conditions.push_back({"infinitesimally_rigid", rigid,
                            "rank " + std::to_string(c.rank) + ", need " + std::to_string(c.expected_rank)});
    bool ok = rigid;
    if (size_condition) {
        const bool big = c.slices >= c.vertices + m.d;
        c.conditions.push_back({"slice_count", big,
                                std::to_string(c.slices) + " slices, need " + std::to_string(c.vertices + m.d)});
        ok = ok && big;
    }
    c.shared_kernel_dim = shared_kernel_dim(g, field, stresses, signed_variant);
    const bool kernel = c.shared_kernel_dim == m.d;
    c.conditions.push_back({signed_variant ? "signed_shared_kernel" : "shared_kernel", kernel,
                            "dimension " + std::to_string(c.shared_kernel_dim) + ", need " + std::to_string(m.d)});
    ok = ok && kernel;
    c.verdict = ok ? GlobalVerdict::certified_globally_rigid : GlobalVerdict::inconclusive;
    for (const auto& cond : c.conditions)
        if (!cond.passed) {
            c.reason = cond.name + " fails: " + cond.detail;
            break;
        }
    return c;
}

}  // namespace detail

bool is_symmetric_tensor_model(const MeasurementModel& m);
bool is_determinant_model(const MeasurementModel& m);

// Tensor sufficient condition at a fixed point: infinitesimal rigidity, |E^(k-1)| >= |V| + d,
// and unsigned shared kernel dimension d.
template <class F>
StressCertificate certify_global_tensor(const Hypergraph& g, const MeasurementModel& m, const F& field,
                                        const GenericPoint<F>& p)
{
    check_arity(g, m);
    require(is_symmetric_tensor_model(m), "tensor certificate needs a sym_tensor model, got " + m.name);
    StressCertificate c = detail::certify_at(g, m, field, p, false, true);
    c.probes_used = 1;
    return c;
}

// Determinant sufficient condition at a fixed point: infinitesimal rigidity and signed
// shared kernel dimension d.
template <class F>
StressCertificate certify_global_determinant(const Hypergraph& g, const MeasurementModel& m, const F& field,
                                             const GenericPoint<F>& p)
{
    check_arity(g, m);
    require(is_determinant_model(m), "determinant certificate needs the k x k determinant form, got " + m.name);
    require(g.is_simple(), "determinant certificate needs a simple hypergraph: alternating forms vanish on repeated points");
    StressCertificate c = detail::certify_at(g, m, field, p, true, false);
    c.probes_used = 1;
    return c;
}

// Probed versions: certified if any random point passes.
StressCertificate certify_global_tensor(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt = {});
StressCertificate certify_global_determinant(const Hypergraph& g, const MeasurementModel& m,
                                             const ProbeOptions& opt = {});

struct GlobalExtension {
    bool certified = false;
    ExtensionCheck extension;
    Hypergraph graph;
};

// A simple d-valent extension that preserves local rigidity preserves global rigidity
// (multilinear models).
GlobalExtension zero_extension_global(const Hypergraph& g, bool g_certified, const MeasurementModel& m,
                                      const VertexId& new_vertex,
                                      const std::vector<std::vector<VertexId>>& new_edges,
                                      const ProbeOptions& opt = {});

// Local rigidity forces n_Gamma-connectivity of the 2-section; a failure certifies flexibility.
bool connectivity_necessary(const Hypergraph& g, const MeasurementModel& m);

// Experimental, non-certifying: sum_e w(e) * Hess f_e for sym_tensor models.
template <class F>
ExactMatrix<F> stress_hessian(const Hypergraph& g, const MeasurementModel& m, const F& field,
                              const GenericPoint<F>& p, const std::vector<typename F::Element>& w)
{
    require(is_symmetric_tensor_model(m), "stress Hessian is implemented for sym_tensor models only");
    require(static_cast<int>(w.size()) == g.num_edges(), "weight vector does not match edge count");
    const int d = m.d;
    ExactMatrix<F> h(field, d * g.num_vertices(), d * g.num_vertices());
    for (int r = 0; r < g.num_edges(); ++r) {
        const auto& e = g.edges()[r].entries;
        const int k = static_cast<int>(e.size());
        for (int c = 0; c < d; ++c)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (i == j) continue;
                    typename F::Element x = w[r];
                    for (int s = 0; s < k; ++s)
                        if (s != i && s != j) x *= p.at(e[s], c);
                    h(e[i] * d + c, e[j] * d + c) += x;
                }
    }
    return h;
}

// Ranks of the stress Hessians over a stress basis at one random point. Non-certifying.
std::vector<int> experimental_stress_hessian_ranks(const Hypergraph& g, const MeasurementModel& m,
                                                   const ProbeOptions& opt = {});

}  // namespace hyperrig
