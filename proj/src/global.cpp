#include "hyperrig/global.hpp"

#include <set>

namespace hyperrig {

std::vector<Slice> slice_set(const Hypergraph& g)
{
    std::set<Slice> s;
    for (const auto& e : g.edges())
        for (int v : e.support()) s.insert(e.remove_one(v));
    return {s.begin(), s.end()};
}

std::string slice_label(const Hypergraph& g, const Slice& s)
{
    bool short_labels = true;
    for (const auto& v : g.vertices())
        if (v.size() != 1) short_labels = false;
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && !short_labels) out += ",";
        out += g.vertices()[s[i]];
    }
    return out;
}

int edge_sign(const HyperEdge& e, int v)
{
    for (int i = 0; i < e.size(); ++i)
        if (e.entries[i] == v) return i % 2 == 0 ? 1 : -1;
    throw InputError("edge_sign: vertex not in edge");
}

std::string to_string(GlobalVerdict v)
{
    return v == GlobalVerdict::certified_globally_rigid ? "certified_globally_rigid" : "inconclusive";
}

nlohmann::json to_json(const StressCertificate& c)
{
    nlohmann::json j;
    j["verdict"] = to_string(c.verdict);
    if (!c.reason.empty()) j["reason"] = c.reason;
    j["signed_adjacency"] = c.signed_adjacency;
    j["rank"] = c.rank;
    j["expected_rank"] = c.expected_rank;
    j["vertices"] = c.vertices;
    j["slices"] = c.slices;
    j["d"] = c.d;
    j["adjacency_shape"] = {c.vertices, c.slices};
    j["shared_kernel_dim"] = c.shared_kernel_dim;
    j["stress_basis"] = c.stress_basis;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& x : c.conditions) conds.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    j["conditions"] = conds;
    j["field"] = c.field.name();
    j["point_seed"] = c.seed;
    j["probes_used"] = c.probes_used;
    return j;
}

bool is_symmetric_tensor_model(const MeasurementModel& m)
{
    return m.kind == FormKind::product || (m.kind == FormKind::copies && m.base->kind == FormKind::product);
}

bool is_determinant_model(const MeasurementModel& m)
{
    return m.kind == FormKind::determinant ||
           (m.kind == FormKind::copies && m.base->kind == FormKind::determinant && m.copies == 1);
}

namespace {

template <class Certify>
StressCertificate probe_certificate(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt,
                                    Certify&& certify)
{
    require(m.stabilizer.has_value(), "model " + m.name + " lacks stabilizer metadata");
    StressCertificate best;
    int used = 0;
    for_each_probe(opt, [&](const auto& field, std::uint64_t s) {
        ++used;
        best = certify(field, sample_generic_point(field, g.num_vertices(), m.d, s));
        return best.certified();
    });
    best.probes_used = used;
    return best;
}

}  // namespace

StressCertificate certify_global_tensor(const Hypergraph& g, const MeasurementModel& m, const ProbeOptions& opt)
{
    check_arity(g, m);
    require(is_symmetric_tensor_model(m), "tensor certificate needs a sym_tensor model, got " + m.name);
    return probe_certificate(g, m, opt, [&](const auto& field, const auto& p) {
        return certify_global_tensor(g, m, field, p);
    });
}

StressCertificate certify_global_determinant(const Hypergraph& g, const MeasurementModel& m,
                                             const ProbeOptions& opt)
{
    check_arity(g, m);
    require(is_determinant_model(m), "determinant certificate needs the k x k determinant form, got " + m.name);
    require(g.is_simple(), "determinant certificate needs a simple hypergraph: alternating forms vanish on repeated points");
    return probe_certificate(g, m, opt, [&](const auto& field, const auto& p) {
        return certify_global_determinant(g, m, field, p);
    });
}

GlobalExtension zero_extension_global(const Hypergraph& g, bool g_certified, const MeasurementModel& m,
                                      const VertexId& new_vertex,
                                      const std::vector<std::vector<VertexId>>& new_edges, const ProbeOptions& opt)
{
    require(m.multilinear(), "the extension lemma needs a multilinear model, got " + m.name);
    require(static_cast<int>(new_edges.size()) == m.d,
            "extension must be " + std::to_string(m.d) + "-valent, got " + std::to_string(new_edges.size()) +
                " edges");
    GlobalExtension out;
    out.graph = d_valent_extension(g, new_vertex, new_edges, true);
    out.extension = check_extension(g, m, new_vertex, new_edges, opt);
    out.certified = g_certified && out.extension.preserves_rigidity;
    return out;
}

bool connectivity_necessary(const Hypergraph& g, const MeasurementModel& m)
{
    require(m.stabilizer.has_value(), "model " + m.name + " lacks stabilizer metadata");
    const int ng = m.stabilizer->n_gamma;
    require(g.num_vertices() >= ng + 1, "connectivity condition needs |V| >= n_Gamma + 1 = " +
                                            std::to_string(ng + 1));
    if (ng == 0) return true;
    return vertex_connectivity(g) >= ng;
}

std::vector<int> experimental_stress_hessian_ranks(const Hypergraph& g, const MeasurementModel& m,
                                                   const ProbeOptions& opt)
{
    require(is_symmetric_tensor_model(m), "stress Hessian is implemented for sym_tensor models only");
    check_arity(g, m);
    std::vector<int> ranks;
    for_each_probe(opt, [&](const auto& field, std::uint64_t s) {
        auto p = sample_generic_point(field, g.num_vertices(), m.d, s);
        for (const auto& w : stress_basis(g, m, field, p)) ranks.push_back(rank(stress_hessian(g, m, field, p, w)));
        return true;
    });
    return ranks;
}

}  // namespace hyperrig
