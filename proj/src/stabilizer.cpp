#include "hyperrig/forms.hpp"
#include "hyperrig/rigidity.hpp"

namespace hyperrig {

StabilizerEstimate estimate_stabilizer_dim(const MeasurementModel& model, int n_max, int trials, std::uint64_t seed)
{
    require(n_max >= model.k, "estimate_stabilizer_dim needs n_max >= k");
    require(trials >= 1, "estimate_stabilizer_dim needs at least one trial");
    ProbeOptions opt;
    opt.probes = trials;
    opt.seed = seed;
    StabilizerEstimate out;
    for (int n = model.k; n <= n_max; ++n) {
        // Anti-symmetric forms vanish on repeated arguments, so only simple edges carry rows.
        Hypergraph g = complete_hypergraph(n, model.k, model.antisymmetric());
        int r = generic_rank(g, model, opt).rank;
        out.kernel_dims.emplace_back(n, model.d * n - r);
        const std::size_t s = out.kernel_dims.size();
        if (s >= 2 && out.kernel_dims[s - 1].second == out.kernel_dims[s - 2].second) {
            StabilizerInfo info;
            info.d_gamma = out.kernel_dims[s - 1].second;
            std::size_t first = s - 2;
            while (first > 0 && out.kernel_dims[first - 1].second == info.d_gamma) --first;
            info.n_gamma = out.kernel_dims[first].first;
            info.heuristic = true;
            info.description = "estimated from kernel dimensions of complete hypergraphs (heuristic)";
            out.info = info;
            break;
        }
    }
    return out;
}

}  // namespace hyperrig
