#pragma once

#include <optional>
#include <vector>

#include "hyperrig/forms.hpp"
#include "hyperrig/hypergraph.hpp"

namespace hyperrig {

// (a,b)-sparsity: every sub-hypergraph with at least one edge has |E'| <= a|V'| - b.
// For 0 <= b <= ak-1 this is a matroid and is decided by the pebble game. Larger b
// (e.g. (3,6) on graphs) is treated as a Maxwell-type count that only applies to vertex
// sets with a|V'| - b >= 1; there is no matroid, and decisions fall back to enumeration.
struct SparsityParams {
    int a = 0;
    int b = 0;
    int k = 2;

    bool matroidal() const { return b <= a * k - 1; }
};

void validate(const SparsityParams& p);

// Edges accepted by the pebble game when inserted in canonical order (a basis of the
// sparsity matroid restricted to E(G)). Matroidal range only.
std::vector<HyperEdge> pebble_game_basis(const Hypergraph& g, const SparsityParams& p);

int sparsity_rank(const Hypergraph& g, const SparsityParams& p);
bool is_sparse(const Hypergraph& g, const SparsityParams& p);
bool is_tight(const Hypergraph& g, const SparsityParams& p);

// Sparsity rank for (a, b) = (d, d_Gamma); an upper bound on the generic rank.
int expected_rank_bound(const Hypergraph& g, const MeasurementModel& m);

bool geiringer_laman_rigid(const Hypergraph& g);

// Witness forests: t edge-disjoint spanning trees, if they exist.
std::optional<std::vector<std::vector<HyperEdge>>> spanning_tree_decomposition(const Hypergraph& g, int t);
bool spanning_tree_packing(const Hypergraph& g, int t);

bool is_two_connected(const Hypergraph& g);
bool lp_plane_global_condition(const Hypergraph& g);

}  // namespace hyperrig
