#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperrig/exactla.hpp"
#include "hyperrig/forms.hpp"
#include "hyperrig/hypergraph.hpp"

namespace hyperrig {

enum class PackingCondition { P1, P2, P3 };
std::string to_string(PackingCondition c);

// A violation of P3: edge e of F_i and vertex v with supp(e - v) inside X_j.
struct PackingWitness {
    int i = 0;
    int j = 0;
    HyperEdge edge;
    int vertex = 0;
};

struct ConditionRecord {
    PackingCondition condition = PackingCondition::P1;
    int set = 0;
    bool passed = false;
    int rank = 0;
    int expected_rank = 0;
};

struct PackingCertificate {
    std::vector<std::vector<int>> family;        // vertex indices of X_1..X_t
    std::vector<std::vector<HyperEdge>> closures;  // F_i = N_G(E_G[X_i])
    bool accepted = false;
    std::optional<PackingCondition> failing_condition;
    std::optional<int> failing_set;
    std::optional<PackingWitness> witness;
    std::vector<ConditionRecord> transcript;
};

// Sufficient test for local rigidity of t copies of h: (P1) ([n],F_i) locally h-rigid,
// (P2) G[X_i] locally h-rigid, (P3) supp(e - v) not inside X_j for e in F_i, i != j.
PackingCertificate verify_packing(const Hypergraph& g, const MeasurementModel& m,
                                  const std::vector<std::vector<VertexId>>& family, const ProbeOptions& opt = {});

// Greedy beta-sparse family of alpha-subsets of {1..n} (pairwise intersections < beta),
// scanning subsets in lexicographic order. Sets are 1-based.
std::vector<std::vector<int>> greedy_sparse_family(int n, int alpha, int beta);

struct CorollaryCheck {
    bool applies = false;
    bool small_complete_rigid = false;  // simple complete a-vertex hypergraph is locally h-rigid
    bool size_ok = false;               // a >= n_Gamma(h) + 1
    bool packing_ok = false;            // t <= |greedy (k-2)-sparse family of a-sets|
    int family_size = 0;
    std::string detail;
};

CorollaryCheck corollary_check(int n, int k, const MeasurementModel& m, int a, const ProbeOptions& opt = {});

// The k-uniform hypergraph on [n] with edges v^(k-1) w for all v, w.
Hypergraph tridiagonal_hypergraph(int n, int k);

}  // namespace hyperrig
