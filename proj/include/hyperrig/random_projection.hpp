#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperrig/exactla.hpp"
#include "hyperrig/hypergraph.hpp"

namespace hyperrig {

struct ThresholdSpec {
    int n = 0;
    int k = 0;
    int d = 0;
    double c = 2.0;
    double t_star = 0.0;
    // False when t_star > 1, i.e. the probability hypothesis t <= 1 cannot be met.
    bool feasible = true;
};

// t* = k d^(k-1) ln(c d k^2 n) / n^(k-1).
ThresholdSpec threshold_t(int n, int k, int d, double c);

// K_{n,...,n}^k with p(v) = e_j on the j-th block of n/d vertices of every part.
struct StructuredConfiguration {
    Hypergraph graph;
    GenericPoint<RationalField> point;
    int block = 0;  // n/d
};

StructuredConfiguration structured_point(int n, int d, int k);

struct SpectrumReport {
    int rank = 0;
    int expected_rank = 0;
    bool rank_ok = false;
    bool entries_binary = false;
    bool block_diagonal = false;
    bool r_blocks_ok = false;
    bool q_spectrum_ok = false;
    // Smallest nonzero eigenvalue bound (n/d)^(k-1), from the exact block spectra.
    long long lambda_bound = 0;
    double lambda_min_numeric = 0.0;
    int numeric_zero_eigenvalues = 0;
    bool lambda_min_ok = false;
    int max_row_ones = 0;
    bool row_norm_ok = false;

    bool all_ok() const
    {
        return rank_ok && entries_binary && block_diagonal && r_blocks_ok && q_spectrum_ok && lambda_min_ok &&
               row_norm_ok;
    }
};

SpectrumReport verify_structured_spectrum(int n, int d, int k);

struct SweepRow {
    double t = 0.0;
    int trials = 0;
    int rigid_count = 0;
    double fraction = 0.0;
    std::string threshold_flag;  // "below", "at" or "above" relative to t*
    std::uint64_t seed = 0;
};

struct SweepResult {
    ThresholdSpec spec;
    std::vector<SweepRow> rows;
    std::uint64_t seed = 0;
};

// Fraction of G ~ G_{n,t} (sub-hypergraphs of K_{n,...,n}^k) that are locally birigid for
// d copies of the product form: rank d(kn - (k-1)) at a random prime-field point.
SweepRow monte_carlo_rigidity(int n, int k, int d, double t, int trials, std::uint64_t seed, int threads = 1);

SweepResult sweep(const ThresholdSpec& spec, const std::vector<double>& t_grid, int trials, std::uint64_t seed,
                  int threads = 1);

// {0, t*/2, t*, 2t*} clipped to [0, 1].
std::vector<double> default_grid(const ThresholdSpec& spec);

// Adjacent grid points whose fraction drops by more than `tolerance`.
int isotonic_violations(const SweepResult& r, double tolerance);

std::string to_csv(const SweepResult& r);
nlohmann::json to_json(const SweepResult& r);

}  // namespace hyperrig
