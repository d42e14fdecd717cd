#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperrig/errors.hpp"
#include "hyperrig/field.hpp"
#include "hyperrig/matrix.hpp"

namespace hyperrig {

// Row reduction to reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rref_in_place(ExactMatrix<F>& m)
{
    using E = typename F::Element;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        E inv = inverse(m(r, c));
        for (int j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            E f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Rank by forward elimination. Stops early once `limit` is reached (limit < 0: no limit).
template <class F>
int rank(ExactMatrix<F> m, int limit = -1)
{
    using E = typename F::Element;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        if (limit >= 0 && r >= limit) break;
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        E inv = inverse(m(r, c));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            E f = m(i, c) * inv;
            for (int j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Fraction-free Bareiss elimination after clearing denominators row by row.
int rank(const ExactMatrix<RationalField>& m, int limit = -1);

template <class F>
std::vector<std::vector<typename F::Element>> right_kernel_basis(const ExactMatrix<F>& m)
{
    using E = typename F::Element;
    ExactMatrix<F> r = m;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<E>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> x(m.cols(), m.field().zero());
        x[f] = m.field().one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!is_zero(r(static_cast<int>(i), f))) x[pivots[i]] = -r(static_cast<int>(i), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class F>
std::vector<std::vector<typename F::Element>> left_kernel_basis(const ExactMatrix<F>& m)
{
    return right_kernel_basis(m.transpose());
}

template <class F>
ExactMatrix<F> matrix_from_rows(const F& field, const std::vector<std::vector<typename F::Element>>& rows,
                                int cols)
{
    ExactMatrix<F> m(field, static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    return m;
}

// A point configuration p: V -> F^d, vertex-major storage.
template <class F>
struct GenericPoint {
    using Element = typename F::Element;
    int n = 0;
    int d = 0;
    std::vector<Element> coords;
    std::uint64_t seed = 0;
    FieldConfig field;

    const Element& at(int v, int c) const { return coords[static_cast<std::size_t>(v) * d + c]; }
    std::vector<Element> vertex(int v) const
    {
        auto b = coords.begin() + static_cast<std::ptrdiff_t>(v) * d;
        return std::vector<Element>(b, b + d);
    }
};

// Uniform nonzero coordinates, deterministic in (field, n, d, seed).
template <class F>
GenericPoint<F> sample_generic_point(const F& field, int n, int d, std::uint64_t seed)
{
    require(d >= 1, "point dimension must be positive");
    require(n >= 0, "vertex count must be nonnegative");
    GenericPoint<F> p;
    p.n = n;
    p.d = d;
    p.seed = seed;
    p.field = field.config();
    std::mt19937_64 rng(seed);
    p.coords.reserve(static_cast<std::size_t>(n) * d);
    for (int i = 0; i < n * d; ++i) p.coords.push_back(field.sample(rng));
    return p;
}

// Explicit configuration from vertex-major coordinates.
template <class F>
GenericPoint<F> point_from_values(const F& field, int d, const std::vector<typename F::Element>& coords)
{
    require(d >= 1 && coords.size() % d == 0, "coordinate count is not a multiple of d");
    GenericPoint<F> p;
    p.n = static_cast<int>(coords.size()) / d;
    p.d = d;
    p.field = field.config();
    p.coords = coords;
    return p;
}

struct ProbeOptions {
    int probes = 3;
    std::vector<FieldConfig> fields{FieldConfig::prime()};
    std::uint64_t seed = 0;
};

struct ProbeRecord {
    FieldConfig field;
    std::uint64_t seed = 0;
    int rank = 0;
    // Schwartz-Zippel bound on the chance that this probe under-reports a rank-sized minor.
    double failure_bound = 0.0;
};

struct RankCertificate {
    int rank = 0;
    int rows = 0;
    int cols = 0;
    // True when a probe reached a known ceiling, so further probes cannot raise the rank.
    bool saturated = false;
    std::vector<ProbeRecord> probes;
};

// Calls fn(field, seed) for every (field, probe) pair until it returns true.
template <class Fn>
void for_each_probe(const ProbeOptions& opt, Fn&& fn)
{
    require(opt.probes >= 1, "at least one probe is required");
    for (std::size_t fi = 0; fi < opt.fields.size(); ++fi) {
        const FieldConfig& cfg = opt.fields[fi];
        validate(cfg);
        for (int i = 0; i < opt.probes; ++i) {
            std::uint64_t s = derive_seed(opt.seed, fi, static_cast<std::uint64_t>(i));
            bool stop = false;
            if (cfg.kind == FieldKind::prime)
                stop = fn(PrimeField(cfg.modulus), s);
            else
                stop = fn(RationalField(), s);
            if (stop) return;
        }
    }
}

// Maximum rank over random evaluations. `build(field, seed)` returns the matrix at the
// point drawn from `seed`. A specialization never exceeds the generic rank, so the maximum
// is a certified lower bound. `entry_degree` is the total degree of the matrix entries in
// the point coordinates; `ceiling` is an a-priori upper bound on the generic rank (or -1).
template <class Builder>
RankCertificate probe_rank_with_confidence(Builder&& build, const ProbeOptions& opt, int entry_degree = 1,
                                           int ceiling = -1)
{
    require(!opt.fields.empty(), "at least one field is required");
    RankCertificate cert;
    for_each_probe(opt, [&](const auto& field, std::uint64_t s) {
        auto m = build(field, s);
        cert.rows = m.rows();
        cert.cols = m.cols();
        int cap = std::min(m.rows(), m.cols());
        if (ceiling >= 0) cap = std::min(cap, ceiling);
        int r = rank(m, cap);
        ProbeRecord rec;
        rec.field = field.config();
        rec.seed = s;
        rec.rank = r;
        rec.failure_bound = std::min(1.0, static_cast<double>(r) * std::max(entry_degree, 0) /
                                              field.sample_space());
        cert.probes.push_back(rec);
        cert.rank = std::max(cert.rank, r);
        if (r >= cap) cert.saturated = true;
        return cert.saturated;
    });
    return cert;
}

}  // namespace hyperrig
