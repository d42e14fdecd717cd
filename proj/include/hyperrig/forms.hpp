#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperrig/errors.hpp"

namespace hyperrig {

enum class FormKind {
    euclidean,
    pseudo_euclidean,
    lp,
    inner_product,
    volume,       // affine determinant on d+1 points in F^d
    product,      // h_prod(x1..xk) = x1*...*xk on F^1
    determinant,  // det on F^k
    permanent,    // perm on F^k
    copies,       // sum of t copies of a base form on consecutive coordinate blocks
};

enum class Symmetry { symmetric, antisymmetric };

struct StabilizerInfo {
    int d_gamma = 0;
    int n_gamma = 0;
    std::optional<int> d_gamma_partite;
    std::optional<int> n_gamma_partite;
    std::string description;
    bool heuristic = false;
};

struct MeasurementModel {
    FormKind kind = FormKind::euclidean;
    int k = 2;
    int d = 1;
    Symmetry symmetry = Symmetry::symmetric;
    int exponent = 2;   // lp only
    int signature = 0;  // pseudo_euclidean: number of positive coordinates
    std::shared_ptr<const MeasurementModel> base;
    int copies = 1;
    std::optional<StabilizerInfo> stabilizer;
    std::string name;

    bool multiaffine() const;
    bool multilinear() const;
    // Total degree of g as a polynomial in all k*d coordinates.
    int degree() const;
    bool antisymmetric() const { return symmetry == Symmetry::antisymmetric; }
    // The (h, t) decomposition record; a model that is not a sum of copies is (itself, 1).
    const MeasurementModel& copy_base() const { return kind == FormKind::copies ? *base : *this; }
    int copy_count() const { return kind == FormKind::copies ? copies : 1; }
};

MeasurementModel euclidean(int d);
MeasurementModel pseudo_euclidean(int d, int d_positive);
MeasurementModel lp_model(int d, int p);
MeasurementModel inner_product(int d);
MeasurementModel volume(int d);
MeasurementModel product_form(int k);
MeasurementModel determinant_form(int k);
MeasurementModel permanent_form(int k);
MeasurementModel sum_of_copies(const MeasurementModel& h, int t);
MeasurementModel sym_tensor(int d, int k);
MeasurementModel skew_tensor(int r, int k);
MeasurementModel chow(int r, int k);
MeasurementModel with_stabilizer(MeasurementModel m, const StabilizerInfo& info);

struct ModelParams {
    std::optional<int> d, k, p, r, d1;
};
MeasurementModel builtin_model(const std::string& name, const ModelParams& params);
// Parses descriptors such as "euclidean:d=2", "lp:d=2,p=4", "sym_tensor:d=3,k=3".
MeasurementModel parse_model(const std::string& descriptor);

// Numerical fallback for d_Gamma: kernel dimension of the Jacobian of the complete
// hypergraph on n = k..n_max vertices, reported once it repeats for consecutive n.
struct StabilizerEstimate {
    std::optional<StabilizerInfo> info;  // empty when inconclusive
    std::vector<std::pair<int, int>> kernel_dims;  // (n, dim ker)
};
StabilizerEstimate estimate_stabilizer_dim(const MeasurementModel& model, int n_max, int trials,
                                           std::uint64_t seed = 0);

namespace detail {

// Laplace expansion along columns; `alternating` selects det (true) or perm (false).
template <class F>
typename F::Element laplace(const F& field, const std::vector<std::vector<typename F::Element>>& cols,
                            std::vector<int>& rows, std::size_t col, bool alternating)
{
    using E = typename F::Element;
    if (col == cols.size()) return field.one();
    E acc = field.zero();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const E& a = cols[col][rows[i]];
        if (is_zero(a)) continue;
        int r = rows[i];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        E minor = laplace(field, cols, rows, col + 1, alternating);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), r);
        E term = a * minor;
        if (alternating && (i % 2 == 1))
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

template <class F>
typename F::Element det_or_perm(const F& field, const std::vector<std::vector<typename F::Element>>& cols,
                                bool alternating)
{
    std::vector<int> rows;
    for (std::size_t i = 0; i < cols.size(); ++i) rows.push_back(static_cast<int>(i));
    return laplace(field, cols, rows, 0, alternating);
}

// Cofactor vector: entry i is d/dy_i of det/perm[y, cols...], where cols has m-1 columns of length m.
template <class F>
std::vector<typename F::Element> cofactors(const F& field, const std::vector<std::vector<typename F::Element>>& cols,
                                           int m, bool alternating)
{
    using E = typename F::Element;
    std::vector<E> out;
    for (int i = 0; i < m; ++i) {
        std::vector<int> rows;
        for (int r = 0; r < m; ++r)
            if (r != i) rows.push_back(r);
        E v = laplace(field, cols, rows, 0, alternating);
        if (alternating && (i % 2 == 1)) v = -v;
        out.push_back(v);
    }
    return out;
}

template <class F>
std::vector<std::vector<typename F::Element>> block(const std::vector<std::vector<typename F::Element>>& pts,
                                                    int offset, int width)
{
    std::vector<std::vector<typename F::Element>> out;
    for (const auto& p : pts) out.emplace_back(p.begin() + offset, p.begin() + offset + width);
    return out;
}

}  // namespace detail

// g(p1,...,pk). Anti-symmetric models expect arguments in vertex order.
template <class F>
typename F::Element evaluate(const MeasurementModel& m, const F& field,
                             const std::vector<std::vector<typename F::Element>>& pts)
{
    using E = typename F::Element;
    require(static_cast<int>(pts.size()) == m.k, "evaluate: expected " + std::to_string(m.k) + " points");
    for (const auto& p : pts) require(static_cast<int>(p.size()) == m.d, "evaluate: point dimension mismatch");
    E acc = field.zero();
    switch (m.kind) {
    case FormKind::euclidean:
    case FormKind::pseudo_euclidean:
    case FormKind::lp:
        for (int c = 0; c < m.d; ++c) {
            E diff = pts[0][c] - pts[1][c];
            E term = field.one();
            int e = m.kind == FormKind::lp ? m.exponent : 2;
            for (int i = 0; i < e; ++i) term *= diff;
            if (m.kind == FormKind::pseudo_euclidean && c >= m.signature)
                acc -= term;
            else
                acc += term;
        }
        return acc;
    case FormKind::inner_product:
        for (int c = 0; c < m.d; ++c) acc += pts[0][c] * pts[1][c];
        return acc;
    case FormKind::volume: {
        std::vector<std::vector<E>> cols = pts;
        for (auto& c : cols) c.push_back(field.one());
        return detail::det_or_perm(field, cols, true);
    }
    case FormKind::product: {
        E p = field.one();
        for (const auto& x : pts) p *= x[0];
        return p;
    }
    case FormKind::determinant:
    case FormKind::permanent:
        return detail::det_or_perm(field, pts, m.kind == FormKind::determinant);
    case FormKind::copies: {
        const int s = m.base->d;
        for (int i = 0; i < m.copies; ++i) acc += evaluate(*m.base, field, detail::block<F>(pts, i * s, s));
        return acc;
    }
    }
    return acc;
}

// Gradient in the first slot: g(y, x1..x_{k-1}) = <y, grad(x1..x_{k-1})> + const.
template <class F>
std::vector<typename F::Element> gradient(const MeasurementModel& m, const F& field,
                                          const std::vector<std::vector<typename F::Element>>& pts)
{
    using E = typename F::Element;
    if (!m.multiaffine())
        throw InputError("gradient is defined only for multiaffine models; " + m.name +
                         " uses the direct Jacobian formulas");
    require(static_cast<int>(pts.size()) == m.k - 1, "gradient: expected k-1 points");
    for (const auto& p : pts) require(static_cast<int>(p.size()) == m.d, "gradient: point dimension mismatch");
    switch (m.kind) {
    case FormKind::inner_product:
        return pts[0];
    case FormKind::product: {
        E p = field.one();
        for (const auto& x : pts) p *= x[0];
        return {p};
    }
    case FormKind::determinant:
    case FormKind::permanent:
        return detail::cofactors(field, pts, m.d, m.kind == FormKind::determinant);
    case FormKind::volume: {
        std::vector<std::vector<E>> cols = pts;
        for (auto& c : cols) c.push_back(field.one());
        std::vector<E> full = detail::cofactors(field, cols, m.d + 1, true);
        full.pop_back();
        return full;
    }
    case FormKind::copies: {
        const int s = m.base->d;
        std::vector<E> out;
        for (int i = 0; i < m.copies; ++i) {
            std::vector<E> g = gradient(*m.base, field, detail::block<F>(pts, i * s, s));
            out.insert(out.end(), g.begin(), g.end());
        }
        return out;
    }
    default:
        break;
    }
    throw std::logic_error("gradient: unhandled model");
}

}  // namespace hyperrig
