#include "hyperrig/random_projection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "hyperrig/errors.hpp"
#include "hyperrig/forms.hpp"
#include "hyperrig/rigidity.hpp"

namespace hyperrig {

ThresholdSpec threshold_t(int n, int k, int d, double c)
{
    require(n >= 1 && k >= 2 && d >= 1, "threshold needs n >= 1, k >= 2, d >= 1");
    require(n >= d, "threshold needs n >= d");
    require(c > 1.0, "threshold needs c > 1");
    ThresholdSpec s{n, k, d, c, 0.0, true};
    s.t_star = k * std::pow(d, k - 1) * std::log(c * d * k * k * n) / std::pow(n, k - 1);
    s.feasible = s.t_star <= 1.0;
    return s;
}

namespace {

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

StructuredConfiguration structured_point(int n, int d, int k)
{
    require(n >= 1 && d >= 1 && k >= 2, "structured point needs n, d >= 1 and k >= 2");
    require(n % d == 0, "structured point needs d to divide n (n=" + std::to_string(n) + ", d=" +
                            std::to_string(d) + ")");
    StructuredConfiguration s;
    s.graph = complete_partite(std::vector<int>(k, n));
    s.block = n / d;
    RationalField q;
    std::vector<mpq_class> coords(static_cast<std::size_t>(k) * n * d, mpq_class(0));
    for (int v = 0; v < k * n; ++v) coords[static_cast<std::size_t>(v) * d + (v % n) / s.block] = 1;
    s.point = point_from_values(q, d, coords);
    return s;
}

SpectrumReport verify_structured_spectrum(int n, int d, int k)
{
    require(k >= 3, "structured spectrum check needs k >= 3");
    StructuredConfiguration s = structured_point(n, d, k);
    const int m = s.block;
    RationalField q;
    ExactMatrix<RationalField> J = jacobian(s.graph, sym_tensor(d, k), q, s.point);
    SpectrumReport rep;
    rep.expected_rank = d * (k * n - (k - 1));
    rep.rank = rank(J);
    rep.rank_ok = rep.rank == rep.expected_rank;

    const int rows = J.rows();
    const int cols = J.cols();
    std::vector<std::vector<int>> ones(rows);
    rep.entries_binary = true;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const mpq_class& x = J(r, c);
            if (x == 1)
                ones[r].push_back(c);
            else if (x != 0)
                rep.entries_binary = false;
        }
    for (const auto& o : ones) rep.max_row_ones = std::max(rep.max_row_ones, static_cast<int>(o.size()));
    rep.row_norm_ok = rep.entries_binary && rep.max_row_ones <= k;

    // Gram matrix J^T J, exact in integers since entries are 0/1.
    std::vector<std::vector<long long>> G(cols, std::vector<long long>(cols, 0));
    for (const auto& o : ones)
        for (int a : o)
            for (int b : o) ++G[a][b];

    auto block_of = [&](int v) { return (v % n) / m; };
    // Column (v, c) belongs to I_c when v lies in block c, otherwise to I'_c.
    auto group = [&](int col) {
        const int v = col / d;
        const int c = col % d;
        return 2 * c + (block_of(v) == c ? 0 : 1);
    };
    rep.block_diagonal = true;
    for (int a = 0; a < cols; ++a)
        for (int b = 0; b < cols; ++b)
            if (group(a) != group(b) && G[a][b] != 0) rep.block_diagonal = false;

    const long long top = ipow(m, k - 1);
    rep.lambda_bound = top;
    rep.r_blocks_ok = true;
    rep.q_spectrum_ok = true;
    for (int j = 0; j < d; ++j) {
        std::vector<int> inside;
        std::vector<int> outside;
        for (int v = 0; v < k * n; ++v) (block_of(v) == j ? inside : outside).push_back(v * d + j);
        for (int a : outside)
            for (int b : outside)
                if (G[a][b] != (a == b ? top : 0)) rep.r_blocks_ok = false;

        // Q_j on I_j, ordered by part then position; inside[i*m + s] is part i, slot s.
        const int size = static_cast<int>(inside.size());
        auto apply = [&](const std::vector<long long>& x) {
            std::vector<long long> y(size, 0);
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b) y[a] += G[inside[a]][inside[b]] * x[b];
            return y;
        };
        std::vector<std::pair<std::vector<long long>, long long>> family;
        family.emplace_back(std::vector<long long>(size, 1), k * top);
        for (int i = 0; i < k; ++i)
            for (int t = 1; t < m; ++t) {
                std::vector<long long> x(size, 0);
                x[i * m] = 1;
                x[i * m + t] = -1;
                family.emplace_back(x, top);
            }
        for (int i = 0; i + 1 < k; ++i) {
            std::vector<long long> x(size, 0);
            for (int t = 0; t < m; ++t) {
                x[i * m + t] = 1;
                x[(i + 1) * m + t] = -1;
            }
            family.emplace_back(x, 0);
        }
        ExactMatrix<RationalField> basis(q, static_cast<int>(family.size()), size);
        for (std::size_t f = 0; f < family.size(); ++f) {
            const auto& [x, lambda] = family[f];
            std::vector<long long> y = apply(x);
            for (int a = 0; a < size; ++a) {
                if (y[a] != lambda * x[a]) rep.q_spectrum_ok = false;
                basis(static_cast<int>(f), a) = mpq_class(static_cast<long>(x[a]));
            }
        }
        if (rank(basis) != size) rep.q_spectrum_ok = false;
    }

    // Floating-point cross-check of the smallest nonzero eigenvalue.
    Eigen::MatrixXd gram(cols, cols);
    for (int a = 0; a < cols; ++a)
        for (int b = 0; b < cols; ++b) gram(a, b) = static_cast<double>(G[a][b]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    double smallest = 0.0;
    bool found = false;
    for (int i = 0; i < cols; ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) < 1e-8 * std::max(1.0, static_cast<double>(k * top)))
            ++rep.numeric_zero_eigenvalues;
        else if (!found) {
            smallest = ev;
            found = true;
        }
    }
    rep.lambda_min_numeric = smallest;
    rep.lambda_min_ok = rep.q_spectrum_ok && rep.r_blocks_ok && rep.block_diagonal && found &&
                        smallest >= static_cast<double>(top) * (1.0 - 1e-9) &&
                        rep.numeric_zero_eigenvalues == d * (k - 1);
    return rep;
}

SweepRow monte_carlo_rigidity(int n, int k, int d, double t, int trials, std::uint64_t seed, int threads)
{
    require(t >= 0.0 && t <= 1.0, "retention probability must lie in [0,1]");
    require(trials >= 1, "need at least one trial");
    require(n >= 1 && k >= 2 && d >= 1, "monte carlo needs n, d >= 1 and k >= 2");
    const Hypergraph base = complete_partite(std::vector<int>(k, n));
    const MeasurementModel model = sym_tensor(d, k);
    const int target = d * (k * n - (k - 1));
    std::vector<char> rigid(trials, 0);
    auto run = [&](int first, int step) {
        for (int i = first; i < trials; i += step) {
            const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
            Hypergraph g = erdos_renyi_subgraph(base, t, s);
            if (g.num_edges() < target) continue;
            ProbeOptions opt;
            opt.probes = 1;
            opt.seed = derive_seed(s, 1);
            rigid[i] = generic_rank(g, model, opt, target).rank == target;
        }
    };
    threads = std::max(1, std::min(threads, trials));
    if (threads == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(run, w, threads);
        for (auto& th : pool) th.join();
    }
    SweepRow row;
    row.t = t;
    row.trials = trials;
    row.seed = seed;
    row.rigid_count = static_cast<int>(std::count(rigid.begin(), rigid.end(), 1));
    row.fraction = static_cast<double>(row.rigid_count) / trials;
    return row;
}

SweepResult sweep(const ThresholdSpec& spec, const std::vector<double>& t_grid, int trials, std::uint64_t seed,
                  int threads)
{
    SweepResult out;
    out.spec = spec;
    out.seed = seed;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        require(t >= 0.0 && t <= 1.0, "grid values must lie in [0,1]");
        SweepRow row = monte_carlo_rigidity(spec.n, spec.k, spec.d, t, trials, derive_seed(seed, i, 7), threads);
        if (std::abs(t - spec.t_star) <= 1e-12)
            row.threshold_flag = "at";
        else
            row.threshold_flag = t < spec.t_star ? "below" : "above";
        out.rows.push_back(row);
    }
    return out;
}

std::vector<double> default_grid(const ThresholdSpec& spec)
{
    std::vector<double> g;
    for (double f : {0.0, 0.5, 1.0, 2.0}) g.push_back(std::min(1.0, f * spec.t_star));
    return g;
}

int isotonic_violations(const SweepResult& r, double tolerance)
{
    int v = 0;
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        if (r.rows[i].t >= r.rows[i - 1].t && r.rows[i].fraction + tolerance < r.rows[i - 1].fraction) ++v;
    return v;
}

std::string to_csv(const SweepResult& r)
{
    std::ostringstream os;
    os.precision(17);
    os << "t,trials,rigid_count,fraction,threshold_flag\n";
    for (const auto& row : r.rows)
        os << row.t << ',' << row.trials << ',' << row.rigid_count << ',' << row.fraction << ','
           << row.threshold_flag << '\n';
    return os.str();
}

nlohmann::json to_json(const SweepResult& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"t", row.t},
                        {"trials", row.trials},
                        {"rigid_count", row.rigid_count},
                        {"fraction", row.fraction},
                        {"threshold_flag", row.threshold_flag},
                        {"seed", row.seed}});
    return {{"n", r.spec.n},          {"k", r.spec.k},       {"d", r.spec.d},
            {"c", r.spec.c},          {"t_star", r.spec.t_star}, {"t_star_feasible", r.spec.feasible},
            {"seed", r.seed},         {"rows", rows}};
}

}  // namespace hyperrig
