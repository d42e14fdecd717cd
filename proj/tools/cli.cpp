#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperrig/errors.hpp"
#include "hyperrig/global.hpp"
#include "hyperrig/packing.hpp"
#include "hyperrig/random_projection.hpp"
#include "hyperrig/rigidity.hpp"
#include "hyperrig/sparsity.hpp"

namespace hyperrig::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string graph_path;
    std::string words;
    std::string model;
    int probes = 3;
    std::string field = "prime";
    std::uint64_t modulus = kDefaultPrime;
    std::uint64_t seed = 0;
    std::string format = "json";
    int threads = 1;
    int estimate_nmax = 0;

    std::string partite = "auto";

    int a = -1;
    int b = -1;

    std::string family_path;
    int n = 0;
    int k = 0;
    int d = 0;
    double c = 2.0;
    int trials = 100;
    std::vector<double> t;
    int corollary_a = 0;

    bool hessian = false;

    std::vector<int> ah;
    std::vector<int> veronese;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

Hypergraph load_graph(const Options& o)
{
    require(!o.graph_path.empty() || !o.words.empty(), "a hypergraph is required (--graph PATH or --edges WORDS)");
    if (!o.words.empty()) return hypergraph_from_words(o.words);
    return hypergraph_from_json(read_json_file(o.graph_path));
}

MeasurementModel load_model(const Options& o, const ProbeOptions& opt)
{
    require(!o.model.empty(), "a model descriptor is required (--model)");
    MeasurementModel m = parse_model(o.model);
    if (!m.stabilizer && o.estimate_nmax > 0) {
        StabilizerEstimate est = estimate_stabilizer_dim(m, o.estimate_nmax, opt.probes, opt.seed);
        require(est.info.has_value(), "stabilizer estimate did not stabilize up to n=" +
                                          std::to_string(o.estimate_nmax));
        m = with_stabilizer(m, *est.info);
    }
    return m;
}

ProbeOptions probe_options(const Options& o)
{
    ProbeOptions opt;
    opt.probes = o.probes;
    opt.seed = o.seed;
    require(o.field == "prime" || o.field == "rational", "unknown field " + o.field + " (use prime or rational)");
    opt.fields = {o.field == "prime" ? FieldConfig::prime(o.modulus) : FieldConfig::rational()};
    return opt;
}

json metadata(const Options& o, const ProbeOptions& opt)
{
    json m;
    m["tool_version"] = kToolVersion;
    m["seed"] = o.seed;
    m["field"] = opt.fields.front().name();
    if (opt.fields.front().kind == FieldKind::prime)
        m["modulus"] = opt.fields.front().modulus;
    else
        m["modulus"] = nullptr;
    m["probes"] = opt.probes;
    return m;
}

std::vector<std::string> edge_labels(const Hypergraph& g, const std::vector<HyperEdge>& es)
{
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(g.edge_label(e));
    return out;
}

json probe_json(const RankCertificate& c)
{
    json arr = json::array();
    for (const auto& p : c.probes)
        arr.push_back({{"field", p.field.name()}, {"seed", p.seed}, {"rank", p.rank},
                       {"failure_bound", p.failure_bound}});
    return arr;
}

json cmd_analyze(const Options& o, const ProbeOptions& opt)
{
    Hypergraph g = load_graph(o);
    MeasurementModel m = load_model(o, opt);
    PartiteMode mode = PartiteMode::automatic;
    if (o.partite == "standard")
        mode = PartiteMode::standard;
    else if (o.partite == "partite")
        mode = PartiteMode::partite;
    else
        require(o.partite == "auto", "unknown --partite mode " + o.partite);
    RigidityReport r = is_locally_rigid(g, m, opt, mode);
    json j;
    j["model"] = m.name;
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["rank"] = r.rank;
    j["dof"] = r.dof;
    j["expected_rank"] = r.expected_rank;
    j["d_gamma"] = r.d_gamma;
    j["partite"] = r.partite;
    j["verdict"] = to_string(r.verdict);
    j["stabilizer_heuristic"] = m.stabilizer->heuristic;
    j["saturated"] = r.certificate.saturated;
    j["probe_records"] = probe_json(r.certificate);
    return j;
}

json cmd_matroid(const Options& o, const ProbeOptions& opt)
{
    Hypergraph g = load_graph(o);
    MeasurementModel m = load_model(o, opt);
    check_arity(g, m);
    json j;
    j["model"] = m.name;
    j["edges"] = g.num_edges();
    if (g.num_edges() == 0) {
        j["rank"] = 0;
        j["independent"] = true;
        return j;
    }
    RigidityMatroid mat(g.num_vertices(), m, opt, g.edges());
    const int r = mat.rank(g.edges());
    j["rank"] = r;
    j["independent"] = r == g.num_edges();
    if (r < g.num_edges()) j["circuit"] = edge_labels(g, mat.find_circuit(g.edges()));
    return j;
}

json cmd_sparsity(const Options& o, const ProbeOptions& opt)
{
    Hypergraph g = load_graph(o);
    SparsityParams p{o.a, o.b, g.k()};
    if (p.a < 0 || p.b < 0) {
        require(!o.model.empty(), "sparsity needs --a and --b, or --model to use (d, d_Gamma)");
        MeasurementModel m = load_model(o, opt);
        require(m.stabilizer.has_value(), "model " + m.name + " lacks stabilizer metadata");
        p = SparsityParams{m.d, m.stabilizer->d_gamma, g.k()};
    }
    json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["count_bound"] = p.a * g.num_vertices() - p.b;
    j["matroidal"] = p.matroidal();
    j["rank"] = sparsity_rank(g, p);
    j["sparse"] = is_sparse(g, p);
    j["tight"] = is_tight(g, p);
    return j;
}

json cmd_packing(const Options& o, const ProbeOptions& opt)
{
    MeasurementModel m = load_model(o, opt);
    json j;
    j["model"] = m.name;
    if (o.family_path.empty()) {
        require(o.n > 0 && o.corollary_a > 0, "packing needs --family PATH, or --n and --size for the corollary check");
        CorollaryCheck c = corollary_check(o.n, m.k, m, o.corollary_a, opt);
        j["applies"] = c.applies;
        j["small_complete_rigid"] = c.small_complete_rigid;
        j["size_ok"] = c.size_ok;
        j["packing_ok"] = c.packing_ok;
        j["family_size"] = c.family_size;
        j["detail"] = c.detail;
        return j;
    }
    Hypergraph g = load_graph(o);
    json fam = read_json_file(o.family_path);
    require(fam.is_array(), "family file must be a JSON list of vertex-label lists");
    std::vector<std::vector<VertexId>> family;
    for (const auto& x : fam) {
        require(x.is_array(), "family file must be a JSON list of vertex-label lists");
        family.emplace_back();
        for (const auto& v : x) family.back().push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    PackingCertificate c = verify_packing(g, m, family, opt);
    j["accepted"] = c.accepted;
    if (c.failing_condition) {
        json f;
        f["condition"] = to_string(*c.failing_condition);
        f["set"] = *c.failing_set;
        if (c.witness)
            f["witness"] = {{"i", c.witness->i},
                            {"j", c.witness->j},
                            {"edge", g.edge_label(c.witness->edge)},
                            {"vertex", g.vertices()[c.witness->vertex]}};
        j["failing_condition"] = f;
    } else {
        j["failing_condition"] = nullptr;
    }
    json tr = json::array();
    for (const auto& r : c.transcript)
        tr.push_back({{"condition", to_string(r.condition)},
                      {"set", r.set},
                      {"passed", r.passed},
                      {"rank", r.rank},
                      {"expected_rank", r.expected_rank}});
    j["transcript"] = tr;
    return j;
}

json cmd_global(const Options& o, const ProbeOptions& opt)
{
    Hypergraph g = load_graph(o);
    MeasurementModel m = load_model(o, opt);
    json j;
    j["model"] = m.name;
    StressCertificate c;
    if (is_symmetric_tensor_model(m))
        c = certify_global_tensor(g, m, opt);
    else if (is_determinant_model(m))
        c = certify_global_determinant(g, m, opt);
    else
        throw InputError("no global certificate applies to model " + m.name +
                         " (supported: sym_tensor, skew_tensor with r=1)");
    j["certificate"] = to_json(c);
    j["verdict"] = to_string(c.verdict);
    if (m.stabilizer && g.num_vertices() >= m.stabilizer->n_gamma + 1)
        j["connectivity_necessary"] = connectivity_necessary(g, m);
    if (o.hessian) {
        j["experimental_stress_hessian_ranks"] = experimental_stress_hessian_ranks(g, m, opt);
        j["experimental_note"] = "non-certifying";
    }
    return j;
}

json random_sweep(const Options& o, SweepResult& out)
{
    require(o.n > 0 && o.k > 0 && o.d > 0, "random needs --n, --k and --d");
    ThresholdSpec spec = threshold_t(o.n, o.k, o.d, o.c);
    std::vector<double> grid = o.t.empty() ? default_grid(spec) : o.t;
    out = sweep(spec, grid, o.trials, o.seed, o.threads);
    return to_json(out);
}

json cmd_oracle(const Options& o)
{
    json j;
    require(!o.ah.empty() || !o.veronese.empty(), "oracle needs --ah K N D or --veronese K N D");
    if (!o.ah.empty()) {
        j["query"] = "ah";
        j["k"] = o.ah[0];
        j["n"] = o.ah[1];
        j["d"] = o.ah[2];
        j["expected_rigid"] = ah_oracle(o.ah[0], o.ah[1], o.ah[2]);
    }
    if (!o.veronese.empty()) {
        GlobalExpectation g = veronese_global_oracle(o.veronese[0], o.veronese[1], o.veronese[2]);
        j["veronese"] = {{"k", o.veronese[0]}, {"n", o.veronese[1]}, {"d", o.veronese[2]}};
        if (g == GlobalExpectation::out_of_scope)
            j["expected_globally_rigid"] = "out_of_scope";
        else
            j["expected_globally_rigid"] = g == GlobalExpectation::globally_rigid;
    }
    return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Rigidity analysis for hypergraphs under polynomial measurement models", "hyperrig"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--graph", o.graph_path, "hypergraph JSON file");
    app.add_option("--edges", o.words, "hypergraph as words, e.g. \"aab abc\"");
    app.add_option("--model", o.model, "model descriptor, e.g. sym_tensor:d=1,k=3");
    app.add_option("--probes", o.probes, "random probes per field")->check(CLI::PositiveNumber);
    app.add_option("--field", o.field, "prime or rational");
    app.add_option("--modulus", o.modulus, "prime field modulus");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--estimate-stabilizer", o.estimate_nmax,
                   "estimate missing stabilizer data from complete hypergraphs up to this size");

    auto* analyze = app.add_subcommand("analyze", "rank, degrees of freedom and local rigidity verdict");
    analyze->add_option("--partite", o.partite, "auto, standard or partite");
    auto* matroid = app.add_subcommand("matroid", "rank, independence and a circuit in the rigidity matroid");
    auto* sparsity = app.add_subcommand("sparsity", "(a,b)-sparsity counts and tightness");
    sparsity->add_option("--a", o.a, "sparsity a");
    sparsity->add_option("--b", o.b, "sparsity b");
    auto* packing = app.add_subcommand("packing", "verify a packing certificate or the corollary hypotheses");
    packing->add_option("--family", o.family_path, "JSON list of vertex-label lists");
    packing->add_option("--n", o.n, "vertex count for the corollary check");
    packing->add_option("--size", o.corollary_a, "size a of the complete pieces for the corollary check");
    auto* global = app.add_subcommand("global", "stress-based global rigidity certificate");
    global->add_flag("--experimental-hessian", o.hessian, "also report stress Hessian ranks (non-certifying)");
    auto* random = app.add_subcommand("random", "Monte-Carlo birigidity sweep for random partite hypergraphs");
    random->add_option("--n", o.n, "part size");
    random->add_option("--k", o.k, "uniformity");
    random->add_option("--d", o.d, "number of product copies");
    random->add_option("--c", o.c, "confidence parameter c > 1");
    random->add_option("--trials", o.trials, "trials per grid point")->check(CLI::PositiveNumber);
    random->add_option("--t", o.t, "retention probabilities (default: 0, t*/2, t*, 2t*)");
    auto* oracle = app.add_subcommand("oracle", "closed-form expectations for complete hypergraphs");
    oracle->add_option("--ah", o.ah, "K N D")->expected(3);
    oracle->add_option("--veronese", o.veronese, "K N D")->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        ProbeOptions opt = probe_options(o);
        json report;
        if (*analyze)
            report = cmd_analyze(o, opt);
        else if (*matroid)
            report = cmd_matroid(o, opt);
        else if (*sparsity)
            report = cmd_sparsity(o, opt);
        else if (*packing)
            report = cmd_packing(o, opt);
        else if (*global)
            report = cmd_global(o, opt);
        else if (*random) {
            SweepResult res;
            report = random_sweep(o, res);
            if (o.format == "csv") {
                out << to_csv(res);
                return 0;
            }
        } else if (*oracle)
            report = cmd_oracle(o);
        require(o.format == "json" || *random, "csv output is only available for random sweeps");
        report["meta"] = metadata(o, opt);
        out << report.dump(2) << "\n";
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hyperrig::cli
