#include "hyperrig/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "hyperrig/errors.hpp"
#include "hyperrig/field.hpp"

namespace hyperrig {

HyperEdge::HyperEdge(std::vector<int> e) : entries(std::move(e)) { std::sort(entries.begin(), entries.end()); }

int HyperEdge::multiplicity(int v) const
{
    return static_cast<int>(std::count(entries.begin(), entries.end(), v));
}

bool HyperEdge::is_simple() const
{
    return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
}

std::vector<int> HyperEdge::support() const
{
    std::vector<int> s = entries;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<int> HyperEdge::remove_one(int v) const
{
    std::vector<int> r = entries;
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) throw std::invalid_argument("vertex not in edge");
    r.erase(it);
    return r;
}

int HyperEdge::position(int v) const
{
    auto it = std::find(entries.begin(), entries.end(), v);
    if (it == entries.end()) return -1;
    return static_cast<int>(it - entries.begin());
}

Hypergraph::Hypergraph(int k, std::vector<VertexId> vertices, std::vector<HyperEdge> edges,
                       std::optional<Partition> partition)
    : k_(k), vertices_(std::move(vertices)), edges_(std::move(edges)), partition_(std::move(partition))
{
    require(k_ >= 1, "uniformity must be positive");
    std::set<VertexId> seen(vertices_.begin(), vertices_.end());
    require(seen.size() == vertices_.size(), "duplicate vertex label");
    const int n = num_vertices();
    for (auto& e : edges_) {
        std::sort(e.entries.begin(), e.entries.end());
        require(e.size() == k_, "edge has " + std::to_string(e.size()) + " entries, expected k=" +
                                    std::to_string(k_));
        for (int v : e.entries) require(v >= 0 && v < n, "edge refers to unknown vertex");
    }
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "duplicate edge");
    if (partition_) {
        require(static_cast<int>(partition_->size()) == k_, "partition must have exactly k blocks");
        std::vector<int> block(n, -1);
        for (std::size_t b = 0; b < partition_->size(); ++b)
            for (int v : (*partition_)[b]) {
                require(v >= 0 && v < n, "partition refers to unknown vertex");
                require(block[v] < 0, "partition blocks overlap");
                block[v] = static_cast<int>(b);
            }
        for (int v = 0; v < n; ++v) require(block[v] >= 0, "partition does not cover every vertex");
        for (const auto& e : edges_) {
            std::vector<int> hits(k_, 0);
            for (int v : e.entries) ++hits[block[v]];
            for (int h : hits) require(h == 1, "edge does not meet every partition block exactly once");
        }
    }
}

int Hypergraph::index_of(const VertexId& v) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    require(it != vertices_.end(), "unknown vertex: " + v);
    return static_cast<int>(it - vertices_.begin());
}

std::optional<int> Hypergraph::find_edge(const HyperEdge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return std::nullopt;
}

HyperEdge Hypergraph::edge_from_labels(const std::vector<VertexId>& labels) const
{
    std::vector<int> idx;
    for (const auto& l : labels) idx.push_back(index_of(l));
    return HyperEdge(idx);
}

std::string Hypergraph::edge_label(const HyperEdge& e) const
{
    bool short_labels = std::all_of(e.entries.begin(), e.entries.end(),
                                    [&](int v) { return vertices_[v].size() == 1; });
    std::string s;
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (i && !short_labels) s += ",";
        s += vertices_[e.entries[i]];
    }
    return s;
}

bool Hypergraph::is_simple() const
{
    return std::all_of(edges_.begin(), edges_.end(), [](const HyperEdge& e) { return e.is_simple(); });
}

Hypergraph hypergraph_from_words(const std::string& words, const std::string& order)
{
    std::vector<std::string> toks;
    std::string cur;
    for (char c : words + " ") {
        if (c == ' ' || c == ',') {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string ord = order;
    if (ord.empty()) {
        std::set<char> cs;
        for (const auto& t : toks) cs.insert(t.begin(), t.end());
        ord.assign(cs.begin(), cs.end());
    }
    std::vector<VertexId> verts;
    for (char c : ord) verts.emplace_back(1, c);
    require(!toks.empty() || !verts.empty(), "empty word list needs an explicit vertex order");
    int k = toks.empty() ? 1 : static_cast<int>(toks.front().size());
    std::vector<HyperEdge> edges;
    for (const auto& t : toks) {
        std::vector<int> idx;
        for (char c : t) {
            auto p = ord.find(c);
            require(p != std::string::npos, std::string("unknown vertex: ") + c);
            idx.push_back(static_cast<int>(p));
        }
        edges.emplace_back(idx);
    }
    return Hypergraph(k, verts, edges);
}

std::vector<VertexId> default_labels(int n)
{
    std::vector<VertexId> l;
    for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
    return l;
}

namespace {

void multisets(int n, int k, int start, std::vector<int>& cur, std::vector<HyperEdge>& out, bool simple)
{
    if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        multisets(n, k, simple ? v + 1 : v, cur, out, simple);
        cur.pop_back();
    }
}

}  // namespace

Hypergraph complete_hypergraph(int n, int k, bool simple)
{
    require(n >= 1, "complete hypergraph needs n >= 1");
    require(k >= 1, "complete hypergraph needs k >= 1");
    std::vector<HyperEdge> edges;
    std::vector<int> cur;
    multisets(n, k, 0, cur, edges, simple);
    return Hypergraph(k, default_labels(n), edges);
}

Hypergraph complete_partite(const std::vector<int>& sizes)
{
    require(!sizes.empty(), "complete_partite needs at least one part");
    std::vector<VertexId> verts;
    Partition parts;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        require(sizes[i] >= 1, "part sizes must be positive");
        std::string prefix = i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i + 1) + "_";
        parts.emplace_back();
        for (int j = 1; j <= sizes[i]; ++j) {
            parts.back().push_back(static_cast<int>(verts.size()));
            verts.push_back(prefix + std::to_string(j));
        }
    }
    std::vector<HyperEdge> edges;
    std::vector<int> cur(sizes.size(), 0);
    for (;;) {
        std::vector<int> e;
        for (std::size_t i = 0; i < sizes.size(); ++i) e.push_back(parts[i][cur[i]]);
        edges.emplace_back(e);
        std::size_t i = 0;
        while (i < sizes.size() && ++cur[i] == sizes[i]) cur[i++] = 0;
        if (i == sizes.size()) break;
    }
    return Hypergraph(static_cast<int>(sizes.size()), verts, edges, parts);
}

Hypergraph induced_subhypergraph(const Hypergraph& g, const std::vector<VertexId>& x)
{
    std::vector<char> in(g.num_vertices(), 0);
    for (const auto& v : x) in[g.index_of(v)] = 1;
    std::vector<int> newidx(g.num_vertices(), -1);
    std::vector<VertexId> verts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (in[v]) {
            newidx[v] = static_cast<int>(verts.size());
            verts.push_back(g.vertices()[v]);
        }
    std::vector<HyperEdge> edges;
    for (const auto& e : g.edges()) {
        bool inside = std::all_of(e.entries.begin(), e.entries.end(), [&](int v) { return in[v]; });
        if (!inside) continue;
        std::vector<int> ne;
        for (int v : e.entries) ne.push_back(newidx[v]);
        edges.emplace_back(ne);
    }
    std::optional<Partition> part;
    if (g.partition()) {
        Partition p;
        for (const auto& block : *g.partition()) {
            p.emplace_back();
            for (int v : block)
                if (in[v]) p.back().push_back(newidx[v]);
        }
        part = p;
    }
    return Hypergraph(g.k(), verts, edges, part);
}

std::vector<HyperEdge> neighbor_closure(const Hypergraph& g, const std::vector<HyperEdge>& f)
{
    std::set<HyperEdge> out;
    for (const auto& e : f) {
        require(g.has_edge(e), "neighbor_closure: edge not in hypergraph");
        for (int u : e.support()) {
            std::vector<int> rest = e.remove_one(u);
            for (int v = 0; v < g.num_vertices(); ++v) {
                std::vector<int> cand = rest;
                cand.push_back(v);
                HyperEdge c(cand);
                if (g.has_edge(c)) out.insert(c);
            }
        }
    }
    return std::vector<HyperEdge>(out.begin(), out.end());
}

Hypergraph d_valent_extension(const Hypergraph& g, const VertexId& new_vertex,
                              const std::vector<std::vector<VertexId>>& new_edges, bool simple_required)
{
    auto it = std::find(g.vertices().begin(), g.vertices().end(), new_vertex);
    require(it == g.vertices().end(), "extension vertex already present: " + new_vertex);
    std::vector<VertexId> verts = g.vertices();
    verts.push_back(new_vertex);
    const int nv = static_cast<int>(verts.size()) - 1;
    std::vector<HyperEdge> edges = g.edges();
    std::set<HyperEdge> fresh;
    for (const auto& labels : new_edges) {
        std::vector<int> idx;
        for (const auto& l : labels) {
            if (l == new_vertex) {
                idx.push_back(nv);
            } else {
                idx.push_back(g.index_of(l));
            }
        }
        HyperEdge e(idx);
        require(e.contains(nv), "extension edge does not contain the new vertex");
        require(!simple_required || e.is_simple(), "extension edge is not simple");
        require(fresh.insert(e).second, "duplicate extension edge");
        edges.push_back(e);
    }
    return Hypergraph(g.k(), verts, edges);
}

Hypergraph remove_vertex(const Hypergraph& g, const VertexId& v)
{
    int vi = g.index_of(v);
    std::vector<VertexId> keep;
    for (int u = 0; u < g.num_vertices(); ++u)
        if (u != vi) keep.push_back(g.vertices()[u]);
    Hypergraph h = induced_subhypergraph(g, keep);
    return h;
}

Hypergraph remove_edge(const Hypergraph& g, const HyperEdge& e)
{
    std::vector<HyperEdge> edges;
    for (const auto& f : g.edges())
        if (!(f == e)) edges.push_back(f);
    return Hypergraph(g.k(), g.vertices(), edges, g.partition());
}

Hypergraph with_edges(const Hypergraph& g, const std::vector<HyperEdge>& edges)
{
    return Hypergraph(g.k(), g.vertices(), edges, g.partition());
}

Hypergraph erdos_renyi_subgraph(const Hypergraph& g, double t, std::uint64_t seed)
{
    require(t >= 0.0 && t <= 1.0, "retention probability must lie in [0,1]");
    std::vector<HyperEdge> keep;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        double u = static_cast<double>(derive_seed(seed, i) >> 11) * 0x1.0p-53;
        if (u < t) keep.push_back(g.edges()[i]);
    }
    return Hypergraph(g.k(), g.vertices(), keep, g.partition());
}

std::vector<std::vector<int>> two_section(const Hypergraph& g)
{
    std::vector<std::set<int>> adj(g.num_vertices());
    for (const auto& e : g.edges()) {
        auto s = e.support();
        for (int a : s)
            for (int b : s)
                if (a != b) adj[a].insert(b);
    }
    std::vector<std::vector<int>> out;
    for (const auto& s : adj) out.emplace_back(s.begin(), s.end());
    return out;
}

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

// Number of internally vertex-disjoint s-t paths (Menger), via the split-vertex network.
long local_connectivity(const std::vector<std::vector<int>>& adj, int s, int t)
{
    const int n = static_cast<int>(adj.size());
    FlowGraph fg(2 * n);
    auto cap = boost::get(boost::edge_capacity, fg);
    auto rev = boost::get(boost::edge_reverse, fg);
    auto add = [&](int a, int b, long c) {
        auto e1 = boost::add_edge(a, b, fg).first;
        auto e2 = boost::add_edge(b, a, fg).first;
        cap[e1] = c;
        cap[e2] = 0;
        rev[e1] = e2;
        rev[e2] = e1;
    };
    const long inf = n + 1;
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) add(2 * v + 1, 2 * w, inf);
    return boost::edmonds_karp_max_flow(fg, 2 * s + 1, 2 * t);
}

}  // namespace

int vertex_connectivity(const Hypergraph& g)
{
    const int n = g.num_vertices();
    require(n >= 2, "vertex connectivity needs at least two vertices");
    auto adj = two_section(g);
    long best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (std::binary_search(adj[s].begin(), adj[s].end(), t)) continue;
            best = std::min(best, local_connectivity(adj, s, t));
        }
    return static_cast<int>(best);
}

Hypergraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<HyperEdge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(std::vector<int>{a, b});
    return Hypergraph(2, default_labels(n), edges);
}

nlohmann::json to_json(const Hypergraph& g)
{
    nlohmann::json j;
    j["k"] = g.k();
    j["vertices"] = g.vertices();
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        nlohmann::json row = nlohmann::json::array();
        for (int v : e.entries) row.push_back(g.vertices()[v]);
        edges.push_back(row);
    }
    j["edges"] = edges;
    if (g.partition()) {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& b : *g.partition()) {
            nlohmann::json row = nlohmann::json::array();
            for (int v : b) row.push_back(g.vertices()[v]);
            parts.push_back(row);
        }
        j["partition"] = parts;
    }
    return j;
}

namespace {

std::string label_of(const nlohmann::json& x)
{
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    throw InputError("vertex labels must be strings or integers");
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& j)
{
    require(j.is_object(), "hypergraph JSON must be an object");
    require(j.contains("k") && j["k"].is_number_integer(), "hypergraph JSON needs integer field \"k\"");
    require(j.contains("vertices") && j["vertices"].is_array(), "hypergraph JSON needs array \"vertices\"");
    require(j.contains("edges") && j["edges"].is_array(), "hypergraph JSON needs array \"edges\"");
    int k = j["k"].get<int>();
    std::vector<VertexId> verts;
    std::map<VertexId, int> index;
    for (const auto& v : j["vertices"]) {
        verts.push_back(label_of(v));
        index[verts.back()] = static_cast<int>(verts.size()) - 1;
    }
    auto lookup = [&](const nlohmann::json& x) {
        auto it = index.find(label_of(x));
        require(it != index.end(), "edge refers to unknown vertex " + label_of(x));
        return it->second;
    };
    std::vector<HyperEdge> edges;
    for (const auto& e : j["edges"]) {
        require(e.is_array(), "each edge must be a list of vertex labels");
        require(static_cast<int>(e.size()) == k, "edge arity " + std::to_string(e.size()) +
                                                     " does not match k=" + std::to_string(k));
        std::vector<int> idx;
        for (const auto& v : e) idx.push_back(lookup(v));
        edges.emplace_back(idx);
    }
    std::optional<Partition> part;
    if (j.contains("partition") && !j["partition"].is_null()) {
        require(j["partition"].is_array(), "partition must be a list of vertex lists");
        Partition p;
        for (const auto& b : j["partition"]) {
            require(b.is_array(), "partition blocks must be lists");
            p.emplace_back();
            for (const auto& v : b) p.back().push_back(lookup(v));
        }
        part = p;
    }
    return Hypergraph(k, verts, edges, part);
}

}  // namespace hyperrig
