#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperrig {

using VertexId = std::string;

// Sorted multiset of vertex indices (positions in the owning hypergraph's vertex list).
struct HyperEdge {
    std::vector<int> entries;

    HyperEdge() = default;
    explicit HyperEdge(std::vector<int> e);

    int size() const { return static_cast<int>(entries.size()); }
    int multiplicity(int v) const;
    bool contains(int v) const { return multiplicity(v) > 0; }
    bool is_simple() const;
    std::vector<int> support() const;
    // e - v: drops one copy of v (v must occur in e).
    std::vector<int> remove_one(int v) const;
    // 0-based position of v among the entries; meaningful for simple edges.
    int position(int v) const;

    friend bool operator==(const HyperEdge& a, const HyperEdge& b) { return a.entries == b.entries; }
    friend bool operator<(const HyperEdge& a, const HyperEdge& b) { return a.entries < b.entries; }
};

using Partition = std::vector<std::vector<int>>;

class Hypergraph {
public:
    Hypergraph() = default;
    // Edges are canonicalized (sorted entries, sorted edge list). Duplicate edges,
    // out-of-range indices and wrong arity throw InputError.
    Hypergraph(int k, std::vector<VertexId> vertices, std::vector<HyperEdge> edges,
               std::optional<Partition> partition = std::nullopt);

    int k() const { return k_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<HyperEdge>& edges() const { return edges_; }
    const std::optional<Partition>& partition() const { return partition_; }

    int index_of(const VertexId& v) const;
    std::optional<int> find_edge(const HyperEdge& e) const;
    bool has_edge(const HyperEdge& e) const { return find_edge(e).has_value(); }
    HyperEdge edge_from_labels(const std::vector<VertexId>& labels) const;
    std::string edge_label(const HyperEdge& e) const;
    bool is_simple() const;

private:
    int k_ = 0;
    std::vector<VertexId> vertices_;
    std::vector<HyperEdge> edges_;
    std::optional<Partition> partition_;
};

// Builds a hypergraph from words such as "aab abc"; each character is a vertex label.
// Vertex order is the sorted set of characters unless `order` is given.
Hypergraph hypergraph_from_words(const std::string& words, const std::string& order = "");

std::vector<VertexId> default_labels(int n);

Hypergraph complete_hypergraph(int n, int k, bool simple);
Hypergraph complete_partite(const std::vector<int>& sizes);
Hypergraph induced_subhypergraph(const Hypergraph& g, const std::vector<VertexId>& x);
std::vector<HyperEdge> neighbor_closure(const Hypergraph& g, const std::vector<HyperEdge>& f);
Hypergraph d_valent_extension(const Hypergraph& g, const VertexId& new_vertex,
                              const std::vector<std::vector<VertexId>>& new_edges, bool simple_required);
Hypergraph remove_vertex(const Hypergraph& g, const VertexId& v);
Hypergraph remove_edge(const Hypergraph& g, const HyperEdge& e);
Hypergraph with_edges(const Hypergraph& g, const std::vector<HyperEdge>& edges);
Hypergraph erdos_renyi_subgraph(const Hypergraph& g, double t, std::uint64_t seed);

// Two vertices are adjacent iff they share a hyperedge.
std::vector<std::vector<int>> two_section(const Hypergraph& g);
int vertex_connectivity(const Hypergraph& g);

// Simple graph on `n` vertices labelled 1..n from 0-based index pairs.
Hypergraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

nlohmann::json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace hyperrig
