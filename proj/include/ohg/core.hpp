#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohg/bitset.hpp"
#include "ohg/error.hpp"

namespace ohg {

using VertexId = std::uint32_t;
using ContextId = std::uint32_t;

/// A context as an ascending list of vertex indices.
using VertexSet = std::vector<VertexId>;

/// Simple undirected graph over named vertices, adjacency stored as bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::string> names);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }

    void add_edge(VertexId u, VertexId v);
    bool has_edge(VertexId u, VertexId v) const { return adjacency_[u].test(v); }
    const Bitset& neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].count(); }
    std::size_t max_degree() const;
    std::size_t edge_count() const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool is_connected() const;
    bool is_complete() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Bitset> adjacency_;
};

/// Orthogonality hypergraph: named vertices plus a family of contexts.
/// Immutable after construction; vertices are indexed in first-appearance order.
class Hypergraph {
public:
    /// Validates and builds a hypergraph from contexts given by vertex name.
    static Hypergraph build(const std::vector<std::vector<std::string>>& raw_contexts);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t context_count() const noexcept { return contexts_.size(); }

    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find(std::string_view name) const;
    /// Throws UnknownVertex.
    VertexId index_of(std::string_view name) const;

    /// Contexts in declaration order; each lists its vertices in the order given.
    const std::vector<VertexSet>& contexts() const noexcept { return contexts_; }
    /// Contexts as ascending vertex sets, same order as contexts().
    const std::vector<VertexSet>& sorted_contexts() const noexcept { return sorted_; }
    std::span<const ContextId> contexts_of(VertexId v) const { return incidence_[v]; }

    /// Contexts as vertex-name lists, suitable for Hypergraph::build.
    std::vector<std::vector<std::string>> named_contexts() const;

    std::size_t min_context_size() const;
    std::size_t max_context_size() const;

private:
    Hypergraph() = default;

    std::vector<std::string> names_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<VertexSet> contexts_;
    std::vector<VertexSet> sorted_;
    std::vector<std::vector<ContextId>> incidence_;
};

struct ShapeReport {
    std::size_t clique_number = 0;
    bool uniform = false;
    bool conformal = false;
    bool completion_ok = false;
    std::size_t max_degree = 0;
};

/// Graph on V(H) joining every pair of vertices sharing a context.
Graph two_section(const Hypergraph& h);

/// All inclusion-maximal cliques, each ascending, the family sorted.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Size of the largest clique.
std::size_t clique_number(const Graph& g);

ShapeReport shape(const Hypergraph& h);

/// Set-of-sets view of the context family, for order-insensitive comparisons.
std::vector<VertexSet> context_family(const Hypergraph& h);

/// Vertex bijection (indexed by H1 vertex, value H2 vertex) that maps the
/// contexts of `a` exactly onto the contexts of `b`, or nullopt.
std::optional<std::vector<VertexId>> is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Four distinct contexts c1..c4, each intertwined with the next (cyclically)
/// through four distinct vertices.
struct ContextCycle {
    std::array<ContextId, 4> contexts{};
    std::array<VertexId, 4> links{};  // links[k] lies in contexts[k] and contexts[(k+1)%4]
};

/// Every context 4-cycle, each reported once with contexts[0] the smallest
/// index and contexts[1] < contexts[3].
std::vector<ContextCycle> four_cycle_lint(const Hypergraph& h);

}  // namespace ohg
