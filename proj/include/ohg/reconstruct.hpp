#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/states.hpp"

namespace ohg {

/// Contexts by vertex name. Within a context names follow the state table's
/// column order; families are sorted by those column positions.
using NamedContexts = std::vector<std::vector<std::string>>;

/// Graph on the table's columns: i ~ j iff no state makes both true.
/// Throws InvalidArgument for an empty table and AllZeroColumn for a column
/// that is never true.
Graph adjacency_from_states(const TravisMatrix& t);

struct ReconstructionResult {
    Graph raw_graph;
    NamedContexts raw_contexts;       ///< maximal cliques of raw_graph
    NamedContexts filtered_contexts;  ///< raw contexts with at least n vertices
    NamedContexts extra_contexts;     ///< filtered but not in the source
    NamedContexts missing_contexts;   ///< in the source but not filtered
    bool has_source = false;

    /// The filtered contexts as a hypergraph (vertices in first-appearance order).
    Hypergraph filtered_hypergraph() const;
    /// Throws EmptyContext when some maximal clique is a single vertex.
    Hypergraph raw_hypergraph() const;
};

/// Rebuilds contexts from a state table. Requires n >= 3.
ReconstructionResult reconstruct(const TravisMatrix& t, std::size_t n,
                                 const Hypergraph* source = nullptr);

struct Equivalence {
    /// T1 row i equals T2 row row_map[i] after mapping columns.
    std::vector<std::size_t> row_map;
    /// T1 column j corresponds to T2 column column_map[j].
    std::vector<std::size_t> column_map;
};

/// Row/column permutations carrying `a` onto `b`, or nullopt. Throws
/// SizeLimit when the backtracking search exceeds `node_budget` nodes.
std::optional<Equivalence> travis_equivalent(const TravisMatrix& a, const TravisMatrix& b,
                                             std::size_t node_budget = 1'000'000);

struct Verdict {
    enum class Kind { Reconstructable, ExtraStructure, NonSeparable, NonUnital, Empty };
    Kind kind = Kind::Empty;
    NamedContexts extra_contexts;
    NamedContexts missing_contexts;
    /// Two identical columns (NonSeparable) or the never-true vertex (NonUnital,
    /// second unused).
    std::optional<std::pair<std::string, std::string>> witness;
};

std::string_view verdict_name(Verdict::Kind kind) noexcept;

/// Enumerates the states of `h` and decides whether the table gives `h` back.
/// Requires a uniform hypergraph with context size >= 3.
Verdict verdict(const Hypergraph& h, const EnumerateOptions& options = {});

/// As above, reusing an already enumerated table.
Verdict verdict(const Hypergraph& h, const TravisMatrix& t);

}  // namespace ohg
