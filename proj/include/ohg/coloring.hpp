#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ohg/core.hpp"
#include "ohg/states.hpp"

namespace ohg {

/// Proper vertex colouring; colours are 1-based.
struct Coloring {
    std::vector<std::size_t> color_of;

    /// Largest colour index used.
    std::size_t color_count() const;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Cells are independent and dominating in the 2-section and cover V(H).
struct PartitionSystem {
    std::vector<VertexSet> cells;
    friend bool operator==(const PartitionSystem&, const PartitionSystem&) = default;
};

/// Rows of a state table, 0-based.
struct RowSelection {
    std::vector<std::size_t> rows;
    friend bool operator==(const RowSelection&, const RowSelection&) = default;
};

/// Vertices sharing a context get distinct colours.
bool is_proper(const Hypergraph& h, const Coloring& c);

/// Colour classes as cells. Throws NotProper, or NotDominating when some class
/// misses the closed neighbourhood of a vertex.
PartitionSystem partition_from_coloring(const Hypergraph& h, const Coloring& c);

/// Cell i gets colour i+1.
Coloring coloring_from_partition(const PartitionSystem& p);

/// Backtracking search for n mutually disjoint rows. Rows are tried in table
/// order, and on backtracking the released rows are appended to the end of the
/// available list, so the first selection found depends on the table's row
/// order. nullopt when the search is exhausted. When every context has exactly
/// n vertices, n disjoint states cover all vertices, so the selection passes
/// verify_rows; for other n it need not.
std::optional<RowSelection> algorithm1(const TravisMatrix& t, std::size_t n);

/// Whether the selected rows add up to the all-ones row. Throws
/// InvalidArgument for an out-of-range index.
bool verify_rows(const TravisMatrix& t, const RowSelection& a);

/// Colour k+1 on the vertices that row a.rows[k] makes true. Requires
/// verify_rows(t, a).
Coloring coloring_from_rows(const TravisMatrix& t, const RowSelection& a);

/// Indicator of one colour class, checked to be a two-valued state (NotAState).
Bitset color_to_state(const Hypergraph& h, const Coloring& c, std::size_t color);

/// Minimum colouring of the 2-section by DSATUR branch and bound. Throws
/// SizeLimit beyond `vertex_budget` vertices.
Coloring optimal_coloring(const Hypergraph& h, std::size_t vertex_budget = 64);

std::size_t exact_chromatic(const Hypergraph& h, std::size_t vertex_budget = 64);

/// Brooks bound of the 2-section. Throws Disconnected.
std::size_t brooks_bound(const Hypergraph& h);

/// State-guided colouring that tolerates overlap with earlier colours.
///
/// States are visited in table order. A state that still holds an uncoloured
/// vertex opens a new colour on its uncoloured vertices; vertices coloured
/// earlier keep their colour. Before each new colour, if the uncoloured rest is
/// independent it takes one final colour. Returns nullopt if more than
/// `max_colors` colours would be needed or the states leave vertices uncovered.
std::optional<Coloring> relaxed_coloring(const TravisMatrix& t, const Hypergraph& h,
                                         std::size_t max_colors);

}  // namespace ohg
