#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohg/bitset.hpp"
#include "ohg/core.hpp"

namespace ohg {

/// Table of two-valued states: one row per state, one column per vertex.
///
/// Rows are stored flat, one bit per column. Column bit vectors (one bit per
/// row) are built once at construction for the pairwise column tests used by
/// classification and reconstruction. Matrices produced by enumerate_states
/// are in canonical order (rows descending as binary numbers, column 0 most
/// significant); reference matrices keep the row order they were given in.
class TravisMatrix {
public:
    using Word = Bitset::Word;

    TravisMatrix() = default;
    /// Throws InvalidArgument on ragged or repeated rows.
    TravisMatrix(std::vector<std::string> columns, const std::vector<Bitset>& rows);
    /// Rows given as 0/1 integers.
    static TravisMatrix from_ints(std::vector<std::string> columns,
                                  const std::vector<std::vector<int>>& rows);

    std::size_t row_count() const noexcept { return rows_; }
    std::size_t column_count() const noexcept { return columns_.size(); }
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    std::optional<std::size_t> column_index(std::string_view name) const;

    bool at(std::size_t row, std::size_t column) const {
        return (data_[row * stride_ + column / Bitset::kWordBits] & Bitset::mask(column)) != 0;
    }
    std::span<const Word> row_words(std::size_t row) const {
        return {data_.data() + row * stride_, stride_};
    }
    Bitset row(std::size_t row) const;
    const Bitset& column(std::size_t column) const { return column_bits_.at(column); }

    bool is_canonical() const;
    TravisMatrix canonical() const;
    /// Rows in the given order (a permutation of 0..row_count-1).
    TravisMatrix permuted_rows(std::span<const std::size_t> order) const;

    friend bool operator==(const TravisMatrix& a, const TravisMatrix& b) {
        return a.columns_ == b.columns_ && a.rows_ == b.rows_ && a.data_ == b.data_;
    }

private:
    friend class StateCollector;
    TravisMatrix(std::vector<std::string> columns, std::size_t rows, std::vector<Word> data);
    void build_columns();

    std::vector<std::string> columns_;
    std::size_t rows_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
    std::vector<Bitset> column_bits_;
};

struct EnumerateOptions {
    /// Abort with RowLimitExceeded once more rows than this are found.
    std::optional<std::uint64_t> row_limit;
    /// Worker threads; results do not depend on this.
    unsigned jobs = 1;
    /// If nonzero, `progress` is called each time the running count crosses a
    /// multiple of this interval.
    std::uint64_t progress_interval = 0;
    std::function<void(std::uint64_t)> progress;
};

/// All two-valued states of `h`, in canonical row order.
TravisMatrix enumerate_states(const Hypergraph& h, const EnumerateOptions& options = {});

/// Number of two-valued states without storing rows.
std::uint64_t count_states(const Hypergraph& h, const EnumerateOptions& options = {});

/// Whether `state` (one bit per vertex) puts exactly one 1 on every context.
bool is_two_valued_state(const Hypergraph& h, const Bitset& state);

/// The Definition-style separability items for a vertex pair (i, j):
/// 1: some row has i=0, j=1;  2: some row has i=1, j=0;
/// 3: (non-adjacent pairs only) some row has i=1, j=1.
struct FailWitness {
    VertexId first = 0;
    VertexId second = 0;
    int item = 0;
};

struct StateClassification {
    std::uint64_t n_states = 0;
    bool unital = false;
    bool separable = false;
    bool perfectly_separable = false;
    std::optional<FailWitness> fail_witness;
};

/// The same table with its columns reordered to follow the vertex order of
/// `h`; row order is kept. Throws ColumnCountMismatch or UnknownVertex.
TravisMatrix align_columns(const TravisMatrix& t, const Hypergraph& h);

/// Throws ColumnCountMismatch unless the columns of `t` are the vertices of
/// `h` in vertex order (see align_columns).
StateClassification classify(const Hypergraph& h, const TravisMatrix& t);

using VertexPair = std::pair<VertexId, VertexId>;

struct GadgetScan {
    std::set<VertexPair> tifs;  ///< never co-true, not adjacent
    std::set<VertexPair> tits;  ///< first true implies second true (first true at least once)
};

GadgetScan gadget_scan(const Hypergraph& h, const TravisMatrix& t);

struct GadgetProfile {
    std::string head;
    std::string tail;
    std::uint64_t n_a = 0;  ///< head true
    std::uint64_t n_b = 0;  ///< tail true
    std::uint64_t n_n = 0;  ///< both false
};

/// Throws NotAGadgetPair if some state makes head and tail both true.
GadgetProfile gadget_profile(const TravisMatrix& t, std::string_view head, std::string_view tail);

}  // namespace ohg
