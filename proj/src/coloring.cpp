#include "ohg/coloring.hpp"

#include <algorithm>

namespace ohg {

std::size_t Coloring::color_count() const {
    std::size_t m = 0;
    for (auto c : color_of) m = std::max(m, c);
    return m;
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
    if (c.color_of.size() != h.vertex_count()) return false;
    for (auto col : c.color_of)
        if (col == 0) return false;
    for (const auto& ctx : h.sorted_contexts())
        for (std::size_t i = 0; i < ctx.size(); ++i)
            for (std::size_t j = i + 1; j < ctx.size(); ++j)
                if (c.color_of[ctx[i]] == c.color_of[ctx[j]]) return false;
    return true;
}

PartitionSystem partition_from_coloring(const Hypergraph& h, const Coloring& c) {
    if (!is_proper(h, c)) throw Error(Errc::NotProper, "colouring is not proper");
    const Graph g = two_section(h);
    const std::size_t n = h.vertex_count();

    PartitionSystem p;
    for (std::size_t color = 1; color <= c.color_count(); ++color) {
        VertexSet cell;
        Bitset covered(n);
        for (VertexId v = 0; v < n; ++v) {
            if (c.color_of[v] != color) continue;
            cell.push_back(v);
            covered.set(v);
            covered |= g.neighbors(v);
        }
        if (cell.empty()) continue;
        if (covered.count() != n) {
            VertexId missed = 0;
            while (covered.test(missed)) ++missed;
            throw Error(Errc::NotDominating, "colour class " + std::to_string(color) +
                                                 " does not dominate vertex " + h.name(missed));
        }
        p.cells.push_back(std::move(cell));
    }
    return p;
}

Coloring coloring_from_partition(const PartitionSystem& p) {
    std::size_t n = 0;
    for (const auto& cell : p.cells)
        for (VertexId v : cell) n = std::max<std::size_t>(n, v + 1);
    Coloring c{std::vector<std::size_t>(n, 0)};
    for (std::size_t i = 0; i < p.cells.size(); ++i)
        for (VertexId v : p.cells[i]) c.color_of[v] = i + 1;
    return c;
}

std::optional<RowSelection> algorithm1(const TravisMatrix& t, std::size_t n) {
    const std::size_t s = t.row_count();
    if (n == 0) return RowSelection{};

    // Level i (1-based) fills A[i]; removed[i] holds the rows made inactive
    // while working on level i: rows clashing with A[i-1], and rows already
    // tried as A[i].
    std::size_t i = 1;
    std::vector<std::size_t> available(s);
    for (std::size_t r = 0; r < s; ++r) available[r] = r;
    std::vector<std::size_t> a;
    std::vector<std::vector<std::size_t>> removed(n + 2);

    auto clash = [&t](std::size_t x, std::size_t y) {
        auto wx = t.row_words(x);
        auto wy = t.row_words(y);
        for (std::size_t k = 0; k < wx.size(); ++k)
            if (wx[k] & wy[k]) return true;
        return false;
    };

    while (i <= n && (i != 1 || !available.empty())) {
        if (available.empty()) {
            available.insert(available.end(), removed[i].begin(), removed[i].end());
            removed[i].clear();
            a.pop_back();
            --i;
        } else {
            const std::size_t row = available.front();
            a.push_back(row);
            removed[i].push_back(row);
            available.erase(available.begin());
            ++i;
            auto& out = removed[i];
            std::vector<std::size_t> keep;
            for (std::size_t r : available) (clash(r, row) ? out : keep).push_back(r);
            available = std::move(keep);
        }
    }
    if (a.size() < n) return std::nullopt;
    return RowSelection{a};
}

bool verify_rows(const TravisMatrix& t, const RowSelection& a) {
    std::vector<int> sum(t.column_count(), 0);
    for (std::size_t r : a.rows) {
        if (r >= t.row_count())
            throw Error(Errc::InvalidArgument, "row index " + std::to_string(r + 1) + " out of range");
        for (std::size_t c = 0; c < t.column_count(); ++c) sum[c] += t.at(r, c) ? 1 : 0;
    }
    return std::all_of(sum.begin(), sum.end(), [](int x) { return x == 1; });
}

Coloring coloring_from_rows(const TravisMatrix& t, const RowSelection& a) {
    if (!verify_rows(t, a))
        throw Error(Errc::InvalidArgument, "selected rows do not partition the vertices");
    Coloring c{std::vector<std::size_t>(t.column_count(), 0)};
    for (std::size_t k = 0; k < a.rows.size(); ++k)
        for (std::size_t col = 0; col < t.column_count(); ++col)
            if (t.at(a.rows[k], col)) c.color_of[col] = k + 1;
    return c;
}

Bitset color_to_state(const Hypergraph& h, const Coloring& c, std::size_t color) {
    if (!is_proper(h, c)) throw Error(Errc::NotProper, "colouring is not proper");
    Bitset state(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (c.color_of[v] == color) state.set(v);
    if (!is_two_valued_state(h, state))
        throw Error(Errc::NotAState, "colour class " + std::to_string(color) +
                                         " misses a context, so it is not a two-valued state");
    return state;
}

// --------------------------------------------------------- exact colouring

namespace {

class Dsatur {
public:
    explicit Dsatur(const Graph& g)
        : g_(g), n_(g.vertex_count()), color_(n_, 0), best_(n_, 0) {}

    std::vector<std::size_t> solve(std::size_t lower) {
        lower_ = lower;
        greedy();
        if (best_count_ > lower_) branch(0, 0);
        return best_;
    }

private:
    std::size_t saturation(std::size_t v) const {
        std::vector<bool> seen(n_ + 1, false);
        std::size_t s = 0;
        g_.neighbors(static_cast<VertexId>(v)).for_each([&](std::size_t u) {
            if (color_[u] && !seen[color_[u]]) {
                seen[color_[u]] = true;
                ++s;
            }
        });
        return s;
    }

    std::size_t uncoloured_degree(std::size_t v) const {
        std::size_t d = 0;
        g_.neighbors(static_cast<VertexId>(v)).for_each([&](std::size_t u) { d += color_[u] == 0; });
        return d;
    }

    std::size_t pick() const {
        std::size_t best = n_;
        std::pair<std::size_t, std::size_t> key{0, 0};
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v]) continue;
            std::pair<std::size_t, std::size_t> k{saturation(v), uncoloured_degree(v)};
            if (best == n_ || k > key) {
                best = v;
                key = k;
            }
        }
        return best;
    }

    bool allowed(std::size_t v, std::size_t c) const {
        bool ok = true;
        g_.neighbors(static_cast<VertexId>(v)).for_each([&](std::size_t u) {
            if (color_[u] == c) ok = false;
        });
        return ok;
    }

    void greedy() {
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t v = pick();
            std::size_t c = 1;
            while (!allowed(v, c)) ++c;
            color_[v] = c;
        }
        best_ = color_;
        best_count_ = n_ ? *std::max_element(best_.begin(), best_.end()) : 0;
        std::fill(color_.begin(), color_.end(), 0);
    }

    void branch(std::size_t coloured, std::size_t used) {
        if (best_count_ == lower_) return;
        if (coloured == n_) {
            best_ = color_;
            best_count_ = used;
            return;
        }
        const std::size_t v = pick();
        const std::size_t limit = std::min(used + 1, best_count_ - 1);
        for (std::size_t c = 1; c <= limit; ++c) {
            if (!allowed(v, c)) continue;
            color_[v] = c;
            branch(coloured + 1, std::max(used, c));
            color_[v] = 0;
            if (best_count_ == lower_) return;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> best_;
    std::size_t best_count_ = 0;
    std::size_t lower_ = 0;
};

}  // namespace

Coloring optimal_coloring(const Hypergraph& h, std::size_t vertex_budget) {
    if (h.vertex_count() > vertex_budget)
        throw Error(Errc::SizeLimit, "exact colouring limited to " + std::to_string(vertex_budget) +
                                         " vertices");
    const Graph g = two_section(h);
    return Coloring{Dsatur(g).solve(clique_number(g))};
}

std::size_t exact_chromatic(const Hypergraph& h, std::size_t vertex_budget) {
    return optimal_coloring(h, vertex_budget).color_count();
}

std::size_t brooks_bound(const Hypergraph& h) {
    const Graph g = two_section(h);
    if (!g.is_connected()) throw Error(Errc::Disconnected, "2-section is not connected");
    const std::size_t delta = g.max_degree();
    if (g.is_complete()) return delta + 1;
    const std::size_t n = g.vertex_count();
    bool odd_cycle = n % 2 == 1 && n >= 3;
    for (VertexId v = 0; odd_cycle && v < n; ++v)
        if (g.degree(v) != 2) odd_cycle = false;
    return odd_cycle ? delta + 1 : delta;
}

std::optional<Coloring> relaxed_coloring(const TravisMatrix& table, const Hypergraph& h,
                                         std::size_t max_colors) {
    const TravisMatrix t = align_columns(table, h);
    const Graph g = two_section(h);
    const std::size_t n = h.vertex_count();
    Coloring c{std::vector<std::size_t>(n, 0)};
    std::size_t used = 0;

    auto uncoloured = [&] {
        Bitset rest(n);
        for (VertexId v = 0; v < n; ++v)
            if (!c.color_of[v]) rest.set(v);
        return rest;
    };
    auto independent = [&](const Bitset& set) {
        bool ok = true;
        set.for_each([&](std::size_t v) {
            if (g.neighbors(static_cast<VertexId>(v)).intersects(set)) ok = false;
        });
        return ok;
    };

    for (std::size_t r = 0; r <= t.row_count(); ++r) {
        Bitset rest = uncoloured();
        if (rest.none()) return c;
        if (independent(rest)) {
            if (used + 1 > max_colors) return std::nullopt;
            ++used;
            rest.for_each([&](std::size_t v) { c.color_of[v] = used; });
            return c;
        }
        if (r == t.row_count()) break;
        Bitset fresh = t.row(r) & rest;
        if (fresh.none()) continue;
        if (used + 1 > max_colors) return std::nullopt;
        ++used;
        fresh.for_each([&](std::size_t v) { c.color_of[v] = used; });
    }
    return std::nullopt;
}

}  // namespace ohg
