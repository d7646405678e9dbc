#include "ohg/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ohg {

Graph adjacency_from_states(const TravisMatrix& t) {
    if (t.row_count() == 0)
        throw Error(Errc::InvalidArgument, "adjacency needs at least one state");
    const std::size_t k = t.column_count();
    for (std::size_t c = 0; c < k; ++c)
        if (t.column(c).none())
            throw Error(Errc::AllZeroColumn,
                        "vertex " + t.columns()[c] + " is false in every state");
    Graph g(t.columns());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!t.column(i).intersects(t.column(j)))
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

namespace {

NamedContexts to_names(const std::vector<std::string>& columns,
                       const std::vector<VertexSet>& family) {
    NamedContexts out;
    out.reserve(family.size());
    for (const auto& ctx : family) {
        auto& names = out.emplace_back();
        for (VertexId v : ctx) names.push_back(columns[v]);
    }
    return out;
}

Hypergraph build_named(const NamedContexts& contexts) { return Hypergraph::build(contexts); }

}  // namespace

Hypergraph ReconstructionResult::filtered_hypergraph() const {
    return build_named(filtered_contexts);
}

Hypergraph ReconstructionResult::raw_hypergraph() const { return build_named(raw_contexts); }

ReconstructionResult reconstruct(const TravisMatrix& t, std::size_t n, const Hypergraph* source) {
    if (n < 3) throw Error(Errc::InvalidArgument, "reconstruction needs clique number n >= 3");
    ReconstructionResult r;
    r.raw_graph = adjacency_from_states(t);
    const auto raw = maximal_cliques(r.raw_graph);

    std::vector<VertexSet> filtered;
    for (const auto& c : raw)
        if (c.size() >= n) filtered.push_back(c);
    r.raw_contexts = to_names(t.columns(), raw);
    r.filtered_contexts = to_names(t.columns(), filtered);

    if (source) {
        r.has_source = true;
        std::set<VertexSet> src;
        for (const auto& ctx : source->contexts()) {
            VertexSet cols;
            for (VertexId v : ctx) {
                auto c = t.column_index(source->name(v));
                if (!c)
                    throw Error(Errc::ColumnCountMismatch,
                                "source vertex " + source->name(v) + " has no column");
                cols.push_back(static_cast<VertexId>(*c));
            }
            std::sort(cols.begin(), cols.end());
            src.insert(std::move(cols));
        }
        const std::set<VertexSet> got(filtered.begin(), filtered.end());
        std::vector<VertexSet> extra, missing;
        std::set_difference(got.begin(), got.end(), src.begin(), src.end(),
                            std::back_inserter(extra));
        std::set_difference(src.begin(), src.end(), got.begin(), got.end(),
                            std::back_inserter(missing));
        r.extra_contexts = to_names(t.columns(), extra);
        r.missing_contexts = to_names(t.columns(), missing);
    }
    return r;
}

// ------------------------------------------------------------- equivalence

namespace {

// Column invariant: weight and sorted co-occurrence counts with every other column.
std::vector<std::vector<std::size_t>> column_signatures(const TravisMatrix& t) {
    const std::size_t k = t.column_count();
    std::vector<std::vector<std::size_t>> sig(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> co;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) co.push_back((t.column(i) & t.column(j)).count());
        std::sort(co.begin(), co.end());
        sig[i].push_back(t.column(i).count());
        sig[i].insert(sig[i].end(), co.begin(), co.end());
    }
    return sig;
}

std::vector<std::size_t> row_weights(const TravisMatrix& t) {
    std::vector<std::size_t> w(t.row_count());
    for (std::size_t r = 0; r < t.row_count(); ++r) w[r] = t.row(r).count();
    std::sort(w.begin(), w.end());
    return w;
}

class EquivalenceSearch {
public:
    EquivalenceSearch(const TravisMatrix& a, const TravisMatrix& b, std::size_t budget)
        : a_(a), b_(b), budget_(budget), sig_a_(column_signatures(a)),
          sig_b_(column_signatures(b)), column_map_(a.column_count()),
          used_(b.column_count(), false) {
        // most constrained columns first
        std::map<std::vector<std::size_t>, std::size_t> freq;
        for (const auto& s : sig_b_) ++freq[s];
        order_.resize(a.column_count());
        for (std::size_t j = 0; j < order_.size(); ++j) order_[j] = j;
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            return freq[sig_a_[x]] < freq[sig_a_[y]];
        });
    }

    bool signatures_match() const {
        auto sa = sig_a_;
        auto sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa == sb;
    }

    std::optional<Equivalence> run() {
        std::vector<std::size_t> cls_a(a_.row_count(), 0), cls_b(b_.row_count(), 0);
        if (!search(0, cls_a, cls_b)) return std::nullopt;

        // Columns fixed: rows pair up by their (now unique) projection class.
        std::map<std::size_t, std::size_t> where;
        for (std::size_t r = 0; r < b_.row_count(); ++r) where[final_b_[r]] = r;
        Equivalence e;
        e.column_map = column_map_;
        e.row_map.resize(a_.row_count());
        for (std::size_t r = 0; r < a_.row_count(); ++r) e.row_map[r] = where.at(final_a_[r]);
        return e;
    }

private:
    // Refines the row classes of both tables by one column pair; false when the
    // per-class counts of ones disagree.
    static bool split(const Bitset& col_a, const Bitset& col_b, std::vector<std::size_t>& cls_a,
                      std::vector<std::size_t>& cls_b) {
        std::map<std::pair<std::size_t, bool>, long> balance;
        for (std::size_t r = 0; r < cls_a.size(); ++r) ++balance[{cls_a[r], col_a.test(r)}];
        for (std::size_t r = 0; r < cls_b.size(); ++r) --balance[{cls_b[r], col_b.test(r)}];
        std::map<std::pair<std::size_t, bool>, std::size_t> ids;
        for (auto& [key, diff] : balance) {
            if (diff != 0) return false;
            ids.emplace(key, ids.size());
        }
        for (std::size_t r = 0; r < cls_a.size(); ++r) cls_a[r] = ids.at({cls_a[r], col_a.test(r)});
        for (std::size_t r = 0; r < cls_b.size(); ++r) cls_b[r] = ids.at({cls_b[r], col_b.test(r)});
        return true;
    }

    bool search(std::size_t depth, const std::vector<std::size_t>& cls_a,
                const std::vector<std::size_t>& cls_b) {
        if (++nodes_ > budget_)
            throw Error(Errc::SizeLimit, "equivalence search exceeded its node budget");
        if (depth == order_.size()) {
            final_a_ = cls_a;
            final_b_ = cls_b;
            return true;
        }
        const std::size_t j = order_[depth];
        for (std::size_t target = 0; target < b_.column_count(); ++target) {
            if (used_[target] || sig_b_[target] != sig_a_[j]) continue;
            auto next_a = cls_a;
            auto next_b = cls_b;
            if (!split(a_.column(j), b_.column(target), next_a, next_b)) continue;
            used_[target] = true;
            column_map_[j] = target;
            if (search(depth + 1, next_a, next_b)) return true;
            used_[target] = false;
        }
        return false;
    }

    const TravisMatrix& a_;
    const TravisMatrix& b_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> sig_a_;
    std::vector<std::vector<std::size_t>> sig_b_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> column_map_;
    std::vector<bool> used_;
    std::vector<std::size_t> final_a_;
    std::vector<std::size_t> final_b_;
};

}  // namespace

std::optional<Equivalence> travis_equivalent(const TravisMatrix& a, const TravisMatrix& b,
                                             std::size_t node_budget) {
    if (a.row_count() != b.row_count() || a.column_count() != b.column_count())
        return std::nullopt;
    if (row_weights(a) != row_weights(b)) return std::nullopt;
    EquivalenceSearch search(a, b, node_budget);
    if (!search.signatures_match()) return std::nullopt;
    return search.run();
}

// ------------------------------------------------------------------ verdict

std::string_view verdict_name(Verdict::Kind kind) noexcept {
    switch (kind) {
    case Verdict::Kind::Reconstructable: return "Reconstructable";
    case Verdict::Kind::ExtraStructure: return "ExtraStructure";
    case Verdict::Kind::NonSeparable: return "NonSeparable";
    case Verdict::Kind::NonUnital: return "NonUnital";
    case Verdict::Kind::Empty: return "Empty";
    }
    return "Unknown";
}

Verdict verdict(const Hypergraph& h, const EnumerateOptions& options) {
    return verdict(h, enumerate_states(h, options));
}

Verdict verdict(const Hypergraph& h, const TravisMatrix& t) {
    if (h.context_count() == 0 || h.min_context_size() != h.max_context_size() ||
        h.min_context_size() < 3)
        throw Error(Errc::InvalidArgument, "verdict needs a uniform hypergraph with contexts of size >= 3");
    if (t.column_count() != h.vertex_count())
        throw Error(Errc::ColumnCountMismatch, "state table does not match the hypergraph");

    Verdict v;
    if (t.row_count() == 0) {
        v.kind = Verdict::Kind::Empty;
        return v;
    }
    const std::size_t k = t.column_count();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (t.column(i) == t.column(j)) {
                v.kind = Verdict::Kind::NonSeparable;
                v.witness = std::pair{t.columns()[i], t.columns()[j]};
                return v;
            }
    for (std::size_t i = 0; i < k; ++i)
        if (t.column(i).none()) {
            v.kind = Verdict::Kind::NonUnital;
            v.witness = std::pair{t.columns()[i], std::string{}};
            return v;
        }

    const std::size_t n = shape(h).clique_number;
    auto r = reconstruct(t, n, &h);
    v.extra_contexts = std::move(r.extra_contexts);
    v.missing_contexts = std::move(r.missing_contexts);
    v.kind = v.extra_contexts.empty() && v.missing_contexts.empty()
                 ? Verdict::Kind::Reconstructable
                 : Verdict::Kind::ExtraStructure;
    return v;
}

}  // namespace ohg
