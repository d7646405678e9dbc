#include "ohg/core.hpp"

#include <algorithm>
#include <set>

namespace ohg {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidName: return "InvalidName";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateContext: return "DuplicateContext";
    case Errc::SubsetContext: return "SubsetContext";
    case Errc::EmptyContext: return "EmptyContext";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::ColumnCountMismatch: return "ColumnCountMismatch";
    case Errc::RowLimitExceeded: return "RowLimitExceeded";
    case Errc::NotAGadgetPair: return "NotAGadgetPair";
    case Errc::AllZeroColumn: return "AllZeroColumn";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotProper: return "NotProper";
    case Errc::NotDominating: return "NotDominating";
    case Errc::NotAState: return "NotAState";
    case Errc::Disconnected: return "Disconnected";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::AdjacentTerminals: return "AdjacentTerminals";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotTifs: return "NotTifs";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::vector<std::string> names)
    : names_(std::move(names)), adjacency_(names_.size(), Bitset(names_.size())) {}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw Error(Errc::InvalidArgument, "self-loop on vertex " + names_.at(u));
    adjacency_.at(u).set(v);
    adjacency_.at(v).set(u);
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adjacency_) best = std::max(best, row.count());
    return best;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        adjacency_[u].for_each([&](std::size_t v) {
            if (v > u) out.emplace_back(u, static_cast<VertexId>(v));
        });
    }
    return out;
}

bool Graph::is_connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) return true;
    Bitset seen(n);
    std::vector<std::size_t> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        adjacency_[u].for_each([&](std::size_t v) {
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
        });
    }
    return seen.count() == n;
}

bool Graph::is_complete() const {
    const std::size_t n = vertex_count();
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [n](const Bitset& row) { return row.count() + 1 == n; });
}

// ----------------------------------------------------------- Hypergraph

namespace {

void check_name(const std::string& name) {
    if (name.empty()) throw Error(Errc::InvalidName, "empty vertex name");
    for (char c : name) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' ||
            c == '#' || c == ':')
            throw Error(Errc::InvalidName, "invalid vertex name '" + name + "'");
    }
}

std::string describe(const Hypergraph& h, const VertexSet& ctx) {
    std::string s = "{";
    for (std::size_t k = 0; k < ctx.size(); ++k) {
        if (k) s += ",";
        s += h.name(ctx[k]);
    }
    return s + "}";
}

}  // namespace

Hypergraph Hypergraph::build(const std::vector<std::vector<std::string>>& raw_contexts) {
    Hypergraph h;
    for (const auto& raw : raw_contexts) {
        if (raw.size() < 2)
            throw Error(Errc::EmptyContext, "context with fewer than two vertices");
        VertexSet ctx;
        ctx.reserve(raw.size());
        for (const auto& name : raw) {
            check_name(name);
            auto [it, inserted] = h.index_.try_emplace(name, static_cast<VertexId>(h.names_.size()));
            if (inserted) h.names_.push_back(name);
            ctx.push_back(it->second);
        }
        VertexSet sorted = ctx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(Errc::DuplicateVertex, "vertex repeated within a context");
        h.contexts_.push_back(std::move(ctx));
        h.sorted_.push_back(std::move(sorted));
    }

    const std::size_t n = h.names_.size();
    std::vector<Bitset> masks;
    masks.reserve(h.sorted_.size());
    for (const auto& ctx : h.sorted_) {
        Bitset m(n);
        for (VertexId v : ctx) m.set(v);
        masks.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i == j) continue;
            if (masks[i] == masks[j] && i < j)
                throw Error(Errc::DuplicateContext,
                            "duplicate context " + describe(h, h.contexts_[j]));
            if (masks[i] != masks[j] && masks[i].is_subset_of(masks[j]))
                throw Error(Errc::SubsetContext, "context " + describe(h, h.contexts_[i]) +
                                                     " is contained in " +
                                                     describe(h, h.contexts_[j]));
        }
    }

    h.incidence_.assign(n, {});
    for (ContextId c = 0; c < h.contexts_.size(); ++c)
        for (VertexId v : h.sorted_[c]) h.incidence_[v].push_back(c);
    return h;
}

std::optional<VertexId> Hypergraph::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Hypergraph::index_of(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw Error(Errc::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::vector<std::vector<std::string>> Hypergraph::named_contexts() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(contexts_.size());
    for (const auto& ctx : contexts_) {
        auto& names = out.emplace_back();
        for (VertexId v : ctx) names.push_back(names_[v]);
    }
    return out;
}

std::size_t Hypergraph::min_context_size() const {
    std::size_t m = contexts_.empty() ? 0 : contexts_.front().size();
    for (const auto& c : contexts_) m = std::min(m, c.size());
    return m;
}

std::size_t Hypergraph::max_context_size() const {
    std::size_t m = 0;
    for (const auto& c : contexts_) m = std::max(m, c.size());
    return m;
}

// ------------------------------------------------------------ operations

Graph two_section(const Hypergraph& h) {
    Graph g(h.vertex_names());
    for (const auto& ctx : h.sorted_contexts())
        for (std::size_t i = 0; i < ctx.size(); ++i)
            for (std::size_t j = i + 1; j < ctx.size(); ++j) g.add_edge(ctx[i], ctx[j]);
    return g;
}

namespace {

// Bron–Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, Bitset& r, Bitset p, Bitset x, std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        VertexSet clique;
        r.for_each([&](std::size_t v) { clique.push_back(static_cast<VertexId>(v)); });
        out.push_back(std::move(clique));
        return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    auto consider = [&](std::size_t u) {
        std::size_t score = (p & g.neighbors(static_cast<VertexId>(u))).count();
        if (!have_pivot || score > best) {
            pivot = u;
            best = score;
            have_pivot = true;
        }
    };
    p.for_each(consider);
    x.for_each(consider);

    Bitset candidates = p;
    candidates.subtract(g.neighbors(static_cast<VertexId>(pivot)));
    candidates.for_each([&](std::size_t v) {
        const Bitset& nv = g.neighbors(static_cast<VertexId>(v));
        r.set(v);
        bron_kerbosch(g, r, p & nv, x & nv, out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    Bitset r(n);
    Bitset p(n);
    for (std::size_t v = 0; v < n; ++v) p.set(v);
    bron_kerbosch(g, r, p, Bitset(n), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

std::vector<VertexSet> context_family(const Hypergraph& h) {
    auto fam = h.sorted_contexts();
    std::sort(fam.begin(), fam.end());
    return fam;
}

ShapeReport shape(const Hypergraph& h) {
    const Graph g = two_section(h);
    ShapeReport r;
    r.clique_number = clique_number(g);
    r.uniform = h.min_context_size() == h.max_context_size();
    r.conformal = maximal_cliques(g) == context_family(h);
    r.completion_ok = h.min_context_size() >= r.clique_number;
    r.max_degree = g.max_degree();
    return r;
}

std::vector<ContextCycle> four_cycle_lint(const Hypergraph& h) {
    const auto& ctx = h.sorted_contexts();
    const std::size_t m = ctx.size();
    std::vector<std::vector<VertexSet>> shared(m, std::vector<VertexSet>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            VertexSet common;
            std::set_intersection(ctx[i].begin(), ctx[i].end(), ctx[j].begin(), ctx[j].end(),
                                  std::back_inserter(common));
            shared[i][j] = common;
            shared[j][i] = std::move(common);
        }

    std::vector<ContextCycle> out;
    for (ContextId c0 = 0; c0 < m; ++c0)
        for (ContextId c1 = c0 + 1; c1 < m; ++c1) {
            if (shared[c0][c1].empty()) continue;
            for (ContextId c2 = c0 + 1; c2 < m; ++c2) {
                if (c2 == c1 || shared[c1][c2].empty()) continue;
                for (ContextId c3 = c1 + 1; c3 < m; ++c3) {
                    if (c3 == c2 || shared[c2][c3].empty() || shared[c3][c0].empty()) continue;
                    const std::array<ContextId, 4> cyc{c0, c1, c2, c3};
                    // pick one distinct intertwining vertex per consecutive pair
                    bool found = false;
                    for (VertexId v0 : shared[c0][c1]) {
                        for (VertexId v1 : shared[c1][c2]) {
                            if (v1 == v0) continue;
                            for (VertexId v2 : shared[c2][c3]) {
                                if (v2 == v0 || v2 == v1) continue;
                                for (VertexId v3 : shared[c3][c0]) {
                                    if (v3 == v0 || v3 == v1 || v3 == v2) continue;
                                    out.push_back({cyc, {v0, v1, v2, v3}});
                                    found = true;
                                    break;
                                }
                                if (found) break;
                            }
                            if (found) break;
                        }
                        if (found) break;
                    }
                }
            }
        }
    return out;
}

}  // namespace ohg
