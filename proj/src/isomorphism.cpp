#include <algorithm>
#include <map>
#include <set>

#include "ohg/core.hpp"

namespace ohg {

namespace {

using Signature = std::vector<std::size_t>;

// Joint colour refinement on the vertex/context incidence structure of both
// hypergraphs, so that colour ids are comparable across the pair.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Hypergraph& a,
                                                                     const Hypergraph& b) {
    auto initial = [](const Hypergraph& h) {
        std::vector<Signature> sig(h.vertex_count());
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            for (ContextId c : h.contexts_of(v)) sig[v].push_back(h.contexts()[c].size());
            std::sort(sig[v].begin(), sig[v].end());
        }
        return sig;
    };

    auto intern = [](const std::vector<Signature>& sa, const std::vector<Signature>& sb) {
        std::map<Signature, std::size_t> ids;
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<std::size_t> ca, cb;
        for (const auto& s : sa) ca.push_back(ids.at(s));
        for (const auto& s : sb) cb.push_back(ids.at(s));
        return std::tuple{std::move(ca), std::move(cb), next};
    };

    auto [ca, cb, classes] = intern(initial(a), initial(b));

    auto step = [](const Hypergraph& h, const std::vector<std::size_t>& colour) {
        std::vector<Signature> ctx_sig(h.context_count());
        for (ContextId c = 0; c < h.context_count(); ++c) {
            for (VertexId v : h.contexts()[c]) ctx_sig[c].push_back(colour[v]);
            std::sort(ctx_sig[c].begin(), ctx_sig[c].end());
        }
        std::vector<Signature> sig(h.vertex_count());
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            std::vector<Signature> parts;
            for (ContextId c : h.contexts_of(v)) parts.push_back(ctx_sig[c]);
            std::sort(parts.begin(), parts.end());
            sig[v].push_back(colour[v]);
            for (const auto& p : parts) {
                sig[v].push_back(p.size());
                sig[v].insert(sig[v].end(), p.begin(), p.end());
            }
        }
        return sig;
    };

    while (true) {
        auto [na, nb, next] = intern(step(a, ca), step(b, cb));
        bool stable = next == classes;
        ca = std::move(na);
        cb = std::move(nb);
        classes = next;
        if (stable) break;
    }
    return {ca, cb};
}

class Matcher {
public:
    Matcher(const Hypergraph& a, const Hypergraph& b, std::vector<std::size_t> colour_a,
            std::vector<std::size_t> colour_b)
        : a_(a), b_(b), ga_(two_section(a)), gb_(two_section(b)),
          colour_a_(std::move(colour_a)), colour_b_(std::move(colour_b)),
          map_(a.vertex_count(), kUnmapped), used_(b.vertex_count(), false) {
        for (const auto& ctx : b.sorted_contexts()) contexts_b_.insert(ctx);
        order_vertices();
    }

    std::optional<std::vector<VertexId>> run() {
        if (search(0)) return map_;
        return std::nullopt;
    }

private:
    static constexpr VertexId kUnmapped = ~VertexId{0};

    // Rarest colour first, then grow along adjacency so that checks bite early.
    void order_vertices() {
        const std::size_t n = a_.vertex_count();
        std::map<std::size_t, std::size_t> class_size;
        for (auto c : colour_a_) ++class_size[c];
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> links(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best == n) {
                    best = v;
                    continue;
                }
                auto key = [&](std::size_t u) {
                    return std::tuple{-static_cast<long>(links[u]), class_size[colour_a_[u]], u};
                };
                if (key(v) < key(best)) best = v;
            }
            placed[best] = true;
            order_.push_back(static_cast<VertexId>(best));
            ga_.neighbors(static_cast<VertexId>(best)).for_each([&](std::size_t u) { ++links[u]; });
        }
    }

    bool consistent(VertexId u, VertexId image) const {
        for (VertexId w = 0; w < map_.size(); ++w) {
            if (map_[w] == kUnmapped) continue;
            if (ga_.has_edge(u, w) != gb_.has_edge(image, map_[w])) return false;
        }
        for (ContextId c : a_.contexts_of(u)) {
            VertexSet mapped;
            bool complete = true;
            for (VertexId w : a_.sorted_contexts()[c]) {
                VertexId t = w == u ? image : map_[w];
                if (t == kUnmapped) {
                    complete = false;
                    break;
                }
                mapped.push_back(t);
            }
            if (!complete) continue;
            std::sort(mapped.begin(), mapped.end());
            if (!contexts_b_.count(mapped)) return false;
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order_.size()) return true;
        const VertexId u = order_[depth];
        for (VertexId t = 0; t < b_.vertex_count(); ++t) {
            if (used_[t] || colour_b_[t] != colour_a_[u]) continue;
            if (!consistent(u, t)) continue;
            map_[u] = t;
            used_[t] = true;
            if (search(depth + 1)) return true;
            map_[u] = kUnmapped;
            used_[t] = false;
        }
        return false;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    Graph ga_;
    Graph gb_;
    std::vector<std::size_t> colour_a_;
    std::vector<std::size_t> colour_b_;
    std::set<VertexSet> contexts_b_;
    std::vector<VertexId> order_;
    std::vector<VertexId> map_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<VertexId>> is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.context_count() != b.context_count())
        return std::nullopt;
    auto sizes = [](const Hypergraph& h) {
        std::vector<std::size_t> s;
        for (const auto& c : h.contexts()) s.push_back(c.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b)) return std::nullopt;

    auto [ca, cb] = refine(a, b);
    auto histogram = [](std::vector<std::size_t> c) {
        std::sort(c.begin(), c.end());
        return c;
    };
    if (histogram(ca) != histogram(cb)) return std::nullopt;

    return Matcher(a, b, std::move(ca), std::move(cb)).run();
}

}  // namespace ohg
