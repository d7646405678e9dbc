#include "ohg/gadgets.hpp"

#include <array>

namespace ohg {

namespace {

using Contexts = std::vector<std::vector<std::string>>;

struct Terminals {
    VertexId head;
    VertexId tail;
};

Terminals check_spec(const BindSpec& spec) {
    const Hypergraph& g = spec.gadget;
    const VertexId head = g.index_of(spec.head);
    const VertexId tail = g.index_of(spec.tail);
    if (head == tail) throw Error(Errc::InvalidArgument, "head and tail must differ");
    if (two_section(g).has_edge(head, tail))
        throw Error(Errc::AdjacentTerminals,
                    "terminals " + spec.head + " and " + spec.tail + " share a context");
    const GadgetScan scan = gadget_scan(g, enumerate_states(g));
    if (!scan.tifs.count({head, tail}))
        throw Error(Errc::NotTifs, "(" + spec.head + ", " + spec.tail +
                                       ") is not a true-implies-false pair");
    return {head, tail};
}

// Appends a copy of the gadget with head/tail renamed and other vertices
// prefixed by "G<copy>.".
void append_copy(Contexts& out, const BindSpec& spec, const Terminals& t, int copy,
                 const std::string& head_name, const std::string& tail_name) {
    const Hypergraph& g = spec.gadget;
    const std::string prefix = "G" + std::to_string(copy) + ".";
    for (const auto& ctx : g.contexts()) {
        auto& names = out.emplace_back();
        for (VertexId v : ctx) {
            if (v == t.head)
                names.push_back(head_name);
            else if (v == t.tail)
                names.push_back(tail_name);
            else
                names.push_back(prefix + g.name(v));
        }
    }
}

// Layer with corners (a, b, c) made of copies first_copy .. first_copy+2.
void append_layer(Contexts& out, const BindSpec& spec, const Terminals& t, int first_copy,
                  const std::array<std::string, 3>& corner) {
    append_copy(out, spec, t, first_copy, corner[0], corner[1]);
    append_copy(out, spec, t, first_copy + 1, corner[1], corner[2]);
    append_copy(out, spec, t, first_copy + 2, corner[2], corner[0]);
}

}  // namespace

Hypergraph layer(const BindSpec& spec) {
    const Terminals t = check_spec(spec);
    Contexts contexts;
    append_layer(contexts, spec, t, 1, {"a", "b", "c"});
    return Hypergraph::build(contexts);
}

Hypergraph bind(const BindSpec& spec) {
    const Terminals t = check_spec(spec);
    if (shape(spec.gadget).clique_number != 3)
        throw Error(Errc::RankMismatch, "binding contexts are triples; gadget clique number must be 3");
    Contexts contexts;
    append_layer(contexts, spec, t, 1, {"a", "b", "c"});
    append_layer(contexts, spec, t, 4, {"a'", "b'", "c'"});
    append_layer(contexts, spec, t, 7, {"a''", "b''", "c''"});
    contexts.push_back({"a", "a'", "a''"});
    contexts.push_back({"b", "b'", "b''"});
    contexts.push_back({"c", "c'", "c''"});
    return Hypergraph::build(contexts);
}

BigCount predicted_bind_count(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t n_n) {
    BigCount a = n_a, b = n_b, n = n_n;
    return 6 * a * a * a * b * b * b * n * n * n;
}

namespace {

// Ring of ten contexts through a1..a20 with the chord {a4, a21, a18}, plus one
// Specker bug between a1 and a8 and one between a1 and a14. `flip_first` and
// `flip_second` choose which bug terminal sits on a1.
Hypergraph fig4_variant(bool flip_first, bool flip_second) {
    Contexts contexts;
    for (int k = 1; k <= 19; k += 2) {
        const int third = k + 2 > 20 ? 1 : k + 2;
        contexts.push_back({"a" + std::to_string(k), "a" + std::to_string(k + 1),
                            "a" + std::to_string(third)});
    }
    contexts.push_back({"a4", "a21", "a18"});
    auto splice = [&](const std::string& far, bool flip, const std::string& prefix) {
        auto bug = flip ? specker_bug_contexts(far, "a1", prefix)
                        : specker_bug_contexts("a1", far, prefix);
        contexts.insert(contexts.end(), bug.begin(), bug.end());
    };
    splice("a8", flip_first, "x");
    splice("a14", flip_second, "y");
    return Hypergraph::build(contexts);
}

}  // namespace

Hypergraph build_fig4() {
    // The drawing leaves the orientation of each spliced bug open. Keep the
    // first variant with 2589 states and profile (45, 504, 2040) at (a1, a11);
    // every other matching variant must be isomorphic to it.
    std::optional<Hypergraph> chosen;
    for (int variant = 0; variant < 4; ++variant) {
        Hypergraph h = fig4_variant(variant & 1, variant & 2);
        const TravisMatrix t = enumerate_states(h);
        if (t.row_count() != 2589) continue;
        const GadgetProfile p = gadget_profile(t, "a1", "a11");
        if (p.n_a != 45 || p.n_b != 504 || p.n_n != 2040) continue;
        if (!chosen) {
            chosen = std::move(h);
        } else if (!is_isomorphic(*chosen, h)) {
            throw Error(Errc::InvalidArgument,
                        "inequivalent bug orientations both match the 43-vertex gadget counts");
        }
    }
    if (!chosen)
        throw Error(Errc::InvalidArgument, "no bug orientation reproduces the 43-vertex gadget counts");
    return *std::move(chosen);
}

}  // namespace ohg
