#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ohg/core.hpp"
#include "ohg/states.hpp"

namespace ohg {

using BigCount = boost::multiprecision::cpp_int;

/// A catalogued hypergraph and/or its state table as printed in the literature.
/// Reference tables keep the printed row order.
struct Fixture {
    std::string name;
    std::optional<Hypergraph> hypergraph;
    std::optional<TravisMatrix> travis;
    std::string notes;
};

/// Known names: k3, triangle, pentagon, bug, g32, g32x, ghz, underlying, fig4.
/// Throws UnknownFixture.
Fixture fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// A gadget with two designated terminals (head, tail).
struct BindSpec {
    Hypergraph gadget;
    std::string head;
    std::string tail;
};

/// Three copies G1, G2, G3 of the gadget folded into a triangle: the corners
/// are a = head(G1) = tail(G3), b = head(G2) = tail(G1), c = head(G3) = tail(G2).
/// Copy k's other vertices are renamed "G<k>.<name>". Throws AdjacentTerminals
/// or NotTifs (checked by enumerating the gadget's states).
Hypergraph layer(const BindSpec& spec);

/// Three layers (corners a b c, a' b' c', a'' b'' c'', copies G1..G9) bound by
/// the contexts {a,a',a''}, {b,b',b''}, {c,c',c''}. The gadget must have
/// clique number 3 (RankMismatch otherwise).
Hypergraph bind(const BindSpec& spec);

/// 6 * nA^3 * nB^3 * nN^3, the state count of bind() for a TIFS gadget with
/// the given profile.
BigCount predicted_bind_count(std::uint64_t n_a, std::uint64_t n_b, std::uint64_t n_n);

/// The 43-vertex, 25-context long-range TIFS gadget with terminals a1 and a11.
Hypergraph build_fig4();

/// The Specker bug with terminals renamed and other vertices prefixed; used to
/// splice bugs into larger gadgets.
std::vector<std::vector<std::string>> specker_bug_contexts(const std::string& end1,
                                                           const std::string& end7,
                                                           const std::string& prefix);

}  // namespace ohg
