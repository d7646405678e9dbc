#include <algorithm>
#include <sstream>

#include "ohg/gadgets.hpp"

namespace ohg {

namespace {

using Contexts = std::vector<std::vector<std::string>>;

std::vector<std::string> numbered(const std::string& prefix, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Contexts given as whitespace-separated names, one context per string.
Contexts parse_contexts(std::initializer_list<const char*> lines) {
    Contexts out;
    for (const char* line : lines) {
        std::istringstream in(line);
        auto& ctx = out.emplace_back();
        for (std::string name; in >> name;) ctx.push_back(name);
    }
    return out;
}

// Rows given as strings of 0/1 characters.
TravisMatrix parse_rows(std::vector<std::string> columns, std::initializer_list<const char*> rows) {
    std::vector<std::vector<int>> ints;
    for (const char* row : rows) {
        auto& r = ints.emplace_back();
        for (const char* p = row; *p; ++p)
            if (*p == '0' || *p == '1') r.push_back(*p - '0');
    }
    return TravisMatrix::from_ints(std::move(columns), ints);
}

Contexts triangle_contexts() {
    return parse_contexts({"a1 a2 a3", "a3 a4 a5", "a5 a6 a1"});
}

Contexts pentagon_contexts() {
    return parse_contexts({"a1 a2 a3", "a3 a4 a5", "a5 a6 a7", "a7 a8 a9", "a9 a10 a1"});
}

Contexts bug_contexts() {
    return parse_contexts({"v1 v2 v3", "v3 v4 v5", "v5 v6 v7", "v7 v8 v9", "v9 v10 v11",
                           "v11 v12 v1", "v4 v13 v10"});
}

Contexts g32_contexts() {
    return parse_contexts({"v1 v2 v3", "v3 v4 v5", "v5 v6 v7", "v7 v8 v9", "v9 v10 v11",
                           "v11 v12 v1", "v2 v15 v8", "v4 v13 v10", "v6 v14 v12",
                           "v13 v14 v15"});
}

// Extension contexts of G32 in set-label form; vertex k carries the pair of
// states that make it true.
Contexts g32x_contexts() {
    const std::vector<std::pair<int, int>> labels = {
        {1, 2}, {3, 4}, {5, 6}, {1, 3}, {2, 4}, {1, 5}, {3, 6}, {2, 5},
        {1, 4}, {2, 6}, {3, 5}, {4, 6}, {4, 5}, {2, 3}, {1, 6}};
    auto vertex_of = [&](std::pair<int, int> label) {
        auto it = std::find(labels.begin(), labels.end(), label);
        return "v" + std::to_string(it - labels.begin() + 1);
    };
    const std::vector<std::vector<std::pair<int, int>>> extension = {
        {{1, 2}, {3, 6}, {4, 5}},
        {{1, 4}, {2, 3}, {5, 6}},
        {{1, 3}, {2, 5}, {4, 6}},
        {{1, 5}, {2, 6}, {3, 4}},
        {{1, 6}, {2, 4}, {3, 5}},
    };
    Contexts out = g32_contexts();
    for (const auto& ctx : extension) {
        auto& names = out.emplace_back();
        for (auto label : ctx) names.push_back(vertex_of(label));
    }
    return out;
}

Contexts underlying_contexts() {
    return parse_contexts({"a b c", "a' b' c'", "a'' b'' c''", "a a' a''", "b b' b''",
                           "c c' c''"});
}

Fixture make_k3() {
    return {"k3", Hypergraph::build(parse_contexts({"a b c"})), std::nullopt,
            "single context of three vertices"};
}

Fixture make_triangle() {
    auto h = Hypergraph::build(triangle_contexts());
    auto t = parse_rows(numbered("a", 6), {
                                              "100100",
                                              "001001",
                                              "010010",
                                              "010101",
                                          });
    return {"triangle", std::move(h), std::move(t), "triangle logic, 4 two-valued states"};
}

Fixture make_pentagon() {
    auto h = Hypergraph::build(pentagon_contexts());
    auto t = parse_rows(numbered("a", 10), {
                                               "1001010100",
                                               "1001001000",
                                               "1000100100",
                                               "0101010101",
                                               "0101010010",
                                               "0101001001",
                                               "0100100101",
                                               "0100100010",
                                               "0010010101",
                                               "0010010010",
                                               "0010001001",
                                           });
    return {"pentagon", std::move(h), std::move(t),
            "house/pentagon/pentagram logic, 11 two-valued states"};
}

Fixture make_bug() {
    auto h = Hypergraph::build(bug_contexts());
    auto t = parse_rows(numbered("v", 13), {
                                               "1001010010000",
                                               "1000100101000",
                                               "1000100010001",
                                               "0101010100100",
                                               "0101010010010",
                                               "0101001000100",
                                               "0100100101010",
                                               "0100100100101",
                                               "0100100010011",
                                               "0010010101010",
                                               "0010010100101",
                                               "0010010010011",
                                               "0010001001010",
                                               "0010001000101",
                                           });
    return {"bug", std::move(h), std::move(t),
            "Specker bug, true-implies-false gadget with terminals v1 and v7"};
}

TravisMatrix g32_matrix() {
    return parse_rows(numbered("v", 15), {
                                             "100101001000001",
                                             "100010010100010",
                                             "010100100010010",
                                             "010010001001100",
                                             "001001010010100",
                                             "001000100101001",
                                         });
}

Fixture make_g32() {
    return {"g32", Hypergraph::build(g32_contexts()), g32_matrix(),
            "Greechie's G32: 15 vertices, 10 contexts, 6 two-valued states, not 3-colourable"};
}

Fixture make_g32x() {
    return {"g32x", Hypergraph::build(g32x_contexts()), g32_matrix(),
            "G32 with five extension contexts; same two-valued states as g32"};
}

Fixture make_ghz() {
    std::vector<std::string> cols = {"uuu", "uuv", "uvu", "uvv", "ucc", "vcc", "ucd", "vcd",
                                     "cuc", "cvc", "cud", "cvd", "ccu", "ccv", "cdu", "cdv"};
    auto t = parse_rows(std::move(cols), {
                                             "1000001000010100",
                                             "1000000101000010",
                                             "0100001010000001",
                                             "0100000100101000",
                                             "0010100001000001",
                                             "0010010000011000",
                                             "0001100000100100",
                                             "0001010010000010",
                                         });
    return {"ghz", std::nullopt, std::move(t),
            "tight GHZ sublogic, state table only (16 vertices, 8 states)"};
}

Fixture make_underlying() {
    auto h = Hypergraph::build(underlying_contexts());
    auto t = parse_rows({"a", "b", "c", "a'", "b'", "c'", "a''", "b''", "c''"},
                        {
                            "100010001",
                            "100001010",
                            "010100001",
                            "010001100",
                            "001100010",
                            "001010100",
                        });
    return {"underlying", std::move(h), std::move(t),
            "3x3 grid of contexts underlying the bound construction, 6 states"};
}

Fixture make_fig4() {
    return {"fig4", build_fig4(), std::nullopt,
            "43-vertex true-implies-false gadget with terminals a1 and a11 (two spliced bugs)"};
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"k3",  "triangle", "pentagon",   "bug", "g32",
                                                   "g32x", "ghz",     "underlying", "fig4"};
    return names;
}

Fixture fixture(std::string_view name) {
    if (name == "k3") return make_k3();
    if (name == "triangle") return make_triangle();
    if (name == "pentagon") return make_pentagon();
    if (name == "bug") return make_bug();
    if (name == "g32") return make_g32();
    if (name == "g32x") return make_g32x();
    if (name == "ghz") return make_ghz();
    if (name == "underlying") return make_underlying();
    if (name == "fig4") return make_fig4();
    throw Error(Errc::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::vector<std::string>> specker_bug_contexts(const std::string& end1,
                                                           const std::string& end7,
                                                           const std::string& prefix) {
    auto rename = [&](const std::string& v) {
        if (v == "v1") return end1;
        if (v == "v7") return end7;
        return prefix + v;
    };
    Contexts out = bug_contexts();
    for (auto& ctx : out)
        for (auto& v : ctx) v = rename(v);
    return out;
}

}  // namespace ohg
