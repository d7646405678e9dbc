#include <doctest.h>

#include <random>

#include "ohg/coloring.hpp"
#include "ohg/gadgets.hpp"
#include "ohg/reconstruct.hpp"
#include "oracles.hpp"

using namespace ohg;

namespace {

Hypergraph fx(const char* name) { return fixture(name).hypergraph.value(); }

// Reference tables in the printed row order, columns in vertex order.
TravisMatrix reference(const char* name) {
    auto f = fixture(name);
    return align_columns(*f.travis, *f.hypergraph);
}

std::vector<std::size_t> one_based(const RowSelection& s) {
    std::vector<std::size_t> out;
    for (auto r : s.rows) out.push_back(r + 1);
    return out;
}

// Naive check: some choice of n distinct rows has column sums all <= 1
// (`cover`: all == 1).
bool brute_rows(const TravisMatrix& t, std::size_t n, bool cover) {
    const std::size_t k = t.column_count();
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == n) {
            for (std::size_t c = 0; c < k; ++c) {
                int sum = 0;
                for (auto r : pick) sum += t.at(r, c);
                if (sum > 1 || (cover && sum != 1)) return false;
            }
            return true;
        }
        for (std::size_t r = from; r < t.row_count(); ++r) {
            pick.push_back(r);
            if (self(self, r + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("algorithm1 on the reference tables") {
    auto tri = algorithm1(reference("triangle"), 3);
    REQUIRE(tri);
    CHECK(one_based(*tri) == std::vector<std::size_t>{1, 2, 3});

    auto pent = algorithm1(reference("pentagon"), 3);
    REQUIRE(pent);
    CHECK(one_based(*pent) == std::vector<std::size_t>{1, 8, 11});

    CHECK_FALSE(algorithm1(reference("g32"), 3));

    auto ghz = fixture("ghz").travis.value();
    auto g = algorithm1(ghz, 4);
    REQUIRE(g);
    CHECK(one_based(*g) == std::vector<std::size_t>{1, 4, 5, 8});
    CHECK(verify_rows(ghz, *g));
}

TEST_CASE("algorithm1 finds n disjoint rows exactly when they exist") {
    // (table, size of every context)
    std::vector<std::pair<TravisMatrix, std::size_t>> tables;
    for (const char* name : {"k3", "triangle", "pentagon", "bug", "g32", "g32x", "underlying"})
        tables.emplace_back(enumerate_states(fx(name)), 3);
    tables.emplace_back(fixture("ghz").travis.value(), 4);
    std::mt19937 rng(41);
    for (int k = 0; k < 40; ++k) tables.emplace_back(enumerate_states(oracle::random_pasting(rng, 14, 7)), 3);
    for (const auto& [t, size] : tables) {
        if (t.row_count() > 40) continue;
        for (std::size_t n : {2u, 3u, 4u}) {
            auto a = algorithm1(t, n);
            CHECK(a.has_value() == brute_rows(t, n, false));
            if (!a) continue;
            CHECK(a->rows.size() == n);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y) CHECK_FALSE(t.row(a->rows[x]).intersects(t.row(a->rows[y])));
        }
        // at the context size, disjoint states partition the vertices
        CHECK(algorithm1(t, size).has_value() == brute_rows(t, size, true));
        if (auto a = algorithm1(t, size)) CHECK(verify_rows(t, *a));
    }
}

TEST_CASE("algorithm1 succeeds iff the chromatic number equals the clique number") {
    std::vector<std::pair<Hypergraph, TravisMatrix>> cases;
    for (const char* name : {"k3", "triangle", "pentagon", "bug", "g32", "g32x", "underlying", "fig4"}) {
        auto h = fx(name);
        cases.emplace_back(h, enumerate_states(h));
    }
    auto ghz = fixture("ghz").travis.value();
    auto ghz_h = reconstruct(ghz, 4, nullptr).filtered_hypergraph();
    cases.emplace_back(ghz_h, align_columns(ghz, ghz_h));

    for (const auto& [h, t] : cases) {
        CAPTURE(h.named_contexts().size());
        const std::size_t n = shape(h).clique_number;
        const bool alg = algorithm1(t, n).has_value();
        CHECK(alg == (exact_chromatic(h) == n));
        if (alg) {
            Coloring c = coloring_from_rows(t, *algorithm1(t, n));
            CHECK(is_proper(h, c));
            CHECK(c.color_count() == n);
            for (std::size_t k = 1; k <= n; ++k) CHECK(is_two_valued_state(h, color_to_state(h, c, k)));
        }
    }
}

TEST_CASE("exact chromatic number agrees with plain backtracking") {
    std::mt19937 rng(12);
    for (int k = 0; k < 40; ++k) {
        auto h = oracle::random_pasting(rng, 14, 8);
        auto c = optimal_coloring(h);
        CHECK(is_proper(h, c));
        CHECK(c.color_count() == oracle::brute_chromatic(oracle::adjacency(h)));
        CHECK(exact_chromatic(h) >= shape(h).clique_number);
    }
    CHECK(exact_chromatic(fx("g32")) == 4);
    CHECK(exact_chromatic(fx("bug")) == 3);
    CHECK(oracle::brute_chromatic(oracle::adjacency(fx("g32"))) == 4);
}

TEST_CASE("Brooks bound") {
    CHECK(brooks_bound(fx("g32")) == 4);
    CHECK(brooks_bound(fx("k3")) == 3);  // complete: max degree + 1
    auto odd_cycle = Hypergraph::build({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
    CHECK(brooks_bound(odd_cycle) == 3);
    auto split = Hypergraph::build({{"a", "b", "c"}, {"d", "e", "f"}});
    try {
        brooks_bound(split);
        FAIL("disconnected input accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Disconnected);
    }
    std::mt19937 rng(4);
    for (int k = 0; k < 30; ++k) {
        auto h = oracle::random_pasting(rng, 14, 8);
        CHECK(exact_chromatic(h) <= brooks_bound(h));
    }
}

TEST_CASE("partitions and colourings convert both ways") {
    auto pent = fx("pentagon");
    auto t = enumerate_states(pent);
    auto a = algorithm1(t, 3).value();
    Coloring c = coloring_from_rows(t, a);
    PartitionSystem p = partition_from_coloring(pent, c);
    CHECK(p.cells.size() == 3);
    CHECK(coloring_from_partition(p) == c);

    // improper
    Coloring bad{std::vector<std::size_t>(pent.vertex_count(), 1)};
    CHECK_FALSE(is_proper(pent, bad));
    try {
        partition_from_coloring(pent, bad);
        FAIL("improper colouring accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotProper);
    }
}

TEST_CASE("a proper colouring whose class misses a context is not dominating") {
    // with four colours on triples, some class misses some context
    auto g32 = fx("g32");
    auto c = optimal_coloring(g32);
    REQUIRE(c.color_count() == 4);
    try {
        partition_from_coloring(g32, c);
        FAIL("non-dominating colouring accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDominating);
    }
}

TEST_CASE("relaxed colouring of G32") {
    auto g32 = fx("g32");
    auto t = reference("g32");
    auto c = relaxed_coloring(t, g32, 4);
    REQUIRE(c);
    CHECK(is_proper(g32, *c));
    CHECK(c->color_count() == 4);
    // the first class is the first state
    CHECK(color_to_state(g32, *c, 1) == t.row(0));
    try {
        color_to_state(g32, *c, 4);
        FAIL("colour 4 of G32 is a state?");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAState);
    }
    CHECK_FALSE(relaxed_coloring(t, g32, 3));
}

TEST_CASE("row selections") {
    auto t = reference("triangle");
    CHECK(verify_rows(t, RowSelection{{0, 1, 2}}));
    CHECK_FALSE(verify_rows(t, RowSelection{{0, 3}}));
    CHECK_THROWS_AS(verify_rows(t, RowSelection{{0, 9}}), Error);
    CHECK_THROWS_AS(coloring_from_rows(t, RowSelection{{0, 3}}), Error);
}
