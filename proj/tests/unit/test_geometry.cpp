#include <doctest.h>

#include <cmath>
#include <random>

#include "ohg/gadgets.hpp"
#include "ohg/geometry.hpp"

using namespace ohg;

namespace {

using Matrix = std::vector<std::vector<double>>;

// Random orthogonal matrix: Gram-Schmidt on Gaussian columns.
Matrix random_rotation(std::size_t n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    Matrix q;
    while (q.size() < n) {
        std::vector<double> v(n);
        for (auto& x : v) x = g(rng);
        for (const auto& u : q) {
            double d = 0;
            for (std::size_t i = 0; i < n; ++i) d += u[i] * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= d * u[i];
        }
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-6) continue;
        for (auto& x : v) x /= norm;
        q.push_back(v);
    }
    return q;
}

VectorLabeling transform(const VectorLabeling& l, const Matrix& q) {
    VectorLabeling out{l.dimension, {}};
    for (const auto& [name, v] : l.vectors) {
        std::vector<double> w(l.dimension, 0.0);
        for (std::size_t i = 0; i < l.dimension; ++i)
            for (std::size_t j = 0; j < l.dimension; ++j) w[i] += q[i][j] * v[j];
        out.vectors[name] = w;
    }
    return out;
}

using PairSet = std::set<std::pair<std::string, std::string>>;

PairSet names(const std::vector<NamedPair>& v) {
    PairSet s;
    for (const auto& p : v) s.emplace(p.first, p.second);
    return s;
}

bool same(const RepresentationReport& a, const RepresentationReport& b) {
    return names(a.adjacent_not_orthogonal) == names(b.adjacent_not_orthogonal) &&
           names(a.nonadjacent_orthogonal) == names(b.nonadjacent_orthogonal) &&
           names(a.colinear) == names(b.colinear);
}

VectorLabeling basis3() { return {3, {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}}}; }

// A faithful labelling of two triples sharing a vertex: {x, y, z}, {z, u, w}.
VectorLabeling two_contexts() {
    const double s = std::sqrt(0.5);
    return {3,
            {{"x", {1, 0, 0}}, {"y", {0, 1, 0}}, {"z", {0, 0, 1}}, {"u", {s, s, 0}}, {"w", {s, -s, 0}}}};
}

}  // namespace

TEST_CASE("standard basis labels K3") {
    auto k3 = fixture("k3").hypergraph.value();
    auto r = verify_for(k3, basis3());
    CHECK(r.valid());
}

TEST_CASE("colinear and non-orthogonal labels are reported") {
    auto k3 = fixture("k3").hypergraph.value();
    VectorLabeling l{3, {{"a", {1, 0, 0}}, {"b", {1, 0, 0}}, {"c", {0, 1, 0}}}};
    auto r = verify_for(k3, l);
    CHECK_FALSE(r.valid());
    CHECK(names(r.colinear) == PairSet{{"a", "b"}});
    CHECK(names(r.adjacent_not_orthogonal) == PairSet{{"a", "b"}});
    CHECK(r.adjacent_not_orthogonal[0].value == doctest::Approx(1.0));
}

TEST_CASE("orthogonal but non-adjacent vertices are reported") {
    auto h = Hypergraph::build({{"x", "y", "z"}, {"z", "u", "w"}});
    CHECK(verify_for(h, two_contexts()).valid());
    auto bad = two_contexts();
    bad.vectors["u"] = {1, 0, 0};  // colinear with x and orthogonal to y
    auto r = verify_for(h, bad);
    CHECK(names(r.colinear) == PairSet{{"x", "u"}});
    CHECK(names(r.nonadjacent_orthogonal).count({"y", "u"}));
}

TEST_CASE("labelling errors") {
    auto k3 = fixture("k3").hypergraph.value();
    auto code = [&](VectorLabeling l, double tol = 1e-9) {
        try {
            verify_for(k3, l, tol);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    auto missing = basis3();
    missing.vectors.erase("c");
    CHECK(code(missing) == Errc::MissingVertex);
    auto shortv = basis3();
    shortv.vectors["b"] = {0, 1};
    CHECK(code(shortv) == Errc::DimensionMismatch);
    auto zero = basis3();
    zero.vectors["b"] = {0, 0, 0};
    CHECK(code(zero) == Errc::InvalidArgument);
    CHECK(code(basis3(), 0.0) == Errc::InvalidArgument);
}

TEST_CASE("reports are invariant under rotations and rescaling") {
    std::mt19937 rng(77);
    auto h = Hypergraph::build({{"x", "y", "z"}, {"z", "u", "w"}});
    auto bad = two_contexts();
    bad.vectors["u"] = {1, 0, 0};
    for (const auto& l : {two_contexts(), bad}) {
        const auto base = verify_for(h, l);
        for (int k = 0; k < 50; ++k) {
            auto rotated = transform(l, random_rotation(3, rng));
            CHECK(same(verify_for(h, rotated), base));
            std::uniform_real_distribution<double> scale(0.01, 100.0);
            for (auto& [name, v] : rotated.vectors) {
                double f = scale(rng) * (rng() % 2 ? 1 : -1);
                for (auto& x : v) x *= f;
            }
            CHECK(same(verify_for(h, rotated), base));
        }
    }
}

TEST_CASE("a context through both bug terminals defeats every labelling tried") {
    auto ctx = fixture("bug").hypergraph.value().named_contexts();
    ctx.push_back({"v1", "v7", "x"});
    auto h = Hypergraph::build(ctx);
    REQUIRE_FALSE(four_cycle_lint(h).empty());
    std::mt19937 rng(5);
    std::normal_distribution<double> g;
    for (int k = 0; k < 20; ++k) {
        VectorLabeling l{3, {}};
        for (VertexId v = 0; v < h.vertex_count(); ++v) l.vectors[h.name(v)] = {g(rng), g(rng), g(rng)};
        CHECK_FALSE(verify_for(h, l).valid());
    }
}

TEST_CASE("compensated dot product") {
    std::vector<double> x{1e16, 1.0, -1e16}, y{1.0, 1.0, 1.0};
    CHECK(dot(x, y) == 1.0);
    CHECK(dot({3, 4}, {3, 4}) == 25.0);
}
