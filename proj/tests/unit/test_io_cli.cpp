#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "ohg/cli.hpp"
#include "ohg/gadgets.hpp"
#include "ohg/io.hpp"

using namespace ohg;

namespace {

std::string data(const std::string& file) { return std::string(OHG_DATA_DIR) + "/" + file; }

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Errc parse_error(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("context lists round-trip") {
    for (const char* name : {"k3", "triangle", "bug", "g32", "fig4"}) {
        auto h = fixture(name).hypergraph.value();
        auto text = io::write_ohg(h);
        CHECK(io::write_ohg(io::parse_ohg(text)) == text);
        CHECK(io::parse_ohg(text).named_contexts() == h.named_contexts());
    }
    auto h = io::parse_ohg("# comment\n  x   y z  # trailing\n\nz u w\n");
    CHECK(h.context_count() == 2);
    CHECK(io::write_ohg(h) == "x y z\nz u w\n");
}

TEST_CASE("matrices round-trip") {
    auto t = enumerate_states(fixture("bug").hypergraph.value());
    auto text = io::write_matrix(t);
    CHECK(io::parse_matrix(text) == t);
    CHECK(io::write_matrix(io::parse_matrix(text)) == text);
    CHECK(io::looks_like_matrix(text));
    CHECK_FALSE(io::looks_like_matrix("a b c\n"));
}

TEST_CASE("malformed input") {
    CHECK(parse_error([] { io::parse_ohg("# nothing\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::parse_matrix("0 1\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::parse_matrix("vertices: a b\n0 2\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::parse_matrix("vertices: a b\n0 1 1\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::parse_vectors("a: 1 0\na: 0 1\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::parse_vectors("a: 1 x\n"); }) == Errc::ParseError);
    CHECK(parse_error([] { io::read_file(data("missing.ohg")); }) == Errc::InvalidArgument);
}

TEST_CASE("vector files") {
    auto l = io::parse_vectors(io::read_file(data("k3.vec")));
    CHECK(l.dimension == 3);
    CHECK(l.vectors.at("b") == std::vector<double>{0, 1, 0});
}

TEST_CASE("data files match the generators byte for byte") {
    for (const char* name : {"k3", "triangle", "pentagon", "bug", "g32", "g32x", "underlying", "fig4"})
        CHECK(run({"gadget", name}).out == io::read_file(data(std::string(name) + ".ohg")));
    for (const char* name : {"triangle", "pentagon", "bug", "g32", "underlying"})
        CHECK(run({"gadget", name, "--matrix"}).out == io::read_file(data(std::string(name) + ".mat")));
    CHECK(run({"gadget", "ghz"}).out == io::read_file(data("ghz.mat")));
    CHECK(run({"compose", "bind", "@bug", "--head", "v1", "--tail", "v7"}).out ==
          io::read_file(data("bind_bug.ohg")));
}

TEST_CASE("cli: state counts and gadget counts") {
    auto r = run({"states", data("bug.ohg"), "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "14\n");
    CHECK(run({"states", data("bug.mat"), "--count-only"}).code == 2);  // tables are not enumerated
    CHECK(run({"count", "--na", "3", "--nb", "3", "--nn", "8"}).out == "2239488\n");
    CHECK(run({"count", "--na", "45", "--nb", "504", "--nn", "2040"}).out == "594252343817330688000000\n");
}

TEST_CASE("cli: colouring G32 with three colours fails") {
    auto r = run({"color", data("g32.ohg"), "--n", "3", "--algorithm", "paper"});
    CHECK(r.code == 1);
    CHECK(r.out.find("no 3-coloring from two-valued states") != std::string::npos);
    auto ok = run({"color", "@pentagon", "--n", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("rows: 1 8 11") != std::string::npos);
    auto dot = run({"--format", "dot", "color", "@k3", "--n", "3"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph", 0) == 0);
    CHECK(run({"color", "@g32", "--n", "4", "--algorithm", "exact"}).code == 0);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"states", data("missing.ohg")}).code == 2);
    CHECK(run({"--format", "dot", "classify", "@bug"}).code == 2);
    CHECK(run({"--jobs", "0", "states", "@bug"}).code == 2);
    auto r = run({"gadget", "nope"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nope") != std::string::npos);
    CHECK(run({"classify", "@nope"}).err.find("UnknownFixture") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: json output") {
    auto c = nlohmann::json::parse(run({"--format", "json", "classify", "@bug"}).out);
    CHECK(c["nTS"] == 14);
    CHECK(c["verdicts"]["separable"] == true);
    CHECK(c["verdicts"]["perfectlySeparable"] == false);

    auto r = nlohmann::json::parse(run({"--format", "json", "reconstruct", "@bug"}).out);
    CHECK(r["verdicts"]["reconstruct"] == "Reconstructable");
    CHECK(r["contexts"].size() == 7);

    auto t = run({"reconstruct", "@triangle"});
    CHECK(t.code == 1);
    CHECK(t.out.find("extra: {a1 a3 a5}") != std::string::npos);

    auto s = nlohmann::json::parse(run({"--format", "json", "states", "@pentagon"}).out);
    CHECK(s["rows"].size() == 11);
}

TEST_CASE("cli: worker count does not change the output") {
    auto one = run({"--jobs", "1", "states", "@fig4"}).out;
    CHECK(run({"--jobs", "6", "states", "@fig4"}).out == one);
    ::setenv("OHG_JOBS", "4", 1);
    CHECK(run({"states", "@fig4"}).out == one);
    ::unsetenv("OHG_JOBS");
}

TEST_CASE("cli: vector verification") {
    auto r = run({"verify-for", data("k3.ohg"), data("k3.vec")});
    CHECK(r.code == 0);
    CHECK(r.out == "valid\n");
}
