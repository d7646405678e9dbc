#include "ohg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohg/coloring.hpp"
#include "ohg/core.hpp"
#include "ohg/gadgets.hpp"
#include "ohg/geometry.hpp"
#include "ohg/io.hpp"
#include "ohg/reconstruct.hpp"
#include "ohg/states.hpp"

namespace ohg::cli {

namespace {

using json = nlohmann::ordered_json;

// A file path, or "@name" for a built-in fixture.
struct Input {
    std::optional<Hypergraph> hypergraph;
    std::optional<TravisMatrix> travis;
    bool derived = false;  // hypergraph rebuilt from the table
};

Input load(const std::string& source) {
    Input in;
    if (source.starts_with('@')) {
        Fixture f = fixture(source.substr(1));
        in.hypergraph = std::move(f.hypergraph);
        in.travis = std::move(f.travis);
        return in;
    }
    const std::string text = io::read_file(source);
    if (io::looks_like_matrix(text))
        in.travis = io::parse_matrix(text);
    else
        in.hypergraph = io::parse_ohg(text);
    return in;
}

struct Options {
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t progress = 0;
    std::ostream* err = nullptr;

    bool json_out() const { return format == "json"; }

    EnumerateOptions enumerate() const {
        EnumerateOptions o;
        o.jobs = jobs;
        if (progress) {
            o.progress_interval = progress;
            o.progress = [e = err](std::uint64_t n) { *e << "states: " << n << '\n'; };
        }
        return o;
    }
};

const Hypergraph& need_hypergraph(Input& in) {
    if (in.hypergraph) return *in.hypergraph;
    const TravisMatrix& t = *in.travis;
    const std::size_t n = clique_number(adjacency_from_states(t));
    if (n < 3)
        throw Error(Errc::InvalidArgument, "cannot rebuild contexts from this table (clique number " +
                                               std::to_string(n) + ")");
    in.hypergraph = reconstruct(t, n, nullptr).filtered_hypergraph();
    in.derived = true;
    return *in.hypergraph;
}

// The table in the hypergraph's vertex order when both are known; reference
// tables keep their row order.
const TravisMatrix& need_states(Input& in, const Options& opt) {
    if (!in.travis) {
        in.travis = enumerate_states(*in.hypergraph, opt.enumerate());
    } else if (in.hypergraph) {
        in.travis = align_columns(*in.travis, *in.hypergraph);
    }
    return *in.travis;
}

std::string braces(const std::vector<std::string>& names) {
    std::string s = "{";
    for (std::size_t k = 0; k < names.size(); ++k) s += (k ? " " : "") + names[k];
    return s + "}";
}

std::vector<std::string> vertex_names(const Hypergraph& h) {
    std::vector<std::string> out;
    for (VertexId v = 0; v < h.vertex_count(); ++v) out.push_back(h.name(v));
    return out;
}

json rows_json(const TravisMatrix& t) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.column_count(); ++c) row.push_back(t.at(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

// 1-based, as printed in reports.
std::vector<std::size_t> one_based(const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> out;
    for (auto r : rows) out.push_back(r + 1);
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf", "#393b79", "#637939"};
constexpr std::size_t kPaletteSize = std::size(kPalette);

const char* fill_of(std::size_t color) {
    // Vertex fills use a lighter set so the context strokes stay readable.
    constexpr const char* fills[] = {"#aec7e8", "#ff9896", "#98df8a", "#ffbb78",
                                     "#c5b0d5", "#c49c94", "#f7b6d2", "#c7c7c7",
                                     "#dbdb8d", "#9edae5", "#9c9ede", "#cedb9c"};
    return fills[(color - 1) % std::size(fills)];
}

std::string to_dot(const Hypergraph& h, const Coloring* coloring) {
    std::ostringstream s;
    s << "graph ohg {\n  node [shape=circle, style=filled, fillcolor=white];\n";
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        s << "  \"" << h.name(v) << '"';
        if (coloring && coloring->color_of[v])
            s << " [fillcolor=\"" << fill_of(coloring->color_of[v]) << "\", label=\"" << h.name(v)
              << "\\n" << coloring->color_of[v] << "\"]";
        s << ";\n";
    }
    // Each context is drawn as a path through its vertices in one colour.
    for (std::size_t c = 0; c < h.context_count(); ++c) {
        const auto& ctx = h.contexts()[c];
        for (std::size_t k = 0; k + 1 < ctx.size(); ++k)
            s << "  \"" << h.name(ctx[k]) << "\" -- \"" << h.name(ctx[k + 1]) << "\" [color=\""
              << kPalette[c % kPaletteSize] << "\", penwidth=2];\n";
    }
    s << "}\n";
    return s.str();
}

void print_coloring(std::ostream& out, const Hypergraph& h, const Coloring& c) {
    for (std::size_t k = 1; k <= c.color_count(); ++k) {
        std::vector<std::string> cell;
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (c.color_of[v] == k) cell.push_back(h.name(v));
        out << "color " << k << ": " << braces(cell) << '\n';
    }
}

json coloring_json(const Hypergraph& h, const Coloring& c) {
    json j = json::object();
    for (VertexId v = 0; v < h.vertex_count(); ++v) j[h.name(v)] = c.color_of[v];
    return j;
}

// A colouring indexed by table columns, moved onto the hypergraph's vertices.
Coloring on_vertices(const TravisMatrix& t, const Hypergraph& h, const Coloring& by_column) {
    Coloring c{std::vector<std::size_t>(h.vertex_count(), 0)};
    for (std::size_t col = 0; col < t.column_count(); ++col)
        c.color_of[h.index_of(t.columns()[col])] = by_column.color_of[col];
    return c;
}

// ---------------------------------------------------------------------------

int cmd_states(Input& in, const Options& opt, bool count_only, const std::string& out_path,
               std::ostream& out) {
    if (!in.hypergraph) throw Error(Errc::InvalidArgument, "states needs a hypergraph file");
    const Hypergraph& h = *in.hypergraph;
    if (count_only && out_path.empty()) {
        const std::uint64_t n = count_states(h, opt.enumerate());
        if (opt.json_out())
            out << json{{"vertices", vertex_names(h)}, {"contexts", h.named_contexts()}, {"nTS", n}}.dump()
                << '\n';
        else
            out << n << '\n';
        return Success;
    }
    const TravisMatrix t = enumerate_states(h, opt.enumerate());
    if (!out_path.empty()) io::write_file(out_path, io::write_matrix(t));
    if (opt.json_out()) {
        json j{{"vertices", t.columns()}, {"contexts", h.named_contexts()}, {"nTS", t.row_count()}};
        if (!count_only) j["rows"] = rows_json(t);
        out << j.dump() << '\n';
    } else if (count_only || !out_path.empty()) {
        out << t.row_count() << '\n';
    } else {
        out << io::write_matrix(t);
    }
    return Success;
}

int cmd_classify(Input& in, const Options& opt, std::ostream& out) {
    const Hypergraph& h = need_hypergraph(in);
    const TravisMatrix& t = need_states(in, opt);
    const StateClassification c = classify(h, t);
    const std::size_t omega = shape(h).clique_number;
    std::optional<std::size_t> chi;
    try {
        chi = exact_chromatic(h);
    } catch (const Error& e) {
        if (e.code() != Errc::SizeLimit) throw;
    }

    if (opt.json_out()) {
        json verdicts{{"unital", c.unital},
                      {"separable", c.separable},
                      {"perfectlySeparable", c.perfectly_separable},
                      {"semiPerfect", chi ? json(*chi == omega) : json(nullptr)},
                      {"cliqueNumber", omega},
                      {"chromaticNumber", chi ? json(*chi) : json(nullptr)}};
        if (c.fail_witness)
            verdicts["witness"] = {{"first", h.name(c.fail_witness->first)},
                                   {"second", h.name(c.fail_witness->second)},
                                   {"item", c.fail_witness->item}};
        json j{{"vertices", vertex_names(h)}, {"contexts", h.named_contexts()}, {"nTS", c.n_states},
               {"verdicts", verdicts}};
        out << j.dump() << '\n';
        return Success;
    }

    auto yes = [](bool b) { return b ? "yes" : "no"; };
    if (in.derived) out << "contexts rebuilt from the state table\n";
    out << "nTS: " << c.n_states << '\n';
    out << "unital: " << yes(c.unital);
    if (!c.unital)
        for (std::size_t col = 0; col < t.column_count(); ++col)
            if (t.column(col).none()) {
                out << " (" << t.columns()[col] << " is never true)";
                break;
            }
    out << '\n';
    out << "separable: " << yes(c.separable) << '\n';
    out << "perfectly-separable: " << yes(c.perfectly_separable);
    if (c.fail_witness) {
        const std::string a = h.name(c.fail_witness->first);
        const std::string b = h.name(c.fail_witness->second);
        out << " (" << a << ", " << b << ": ";
        switch (c.fail_witness->item) {
        case 1: out << "no state with " << a << "=0, " << b << "=1"; break;
        case 2: out << "no state with " << a << "=1, " << b << "=0"; break;
        default: out << "never both true but not in a common context"; break;
        }
        out << ")";
    }
    out << '\n';
    out << "semi-perfect: ";
    if (chi)
        out << yes(*chi == omega) << " (chromatic number " << *chi << ", clique number " << omega << ")\n";
    else
        out << "unknown (too many vertices for the exact search)\n";
    return Success;
}

int cmd_reconstruct(Input& in, const Options& opt, std::optional<std::size_t> n_opt,
                    std::ostream& out) {
    const bool has_source = in.hypergraph.has_value();
    const TravisMatrix& t = need_states(in, opt);
    std::size_t n = n_opt ? *n_opt
                          : (has_source ? shape(*in.hypergraph).clique_number
                                        : clique_number(adjacency_from_states(t)));
    const ReconstructionResult r = reconstruct(t, n, has_source ? &*in.hypergraph : nullptr);

    std::optional<Verdict> v;
    if (has_source) {
        const Hypergraph& h = *in.hypergraph;
        const ShapeReport s = shape(h);
        if (!n_opt || *n_opt == s.clique_number) {
            try {
                v = verdict(h, t);
            } catch (const Error& e) {
                if (e.code() != Errc::InvalidArgument) throw;
            }
        }
        if (!v) {
            v = Verdict{};
            v->kind = r.extra_contexts.empty() && r.missing_contexts.empty()
                          ? Verdict::Kind::Reconstructable
                          : Verdict::Kind::ExtraStructure;
            v->extra_contexts = r.extra_contexts;
            v->missing_contexts = r.missing_contexts;
        }
    }

    std::size_t dropped = r.raw_contexts.size() - r.filtered_contexts.size();
    if (opt.json_out()) {
        json j{{"vertices", t.columns()}, {"nTS", t.row_count()}, {"n", n},
               {"contexts", r.filtered_contexts}, {"droppedCliques", dropped}};
        if (has_source) {
            j["extraContexts"] = r.extra_contexts;
            j["missingContexts"] = r.missing_contexts;
            j["verdicts"] = {{"reconstruct", verdict_name(v->kind)}};
        }
        out << j.dump() << '\n';
    } else {
        out << "nTS: " << t.row_count() << '\n';
        out << "cliques: " << r.raw_contexts.size() << " maximal, " << dropped << " smaller than " << n
            << " dropped\n";
        if (!has_source) {
            for (const auto& ctx : r.filtered_contexts) out << "context: " << braces(ctx) << '\n';
        } else {
            for (const auto& ctx : r.extra_contexts) out << "extra: " << braces(ctx) << '\n';
            for (const auto& ctx : r.missing_contexts) out << "missing: " << braces(ctx) << '\n';
            out << "verdict: " << verdict_name(v->kind);
            if (v->witness) {
                out << " (" << v->witness->first;
                if (!v->witness->second.empty()) out << ", " << v->witness->second;
                out << ')';
            }
            out << '\n';
        }
    }
    if (!has_source) return Success;
    return v->kind == Verdict::Kind::Reconstructable ? Success : Negative;
}

int cmd_color(Input& in, const Options& opt, std::size_t n, const std::string& algorithm,
              std::ostream& out) {
    if (n == 0) throw Error(Errc::InvalidArgument, "--n must be positive");
    std::optional<Coloring> coloring;
    std::optional<RowSelection> rows;
    std::string failure;
    const Hypergraph* h = nullptr;

    if (algorithm == "paper") {
        const TravisMatrix& t = need_states(in, opt);
        rows = algorithm1(t, n);
        if (rows && !verify_rows(t, *rows)) {
            failure = "no " + std::to_string(n) + "-coloring from two-valued states (" +
                      std::to_string(n) + " disjoint states do not cover every vertex)";
            rows.reset();
        } else if (rows) {
            h = &need_hypergraph(in);
            coloring = on_vertices(t, *h, coloring_from_rows(t, *rows));
        } else {
            failure = "no " + std::to_string(n) + "-coloring from two-valued states";
        }
    } else if (algorithm == "relaxed") {
        h = &need_hypergraph(in);
        const TravisMatrix& t = need_states(in, opt);
        coloring = relaxed_coloring(t, *h, n);
        if (!coloring) failure = "no relaxed coloring with at most " + std::to_string(n) + " colors";
    } else {
        h = &need_hypergraph(in);
        Coloring best = optimal_coloring(*h);
        if (best.color_count() <= n)
            coloring = std::move(best);
        else
            failure = "no " + std::to_string(n) + "-coloring (chromatic number " +
                      std::to_string(best.color_count()) + ")";
    }

    if (!coloring) {
        if (opt.json_out())
            out << json{{"algorithm", algorithm}, {"n", n}, {"coloring", nullptr}, {"message", failure}}.dump()
                << '\n';
        else
            out << failure << '\n';
        return Negative;
    }

    // Which colour classes are two-valued states.
    std::vector<bool> is_state;
    for (std::size_t k = 1; k <= coloring->color_count(); ++k) {
        try {
            color_to_state(*h, *coloring, k);
            is_state.push_back(true);
        } catch (const Error& e) {
            if (e.code() != Errc::NotAState) throw;
            is_state.push_back(false);
        }
    }

    if (opt.format == "dot") {
        out << to_dot(*h, &*coloring);
    } else if (opt.json_out()) {
        json j{{"algorithm", algorithm}, {"n", n}, {"colors", coloring->color_count()},
               {"coloring", coloring_json(*h, *coloring)}, {"colorIsState", is_state}};
        if (rows) j["rows"] = one_based(rows->rows);
        out << j.dump() << '\n';
    } else {
        if (rows) {
            out << "rows:";
            for (auto r : one_based(rows->rows)) out << ' ' << r;
            out << '\n';
        }
        print_coloring(out, *h, *coloring);
        for (std::size_t k = 0; k < is_state.size(); ++k)
            if (!is_state[k]) out << "color " << k + 1 << " is not a two-valued state\n";
    }
    return Success;
}

int cmd_chroma(Input& in, const Options& opt, bool brooks, std::ostream& out) {
    const Hypergraph& h = need_hypergraph(in);
    const std::size_t value = brooks ? brooks_bound(h) : exact_chromatic(h);
    if (opt.json_out())
        out << json{{brooks ? "brooksBound" : "chromaticNumber", value},
                    {"cliqueNumber", shape(h).clique_number}}
                   .dump()
            << '\n';
    else
        out << value << '\n';
    return Success;
}

int cmd_gadget(const std::string& name, bool matrix, const Options& opt, std::ostream& out) {
    const Fixture f = fixture(name);
    if (matrix && !f.travis) throw Error(Errc::InvalidArgument, "fixture " + name + " has no reference table");
    if (opt.json_out()) {
        json j{{"name", f.name}};
        if (f.hypergraph) {
            j["vertices"] = vertex_names(*f.hypergraph);
            j["contexts"] = f.hypergraph->named_contexts();
        }
        if (f.travis) {
            j["nTS"] = f.travis->row_count();
            j["rows"] = rows_json(*f.travis);
        }
        out << j.dump() << '\n';
    } else if (f.hypergraph && !matrix) {
        out << io::write_ohg(*f.hypergraph);
    } else {
        out << io::write_matrix(*f.travis);
    }
    return Success;
}

int cmd_compose(Input& in, const std::string& mode, const std::string& head, const std::string& tail,
                const Options& opt, std::ostream& out) {
    const BindSpec spec{need_hypergraph(in), head, tail};
    const Hypergraph h = mode == "layer" ? layer(spec) : bind(spec);
    if (opt.json_out())
        out << json{{"vertices", vertex_names(h)}, {"contexts", h.named_contexts()}}.dump() << '\n';
    else
        out << io::write_ohg(h);
    return Success;
}

int cmd_count(std::uint64_t na, std::uint64_t nb, std::uint64_t nn, const Options& opt,
              std::ostream& out) {
    const std::string value = predicted_bind_count(na, nb, nn).str();
    if (opt.json_out())
        out << json{{"na", na}, {"nb", nb}, {"nn", nn}, {"nTS", value}}.dump() << '\n';
    else
        out << value << '\n';
    return Success;
}

int cmd_verify_for(Input& in, const std::string& vec_path, double tol, const Options& opt,
                   std::ostream& out) {
    const Hypergraph& h = need_hypergraph(in);
    const VectorLabeling l = io::parse_vectors(io::read_file(vec_path));
    const RepresentationReport r = verify_for(h, l, tol);
    auto pairs = [](const std::vector<NamedPair>& v) {
        json a = json::array();
        for (const auto& p : v) a.push_back({{"first", p.first}, {"second", p.second}, {"value", p.value}});
        return a;
    };
    if (opt.json_out()) {
        out << json{{"valid", r.valid()},
                    {"adjacentNotOrthogonal", pairs(r.adjacent_not_orthogonal)},
                    {"nonadjacentOrthogonal", pairs(r.nonadjacent_orthogonal)},
                    {"colinear", pairs(r.colinear)}}
                   .dump()
            << '\n';
    } else {
        for (const auto& p : r.adjacent_not_orthogonal)
            out << "adjacent but not orthogonal: " << p.first << ' ' << p.second << " (" << p.value << ")\n";
        for (const auto& p : r.nonadjacent_orthogonal)
            out << "orthogonal but not adjacent: " << p.first << ' ' << p.second << " (" << p.value << ")\n";
        for (const auto& p : r.colinear)
            out << "colinear: " << p.first << ' ' << p.second << " (" << p.value << ")\n";
        out << (r.valid() ? "valid" : "invalid") << '\n';
    }
    return r.valid() ? Success : Negative;
}

int cmd_export(Input& in, const Options& opt, std::ostream& out) {
    if (opt.format == "dot") {
        out << to_dot(need_hypergraph(in), nullptr);
    } else if (opt.json_out()) {
        json j = json::object();
        if (in.hypergraph || !in.travis) {
            const Hypergraph& h = need_hypergraph(in);
            j["vertices"] = vertex_names(h);
            j["contexts"] = h.named_contexts();
        } else {
            j["vertices"] = in.travis->columns();
        }
        if (in.travis) {
            j["nTS"] = in.travis->row_count();
            j["rows"] = rows_json(*in.travis);
        }
        out << j.dump() << '\n';
    } else if (in.hypergraph) {
        out << io::write_ohg(*in.hypergraph);
    } else {
        out << io::write_matrix(*in.travis);
    }
    return Success;
}

std::optional<unsigned> jobs_from_env(std::ostream& err) {
    const char* env = std::getenv("OHG_JOBS");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end || v < 1 || v > 1024) {
        err << "warning: ignoring OHG_JOBS=" << env << '\n';
        return std::nullopt;
    }
    return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analyse orthogonality hypergraphs and their two-valued states.", "ohg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("FILE is a context list (.ohg) or a 0/1 state table (.mat); @NAME loads a built-in fixture.");

    Options opt;
    opt.err = &err;
    unsigned jobs = 0;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--jobs", jobs, "Worker threads for enumeration (default: OHG_JOBS or 1)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--progress", opt.progress, "Report the running state count to stderr every N states");

    std::string file;
    auto* states = app.add_subcommand("states", "Enumerate two-valued states");
    bool count_only = false;
    std::string out_path;
    states->add_option("FILE", file)->required();
    states->add_flag("--count-only", count_only, "Print the number of states only");
    states->add_option("--out", out_path, "Write the state table to a matrix file");

    auto* classify_cmd = app.add_subcommand("classify", "Unital / separable / perfectly separable / semi-perfect");
    classify_cmd->add_option("FILE", file)->required();

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild contexts from the state table");
    std::optional<std::size_t> n_opt;
    reconstruct_cmd->add_option("FILE", file)->required();
    reconstruct_cmd->add_option("--n", n_opt, "Context size (default: clique number)")->check(CLI::Range(3u, 1000000u));

    auto* color = app.add_subcommand("color", "Colour the vertices with n colours");
    std::size_t n_colors = 0;
    std::string algorithm = "paper";
    color->add_option("FILE", file)->required();
    color->add_option("--n", n_colors, "Number of colours")->required();
    color->add_option("--algorithm", algorithm, "Colouring method")
        ->check(CLI::IsMember({"paper", "relaxed", "exact"}));

    auto* chroma = app.add_subcommand("chroma", "Chromatic number of the 2-section");
    bool exact_flag = false, brooks_flag = false;
    chroma->add_option("FILE", file)->required();
    auto* ex = chroma->add_flag("--exact", exact_flag, "Exact chromatic number (default)");
    chroma->add_flag("--brooks", brooks_flag, "Brooks upper bound")->excludes(ex);

    auto* gadget = app.add_subcommand("gadget", "Print a built-in fixture");
    std::string fixture_name;
    bool gadget_matrix = false;
    gadget->add_option("NAME", fixture_name)->required()->check(CLI::IsMember(fixture_names()));
    gadget->add_flag("--matrix", gadget_matrix, "Print the reference state table instead");

    auto* compose = app.add_subcommand("compose", "Fold gadget copies into a layer or a bound triple of layers");
    std::string mode, head, tail;
    compose->add_option("MODE", mode)->required()->check(CLI::IsMember({"layer", "bind"}));
    compose->add_option("FILE", file)->required();
    compose->add_option("--head", head)->required();
    compose->add_option("--tail", tail)->required();

    auto* count = app.add_subcommand("count", "Predicted state count of a bound gadget");
    std::uint64_t na = 0, nb = 0, nn = 0;
    count->add_option("--na", na)->required();
    count->add_option("--nb", nb)->required();
    count->add_option("--nn", nn)->required();

    auto* vfor = app.add_subcommand("verify-for", "Check a vector labelling as a faithful orthogonal representation");
    std::string vec_path;
    double tol = 1e-9;
    vfor->add_option("FILE", file)->required();
    vfor->add_option("VECFILE", vec_path)->required();
    vfor->add_option("--tol", tol, "Orthogonality tolerance")->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("export", "Re-emit as .ohg/.mat text, JSON, or Graphviz DOT");
    exp->add_option("FILE", file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
    }

    if (jobs)
        opt.jobs = jobs;
    else if (auto env = jobs_from_env(err))
        opt.jobs = *env;
    if (opt.format == "dot" && !color->parsed() && !exp->parsed()) {
        err << "error: --format dot applies to color and export only\n";
        return UsageError;
    }

    try {
        if (gadget->parsed()) return cmd_gadget(fixture_name, gadget_matrix, opt, out);
        if (count->parsed()) return cmd_count(na, nb, nn, opt, out);

        Input in = load(file);
        if (states->parsed()) return cmd_states(in, opt, count_only, out_path, out);
        if (classify_cmd->parsed()) return cmd_classify(in, opt, out);
        if (reconstruct_cmd->parsed()) return cmd_reconstruct(in, opt, n_opt, out);
        if (color->parsed()) return cmd_color(in, opt, n_colors, algorithm, out);
        if (chroma->parsed()) return cmd_chroma(in, opt, brooks_flag, out);
        if (compose->parsed()) return cmd_compose(in, mode, head, tail, opt, out);
        if (vfor->parsed()) return cmd_verify_for(in, vec_path, tol, opt, out);
        if (exp->parsed()) return cmd_export(in, opt, out);
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return UsageError;
    }
    return UsageError;
}

}  // namespace ohg::cli
