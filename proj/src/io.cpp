#include "ohg/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace ohg::io {

namespace {

std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

// Content lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        line = strip_comment(line);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.emplace_back(number, line);
    }
    return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Hypergraph parse_ohg(std::string_view text) {
    std::vector<std::vector<std::string>> contexts;
    for (auto [number, line] : content_lines(text)) contexts.push_back(tokens(line));
    if (contexts.empty()) throw Error(Errc::ParseError, "no contexts");
    return Hypergraph::build(contexts);
}

std::string write_ohg(const Hypergraph& h) {
    std::string out;
    for (const auto& ctx : h.contexts()) {
        for (std::size_t k = 0; k < ctx.size(); ++k) {
            if (k) out += ' ';
            out += h.name(ctx[k]);
        }
        out += '\n';
    }
    return out;
}

bool looks_like_matrix(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) return false;
    auto toks = tokens(lines.front().second);
    return !toks.empty() && toks.front() == "vertices:";
}

TravisMatrix parse_matrix(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw Error(Errc::ParseError, "empty matrix file");
    auto header = tokens(lines.front().second);
    if (header.empty() || header.front() != "vertices:")
        parse_error(lines.front().first, "expected 'vertices:' header");
    std::vector<std::string> columns(header.begin() + 1, header.end());
    if (columns.empty()) parse_error(lines.front().first, "no vertex names in header");

    std::vector<std::vector<int>> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto [number, line] = lines[k];
        auto& row = rows.emplace_back();
        for (const auto& tok : tokens(line)) {
            if (tok != "0" && tok != "1") parse_error(number, "expected 0 or 1, got '" + tok + "'");
            row.push_back(tok == "1");
        }
        if (row.size() != columns.size())
            parse_error(number, "row has " + std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(columns.size()));
    }
    return TravisMatrix::from_ints(std::move(columns), rows);
}

std::string write_matrix(const TravisMatrix& t) {
    std::string out = "vertices:";
    for (const auto& c : t.columns()) out += ' ' + c;
    out += '\n';
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        for (std::size_t c = 0; c < t.column_count(); ++c) {
            if (c) out += ' ';
            out += t.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

VectorLabeling parse_vectors(std::string_view text) {
    VectorLabeling l;
    bool first = true;
    for (auto [number, line] : content_lines(text)) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_error(number, "expected 'name: components'");
        auto name = tokens(line.substr(0, colon));
        if (name.size() != 1) parse_error(number, "expected a single vertex name before ':'");
        std::vector<double> v;
        for (const auto& tok : tokens(line.substr(colon + 1))) {
            char* end = nullptr;
            errno = 0;
            double x = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size() || errno == ERANGE)
                parse_error(number, "bad number '" + tok + "'");
            v.push_back(x);
        }
        if (first) {
            l.dimension = v.size();
            first = false;
        }
        if (!l.vectors.emplace(name.front(), std::move(v)).second)
            parse_error(number, "vertex " + name.front() + " given twice");
    }
    return l;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << content;
}

}  // namespace ohg::io
