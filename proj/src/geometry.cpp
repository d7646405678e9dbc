#include "ohg/geometry.hpp"

#include <cmath>

namespace ohg {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double term = x[i] * y[i];
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            carry += (sum - t) + term;
        else
            carry += (term - t) + sum;
        sum = t;
    }
    return sum + carry;
}

RepresentationReport verify_for(const Hypergraph& h, const VectorLabeling& labeling, double tol) {
    if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
    const std::size_t n = h.vertex_count();

    std::vector<std::vector<double>> unit(n);
    for (VertexId v = 0; v < n; ++v) {
        auto it = labeling.vectors.find(h.name(v));
        if (it == labeling.vectors.end())
            throw Error(Errc::MissingVertex, "no vector for vertex " + h.name(v));
        if (it->second.size() != labeling.dimension)
            throw Error(Errc::DimensionMismatch,
                        "vector for " + h.name(v) + " has " + std::to_string(it->second.size()) +
                            " components, expected " + std::to_string(labeling.dimension));
        const double norm = std::sqrt(dot(it->second, it->second));
        if (norm == 0.0) throw Error(Errc::InvalidArgument, "zero vector for vertex " + h.name(v));
        unit[v] = it->second;
        for (double& c : unit[v]) c /= norm;
    }

    const Graph g = two_section(h);
    RepresentationReport report;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            const double ip = std::abs(dot(unit[a], unit[b]));
            NamedPair pair{h.name(a), h.name(b), ip};
            if (g.has_edge(a, b)) {
                if (ip > tol) report.adjacent_not_orthogonal.push_back(pair);
            } else if (ip <= tol) {
                report.nonadjacent_orthogonal.push_back(pair);
            }
            if (ip > 1.0 - tol) report.colinear.push_back(pair);
        }
    }
    return report;
}

}  // namespace ohg
