#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ohg/core.hpp"

namespace ohg {

/// Real vectors attached to vertex names, all of one dimension.
struct VectorLabeling {
    std::size_t dimension = 0;
    std::map<std::string, std::vector<double>> vectors;
};

struct NamedPair {
    std::string first;
    std::string second;
    double value = 0.0;  ///< |<x, y>| of the normalised vectors
};

/// Violations of a faithful orthogonal representation. Empty means valid.
struct RepresentationReport {
    std::vector<NamedPair> adjacent_not_orthogonal;
    std::vector<NamedPair> nonadjacent_orthogonal;
    std::vector<NamedPair> colinear;

    bool valid() const {
        return adjacent_not_orthogonal.empty() && nonadjacent_orthogonal.empty() &&
               colinear.empty();
    }
};

/// Checks: adjacent pairs orthogonal within `tol`, non-adjacent pairs not,
/// and no two distinct vertices colinear (|cos| > 1 - tol). Vectors are
/// normalised first. Throws MissingVertex, DimensionMismatch, InvalidArgument
/// (zero vector or tol <= 0).
RepresentationReport verify_for(const Hypergraph& h, const VectorLabeling& labeling,
                                double tol = 1e-9);

/// Neumaier-compensated inner product.
double dot(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ohg
