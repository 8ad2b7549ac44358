#pragma once

#include "pgst/involution.hpp"
#include "pgst/polynomial.hpp"

#include <string>
#include <vector>

namespace pgst {

/// {"coeffs": ["c0", "c1", ...]}, ascending degree.
std::string polynomial_json(const RatPoly& p);
/// {"p": {"coeffs": ..}, "q": {"coeffs": ..}} for p - Q q.
std::string qlinear_json(const QLinearPoly& f);

/// {"sigma": [...], "fixed_vertices": [...], "fixed_edges": k, "side_size": n,
///  "left": [...], "right": [...]}, all vertices 1-indexed.
std::string involution_json(const InvolutionInfo& inv);
std::string involutions_json(const std::vector<InvolutionInfo>& list);

/// The six block matrices as arrays of rational (or affine) strings plus the
/// characteristic polynomials of H, H+ and H-.
std::string decomposition_json(const BlockDecomposition<Affine>& bd, const InvolutionInfo& inv);

}  // namespace pgst
