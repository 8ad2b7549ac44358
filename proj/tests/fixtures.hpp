#pragma once

#include "pgst/graph.hpp"
#include "pgst/involution.hpp"

#include <string>
#include <vector>

namespace fixtures {

// mpq_class(num, den) does not reduce; random tests need canonical values.
inline pgst::Rational frac(long num, long den) {
    pgst::Rational r(num, den);
    r.canonicalize();
    return r;
}

inline const std::string seven_vertex_json =
    R"({"n":7,"edges":[[1,2],[1,5],[2,3],[2,4],[3,6],[3,7],[4,5],[5,6],[6,7]]})";

inline pgst::Graph seven_vertex() {
    return pgst::Graph(7, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 5}, {2, 6}, {3, 4}, {4, 5}, {5, 6}});
}

// (v1 v4)(v2 v5)(v3 v6), fixes v7.
inline std::vector<int> seven_vertex_sigma() { return {3, 4, 5, 0, 1, 2, 6}; }

// C6 as the cycle v1..v6; antipodal (v1 v4)(v2 v5)(v3 v6).
inline std::vector<int> c6_antipodal() { return {3, 4, 5, 0, 1, 2}; }

// C6 reflection through the midpoints of edges v1v6 and v3v4.
inline std::vector<int> c6_edge_reflection() { return {5, 4, 3, 2, 1, 0}; }

inline pgst::Potential potential_from(const std::vector<pgst::Rational>& values) {
    std::vector<pgst::Affine> v(values.begin(), values.end());
    return pgst::Potential(std::move(v));
}

}  // namespace fixtures
