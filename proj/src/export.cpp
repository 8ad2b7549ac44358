#include "pgst/export.hpp"

#include <json.hpp>

namespace pgst {

namespace {

using Json = nlohmann::ordered_json;

Json poly_doc(const RatPoly& p) {
    Json doc;
    doc["coeffs"] = to_strings(p);
    return doc;
}

Json vertices(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

Json inv_doc(const InvolutionInfo& inv) {
    Json doc;
    doc["sigma"] = vertices(inv.sigma);
    doc["fixed_vertices"] = vertices(inv.fixed_vertices);
    doc["fixed_edges"] = inv.fixed_edge_count;
    doc["side_size"] = inv.side_size;
    doc["left"] = vertices(inv.left);
    doc["right"] = vertices(inv.right);
    return doc;
}

Json matrix_doc(const Matrix<Affine>& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

// Concrete: {"coeffs"}; Q on one diagonal entry: {"p", "q"}; otherwise the
// coefficients of x^k as polynomials in Q.
Json char_poly_doc(const Matrix<Affine>& m) {
    if (is_concrete(m)) return poly_doc(char_poly(substitute(m, Rational(0))));
    try {
        const QLinearPoly f = char_poly_q_linear(m);
        return {{"p", poly_doc(f.p)}, {"q", poly_doc(f.q)}};
    } catch (const Error&) {
    }
    Json coeffs = Json::array();
    for (const RatPoly& c : char_poly_symbolic(m).coeffs()) coeffs.push_back(poly_doc(c));
    return {{"coeffs_in_Q", coeffs}};
}

}  // namespace

std::string polynomial_json(const RatPoly& p) { return poly_doc(p).dump(); }

std::string qlinear_json(const QLinearPoly& f) { return Json{{"p", poly_doc(f.p)}, {"q", poly_doc(f.q)}}.dump(); }

std::string involution_json(const InvolutionInfo& inv) { return inv_doc(inv).dump(); }

std::string involutions_json(const std::vector<InvolutionInfo>& list) {
    Json doc;
    doc["involutions"] = Json::array();
    for (const auto& inv : list) doc["involutions"].push_back(inv_doc(inv));
    return doc.dump(2);
}

std::string decomposition_json(const BlockDecomposition<Affine>& bd, const InvolutionInfo& inv) {
    Json doc;
    doc["involution"] = inv_doc(inv);
    doc["h_prime"] = matrix_doc(bd.h_prime);
    doc["a_sigma"] = matrix_doc(bd.a_sigma);
    doc["a_s"] = matrix_doc(bd.a_s);
    doc["h_s"] = matrix_doc(bd.h_s);
    doc["h_plus"] = matrix_doc(bd.h_plus);
    doc["h_minus"] = matrix_doc(bd.h_minus);
    doc["char_poly"] = char_poly_doc(reassemble(bd, inv));
    doc["P_plus"] = char_poly_doc(bd.h_plus);
    doc["P_minus"] = char_poly_doc(bd.h_minus);
    return doc.dump(2);
}

}  // namespace pgst
