#include "pgst/affine.hpp"

namespace pgst {

Affine parse_affine(std::string_view text) {
    if (text == "Q") return Affine::symbol();
    if (text == "-Q") return Affine(Rational(0), Rational(-1));
    constexpr std::string_view prefix = "aff:";
    constexpr std::string_view suffix = "*Q";
    if (text.substr(0, prefix.size()) != prefix) return Affine(parse_rational(text));

    std::string_view body = text.substr(prefix.size());
    if (body.size() < suffix.size() || body.substr(body.size() - suffix.size()) != suffix)
        throw Error("malformed affine value '" + std::string(text) + "': expected trailing '*Q'");
    body.remove_suffix(suffix.size());
    // The separating '+' is the first one after the leading sign of the constant.
    const auto plus = body.find('+', 1);
    if (plus == std::string_view::npos)
        throw Error("malformed affine value '" + std::string(text) + "': expected 'a+c*Q'");
    return Affine(parse_rational(body.substr(0, plus)), parse_rational(body.substr(plus + 1)));
}

std::string to_string(const Affine& a) {
    if (a.is_concrete()) return to_string(a.constant);
    return "aff:" + to_string(a.constant) + "+" + to_string(a.q_coeff) + "*Q";
}

}  // namespace pgst
