#include "pgst/numeric.hpp"

#include <cctype>
#include <cmath>
#include <memory>

namespace pgst {

Rational parse_rational(std::string_view text) {
    auto fail = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return std::string(s);
    };

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') throw fail();

    Rational r;
    r.get_num() = Integer(strip_plus(num));
    r.get_den() = Integer(std::string(den));
    if (r.get_den() == 0) throw fail();
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(Uninit, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real::Real(long value, int digits) : Real(Uninit{}, digits_to_bits(digits)) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(double value, int digits) : Real(Uninit{}, digits_to_bits(digits)) { mpfr_set_d(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, int digits) : Real(Uninit{}, digits_to_bits(digits)) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) : Real(Uninit{}, other.bits()) { mpfr_set(value_, other.value_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(Uninit{}, MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.bits());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(const std::string& text, int digits) {
    Real r(Uninit{}, digits_to_bits(digits));
    if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) throw Error("malformed decimal '" + text + "'");
    return r;
}

Real Real::pi(int digits) {
    Real r(Uninit{}, digits_to_bits(digits));
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

int Real::digits() const { return static_cast<int>(std::floor((bits() - 8) / 3.3219280948873623)); }

Real Real::with_digits(int digits) const {
    Real r(Uninit{}, digits_to_bits(digits));
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (digits <= 0) digits = this->digits();
    const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    const int len = mpfr_snprintf(nullptr, 0, fmt.c_str(), value_);
    std::string out(static_cast<std::size_t>(len) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), fmt.c_str(), value_);
    out.resize(static_cast<std::size_t>(len));
    return out;
}

Integer Real::round() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDNA);
    return z;
}

Real& Real::operator+=(const Real& rhs) {
    if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(Uninit{}, bits());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(Real::Uninit{}, Real::wider(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(Real::Uninit{}, Real::wider(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(Real::Uninit{}, Real::wider(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(Real::Uninit{}, Real::wider(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(Real::Uninit{}, a.bits());
    mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(Real::Uninit{}, a.bits());
    mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r(Real::Uninit{}, x.bits());
    mpfr_abs(r.value_, x.value_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    Real r(Real::Uninit{}, x.bits());
    mpfr_sqrt(r.value_, x.value_, MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r(Real::Uninit{}, x.bits());
    mpfr_sin(r.value_, x.value_, MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r(Real::Uninit{}, x.bits());
    mpfr_cos(r.value_, x.value_, MPFR_RNDN);
    return r;
}

Real reduce_angle(const Real& x) {
    Real two_pi(Real::Uninit{}, x.bits() + 32);
    mpfr_const_pi(two_pi.value_, MPFR_RNDN);
    mpfr_mul_ui(two_pi.value_, two_pi.value_, 2, MPFR_RNDN);
    Real r(Real::Uninit{}, x.bits());
    mpfr_remainder(r.value_, x.value_, two_pi.value_, MPFR_RNDN);
    return r;
}

Real pow10(long exponent, int digits) {
    Real r(Real::Uninit{}, digits_to_bits(digits));
    mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
    if (exponent < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
    return r;
}

}  // namespace pgst
