#pragma once

// Exact and extended-precision scalars shared by every module.
//
// Integer and Rational are GMP values (arbitrary precision, always in lowest
// terms). Real wraps an MPFR value that carries its own precision, so
// computations at different precisions can run side by side without any
// process-wide state.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgst {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Throws Error on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, always with an explicit denominator ("3/1").
std::string to_string(const Rational& r);

/// Number of bits MPFR needs to hold `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(int digits);

class Real {
  public:
    Real() : Real(0L, 30) {}
    Real(long value, int digits);
    Real(double value, int digits);
    Real(const Rational& value, int digits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Parses a decimal string ("1.25e-3") at the given precision.
    static Real from_string(const std::string& text, int digits);
    static Real pi(int digits);

    int digits() const;
    mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

    /// Copy rounded (or zero-extended) to a new precision.
    Real with_digits(int digits) const;

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits (0 = own precision).
    std::string to_string(int digits = 0) const;
    /// Nearest integer, ties away from zero.
    Integer round() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
    friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real sin(const Real& x);
    friend Real cos(const Real& x);
    /// x reduced into [-pi, pi] with the same precision as x.
    friend Real reduce_angle(const Real& x);
    /// 10^exponent at the given precision.
    friend Real pow10(long exponent, int digits);
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

  private:
    struct Uninit {};
    Real(Uninit, mpfr_prec_t bits);
    static mpfr_prec_t wider(const Real& a, const Real& b) { return a.bits() > b.bits() ? a.bits() : b.bits(); }

    mpfr_t value_;
};

Real pow10(long exponent, int digits);

/// Dense row-major matrix used for exact and high-precision linear algebra.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace pgst
