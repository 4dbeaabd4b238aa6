// Exact fields with involution: the rationals, and the Gaussian rationals
// with either the identity involution or complex conjugation.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "starinv/errors.hpp"

namespace starinv {

enum class FieldBase { Rationals, GaussianRationals };
enum class Involution { Identity, Conjugation };

struct FieldMode {
    FieldBase base = FieldBase::Rationals;
    Involution involution = Involution::Identity;

    bool operator==(const FieldMode&) const = default;
};

/// Throws InvalidArgument for Conjugation over the rationals.
void validate(FieldMode mode);

std::string to_string(FieldBase base);
std::string to_string(Involution inv);
FieldBase parse_field_base(std::string_view text);
Involution parse_involution(std::string_view text);

/// Arbitrary-precision rational, always kept in canonical form.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional leading sign.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    mpq_class value_;
};

inline Rational involve(const Rational& x) { return x; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

/// Element of Q(i). The involution is a type parameter so that matrices over
/// different involutive fields never mix.
template <Involution Inv>
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    // Field division; uses the complex norm regardless of the involution.
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
        Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
        Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
        im_ = (im_ * o.re_ - re_ * o.im_) / norm;
        re_ = std::move(re);
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

using GaussIdentity = Gaussian<Involution::Identity>;
using GaussConj = Gaussian<Involution::Conjugation>;

template <Involution Inv>
Gaussian<Inv> involve(const Gaussian<Inv>& x) {
    if constexpr (Inv == Involution::Conjugation) {
        return Gaussian<Inv>(x.re(), -x.im());
    } else {
        return x;
    }
}

template <Involution Inv>
bool is_zero(const Gaussian<Inv>& x) { return x.is_zero(); }

template <Involution Inv>
Gaussian<Inv> inverse(const Gaussian<Inv>& x) { return Gaussian<Inv>(1) / x; }

/// Canonical text: "p/q", "p/q+r/s*i", with unit coefficients written as "i" / "-i".
std::string format_gaussian(const Rational& re, const Rational& im);

/// Parses either a rational or a Gaussian literal; returns (re, im).
std::pair<Rational, Rational> parse_gaussian(std::string_view text);

template <Involution Inv>
std::string to_string(const Gaussian<Inv>& x) { return format_gaussian(x.re(), x.im()); }

template <Involution Inv>
std::ostream& operator<<(std::ostream& os, const Gaussian<Inv>& x) { return os << to_string(x); }

/// Compile-time description of each supported scalar type.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr FieldMode mode{FieldBase::Rationals, Involution::Identity};
    static Rational parse(std::string_view text) { return Rational::parse(text); }
    static Rational from_parts(Rational re, const Rational& im) {
        if (!im.is_zero()) throw InvalidArgument("imaginary part in a rational field");
        return re;
    }
};

template <Involution Inv>
struct ScalarTraits<Gaussian<Inv>> {
    static constexpr FieldMode mode{FieldBase::GaussianRationals, Inv};
    static Gaussian<Inv> parse(std::string_view text) {
        auto [re, im] = parse_gaussian(text);
        return {std::move(re), std::move(im)};
    }
    static Gaussian<Inv> from_parts(Rational re, Rational im) { return {std::move(re), std::move(im)}; }
};

template <typename S>
S parse_scalar(std::string_view text) { return ScalarTraits<S>::parse(text); }

template <typename S>
concept ExactScalar = requires(const S& a, const S& b) {
    { a + b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { involve(a) } -> std::same_as<S>;
    { is_zero(a) } -> std::same_as<bool>;
    ScalarTraits<S>::mode;
};

}  // namespace starinv

namespace Eigen {

template <>
struct NumTraits<starinv::Rational> : GenericNumTraits<starinv::Rational> {
    using Real = starinv::Rational;
    using NonInteger = starinv::Rational;
    using Nested = starinv::Rational;
    using Literal = starinv::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <starinv::Involution Inv>
struct NumTraits<starinv::Gaussian<Inv>> : GenericNumTraits<starinv::Gaussian<Inv>> {
    using Real = starinv::Gaussian<Inv>;
    using NonInteger = starinv::Gaussian<Inv>;
    using Nested = starinv::Gaussian<Inv>;
    using Literal = starinv::Gaussian<Inv>;
    // Eigen must not try to conjugate on its own; the involution is applied explicitly.
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 16,
        MulCost = 64
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
