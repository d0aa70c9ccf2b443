#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace semisep::linalg {

using Rational = boost::multiprecision::cpp_rational;

/// Base field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);
    /// Parses "Q" or "Fp:<p>".
    static Field parse(std::string_view tag);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    std::string tag() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact field element. A scalar remembers its characteristic; a
/// characteristic-0 integer combined with an F_p element is reduced mod p,
/// so integer literals mix freely with residues.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(long long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& q, Field f = Field());
    Scalar(long long v, Field f);

    static Scalar zero(Field f) { return Scalar(0LL, f); }
    static Scalar one(Field f) { return Scalar(1LL, f); }
    /// Parses an integer or "p/q" string into the given field.
    static Scalar parse(std::string_view s, Field f);

    Field field() const noexcept { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_zero() const noexcept { return p_ ? r_ == 0 : q_.is_zero(); }
    bool is_one() const noexcept { return p_ ? r_ == 1 : q_ == 1; }

    /// Value as a rational (the residue itself for F_p).
    Rational to_rational() const { return p_ ? Rational(r_) : q_; }
    std::string to_string() const;

    Scalar inverse() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    void unify(const Scalar& o);

    Rational q_;
    std::int64_t r_ = 0;
    std::uint32_t p_ = 0;
};

}  // namespace semisep::linalg
