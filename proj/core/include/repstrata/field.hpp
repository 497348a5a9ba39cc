#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "repstrata/errors.hpp"

namespace repstrata {

using Rational = boost::multiprecision::cpp_rational;

// A field element: a residue in [0,p) for a prime field, or an exact
// rational. Scalars carry no field reference; arithmetic goes through
// FieldSpec so that the modulus is applied consistently.
class Scalar {
public:
    Scalar() : v_(std::int64_t{0}) {}

    static Scalar residue(std::int64_t r) { return Scalar(r); }
    static Scalar rational(Rational q) { return Scalar(std::move(q)); }

    bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }

    std::int64_t residue() const { return std::get<std::int64_t>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }

    bool is_zero() const {
        if (is_residue()) return residue() == 0;
        return rational().is_zero();
    }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    explicit Scalar(std::int64_t r) : v_(r) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    std::variant<std::int64_t, Rational> v_;
};

// The coefficient field: F_p for an odd prime p, or Q with arbitrary
// precision. p = 2 is rejected (the constructions assume char != 2).
class FieldSpec {
public:
    static FieldSpec prime(std::int64_t p);
    static FieldSpec rationals() { return FieldSpec(0); }

    bool is_prime_field() const { return p_ != 0; }
    std::int64_t modulus() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_rational(const Rational& q) const; // Q only

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // throws FieldError on zero
    Scalar div(const Scalar& a, const Scalar& b) const;

    std::string str(const Scalar& a) const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string name() const;

private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    void expect_residue(const Scalar& a) const;
    void expect_rational(const Scalar& a) const;

    std::int64_t p_; // 0 = rationals
};

bool is_prime(std::int64_t p);

} // namespace repstrata
