#include "repstrata/field.hpp"

namespace repstrata {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p == 2) throw FieldError("p = 2 is not supported (char k != 2 required)");
    if (!is_prime(p) || p < 3) throw FieldError("field modulus must be an odd prime >= 3, got " + std::to_string(p));
    // products of two residues must fit in int64
    if (p >= (std::int64_t{1} << 31)) throw FieldError("field modulus too large (must be < 2^31)");
    return FieldSpec(p);
}

std::int64_t FieldSpec::modulus() const {
    if (!is_prime_field()) throw FieldError("rationals have no modulus");
    return p_;
}

void FieldSpec::expect_residue(const Scalar& a) const {
    if (!a.is_residue()) throw FieldError("rational scalar used in a prime field");
}

void FieldSpec::expect_rational(const Scalar& a) const {
    if (!a.is_rational()) throw FieldError("prime-field residue used over the rationals");
}

Scalar FieldSpec::zero() const {
    return is_prime_field() ? Scalar::residue(0) : Scalar::rational(Rational(0));
}

Scalar FieldSpec::one() const {
    return is_prime_field() ? Scalar::residue(1) : Scalar::rational(Rational(1));
}

Scalar FieldSpec::from_int(std::int64_t v) const {
    if (!is_prime_field()) return Scalar::rational(Rational(v));
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return Scalar::residue(r);
}

Scalar FieldSpec::from_rational(const Rational& q) const {
    if (is_prime_field()) throw FieldError("cannot place a rational into a prime field");
    return Scalar::rational(q);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) {
        expect_residue(a);
        expect_residue(b);
        std::int64_t s = a.residue() + b.residue();
        if (s >= p_) s -= p_;
        return Scalar::residue(s);
    }
    return Scalar::rational(a.rational() + b.rational());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) {
        expect_residue(a);
        expect_residue(b);
        std::int64_t s = a.residue() - b.residue();
        if (s < 0) s += p_;
        return Scalar::residue(s);
    }
    return Scalar::rational(a.rational() - b.rational());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) {
        expect_residue(a);
        expect_residue(b);
        return Scalar::residue((a.residue() * b.residue()) % p_);
    }
    return Scalar::rational(a.rational() * b.rational());
}

Scalar FieldSpec::neg(const Scalar& a) const {
    if (is_prime_field()) {
        expect_residue(a);
        return a.residue() == 0 ? a : Scalar::residue(p_ - a.residue());
    }
    return Scalar::rational(-a.rational());
}

namespace {

// extended Euclid: returns x with a*x == 1 (mod p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

} // namespace

Scalar FieldSpec::inv(const Scalar& a) const {
    if (a.is_zero()) throw FieldError("division by zero");
    if (is_prime_field()) {
        expect_residue(a);
        return Scalar::residue(mod_inverse(a.residue(), p_));
    }
    return Scalar::rational(Rational(1) / a.rational());
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
}

std::string FieldSpec::str(const Scalar& a) const {
    if (a.is_residue()) return std::to_string(a.residue());
    return a.rational().str();
}

std::string FieldSpec::name() const {
    return is_prime_field() ? "F_" + std::to_string(p_) : "Q";
}

} // namespace repstrata
