#include "loopnil/scalar.hpp"

namespace loopnil {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::mod(std::uint32_t prime) {
    if (!is_prime_u32(prime)) throw std::invalid_argument("Field::mod: " + std::to_string(prime) + " is not prime");
    return Field{prime};
}

std::string Field::str() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

Scalar Scalar::zero(Field f) { return of(f, 0); }
Scalar Scalar::one(Field f) { return of(f, 1); }

Scalar Scalar::of(Field f, long v) {
    return f.is_rational() ? rational(Rational(v)) : mod_p(v, f.p);
}

Scalar Scalar::rational(Rational v) {
    Scalar s;
    s.field_ = Field::rationals();
    s.rat_ = std::move(v);   // cpp_rational keeps lowest terms, positive denominator
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar::rational: zero denominator");
    return rational(Rational(num, den));
}

Scalar Scalar::mod_p(long v, std::uint32_t p) {
    Field f = Field::mod(p);
    Scalar s;
    s.field_ = f;
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    s.rem_ = static_cast<std::uint32_t>(r);
    return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_.is_zero() : rem_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? rat_ == 1 : rem_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("Scalar: mixed-field arithmetic (" + field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.rem_ = rem_ == 0 ? 0 : field_.p - rem_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (field_.is_rational())
        s.rat_ += o.rat_;
    else
        s.rem_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(rem_) + o.rem_) % field_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (field_.is_rational())
        s.rat_ *= o.rat_;
    else
        s.rem_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem_) * o.rem_ % field_.p);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: zero");
    Scalar s(*this);
    if (field_.is_rational()) {
        s.rat_ = Rational(1) / rat_;
    } else {
        // Fermat: a^(p-2) mod p
        std::uint64_t base = rem_, acc = 1, e = field_.p - 2;
        while (e) {
            if (e & 1) acc = acc * base % field_.p;
            base = base * base % field_.p;
            e >>= 1;
        }
        s.rem_ = static_cast<std::uint32_t>(acc);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? rat_ == o.rat_ : rem_ == o.rem_;
}

const Rational& Scalar::rat() const {
    if (!field_.is_rational()) throw std::logic_error("Scalar::rat: not a rational");
    return rat_;
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational()) throw std::logic_error("Scalar::residue: not a prime-field element");
    return rem_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.str() : std::to_string(rem_);
}

}  // namespace loopnil
