#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loopnil {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
    std::uint32_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field mod(std::uint32_t prime);

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string str() const;
};

bool is_prime_u32(std::uint32_t n);

/// Exact scalar: a rational in lowest terms, or a residue in [0, p).
/// Mixed-field arithmetic is rejected.
class Scalar {
public:
    Scalar() : field_{0}, rat_(0) {}

    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar of(Field f, long v);
    static Scalar rational(Rational v);
    static Scalar rational(long num, long den);
    static Scalar mod_p(long v, std::uint32_t p);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Rational value; only valid over Q.
    const Rational& rat() const;
    /// Residue in [0, p); only valid over F_p.
    std::uint32_t residue() const;

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational rat_;            // used when field_.p == 0
    std::uint32_t rem_ = 0;   // used when field_.p > 0
};

}  // namespace loopnil
