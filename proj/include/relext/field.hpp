#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "relext/error.hpp"

namespace relext {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// One scalar type for both ground fields. Over Q a Scalar is an arbitrary
// rational; over F_p it is a whole number in [0, p) and all arithmetic goes
// through the Field so the reduction is never skipped.
using Scalar = Rational;

class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long long v) const;
    // Exact a/b; b must be nonzero (and invertible mod p over F_p).
    Scalar from_fraction(long long num, long long den) const;
    Scalar reduce(const Rational& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    std::string str(const Scalar& a) const;
    std::string name() const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

} // namespace relext
