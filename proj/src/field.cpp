#include "relext/field.hpp"

namespace relext {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::ZeroRelation: return "ZeroRelation";
    case ErrorKind::NonAdmissibleIdeal: return "NonAdmissibleIdeal";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::GlobalDimensionTooHigh: return "GlobalDimensionTooHigh";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotAModuleMap: return "NotAModuleMap";
    case ErrorKind::ActionMismatch: return "ActionMismatch";
    case ErrorKind::RepresentativeChoiceFailed: return "RepresentativeChoiceFailed";
    case ErrorKind::Internal: return "InternalInvariant";
    }
    return "Error";
}

int error_exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::InfiniteDimensional:
    case ErrorKind::CyclicQuiver:
    case ErrorKind::GlobalDimensionTooHigh:
        return 2;
    case ErrorKind::Internal:
    case ErrorKind::RepresentativeChoiceFailed:
        return 3;
    default:
        return 1;
    }
}

bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p))
        throw Error(ErrorKind::Syntax, "field characteristic must be a prime, got " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Scalar Field::from_long(long long v) const {
    return reduce(Rational(v));
}

Scalar Field::from_fraction(long long num, long long den) const {
    if (den == 0)
        throw Error(ErrorKind::Syntax, "zero denominator in scalar");
    return reduce(Rational(Integer(num), Integer(den)));
}

Scalar Field::reduce(const Rational& v) const {
    if (kind_ == Kind::Rationals)
        return v;
    Integer p(p_);
    Integer num = numerator(v) % p;
    if (num < 0)
        num += p;
    Integer den = denominator(v) % p;
    if (den < 0)
        den += p;
    if (den == 0)
        throw Error(ErrorKind::Syntax, "denominator divisible by " + std::to_string(p_));
    if (den == 1)
        return Rational(num);
    return mul(Rational(num), inv(Rational(den)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals)
        return a + b;
    Integer s = numerator(a) + numerator(b);
    if (s >= p_)
        s -= p_;
    return Rational(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals)
        return a - b;
    Integer s = numerator(a) - numerator(b);
    if (s < 0)
        s += p_;
    return Rational(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals)
        return a * b;
    return Rational(numerator(a) * numerator(b) % p_);
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::Rationals)
        return -a;
    if (a.is_zero())
        return a;
    return Rational(Integer(p_) - numerator(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (a.is_zero())
        internal_error("division by zero");
    if (kind_ == Kind::Rationals)
        return 1 / a;
    // extended Euclid on machine words; p < 2^31 so everything fits
    long long r0 = static_cast<long long>(p_), r1 = numerator(a).convert_to<long long>();
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    check_internal(r0 == 1, "noninvertible residue");
    if (t0 < 0)
        t0 += p_;
    return Rational(t0);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::Rationals)
        return a / b;
    return mul(a, inv(b));
}

std::string Field::str(const Scalar& a) const {
    return a.str();
}

std::string Field::name() const {
    if (kind_ == Kind::Rationals)
        return "Q";
    return "F" + std::to_string(p_);
}

} // namespace relext
