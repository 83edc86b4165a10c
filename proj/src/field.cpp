#include "dgc/field.hpp"

namespace dgc {

static bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(long p) {
    if (!is_prime_long(p)) throw Error("field: " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& a) const {
    Scalar r = a;
    r.canonicalize();
    if (kind_ == Kind::Rationals) return r;
    // Residue mod p: numerator * inverse(denominator) in [0, p).
    mpz_class p(p_);
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = r.get_den() % p;
    if (den == 0) throw Error("field: denominator divisible by " + std::to_string(p_));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("field: no inverse mod " + std::to_string(p_));
    mpz_class res = (num * dinv) % p;
    if (res < 0) res += p;
    return Scalar(res);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error("field: division by zero");
    if (kind_ == Kind::Rationals) return Scalar(1) / a;
    return reduce(Scalar(a.get_den()) / Scalar(a.get_num()));
}

Scalar Field::from_long(long n) const { return reduce(Scalar(n)); }

Scalar Field::parse(const std::string& text) const {
    try {
        Scalar s(text, 10);
        return reduce(s);
    } catch (const std::invalid_argument&) {
        throw Error("field: cannot parse scalar '" + text + "'");
    }
}

std::string Field::to_string(const Scalar& a) const { return a.get_str(); }

std::string Field::spec_string() const {
    return kind_ == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse_spec(const std::string& spec) {
    if (spec == "Q") return rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        long p = std::stol(spec.substr(3));
        return prime(p);
    }
    throw Error("field: unknown field spec '" + spec + "' (want Q or Fp:<p>)");
}

}  // namespace dgc
