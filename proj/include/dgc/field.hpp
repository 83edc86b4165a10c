// Exact scalar arithmetic: rationals (GMP-backed) and prime fields F_p.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A scalar is always held as a canonicalized mpq_class. For prime fields the
// value is the residue in [0, p) with denominator 1; every operation routes
// through Field so the reduction is never skipped.
using Scalar = mpq_class;

class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(long p);

    Kind kind() const { return kind_; }
    long characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long n) const;
    // Accepts "a", "-a", "a/b".
    Scalar parse(const std::string& text) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return a == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    // Re-normalizes a raw scalar into the field's canonical form.
    Scalar reduce(const Scalar& a) const;

    std::string to_string(const Scalar& a) const;
    std::string spec_string() const;  // "Q" or "Fp:<p>"
    static Field parse_spec(const std::string& spec);

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

}  // namespace dgc
