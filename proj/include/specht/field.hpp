#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "specht/error.hpp"

namespace specht {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_prime(long long p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (long long q = 3; q * q <= p; q += 2)
        if (p % q == 0)
            return false;
    return true;
}

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long long p = 0; // meaningful iff kind == PrimeField

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

    static FieldSpec prime(long long p)
    {
        if (!is_prime(p))
            raise(errc::parameter_out_of_range, "field modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{FieldKind::PrimeField, p};
    }

    // Field selection grammar used by the CLI: "q" or "fp:<p>".
    static FieldSpec parse(std::string_view s)
    {
        if (s == "q" || s == "Q")
            return rationals();
        if (s.rfind("fp:", 0) == 0) {
            long long p = 0;
            try {
                p = std::stoll(std::string(s.substr(3)));
            } catch (const std::exception&) {
                raise(errc::parse_error, "bad field string '" + std::string(s) + "'");
            }
            return prime(p);
        }
        raise(errc::parse_error, "bad field string '" + std::string(s) + "' (expected q or fp:<p>)");
    }

    long long characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }

    std::string str() const
    {
        return kind == FieldKind::Rationals ? std::string("q") : "fp:" + std::to_string(p);
    }

    bool operator==(const FieldSpec&) const = default;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b)
{
    if (!(a == b))
        raise(errc::field_mismatch, "operands over " + a.str() + " and " + b.str());
}

// Exact field element: reduced rational over Q, canonical residue in [0,p) over F_p.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f)
    {
        Scalar s;
        s.field_ = f;
        return s;
    }

    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    static Scalar from_int(const FieldSpec& f, long long v)
    {
        Scalar s;
        s.field_ = f;
        if (f.kind == FieldKind::Rationals) {
            s.q_ = v;
        } else {
            long long r = v % f.p;
            if (r < 0)
                r += f.p;
            s.r_ = r;
        }
        return s;
    }

    static Scalar from_int(const FieldSpec& f, const Int& v)
    {
        Scalar s;
        s.field_ = f;
        if (f.kind == FieldKind::Rationals) {
            s.q_ = Rat(v);
        } else {
            Int r = v % f.p;
            if (r < 0)
                r += f.p;
            s.r_ = static_cast<long long>(r);
        }
        return s;
    }

    // a/b in the field; over F_p this is a * b^{-1}.
    static Scalar fraction(const FieldSpec& f, const Int& num, const Int& den)
    {
        if (den == 0)
            raise(errc::division_by_zero, "zero denominator");
        if (f.kind == FieldKind::Rationals) {
            Scalar s;
            s.field_ = f;
            s.q_ = Rat(num, den);
            return s;
        }
        return from_int(f, num) / from_int(f, den);
    }

    static Scalar from_rat(const Rat& q)
    {
        Scalar s;
        s.field_ = FieldSpec::rationals();
        s.q_ = q;
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const
    {
        return field_.kind == FieldKind::Rationals ? q_.is_zero() : r_ == 0;
    }

    bool is_one() const
    {
        return field_.kind == FieldKind::Rationals ? q_ == 1 : r_ == 1;
    }

    const Rat& rat() const
    {
        if (field_.kind != FieldKind::Rationals)
            raise(errc::field_mismatch, "rat() on a prime-field scalar");
        return q_;
    }

    long long residue() const
    {
        if (field_.kind != FieldKind::PrimeField)
            raise(errc::field_mismatch, "residue() on a rational scalar");
        return r_;
    }

    Scalar operator-() const
    {
        Scalar s = *this;
        if (field_.kind == FieldKind::Rationals)
            s.q_ = -q_;
        else if (r_ != 0)
            s.r_ = field_.p - r_;
        return s;
    }

    Scalar operator+(const Scalar& o) const
    {
        require_same_field(field_, o.field_);
        Scalar s = *this;
        if (field_.kind == FieldKind::Rationals) {
            s.q_ += o.q_;
        } else {
            long long r = r_ + o.r_;
            if (r >= field_.p)
                r -= field_.p;
            s.r_ = r;
        }
        return s;
    }

    Scalar operator-(const Scalar& o) const { return *this + (-o); }

    Scalar operator*(const Scalar& o) const
    {
        require_same_field(field_, o.field_);
        Scalar s = *this;
        if (field_.kind == FieldKind::Rationals) {
            s.q_ *= o.q_;
        } else {
            s.r_ = mulmod(r_, o.r_, field_.p);
        }
        return s;
    }

    Scalar inv() const
    {
        if (is_zero())
            raise(errc::division_by_zero, "inverse of zero");
        Scalar s = *this;
        if (field_.kind == FieldKind::Rationals) {
            s.q_ = 1 / q_;
        } else {
            s.r_ = inv_mod(r_, field_.p);
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const
    {
        if (!(field_ == o.field_))
            return false;
        return field_.kind == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
    }

    std::string str() const
    {
        if (field_.kind == FieldKind::PrimeField)
            return std::to_string(r_);
        return q_.str();
    }

private:
    static long long mulmod(long long a, long long b, long long p)
    {
        return static_cast<long long>((static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b)) % static_cast<unsigned __int128>(p));
    }

    // Extended Euclid; p prime, 0 < a < p.
    static long long inv_mod(long long a, long long p)
    {
        long long old_r = a, r = p;
        long long old_s = 1, s = 0;
        while (r != 0) {
            long long q = old_r / r;
            long long t = old_r - q * r;
            old_r = r;
            r = t;
            t = old_s - q * s;
            old_s = s;
            s = t;
        }
        long long res = old_s % p;
        if (res < 0)
            res += p;
        return res;
    }

    FieldSpec field_;
    Rat q_;           // Rationals payload
    long long r_ = 0; // PrimeField payload, canonical in [0,p)
};

// Exact binomial coefficient; zero outside 0 <= r <= m (C(n,-1) = 0 is relied on
// by the k = 0 counting formulas).
inline Int binomial(long long m, long long r)
{
    if (m < 0)
        raise(errc::parameter_out_of_range, "binomial with negative m");
    if (r < 0 || r > m)
        return 0;
    if (r > m - r)
        r = m - r;
    Int acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc *= m - r + i;
        acc /= i;
    }
    return acc;
}

} // namespace specht
