#pragma once

#include <gmpxx.h>

#include <string>

#include "hlpa/errors.hpp"

namespace hlpa {

/// Coefficient field: the rationals (p == 0) or the prime field F_p.
struct Field {
    unsigned long p = 0;

    bool operator==(const Field&) const = default;

    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

/// An exact field element. Values in F_p are kept as canonical residues.
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, mpq_class value) : field_(field), value_(std::move(value)) {
        normalize();
    }
    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Scalar operator+(const Scalar& o) const { return Scalar(join(o), value_ + o.value_); }
    Scalar operator-(const Scalar& o) const { return Scalar(join(o), value_ - o.value_); }
    Scalar operator*(const Scalar& o) const { return Scalar(join(o), value_ * o.value_); }
    Scalar operator-() const { return Scalar(field_, -value_); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }

    std::string str() const { return value_.get_str(); }

private:
    Field join(const Scalar& o) const {
        if (!(field_ == o.field_)) throw DomainError("scalar field mismatch");
        return field_;
    }

    void normalize() {
        value_.canonicalize();
        if (field_.p == 0) return;
        mpz_class p(static_cast<unsigned long>(field_.p));
        mpz_class den = value_.get_den();
        mpz_class num = value_.get_num();
        if (den != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw DomainError("denominator not invertible mod " + std::to_string(field_.p));
            num *= inv;
        }
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        value_ = mpq_class(r);
    }

    Field field_;
    mpq_class value_ = 0;
};

}  // namespace hlpa
