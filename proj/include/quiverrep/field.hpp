#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quiverrep/errors.hpp"

namespace quiverrep {

enum class FieldKind { rationals, prime_field };

/// Base field of all linear algebra: the rationals or GF(p) for a prime p.
class Field {
public:
    Field() : kind_(FieldKind::rationals), p_(0) {}

    static Field rationals() { return Field(); }
    static Field gf(std::int64_t p);

    /// Accepts "Q" or "GF(p)" (also "GF:p").
    static Field parse(const std::string& text);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }

    /// Characteristic: 0 for the rationals, p for GF(p).
    std::int64_t characteristic() const { return is_rationals() ? 0 : p_; }
    std::int64_t prime() const;

    bool operator==(const Field& other) const = default;

    std::string to_string() const;

private:
    FieldKind kind_;
    std::int64_t p_;
};

/// One exact field element.  Rationals are kept in lowest terms with a
/// positive denominator (mpq_class canonical form); GF(p) values are
/// residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), q_(0), r_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long long value);
    static Scalar of_rational(long long num, long long den);
    static Scalar of_mpq(mpq_class value);
    static Scalar of_residue(const Field& f, std::int64_t residue);

    /// Accepts "a", "-a" or "a/b".
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; requires a rationals field.
    const mpq_class& rat() const;
    /// Residue in [0, p); requires a prime field.
    std::int64_t residue() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Scalar(Field f, mpq_class q, std::int64_t r) : field_(f), q_(std::move(q)), r_(r) {}
    static void require_same(const Scalar& a, const Scalar& b);

    Field field_;
    mpq_class q_;     // value when rationals
    std::int64_t r_;  // residue when prime field
};

bool is_prime(std::int64_t n);

/// a^e mod p with 0 <= result < p.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p);

/// Inverse of a mod p; throws validation_error when a == 0 (mod p).
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

} // namespace quiverrep
