#include "quiverrep/field.hpp"

#include <cstdlib>

namespace quiverrep {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    std::int64_t result = 1 % p;
    while (e > 0) {
        if (e & 1) result = static_cast<std::int64_t>((__int128)result * a % p);
        a = static_cast<std::int64_t>((__int128)a * a % p);
        e >>= 1;
    }
    return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw validation_error("division by zero in GF(" + std::to_string(p) + ")");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return t;
}

Field Field::gf(std::int64_t p) {
    if (p < 2 || p > (std::int64_t(1) << 31) || !is_prime(p))
        throw validation_error("GF(p) requires a prime p in [2, 2^31], got " + std::to_string(p));
    Field f;
    f.kind_ = FieldKind::prime_field;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "QQ") return rationals();
    std::string body;
    if (text.rfind("GF(", 0) == 0 && text.back() == ')')
        body = text.substr(3, text.size() - 4);
    else if (text.rfind("GF:", 0) == 0)
        body = text.substr(3);
    else
        throw validation_error("unknown field '" + text + "' (expected \"Q\" or \"GF(p)\")");
    try {
        return gf(std::stoll(body));
    } catch (const std::invalid_argument&) {
        throw validation_error("bad prime in field '" + text + "'");
    } catch (const std::out_of_range&) {
        throw validation_error("bad prime in field '" + text + "'");
    }
}

std::int64_t Field::prime() const {
    if (!is_prime_field()) throw validation_error("prime() called on the rationals");
    return p_;
}

std::string Field::to_string() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const Field& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.prime());
}

Scalar Scalar::of_int(const Field& f, long long value) {
    if (f.is_rationals()) return Scalar(f, mpq_class(static_cast<long>(value)), 0);
    std::int64_t p = f.prime();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return Scalar(f, mpq_class(0), r);
}

Scalar Scalar::of_rational(long long num, long long den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(Field::rationals(), q, 0);
}

Scalar Scalar::of_mpq(mpq_class value) {
    value.canonicalize();
    return Scalar(Field::rationals(), std::move(value), 0);
}

Scalar Scalar::of_residue(const Field& f, std::int64_t residue) {
    std::int64_t p = f.prime();
    std::int64_t r = residue % p;
    if (r < 0) r += p;
    return Scalar(f, mpq_class(0), r);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(text, 10) != 0) throw validation_error("bad scalar '" + text + "'");
        if (f.is_rationals()) return Scalar(f, mpq_class(n), 0);
        mpz_class r = n % f.prime();
        std::int64_t v = r.get_si();
        if (v < 0) v += f.prime();
        return Scalar(f, mpq_class(0), v);
    }
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
        throw validation_error("bad scalar '" + text + "'");
    if (den == 0) throw validation_error("zero denominator in '" + text + "'");
    if (f.is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(f, q, 0);
    }
    std::int64_t p = f.prime();
    mpz_class rn = num % p, rd = den % p;
    std::int64_t vn = rn.get_si(), vd = rd.get_si();
    if (vn < 0) vn += p;
    if (vd < 0) vd += p;
    if (vd == 0) throw validation_error("denominator of '" + text + "' vanishes in GF(" + std::to_string(p) + ")");
    return Scalar(f, mpq_class(0), static_cast<std::int64_t>((__int128)vn * inv_mod(vd, p) % p));
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1 % field_.prime(); }

const mpq_class& Scalar::rat() const {
    if (!field_.is_rationals()) throw validation_error("rat() on a GF(p) scalar");
    return q_;
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw validation_error("residue() on a rational scalar");
    return r_;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_))
        throw validation_error("scalar field mismatch: " + a.field_.to_string() + " vs " + b.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& other) const {
    require_same(*this, other);
    if (field_.is_rationals()) return Scalar(field_, q_ + other.q_, 0);
    return Scalar(field_, mpq_class(0), (r_ + other.r_) % field_.prime());
}

Scalar Scalar::operator-(const Scalar& other) const {
    require_same(*this, other);
    if (field_.is_rationals()) return Scalar(field_, q_ - other.q_, 0);
    std::int64_t v = (r_ - other.r_) % field_.prime();
    if (v < 0) v += field_.prime();
    return Scalar(field_, mpq_class(0), v);
}

Scalar Scalar::operator*(const Scalar& other) const {
    require_same(*this, other);
    if (field_.is_rationals()) return Scalar(field_, q_ * other.q_, 0);
    return Scalar(field_, mpq_class(0), static_cast<std::int64_t>((__int128)r_ * other.r_ % field_.prime()));
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -q_, 0);
    return Scalar(field_, mpq_class(0), r_ == 0 ? 0 : field_.prime() - r_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, 1 / q_, 0);
    return Scalar(field_, mpq_class(0), inv_mod(r_, field_.prime()));
}

bool Scalar::operator==(const Scalar& other) const {
    return field_ == other.field_ && (field_.is_rationals() ? q_ == other.q_ : r_ == other.r_);
}

std::string Scalar::to_string() const {
    return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

} // namespace quiverrep
