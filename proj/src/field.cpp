#include "linrel/field.hpp"

#include <cctype>

namespace linrel {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((u128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

// Deterministic Miller-Rabin; this witness set decides primality for all 64-bit n.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    }
    // Keeps every signed intermediate (extended Euclid, int reduction) in range.
    if (p >= (std::uint64_t(1) << 62)) {
        throw ValidationError("field characteristic must be below 2^62");
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::str() const {
    if (kind_ == FieldKind::Rational) return "Q";
    return "GF(" + std::to_string(characteristic_) + ")";
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "q" || t == "rational" || t == "rationals") return rationals();
    std::string digits;
    if (t.rfind("gf:", 0) == 0) {
        digits = t.substr(3);
    } else if (t.rfind("gf(", 0) == 0 && !t.empty() && t.back() == ')') {
        digits = t.substr(3, t.size() - 4);
    } else {
        throw ParseError("unrecognized field spec '" + text + "' (expected q or gf:P)");
    }
    if (digits.empty()) throw ParseError("missing characteristic in field spec '" + text + "'");
    std::uint64_t p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("bad characteristic in field spec '" + text + "'");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime_field(p);
}

namespace {

// Inverse of a mod p via extended Euclid; a in [1, p).
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p, new_r = a;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw ValidationError("not invertible mod p");
    std::int64_t res = t % static_cast<std::int64_t>(p);
    if (res < 0) res += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(res);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& field) {
    if (field.is_rational()) return Scalar(field, mpq_class(1), 0);
    return Scalar(field, mpq_class(0), 1 % field.characteristic());
}

Scalar Scalar::from_int(const FieldSpec& field, long value) {
    if (field.is_rational()) return Scalar(field, mpq_class(value), 0);
    std::uint64_t p = field.characteristic();
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Scalar(field, mpq_class(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_rational(mpq_class value) {
    value.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(value), 0);
}

Scalar Scalar::from_residue(const FieldSpec& field, std::uint64_t value) {
    if (field.is_rational()) throw ValidationError("from_residue requires a prime field");
    return Scalar(field, mpq_class(0), value % field.characteristic());
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    if (field.is_rational()) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        return Scalar(field, std::move(q), 0);
    }
    bool negative = text[0] == '-';
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw ParseError("bad field element literal '" + text + "'");
    std::uint64_t v = 0;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("bad field element literal '" + text + "' for " + field.str());
        }
        v = static_cast<std::uint64_t>(((unsigned __int128)v * 10 + (text[i] - '0')) %
                                       field.characteristic());
    }
    Scalar s = from_residue(field, v);
    return negative ? -s : s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw ValidationError("residue() on a rational scalar");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw ValidationError("rational() on a GF(p) scalar");
    return rat_;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw ValidationError("scalar field mismatch: " + field_.str() + " vs " + rhs.field_.str());
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return Scalar(field_, rat_ + rhs.rat_, 0);
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = res_ + rhs.res_;  // p < 2^63 would be needed for no-overflow; reduce carefully
    if (s < res_ || s >= p) s -= p;     // handles wraparound for p close to 2^64
    return Scalar(field_, mpq_class(0), s);
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -rat_, 0);
    std::uint64_t p = field_.characteristic();
    return Scalar(field_, mpq_class(0), res_ == 0 ? 0 : p - res_);
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    if (field_.is_rational()) return Scalar(field_, rat_ * rhs.rat_, 0);
    return Scalar(field_, mpq_class(0),
                  static_cast<std::uint64_t>((unsigned __int128)res_ * rhs.res_ % field_.characteristic()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    if (field_.is_rational()) return Scalar(field_, 1 / rat_, 0);
    return Scalar(field_, mpq_class(0), invmod_u64(res_, field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rational() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return rat_.get_str();
    return std::to_string(res_);
}

}  // namespace linrel
