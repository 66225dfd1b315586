#include "hopf/field.hpp"

#include <cctype>
#include <sstream>

namespace hopf {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    for (std::uint64_t q = 17; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

Scalar::Scalar(std::int64_t value, std::uint32_t p) : v_(Residue{reduce(value, p), p}) {}

std::uint32_t Scalar::characteristic() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->modulus;
    return 0;
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::require_same(const Scalar& o) const {
    if (characteristic() != o.characteristic()) {
        throw FieldMismatch("scalars from different fields");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    r -= o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r = *this;
    r *= o;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (auto r = std::get_if<Residue>(&v_)) {
        Scalar s = *this;
        std::get<Residue>(s.v_).value = r->value == 0 ? 0 : r->modulus - r->value;
        return s;
    }
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint32_t s = r->value + std::get<Residue>(o.v_).value;
        if (s >= r->modulus) s -= r->modulus;
        r->value = s;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint32_t b = std::get<Residue>(o.v_).value;
        r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        r->value = mulmod(r->value, std::get<Residue>(o.v_).value, r->modulus);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (auto r = std::get_if<Residue>(&v_)) {
        Scalar s = *this;
        std::get<Residue>(s.v_).value = powmod(r->value, r->modulus - 2, r->modulus);
        return s;
    }
    return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar result = is_rational() ? Scalar(mpq_class(1)) : Scalar(1, characteristic());
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    if (characteristic() != o.characteristic()) return false;
    if (auto r = std::get_if<Residue>(&v_)) return r->value == std::get<Residue>(o.v_).value;
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw Error("not a prime below 2^31: " + std::to_string(p));
    }
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
}

Field Field::of(const Scalar& s) {
    return s.is_rational() ? rationals() : prime(s.characteristic());
}

Field Field::with_root(const Scalar& zeta, unsigned order) const {
    if (!contains(zeta)) throw FieldMismatch("root of unity from another field");
    if (order == 0) throw Error("root of unity order must be positive");
    if (!zeta.pow(order).is_one()) {
        throw Error(zeta.to_string() + " is not an " + std::to_string(order) + "-th root of unity in " + describe());
    }
    for (unsigned m = 1; m < order; ++m) {
        if (zeta.pow(m).is_one()) {
            throw Error(zeta.to_string() + " is not a primitive " + std::to_string(order) + "-th root of unity");
        }
    }
    Field f = *this;
    f.root_ = RootOfUnity{zeta, order};
    return f;
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == Kind::Prime) return Scalar(n, p_);
    return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (kind_ == Kind::Rational) return Scalar(q);
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw DivisionByZero();
    return Scalar(num.get_si(), p_) / Scalar(den.get_si(), p_);
}

Scalar Field::parse(std::string_view text, bool strict) const {
    std::string s(text);
    auto bad = [&](const std::string& why) { return Error("invalid scalar \"" + s + "\": " + why); };
    if (s.empty()) throw bad("empty");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) throw bad("unexpected character");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad("not an integer or fraction");
    if (q.get_den() == 0) throw DivisionByZero();
    mpq_class canon = q;
    canon.canonicalize();
    if (kind_ == Kind::Prime) {
        if (strict) {
            if (canon.get_den() != 1) throw bad("fractions are not canonical residues");
            if (canon < 0 || canon >= p_) throw bad("residue outside [0, " + std::to_string(p_) + ")");
            if (canon.get_str() != s) throw bad("non-canonical spelling");
        }
        return from_rational(canon);
    }
    if (strict && canon.get_str() != s) throw bad("not in lowest terms");
    return Scalar(canon);
}

bool Field::operator==(const Field& o) const {
    if (!compatible(o)) return false;
    if (root_.has_value() != o.root_.has_value()) return false;
    return !root_ || (root_->order == o.root_->order && root_->value == o.root_->value);
}

std::string Field::describe() const {
    std::ostringstream os;
    if (kind_ == Kind::Rational) {
        os << "Q";
    } else {
        os << "F_" << p_;
    }
    if (root_) os << " (zeta=" << root_->value.to_string() << ", order " << root_->order << ")";
    return os.str();
}

}  // namespace hopf
