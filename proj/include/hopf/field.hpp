#pragma once

// Exact scalars over the rationals or a prime field, and the field
// descriptor (with an optional distinguished root of unity) that every
// matrix in the library carries.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Residue modulo a prime p < 2^31.
struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
};

/// An exact field element. Either an arbitrary-precision rational or a
/// residue modulo a prime; arithmetic between the two kinds (or between
/// residues of different moduli) throws FieldMismatch.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
    Scalar(std::int64_t value, std::uint32_t p);

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    /// 0 for rationals.
    std::uint32_t characteristic() const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue() const { return std::get<Residue>(v_).value; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    Scalar inverse() const;
    Scalar pow(std::int64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3", "-1/2" for rationals; canonical residue in [0, p) otherwise.
    std::string to_string() const;

private:
    void require_same(const Scalar& o) const;
    std::variant<mpq_class, Residue> v_;
};

/// A root of unity distinguished inside the field.
struct RootOfUnity {
    Scalar value;
    unsigned order = 1;
};

/// The base field: the rationals or F_p, optionally carrying a primitive
/// root of unity of a given order.
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rationals();
    /// Throws Error unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    /// The field (without root of unity) a scalar lives in.
    static Field of(const Scalar& s);

    /// Returns a copy carrying `zeta` as a primitive `order`-th root of
    /// unity; throws Error if zeta does not have exactly that order.
    Field with_root(const Scalar& zeta, unsigned order) const;
    Field with_root(std::int64_t zeta, unsigned order) const { return with_root(from_int(zeta), order); }

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    const std::optional<RootOfUnity>& root() const { return root_; }

    Scalar zero() const { return from_int(0); }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t n) const;
    Scalar from_rational(const mpq_class& q) const;

    /// Parses "3", "-1/2", ... In strict mode prime-field entries must be
    /// canonical residues in [0, p) and rationals must be in lowest terms.
    Scalar parse(std::string_view text, bool strict = true) const;

    /// True iff a scalar belongs to this field.
    bool contains(const Scalar& s) const { return s.characteristic() == p_; }

    /// Same arithmetic (roots of unity are ignored).
    bool compatible(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator==(const Field& o) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Rational;
    std::uint32_t p_ = 0;
    std::optional<RootOfUnity> root_;
};

/// Deterministic primality test for n < 2^31.
bool is_prime(std::uint64_t n);

}  // namespace hopf
