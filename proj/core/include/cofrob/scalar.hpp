#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cofrob {

/// The base field: Q or F_p for a prime p. All arithmetic is exact.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool operator==(const FieldSpec&) const = default;

  std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element: a reduced fraction over Q, or a residue in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(0) {}
  Scalar(const FieldSpec& field, long value) : field_(field), v_(value) {
    normalize();
  }
  Scalar(const FieldSpec& field, mpq_class value)
      : field_(field), v_(std::move(value)) {
    normalize();
  }

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  const FieldSpec& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && v_ == o.v_;
  }

  /// Canonical text form: "num/den" over Q, the residue over F_p.
  std::string to_string() const;
  /// Parses "a", "-a" or "a/b"; residues are reduced mod p.
  static Scalar parse(const FieldSpec& field, const std::string& text);

 private:
  void normalize();
  void check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
      throw std::invalid_argument("scalar field mismatch");
  }

  FieldSpec field_;
  mpq_class v_;
};

}  // namespace cofrob
