#pragma once

#include <map>
#include <vector>

#include "cofrob/matrix.hpp"
#include "cofrob/scalar.hpp"

namespace cofrob {

/// Sparse multivariate polynomial over an exact field, fixed variable count.
/// Terms are kept in lexicographic exponent order.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly(const FieldSpec& field, std::size_t nvars)
      : field_(field), nvars_(nvars) {}

  static MultiPoly constant(const FieldSpec& field, std::size_t nvars,
                            const Scalar& c);
  static MultiPoly variable(const FieldSpec& field, std::size_t nvars,
                            std::size_t index);

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  /// Exact division; throws if the quotient is not a polynomial.
  MultiPoly divide_exact(const MultiPoly& o) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Substitutes one variable by a field value; the variable count shrinks.
  MultiPoly substitute(std::size_t index, const Scalar& value) const;
  unsigned degree_in(std::size_t index) const;

  bool operator==(const MultiPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  void add_term(const Exponents& e, const Scalar& c);

  FieldSpec field_;
  std::size_t nvars_;
  std::map<Exponents, Scalar> terms_;
};

/// Fraction-free (Bareiss) determinant of a matrix with polynomial entries.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m,
                   const FieldSpec& field, std::size_t nvars);

}  // namespace cofrob
