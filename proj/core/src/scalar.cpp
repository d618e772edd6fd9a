#include "cofrob/scalar.hpp"

namespace cofrob {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("FieldSpec::prime: " + std::to_string(p) +
                                " is not prime");
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rationals) return "Q";
  return "F_" + std::to_string(p);
}

void Scalar::normalize() {
  v_.canonicalize();
  if (field_.kind == FieldSpec::Kind::prime) {
    mpz_class pz(static_cast<unsigned long>(field_.p));
    mpz_class num = v_.get_num();
    mpz_class den = v_.get_den();
    if (den != 1) {
      mpz_class dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("denominator not invertible mod p");
      num *= dinv;
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    v_ = mpq_class(r);
  }
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  return Scalar(field_, mpq_class(v_ * o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.kind == FieldSpec::Kind::rationals)
    return Scalar(field_, mpq_class(1 / v_));
  mpz_class pz(static_cast<unsigned long>(field_.p));
  mpz_class num = v_.get_num();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible residue");
  return Scalar(field_, mpq_class(inv));
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldSpec::Kind::prime) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad scalar literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in scalar literal: " + text);
  return Scalar(field, q);
}

}  // namespace cofrob
