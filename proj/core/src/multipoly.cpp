#include "cofrob/multipoly.hpp"

#include <stdexcept>

namespace cofrob {

MultiPoly MultiPoly::constant(const FieldSpec& field, std::size_t nvars,
                              const Scalar& c) {
  MultiPoly p(field, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldSpec& field, std::size_t nvars,
                              std::size_t index) {
  MultiPoly p(field, nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar::one(field));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& o) const {
  if (o.is_zero()) throw std::domain_error("polynomial division by zero");
  MultiPoly rem = *this;
  MultiPoly quot(field_, nvars_);
  // lex-leading term of the divisor
  const auto& dlead = *o.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Exponents e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rlead.first[i] < dlead.first[i])
        throw std::domain_error("inexact polynomial division");
      e[i] = rlead.first[i] - dlead.first[i];
    }
    Scalar c = rlead.second / dlead.second;
    MultiPoly mono(field_, nvars_);
    mono.add_term(e, c);
    quot = quot + mono;
    rem = rem - mono * o;
  }
  return quot;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t index, const Scalar& value) const {
  MultiPoly r(field_, nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (unsigned k = 0; k < e[index]; ++k) t *= value;
    Exponents e2;
    e2.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != index) e2.push_back(e[i]);
    r.add_term(e2, t);
  }
  return r;
}

unsigned MultiPoly::degree_in(std::size_t index) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& input,
                   const FieldSpec& field, std::size_t nvars) {
  std::size_t n = input.size();
  if (n == 0) return MultiPoly::constant(field, nvars, Scalar::one(field));
  auto m = input;
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(field, nvars, Scalar::one(field));
  for (std::size_t r = 0; r + 1 < n; ++r) {
    std::size_t p = r;
    while (p < n && m[p][r].is_zero()) ++p;
    if (p == n) return MultiPoly(field, nvars);  // zero column, det = 0
    if (p != r) {
      std::swap(m[p], m[r]);
      negate = !negate;
    }
    for (std::size_t i = r + 1; i < n; ++i)
      for (std::size_t j = r + 1; j < n; ++j)
        m[i][j] =
            (m[r][r] * m[i][j] - m[i][r] * m[r][j]).divide_exact(prev);
    prev = m[r][r];
  }
  MultiPoly d = m[n - 1][n - 1];
  if (negate)
    d = MultiPoly(field, nvars) - d;
  return d;
}

}  // namespace cofrob
