#include "cofrob/affine_family.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "cofrob/multipoly.hpp"

namespace cofrob {

namespace {

Scalar det_at(const Matrix& m0, const std::vector<Matrix>& family,
              const std::vector<Scalar>& t) {
  Matrix m = m0;
  for (std::size_t i = 0; i < family.size(); ++i)
    m = m + family[i].scaled(t[i]);
  return m.det();
}

// (base+1)^k with saturation against `limit`
bool grid_fits(std::uint64_t base, std::size_t k, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > limit / base) return false;
    total *= base;
  }
  return total <= limit;
}

// Enumerates {0..base-1}^k; returns true and fills `found` on the first
// nonzero determinant, false when the whole grid vanished.
bool scan_grid(const Matrix& m0, const std::vector<Matrix>& family,
               std::uint64_t base, std::vector<Scalar>& found) {
  const FieldSpec& f = m0.field();
  std::size_t k = family.size();
  std::vector<std::uint64_t> idx(k, 0);
  while (true) {
    std::vector<Scalar> t;
    t.reserve(k);
    for (auto v : idx) t.emplace_back(f, static_cast<long>(v));
    if (!det_at(m0, family, t).is_zero()) {
      found = t;
      return true;
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == base) idx[pos++] = 0;
    if (pos == k) return false;
  }
}

MultiPoly symbolic_det(const Matrix& m0, const std::vector<Matrix>& family) {
  const FieldSpec& f = m0.field();
  std::size_t n = m0.rows(), k = family.size();
  std::vector<std::vector<MultiPoly>> entries(
      n, std::vector<MultiPoly>(n, MultiPoly(f, k)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e = MultiPoly::constant(f, k, m0.at(i, j));
      for (std::size_t l = 0; l < k; ++l)
        if (!family[l].at(i, j).is_zero())
          e = e + MultiPoly::variable(f, k, l) *
                      MultiPoly::constant(f, k, family[l].at(i, j));
      entries[i][j] = e;
    }
  return poly_det(entries, f, k);
}

// Specializes variables one at a time; works over Q where the value range
// {0..deg} always contains a good point.
bool point_from_nonzero_poly(const MultiPoly& det, std::uint64_t n,
                             std::vector<Scalar>& out) {
  const FieldSpec& f = det.field();
  MultiPoly cur = det;
  out.clear();
  while (cur.nvars() > 0) {
    bool found = false;
    std::uint64_t range = n + 1;
    if (f.kind == FieldSpec::Kind::prime && f.p < range) range = f.p;
    for (std::uint64_t v = 0; v < range; ++v) {
      MultiPoly next = cur.substitute(0, Scalar(f, static_cast<long>(v)));
      if (!next.is_zero()) {
        out.emplace_back(f, static_cast<long>(v));
        cur = next;
        found = true;
        break;
      }
    }
    if (!found) return false;  // possible only over a small prime field
  }
  return !cur.is_zero();
}

}  // namespace

AffineFamilyResult invertible_in_affine_family(
    const Matrix& m0, const std::vector<Matrix>& family,
    const AffineFamilyConfig& cfg) {
  const FieldSpec& f = m0.field();
  std::size_t n = m0.rows();
  if (m0.rows() != m0.cols())
    throw std::invalid_argument("affine family: M0 not square");
  for (const auto& m : family)
    if (m.rows() != n || m.cols() != n || !(m.field() == f))
      throw std::invalid_argument("affine family: member shape/field mismatch");

  std::size_t k = family.size();
  AffineFamilyResult res;
  res.seed = cfg.seed;

  if (k == 0) {
    res.route = "constant";
    if (!m0.det().is_zero()) {
      res.kind = AffineFamilyResult::Kind::witness;
    } else {
      res.kind = AffineFamilyResult::Kind::none_exists;
    }
    return res;
  }

  if (f.kind == FieldSpec::Kind::rationals) {
    if (grid_fits(n + 1, k, cfg.budget)) {
      res.route = "grid";
      std::vector<Scalar> t;
      if (scan_grid(m0, family, n + 1, t)) {
        res.kind = AffineFamilyResult::Kind::witness;
        res.params = t;
      } else {
        res.kind = AffineFamilyResult::Kind::none_exists;
      }
      return res;
    }
    if (k <= cfg.symbolic_cap) {
      res.route = "symbolic";
      MultiPoly d = symbolic_det(m0, family);
      if (d.is_zero()) {
        res.kind = AffineFamilyResult::Kind::none_exists;
        return res;
      }
      std::vector<Scalar> t;
      if (point_from_nonzero_poly(d, n, t) &&
          !det_at(m0, family, t).is_zero()) {
        res.kind = AffineFamilyResult::Kind::witness;
        res.params = t;
        return res;
      }
    }
  } else {
    if (grid_fits(f.p, k, cfg.budget)) {
      res.route = "exhaustive";
      std::vector<Scalar> t;
      if (scan_grid(m0, family, f.p, t)) {
        res.kind = AffineFamilyResult::Kind::witness;
        res.params = t;
      } else {
        res.kind = AffineFamilyResult::Kind::none_exists;
      }
      return res;
    }
    if (k <= cfg.symbolic_cap) {
      MultiPoly d = symbolic_det(m0, family);
      if (d.is_zero()) {
        res.route = "symbolic";
        res.kind = AffineFamilyResult::Kind::none_exists;
        return res;
      }
      // nonzero polynomial over F_p does not guarantee a field point;
      // fall through to sampling
    }
  }

  // Randomized fallback. Sample set S, Schwartz-Zippel bound 1-(n/|S|)^trials.
  res.route = "randomized";
  std::mt19937_64 rng(cfg.seed);
  std::uint64_t sample_size =
      f.kind == FieldSpec::Kind::prime
          ? f.p
          : std::max<std::uint64_t>(2 * n, 128);
  std::uint64_t trials = std::min<std::uint64_t>(cfg.budget, 200);
  std::uniform_int_distribution<std::uint64_t> dist(0, sample_size - 1);
  for (std::uint64_t it = 0; it < trials; ++it) {
    std::vector<Scalar> t;
    t.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      t.emplace_back(f, static_cast<long>(dist(rng)));
    if (!det_at(m0, family, t).is_zero()) {
      res.kind = AffineFamilyResult::Kind::witness;
      res.params = t;
      res.trials = it + 1;
      return res;
    }
  }
  res.kind = AffineFamilyResult::Kind::unknown;
  res.trials = trials;
  res.confidence =
      n >= sample_size
          ? 0.0
          : 1.0 - std::pow(static_cast<double>(n) / sample_size,
                           static_cast<double>(trials));
  return res;
}

}  // namespace cofrob
