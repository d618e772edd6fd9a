#include "cofrob/zoo.hpp"

#include <stdexcept>

namespace cofrob::zoo {

namespace {

Scalar one_of(const FieldSpec& f) { return Scalar::one(f); }

void require_positive(long v, const char* what) {
  if (v <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Coalgebra trivial(const FieldSpec& f) {
  Matrix one(1, 1, f);
  one.at(0, 0) = one_of(f);
  return Coalgebra(f, 1, one, one, {"1"});
}

Coalgebra grouplike(std::size_t s, const FieldSpec& f) {
  if (s == 0) throw std::invalid_argument("grouplike: empty set");
  Matrix delta(s * s, s, f);
  Matrix eps(1, s, f);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s; ++i) {
    delta.at(i * s + i, i) = one_of(f);
    eps.at(0, i) = one_of(f);
    labels.push_back("g" + std::to_string(i));
  }
  return Coalgebra(f, s, delta, eps, labels);
}

Coalgebra matrix_coalgebra(std::size_t n, const FieldSpec& f) {
  if (n == 0) throw std::invalid_argument("matrix_coalgebra: n = 0");
  std::size_t dim = n * n;
  Matrix delta(dim * dim, dim, f);
  Matrix eps(1, dim, f);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t col = i * n + j;
      for (std::size_t k = 0; k < n; ++k)
        delta.at((i * n + k) * dim + (k * n + j), col) = one_of(f);
      if (i == j) eps.at(0, col) = one_of(f);
      labels.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  return Coalgebra(f, dim, delta, eps, labels);
}

Coalgebra dual_numbers(const FieldSpec& f) {
  return dual_of_square_zero_local(1, f);
}

Coalgebra dual_of_square_zero_local(std::size_t m, const FieldSpec& f) {
  std::size_t dim = m + 1;
  Matrix delta(dim * dim, dim, f);
  Matrix eps(1, dim, f);
  delta.at(0, 0) = one_of(f);  // Delta g = g (x) g
  eps.at(0, 0) = one_of(f);
  std::vector<std::string> labels{"g"};
  for (std::size_t i = 1; i < dim; ++i) {
    delta.at(0 * dim + i, i) = one_of(f);  // g (x) x_i
    delta.at(i * dim + 0, i) = one_of(f);  // x_i (x) g
    labels.push_back("x" + std::to_string(i));
  }
  return Coalgebra(f, dim, delta, eps, labels);
}

DirectSumCoring direct_sum_coring(const Coalgebra& d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("direct_sum_coring: n = 0");
  const FieldSpec& f = d.field();
  std::size_t nd = d.dim();
  std::size_t dim = n * nd;
  Matrix delta(dim * dim, dim, f);
  Matrix eps(1, dim, f);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < nd; ++a) {
      std::size_t col = i * nd + a;
      for (std::size_t b = 0; b < nd; ++b)
        for (std::size_t e = 0; e < nd; ++e)
          delta.at((i * nd + b) * dim + (i * nd + e), col) =
              d.delta().at(b * nd + e, a);
      eps.at(0, col) = d.counit().at(0, a);
      std::string base = d.labels().empty() ? "e" + std::to_string(a)
                                            : d.labels()[a];
      labels.push_back(base + "[" + std::to_string(i) + "]");
    }
  Coalgebra c(f, dim, delta, eps, labels);

  Matrix fold(nd, dim, f);
  DirectSumCoring out{c, d, CoalgebraMorphism(c, d, fold), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Matrix sig(dim, nd, f);
    Matrix prj(nd, dim, f);
    for (std::size_t a = 0; a < nd; ++a) {
      sig.at(i * nd + a, a) = one_of(f);
      prj.at(a, i * nd + a) = one_of(f);
      fold.at(a, i * nd + a) = one_of(f);
    }
    out.sigma.push_back(sig);
    out.proj.push_back(prj);
  }
  out.lambda = CoalgebraMorphism(c, d, fold);
  return out;
}

CoalgebraMorphism trivial_extension(const Coalgebra& c) {
  return CoalgebraMorphism(c, trivial(c.field()), c.counit());
}

CoalgebraMorphism set_map_extension(const std::vector<std::size_t>& fmap,
                                    std::size_t tsize, const FieldSpec& f) {
  Coalgebra src = grouplike(fmap.size(), f);
  Coalgebra tgt = grouplike(tsize, f);
  Matrix m(tsize, fmap.size(), f);
  for (std::size_t i = 0; i < fmap.size(); ++i) {
    if (fmap[i] >= tsize)
      throw std::invalid_argument("set_map_extension: value out of range");
    m.at(fmap[i], i) = one_of(f);
  }
  return CoalgebraMorphism(src, tgt, m);
}

Comodule grouplike_simple(const Coalgebra& c, std::size_t index, Side side) {
  if (index >= c.dim())
    throw std::invalid_argument("grouplike_simple: index out of range");
  const FieldSpec& f = c.field();
  Matrix expected(c.dim() * c.dim(), 1, f);
  expected.at(index * c.dim() + index, 0) = one_of(f);
  if (!(c.delta().col(index) == expected))
    throw std::invalid_argument("grouplike_simple: element is not grouplike");
  Matrix coaction(c.dim(), 1, f);
  coaction.at(index, 0) = one_of(f);
  return Comodule(side, c, 1, coaction);
}

std::vector<Comodule> sample_comodules(const Coalgebra& c) {
  std::vector<Comodule> out;
  out.push_back(regular_comodule(c, Side::right));
  out.push_back(cofree_comodule(c, 2, Side::right));
  Matrix expected(c.dim() * c.dim(), 1, c.field());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t r = 0; r < c.dim() * c.dim(); ++r)
      expected.at(r, 0) = Scalar::zero(c.field());
    expected.at(i * c.dim() + i, 0) = one_of(c.field());
    if (c.delta().col(i) == expected)
      out.push_back(grouplike_simple(c, i, Side::right));
  }
  return out;
}

std::vector<std::string> preset_names() {
  return {"trivial",       "grouplike",   "matrix",
          "dual-numbers",  "square-zero", "direct-sum",
          "trivial-extension", "identity-extension", "fold"};
}

Bundle build(const std::string& preset, const std::vector<long>& params,
             const FieldSpec& f) {
  Bundle b;
  auto p = [&](std::size_t i, long fallback) {
    return i < params.size() ? params[i] : fallback;
  };
  if (preset == "trivial") {
    b.coalgebras.emplace("C", trivial(f));
  } else if (preset == "grouplike") {
    long s = p(0, 2);
    require_positive(s, "set size");
    b.coalgebras.emplace("C", grouplike(static_cast<std::size_t>(s), f));
  } else if (preset == "matrix") {
    long n = p(0, 2);
    require_positive(n, "matrix size");
    b.coalgebras.emplace("C",
                         matrix_coalgebra(static_cast<std::size_t>(n), f));
  } else if (preset == "dual-numbers") {
    b.coalgebras.emplace("C", dual_numbers(f));
  } else if (preset == "square-zero") {
    long m = p(0, 2);
    require_positive(m, "variable count");
    b.coalgebras.emplace(
        "C", dual_of_square_zero_local(static_cast<std::size_t>(m), f));
  } else if (preset == "direct-sum") {
    long s = p(0, 2), n = p(1, 2);
    require_positive(s, "set size");
    require_positive(n, "copy count");
    DirectSumCoring ds = direct_sum_coring(
        grouplike(static_cast<std::size_t>(s), f), static_cast<std::size_t>(n));
    b.coalgebras.emplace("C", ds.c);
    b.coalgebras.emplace("D", ds.d);
    b.morphisms.emplace("lambda", ds.lambda);
  } else if (preset == "trivial-extension") {
    long s = p(0, 2);
    require_positive(s, "set size");
    Coalgebra c = grouplike(static_cast<std::size_t>(s), f);
    b.coalgebras.emplace("C", c);
    b.coalgebras.emplace("D", trivial(f));
    b.morphisms.emplace("lambda", trivial_extension(c));
  } else if (preset == "identity-extension") {
    long s = p(0, 2);
    require_positive(s, "set size");
    Coalgebra c = grouplike(static_cast<std::size_t>(s), f);
    b.coalgebras.emplace("C", c);
    b.morphisms.emplace("lambda", CoalgebraMorphism::identity(c));
  } else if (preset == "fold") {
    long s = p(0, 1), n = p(1, 2);
    require_positive(s, "set size");
    require_positive(n, "copy count");
    DirectSumCoring ds = direct_sum_coring(
        grouplike(static_cast<std::size_t>(s), f), static_cast<std::size_t>(n));
    b.coalgebras.emplace("C", ds.c);
    b.coalgebras.emplace("D", ds.d);
    b.morphisms.emplace("lambda", ds.lambda);
  } else {
    throw std::invalid_argument("unknown preset: " + preset);
  }
  for (auto& [name, c] : b.coalgebras)
    b.comodules.emplace(name + ".regular", regular_comodule(c, Side::right));
  return b;
}

}  // namespace cofrob::zoo
