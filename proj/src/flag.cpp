#include "rbla/flag.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

namespace {

Rational dot(const Vec& a, const Vec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_quadruple_shapes(const ExtendedDerivation& x) {
  const std::size_t n = x.base.dim();
  if (x.q.epsilon.size() != n || x.q.g0.size() != n || x.q.d.rows() != n ||
      x.q.d.cols() != n)
    throw shape_error("extended derivation: quadruple shapes do not match the base");
}

} // namespace

ConditionReport check_twisted_derivation(const LieAlgebra& L, const Vec& epsilon,
                                         const Matrix& d, bool exhaustive) {
  const std::size_t n = L.dim();
  if (epsilon.size() != n || d.rows() != n || d.cols() != n)
    throw shape_error("twisted derivation: shapes do not match the algebra");

  ConditionReport rep(exhaustive);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec gi = unit_vec(n, i), gj = unit_vec(n, j);
      const Vec br = L.bracket_of(gi, gj);
      rep.expect_zero(Vec{dot(epsilon, br)}, "td_epsilon", {i, j});

      const Vec lhs = d.apply(br);
      const Vec rhs = L.bracket_of(d.apply(gi), gj) + L.bracket_of(gi, d.apply(gj)) +
                      epsilon[i] * d.apply(gj) - epsilon[j] * d.apply(gi);
      rep.expect_eq(lhs, rhs, "td_leibniz", {i, j});
    }
  return rep;
}

ConditionReport check_extended_derivation(const ExtendedDerivation& x, bool exhaustive) {
  check_quadruple_shapes(x);
  if (!check_rb(x.base).passed())
    throw invalid_input_error("check_extended_derivation: base fails check_rb");

  ConditionReport rep(exhaustive);
  rep.merge(check_twisted_derivation(x.base.algebra(), x.q.epsilon, x.q.d, exhaustive));

  const std::size_t n = x.base.dim();
  const Rational& w = x.base.weight();
  const Rational& k0 = x.q.k0;
  const auto P = [&](const Vec& u) { return x.base.apply_op(u); };
  const auto D = [&](const Vec& u) { return x.q.d.apply(u); };
  const auto eps = [&](const Vec& u) { return dot(x.q.epsilon, u); };

  for (std::size_t i = 0; i < n; ++i) {
    const Vec g = unit_vec(n, i);
    const Vec pg = P(g);
    const Vec lhs = x.base.bracket_of(pg, x.q.g0) - k0 * D(pg) + P(D(pg)) +
                    eps(pg) * x.q.g0 - P(x.base.bracket_of(g, x.q.g0)) +
                    k0 * P(D(g)) + (k0 * eps(g)) * x.q.g0 + w * P(D(g)) +
                    (w * eps(g)) * x.q.g0;
    rep.expect_zero(lhs, "ed_operator", {i});

    rep.expect_zero(Vec{(k0 * k0 + w * k0) * x.q.epsilon[i]}, "ed_weight", {i});
  }
  return rep;
}

ExtendingDatum datum_from_exder(const ExtendedDerivation& x) {
  check_quadruple_shapes(x);
  const std::size_t n = x.base.dim();
  Tensor3 tril(1, 1, n), trir(n, 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    tril.at(0, 0, j) = x.q.epsilon[j];
    for (std::size_t k = 0; k < n; ++k) trir.at(k, 0, j) = x.q.d.at(k, j);
  }
  Matrix p1(n, 1), p2(1, 1);
  for (std::size_t k = 0; k < n; ++k) p1.at(k, 0) = x.q.g0[k];
  p2.at(0, 0) = x.q.k0;
  return ExtendingDatum(x.base, 1, std::move(tril), std::move(trir), Tensor3(n, 1, 1),
                        Tensor3(1, 1, 1), std::move(p1), std::move(p2));
}

ExtendedDerivation exder_from_datum(const ExtendingDatum& d) {
  if (d.vdim() != 1)
    throw invalid_input_error("exder_from_datum: datum does not have vdim = 1");
  if (!d.f().is_zero() || !d.braces().is_zero())
    throw invalid_input_error("exder_from_datum: f and braces must vanish");
  const std::size_t n = d.base().dim();
  ExderQuadruple q = ExderQuadruple::zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    q.epsilon[j] = d.tril().at(0, 0, j);
    for (std::size_t k = 0; k < n; ++k) q.d.at(k, j) = d.trir().at(k, 0, j);
  }
  for (std::size_t k = 0; k < n; ++k) q.g0[k] = d.p1().at(k, 0);
  q.k0 = d.p2().at(0, 0);
  return {d.base(), std::move(q)};
}

bool verify_exder_witness(const ExtendedDerivation& x, const ExtendedDerivation& xp,
                          const ExderEquivWitness& w) {
  if (w.k1.is_zero()) return false;
  const std::size_t n = x.base.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec g = unit_vec(n, i);
    const Vec lhs = x.q.d.apply(g);
    const Vec rhs = w.k1 * xp.q.d.apply(g) + x.base.bracket_of(w.g1, g) -
                    x.q.epsilon[i] * w.g1;
    if (lhs != rhs) return false;
  }
  const Vec rhs2 = x.base.apply_op(w.g1) + w.k1 * xp.q.g0 - x.q.k0 * w.g1;
  return x.q.g0 == rhs2;
}

std::optional<ExderEquivWitness> decide_exder_equiv(const ExtendedDerivation& x,
                                                    const ExtendedDerivation& xp) {
  if (!x.base.same_structure(xp.base))
    throw invalid_input_error("decide_exder_equiv: bases differ");
  check_quadruple_shapes(x);
  check_quadruple_shapes(xp);
  if (x.q.epsilon != xp.q.epsilon || x.q.k0 != xp.q.k0) return std::nullopt;

  // Unknowns u = (k1, g1). Rows: (e1) per basis vector, then (e2):
  //   d'(e_i) k1 + (ad(., e_i) - eps(e_i) I) g1 = d(e_i)
  //   g0' k1 + (P - k0 I) g1 = g0
  const std::size_t n = x.base.dim();
  Matrix A(n * n + n, 1 + n);
  Vec b(n * n + n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec dpi = xp.q.d.column(i);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = i * n + k;
      A.at(row, 0) = dpi[k];
      for (std::size_t l = 0; l < n; ++l) {
        // coefficient of (g1)_l in [g1, e_i]_k - eps(e_i)(g1)_k
        Rational c = -x.base.algebra().bracket().at(k, i, l);
        if (l == k) c -= x.q.epsilon[i];
        A.at(row, 1 + l) = c;
      }
      b[row] = x.q.d.at(k, i);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = n * n + k;
    A.at(row, 0) = xp.q.g0[k];
    for (std::size_t l = 0; l < n; ++l) {
      Rational c = x.base.op().at(k, l);
      if (l == k) c -= x.q.k0;
      A.at(row, 1 + l) = c;
    }
    b[row] = x.q.g0[k];
  }

  const AffineSolutionSet sol = solve_affine(A, b);
  if (sol.empty()) return std::nullopt;

  // k1 != 0 somewhere on the affine set iff the particular k1 is nonzero
  // or some nullspace vector moves it; normalize to k1 = 1 whenever a
  // mover exists.
  Vec point = *sol.particular;
  const Rational k1_part = point[0];
  const Vec* mover = nullptr;
  for (const Vec& nv : sol.nullspace)
    if (!nv[0].is_zero()) {
      mover = &nv;
      break;
    }
  if (mover) {
    const Rational t = (Rational(1) - k1_part) / (*mover)[0];
    point = point + t * (*mover);
  } else if (k1_part.is_zero()) {
    return std::nullopt;
  }

  ExderEquivWitness w;
  w.k1 = point[0];
  w.g1 = Vec(point.begin() + 1, point.end());
  if (!verify_exder_witness(x, xp, w))
    throw error("decide_exder_equiv: internal witness verification failed");
  return w;
}

RBLieAlgebra flag_extend(const ExtendedDerivation& x) {
  const ConditionReport rep = check_extended_derivation(x);
  if (!rep.passed())
    throw invalid_input_error("flag_extend: quadruple fails check_extended_derivation (" +
                              rep.failures().front().condition + ")");
  return unified_product(datum_from_exder(x)).product;
}

FlagChain build_flag_chain(const RBLieAlgebra& base,
                           const std::vector<ExderQuadruple>& steps) {
  FlagChain chain;
  chain.algebras.push_back(base);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ExtendedDerivation x{chain.algebras.back(), steps[i]};
    ConditionReport rep;
    try {
      rep = check_extended_derivation(x);
    } catch (const error& e) {
      throw invalid_input_error("flag chain step " + std::to_string(i) + ": " + e.what());
    }
    if (!rep.passed())
      throw invalid_input_error("flag chain step " + std::to_string(i) +
                                " fails condition " + rep.failures().front().condition);
    chain.algebras.push_back(unified_product(datum_from_exder(x)).product);
    chain.steps.push_back(std::move(x));
  }
  return chain;
}

std::vector<std::vector<std::size_t>>
partition_exders(const std::vector<ExtendedDerivation>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!xs[i].base.same_structure(xs[0].base))
      throw invalid_input_error("partition_exders: quadruple " + std::to_string(i) +
                                " has a different base");

  std::vector<std::size_t> parent(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) parent[i] = i;
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (decide_exder_equiv(xs[i], xs[j]).has_value()) {
        const std::size_t a = find(i), bb = find(j);
        parent[std::max(a, bb)] = std::min(a, bb);
      }
    }

  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> class_of(xs.size(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t root = find(i);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(class_of[root])].push_back(i);
  }
  return classes;
}

} // namespace rbla
