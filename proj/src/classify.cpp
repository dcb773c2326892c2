#include "rbla/classify.hpp"

#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

namespace {

Matrix stack_columns_context(const std::vector<Vec>& sub, const std::vector<Vec>& comp,
                             std::size_t dim) {
  std::vector<Vec> all = sub;
  all.insert(all.end(), comp.begin(), comp.end());
  if (all.size() != dim)
    throw decomposition_error("context: sub + complement basis count != ambient dim");
  return Matrix::from_columns(dim, all);
}

} // namespace

DecompositionContext::DecompositionContext(RBLieAlgebra ambient, std::vector<Vec> sub_basis,
                                           std::vector<Vec> complement_basis)
    : ambient_(std::move(ambient)), sub_basis_(std::move(sub_basis)),
      complement_basis_(std::move(complement_basis)),
      basis_(stack_columns_context(sub_basis_, complement_basis_, ambient_.dim())) {
  const std::size_t N = ambient_.dim();
  const std::size_t n = sub_basis_.size();
  const std::size_t m = complement_basis_.size();

  const auto Binv = basis_.inverse();
  if (!Binv)
    throw decomposition_error("context: sub and complement bases do not split the space");

  projection_ = Matrix(n, N);
  pi_ = Matrix(m, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j) projection_.at(i, j) = Binv->at(i, j);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < N; ++j) pi_.at(a, j) = Binv->at(n + a, j);

  // g must be a Rota-Baxter subalgebra: brackets of sub vectors and
  // operator images of sub vectors must have no complement component.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero_vec(pi_.apply(ambient_.bracket_of(sub_basis_[i], sub_basis_[j]))))
        throw closure_error("context: subalgebra not closed under the bracket");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero_vec(pi_.apply(ambient_.apply_op(sub_basis_[i]))))
      throw closure_error("context: subalgebra not closed under the operator");
}

DecompositionContext::DecompositionContext(RBLieAlgebra ambient, std::vector<Vec> sub_basis,
                                           std::vector<Vec> complement_basis,
                                           const Matrix& projection)
    : DecompositionContext(std::move(ambient), std::move(sub_basis),
                           std::move(complement_basis)) {
  // A retraction killing the complement is unique, so the supplied one
  // must equal the derived one.
  if (projection.rows() != projection_.rows() || projection.cols() != projection_.cols())
    throw projection_error("context: projection shape mismatch");
  if (projection != projection_)
    throw projection_error("context: projection is not the retraction onto the subalgebra");
}

DecompositionContext DecompositionContext::coordinate(
    RBLieAlgebra ambient, const std::vector<std::size_t>& sub_indices) {
  const std::size_t N = ambient.dim();
  std::vector<bool> taken(N, false);
  std::vector<Vec> sub;
  for (std::size_t idx : sub_indices) {
    if (idx >= N) throw decomposition_error("context: sub index out of range");
    if (taken[idx]) throw decomposition_error("context: repeated sub index");
    taken[idx] = true;
    sub.push_back(unit_vec(N, idx));
  }
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < N; ++i)
    if (!taken[i]) comp.push_back(unit_vec(N, i));
  return DecompositionContext(std::move(ambient), std::move(sub), std::move(comp));
}

ExtendingDatum decompose(const DecompositionContext& ctx) {
  const std::size_t n = ctx.sub_dim();
  const std::size_t m = ctx.comp_dim();
  const RBLieAlgebra& E = ctx.ambient();
  const Matrix& p = ctx.projection();
  const Matrix& pi = ctx.complement_projection();

  // Base structure in sub-basis coordinates.
  Tensor3 gbr(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = p.apply(E.bracket_of(ctx.sub_basis()[i], ctx.sub_basis()[j]));
      for (std::size_t k = 0; k < n; ++k) gbr.at(k, i, j) = v[k];
    }
  Matrix gop(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec v = p.apply(E.apply_op(ctx.sub_basis()[j]));
    for (std::size_t i = 0; i < n; ++i) gop.at(i, j) = v[i];
  }
  RBLieAlgebra base(LieAlgebra(n, std::move(gbr)), E.weight(), std::move(gop));

  Tensor3 tril(m, m, n), trir(n, m, n), f(n, m, m), braces(m, m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec b = E.bracket_of(ctx.complement_basis()[a], ctx.sub_basis()[j]);
      const Vec gpart = p.apply(b);
      const Vec vpart = pi.apply(b);
      for (std::size_t k = 0; k < n; ++k) trir.at(k, a, j) = gpart[k];
      for (std::size_t k = 0; k < m; ++k) tril.at(k, a, j) = vpart[k];
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec v = E.bracket_of(ctx.complement_basis()[a], ctx.complement_basis()[b]);
      const Vec gpart = p.apply(v);
      const Vec vpart = pi.apply(v);
      for (std::size_t k = 0; k < n; ++k) f.at(k, a, b) = gpart[k];
      for (std::size_t k = 0; k < m; ++k) braces.at(k, a, b) = vpart[k];
    }
  Matrix p1(n, m), p2(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    const Vec v = E.apply_op(ctx.complement_basis()[a]);
    const Vec gpart = p.apply(v);
    const Vec vpart = pi.apply(v);
    for (std::size_t k = 0; k < n; ++k) p1.at(k, a) = gpart[k];
    for (std::size_t k = 0; k < m; ++k) p2.at(k, a) = vpart[k];
  }

  return ExtendingDatum(std::move(base), m, std::move(tril), std::move(trir), std::move(f),
                        std::move(braces), std::move(p1), std::move(p2));
}

namespace {

void require_ambient_map(const Matrix& phi, const DecompositionContext& ctx,
                         const Matrix& target_op) {
  const std::size_t N = ctx.ambient().dim();
  if (phi.rows() != N || phi.cols() != N)
    throw shape_error("stabilizer check: map is not square on the ambient space");
  if (target_op * phi != phi * ctx.ambient().op())
    throw invalid_input_error(
        "stabilizer check: map is not compatible with the operator");
}

} // namespace

bool check_stabilizes(const Matrix& phi, const DecompositionContext& ctx,
                      const Matrix& target_op) {
  require_ambient_map(phi, ctx, target_op);
  for (const Vec& s : ctx.sub_basis())
    if (phi.apply(s) != s) return false;
  return true;
}

bool check_stabilizes(const Matrix& phi, const DecompositionContext& ctx) {
  return check_stabilizes(phi, ctx, ctx.ambient().op());
}

bool check_costabilizes(const Matrix& phi, const DecompositionContext& ctx,
                        const Matrix& target_op) {
  require_ambient_map(phi, ctx, target_op);
  return ctx.complement_projection() * phi == ctx.complement_projection();
}

bool check_costabilizes(const Matrix& phi, const DecompositionContext& ctx) {
  return check_costabilizes(phi, ctx, ctx.ambient().op());
}

Matrix psi_from_witness(const ExtendingDatum& d, const EquivalenceWitness& w) {
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  if (w.r.rows() != n || w.r.cols() != m)
    throw shape_error("witness: r shape != base.dim x vdim");
  if (w.v.rows() != m || w.v.cols() != m)
    throw shape_error("witness: v shape != vdim x vdim");
  Matrix psi(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) psi.at(i, i) = Rational(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) psi.at(i, n + a) = w.r.at(i, a);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) psi.at(n + a, n + b) = w.v.at(a, b);
  return psi;
}

ConditionReport check_witness_conditions(const ExtendingDatum& d, const ExtendingDatum& dp,
                                         const EquivalenceWitness& w, bool exhaustive) {
  if (!d.base().same_structure(dp.base()) || d.vdim() != dp.vdim())
    throw invalid_input_error("witness conditions: data do not share base and vdim");
  if (w.r.rows() != d.base().dim() || w.r.cols() != d.vdim() ||
      w.v.rows() != d.vdim() || w.v.cols() != d.vdim())
    throw shape_error("witness conditions: witness shape mismatch");

  ConditionReport rep(exhaustive);
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  const auto br = [&](const Vec& u, const Vec& v) { return d.base().bracket_of(u, v); };
  const auto P = [&](const Vec& u) { return d.base().apply_op(u); };
  const auto r = [&](const Vec& u) { return w.r.apply(u); };
  const auto v = [&](const Vec& u) { return w.v.apply(u); };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      rep.expect_eq(dp.tril_of(v(x[a]), e[i]), v(d.tril_of(x[a], e[i])), "L1", {a, i});

      const Vec lhs2 = r(d.tril_of(x[a], e[i]));
      const Vec rhs2 = br(r(x[a]), e[i]) - d.trir_of(x[a], e[i]) +
                       dp.trir_of(v(x[a]), e[i]);
      rep.expect_eq(lhs2, rhs2, "L2", {a, i});
    }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec lhs3 = v(d.braces_of(x[a], x[b]));
      const Vec rhs3 = dp.braces_of(v(x[a]), v(x[b])) +
                       dp.tril_of(v(x[a]), r(x[b])) - dp.tril_of(v(x[b]), r(x[a]));
      rep.expect_eq(lhs3, rhs3, "L3", {a, b});

      const Vec lhs4 = r(d.braces_of(x[a], x[b]));
      const Vec rhs4 = br(r(x[a]), r(x[b])) + dp.trir_of(v(x[a]), r(x[b])) -
                       dp.trir_of(v(x[b]), r(x[a])) + dp.f_of(v(x[a]), v(x[b])) -
                       d.f_of(x[a], x[b]);
      rep.expect_eq(lhs4, rhs4, "L4", {a, b});
    }

  for (std::size_t a = 0; a < m; ++a) {
    const Vec lhs5 = d.p1_of(x[a]);
    const Vec rhs5 = P(r(x[a])) + dp.p1_of(v(x[a])) - r(d.p2_of(x[a]));
    rep.expect_eq(lhs5, rhs5, "L5", {a});

    rep.expect_eq(v(d.p2_of(x[a])), dp.p2_of(v(x[a])), "L6", {a});
  }

  return rep;
}

ExtendingDatum transform_datum(const ExtendingDatum& d, const EquivalenceWitness& w) {
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  if (w.r.rows() != n || w.r.cols() != m || w.v.rows() != m || w.v.cols() != m)
    throw shape_error("transform_datum: witness shape mismatch");
  const auto vinv_opt = w.v.inverse();
  if (!vinv_opt) throw witness_error("transform_datum: v is singular");
  const Matrix& vinv = *vinv_opt;

  const auto br = [&](const Vec& a, const Vec& b) { return d.base().bracket_of(a, b); };
  const auto P = [&](const Vec& a) { return d.base().apply_op(a); };
  const auto r = [&](const Vec& a) { return w.r.apply(a); };
  const auto v = [&](const Vec& a) { return w.v.apply(a); };

  std::vector<Vec> e, u;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  // u[a] = v^{-1}(x_a); every primed map is evaluated through it.
  for (std::size_t a = 0; a < m; ++a) u.push_back(vinv.column(a));

  Tensor3 tril(m, m, n), trir(n, m, n), f(n, m, m), braces(m, m, m);
  Matrix p1(n, m), p2(m, m);

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec tl = v(d.tril_of(u[a], e[j]));
      const Vec tr = r(d.tril_of(u[a], e[j])) + d.trir_of(u[a], e[j]) +
                     br(e[j], r(u[a]));
      for (std::size_t k = 0; k < m; ++k) tril.at(k, a, j) = tl[k];
      for (std::size_t k = 0; k < n; ++k) trir.at(k, a, j) = tr[k];
    }
    for (std::size_t b = 0; b < m; ++b) {
      const Vec fp = d.f_of(u[a], u[b]) + r(d.braces_of(u[a], u[b])) +
                     br(r(u[a]), r(u[b])) - r(d.tril_of(u[a], r(u[b]))) -
                     d.trir_of(u[a], r(u[b])) + r(d.tril_of(u[b], r(u[a]))) +
                     d.trir_of(u[b], r(u[a]));
      const Vec bp = v(d.braces_of(u[a], u[b])) - v(d.tril_of(u[a], r(u[b]))) +
                     v(d.tril_of(u[b], r(u[a])));
      for (std::size_t k = 0; k < n; ++k) f.at(k, a, b) = fp[k];
      for (std::size_t k = 0; k < m; ++k) braces.at(k, a, b) = bp[k];
    }
    const Vec p1c = d.p1_of(u[a]) - P(r(u[a])) + r(d.p2_of(u[a]));
    const Vec p2c = v(d.p2_of(u[a]));
    for (std::size_t k = 0; k < n; ++k) p1.at(k, a) = p1c[k];
    for (std::size_t k = 0; k < m; ++k) p2.at(k, a) = p2c[k];
  }

  return ExtendingDatum(d.base(), m, std::move(tril), std::move(trir), std::move(f),
                        std::move(braces), std::move(p1), std::move(p2));
}

ExtendingDatum cohomologous_transform(const ExtendingDatum& d, const Matrix& rmat) {
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  if (rmat.rows() != n || rmat.cols() != m)
    throw shape_error("cohomologous_transform: r shape != base.dim x vdim");

  const auto br = [&](const Vec& a, const Vec& b) { return d.base().bracket_of(a, b); };
  const auto P = [&](const Vec& a) { return d.base().apply_op(a); };
  const auto r = [&](const Vec& a) { return rmat.apply(a); };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  Tensor3 trir(n, m, n), f(n, m, m), braces(m, m, m);
  Matrix p1(n, m);

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec tr = d.trir_of(x[a], e[j]) + r(d.tril_of(x[a], e[j])) -
                     br(r(x[a]), e[j]);
      for (std::size_t k = 0; k < n; ++k) trir.at(k, a, j) = tr[k];
    }
    for (std::size_t b = 0; b < m; ++b) {
      const Vec fp = d.f_of(x[a], x[b]) + r(d.braces_of(x[a], x[b])) +
                     br(r(x[a]), r(x[b])) + d.trir_of(x[b], r(x[a])) -
                     d.trir_of(x[a], r(x[b])) + r(d.tril_of(x[b], r(x[a]))) -
                     r(d.tril_of(x[a], r(x[b])));
      const Vec bp = d.braces_of(x[a], x[b]) - d.tril_of(x[a], r(x[b])) +
                     d.tril_of(x[b], r(x[a]));
      for (std::size_t k = 0; k < n; ++k) f.at(k, a, b) = fp[k];
      for (std::size_t k = 0; k < m; ++k) braces.at(k, a, b) = bp[k];
    }
    const Vec p1c = d.p1_of(x[a]) - P(r(x[a])) + r(d.p2_of(x[a]));
    for (std::size_t k = 0; k < n; ++k) p1.at(k, a) = p1c[k];
  }

  return ExtendingDatum(d.base(), m, d.tril(), std::move(trir), std::move(f),
                        std::move(braces), std::move(p1), d.p2());
}

} // namespace rbla
