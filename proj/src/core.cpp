#include "rbla/core.hpp"

#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

namespace {

void check_bracket_shape(std::size_t dim, const Tensor3& t) {
  if (t.dim_out() != dim || t.dim_left() != dim || t.dim_right() != dim)
    throw shape_error("bracket tensor shape != dim^3");
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, Tensor3 bracket, std::vector<std::string> labels)
    : LieAlgebra(unchecked, dim, std::move(bracket), std::move(labels)) {
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (bracket_.at(k, i, j) != -bracket_.at(k, j, i))
          throw invalid_input_error("structure constants are not antisymmetric");
}

LieAlgebra::LieAlgebra(unchecked_t, std::size_t dim, Tensor3 bracket,
                       std::vector<std::string> labels)
    : dim_(dim), bracket_(std::move(bracket)), labels_(std::move(labels)) {
  check_bracket_shape(dim_, bracket_);
  if (!labels_.empty() && labels_.size() != dim_)
    throw shape_error("label count != dim");
}

RBLieAlgebra::RBLieAlgebra(LieAlgebra algebra, Rational weight, Matrix op)
    : algebra_(std::move(algebra)), weight_(std::move(weight)), op_(std::move(op)) {
  if (op_.rows() != algebra_.dim() || op_.cols() != algebra_.dim())
    throw shape_error("operator matrix shape != dim x dim");
}

LinearAction LinearAction::left(std::size_t algebra_dim, std::size_t space_dim, Tensor3 t) {
  if (t.dim_out() != space_dim || t.dim_left() != algebra_dim || t.dim_right() != space_dim)
    throw shape_error("left action tensor shape mismatch");
  return {ActionSide::left, algebra_dim, space_dim, std::move(t)};
}

LinearAction LinearAction::right(std::size_t algebra_dim, std::size_t space_dim, Tensor3 t) {
  if (t.dim_out() != space_dim || t.dim_left() != space_dim || t.dim_right() != algebra_dim)
    throw shape_error("right action tensor shape mismatch");
  return {ActionSide::right, algebra_dim, space_dim, std::move(t)};
}

LinearAction to_left(const LinearAction& a) {
  if (a.side == ActionSide::left) return a;
  Tensor3 t(a.space_dim, a.algebra_dim, a.space_dim);
  for (std::size_t k = 0; k < a.space_dim; ++k)
    for (std::size_t i = 0; i < a.algebra_dim; ++i)
      for (std::size_t j = 0; j < a.space_dim; ++j)
        t.at(k, i, j) = -a.action.at(k, j, i);
  return LinearAction::left(a.algebra_dim, a.space_dim, std::move(t));
}

ConditionReport check_lie(const LieAlgebra& L, bool exhaustive) {
  ConditionReport rep(exhaustive);
  const std::size_t n = L.dim();
  std::vector<Vec> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      rep.expect_zero(L.bracket_of(e[i], e[j]) + L.bracket_of(e[j], e[i]),
                      "antisymmetry", {i, j});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec s = L.bracket_of(L.bracket_of(e[i], e[j]), e[l]) +
                L.bracket_of(L.bracket_of(e[j], e[l]), e[i]) +
                L.bracket_of(L.bracket_of(e[l], e[i]), e[j]);
        rep.expect_zero(s, "jacobi", {i, j, l});
      }
  return rep;
}

ConditionReport check_rb(const RBLieAlgebra& R, bool exhaustive) {
  if (!check_lie(R.algebra()).passed())
    throw invalid_input_error("check_rb: underlying algebra fails check_lie");
  ConditionReport rep(exhaustive);
  const std::size_t n = R.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec gi = unit_vec(n, i);
    const Vec pgi = R.apply_op(gi);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec gj = unit_vec(n, j);
      const Vec pgj = R.apply_op(gj);
      const Vec lhs = R.bracket_of(pgi, pgj);
      const Vec rhs = R.apply_op(R.bracket_of(pgi, gj) + R.bracket_of(gi, pgj) +
                                 R.weight() * R.bracket_of(gi, gj));
      rep.expect_eq(lhs, rhs, "rota_baxter", {i, j});
    }
  }
  return rep;
}

ConditionReport check_rb_morphism(const RBLieAlgebra& src, const RBLieAlgebra& dst,
                                  const Matrix& F, bool exhaustive) {
  if (src.weight() != dst.weight())
    throw invalid_input_error("check_rb_morphism: weight mismatch");
  if (F.rows() != dst.dim() || F.cols() != src.dim())
    throw shape_error("check_rb_morphism: map shape != dst.dim x src.dim");

  ConditionReport rep(exhaustive);
  const std::size_t n = src.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = F.apply(src.bracket_of(unit_vec(n, i), unit_vec(n, j)));
      const Vec rhs = dst.bracket_of(F.column(i), F.column(j));
      rep.expect_eq(lhs, rhs, "bracket", {i, j});
    }

  const Matrix lhs = F * src.op();
  const Matrix rhs = dst.op() * F;
  for (std::size_t j = 0; j < n; ++j)
    rep.expect_eq(lhs.column(j), rhs.column(j), "operator", {j});
  return rep;
}

ConditionReport check_module(const LieAlgebra& L, const LinearAction& a, bool exhaustive) {
  if (a.algebra_dim != L.dim())
    throw shape_error("check_module: action algebra dimension mismatch");
  ConditionReport rep(exhaustive);
  const std::size_t n = L.dim();
  const std::size_t m = a.space_dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec gi = unit_vec(n, i), gj = unit_vec(n, j);
      const Vec br = L.bracket_of(gi, gj);
      for (std::size_t l = 0; l < m; ++l) {
        const Vec x = unit_vec(m, l);
        if (a.side == ActionSide::left) {
          const Vec lhs = a.act(br, x);
          const Vec rhs = a.act(gi, a.act(gj, x)) - a.act(gj, a.act(gi, x));
          rep.expect_eq(lhs, rhs, "module", {i, j, l});
        } else {
          const Vec lhs = a.act(x, br);
          const Vec rhs = a.act(a.act(x, gi), gj) - a.act(a.act(x, gj), gi);
          rep.expect_eq(lhs, rhs, "module", {l, i, j});
        }
      }
    }
  return rep;
}

ConditionReport check_rb_module(const RBModule& mod, bool exhaustive) {
  if (!check_rb(mod.base).passed())
    throw invalid_input_error("check_rb_module: base fails check_rb");
  if (mod.t.rows() != mod.space_dim || mod.t.cols() != mod.space_dim)
    throw shape_error("check_rb_module: t shape != space_dim x space_dim");
  if (mod.action.space_dim != mod.space_dim || mod.action.algebra_dim != mod.base.dim())
    throw shape_error("check_rb_module: action shape mismatch");

  ConditionReport rep(exhaustive);
  rep.merge(check_module(mod.base.algebra(), mod.action, exhaustive));

  const std::size_t n = mod.base.dim();
  const std::size_t m = mod.space_dim;
  const Rational& w = mod.base.weight();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec g = unit_vec(n, i);
    const Vec pg = mod.base.apply_op(g);
    for (std::size_t l = 0; l < m; ++l) {
      const Vec x = unit_vec(m, l);
      const Vec tx = mod.t.apply(x);
      Vec lhs, rhs;
      if (mod.action.side == ActionSide::left) {
        lhs = mod.action.act(pg, tx);
        rhs = mod.t.apply(mod.action.act(pg, x) + mod.action.act(g, tx) +
                          w * mod.action.act(g, x));
      } else {
        lhs = mod.action.act(tx, pg);
        rhs = mod.t.apply(mod.action.act(x, pg) + mod.action.act(tx, g) +
                          w * mod.action.act(x, g));
      }
      rep.expect_eq(lhs, rhs, "rb_module", {i, l});
    }
  }
  return rep;
}

LinearAction adjoint_action(const LieAlgebra& L) {
  return LinearAction::left(L.dim(), L.dim(), L.bracket());
}

LieAlgebra fixture_lie(const std::string& name) {
  if (name.rfind("abelian:", 0) == 0) {
    const std::string tail = name.substr(8);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      throw invalid_input_error("bad abelian fixture name: " + name);
    const std::size_t n = static_cast<std::size_t>(std::stoul(tail));
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return LieAlgebra(n, Tensor3(n, n, n), std::move(labels));
  }
  if (name == "aff1") {
    // [e1, e2] = e2
    Tensor3 t(2, 2, 2);
    t.at(1, 0, 1) = Rational(1);
    t.at(1, 1, 0) = Rational(-1);
    return LieAlgebra(2, std::move(t), {"e1", "e2"});
  }
  if (name == "heisenberg3") {
    // [e1, e2] = e3
    Tensor3 t(3, 3, 3);
    t.at(2, 0, 1) = Rational(1);
    t.at(2, 1, 0) = Rational(-1);
    return LieAlgebra(3, std::move(t), {"e1", "e2", "e3"});
  }
  if (name == "sl2") {
    // [h, e] = 2e, [h, f] = -2f, [e, f] = h   (basis order h, e, f)
    Tensor3 t(3, 3, 3);
    t.at(1, 0, 1) = Rational(2);
    t.at(1, 1, 0) = Rational(-2);
    t.at(2, 0, 2) = Rational(-2);
    t.at(2, 2, 0) = Rational(2);
    t.at(0, 1, 2) = Rational(1);
    t.at(0, 2, 1) = Rational(-1);
    return LieAlgebra(3, std::move(t), {"h", "e", "f"});
  }
  throw invalid_input_error("unknown fixture: " + name);
}

} // namespace rbla
