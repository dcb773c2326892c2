#include "rbla/extending.hpp"

#include <utility>

#include "rbla/errors.hpp"

namespace rbla {

ExtendingDatum::ExtendingDatum(RBLieAlgebra base, std::size_t vdim, Tensor3 tril,
                               Tensor3 trir, Tensor3 f, Tensor3 braces, Matrix p1,
                               Matrix p2)
    : base_(std::move(base)), vdim_(vdim), tril_(std::move(tril)), trir_(std::move(trir)),
      f_(std::move(f)), braces_(std::move(braces)), p1_(std::move(p1)), p2_(std::move(p2)) {
  const std::size_t n = base_.dim();
  const std::size_t m = vdim_;
  if (tril_.dim_out() != m || tril_.dim_left() != m || tril_.dim_right() != n)
    throw shape_error("datum: tril shape != (V,V,g)");
  if (trir_.dim_out() != n || trir_.dim_left() != m || trir_.dim_right() != n)
    throw shape_error("datum: trir shape != (g,V,g)");
  if (f_.dim_out() != n || f_.dim_left() != m || f_.dim_right() != m)
    throw shape_error("datum: f shape != (g,V,V)");
  if (braces_.dim_out() != m || braces_.dim_left() != m || braces_.dim_right() != m)
    throw shape_error("datum: braces shape != (V,V,V)");
  if (p1_.rows() != n || p1_.cols() != m) throw shape_error("datum: p1 shape != g x V");
  if (p2_.rows() != m || p2_.cols() != m) throw shape_error("datum: p2 shape != V x V");
}

ExtendingDatum ExtendingDatum::trivial(RBLieAlgebra base, std::size_t vdim) {
  const std::size_t n = base.dim();
  return ExtendingDatum(std::move(base), vdim, Tensor3(vdim, vdim, n),
                        Tensor3(n, vdim, n), Tensor3(n, vdim, vdim),
                        Tensor3(vdim, vdim, vdim), Matrix(n, vdim), Matrix(vdim, vdim));
}

bool ExtendingDatum::operator==(const ExtendingDatum& o) const {
  return vdim_ == o.vdim_ && base_.same_structure(o.base_) && tril_ == o.tril_ &&
         trir_ == o.trir_ && f_ == o.f_ && braces_ == o.braces_ && p1_ == o.p1_ &&
         p2_ == o.p2_;
}

ConditionReport validate_datum(const ExtendingDatum& d, bool exhaustive) {
  if (!check_rb(d.base()).passed())
    throw invalid_input_error("validate_datum: base fails check_rb");

  ConditionReport rep(exhaustive);
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  const Rational& w = d.base().weight();
  const auto br = [&](const Vec& u, const Vec& v) { return d.base().bracket_of(u, v); };
  const auto P = [&](const Vec& u) { return d.base().apply_op(u); };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  // (a) alternating: checked via the polarized form on pairs a <= b.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      rep.expect_zero(d.f_of(x[a], x[b]) + d.f_of(x[b], x[a]), "a", {a, b});
      rep.expect_zero(d.braces_of(x[a], x[b]) + d.braces_of(x[b], x[a]), "a", {a, b});
    }

  // (b) right module law for tril.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = d.tril_of(x[a], br(e[i], e[j]));
        const Vec rhs = d.tril_of(d.tril_of(x[a], e[i]), e[j]) -
                        d.tril_of(d.tril_of(x[a], e[j]), e[i]);
        rep.expect_eq(lhs, rhs, "b", {a, i, j});
      }

  // (c)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = d.trir_of(x[a], br(e[i], e[j]));
        const Vec rhs = br(d.trir_of(x[a], e[i]), e[j]) + br(e[i], d.trir_of(x[a], e[j])) +
                        d.trir_of(d.tril_of(x[a], e[i]), e[j]) -
                        d.trir_of(d.tril_of(x[a], e[j]), e[i]);
        rep.expect_eq(lhs, rhs, "c", {a, i, j});
      }

  // (d)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = d.tril_of(d.braces_of(x[a], x[b]), e[i]);
        const Vec rhs = d.braces_of(x[a], d.tril_of(x[b], e[i])) +
                        d.braces_of(d.tril_of(x[a], e[i]), x[b]) +
                        d.tril_of(x[a], d.trir_of(x[b], e[i])) -
                        d.tril_of(x[b], d.trir_of(x[a], e[i]));
        rep.expect_eq(lhs, rhs, "d", {a, b, i});
      }

  // (e)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = d.trir_of(d.braces_of(x[a], x[b]), e[i]);
        const Vec rhs = d.trir_of(x[a], d.trir_of(x[b], e[i])) -
                        d.trir_of(x[b], d.trir_of(x[a], e[i])) +
                        br(e[i], d.f_of(x[a], x[b])) +
                        d.f_of(x[a], d.tril_of(x[b], e[i])) +
                        d.f_of(d.tril_of(x[a], e[i]), x[b]);
        rep.expect_eq(lhs, rhs, "e", {a, b, i});
      }

  // (f), (g): cyclic identities over V triples.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const Vec lf = d.f_of(x[a], d.braces_of(x[b], x[c])) +
                       d.f_of(x[b], d.braces_of(x[c], x[a])) +
                       d.f_of(x[c], d.braces_of(x[a], x[b])) +
                       d.trir_of(x[a], d.f_of(x[b], x[c])) +
                       d.trir_of(x[b], d.f_of(x[c], x[a])) +
                       d.trir_of(x[c], d.f_of(x[a], x[b]));
        rep.expect_zero(lf, "f", {a, b, c});

        const Vec lg = d.braces_of(x[a], d.braces_of(x[b], x[c])) +
                       d.braces_of(x[b], d.braces_of(x[c], x[a])) +
                       d.braces_of(x[c], d.braces_of(x[a], x[b])) +
                       d.tril_of(x[a], d.f_of(x[b], x[c])) +
                       d.tril_of(x[b], d.f_of(x[c], x[a])) +
                       d.tril_of(x[c], d.f_of(x[a], x[b]));
        rep.expect_zero(lg, "g", {a, b, c});
      }

  // (h), (i): operator compatibility across one g and one V slot.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Vec g = e[i];
      const Vec y = x[a];
      const Vec pg = P(g);
      const Vec p1y = d.p1_of(y);
      const Vec p2y = d.p2_of(y);

      const Vec h_lhs = br(pg, p1y) - d.trir_of(p2y, pg) + P(d.trir_of(y, pg)) +
                        d.p1_of(d.tril_of(y, pg)) - P(br(g, p1y)) +
                        P(d.trir_of(p2y, g)) + d.p1_of(d.tril_of(p2y, g)) +
                        w * P(d.trir_of(y, g)) + w * d.p1_of(d.tril_of(y, g));
      rep.expect_zero(h_lhs, "h", {i, a});

      const Vec i_lhs = d.tril_of(p2y, pg) - d.p2_of(d.tril_of(y, pg)) -
                        d.p2_of(d.tril_of(p2y, g)) - w * d.p2_of(d.tril_of(y, g));
      rep.expect_zero(i_lhs, "i", {i, a});
    }

  // (j), (k): operator compatibility on V pairs.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec& xa = x[a];
      const Vec& xb = x[b];
      const Vec p1a = d.p1_of(xa), p1b = d.p1_of(xb);
      const Vec p2a = d.p2_of(xa), p2b = d.p2_of(xb);

      const Vec j_lhs = br(p1a, p1b) + d.trir_of(p2a, p1b) - d.trir_of(p2b, p1a) +
                        d.f_of(p2a, p2b) + P(d.trir_of(xb, p1a)) -
                        P(d.f_of(p2a, xb)) - d.p1_of(d.braces_of(p2a, xb)) +
                        d.p1_of(d.tril_of(xb, p1a)) - P(d.trir_of(xa, p1b)) -
                        P(d.f_of(xa, p2b)) - d.p1_of(d.braces_of(xa, p2b)) -
                        d.p1_of(d.tril_of(xa, p1b)) - w * P(d.f_of(xa, xb)) -
                        w * d.p1_of(d.braces_of(xa, xb));
      rep.expect_zero(j_lhs, "j", {a, b});

      const Vec k_lhs = d.braces_of(p2a, p2b) + d.tril_of(p2a, p1b) -
                        d.tril_of(p2b, p1a) - d.p2_of(d.braces_of(p2a, xb)) +
                        d.p2_of(d.tril_of(xb, p1a)) - d.p2_of(d.braces_of(xa, p2b)) -
                        d.p2_of(d.tril_of(xa, p1b)) - w * d.p2_of(d.braces_of(xa, xb));
      rep.expect_zero(k_lhs, "k", {a, b});
    }

  return rep;
}

UnifiedProduct unified_product(const ExtendingDatum& d) {
  const std::size_t n = d.base().dim();
  const std::size_t m = d.vdim();
  const std::size_t N = n + m;

  const auto pack = [&](const Vec& gpart, const Vec& vpart) {
    Vec r(N);
    for (std::size_t k = 0; k < n; ++k) r[k] = gpart[k];
    for (std::size_t k = 0; k < m; ++k) r[n + k] = vpart[k];
    return r;
  };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  // Bracket on basis pairs of (g, 0) and (0, x).
  Tensor3 bracket(N, N, N);
  const auto set_col = [&](std::size_t i, std::size_t j, const Vec& val) {
    for (std::size_t k = 0; k < N; ++k) bracket.at(k, i, j) = val[k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      set_col(i, j, pack(d.base().bracket_of(e[i], e[j]), zero_vec(m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec val = pack(-d.trir_of(x[b], e[i]), -d.tril_of(x[b], e[i]));
      set_col(i, n + b, val);
      set_col(n + b, i, -val);
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      set_col(n + a, n + b, pack(d.f_of(x[a], x[b]), d.braces_of(x[a], x[b])));

  // Operator blocks [[P, p1], [0, p2]].
  Matrix op(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.at(i, j) = d.base().op().at(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) op.at(i, n + b) = d.p1().at(i, b);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) op.at(n + a, n + b) = d.p2().at(a, b);

  // A non-alternating f or braces makes the bracket non-antisymmetric;
  // the product must still be representable so the axiom oracle can
  // report it.
  LieAlgebra alg(unchecked, N, std::move(bracket));
  RBLieAlgebra product(std::move(alg), d.base().weight(), std::move(op));

  Matrix embedding(N, n);
  for (std::size_t i = 0; i < n; ++i) embedding.at(i, i) = Rational(1);
  Matrix projection(m, N);
  for (std::size_t a = 0; a < m; ++a) projection.at(a, n + a) = Rational(1);

  return {std::move(product), std::move(embedding), std::move(projection), d};
}

ConditionReport check_unified_axioms(const UnifiedProduct& up, bool exhaustive) {
  ConditionReport rep(exhaustive);
  rep.merge(check_lie(up.product.algebra(), exhaustive));
  if (rep.passed()) rep.merge(check_rb(up.product, exhaustive));
  return rep;
}

ExtendingDatum datum_of(const CrossedSystem& s) {
  const std::size_t n = s.base.dim();
  const std::size_t m = s.vside.dim();
  return ExtendingDatum(s.base, m, Tensor3(m, m, n), s.trir, s.f,
                        s.vside.algebra().bracket(), s.p1, s.vside.op());
}

ConditionReport check_crossed_system(const CrossedSystem& s, bool exhaustive) {
  if (!check_rb(s.base).passed())
    throw invalid_input_error("check_crossed_system: base fails check_rb");
  if (!check_rb(s.vside).passed())
    throw invalid_input_error("check_crossed_system: V side fails check_rb");

  ConditionReport rep(exhaustive);
  const std::size_t n = s.base.dim();
  const std::size_t m = s.vside.dim();
  const Rational& w = s.base.weight();
  const auto br = [&](const Vec& u, const Vec& v) { return s.base.bracket_of(u, v); };
  const auto P = [&](const Vec& u) { return s.base.apply_op(u); };
  const auto tr = [&](const Vec& xx, const Vec& g) { return s.trir.apply(xx, g); };
  const auto ff = [&](const Vec& xx, const Vec& yy) { return s.f.apply(xx, yy); };
  const auto bb = [&](const Vec& xx, const Vec& yy) { return s.vside.bracket_of(xx, yy); };
  const auto P1 = [&](const Vec& xx) { return s.p1.apply(xx); };
  const auto P2 = [&](const Vec& xx) { return s.vside.apply_op(xx); };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      rep.expect_zero(ff(x[a], x[b]) + ff(x[b], x[a]), "a", {a, b});

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = tr(x[a], br(e[i], e[j]));
        const Vec rhs = br(tr(x[a], e[i]), e[j]) + br(e[i], tr(x[a], e[j]));
        rep.expect_eq(lhs, rhs, "c", {a, i, j});
      }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = tr(bb(x[a], x[b]), e[i]);
        const Vec rhs = tr(x[a], tr(x[b], e[i])) - tr(x[b], tr(x[a], e[i])) +
                        br(e[i], ff(x[a], x[b]));
        rep.expect_eq(lhs, rhs, "e", {a, b, i});
      }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const Vec lhs = ff(x[a], bb(x[b], x[c])) + ff(x[b], bb(x[c], x[a])) +
                        ff(x[c], bb(x[a], x[b])) + tr(x[a], ff(x[b], x[c])) +
                        tr(x[b], ff(x[c], x[a])) + tr(x[c], ff(x[a], x[b]));
        rep.expect_zero(lhs, "f", {a, b, c});
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Vec pg = P(e[i]);
      const Vec lhs = br(pg, P1(x[a])) - tr(P2(x[a]), pg) + P(tr(x[a], pg)) -
                      P(br(e[i], P1(x[a]))) + P(tr(P2(x[a]), e[i])) +
                      w * P(tr(x[a], e[i]));
      rep.expect_zero(lhs, "h", {i, a});
    }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vec lhs = br(P1(x[a]), P1(x[b])) + tr(P2(x[a]), P1(x[b])) -
                      tr(P2(x[b]), P1(x[a])) + ff(P2(x[a]), P2(x[b])) +
                      P(tr(x[b], P1(x[a]))) - P(ff(P2(x[a]), x[b])) -
                      P1(bb(P2(x[a]), x[b])) - P(tr(x[a], P1(x[b]))) -
                      P(ff(x[a], P2(x[b]))) - P1(bb(x[a], P2(x[b]))) -
                      w * P(ff(x[a], x[b])) - w * P1(bb(x[a], x[b]));
      rep.expect_zero(lhs, "j", {a, b});
    }

  return rep;
}

UnifiedProduct crossed_product(const CrossedSystem& s) {
  if (!check_crossed_system(s).passed())
    throw invalid_input_error("crossed_product: system fails check_crossed_system");
  return unified_product(datum_of(s));
}

ExtendingDatum datum_of(const MatchedPair& m) {
  const std::size_t n = m.left.dim();
  const std::size_t mm = m.right.dim();
  return ExtendingDatum(m.left, mm, m.tril, m.trir, Tensor3(n, mm, mm),
                        m.right.algebra().bracket(), Matrix(n, mm), m.right.op());
}

ConditionReport check_matched_pair(const MatchedPair& mp, bool exhaustive) {
  if (!check_rb(mp.left).passed())
    throw invalid_input_error("check_matched_pair: left algebra fails check_rb");
  if (!check_rb(mp.right).passed())
    throw invalid_input_error("check_matched_pair: right algebra fails check_rb");

  ConditionReport rep(exhaustive);
  const std::size_t n = mp.left.dim();
  const std::size_t m = mp.right.dim();
  const Rational& w = mp.left.weight();
  const auto br = [&](const Vec& u, const Vec& v) { return mp.left.bracket_of(u, v); };
  const auto bb = [&](const Vec& u, const Vec& v) { return mp.right.bracket_of(u, v); };
  const auto P = [&](const Vec& u) { return mp.left.apply_op(u); };
  const auto P2 = [&](const Vec& u) { return mp.right.apply_op(u); };
  const auto tl = [&](const Vec& xx, const Vec& g) { return mp.tril.apply(xx, g); };
  const auto tr = [&](const Vec& xx, const Vec& g) { return mp.trir.apply(xx, g); };

  std::vector<Vec> e, x;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  for (std::size_t a = 0; a < m; ++a) x.push_back(unit_vec(m, a));

  // V is a right module over g, with operator compatibility.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = tl(x[a], br(e[i], e[j]));
        const Vec rhs = tl(tl(x[a], e[i]), e[j]) - tl(tl(x[a], e[j]), e[i]);
        rep.expect_eq(lhs, rhs, "mp_right_module", {a, i, j});
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec lhs = tl(P2(x[a]), P(e[i]));
      const Vec rhs = P2(tl(x[a], P(e[i])) + tl(P2(x[a]), e[i]) + w * tl(x[a], e[i]));
      rep.expect_eq(lhs, rhs, "mp_right_rb_module", {a, i});
    }

  // g is a left module over (V, braces), with operator compatibility.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = tr(bb(x[a], x[b]), e[i]);
        const Vec rhs = tr(x[a], tr(x[b], e[i])) - tr(x[b], tr(x[a], e[i]));
        rep.expect_eq(lhs, rhs, "mp_left_module", {a, b, i});
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec lhs = tr(P2(x[a]), P(e[i]));
      const Vec rhs = P(tr(P2(x[a]), e[i]) + tr(x[a], P(e[i])) + w * tr(x[a], e[i]));
      rep.expect_eq(lhs, rhs, "mp_left_rb_module", {a, i});
    }

  // Mixed compatibilities.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = tr(x[a], br(e[i], e[j]));
        const Vec rhs = br(tr(x[a], e[i]), e[j]) + br(e[i], tr(x[a], e[j])) +
                        tr(tl(x[a], e[i]), e[j]) - tr(tl(x[a], e[j]), e[i]);
        rep.expect_eq(lhs, rhs, "mp_mixed_bracket", {a, i, j});
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        const Vec lhs = tl(bb(x[a], x[b]), e[i]);
        const Vec rhs = bb(x[a], tl(x[b], e[i])) + bb(tl(x[a], e[i]), x[b]) +
                        tl(x[a], tr(x[b], e[i])) - tl(x[b], tr(x[a], e[i]));
        rep.expect_eq(lhs, rhs, "mp_mixed_braces", {a, b, i});
      }

  return rep;
}

UnifiedProduct bicrossed_product(const MatchedPair& m) {
  if (!check_matched_pair(m).passed())
    throw invalid_input_error("bicrossed_product: pair fails check_matched_pair");
  return unified_product(datum_of(m));
}

MatchedPair factorize(const RBLieAlgebra& ambient, const std::vector<Vec>& g_basis,
                      const std::vector<Vec>& h_basis) {
  const std::size_t N = ambient.dim();
  const std::size_t n = g_basis.size();
  const std::size_t m = h_basis.size();
  if (n + m != N)
    throw decomposition_error("factorize: bases do not total the ambient dimension");

  std::vector<Vec> all = g_basis;
  all.insert(all.end(), h_basis.begin(), h_basis.end());
  const Matrix B = Matrix::from_columns(N, all);
  const auto Binv = B.inverse();
  if (!Binv)
    throw decomposition_error("factorize: bases are not jointly a basis of the ambient space");

  // Structure constants and operator in the (g-basis, h-basis) order.
  Tensor3 cs(N, N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Vec v = Binv->apply(ambient.bracket_of(B.column(i), B.column(j)));
      for (std::size_t k = 0; k < N; ++k) cs.at(k, i, j) = v[k];
    }
  const Matrix op = *Binv * ambient.op() * B;

  const auto closed = [&](std::size_t lo, std::size_t hi) {
    // Bracket and operator of span(basis[lo..hi)) must stay inside it.
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j)
        for (std::size_t k = 0; k < N; ++k)
          if ((k < lo || k >= hi) && !cs.at(k, i, j).is_zero()) return false;
    for (std::size_t j = lo; j < hi; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if ((k < lo || k >= hi) && !op.at(k, j).is_zero()) return false;
    return true;
  };
  if (!closed(0, n))
    throw closure_error("factorize: g factor is not a Rota-Baxter subalgebra");
  if (!closed(n, N))
    throw closure_error("factorize: h factor is not a Rota-Baxter subalgebra");

  Tensor3 gbr(n, n, n);
  Matrix gop(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gbr.at(k, i, j) = cs.at(k, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gop.at(i, j) = op.at(i, j);

  Tensor3 hbr(m, m, m);
  Matrix hop(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) hbr.at(k, i, j) = cs.at(n + k, n + i, n + j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) hop.at(i, j) = op.at(n + i, n + j);

  // x |> g and x <| g are the two projections of [x, g].
  Tensor3 trir(n, m, n);
  Tensor3 tril(m, m, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) trir.at(k, a, j) = cs.at(k, n + a, j);
      for (std::size_t b = 0; b < m; ++b) tril.at(b, a, j) = cs.at(n + b, n + a, j);
    }

  RBLieAlgebra left(LieAlgebra(n, std::move(gbr)), ambient.weight(), std::move(gop));
  RBLieAlgebra right(LieAlgebra(m, std::move(hbr)), ambient.weight(), std::move(hop));
  return {std::move(left), std::move(right), std::move(tril), std::move(trir)};
}

} // namespace rbla
