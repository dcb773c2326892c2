#ifndef RBLA_EXTENDING_HPP
#define RBLA_EXTENDING_HPP

#include <cstddef>

#include "rbla/core.hpp"

namespace rbla {

/// The six maps coupling a Rota-Baxter Lie algebra g to a space V:
///
///   tril   : V x g -> V                    x <| g   (right action on V)
///   trir   : V x g -> g                    x |> g
///   f      : V x V -> g                    cocycle part of the bracket
///   braces : V x V -> V                    bracket candidate on V
///   p1     : V -> g, p2 : V -> V           operator components on V
///
/// Construction only enforces shape consistency; the algebraic
/// compatibility conditions (a)-(k) live in validate_datum.
class ExtendingDatum {
public:
  ExtendingDatum(RBLieAlgebra base, std::size_t vdim, Tensor3 tril, Tensor3 trir,
                 Tensor3 f, Tensor3 braces, Matrix p1, Matrix p2);

  static ExtendingDatum trivial(RBLieAlgebra base, std::size_t vdim);

  const RBLieAlgebra& base() const { return base_; }
  std::size_t vdim() const { return vdim_; }
  const Tensor3& tril() const { return tril_; }
  const Tensor3& trir() const { return trir_; }
  const Tensor3& f() const { return f_; }
  const Tensor3& braces() const { return braces_; }
  const Matrix& p1() const { return p1_; }
  const Matrix& p2() const { return p2_; }

  // Coordinate evaluation of the six maps.
  Vec tril_of(const Vec& x, const Vec& g) const { return tril_.apply(x, g); }
  Vec trir_of(const Vec& x, const Vec& g) const { return trir_.apply(x, g); }
  Vec f_of(const Vec& x, const Vec& y) const { return f_.apply(x, y); }
  Vec braces_of(const Vec& x, const Vec& y) const { return braces_.apply(x, y); }
  Vec p1_of(const Vec& x) const { return p1_.apply(x); }
  Vec p2_of(const Vec& x) const { return p2_.apply(x); }

  /// Exact equality of all six grids and of the base structure
  /// (weight, bracket, operator); labels are ignored.
  bool operator==(const ExtendingDatum& o) const;
  bool operator!=(const ExtendingDatum& o) const { return !(*this == o); }

private:
  RBLieAlgebra base_;
  std::size_t vdim_;
  Tensor3 tril_, trir_, f_, braces_;
  Matrix p1_, p2_;
};

/// Product algebra on g x V in the ordered basis (e_1..e_n, x_1..x_m),
/// together with the canonical embedding of g and projection onto V.
struct UnifiedProduct {
  RBLieAlgebra product;
  Matrix embedding;  // (n+m) x n, g -> g x V
  Matrix projection; // m x (n+m), g x V -> V
  ExtendingDatum source;
};

/// The eleven compatibility conditions, checked exhaustively over basis
/// tuples; ids "a".."k". Requires the base to pass check_rb.
///
///  (a) f and braces alternating
///  (b) tril is a right module law for the base bracket
///  (c) x|>[g,h] = [x|>g,h] + [g,x|>h] + (x<|g)|>h - (x<|h)|>g
///  (d) {x,y}<|g = {x,y<|g} + {x<|g,y} + x<|(y|>g) - y<|(x|>g)
///  (e) {x,y}|>g = x|>(y|>g) - y|>(x|>g) + [g,f(x,y)] + f(x,y<|g) + f(x<|g,y)
///  (f) cyclic f/braces identity with |> terms
///  (g) cyclic braces identity with <| terms
///  (h)-(k) operator compatibilities of (P, p1, p2) across g x V
ConditionReport validate_datum(const ExtendingDatum& datum, bool exhaustive = false);

/// The product bracket and operator on g x V:
///   [(g,x),(h,y)] = ([g,h] + x|>h - y|>g + f(x,y), {x,y} + x<|h - y<|g)
///   P~(g,x)       = (P(g) + p1(x), p2(x))
/// Defined for any shape-consistent datum; whether the result satisfies
/// the axioms is a separate check.
UnifiedProduct unified_product(const ExtendingDatum& datum);

/// Independent oracle for validate_datum: run check_lie and, when the
/// Lie part passes, check_rb on the constructed product.
ConditionReport check_unified_axioms(const UnifiedProduct& up, bool exhaustive = false);

/// Crossed system: tril = 0, the V side carries its own Rota-Baxter Lie
/// algebra structure (braces = its bracket, p2 = its operator).
struct CrossedSystem {
  RBLieAlgebra base;  // g
  RBLieAlgebra vside; // (V, braces, p2)
  Tensor3 trir;       // V x g -> g
  Tensor3 f;          // V x V -> g
  Matrix p1;          // V -> g
};

/// The datum with tril = 0 induced by a crossed system.
ExtendingDatum datum_of(const CrossedSystem& s);

/// The six crossed-system conditions (ids reuse the datum letters they
/// restrict: a, c, e, f, h, j), checked directly; equivalent to
/// validate_datum(datum_of(s)) when both algebras are valid.
ConditionReport check_crossed_system(const CrossedSystem& s, bool exhaustive = false);

/// Unified product of the induced datum; the embedded g is an ideal.
UnifiedProduct crossed_product(const CrossedSystem& s);

/// Matched pair: f = 0, p1 = 0, two algebras acting on each other.
struct MatchedPair {
  RBLieAlgebra left;  // g
  RBLieAlgebra right; // (V, braces, p2)
  Tensor3 tril;       // V x g -> V
  Tensor3 trir;       // V x g -> g
};

/// The datum with f = 0, p1 = 0 induced by a matched pair.
ExtendingDatum datum_of(const MatchedPair& m);

/// Module laws for both actions, their operator compatibilities, and the
/// two mixed bracket compatibilities. Ids: "mp_left_module",
/// "mp_left_rb_module", "mp_right_module", "mp_right_rb_module",
/// "mp_mixed_bracket", "mp_mixed_braces".
ConditionReport check_matched_pair(const MatchedPair& m, bool exhaustive = false);

/// Unified product of the induced datum.
UnifiedProduct bicrossed_product(const MatchedPair& m);

/// Split an algebra E = g (+) h into a matched pair: both bases must span
/// complementary Rota-Baxter subalgebras; the actions are the projections
/// of [x, g] onto the two factors. The bicrossed product of the result is
/// isomorphic to E via (g, x) -> g + x.
MatchedPair factorize(const RBLieAlgebra& ambient, const std::vector<Vec>& g_basis,
                      const std::vector<Vec>& h_basis);

} // namespace rbla

#endif
