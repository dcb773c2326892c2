#ifndef RBLA_CORE_HPP
#define RBLA_CORE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rbla/linalg.hpp"
#include "rbla/report.hpp"

namespace rbla {

/// Tag for constructors that skip the antisymmetry validation, so that
/// negative fixtures and raw unified-product tensors can be represented.
struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k bracket(k,i,j) e_k.
///
/// The default constructor enforces antisymmetry of the constants;
/// the Jacobi identity is only tested by check_lie.
class LieAlgebra {
public:
  LieAlgebra(std::size_t dim, Tensor3 bracket, std::vector<std::string> labels = {});
  LieAlgebra(unchecked_t, std::size_t dim, Tensor3 bracket,
             std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Tensor3& bracket() const { return bracket_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec bracket_of(const Vec& u, const Vec& v) const { return bracket_.apply(u, v); }

  /// Structure-constant equality (labels ignored).
  bool same_structure(const LieAlgebra& o) const {
    return dim_ == o.dim_ && bracket_ == o.bracket_;
  }

private:
  std::size_t dim_;
  Tensor3 bracket_;
  std::vector<std::string> labels_;
};

/// A structure-constant algebra equipped with a weight and an operator
/// matrix; whether the operator actually satisfies the Rota-Baxter
/// identity is decided by check_rb.
class RBLieAlgebra {
public:
  RBLieAlgebra(LieAlgebra algebra, Rational weight, Matrix op);

  const LieAlgebra& algebra() const { return algebra_; }
  const Rational& weight() const { return weight_; }
  const Matrix& op() const { return op_; }
  std::size_t dim() const { return algebra_.dim(); }

  Vec bracket_of(const Vec& u, const Vec& v) const { return algebra_.bracket_of(u, v); }
  Vec apply_op(const Vec& u) const { return op_.apply(u); }

  bool same_structure(const RBLieAlgebra& o) const {
    return algebra_.same_structure(o.algebra_) && weight_ == o.weight_ && op_ == o.op_;
  }

private:
  LieAlgebra algebra_;
  Rational weight_;
  Matrix op_;
};

enum class ActionSide { left, right };

/// Bilinear action of an algebra on a space, stored as a tensor.
/// left:  act(g, x), tensor (space, algebra, space)   g_i |> x_j
/// right: act(x, g), tensor (space, space, algebra)   x_i <| g_j
struct LinearAction {
  ActionSide side;
  std::size_t algebra_dim;
  std::size_t space_dim;
  Tensor3 action;

  static LinearAction left(std::size_t algebra_dim, std::size_t space_dim, Tensor3 t);
  static LinearAction right(std::size_t algebra_dim, std::size_t space_dim, Tensor3 t);

  /// act(a, b) with operands in side order (left: a in g, b in V;
  /// right: a in V, b in g).
  Vec act(const Vec& a, const Vec& b) const { return action.apply(a, b); }
};

/// Explicit right-to-left conversion g |> x := -(x <| g). Never applied
/// implicitly.
LinearAction to_left(const LinearAction& a);

/// Module space with a compatible operator t: the data of a module over
/// a Rota-Baxter Lie algebra.
struct RBModule {
  RBLieAlgebra base;
  std::size_t space_dim;
  LinearAction action;
  Matrix t;
};

/// Antisymmetry and Jacobi on all basis tuples. Both identities are
/// multilinear, so a basis-level pass extends to all vectors.
ConditionReport check_lie(const LieAlgebra& L, bool exhaustive = false);

/// Weighted Rota-Baxter identity on all basis pairs:
///   [P(e_i), P(e_j)] = P([P(e_i), e_j] + [e_i, P(e_j)] + weight [e_i, e_j]).
/// Requires the underlying algebra to pass check_lie.
ConditionReport check_rb(const RBLieAlgebra& R, bool exhaustive = false);

/// F is a morphism iff F[e_i,e_j] = [F e_i, F e_j] on all pairs and
/// F P_src = P_dst F as matrices. Weights must agree.
ConditionReport check_rb_morphism(const RBLieAlgebra& src, const RBLieAlgebra& dst,
                                  const Matrix& F, bool exhaustive = false);

/// Module law on all basis tuples:
///   left:  [g,h] |> x = g |> (h |> x) - h |> (g |> x)
///   right: x <| [g,h] = (x <| g) <| h - (x <| h) <| g
ConditionReport check_module(const LieAlgebra& L, const LinearAction& action,
                             bool exhaustive = false);

/// Module law plus the operator compatibility
///   left:  P(g) |> t(x) = t(P(g) |> x + g |> t(x) + weight g |> x)
///   right: t(x) <| P(g) = t(x <| P(g) + t(x) <| g + weight x <| g)
ConditionReport check_rb_module(const RBModule& m, bool exhaustive = false);

/// Adjoint action of an algebra on itself (left action by the bracket).
LinearAction adjoint_action(const LieAlgebra& L);

/// Built-in algebras: "abelian:n", "aff1", "heisenberg3", "sl2".
LieAlgebra fixture_lie(const std::string& name);

} // namespace rbla

#endif
