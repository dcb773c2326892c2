#ifndef RBLA_CLASSIFY_HPP
#define RBLA_CLASSIFY_HPP

#include <cstddef>
#include <vector>

#include "rbla/extending.hpp"

namespace rbla {

/// An ambient algebra E split as E = g (+) V: vectors spanning a
/// Rota-Baxter subalgebra g, a complement spanning V = ker(p), and the
/// retraction p : E -> g (p restricted to g is the identity, p kills V).
/// Construction validates everything: complementarity, the retraction
/// identities, and closure of g under the bracket and the operator.
class DecompositionContext {
public:
  DecompositionContext(RBLieAlgebra ambient, std::vector<Vec> sub_basis,
                       std::vector<Vec> complement_basis);
  /// Same, but validates a caller-supplied projection against the bases
  /// instead of deriving it.
  DecompositionContext(RBLieAlgebra ambient, std::vector<Vec> sub_basis,
                       std::vector<Vec> complement_basis, const Matrix& projection);

  /// Canonical coordinate split: the listed ambient coordinates span g
  /// (in the given order), the remaining ones V (in ascending order).
  static DecompositionContext coordinate(RBLieAlgebra ambient,
                                         const std::vector<std::size_t>& sub_indices);

  const RBLieAlgebra& ambient() const { return ambient_; }
  const std::vector<Vec>& sub_basis() const { return sub_basis_; }
  const std::vector<Vec>& complement_basis() const { return complement_basis_; }
  std::size_t sub_dim() const { return sub_basis_.size(); }
  std::size_t comp_dim() const { return complement_basis_.size(); }

  /// p : E -> g in sub-basis coordinates (sub_dim x ambient.dim).
  const Matrix& projection() const { return projection_; }
  /// pi : E -> V in complement coordinates (comp_dim x ambient.dim).
  const Matrix& complement_projection() const { return pi_; }
  /// Basis-change matrix B = [sub | complement] (columns).
  const Matrix& basis_matrix() const { return basis_; }

private:
  RBLieAlgebra ambient_;
  std::vector<Vec> sub_basis_;
  std::vector<Vec> complement_basis_;
  Matrix basis_;
  Matrix projection_;
  Matrix pi_;
};

/// Read an extending datum off an ambient algebra along the split:
///   x |> g = p([x,g])         x <| g = [x,g] - p([x,g])
///   f(x,y) = p([x,y])         {x,y}  = [x,y] - p([x,y])
///   p1(x)  = p(P_E x)         p2(x)  = P_E x - p(P_E x)
/// with the base structure restricted from the ambient. The unified
/// product of the result is isomorphic to the ambient via (g,x) -> g+x.
ExtendingDatum decompose(const DecompositionContext& ctx);

/// phi stabilizes g iff phi fixes every sub-basis vector; it
/// co-stabilizes V iff pi o phi = pi. phi must be square on E and
/// compatible with the operator: phi o P_E = P_E o phi, or, when phi
/// maps to a second structure on E with operator target_op,
/// target_op o phi = phi o P_E.
bool check_stabilizes(const Matrix& phi, const DecompositionContext& ctx);
bool check_stabilizes(const Matrix& phi, const DecompositionContext& ctx,
                      const Matrix& target_op);
bool check_costabilizes(const Matrix& phi, const DecompositionContext& ctx);
bool check_costabilizes(const Matrix& phi, const DecompositionContext& ctx,
                        const Matrix& target_op);

/// The pair (r : V -> g, v : V -> V) determining a base-fixing map
/// (g, x) -> (g + r(x), v(x)) between unified products.
struct EquivalenceWitness {
  Matrix r; // base.dim x vdim
  Matrix v; // vdim x vdim

  static EquivalenceWitness identity(std::size_t base_dim, std::size_t vdim) {
    return {Matrix(base_dim, vdim), Matrix::identity(vdim)};
  }
};

/// The block matrix [[I, r], [0, v]] on the (g, V) ordered basis.
Matrix psi_from_witness(const ExtendingDatum& datum, const EquivalenceWitness& w);

/// The six compatibility conditions on (r, v) between two data over the
/// same base (ids "L1".."L6"):
///   L1  v(x) <|' g = v(x <| g)
///   L2  r(x <| g) = [r(x), g] - x |> g + v(x) |>' g
///   L3  v({x,y}) = {v(x),v(y)}' + v(x) <|' r(y) - v(y) <|' r(x)
///   L4  r({x,y}) = [r(x),r(y)] + v(x) |>' r(y) - v(y) |>' r(x)
///                  + f'(v(x),v(y)) - f(x,y)
///   L5  p1(x) = P(r(x)) + p1'(v(x)) - r(p2(x))
///   L6  v(p2(x)) = p2'(v(x))
/// Passing with v invertible makes psi_from_witness an isomorphism of
/// the two unified products.
ConditionReport check_witness_conditions(const ExtendingDatum& datum,
                                         const ExtendingDatum& primed,
                                         const EquivalenceWitness& w,
                                         bool exhaustive = false);

/// The datum obtained by transporting along (r, v) (v invertible), i.e.
/// the unique primed datum for which psi_from_witness is a morphism.
ExtendingDatum transform_datum(const ExtendingDatum& datum, const EquivalenceWitness& w);

/// The v = id special case, written out directly:
///   <|' = <|, p2' = p2,
///   x |>' g  = x |> g + r(x <| g) - [r(x), g]
///   f'(x,y)  = f(x,y) + r({x,y}) + [r(x),r(y)] + y |> r(x) - x |> r(y)
///              + r(y <| r(x)) - r(x <| r(y))
///   {x,y}'   = {x,y} - x <| r(y) + y <| r(x)
///   p1'(x)   = p1(x) - P(r(x)) + r(p2(x))
/// Coincides with transform_datum(datum, (r, id)).
ExtendingDatum cohomologous_transform(const ExtendingDatum& datum, const Matrix& r);

} // namespace rbla

#endif
