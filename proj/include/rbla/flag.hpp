#ifndef RBLA_FLAG_HPP
#define RBLA_FLAG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rbla/classify.hpp"
#include "rbla/extending.hpp"

namespace rbla {

/// Raw quadruple (epsilon, d, g0, k0) over an n-dimensional algebra:
/// epsilon a functional on g, d an endomorphism of g, g0 in g, k0 a
/// scalar. Bound to a base it is a candidate extended derivation.
struct ExderQuadruple {
  Vec epsilon; // length n
  Matrix d;    // n x n
  Vec g0;      // length n
  Rational k0;

  static ExderQuadruple zero(std::size_t n) {
    return {zero_vec(n), Matrix(n, n), zero_vec(n), Rational(0)};
  }
};

struct ExtendedDerivation {
  RBLieAlgebra base;
  ExderQuadruple q;
};

/// epsilon vanishes on brackets and d is an epsilon-twisted derivation:
///   epsilon([g,h]) = 0
///   d([g,h]) = [d(g),h] + [g,d(h)] + epsilon(g) d(h) - epsilon(h) d(g)
/// Ids "td_epsilon", "td_leibniz".
ConditionReport check_twisted_derivation(const LieAlgebra& L, const Vec& epsilon,
                                         const Matrix& d, bool exhaustive = false);

/// The twisted-derivation pair plus the two operator conditions, per
/// basis vector g (ids "ed_operator", "ed_weight"):
///   [P(g),g0] - k0 d(P(g)) + P(d(P(g))) + eps(P(g)) g0 - P([g,g0])
///     + k0 P(d(g)) + k0 eps(g) g0 + w P(d(g)) + w eps(g) g0 = 0
///   (k0^2 + w k0) eps(g) = 0
ConditionReport check_extended_derivation(const ExtendedDerivation& x,
                                          bool exhaustive = false);

/// The dimension-1 extending datum of a quadruple:
///   x <| g = eps(g) x, x |> g = d(g), f = 0, braces = 0,
///   p1(x) = g0, p2(x) = k0 x.
/// A quadruple is an extended derivation iff its datum validates.
ExtendingDatum datum_from_exder(const ExtendedDerivation& x);

/// Inverse of datum_from_exder. Requires vdim = 1 with f = 0, braces = 0.
ExtendedDerivation exder_from_datum(const ExtendingDatum& datum);

/// Witness that two extended derivations are equivalent: g1 in g and a
/// nonzero scalar k1 with
///   (e1)  d(g) = k1 d'(g) + [g1, g] - eps(g) g1     for all g
///   (e2)  g0 = P(g1) + k1 g0' - k0 g1
struct ExderEquivWitness {
  Vec g1;
  Rational k1;
};

bool verify_exder_witness(const ExtendedDerivation& x, const ExtendedDerivation& xp,
                          const ExderEquivWitness& w);

/// Decide equivalence exactly. Requires eps = eps' and k0 = k0' (else
/// not equivalent); (e1)-(e2) are linear in (k1, g1), so the affine
/// solution set is computed and searched for a point with k1 != 0
/// (preferring k1 = 1). Every returned witness is re-verified.
std::optional<ExderEquivWitness> decide_exder_equiv(const ExtendedDerivation& x,
                                                    const ExtendedDerivation& xp);

/// The (dim+1)-dimensional unified product of the quadruple's datum.
/// Requires check_extended_derivation to pass.
RBLieAlgebra flag_extend(const ExtendedDerivation& x);

/// A chain g = E_0 in E_1 in ... in E_m with each step of codimension 1,
/// E_{i+1} the flag extension of E_i by steps[i].
struct FlagChain {
  std::vector<ExtendedDerivation> steps; // steps[i] is bound to algebras[i]
  std::vector<RBLieAlgebra> algebras;    // m + 1 algebras, dims n, n+1, ..., n+m
};

/// Build the chain, re-validating each quadruple against the current
/// algebra; the error for an invalid step names the step index.
FlagChain build_flag_chain(const RBLieAlgebra& base,
                           const std::vector<ExderQuadruple>& steps);

/// Partition a finite list of extended derivations over a common base
/// into equivalence classes (union-find over pairwise decisions, class
/// order by smallest member index).
std::vector<std::vector<std::size_t>>
partition_exders(const std::vector<ExtendedDerivation>& xs);

} // namespace rbla

#endif
