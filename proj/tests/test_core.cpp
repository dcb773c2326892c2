#include <doctest.h>

#include "rbla/core.hpp"
#include "rbla/errors.hpp"
#include "testutil.hpp"

using namespace rbla;
using testutil::OperatorKind;
using testutil::Rng;

namespace {

RBLieAlgebra with_operator(const std::string& fixture, Rational weight, Matrix op) {
  return RBLieAlgebra(fixture_lie(fixture), std::move(weight), std::move(op));
}

// Structure constants that are antisymmetric but fail Jacobi:
// [e1,e2] = e3, [e1,e3] = e1.
LieAlgebra non_jacobi3() {
  Tensor3 t(3, 3, 3);
  t.at(2, 0, 1) = Rational(1);
  t.at(2, 1, 0) = Rational(-1);
  t.at(0, 0, 2) = Rational(1);
  t.at(0, 2, 0) = Rational(-1);
  return LieAlgebra(3, std::move(t));
}

} // namespace

TEST_CASE("fixtures satisfy the Lie axioms, matching the brute-force oracle") {
  for (const char* name : {"abelian:4", "aff1", "heisenberg3", "sl2"}) {
    const LieAlgebra L = fixture_lie(name);
    CHECK(check_lie(L).passed());
    CHECK(testutil::lie_axioms_brute_force(L.bracket()));
  }
  CHECK_THROWS_AS(fixture_lie("nope"), invalid_input_error);
  CHECK_THROWS_AS(fixture_lie("abelian:x"), invalid_input_error);
}

TEST_CASE("antisymmetry is enforced at construction, Jacobi is not") {
  Tensor3 bad(2, 2, 2);
  bad.at(0, 0, 1) = Rational(1); // missing the mirrored entry
  CHECK_THROWS_AS(LieAlgebra(2, bad), invalid_input_error);

  const LieAlgebra raw(unchecked, 2, bad);
  const auto rep = check_lie(raw);
  CHECK(!rep.passed());
  CHECK(rep.has("antisymmetry"));

  const auto rep2 = check_lie(non_jacobi3());
  CHECK(!rep2.passed());
  CHECK(rep2.has("jacobi"));
  CHECK(!rep2.has("antisymmetry"));
  CHECK(!testutil::lie_axioms_brute_force(non_jacobi3().bracket()));
}

TEST_CASE("exhaustive reports list every violation, default only the first") {
  const auto first = check_lie(non_jacobi3(), false);
  const auto all = check_lie(non_jacobi3(), true);
  CHECK(first.failures().size() == 1);
  CHECK(all.failures().size() > 1);
}

TEST_CASE("P = 0 and P = -weight*id satisfy the Rota-Baxter identity everywhere") {
  Rng rng(3);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  for (const std::string& name : testutil::fixture_names()) {
    const LieAlgebra L = fixture_lie(name);
    for (int t = 0; t < 10; ++t) {
      const Rational w(num(rng), den(rng));
      CHECK(check_rb(RBLieAlgebra(L, w, Matrix(L.dim(), L.dim()))).passed());
      CHECK(check_rb(RBLieAlgebra(L, w, Matrix::identity(L.dim()).scaled(-w))).passed());
    }
  }
}

TEST_CASE("all randomized-suite bases are genuinely valid") {
  for (const RBLieAlgebra& base : testutil::valid_bases())
    CHECK(check_rb(base).passed());
}

TEST_CASE("aff(1) weight-0 operators: worked examples") {
  Matrix diag(2, 2);
  diag.at(0, 0) = Rational(1);
  CHECK(check_rb(with_operator("aff1", Rational(0), diag)).passed());

  const auto rep = check_rb(with_operator("aff1", Rational(0), Matrix::identity(2)));
  REQUIRE(!rep.passed());
  CHECK(rep.failures().front().condition == "rota_baxter");
  CHECK(rep.failures().front().indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("aff(1) weight-0 characterization: c(a+d) = 0 and d^2 = -bc") {
  // Columns are images: P e1 = a e1 + b e2, P e2 = c e1 + d e2.
  const LieAlgebra L = fixture_lie("aff1");
  int passing = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          Matrix p(2, 2);
          p.at(0, 0) = Rational(a);
          p.at(1, 0) = Rational(b);
          p.at(0, 1) = Rational(c);
          p.at(1, 1) = Rational(d);
          const bool oracle = (c * (a + d) == 0) && (d * d == -b * c);
          const bool got = check_rb(RBLieAlgebra(L, Rational(0), p)).passed();
          CHECK(got == oracle);
          passing += got;
        }
  CHECK(passing > 0);
}

TEST_CASE("check_rb requires a Lie algebra underneath") {
  CHECK_THROWS_AS(check_rb(RBLieAlgebra(non_jacobi3(), Rational(0), Matrix(3, 3))),
                  invalid_input_error);
}

TEST_CASE("identity and zero maps are morphisms; operator mismatch is caught") {
  const RBLieAlgebra diag = testutil::fixture_rb("aff1", Rational(0), OperatorKind::diag);
  const RBLieAlgebra zero = testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero);

  CHECK(check_rb_morphism(diag, diag, Matrix::identity(2)).passed());
  CHECK(check_rb_morphism(diag, zero, Matrix(2, 2)).passed());

  const auto rep = check_rb_morphism(diag, zero, Matrix::identity(2));
  REQUIRE(!rep.passed());
  CHECK(rep.has("operator"));
  CHECK(!rep.has("bracket"));

  CHECK_THROWS_AS(check_rb_morphism(
                      diag, testutil::fixture_rb("aff1", Rational(1), OperatorKind::zero),
                      Matrix::identity(2)),
                  invalid_input_error);
  CHECK_THROWS_AS(check_rb_morphism(diag, zero, Matrix(3, 2)), shape_error);
}

TEST_CASE("morphisms compose") {
  Rng rng(17);
  const RBLieAlgebra a = testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero);
  for (int t = 0; t < 50; ++t) {
    // Automorphism family of aff(1): e1 -> e1 + beta e2, e2 -> delta e2.
    const auto automorphism = [&](Rational beta, Rational delta) {
      Matrix f = Matrix::identity(2);
      f.at(1, 0) = beta;
      f.at(1, 1) = delta;
      return f;
    };
    const Matrix f = automorphism(testutil::rand_rational(rng), testutil::rand_rational(rng, 1, 3));
    const Matrix g = automorphism(testutil::rand_rational(rng), testutil::rand_rational(rng, 1, 3));
    REQUIRE(check_rb_morphism(a, a, f).passed());
    REQUIRE(check_rb_morphism(a, a, g).passed());
    CHECK(check_rb_morphism(a, a, g * f).passed());
  }
}

TEST_CASE("adjoint action is a module action; the operator makes it an RB module") {
  for (const std::string& name : testutil::fixture_names()) {
    const RBLieAlgebra R = testutil::fixture_rb(name, Rational(0), OperatorKind::diag);
    const LinearAction ad = adjoint_action(R.algebra());
    CHECK(check_module(R.algebra(), ad).passed());
    CHECK(check_rb_module({R, R.dim(), ad, R.op()}).passed());
  }

  // T = id over P = diag(1,0) violates the module-operator identity.
  const RBLieAlgebra R = testutil::fixture_rb("aff1", Rational(0), OperatorKind::diag);
  const auto rep = check_rb_module({R, 2, adjoint_action(R.algebra()), Matrix::identity(2)});
  CHECK(!rep.passed());
  CHECK(rep.has("rb_module"));
}

TEST_CASE("right actions convert to left actions explicitly") {
  // x <| g := [x, g] on aff(1) is a right action; its left form is ad.
  const LieAlgebra L = fixture_lie("aff1");
  Tensor3 right(2, 2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) right.at(k, i, j) = L.bracket().at(k, i, j);
  const LinearAction ra = LinearAction::right(2, 2, right);
  CHECK(check_module(L, ra).passed());
  const LinearAction la = to_left(ra);
  CHECK(la.side == ActionSide::left);
  CHECK(check_module(L, la).passed());
  CHECK(la.action == L.bracket()); // g |> x = -[x,g] = [g,x]
}

TEST_CASE("a basis-level pass extends to random vectors exactly") {
  Rng rng(23);
  for (const std::string& name : testutil::fixture_names()) {
    const RBLieAlgebra R = testutil::fixture_rb(name, Rational(1), OperatorKind::diag);
    REQUIRE(check_rb(R).passed());
    const std::size_t n = R.dim();
    for (int t = 0; t < 40; ++t) {
      const Vec u = testutil::rand_vec(rng, n, -4, 4);
      const Vec v = testutil::rand_vec(rng, n, -4, 4);
      const Vec w = testutil::rand_vec(rng, n, -4, 4);
      CHECK(is_zero_vec(R.bracket_of(u, u)));
      CHECK(is_zero_vec(R.bracket_of(R.bracket_of(u, v), w) +
                        R.bracket_of(R.bracket_of(v, w), u) +
                        R.bracket_of(R.bracket_of(w, u), v)));
      const Vec lhs = R.bracket_of(R.apply_op(u), R.apply_op(v));
      const Vec rhs = R.apply_op(R.bracket_of(R.apply_op(u), v) +
                                 R.bracket_of(u, R.apply_op(v)) +
                                 R.weight() * R.bracket_of(u, v));
      CHECK(lhs == rhs);
    }
  }
}
