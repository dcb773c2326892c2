#include <doctest.h>

#include "rbla/errors.hpp"
#include "rbla/classify.hpp"
#include "rbla/flag.hpp"
#include "testutil.hpp"

using namespace rbla;
using testutil::OperatorKind;
using testutil::Rng;

namespace {

ExtendedDerivation over_aff1(ExderQuadruple q) {
  return {testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero), std::move(q)};
}

// The worked quadruple: eps = 0, d(e1) = e2, d(e2) = 0, g0 = e1, k0 = 0.
ExtendedDerivation aff1_line_exder() {
  ExderQuadruple q = ExderQuadruple::zero(2);
  q.d.at(1, 0) = Rational(1);
  q.g0[0] = Rational(1);
  return over_aff1(std::move(q));
}

} // namespace

TEST_CASE("twisted derivations of aff(1)") {
  const LieAlgebra aff = fixture_lie("aff1");

  CHECK(check_twisted_derivation(aff, zero_vec(2), Matrix(2, 2)).passed());

  // eps = 0: exactly the maps with image in span(e2).
  Rng rng(83);
  for (int t = 0; t < 50; ++t) {
    Matrix d(2, 2);
    d.at(1, 0) = testutil::rand_rational(rng);
    d.at(1, 1) = testutil::rand_rational(rng);
    CHECK(check_twisted_derivation(aff, zero_vec(2), d).passed());
  }
  Matrix bad(2, 2);
  bad.at(0, 0) = Rational(1); // d(e1) has an e1 component
  const auto rep = check_twisted_derivation(aff, zero_vec(2), bad);
  REQUIRE(!rep.passed());
  CHECK(rep.has("td_leibniz"));

  // eps(e2) = 1 violates eps([e1,e2]) = 0.
  Vec eps(2);
  eps[1] = Rational(1);
  const auto rep2 = check_twisted_derivation(aff, eps, Matrix(2, 2));
  REQUIRE(!rep2.passed());
  CHECK(rep2.has("td_epsilon"));

  CHECK_THROWS_AS(check_twisted_derivation(aff, zero_vec(3), Matrix(2, 2)), shape_error);
}

TEST_CASE("extended derivations: worked pass and fail cases") {
  for (const RBLieAlgebra& base : testutil::valid_bases())
    CHECK(check_extended_derivation({base, ExderQuadruple::zero(base.dim())}).passed());

  CHECK(check_extended_derivation(aff1_line_exder()).passed());

  // k0 = 1 with eps(e1) = 1 violates k0^2 eps(g) = 0 at weight 0.
  ExderQuadruple q = ExderQuadruple::zero(2);
  q.epsilon[0] = Rational(1);
  q.k0 = Rational(1);
  const auto rep = check_extended_derivation(over_aff1(q));
  REQUIRE(!rep.passed());
  CHECK(rep.has("ed_weight"));

  Tensor3 bad(2, 2, 2);
  bad.at(1, 0, 1) = Rational(1);
  bad.at(1, 1, 0) = Rational(-1);
  const RBLieAlgebra not_rb(LieAlgebra(2, bad), Rational(0), Matrix::identity(2));
  CHECK_THROWS_AS(check_extended_derivation({not_rb, ExderQuadruple::zero(2)}),
                  invalid_input_error);
}

TEST_CASE("the valid-quadruple generators are genuinely valid") {
  Rng rng(89);
  for (const std::string& name : testutil::fixture_names())
    for (int t = 0; t < 25; ++t)
      CHECK(check_extended_derivation(testutil::rand_valid_exder(rng, name)).passed());
}

TEST_CASE("datum_from_exder on worked quadruples") {
  const ExtendedDerivation zero = over_aff1(ExderQuadruple::zero(2));
  CHECK(datum_from_exder(zero) == ExtendingDatum::trivial(zero.base, 1));

  CHECK(datum_from_exder(aff1_line_exder()) == testutil::aff1_line_datum());

  ExderQuadruple q = ExderQuadruple::zero(2);
  q.k0 = Rational(7);
  const ExtendingDatum d = datum_from_exder(over_aff1(q));
  CHECK(d.p2().at(0, 0) == Rational(7));
  CHECK(d.tril().is_zero());
  CHECK(d.trir().is_zero());
  CHECK(d.f().is_zero());
}

TEST_CASE("exder_from_datum inverts datum_from_exder exactly") {
  Rng rng(97);
  for (const std::string& name : testutil::fixture_names())
    for (int t = 0; t < 50; ++t) {
      const RBLieAlgebra base = testutil::fixture_rb(name, Rational(0), OperatorKind::zero);
      ExderQuadruple q{testutil::rand_vec(rng, base.dim()),
                       testutil::rand_matrix(rng, base.dim(), base.dim()),
                       testutil::rand_vec(rng, base.dim()), testutil::rand_rational(rng)};
      const ExtendedDerivation x{base, q};
      const ExtendedDerivation back = exder_from_datum(datum_from_exder(x));
      CHECK(back.q.epsilon == q.epsilon);
      CHECK(back.q.d == q.d);
      CHECK(back.q.g0 == q.g0);
      CHECK(back.q.k0 == q.k0);
      CHECK(back.base.same_structure(base));
    }

  const ExtendingDatum two = ExtendingDatum::trivial(
      testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero), 2);
  CHECK_THROWS_AS(exder_from_datum(two), invalid_input_error);

  ExtendingDatum withf = testutil::aff1_line_datum();
  Tensor3 f(2, 1, 1);
  f.at(0, 0, 0) = Rational(1);
  const ExtendingDatum spoiled(withf.base(), 1, withf.tril(), withf.trir(), f,
                               withf.braces(), withf.p1(), withf.p2());
  CHECK_THROWS_AS(exder_from_datum(spoiled), invalid_input_error);
}

TEST_CASE("quadruple validity transfers to datum validity and back") {
  Rng rng(101);
  const auto bases = testutil::valid_bases();
  int valid_count = 0;
  for (int t = 0; t < 300; ++t) {
    const RBLieAlgebra& base = bases[t % bases.size()];
    ExderQuadruple q{testutil::rand_vec(rng, base.dim()),
                     testutil::rand_matrix(rng, base.dim(), base.dim()),
                     testutil::rand_vec(rng, base.dim()), testutil::rand_rational(rng)};
    const ExtendedDerivation x{base, std::move(q)};
    const bool direct = check_extended_derivation(x).passed();
    const bool via_datum = validate_datum(datum_from_exder(x)).passed();
    REQUIRE(direct == via_datum);
    valid_count += direct;
  }
  // Mix in guaranteed-valid quadruples so both branches are exercised.
  for (const std::string& name : testutil::fixture_names()) {
    const ExtendedDerivation x = testutil::rand_valid_exder(rng, name);
    CHECK(validate_datum(datum_from_exder(x)).passed());
  }
}

TEST_CASE("equivalence decision: the three worked aff(1) cases") {
  // Reflexivity with the canonical witness.
  const ExtendedDerivation self = aff1_line_exder();
  const auto w = decide_exder_equiv(self, self);
  REQUIRE(w.has_value());
  CHECK(verify_exder_witness(self, self, *w));

  // (0,0,0,0) vs (0,0,e2,0): g1 must be central (= 0), then k1 g0' = 0
  // forces k1 = 0, so they are not equivalent.
  const ExtendedDerivation zero = over_aff1(ExderQuadruple::zero(2));
  ExderQuadruple shift = ExderQuadruple::zero(2);
  shift.g0[1] = Rational(1);
  CHECK(!decide_exder_equiv(zero, over_aff1(shift)).has_value());

  // ad_{e1} with g0 = c e2 vs (0,0,c e2,0): witness (g1, k1) = (e1, 1).
  for (int c : {1, -2}) {
    ExderQuadruple ad = ExderQuadruple::zero(2);
    ad.d.at(1, 1) = Rational(1);
    ad.g0[1] = Rational(c);
    ExderQuadruple flat = ExderQuadruple::zero(2);
    flat.g0[1] = Rational(c);
    const auto wit = decide_exder_equiv(over_aff1(ad), over_aff1(flat));
    REQUIRE(wit.has_value());
    CHECK(wit->g1 == Vec{Rational(1), Rational(0)});
    CHECK(wit->k1 == Rational(1));
  }
}

TEST_CASE("differing epsilon or k0 is decided immediately") {
  ExderQuadruple a = ExderQuadruple::zero(2);
  ExderQuadruple b = ExderQuadruple::zero(2);
  b.k0 = Rational(1);
  CHECK(!decide_exder_equiv(over_aff1(a), over_aff1(b)).has_value());
  ExderQuadruple c = ExderQuadruple::zero(2);
  c.epsilon[0] = Rational(1);
  CHECK(!decide_exder_equiv(over_aff1(a), over_aff1(c)).has_value());

  CHECK_THROWS_AS(
      decide_exder_equiv(over_aff1(a),
                         {testutil::fixture_rb("aff1", Rational(0), OperatorKind::diag),
                          ExderQuadruple::zero(2)}),
      invalid_input_error);
}

TEST_CASE("the decision is reflexive and symmetric with verified witnesses") {
  Rng rng(103);
  for (int t = 0; t < 120; ++t) {
    const std::string& name = testutil::fixture_names()[t % 4];
    const ExtendedDerivation x = testutil::rand_valid_exder(rng, name);
    const auto self = decide_exder_equiv(x, x);
    REQUIRE(self.has_value());
    CHECK(!self->k1.is_zero());
    CHECK(verify_exder_witness(x, x, *self));

    const ExtendedDerivation y = testutil::rand_valid_exder(rng, name);
    const auto xy = decide_exder_equiv(x, y);
    const auto yx = decide_exder_equiv(y, x);
    CHECK(xy.has_value() == yx.has_value());
    if (xy) {
      CHECK(verify_exder_witness(x, y, *xy));
      CHECK(verify_exder_witness(y, x, *yx));
    }
  }
}

TEST_CASE("equivalence witnesses induce isomorphisms of the flag extensions") {
  Rng rng(107);
  int hits = 0;
  for (int t = 0; t < 60; ++t) {
    const std::string& name = testutil::fixture_names()[t % 4];
    const ExtendedDerivation x = testutil::rand_valid_exder(rng, name);
    // Transport x along a random pair to manufacture an equivalent y.
    EquivalenceWitness tw{testutil::rand_matrix(rng, x.base.dim(), 1), Matrix(1, 1)};
    tw.v.at(0, 0) = testutil::rand_rational(rng, 1, 3);
    const ExtendedDerivation y =
        exder_from_datum(transform_datum(datum_from_exder(x), tw));
    REQUIRE(check_extended_derivation(y).passed());

    const auto w = decide_exder_equiv(x, y);
    REQUIRE(w.has_value());
    CHECK(verify_exder_witness(x, y, *w));
    ++hits;

    const ExtendingDatum dx = datum_from_exder(x);
    const ExtendingDatum dy = datum_from_exder(y);
    EquivalenceWitness ew{Matrix(x.base.dim(), 1), Matrix(1, 1)};
    for (std::size_t i = 0; i < x.base.dim(); ++i) ew.r.at(i, 0) = w->g1[i];
    ew.v.at(0, 0) = w->k1;

    CHECK(check_witness_conditions(dx, dy, ew).passed());
    const Matrix psi = psi_from_witness(dx, ew);
    const UnifiedProduct ux = unified_product(dx);
    const UnifiedProduct uy = unified_product(dy);
    CHECK(check_rb_morphism(ux.product, uy.product, psi).passed());

    std::vector<std::size_t> first(x.base.dim());
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
    const DecompositionContext ctx = DecompositionContext::coordinate(ux.product, first);
    CHECK(check_stabilizes(psi, ctx, uy.product.op()));
  }
  CHECK(hits == 60);
}

TEST_CASE("flag_extend grows the dimension by one and embeds the base") {
  const ExtendedDerivation zero = over_aff1(ExderQuadruple::zero(2));
  const RBLieAlgebra sum = flag_extend(zero);
  CHECK(sum.dim() == 3);
  CHECK(check_rb(sum).passed());

  const RBLieAlgebra line = flag_extend(aff1_line_exder());
  CHECK(line.dim() == 3);
  CHECK(line.op().at(0, 2) == Rational(1)); // P~(x) = e1
  CHECK(check_rb(line).passed());

  ExderQuadruple bad = ExderQuadruple::zero(2);
  bad.epsilon[0] = Rational(1);
  bad.k0 = Rational(1);
  CHECK_THROWS_AS(flag_extend(over_aff1(bad)), invalid_input_error);
}

TEST_CASE("flag chains re-validate per step and restrict exactly") {
  const RBLieAlgebra base = testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero);
  ExderQuadruple q1 = ExderQuadruple::zero(2);
  q1.d.at(1, 0) = Rational(1);
  q1.g0[0] = Rational(1);

  const FlagChain chain = build_flag_chain(base, {q1, ExderQuadruple::zero(3)});
  REQUIRE(chain.algebras.size() == 3);
  CHECK(chain.algebras[0].dim() == 2);
  CHECK(chain.algebras[1].dim() == 3);
  CHECK(chain.algebras[2].dim() == 4);
  for (const RBLieAlgebra& alg : chain.algebras) CHECK(check_rb(alg).passed());

  // Each algebra is the restriction of the next to the leading block.
  for (std::size_t s = 0; s + 1 < chain.algebras.size(); ++s) {
    const RBLieAlgebra& small = chain.algebras[s];
    const RBLieAlgebra& big = chain.algebras[s + 1];
    Matrix incl(big.dim(), small.dim());
    for (std::size_t i = 0; i < small.dim(); ++i) incl.at(i, i) = Rational(1);
    CHECK(check_rb_morphism(small, big, incl).passed());
  }

  // An invalid second step is reported with its index.
  ExderQuadruple bad = ExderQuadruple::zero(3);
  bad.epsilon[0] = Rational(1);
  bad.k0 = Rational(1);
  try {
    build_flag_chain(base, {q1, bad});
    FAIL("expected invalid_input_error");
  } catch (const invalid_input_error& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }

  // Wrong-size quadruple for the current level is a step error too.
  try {
    build_flag_chain(base, {q1, ExderQuadruple::zero(2)});
    FAIL("expected invalid_input_error");
  } catch (const invalid_input_error& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("partition groups the worked trio as {0,1},{2}") {
  ExderQuadruple ad = ExderQuadruple::zero(2);
  ad.d.at(1, 1) = Rational(1);
  ExderQuadruple shift = ExderQuadruple::zero(2);
  shift.g0[1] = Rational(1);
  const std::vector<ExtendedDerivation> xs = {over_aff1(ExderQuadruple::zero(2)),
                                              over_aff1(ad), over_aff1(shift)};
  const auto classes = partition_exders(xs);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<std::size_t>{0, 1});
  CHECK(classes[1] == std::vector<std::size_t>{2});

  std::vector<ExtendedDerivation> mixed = xs;
  mixed.push_back({testutil::fixture_rb("aff1", Rational(0), OperatorKind::diag),
                   ExderQuadruple::zero(2)});
  CHECK_THROWS_AS(partition_exders(mixed), invalid_input_error);
}
