#include <doctest.h>

#include "rbla/errors.hpp"
#include "rbla/io.hpp"
#include "testutil.hpp"

using namespace rbla;
using namespace rbla::io;
using testutil::OperatorKind;

TEST_CASE("documents round-trip bit-exactly and deterministically") {
  const RBLieAlgebra aff = testutil::fixture_rb("aff1", Rational(0), OperatorKind::diag);
  const Document doc{"rb_lie", rb_payload(aff), false};
  const std::string bytes = dump_document(doc);
  CHECK(bytes == dump_document(doc));

  const Document parsed = parse_document(bytes);
  CHECK(parsed.kind == "rb_lie");
  CHECK(!parsed.unverified);
  const RBLieAlgebra back = rb_from(parsed.payload);
  CHECK(back.same_structure(aff));
  CHECK(back.algebra().labels() == aff.algebra().labels());
  CHECK(dump_document({"rb_lie", rb_payload(back), false}) == bytes);
}

TEST_CASE("datum, witness, exder and chain payloads round-trip") {
  testutil::Rng rng(113);
  const ExtendingDatum d = testutil::aff1_line_datum();
  CHECK(datum_from(datum_payload(d)) == d);

  const EquivalenceWitness w{testutil::rand_matrix(rng, 2, 1),
                             testutil::rand_invertible(rng, 1)};
  const EquivalenceWitness w2 = witness_from(witness_payload(w));
  CHECK(w2.r == w.r);
  CHECK(w2.v == w.v);

  const ExtendedDerivation x = testutil::rand_valid_exder(rng, "heisenberg3");
  const ExtendedDerivation x2 = exder_from(exder_payload(x));
  CHECK(x2.base.same_structure(x.base));
  CHECK(x2.q.epsilon == x.q.epsilon);
  CHECK(x2.q.d == x.q.d);
  CHECK(x2.q.g0 == x.q.g0);
  CHECK(x2.q.k0 == x.q.k0);

  ExderQuadruple q1 = ExderQuadruple::zero(2);
  q1.d.at(1, 0) = Rational(1);
  q1.g0[0] = Rational(1);
  const RBLieAlgebra base = testutil::fixture_rb("aff1", Rational(0), OperatorKind::zero);
  const FlagChain chain = build_flag_chain(base, {q1, ExderQuadruple::zero(3)});
  const auto [base2, steps2] = chain_from(chain_payload(chain));
  CHECK(base2.same_structure(base));
  REQUIRE(steps2.size() == 2);
  CHECK(steps2[0].d == q1.d);
  CHECK(steps2[1].epsilon == zero_vec(3));
}

TEST_CASE("rationals serialize canonically") {
  CHECK(to_json(Rational(-6, 4)) == json("-3/2"));
  CHECK(to_json(Rational(4, 2)) == json("2"));
  CHECK(rational_from(json("2/6")) == Rational(1, 3));
  CHECK_THROWS_AS(rational_from(json(1.5)), parse_error);
  CHECK_THROWS_AS(rational_from(json("1/0")), parse_error);
}

TEST_CASE("reports serialize with verdict and witnesses") {
  ConditionReport rep;
  rep.record("rota_baxter", {0, 1}, Vec{Rational(1)}, Vec{Rational(0)});
  const json p = report_payload(rep);
  CHECK(p["verdict"] == "fail");
  CHECK(p["failures"][0]["condition"] == "rota_baxter");
  CHECK(p["failures"][0]["indices"] == json::array({0, 1}));

  ConditionReport ok;
  CHECK(report_payload(ok)["verdict"] == "pass");
  CHECK(render_report_text(ok) == "pass\n");
  CHECK(render_report_text(rep).find("rota_baxter") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with parse errors") {
  const char* corpus[] = {
      "",                                                       // empty
      "not json",                                               // not JSON
      "[]",                                                     // wrong root
      R"({"kind":"lie","payload":{}})",                         // no version
      R"({"schema_version":"2","kind":"lie","payload":{}})",    // bad version
      R"({"schema_version":"1","kind":"zorp","payload":{}})",   // unknown kind
      R"({"schema_version":"1","kind":"lie"})",                 // no payload
      R"({"schema_version":"1","kind":"lie","payload":{},"x":1})", // stray key
  };
  for (const char* text : corpus) CHECK_THROWS_AS(parse_document(text), parse_error);

  // Structurally broken payloads.
  CHECK_THROWS_AS(lie_from(json::parse(R"({"dim":2,"bracket":[]})")), parse_error);
  CHECK_THROWS_AS(lie_from(json::parse(R"({"dim":-1,"bracket":[]})")), parse_error);
  CHECK_THROWS_AS(lie_from(json::parse(R"({"dim":1,"bracket":[[["0"]]],"labels":[]})")),
                  parse_error);
  CHECK_THROWS_AS(datum_from(json::parse(
                      R"({"base":{"lie":{"dim":0,"bracket":[]},"weight":"0","operator":[]},
                          "vdim":1,"tril":[],"trir":[],"f":[],"braces":[],"p1":[]})")),
                  parse_error); // missing p2
  CHECK_THROWS_AS(read_document("/nonexistent/file.json"), parse_error);
}

TEST_CASE("non-antisymmetric constants parse fine and fail check_lie instead") {
  const json payload = json::parse(
      R"({"dim":2,"bracket":[[["0","1"],["0","0"]],[["0","0"],["0","0"]]]})");
  const LieAlgebra L = lie_from(payload);
  const auto rep = check_lie(L);
  CHECK(!rep.passed());
  CHECK(rep.has("antisymmetry"));
}
