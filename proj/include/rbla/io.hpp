#ifndef RBLA_IO_HPP
#define RBLA_IO_HPP

#include <string>

#include <json.hpp>

#include "rbla/classify.hpp"
#include "rbla/core.hpp"
#include "rbla/extending.hpp"
#include "rbla/flag.hpp"
#include "rbla/report.hpp"

namespace rbla::io {

/// Documents use key-order-preserving JSON so that identical values
/// always serialize to identical bytes.
using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

/// Envelope of every document: {"schema_version": "1", "kind": ...,
/// "payload": {...}} with an optional "unverified": true between kind
/// and payload. Kinds: lie, rb_lie, datum, witness, exder, chain, report.
struct Document {
  std::string kind;
  json payload;
  bool unverified = false;
};

// ---- payload writers (fixed key order, rationals as "p/q" strings) ----

json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const Tensor3& t);

json lie_payload(const LieAlgebra& L);
json rb_payload(const RBLieAlgebra& R);
json datum_payload(const ExtendingDatum& d);
json witness_payload(const EquivalenceWitness& w);
json exder_payload(const ExtendedDerivation& x);
json chain_payload(const FlagChain& c);
json report_payload(const ConditionReport& rep);

/// Canonical bytes of a document (2-space indent, trailing newline).
std::string dump_document(const Document& doc);
void write_document(const std::string& path, const Document& doc);

// ---- strict readers: every structural defect throws parse_error ----

Rational rational_from(const json& j);
Vec vec_from(const json& j, std::size_t len);
Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols);
Tensor3 tensor_from(const json& j, std::size_t out, std::size_t left, std::size_t right);

LieAlgebra lie_from(const json& payload);
RBLieAlgebra rb_from(const json& payload);
ExtendingDatum datum_from(const json& payload);
EquivalenceWitness witness_from(const json& payload);
ExtendedDerivation exder_from(const json& payload);
std::pair<RBLieAlgebra, std::vector<ExderQuadruple>> chain_from(const json& payload);

Document parse_document(const std::string& text);
Document read_document(const std::string& path);

/// Human rendering of a report (used by the CLI's --human flag).
std::string render_report_text(const ConditionReport& rep);

} // namespace rbla::io

#endif
