#include "rbla/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rbla/errors.hpp"

namespace rbla::io {

namespace {

void expect(bool cond, const std::string& what) {
  if (!cond) throw parse_error(what);
}

const json& field(const json& j, const char* key) {
  expect(j.is_object(), "expected an object with key '" + std::string(key) + "'");
  const auto it = j.find(key);
  expect(it != j.end(), "missing key '" + std::string(key) + "'");
  return *it;
}

std::size_t count_from(const json& j, const char* what) {
  expect(j.is_number_unsigned(), std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
  expect(j.is_object(), std::string(where) + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : j.items())
    expect(ok.count(item.key()) != 0,
           std::string(where) + ": unknown key '" + item.key() + "'");
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

json to_json(const Tensor3& t) {
  json out = json::array();
  for (std::size_t k = 0; k < t.dim_out(); ++k) {
    json plane = json::array();
    for (std::size_t i = 0; i < t.dim_left(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.dim_right(); ++j) row.push_back(to_json(t.at(k, i, j)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

json lie_payload(const LieAlgebra& L) {
  json p = json::object();
  p["dim"] = L.dim();
  p["bracket"] = to_json(L.bracket());
  if (!L.labels().empty()) p["labels"] = L.labels();
  return p;
}

json rb_payload(const RBLieAlgebra& R) {
  json p = json::object();
  p["lie"] = lie_payload(R.algebra());
  p["weight"] = to_json(R.weight());
  p["operator"] = to_json(R.op());
  return p;
}

json datum_payload(const ExtendingDatum& d) {
  json p = json::object();
  p["base"] = rb_payload(d.base());
  p["vdim"] = d.vdim();
  p["tril"] = to_json(d.tril());
  p["trir"] = to_json(d.trir());
  p["f"] = to_json(d.f());
  p["braces"] = to_json(d.braces());
  p["p1"] = to_json(d.p1());
  p["p2"] = to_json(d.p2());
  return p;
}

json witness_payload(const EquivalenceWitness& w) {
  json p = json::object();
  p["r"] = to_json(w.r);
  p["v"] = to_json(w.v);
  return p;
}

json exder_payload(const ExtendedDerivation& x) {
  json p = json::object();
  p["base"] = rb_payload(x.base);
  p["epsilon"] = to_json(x.q.epsilon);
  p["d"] = to_json(x.q.d);
  p["g0"] = to_json(x.q.g0);
  p["k0"] = to_json(x.q.k0);
  return p;
}

json chain_payload(const FlagChain& c) {
  json p = json::object();
  p["base"] = rb_payload(c.algebras.front());
  json steps = json::array();
  for (const ExtendedDerivation& x : c.steps) {
    json s = json::object();
    s["epsilon"] = to_json(x.q.epsilon);
    s["d"] = to_json(x.q.d);
    s["g0"] = to_json(x.q.g0);
    s["k0"] = to_json(x.q.k0);
    steps.push_back(std::move(s));
  }
  p["steps"] = std::move(steps);
  return p;
}

json report_payload(const ConditionReport& rep) {
  json p = json::object();
  p["verdict"] = rep.passed() ? "pass" : "fail";
  json fails = json::array();
  for (const ConditionFailure& f : rep.failures()) {
    json e = json::object();
    e["condition"] = f.condition;
    e["indices"] = f.indices;
    e["lhs"] = to_json(f.lhs);
    e["rhs"] = to_json(f.rhs);
    fails.push_back(std::move(e));
  }
  p["failures"] = std::move(fails);
  return p;
}

std::string dump_document(const Document& doc) {
  json env = json::object();
  env["schema_version"] = schema_version;
  env["kind"] = doc.kind;
  if (doc.unverified) env["unverified"] = true;
  env["payload"] = doc.payload;
  return env.dump(2) + "\n";
}

void write_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open for writing: " + path);
  out << dump_document(doc);
  if (!out) throw error("write failed: " + path);
}

Rational rational_from(const json& j) {
  expect(j.is_string(), "rationals must be strings like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Vec vec_from(const json& j, std::size_t len) {
  expect(j.is_array() && j.size() == len,
         "expected a vector of length " + std::to_string(len));
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = rational_from(j[i]);
  return v;
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols) {
  expect(j.is_array() && j.size() == rows,
         "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vec row = vec_from(j[i], cols);
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = row[c];
  }
  return m;
}

Tensor3 tensor_from(const json& j, std::size_t out, std::size_t left, std::size_t right) {
  expect(j.is_array() && j.size() == out,
         "expected a tensor with " + std::to_string(out) + " planes");
  Tensor3 t(out, left, right);
  for (std::size_t k = 0; k < out; ++k) {
    const json& plane = j[k];
    expect(plane.is_array() && plane.size() == left, "tensor plane has wrong row count");
    for (std::size_t i = 0; i < left; ++i) {
      const Vec row = vec_from(plane[i], right);
      for (std::size_t c = 0; c < right; ++c) t.at(k, i, c) = row[c];
    }
  }
  return t;
}

LieAlgebra lie_from(const json& payload) {
  reject_unknown_keys(payload, {"dim", "bracket", "labels"}, "lie payload");
  const std::size_t dim = count_from(field(payload, "dim"), "dim");
  Tensor3 bracket = tensor_from(field(payload, "bracket"), dim, dim, dim);
  std::vector<std::string> labels;
  if (payload.contains("labels")) {
    const json& ls = payload["labels"];
    expect(ls.is_array() && ls.size() == dim, "labels must list one name per basis vector");
    for (const auto& l : ls) {
      expect(l.is_string(), "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    return LieAlgebra(unchecked, dim, std::move(bracket), std::move(labels));
  } catch (const shape_error& e) {
    throw parse_error(e.what());
  }
}

RBLieAlgebra rb_from(const json& payload) {
  reject_unknown_keys(payload, {"lie", "weight", "operator"}, "rb_lie payload");
  LieAlgebra L = lie_from(field(payload, "lie"));
  Rational weight = rational_from(field(payload, "weight"));
  Matrix op = matrix_from(field(payload, "operator"), L.dim(), L.dim());
  return RBLieAlgebra(std::move(L), std::move(weight), std::move(op));
}

ExtendingDatum datum_from(const json& payload) {
  reject_unknown_keys(payload, {"base", "vdim", "tril", "trir", "f", "braces", "p1", "p2"},
                      "datum payload");
  RBLieAlgebra base = rb_from(field(payload, "base"));
  const std::size_t n = base.dim();
  const std::size_t m = count_from(field(payload, "vdim"), "vdim");
  Tensor3 tril = tensor_from(field(payload, "tril"), m, m, n);
  Tensor3 trir = tensor_from(field(payload, "trir"), n, m, n);
  Tensor3 f = tensor_from(field(payload, "f"), n, m, m);
  Tensor3 braces = tensor_from(field(payload, "braces"), m, m, m);
  Matrix p1 = matrix_from(field(payload, "p1"), n, m);
  Matrix p2 = matrix_from(field(payload, "p2"), m, m);
  return ExtendingDatum(std::move(base), m, std::move(tril), std::move(trir), std::move(f),
                        std::move(braces), std::move(p1), std::move(p2));
}

EquivalenceWitness witness_from(const json& payload) {
  reject_unknown_keys(payload, {"r", "v"}, "witness payload");
  const json& rj = field(payload, "r");
  expect(rj.is_array(), "witness r must be a matrix");
  const std::size_t rows = rj.size();
  expect(rows > 0 && rj[0].is_array(), "witness r must be a non-empty matrix");
  const std::size_t cols = rj[0].size();
  Matrix r = matrix_from(rj, rows, cols);
  Matrix v = matrix_from(field(payload, "v"), cols, cols);
  return {std::move(r), std::move(v)};
}

ExtendedDerivation exder_from(const json& payload) {
  reject_unknown_keys(payload, {"base", "epsilon", "d", "g0", "k0"}, "exder payload");
  RBLieAlgebra base = rb_from(field(payload, "base"));
  const std::size_t n = base.dim();
  ExderQuadruple q;
  q.epsilon = vec_from(field(payload, "epsilon"), n);
  q.d = matrix_from(field(payload, "d"), n, n);
  q.g0 = vec_from(field(payload, "g0"), n);
  q.k0 = rational_from(field(payload, "k0"));
  return {std::move(base), std::move(q)};
}

std::pair<RBLieAlgebra, std::vector<ExderQuadruple>> chain_from(const json& payload) {
  reject_unknown_keys(payload, {"base", "steps"}, "chain payload");
  RBLieAlgebra base = rb_from(field(payload, "base"));
  const json& steps = field(payload, "steps");
  expect(steps.is_array(), "chain steps must be an array");
  std::vector<ExderQuadruple> qs;
  std::size_t dim = base.dim();
  for (const json& s : steps) {
    reject_unknown_keys(s, {"epsilon", "d", "g0", "k0"}, "chain step");
    ExderQuadruple q;
    q.epsilon = vec_from(field(s, "epsilon"), dim);
    q.d = matrix_from(field(s, "d"), dim, dim);
    q.g0 = vec_from(field(s, "g0"), dim);
    q.k0 = rational_from(field(s, "k0"));
    qs.push_back(std::move(q));
    ++dim; // the next step acts on the extended algebra
  }
  return {std::move(base), std::move(qs)};
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_keys(j, {"schema_version", "kind", "unverified", "payload"}, "document");
  const json& ver = field(j, "schema_version");
  expect(ver.is_string() && ver.get<std::string>() == schema_version,
         "unsupported schema_version");
  const json& kind = field(j, "kind");
  expect(kind.is_string(), "kind must be a string");
  static const std::set<std::string> kinds = {"lie",   "rb_lie", "datum", "witness",
                                              "exder", "chain",  "report"};
  const std::string k = kind.get<std::string>();
  expect(kinds.count(k) != 0, "unknown kind '" + k + "'");
  Document doc;
  doc.kind = k;
  doc.payload = field(j, "payload");
  if (j.contains("unverified")) {
    expect(j["unverified"].is_boolean(), "unverified must be a boolean");
    doc.unverified = j["unverified"].get<bool>();
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string render_report_text(const ConditionReport& rep) {
  std::ostringstream out;
  if (rep.passed()) {
    out << "pass\n";
    return out.str();
  }
  out << "fail (" << rep.failures().size() << " condition violation"
      << (rep.failures().size() == 1 ? "" : "s") << ")\n";
  for (const ConditionFailure& f : rep.failures()) {
    out << "  condition " << f.condition << " at basis tuple (";
    for (std::size_t i = 0; i < f.indices.size(); ++i)
      out << (i ? "," : "") << f.indices[i];
    out << "): lhs = [";
    for (std::size_t i = 0; i < f.lhs.size(); ++i)
      out << (i ? ", " : "") << f.lhs[i].str();
    out << "], rhs = [";
    for (std::size_t i = 0; i < f.rhs.size(); ++i)
      out << (i ? ", " : "") << f.rhs[i].str();
    out << "]\n";
  }
  return out.str();
}

} // namespace rbla::io
