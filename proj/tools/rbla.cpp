#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbla/classify.hpp"
#include "rbla/core.hpp"
#include "rbla/errors.hpp"
#include "rbla/extending.hpp"
#include "rbla/flag.hpp"
#include "rbla/io.hpp"

namespace {

using rbla::io::Document;
using rbla::io::json;

constexpr int exit_pass = 0;
constexpr int exit_algebraic = 1;
constexpr int exit_format = 2;

struct Options {
  bool exhaustive = false;
  bool human = false;
};

void print_report(const rbla::ConditionReport& rep, const Options& opt) {
  if (opt.human) {
    std::cout << rbla::io::render_report_text(rep);
  } else {
    Document doc{"report", rbla::io::report_payload(rep), false};
    std::cout << rbla::io::dump_document(doc);
  }
}

// Base-structure failures folded into a containing report, conditions
// prefixed so they are distinguishable from datum/exder conditions.
rbla::ConditionReport prefixed(const rbla::ConditionReport& rep, const std::string& prefix) {
  rbla::ConditionReport out(true);
  for (const auto& f : rep.failures())
    out.record(prefix + f.condition, f.indices, f.lhs, f.rhs);
  return out;
}

rbla::ConditionReport check_rb_lie_full(const rbla::RBLieAlgebra& R, bool exhaustive) {
  rbla::ConditionReport rep = rbla::check_lie(R.algebra(), exhaustive);
  if (rep.passed()) rep.merge(rbla::check_rb(R, exhaustive));
  return rep;
}

int cmd_check(const std::string& path, const Options& opt) {
  const Document doc = rbla::io::read_document(path);
  rbla::ConditionReport rep(opt.exhaustive);
  if (doc.kind == "lie") {
    rep = rbla::check_lie(rbla::io::lie_from(doc.payload), opt.exhaustive);
  } else if (doc.kind == "rb_lie") {
    rep = check_rb_lie_full(rbla::io::rb_from(doc.payload), opt.exhaustive);
  } else if (doc.kind == "datum") {
    const rbla::ExtendingDatum d = rbla::io::datum_from(doc.payload);
    const rbla::ConditionReport base_rep = check_rb_lie_full(d.base(), opt.exhaustive);
    rep = base_rep.passed() ? rbla::validate_datum(d, opt.exhaustive)
                            : prefixed(base_rep, "base_");
  } else if (doc.kind == "exder") {
    const rbla::ExtendedDerivation x = rbla::io::exder_from(doc.payload);
    const rbla::ConditionReport base_rep = check_rb_lie_full(x.base, opt.exhaustive);
    rep = base_rep.passed() ? rbla::check_extended_derivation(x, opt.exhaustive)
                            : prefixed(base_rep, "base_");
  } else {
    throw rbla::parse_error("kind '" + doc.kind + "' is not checkable");
  }
  print_report(rep, opt);
  return rep.passed() ? exit_pass : exit_algebraic;
}

int cmd_unify(const std::string& datum_path, const std::string& out_path,
              const Options& opt) {
  const Document doc = rbla::io::read_document(datum_path);
  if (doc.kind != "datum") throw rbla::parse_error("unify expects a datum document");
  const rbla::ExtendingDatum d = rbla::io::datum_from(doc.payload);
  const rbla::UnifiedProduct up = rbla::unified_product(d);
  const rbla::ConditionReport rep = rbla::check_unified_axioms(up, opt.exhaustive);

  Document out{"rb_lie", rbla::io::rb_payload(up.product), !rep.passed()};
  rbla::io::write_document(out_path, out);
  print_report(rep, opt);
  return rep.passed() ? exit_pass : exit_algebraic;
}

int cmd_decompose(const std::string& ambient_path, const std::vector<std::size_t>& sub,
                  const std::string& out_path, const Options& opt) {
  const Document doc = rbla::io::read_document(ambient_path);
  if (doc.kind != "rb_lie") throw rbla::parse_error("decompose expects an rb_lie document");
  const rbla::RBLieAlgebra ambient = rbla::io::rb_from(doc.payload);

  std::vector<bool> seen(ambient.dim(), false);
  for (std::size_t i : sub) {
    if (i >= ambient.dim()) throw rbla::parse_error("--sub index out of range");
    if (seen[i]) throw rbla::parse_error("--sub index repeated");
    seen[i] = true;
  }

  std::optional<rbla::DecompositionContext> ctx;
  try {
    ctx.emplace(rbla::DecompositionContext::coordinate(ambient, sub));
  } catch (const rbla::closure_error& e) {
    std::cerr << e.what() << "\n";
    return exit_algebraic;
  }

  const rbla::ExtendingDatum d = rbla::decompose(*ctx);

  // Round-trip validation: rebuilding the product from the datum must
  // reproduce the datum under the canonical split, and (g,x) -> g+x must
  // be a morphism onto the ambient algebra.
  const rbla::UnifiedProduct up = rbla::unified_product(d);
  std::vector<std::size_t> first(d.base().dim());
  for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
  const auto again =
      rbla::decompose(rbla::DecompositionContext::coordinate(up.product, first));
  const bool roundtrip =
      again == d &&
      rbla::check_rb_morphism(up.product, ambient, ctx->basis_matrix()).passed();

  rbla::io::write_document(out_path, {"datum", rbla::io::datum_payload(d), false});
  if (!roundtrip) {
    std::cerr << "round-trip validation failed\n";
    return exit_algebraic;
  }
  if (opt.human) std::cout << "decomposed: base dim " << d.base().dim() << ", vdim "
                           << d.vdim() << "\n";
  return exit_pass;
}

int cmd_exder_equiv(const std::string& a_path, const std::string& b_path,
                    const Options& opt) {
  const Document da = rbla::io::read_document(a_path);
  const Document db = rbla::io::read_document(b_path);
  if (da.kind != "exder" || db.kind != "exder")
    throw rbla::parse_error("equiv expects two exder documents");
  const rbla::ExtendedDerivation x = rbla::io::exder_from(da.payload);
  const rbla::ExtendedDerivation y = rbla::io::exder_from(db.payload);
  if (!x.base.same_structure(y.base)) {
    std::cerr << "exder equiv: the two quadruples have different bases\n";
    return exit_algebraic;
  }
  const auto w = rbla::decide_exder_equiv(x, y);
  if (opt.human) {
    if (w) {
      std::cout << "equivalent: g1 = [";
      for (std::size_t i = 0; i < w->g1.size(); ++i)
        std::cout << (i ? ", " : "") << w->g1[i].str();
      std::cout << "], k1 = " << w->k1.str() << "\n";
    } else {
      std::cout << "not-equivalent\n";
    }
  } else {
    json out = json::object();
    out["equivalent"] = w.has_value();
    if (w) {
      out["g1"] = rbla::io::to_json(w->g1);
      out["k1"] = rbla::io::to_json(w->k1);
    }
    std::cout << out.dump() << "\n";
  }
  return exit_pass;
}

int cmd_exder_partition(const std::vector<std::string>& paths, const Options& opt) {
  std::vector<rbla::ExtendedDerivation> xs;
  for (const std::string& p : paths) {
    const Document doc = rbla::io::read_document(p);
    if (doc.kind != "exder") throw rbla::parse_error("partition expects exder documents");
    xs.push_back(rbla::io::exder_from(doc.payload));
  }
  std::vector<std::vector<std::size_t>> classes;
  try {
    classes = rbla::partition_exders(xs);
  } catch (const rbla::invalid_input_error& e) {
    std::cerr << e.what() << "\n";
    return exit_algebraic;
  }
  if (opt.human) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::cout << "class " << c << ":";
      for (std::size_t i : classes[c]) std::cout << " " << i;
      std::cout << "\n";
    }
  } else {
    json out = json::object();
    out["classes"] = classes;
    std::cout << out.dump() << "\n";
  }
  return exit_pass;
}

int cmd_exder_extend(const std::string& path, const std::string& out_path,
                     const Options& opt) {
  const Document doc = rbla::io::read_document(path);
  if (doc.kind == "chain") {
    // Multi-step form: validate and extend through the whole chain.
    const auto [base, steps] = rbla::io::chain_from(doc.payload);
    try {
      const rbla::FlagChain chain = rbla::build_flag_chain(base, steps);
      rbla::io::write_document(
          out_path, {"rb_lie", rbla::io::rb_payload(chain.algebras.back()), false});
      return exit_pass;
    } catch (const rbla::invalid_input_error& e) {
      std::cerr << e.what() << "\n";
      return exit_algebraic;
    }
  }
  if (doc.kind != "exder")
    throw rbla::parse_error("extend expects an exder or chain document");
  const rbla::ExtendedDerivation x = rbla::io::exder_from(doc.payload);
  const rbla::ConditionReport base_rep = check_rb_lie_full(x.base, opt.exhaustive);
  const rbla::ConditionReport rep = base_rep.passed()
                                        ? rbla::check_extended_derivation(x, opt.exhaustive)
                                        : prefixed(base_rep, "base_");
  if (!rep.passed()) {
    print_report(rep, opt);
    return exit_algebraic;
  }
  const rbla::RBLieAlgebra extended = rbla::flag_extend(x);
  rbla::io::write_document(out_path, {"rb_lie", rbla::io::rb_payload(extended), false});
  return exit_pass;
}

int cmd_exder_check(const std::string& path, const Options& opt) {
  const Document doc = rbla::io::read_document(path);
  if (doc.kind != "exder") throw rbla::parse_error("exder check expects an exder document");
  const rbla::ExtendedDerivation x = rbla::io::exder_from(doc.payload);
  const rbla::ConditionReport base_rep = check_rb_lie_full(x.base, opt.exhaustive);
  const rbla::ConditionReport rep = base_rep.passed()
                                        ? rbla::check_extended_derivation(x, opt.exhaustive)
                                        : prefixed(base_rep, "base_");
  print_report(rep, opt);
  return rep.passed() ? exit_pass : exit_algebraic;
}

rbla::RBLieAlgebra zero_rb(const std::string& fixture) {
  rbla::LieAlgebra L = rbla::fixture_lie(fixture);
  const std::size_t n = L.dim();
  return rbla::RBLieAlgebra(std::move(L), rbla::Rational(0), rbla::Matrix(n, n));
}

// aff(1) without labels, so files derived from datum files byte-match.
rbla::RBLieAlgebra aff1_plain() {
  rbla::Tensor3 t(2, 2, 2);
  t.at(1, 0, 1) = rbla::Rational(1);
  t.at(1, 1, 0) = rbla::Rational(-1);
  return rbla::RBLieAlgebra(rbla::LieAlgebra(2, std::move(t)), rbla::Rational(0),
                            rbla::Matrix(2, 2));
}

int cmd_transform(const std::string& datum_path, const std::string& witness_path,
                  const std::string& out_path) {
  const Document dd = rbla::io::read_document(datum_path);
  const Document dw = rbla::io::read_document(witness_path);
  if (dd.kind != "datum" || dw.kind != "witness")
    throw rbla::parse_error("transform expects a datum and a witness document");
  const rbla::ExtendingDatum d = rbla::io::datum_from(dd.payload);
  const rbla::EquivalenceWitness w = rbla::io::witness_from(dw.payload);
  try {
    const rbla::ExtendingDatum dp = rbla::transform_datum(d, w);
    rbla::io::write_document(out_path, {"datum", rbla::io::datum_payload(dp), false});
    return exit_pass;
  } catch (const rbla::witness_error& e) {
    std::cerr << e.what() << "\n";
    return exit_algebraic;
  } catch (const rbla::shape_error& e) {
    std::cerr << e.what() << "\n";
    return exit_algebraic;
  }
}

int cmd_demo(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto put = [&](const std::string& name, const Document& doc) {
    rbla::io::write_document((fs::path(dir) / name).string(), doc);
    std::cout << (fs::path(dir) / name).string() << "\n";
  };

  for (const char* name : {"abelian:2", "aff1", "heisenberg3", "sl2"}) {
    std::string file = std::string("rb_") + name + ".json";
    if (auto pos = file.find(':'); pos != std::string::npos) file.erase(pos, 1);
    put(file, {"rb_lie", rbla::io::rb_payload(zero_rb(name)), false});
  }

  // aff(1) with the diagonal operator P = diag(1, 0).
  {
    rbla::LieAlgebra L = rbla::fixture_lie("aff1");
    rbla::Matrix P(2, 2);
    P.at(0, 0) = rbla::Rational(1);
    put("rb_aff1_diag.json",
        {"rb_lie", rbla::io::rb_payload(rbla::RBLieAlgebra(L, rbla::Rational(0), P)),
         false});
  }

  const rbla::RBLieAlgebra base = aff1_plain();
  put("datum_trivial.json",
      {"datum", rbla::io::datum_payload(rbla::ExtendingDatum::trivial(base, 1)), false});

  // One-dimensional extension of aff(1): x |> e1 = e2, p1(x) = e1,
  // shipped as the datum, its product, and a two-step chain.
  {
    rbla::ExderQuadruple q = rbla::ExderQuadruple::zero(2);
    q.d.at(1, 0) = rbla::Rational(1);
    q.g0[0] = rbla::Rational(1);
    const rbla::ExtendingDatum datum = rbla::datum_from_exder({base, q});
    put("datum_line.json", {"datum", rbla::io::datum_payload(datum), false});
    put("rb_line3.json",
        {"rb_lie", rbla::io::rb_payload(rbla::unified_product(datum).product), false});
    const rbla::FlagChain chain =
        rbla::build_flag_chain(base, {q, rbla::ExderQuadruple::zero(3)});
    put("chain_line.json", {"chain", rbla::io::chain_payload(chain), false});
  }

  // Quadruples over aff(1): zero, the inner derivation by e1, and a
  // shifted operator part; the first two are equivalent, the third not.
  {
    const rbla::ExderQuadruple zero = rbla::ExderQuadruple::zero(2);
    put("exder_zero.json", {"exder", rbla::io::exder_payload({base, zero}), false});

    rbla::ExderQuadruple ad = rbla::ExderQuadruple::zero(2);
    ad.d.at(1, 1) = rbla::Rational(1); // ad_{e1}: e1 -> 0, e2 -> e2
    put("exder_ad.json", {"exder", rbla::io::exder_payload({base, ad}), false});

    rbla::ExderQuadruple shift = rbla::ExderQuadruple::zero(2);
    shift.g0[1] = rbla::Rational(1);
    put("exder_shift.json", {"exder", rbla::io::exder_payload({base, shift}), false});
  }

  return exit_pass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for Rota-Baxter Lie algebra extending structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--exhaustive", opt.exhaustive, "report every failing basis tuple");
  app.add_flag("--human", opt.human, "human-readable output instead of JSON");

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a lie/rb_lie/datum/exder document");
  check->fallthrough();
  check->add_option("FILE", check_path)->required();

  std::string unify_in, unify_out;
  auto* unify = app.add_subcommand("unify", "build the unified product of a datum");
  unify->fallthrough();
  unify->add_option("DATUM", unify_in)->required();
  unify->add_option("-o,--out", unify_out, "output rb_lie file")->required();

  std::string dec_in, dec_out;
  std::vector<std::size_t> dec_sub;
  auto* dec = app.add_subcommand("decompose", "split an algebra along a subalgebra");
  dec->fallthrough();
  dec->add_option("AMBIENT", dec_in)->required();
  dec->add_option("--sub", dec_sub, "ambient basis indices spanning the subalgebra")
      ->required()
      ->delimiter(',');
  dec->add_option("-o,--out", dec_out, "output datum file")->required();

  auto* exder = app.add_subcommand("exder", "extended-derivation commands");
  exder->fallthrough();
  exder->require_subcommand(1);
  std::string ex_check_path;
  auto* ex_check = exder->add_subcommand("check", "validate an exder document");
  ex_check->fallthrough();
  ex_check->add_option("FILE", ex_check_path)->required();
  std::string eq_a, eq_b;
  auto* ex_equiv = exder->add_subcommand("equiv", "decide equivalence of two quadruples");
  ex_equiv->fallthrough();
  ex_equiv->add_option("A", eq_a)->required();
  ex_equiv->add_option("B", eq_b)->required();
  std::vector<std::string> part_paths;
  auto* ex_part = exder->add_subcommand("partition", "partition quadruples into classes");
  ex_part->fallthrough();
  ex_part->add_option("FILES", part_paths)->required()->expected(-1);
  std::string ext_in, ext_out;
  auto* ex_ext = exder->add_subcommand("extend", "build the flag extension");
  ex_ext->fallthrough();
  ex_ext->add_option("FILE", ext_in)->required();
  ex_ext->add_option("-o,--out", ext_out, "output rb_lie file")->required();

  std::string tr_datum, tr_witness, tr_out;
  auto* tr = app.add_subcommand("transform", "transport a datum along an (r, v) witness");
  tr->fallthrough();
  tr->add_option("DATUM", tr_datum)->required();
  tr->add_option("WITNESS", tr_witness)->required();
  tr->add_option("-o,--out", tr_out, "output datum file")->required();

  std::string demo_dir;
  auto* demo = app.add_subcommand("demo", "write the built-in fixture documents");
  demo->fallthrough();
  demo->add_option("-o,--out", demo_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_format;
  }

  try {
    if (*check) return cmd_check(check_path, opt);
    if (*unify) return cmd_unify(unify_in, unify_out, opt);
    if (*dec) return cmd_decompose(dec_in, dec_sub, dec_out, opt);
    if (*tr) return cmd_transform(tr_datum, tr_witness, tr_out);
    if (*exder) {
      if (*ex_check) return cmd_exder_check(ex_check_path, opt);
      if (*ex_equiv) return cmd_exder_equiv(eq_a, eq_b, opt);
      if (*ex_part) return cmd_exder_partition(part_paths, opt);
      if (*ex_ext) return cmd_exder_extend(ext_in, ext_out, opt);
    }
    if (*demo) return cmd_demo(demo_dir);
  } catch (const rbla::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_format;
  } catch (const rbla::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_algebraic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_format;
  }
  return exit_format;
}
