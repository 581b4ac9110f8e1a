// Command-line surface: validate instances, run the duality suite, compute
// relation reports, and expand smallest subcoalgebras. All reports are a
// single JSON document with "schema": 1, rationals encoded as "p/q" strings,
// byte-identical across runs with the same inputs and seed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bialg/io.hpp"
#include "bialg/relations.hpp"
#include "bialg/sampler.hpp"

using namespace bialg;
using bialg::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write output file: " + out_path);
    out << text;
  }
}

json validation_failure_json(const std::string& where, const ValidationReport& rep) {
  json j;
  j["where"] = where;
  j["axiom"] = rep.axiom;
  j["basis_index"] = rep.basis_index;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  return j;
}

int run_validate(const std::string& path, const std::string& out_path) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = "validate";
  doc["instance"] = path;
  io::InstanceData data = io::load_instance(path);
  json checks = json::array();
  bool ok = true;

  ValidationReport vl = validate_coalgebra(data.l);
  checks.push_back({{"name", "L coalgebra axioms"}, {"ok", vl.ok}});
  if (!vl.ok && ok) {
    ok = false;
    doc["failure"] = validation_failure_json("L", vl);
  }
  ValidationReport vf = validate_coalgebra(data.f);
  checks.push_back({{"name", "F coalgebra axioms"}, {"ok", vf.ok}});
  if (!vf.ok && ok) {
    ok = false;
    doc["failure"] = validation_failure_json("F", vf);
  }
  bool shape_ok = (int)data.xt.rows() == data.f.dim && (int)data.xt.cols() == data.l.dim;
  checks.push_back({{"name", "x_t shape"}, {"ok", shape_ok}});
  if (!shape_ok && ok) {
    ok = false;
    json fail;
    fail["where"] = "x_t";
    fail["axiom"] = "x_t shape";
    fail["detail"] = "expected dim(E) x dim(L) = " + std::to_string(data.f.dim) + " x " +
                     std::to_string(data.l.dim) + ", got " + std::to_string(data.xt.rows()) +
                     " x " + std::to_string(data.xt.cols());
    doc["failure"] = fail;
  }
  doc["checks"] = checks;
  doc["ok"] = ok;
  emit(doc, out_path);
  return ok ? kExitOk : kExitBadInput;
}

int run_duality(const std::string& path, int max_left, int max_right, int trials,
                std::uint64_t seed, long long guard, const std::string& out_path) {
  io::InstanceData data = io::load_instance(path);
  RealizationMap r = make_realization(data.l, data.f, data.xt);

  json doc;
  doc["schema"] = 1;
  doc["command"] = "duality";
  doc["instance"] = path;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["max_left"] = max_left;
  doc["max_right"] = max_right;
  doc["guard"] = guard;

  Rng rng(seed);
  json results = json::array();
  bool all_equal = true;
  for (int t = 0; t < trials; ++t) {
    GradedElement w = random_element(rng, r.L.dim, max_left, 3);
    GradedElement v = random_element(rng, r.F.dim, max_right, 3);
    DualityReport rep = duality_check(r, w, v, guard);
    results.push_back({{"trial", t},
                       {"lhs", rep.lhs.str()},
                       {"rhs", rep.rhs.str()},
                       {"equal", rep.equal}});
    if (!rep.equal) {
      all_equal = false;
      json cx;
      cx["trial"] = t;
      cx["w"] = io::element_to_json(w, "T(L)");
      cx["v"] = io::element_to_json(v, "T(F)");
      cx["lhs"] = rep.lhs.str();
      cx["rhs"] = rep.rhs.str();
      doc["counterexample"] = cx;
      break;
    }
  }
  doc["results"] = results;
  doc["all_equal"] = all_equal;
  emit(doc, out_path);
  return all_equal ? kExitOk : kExitPropertyFailed;
}

int run_relations(const std::string& path, int order, const std::string& method_name,
                  int check_degree, long long guard, const std::string& out_path) {
  io::InstanceData data = io::load_instance(path);
  RealizationMap r = make_realization(data.l, data.f, data.xt);
  RelationMethod method;
  if (method_name == "minrep") method = RelationMethod::kMinimalRep;
  else if (method_name == "dualgen") method = RelationMethod::kDualGenerators;
  else if (method_name == "both") method = RelationMethod::kBoth;
  else throw ParseError("unknown method '" + method_name + "'");

  RelationReport rep = compute_relation_report(r, order, method, check_degree, guard);
  TensorShape shape(r.L.dim, order, guard);

  json doc;
  doc["schema"] = 1;
  doc["command"] = "relations";
  doc["instance"] = path;
  doc["order"] = order;
  doc["method"] = method_name;
  doc["guard"] = guard;
  doc["dim_T"] = (int)rep.dim_t;
  doc["dim_R"] = (int)rep.relations.dim();
  if (rep.ran_minrep) doc["dim_B_minrep"] = (int)rep.dim_b_minrep;
  if (rep.ran_dualgen) doc["dim_B_dualgen"] = (int)rep.dim_b_dualgen;
  doc["basis"] = io::subspace_to_json(shape, rep.relations, "T(L)");
  if (rep.ran_minrep && rep.ran_dualgen) {
    doc["constructions_agree"] = rep.constructions_agree;
    if (!rep.constructions_agree)
      doc["basis_dualgen"] = io::subspace_to_json(shape, rep.relations_dualgen, "T(L)");
  }
  if (rep.cross_checks_run) {
    doc["check_degree"] = rep.check_degree;
    doc["coideal_verified"] = rep.coideal.ok;
    doc["action_verified"] = rep.action.ok;
    if (!rep.coideal.ok) {
      json w;
      w["reason"] = rep.coideal.reason;
      if (rep.coideal.witness) w["witness"] = io::element_to_json(*rep.coideal.witness, "T(L)");
      doc["coideal_witness"] = w;
    }
    if (!rep.action.ok) {
      json w;
      w["reason"] = rep.action.reason;
      if (rep.action.witness) w["witness"] = io::element_to_json(*rep.action.witness, "T(L)");
      doc["action_witness"] = w;
    }
  }
  doc["ok"] = rep.all_ok();
  emit(doc, out_path);
  return rep.all_ok() ? kExitOk : kExitPropertyFailed;
}

int run_subcoalgebra(const std::string& path, const std::string& elem_path, long long guard,
                     const std::string& out_path) {
  io::InstanceData data = io::load_instance(path);
  RealizationMap r = make_realization(data.l, data.f, data.xt);
  io::ElementDoc edoc = io::element_from_json(io::load_json_file(elem_path), r.L.dim);
  if (edoc.space != "T(L)")
    throw ParseError("subcoalgebra expects an element of T(L), got " + edoc.space);
  if (edoc.elem.is_zero()) throw ParseError("subcoalgebra: the element is zero");

  int order = edoc.elem.top_degree();
  TensorShape shape(r.L.dim, order, guard);
  SubcoalgebraRelations rep = relations_in_subcoalgebra(r, edoc.elem, order, guard);
  bool delta_closed = is_subcoalgebra(r.L, order, rep.subcoalgebra, guard);

  json doc;
  doc["schema"] = 1;
  doc["command"] = "subcoalgebra";
  doc["instance"] = path;
  doc["element"] = io::element_to_json(edoc.elem, "T(L)");
  doc["order"] = order;
  doc["guard"] = guard;
  doc["basis"] = io::subspace_to_json(shape, rep.subcoalgebra, "T(L)");
  doc["delta_closed"] = delta_closed;
  doc["is_relation"] = rep.is_relation;
  bool ok = delta_closed;
  if (rep.is_relation) {
    json inter;
    inter["basis"] = io::subspace_to_json(shape, rep.intersection, "T(L)");
    inter["coideal_verified"] = rep.coideal.ok;
    if (!rep.coideal.ok) inter["coideal_reason"] = rep.coideal.reason;
    doc["intersection"] = inter;
    ok = ok && rep.coideal.ok;
  }
  doc["ok"] = ok;
  emit(doc, out_path);
  return ok ? kExitOk : kExitPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for operator bialgebras realized from "
               "finite-dimensional coalgebra data"};
  app.require_subcommand(1);

  std::string instance_path, out_path, elem_path;
  long long guard = kDefaultCoordinateGuard;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", instance_path, "instance JSON file")->required();
    cmd->add_option("--guard", guard, "coordinate guard limit (default 20000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "also write the report to this path");
  };

  CLI::App* validate = app.add_subcommand("validate", "check coalgebra axioms and x_t shape");
  add_common(validate);

  CLI::App* duality = app.add_subcommand(
      "duality", "seeded random trials of the transpose-duality identity");
  add_common(duality);
  int max_left = 3, max_right = 3, trials = 100;
  std::uint64_t seed = 0;
  duality->add_option("--max-left", max_left, "degree cap for the T(L) side")
      ->check(CLI::NonNegativeNumber);
  duality->add_option("--max-right", max_right, "degree cap for the T(F) side")
      ->check(CLI::NonNegativeNumber);
  duality->add_option("--trials", trials, "number of random (w, v) pairs")
      ->check(CLI::PositiveNumber);
  duality->add_option("--seed", seed, "PRNG seed");

  CLI::App* relations = app.add_subcommand(
      "relations", "compute the order-m relation coideal by one or both constructions");
  add_common(relations);
  int order = 1, check_degree = -1;
  std::string method = "both";
  relations->add_option("--order", order, "relation order m")
      ->required()
      ->check(CLI::NonNegativeNumber);
  relations->add_option("--method", method, "minrep | dualgen | both");
  relations->add_option("--check-degree", check_degree,
                        "action-oracle degree (default m + 2)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* subco = app.add_subcommand(
      "subcoalgebra", "smallest subcoalgebra of an element, with relation intersection");
  add_common(subco);
  subco->add_option("--element", elem_path, "element JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;  // help exits 0
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(instance_path, out_path);
    if (app.got_subcommand(duality))
      return run_duality(instance_path, max_left, max_right, trials, seed, guard, out_path);
    if (app.got_subcommand(relations))
      return run_relations(instance_path, order, method, check_degree, guard, out_path);
    if (app.got_subcommand(subco))
      return run_subcoalgebra(instance_path, elem_path, guard, out_path);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
