#include "levikit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "levikit/io.hpp"
#include "levikit/levi.hpp"

namespace levikit::cli {

using io::Json;

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  std::string algebra;
  std::string grading, comodule, module, automorphism;
  std::string hopf;
  std::string rep;
  std::string space_structure;
  std::string decomposition;
  std::string cochain;
  std::string table;
  bool dual = false;
};

size_t max_dim() {
  const char* env = std::getenv("LEVIKIT_MAX_DIM");
  if (!env || !*env) return 64;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::Parse, "LEVIKIT_MAX_DIM must be a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

void cap(size_t dim, const std::string& what) {
  const size_t limit = max_dim();
  if (dim > limit)
    throw Error(ErrorKind::DimensionCap,
                what + " has dimension " + std::to_string(dim) + " above LEVIKIT_MAX_DIM = " + std::to_string(limit),
                {static_cast<long>(dim), static_cast<long>(limit)});
}

LieAlgebra load_algebra(const std::string& path) {
  io::Json j = io::read_json(path);
  // cap before building the tensor so oversized inputs are refused cheaply
  if (j.is_object() && j.contains("dim") && j["dim"].is_number_unsigned()) cap(j["dim"].get<size_t>(), "the algebra");
  LieAlgebra l = io::algebra_from_json(j);
  cap(l.dim(), "the algebra");
  return l;
}

std::shared_ptr<const HopfAlgebra> load_hopf(const std::string& path) {
  auto h = std::make_shared<const HopfAlgebra>(io::hopf_from_json(io::read_json(path)));
  cap(h->dim(), "the Hopf algebra");
  return h;
}

std::shared_ptr<const HopfAlgebra> require_hopf(const Options& o, const char* flag) {
  if (o.hopf.empty()) throw Error(ErrorKind::Parse, std::string(flag) + " needs --hopf FILE");
  return load_hopf(o.hopf);
}

// Reads a structure file of the kind selected by the structure flag in use.
Structure load_structure_file(const Options& o, const std::string& path) {
  io::Json j = io::read_json(path);
  if (!o.grading.empty()) return io::grading_from_json(j);
  if (!o.comodule.empty()) return io::comodule_from_json(j, require_hopf(o, "--comodule"));
  if (!o.module.empty()) return io::module_from_json(j, require_hopf(o, "--module"));
  if (!o.automorphism.empty()) return io::automorphism_from_json(j);
  return {};
}

Structure load_structure(const Options& o) {
  for (const std::string* p : {&o.grading, &o.comodule, &o.module, &o.automorphism})
    if (!p->empty()) return load_structure_file(o, *p);
  return {};
}

Structure load_validated_structure(const Options& o, const LieAlgebra& l) {
  Structure s = load_structure(o);
  validate_structure(l, s);
  return s;
}

Json subspace_entry(const Subspace& s) { return io::subspace_to_json(s); }

Json report_json(const std::vector<Check>& report) {
  Json out = Json::array();
  for (const auto& c : report) out.push_back(Json{{"check", c.name}, {"pass", c.pass}});
  return out;
}

HLModule load_module(const Options& o, const LieAlgebra& l, const Structure& s) {
  if (o.rep.empty()) {
    if (!o.space_structure.empty()) throw Error(ErrorKind::Parse, "--space-structure needs --rep");
    return adjoint_module(l, s);
  }
  auto psi = io::representation_from_json(io::read_json(o.rep), l.dim());
  const size_t d = psi.empty() ? 0 : psi.front().rows();
  cap(d, "the module");
  Structure space;
  if (has_structure(s)) {
    if (o.space_structure.empty())
      throw Error(ErrorKind::Parse, "a structured algebra acting on --rep needs --space-structure for the module");
    space = load_structure_file(o, o.space_structure);
  }
  return HLModule{l, s, d, std::move(psi), space};
}

// ---- commands ----

Json cmd_validate(const Options& o) {
  Json out;
  out["command"] = "validate";
  Json checked = Json::array();
  std::shared_ptr<const HopfAlgebra> hopf;
  if (!o.hopf.empty()) {
    hopf = load_hopf(o.hopf);
    checked.push_back("hopf");
    out["hopf_dim"] = hopf->dim();
  }
  if (o.algebra.empty()) {
    if (!hopf) throw Error(ErrorKind::Parse, "validate needs an algebra file or --hopf FILE");
    out["checked"] = checked;
    out["valid"] = true;
    return out;
  }
  LieAlgebra l = load_algebra(o.algebra);
  checked.push_back("algebra");
  out["dim"] = l.dim();
  Structure s = load_validated_structure(o, l);
  if (has_structure(s)) checked.push_back(structure_kind(s));
  out["semisimple"] = killing_nondegenerate(l);
  if (!o.rep.empty()) {
    bool symmetric = validate_hlmodule(load_module(o, l, s));
    checked.push_back("module");
    out["symmetric"] = symmetric;
  }
  bool valid = true;
  if (!o.decomposition.empty()) {
    auto d = io::decomposition_from_json(io::read_json(o.decomposition), l.dim());
    auto report = verify_decomposition(l, s, d);
    checked.push_back("decomposition");
    out["report"] = report_json(report);
    for (const auto& c : report) valid = valid && c.pass;
  }
  out["checked"] = checked;
  out["valid"] = valid;
  return out;
}

Json cmd_radical(const Options& o, bool nil) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_validated_structure(o, l);
  Subspace w = nil ? nilradical(l) : solvable_radical(l);
  Json out;
  out["command"] = nil ? "nilradical" : "radical";
  out["dim"] = w.dim();
  out[nil ? "N" : "R"] = subspace_entry(w);
  if (has_structure(s)) {
    StabilityReport r = radical_stability_report(l, s);
    out["stability"] = Json{{"R_invariant", r.r_invariant}, {"N_invariant", r.n_invariant}, {"theorem_applies", r.theorem_applies}};
  }
  return out;
}

Json cmd_levi(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_structure(o);
  LeviPair p = levi_decompose(l, s);
  Json out;
  out["command"] = "levi";
  out["dim_B"] = p.b.dim();
  out["dim_R"] = p.r.dim();
  out["B"] = subspace_entry(p.b);
  out["R"] = subspace_entry(p.r);
  return out;
}

Json cmd_decompose(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_structure(o);
  LeviDecomposition d = full_decomposition(l, s);
  for (const auto& c : d.report)
    if (!c.pass) throw Error(ErrorKind::InternalInconsistency, "decomposition fails its own check '" + c.name + "'");
  return io::decomposition_to_json(d);
}

Json cmd_split(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_structure(o);
  auto comps = semisimple_split(l, s);
  Json out;
  out["command"] = "split";
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(subspace_entry(c));
  out["count"] = comps.size();
  out["components"] = arr;
  return out;
}

Json cmd_weyl(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_validated_structure(o, l);
  HLModule m = load_module(o, l, s);
  auto parts = weyl_decompose(m);
  Json out;
  out["command"] = "weyl";
  out["count"] = parts.size();
  Json arr = Json::array();
  for (const auto& p : parts) arr.push_back(subspace_entry(p));
  out["components"] = arr;
  return out;
}

Json cmd_integral(const Options& o) {
  if (o.hopf.empty()) throw Error(ErrorKind::Parse, "integral needs a Hopf file");
  auto h = load_hopf(o.hopf);
  HopfAlgebra target = o.dual ? dual_hopf(*h) : *h;
  Integral t = find_normalized_integral(target);
  Json out;
  out["command"] = "integral";
  out["dual"] = o.dual;
  out["integral"] = io::vector_to_json(t.t);
  out["normalized"] = t.normalized;
  out["ad_invariant"] = t.ad_invariant;
  return out;
}

Json cmd_obstruction(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  if (o.automorphism.empty()) throw Error(ErrorKind::Parse, "obstruction needs --automorphism FILE");
  CyclicAction phi = io::automorphism_from_json(io::read_json(o.automorphism));
  ObstructionResult r = automorphism_levi_obstruction(l, phi);
  Json out;
  out["command"] = "obstruction";
  out["certificate"] = r.certificate;
  out["verdict"] = r.certificate ? "no phi-invariant Levi subalgebra" : "no obstruction found";
  out["image_in_R"] = r.radical.contains(r.image);
  out["fixed_in_R"] = r.radical.contains(r.fixed);
  out["dim_image"] = r.image.dim();
  out["dim_fixed"] = r.fixed.dim();
  out["dim_R"] = r.radical.dim();
  out["image"] = subspace_entry(r.image);
  out["fixed"] = subspace_entry(r.fixed);
  out["R"] = subspace_entry(r.radical);
  return out;
}

Json cmd_cohomology_solve(const Options& o) {
  LieAlgebra l = load_algebra(o.algebra);
  Structure s = load_validated_structure(o, l);
  HLModule m = load_module(o, l, s);
  Cochain phi = io::cochain_from_json(io::read_json(o.cochain));
  if (phi.degree() != 2 || phi.algebra_dim() != l.dim() || phi.space_dim() != m.space_dim)
    throw Error(ErrorKind::DimensionMismatch, "the cochain must be a 2-cochain from the algebra into the module");
  Matrix omega;
  const bool colinear = has_structure(s);
  if (colinear)
    omega = solve_coboundary_colinear(m, phi, AveragingRoute::for_structure(m.space_structure));
  else
    omega = solve_coboundary(l, m.psi, phi);
  Json out;
  out["command"] = "cohomology solve";
  out["colinear"] = colinear;
  out["omega"] = io::matrix_to_json(omega);
  return out;
}

Json cmd_hopf_group(const Options& o) {
  GroupBackend g = io::group_from_json(io::read_json(o.table));
  if (!g.is_finite()) throw Error(ErrorKind::InfiniteGroup, "group algebras are built for finite groups only");
  cap(g.order(), "the group algebra");
  return io::hopf_to_json(*group_algebra(g).hopf);
}

Json cmd_hopf_dual(const Options& o) { return io::hopf_to_json(dual_hopf(*load_hopf(o.hopf))); }

// ---- text rendering ----

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
  return s + "]";
}

bool flat(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

void render(const Json& j, const std::string& pad, std::ostream& out);

void render_value(const std::string& key, const Json& v, const std::string& pad, std::ostream& out) {
  if (is_scalar(v)) {
    out << pad << key << ": " << scalar(v) << "\n";
  } else if (flat(v)) {
    out << pad << key << ": " << inline_array(v) << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), flat)) {
    out << pad << key << " (" << v.size() << " rows):\n";
    for (const auto& row : v) out << pad << "  " << inline_array(row) << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    size_t i = 0;
    for (const auto& item : v) {
      if (item.is_object() && item.contains("check") && item.contains("pass") && item.size() == 2)
        out << pad << "  [" << (item["pass"].get<bool>() ? "pass" : "FAIL") << "] " << scalar(item["check"]) << "\n";
      else
        render_value(std::to_string(i), item, pad + "  ", out);
      ++i;
    }
  } else {
    out << pad << key << ":\n";
    render(v, pad + "  ", out);
  }
}

void render(const Json& j, const std::string& pad, std::ostream& out) {
  for (const auto& [key, value] : j.items()) render_value(key, value, pad, out);
}

std::string to_text(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

void emit(const Options& o, const Json& result, std::ostream& out) {
  std::string text = o.format == "structured" ? io::dump(result) : to_text(result);
  if (o.output.empty())
    out << text;
  else
    io::write_text(o.output, text);
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
      return 3;
    case ErrorKind::InternalInconsistency:
      return 4;
    default:
      return is_hypothesis_failure(kind) ? 2 : 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Levi decompositions of Lie algebras with gradings and Hopf (co)actions", "levikit"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or structured (JSON)")->check(CLI::IsMember({"text", "structured"}));
    c->add_option("--output", o.output, "write the report to this file instead of stdout");
  };
  auto structured = [&](CLI::App* c) {
    auto* g = c->add_option("--grading", o.grading, "grading file");
    auto* co = c->add_option("--comodule", o.comodule, "coaction file (needs --hopf)");
    auto* m = c->add_option("--module", o.module, "action file (needs --hopf)");
    auto* a = c->add_option("--automorphism", o.automorphism, "automorphism file");
    g->excludes(co, m, a);
    co->excludes(m, a);
    m->excludes(a);
    c->add_option("--hopf", o.hopf, "Hopf algebra file");
  };
  auto with_algebra = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("algebra", o.algebra, "algebra file");
    if (required) opt->required();
  };
  auto with_module = [&](CLI::App* c) {
    c->add_option("--rep", o.rep, "representation file (default: the adjoint module)");
    c->add_option("--space-structure", o.space_structure, "structure on the module, same kind as the algebra's");
  };

  std::function<Json()> action;
  auto bind = [&](CLI::App* c, std::function<Json()> f) { c->callback([&action, f] { action = f; }); };

  auto* validate = app.add_subcommand("validate", "check algebra, structure, Hopf axioms and optionally a decomposition");
  with_algebra(validate, false);
  structured(validate);
  with_module(validate);
  common(validate);
  validate->add_option("--decomposition", o.decomposition, "decomposition file to re-verify");
  bind(validate, [&] { return cmd_validate(o); });

  auto* radical = app.add_subcommand("radical", "solvable radical");
  with_algebra(radical);
  structured(radical);
  common(radical);
  bind(radical, [&] { return cmd_radical(o, false); });

  auto* nil = app.add_subcommand("nilradical", "nilpotent radical");
  with_algebra(nil);
  structured(nil);
  common(nil);
  bind(nil, [&] { return cmd_radical(o, true); });

  auto* levi = app.add_subcommand("levi", "invariant Levi subalgebra");
  with_algebra(levi);
  structured(levi);
  common(levi);
  bind(levi, [&] { return cmd_levi(o); });

  auto* decompose = app.add_subcommand("decompose", "L = B + S + N with H-simple components of B");
  with_algebra(decompose);
  structured(decompose);
  common(decompose);
  bind(decompose, [&] { return cmd_decompose(o); });

  auto* split = app.add_subcommand("split", "H-simple components of a semisimple algebra");
  with_algebra(split);
  structured(split);
  common(split);
  bind(split, [&] { return cmd_split(o); });

  auto* weyl = app.add_subcommand("weyl", "irreducible invariant submodules of an (H,L)-module");
  with_algebra(weyl);
  structured(weyl);
  with_module(weyl);
  common(weyl);
  bind(weyl, [&] { return cmd_weyl(o); });

  auto* integral = app.add_subcommand("integral", "normalized integral of a Hopf algebra");
  integral->add_option("hopf", o.hopf, "Hopf algebra file")->required();
  integral->add_flag("--dual", o.dual, "use the dual Hopf algebra");
  common(integral);
  bind(integral, [&] { return cmd_integral(o); });

  auto* obstruction = app.add_subcommand("obstruction", "certificate that no phi-invariant Levi subalgebra exists");
  with_algebra(obstruction);
  common(obstruction);
  obstruction->add_option("--automorphism", o.automorphism, "automorphism file")->required();
  bind(obstruction, [&] { return cmd_obstruction(o); });

  auto* cohomology = app.add_subcommand("cohomology", "cochain utilities");
  cohomology->require_subcommand(1);
  auto* solve = cohomology->add_subcommand("solve", "find omega with d omega = phi (colinear when a structure is given)");
  with_algebra(solve);
  structured(solve);
  with_module(solve);
  common(solve);
  solve->add_option("--cochain", o.cochain, "2-cochain file")->required();
  bind(solve, [&] { return cmd_cohomology_solve(o); });

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra builders");
  hopf->require_subcommand(1);
  auto* build = hopf->add_subcommand("build", "build a Hopf algebra file");
  build->require_subcommand(1);
  auto* group = build->add_subcommand("group", "group algebra of a finite group");
  group->add_option("--table", o.table, "group file")->required();
  common(group);
  bind(group, [&] { return cmd_hopf_group(o); });
  auto* sweedler = build->add_subcommand("sweedler4", "Sweedler's four-dimensional Hopf algebra");
  common(sweedler);
  bind(sweedler, [] { return io::hopf_to_json(sweedler4()); });
  auto* dual = hopf->add_subcommand("dual", "dual Hopf algebra");
  dual->add_option("hopf", o.hopf, "Hopf algebra file")->required();
  common(dual);
  bind(dual, [&] { return cmd_hopf_dual(o); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'levikit --help' for usage\n";
    return 3;
  }

  try {
    if (!action) throw Error(ErrorKind::Parse, "no command given");
    Json result = action();
    emit(o, result, out);
    return result.value("valid", true) ? 0 : 1;
  } catch (const Error& e) {
    if (o.format == "structured") {
      Json j;
      j["error"] = std::string(to_string(e.kind()));
      j["message"] = e.message();
      j["indices"] = e.indices();
      j["exit_code"] = exit_code(e.kind());
      out << io::dump(j);
    }
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace levikit::cli
