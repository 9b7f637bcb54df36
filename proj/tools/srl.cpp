// Command-line front end. Every command prints one JSON report on stdout.
// Exit codes: 0 = affirmative, 1 = negative verdict, 2 = bad input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srl/srl.hpp"

using namespace srl;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

Json elems(Subset s) { return s.elements(); }

Json subsets(std::vector<Subset> const& v) {
  Json out = Json::array();
  for (Subset s : v) out.push_back(elems(s));
  return out;
}

Json algebra_summary(Algebra const& A) {
  return {{"name", A.name()}, {"size", A.size()}};
}

Json verdicts(AxiomReport const& r) {
  Json out = Json::array();
  for (auto const& v : r.verdicts) {
    Json j{{"name", v.name}, {"pass", v.pass}};
    if (!v.pass) j["witness"] = v.witness;
    out.push_back(j);
  }
  return out;
}

Json flags(ClassFlags const& f) {
  return {{"integral", f.integral},
          {"square_increasing", f.square_increasing},
          {"idempotent", f.idempotent},
          {"distributive", f.distributive},
          {"brouwerian", f.brouwerian},
          {"dunn_monoid", f.dunn_monoid},
          {"de_morgan_monoid", f.de_morgan_monoid},
          {"sugihara_monoid", f.sugihara_monoid},
          {"heyting", f.heyting}};
}

Json poset_json(PointedPoset const& X) {
  Json covers = Json::array();
  for (Elem a = 0; a < X.size(); ++a) {
    for (Elem b = 0; b < X.size(); ++b) {
      if (X.order.covers(a, b)) covers.push_back({a, b});
    }
  }
  Json out{{"size", X.size()}, {"labels", Json::array()}, {"covers", covers}};
  for (Elem a = 0; a < X.size(); ++a) out["labels"].push_back(X.label(a));
  out["top"] = X.top ? Json(*X.top) : Json(nullptr);
  return out;
}

Mode parse_mode(std::string const& s) {
  if (s == "pointed") return Mode::pointed;
  if (s == "proper") return Mode::proper;
  throw BadParams("mode must be pointed or proper");
}

VarietySpec load_variety(std::vector<std::string> const& sources) {
  std::vector<Algebra> gens;
  for (auto const& s : sources) gens.push_back(load_source(s));
  return VarietySpec(std::move(gens));
}

/// Element indices ("0,2,3" or "0 2 3"), or an algebra source whose first
/// embedding into A gives the subalgebra.
Subset parse_sub(Algebra const& A, std::vector<std::string> const& tokens) {
  std::vector<std::string> parts;
  for (auto const& t : tokens) {
    std::string cur;
    for (char c : t) {
      if (c == ',') {
        if (!cur.empty()) parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
  }
  bool numeric = !parts.empty() && std::all_of(parts.begin(), parts.end(), [](auto const& p) {
    return std::all_of(p.begin(), p.end(), [](unsigned char c) { return std::isdigit(c); });
  });
  if (numeric) {
    Subset s;
    for (auto const& p : parts) {
      unsigned long v = std::stoul(p);
      if (v >= A.size()) throw BadParams("element " + p + " is out of range");
      s.insert(static_cast<Elem>(v));
    }
    return s;
  }
  if (tokens.size() != 1) throw BadParams("--sub takes element indices or one algebra");
  Algebra B = load_source(tokens[0]);
  auto e = embeddings(B, A);
  if (e.empty()) throw NotASubalgebra(B.name() + " does not embed into " + A.name());
  return e.front().image();
}

std::string error_type(Error const& e) {
  if (dynamic_cast<ParseError const*>(&e)) return "ParseError";
  if (dynamic_cast<MalformedTable const*>(&e)) return "MalformedTable";
  if (dynamic_cast<NotResiduated const*>(&e)) return "NotResiduated";
  if (dynamic_cast<UnknownName const*>(&e)) return "UnknownName";
  if (dynamic_cast<BadParams const*>(&e)) return "BadParams";
  if (dynamic_cast<WrongSignature const*>(&e)) return "WrongSignature";
  if (dynamic_cast<NotASubalgebra const*>(&e)) return "NotASubalgebra";
  if (dynamic_cast<NotAFilter const*>(&e)) return "NotAFilter";
  if (dynamic_cast<NotBrouwerian const*>(&e)) return "NotBrouwerian";
  if (dynamic_cast<NoTop const*>(&e)) return "NoTop";
  if (dynamic_cast<BoundExceeded const*>(&e)) return "BoundExceeded";
  if (dynamic_cast<VerificationFailure const*>(&e)) return "VerificationFailure";
  return "Error";
}

/// Indented JSON with arrays of scalars kept on one line, so table rows stay
/// readable.
void print(std::ostream& out, Json const& j, int indent = 0) {
  auto pad = [&](int n) { out << std::string(static_cast<std::size_t>(n), ' '); };
  auto flat = [](Json const& a) {
    return std::all_of(a.begin(), a.end(), [](Json const& x) { return x.is_primitive(); });
  };
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (auto const& [k, v] : j.items()) {
      pad(indent + 2);
      out << Json(k).dump() << ": ";
      print(out, v, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    out << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      pad(indent + 2);
      print(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    pad(indent);
    out << "]";
  } else if (j.is_array()) {
    out << "[";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << "]";
  } else {
    out << j.dump();
  }
}

struct Run {
  Json report;
  int code = kAffirmative;
};

Run cmd_check(std::string const& src) {
  Algebra A = load_source(src);
  AxiomReport laws = derived_laws(A);
  Json r{{"algebra", algebra_summary(A)},
         {"axioms", verdicts(validate(A))},
         {"derived_laws", verdicts(laws)},
         {"classes", flags(classify(A))}};
  r["verdict"] = laws.ok();
  return {r, laws.ok() ? kAffirmative : kNegative};
}

Run cmd_dual(std::string const& src, std::string const& mode_name, bool dot) {
  Algebra A = load_source(src);
  Mode mode = parse_mode(mode_name);
  DualSpace X = dual_space(A, mode);
  bool round_trip = true;
  try {
    canonical_iso(A, mode);
  } catch (VerificationFailure const&) {
    round_trip = false;
  }
  Json r{{"algebra", algebra_summary(A)},
         {"mode", mode_name},
         {"points", subsets(X.filters)},
         {"poset", poset_json(X.poset)},
         {"round_trip", round_trip}};
  if (dot) r["dot"] = export_dot(X.poset);
  r["verdict"] = round_trip;
  return {r, round_trip ? kAffirmative : kNegative};
}

Run cmd_depth(std::string const& src) {
  Algebra A = load_source(src);
  return {{{"algebra", algebra_summary(A)}, {"depth", depth(A)}}, kAffirmative};
}

Run cmd_filters(std::string const& src, bool prime, std::string const& mode_name) {
  Algebra A = load_source(src);
  Json r{{"algebra", algebra_summary(A)}};
  std::vector<Subset> fs =
      prime ? prime_deductive_filters(A, parse_mode(mode_name)) : all_deductive_filters(A);
  Json covers = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (!fs[i].proper_subset_of(fs[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < fs.size() && cover; ++k) {
        if (fs[i].proper_subset_of(fs[k]) && fs[k].proper_subset_of(fs[j])) cover = false;
      }
      if (cover) covers.push_back({i, j});
    }
  }
  r[prime ? "prime_filters" : "filters"] = subsets(fs);
  r["covers"] = covers;
  if (prime) r["mode"] = mode_name;
  return {r, kAffirmative};
}

Run cmd_reflect(std::string const& src, std::string const& out) {
  Algebra A = load_source(src);
  Reflection R = reflect(A);
  save_file(R.result, out);
  return {{{"algebra", algebra_summary(A)},
           {"reflection", algebra_summary(R.result)},
           {"output", out},
           {"fsi", is_fsi(R.result)}},
          kAffirmative};
}

Run cmd_epic(std::string const& src, std::vector<std::string> const& sub,
             std::vector<std::string> const& variety) {
  Algebra A = load_source(src);
  Subset b = parse_sub(A, sub);
  EpicVerdict v = is_epic_subalgebra(A, b, load_variety(variety));
  Json r{{"algebra", algebra_summary(A)}, {"sub", elems(b)}, {"epic", v.epic}};
  if (!v.epic) {
    r["witness"] = {{"target", algebra_summary(v.g->target)},
                    {"g", v.g->map},
                    {"h", v.h->map}};
  }
  return {r, v.epic ? kAffirmative : kNegative};
}

Run cmd_refute(std::string const& src, std::vector<std::string> const& sub) {
  Algebra A = load_source(src);
  Subset b = parse_sub(A, sub);
  EpiRefutation ref = refute_epic(A, b);
  EpiAnalysis const& an = ref.analysis;
  Json collisions = Json::array();
  for (auto const& [g1, g2] : an.collisions) collisions.push_back({elems(g1), elems(g2)});
  Json r{{"algebra", algebra_summary(A)},
         {"sub", elems(b)},
         {"collisions", collisions},
         {"f1", {{"filter", elems(an.f1)}, {"depth", an.depth_f1}}},
         {"f2", {{"filter", elems(an.f2)}, {"depth", an.depth_f2}}},
         {"case", an.kind == EpiCase::nested ? "nested" : "incomparable"},
         {"theta", an.theta.blocks()},
         {"a1", an.a1},
         {"a2", an.a2},
         {"rest", elems(an.rest)},
         {"fixed", elems(ref.fixed)},
         {"chosen", ref.chosen},
         {"ell", ref.separator.ell.map},
         {"certificate",
          {{"target", Json::parse(save_document(ref.certificate.target))},
           {"g", ref.certificate.g.map},
           {"h", ref.certificate.h.map},
           {"witness", ref.certificate.witness}}}};
  return {r, kAffirmative};
}

Run cmd_es(std::vector<std::string> const& variety) {
  EsVerdict v = decide_es(load_variety(variety));
  Json r{{"es", v.es}};
  if (!v.es) {
    r["witness"] = {{"member", Json::parse(save_document(*v.member))},
                    {"sub", elems(*v.sub)},
                    {"sub_size", v.sub->size()}};
  }
  return {r, v.es ? kAffirmative : kNegative};
}

Run cmd_gate(std::vector<std::string> const& variety) {
  VarietySpec spec = load_variety(variety);
  GateReport g = hypotheses_gate(spec);
  Json members = Json::array();
  for (auto const& m : g.members) {
    members.push_back({{"name", m.algebra.name()},
                       {"size", m.algebra.size()},
                       {"depth", m.depth},
                       {"negatively_generated", m.negatively_generated}});
  }
  return {{{"pass", g.pass}, {"depth", variety_depth(spec)}, {"members", members}},
          g.pass ? kAffirmative : kNegative};
}

Run cmd_enumerate(std::string const& cls_name, std::size_t max_size, bool dump) {
  ModelClass cls = parse_model_class(cls_name);
  auto models = enumerate_models(cls, max_size);
  Json counts = Json::object();
  for (std::size_t n = 1; n <= max_size; ++n) counts[std::to_string(n)] = 0;
  for (auto const& A : models) {
    auto& c = counts[std::to_string(A.size())];
    c = c.get<std::size_t>() + 1;
  }
  Json r{{"class", cls_name}, {"max_size", max_size}, {"counts", counts}, {"total", models.size()}};
  if (dump) {
    r["models"] = Json::array();
    for (auto const& A : models) r["models"].push_back(Json::parse(save_document(A)));
  }
  return {r, kAffirmative};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subidempotent residuated lattices: duality, reflections, epimorphisms"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  bool timings = false;
  app.add_option("--jobs", jobs, "worker threads for sweeps (0 = all cores)");
  app.add_flag("--timings", timings, "add wall-clock timings to the report");

  std::string src, mode = "pointed", out, cls;
  std::vector<std::string> sub, variety;
  bool dot = false, prime = false, dump = false;
  std::size_t max_size = 0;

  auto* check = app.add_subcommand("check", "validate, derived laws and classification");
  check->add_option("algebra", src, "document path or catalog:<name>")->required();

  auto* dual = app.add_subcommand("dual", "dual space and round-trip check");
  dual->add_option("algebra", src)->required();
  dual->add_option("--mode", mode, "pointed or proper");
  dual->add_flag("--dot", dot, "include a Graphviz Hasse diagram");

  auto* dep = app.add_subcommand("depth", "depth of the algebra");
  dep->add_option("algebra", src)->required();

  auto* fil = app.add_subcommand("filters", "deductive filters");
  fil->add_option("algebra", src)->required();
  fil->add_flag("--prime", prime, "only prime filters");
  fil->add_option("--mode", mode, "pointed or proper (with --prime)");

  auto* refl = app.add_subcommand("reflect", "write the reflection as a document");
  refl->add_option("algebra", src)->required();
  refl->add_option("-o,--output", out, "output document")->required();

  auto* epic = app.add_subcommand("epic", "is the subalgebra epic in the variety");
  epic->add_option("algebra", src)->required();
  epic->add_option("--sub", sub, "element indices or an algebra that embeds")->required();
  epic->add_option("--variety", variety, "generators of the variety")->required();

  auto* refute = app.add_subcommand("refute-epic", "certificate that a subalgebra is not epic");
  refute->add_option("algebra", src)->required();
  refute->add_option("--sub", sub)->required();

  auto* es = app.add_subcommand("es-decide", "does the variety have epimorphism surjectivity");
  es->add_option("--variety", variety)->required();

  auto* gate = app.add_subcommand("gate", "depth and negative generation of the FSI members");
  gate->add_option("--variety", variety)->required();

  auto* en = app.add_subcommand("enumerate", "count models up to isomorphism");
  en->add_option("--class", cls, "brouwerian, heyting, srl or sirl")->required();
  en->add_option("--max-size", max_size)->required();
  en->add_flag("--dump", dump, "include every model as a document");

  auto* cat = app.add_subcommand("catalog", "print a builtin algebra as a document");
  cat->add_option("name", src, "e.g. c4, crystal, sugihara(5)")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kBadInput;
  }

  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);

  auto t0 = std::chrono::steady_clock::now();
  Run run;
  try {
    set_max_jobs(jobs);
    if (*cat) {
      std::string name = src.rfind("catalog:", 0) == 0 ? src.substr(8) : src;
      std::cout << save_document(builtin_from_spec(name));
      return kAffirmative;
    }
    if (*check) run = cmd_check(src);
    else if (*dual) run = cmd_dual(src, mode, dot);
    else if (*dep) run = cmd_depth(src);
    else if (*fil) run = cmd_filters(src, prime, mode);
    else if (*refl) run = cmd_reflect(src, out);
    else if (*epic) run = cmd_epic(src, sub, variety);
    else if (*refute) run = cmd_refute(src, sub);
    else if (*es) run = cmd_es(variety);
    else if (*gate) run = cmd_gate(variety);
    else if (*en) run = cmd_enumerate(cls, max_size, dump);
  } catch (ValidationError const& e) {
    run.report = {{"error", {{"type", "ValidationError"}, {"message", e.what()}}},
                  {"axioms", verdicts(e.report)}};
    run.code = kBadInput;
  } catch (HypothesesNotMet const& e) {
    run.report = {{"error", {{"type", "HypothesesNotMet"},
                             {"message", e.what()},
                             {"hypothesis", e.hypothesis}}}};
    run.code = kBadInput;
  } catch (Error const& e) {
    run.report = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
    run.code = kBadInput;
  }

  Json report{{"command", echo}};
  for (auto& [k, v] : run.report.items()) report[k] = v;
  report["exit_code"] = run.code;
  if (timings) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    report["timings"] = {{"total_ms", ms}};
  }
  print(std::cout, report);
  std::cout << "\n";
  return run.code;
}
