// Command-line front end: rigidity, persistence and meta-formation checks,
// merge planning and verification, instance generation, DOT export.
#include <iostream>

#include "CLI11.hpp"
#include "formation/generate.hpp"
#include "formation/io.hpp"
#include "formation/report.hpp"

using namespace formation;

namespace {

struct Common {
  int dim = 0;
  std::uint64_t seed = 1;
  int trials = 3;
  std::string format = "json";
  std::size_t cap = 1'000'000;
  std::size_t vertexCap = 20;

  PersistenceOptions options() const {
    PersistenceOptions o;
    o.rigidity.seed = seed;
    o.rigidity.trials = trials;
    o.rigidity.sparsityVertexCap = vertexCap;
    o.terminalCap = cap;
    return o;
  }
  Dim d() const { return dimFromInt(dim); }
};

void addCommon(CLI::App* sub, Common& c, bool needsDim = true) {
  auto* dim = sub->add_option("--dim", c.dim, "dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
  if (needsDim) dim->required();
  sub->add_option("--seed", c.seed, "rank oracle seed")->capture_default_str();
  sub->add_option("--trials", c.trials, "rank oracle trials")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}))->capture_default_str();
  sub->add_option("--cap", c.cap, "terminal subgraph cap")->capture_default_str();
  sub->add_option("--vertex-cap", c.vertexCap, "(3,6) sparsity search vertex cap")->capture_default_str();
}

void emit(const Common& c, Json json, const std::string& text) {
  if (c.format == "text") {
    std::cout << text;
    if (json.contains("seed") && text.find("seed:") == std::string::npos) std::cout << "seed: " << json["seed"] << " trials: " << json["trials"] << "\n";
    return;
  }
  std::cout << json.dump(2) << "\n";
}

Json stamped(Json j, const Common& c) {
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  return j;
}

std::vector<Formation> readCollection(const std::vector<std::string>& files) {
  if (files.size() == 1) return parseCollection(readFile(files[0]));
  std::vector<Formation> out;
  for (const auto& f : files) out.push_back(parseFormation(readFile(f)));
  (void)MetaFormation(out, {});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity, persistence and merge planning for directed formations"};
  app.require_subcommand(1);
  Common c;
  std::string file, planFile, property = "rigid", kind, mergedOut;
  std::vector<std::string> files;
  bool structural = false;
  std::size_t n = 6;
  VertexId offset = 1;

  auto* rig = app.add_subcommand("check-rigidity", "decide rigidity of a formation's underlying graph");
  rig->add_option("file", file)->required();
  addCommon(rig, c);

  auto* per = app.add_subcommand("check-persistence", "decide persistence of a formation");
  per->add_option("file", file)->required();
  per->add_flag("--structural", structural, "exit status reflects structural persistence");
  addCommon(per, c);

  auto* meta = app.add_subcommand("check-meta", "analyze a meta-formation");
  meta->add_option("file", file)->required();
  meta->add_option("--property", property, "property deciding the exit status")
      ->check(CLI::IsMember({"rigid", "edge-optimal-rigid", "persistent", "edge-optimal-persistent"}))
      ->capture_default_str();
  addCommon(meta, c);

  auto* plan = app.add_subcommand("plan-merge", "plan a minimal persistent merge of a collection");
  plan->add_option("files", files, "one collection file, or one formation file per member")->required();
  plan->add_option("--merged-out", mergedOut, "write the merged meta-formation here");
  addCommon(plan, c);

  auto* verify = app.add_subcommand("verify-plan", "check a plan against its collection");
  verify->add_option("collection", file)->required();
  verify->add_option("plan", planFile)->required();
  addCommon(verify, c);

  auto* gen = app.add_subcommand("gen", "generate a formation");
  gen->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"min-rigid-2d", "min-persistent-2d", "min-persistent-3d", "tetra", "banana"}));
  gen->add_option("--n", n, "vertex count")->capture_default_str();
  gen->add_option("--offset", offset, "first vertex id")->capture_default_str();
  addCommon(gen, c, false);

  auto* exp = app.add_subcommand("export", "print a formation or meta-formation as DOT or JSON");
  exp->add_option("file", file)->required();
  addCommon(exp, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rig->parsed()) {
      Formation f = parseFormation(readFile(file));
      RigidityVerdict v = checkRigidity(underlying(f), c.d(), c.options().rigidity);
      emit(c, stamped(toJson(v), c), toText(v));
      return v.rigid ? 0 : 1;
    }
    if (per->parsed()) {
      Formation f = parseFormation(readFile(file));
      PersistenceVerdict v = isPersistent(f, c.d(), c.options());
      emit(c, toJson(v), toText(v));
      return (structural ? v.structurallyPersistent : v.persistent) ? 0 : 1;
    }
    if (meta->parsed()) {
      MetaFormation m = parseMetaFormation(readFile(file));
      MetaOptions mo;
      mo.rigidity = c.options().rigidity;
      MetaVerdict v = metaRigid(m, c.d(), mo);
      Compliance comp = localDofCompliance(m, c.d());
      Json j;
      j["meta"] = toJson(v);
      j["compliance"] = {{"compliant", comp.compliant}, {"offenders", comp.offenders}};
      bool membersPersistent = true;
      for (const Formation& f : m.metaVertices())
        membersPersistent = membersPersistent && isPersistent(f, c.d(), c.options()).persistent;
      std::string text = toText(v) + "locally DOF-compliant: " + (comp.compliant ? "yes" : "no") + "\n";
      bool persistent = false, eop = false;
      if (membersPersistent) {
        PersistenceVerdict pv = mergedPersistence(m, c.d(), c.options());
        persistent = pv.persistent;
        eop = v.edgeOptimal && comp.compliant;
        j["persistence"] = toJson(pv);
        j["edgeOptimalPersistent"] = eop;
        text += toText(pv) + "edge-optimal persistent: " + (eop ? "yes" : "no") + "\n";
      } else {
        j["persistence"] = nullptr;
        j["edgeOptimalPersistent"] = nullptr;
        text += "persistence: not analyzed (a meta-vertex is not persistent)\n";
      }
      emit(c, stamped(j, c), text);
      bool holds = property == "rigid"                ? v.rigid
                   : property == "edge-optimal-rigid" ? v.edgeOptimal
                   : property == "persistent"         ? persistent
                                                      : eop;
      return holds ? 0 : 1;
    }
    if (plan->parsed()) {
      std::vector<Formation> members = readCollection(files);
      Feasibility feas = feasibility(members, c.d(), c.options());
      Json j;
      j["feasibility"] = toJson(feas);
      if (!feas.feasible) {
        j["plan"] = nullptr;
        emit(c, stamped(j, c), toText(feas));
        return 1;
      }
      MergePlan p = planCollection(members, c.d(), c.options());
      j["plan"] = toJson(p, members);
      if (!mergedOut.empty()) {
        std::ofstream out(mergedOut);
        out << toJson(MetaFormation(members, p.interEdges())).dump(2) << "\n";
      }
      emit(c, stamped(j, c), toText(feas) + toText(p));
      return 0;
    }
    if (verify->parsed()) {
      std::vector<Formation> members = readCollection({file});
      PlanReport r = verifyPlan(members, planEdgesFromJson(readFile(planFile)), c.d(), c.options());
      emit(c, stamped(toJson(r), c), toText(r));
      return r.persistent && r.structurallyPersistent && r.edgeOptimalPersistent && r.missingDofConserved ? 0 : 1;
    }
    if (gen->parsed()) {
      Formation f = generate(kind, n, c.seed, offset);
      if (c.format == "dot")
        std::cout << exportDot(f);
      else
        std::cout << toJson(f).dump() << "\n";
      return 0;
    }
    if (exp->parsed()) {
      std::string text = readFile(file);
      bool isMeta = nlohmann::json::parse(text, nullptr, false).contains("metaVertices");
      if (c.format == "dot")
        std::cout << (isMeta ? exportDot(parseMetaFormation(text)) : exportDot(parseFormation(text)));
      else
        std::cout << (isMeta ? toJson(parseMetaFormation(text)) : toJson(parseFormation(text))).dump(2) << "\n";
      return 0;
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
