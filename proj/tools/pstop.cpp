#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pstop/builders.hpp"
#include "pstop/cells.hpp"
#include "pstop/codec.hpp"
#include "pstop/cofibration.hpp"
#include "pstop/constructions.hpp"
#include "pstop/homotopy.hpp"
#include "pstop/invariants.hpp"

namespace fs = std::filesystem;
using namespace pstop;

namespace {

enum Exit { kOk = 0, kFail = 1, kInvalid = 2, kBudget = 3 };

bool g_text = false;

void flatten(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << (path.empty() ? "value" : path) << " = " << j.dump() << "\n";
  }
}

int emit(const json& j, int code = kOk) {
  if (g_text) flatten(j, "", std::cout);
  else std::cout << dump(j);
  return code;
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kOk;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kBudget;
  }
  return kFail;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Subset parse_subset(const Space& s, const std::string& labels) {
  Subset out(s.size());
  for (const auto& l : split(labels, ',')) out.set(s.index_of(l));
  return out;
}

json subset_json(const Space& s, const Subset& a) {
  json out = json::array();
  for (Point p : members(a)) out.push_back(s.label(p));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& v : split(s, ',')) out.push_back(std::stoul(v));
  return out;
}

SpaceMap load_map(const std::string& path) {
  return read_map(read_json_file(path), fs::path(path).parent_path());
}

json assignment_labels(const Space& dom, const Space& cod, const Assignment& a) {
  return write_assignment(dom, cod, a);
}

json chain_json(const Space& x, const Space& y, const std::vector<Assignment>& chain) {
  json out = json::array();
  for (const auto& a : chain) out.push_back(assignment_labels(x, y, a));
  return out;
}

/// A homotopy on B given as {"domain", "codomain", "chain": [{b: z}, ..]}.
Homotopy load_homotopy(const std::string& path) {
  const json doc = read_json_file(path);
  const fs::path dir = fs::path(path).parent_path();
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("codomain") || !doc.contains("chain"))
    throw ParseError("$", "expected keys 'domain', 'codomain' and 'chain'");
  const Space b = read_space_ref(doc["domain"], dir, "domain");
  const Space z = read_space_ref(doc["codomain"], dir, "codomain");
  if (!doc["chain"].is_array()) throw ParseError("chain", "expected an array");
  std::vector<Assignment> chain;
  for (std::size_t t = 0; t < doc["chain"].size(); ++t) {
    json m{{"domain", write_space(b)}, {"codomain", write_space(z)}, {"assignment", doc["chain"][t]}};
    chain.push_back(read_map(m).assignment());
  }
  return homotopy_from_chain(b, z, chain);
}

json based_json(const BasedSpace& b) {
  return {{"base", b.space.label(b.base)}, {"space", write_space(b.space)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite convergence spaces: constructions, homotopy, cofibrations and invariants"};
  app.set_version_flag("--version", std::string(kSchemaVersion));
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  std::uint64_t seed = 0;
  std::uint64_t cap = 50'000;
  std::uint64_t budget = kDefaultNodeBudget;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", g_text, "Flattened key = value output");
  app.add_option("--seed", seed, "Seed for randomized suites");
  app.add_option("--cap", cap, "Cap on |Y|^|X| for map enumerations");
  app.add_option("--budget", budget, "Node budget per search");

  std::function<int()> run;

  // build ---------------------------------------------------------------
  auto* build = app.add_subcommand("build", "Build a space from external data");
  build->require_subcommand(1);
  std::string in_path, in_path2, in_path3;
  {
    auto* g = build->add_subcommand("graph", "Edge list to space");
    g->add_option("file", in_path)->required();
    g->callback([&] {
      run = [&] { return emit(write_space(from_graph(read_edge_list(read_text_file(in_path))))); };
    });
  }
  std::string mode = "skeleton", orientation = "faces";
  {
    auto* h = build->add_subcommand("hypergraph", "Hypergraph JSON to space");
    h->add_option("file", in_path)->required();
    h->add_option("--mode", mode)->check(CLI::IsMember({"skeleton", "alexandrov"}));
    h->add_option("--orientation", orientation)->check(CLI::IsMember({"faces", "cofaces"}));
    h->callback([&] {
      run = [&] {
        const auto data = read_hypergraph(read_json_file(in_path));
        return emit(write_space(from_hypergraph(
            data, mode == "skeleton" ? HypergraphMode::Skeleton : HypergraphMode::Alexandrov,
            orientation == "faces" ? AlexandrovOrientation::Faces : AlexandrovOrientation::Cofaces)));
      };
    });
  }
  double scale = 0.0;
  {
    auto* m = build->add_subcommand("metric", "Distance CSV at scale epsilon to space");
    m->add_option("file", in_path)->required();
    m->add_option("--scale", scale, "Scale epsilon")->required();
    m->callback([&] {
      run = [&] { return emit(write_space(from_scaled_metric(read_distance_csv(read_text_file(in_path), scale)))); };
    });
  }
  {
    auto* t = build->add_subcommand("topology", "Open sets to space");
    t->add_option("file", in_path)->required();
    t->callback([&] {
      run = [&] { return emit(write_space(from_finite_topology(read_topology(read_json_file(in_path))))); };
    });
  }

  // check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Predicates on spaces and maps");
  check->require_subcommand(1);
  std::string subset_arg, scope_arg;
  std::vector<std::string> set_args;
  bool want_subcover = false;
  {
    auto* c = check->add_subcommand("continuity", "Continuity certificate of a map");
    c->add_option("map", in_path)->required();
    c->callback([&] {
      run = [&] {
        const SpaceMap f = load_map(in_path);
        const auto& cert = f.certificate();
        json out{{"continuous", cert.continuous}};
        if (!cert.continuous)
          out["violation"] = {{"filter", subset_json(f.domain(), cert.violating_generator)},
                              {"limit", f.domain().label(cert.violating_limit)}};
        return emit(out, cert.continuous ? kOk : kFail);
      };
    });
  }
  {
    auto* c = check->add_subcommand("classify", "Convergence, limit and pseudotopological axioms");
    c->add_option("space", in_path)->required();
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        const auto k = classify(s);
        json out{{"convergence", k.is_convergence},
                 {"limit", k.is_limit},
                 {"pseudotopological", k.is_pseudotopological}};
        if (s.kind() == Space::Kind::PointLimit) out["topological"] = is_topological(s);
        return emit(out);
      };
    });
  }
  {
    auto* c = check->add_subcommand("closure", "Adherence of a subset");
    c->add_option("space", in_path)->required();
    c->add_option("--subset", subset_arg, "Comma-separated labels");
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        const Subset a = parse_subset(s, subset_arg);
        return emit({{"adherence", subset_json(s, adherence(s, a))},
                     {"closed", is_closed(s, a)},
                     {"open", is_open(s, a)}});
      };
    });
  }
  {
    auto* c = check->add_subcommand("interior", "Interior of a family of subsets");
    c->add_option("space", in_path)->required();
    c->add_option("--set", set_args, "Comma-separated labels, repeatable");
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        std::vector<Subset> fam;
        for (const auto& a : set_args) fam.push_back(parse_subset(s, a));
        return emit({{"interior", subset_json(s, interior(s, fam))}});
      };
    });
  }
  {
    auto* c = check->add_subcommand("cover", "Covering-system predicate and finite subcover");
    c->add_option("space", in_path)->required();
    c->add_option("--set", set_args, "Comma-separated labels, repeatable");
    c->add_option("--scope", scope_arg, "Comma-separated labels; default the carrier");
    c->add_flag("--subcover", want_subcover, "Also compute a minimum subcover");
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        CoveringSystem cs;
        for (const auto& a : set_args) cs.sets.push_back(parse_subset(s, a));
        cs.scope = scope_arg.empty() ? full_subset(s.size()) : parse_subset(s, scope_arg);
        const auto cert = is_covering_system(s, cs);
        json out{{"covering", cert.covering}};
        if (cert.witness)
          out["witness"] = {{"point", s.label(cert.witness->first)},
                            {"generator", subset_json(s, cert.witness->second)}};
        if (want_subcover && cert.covering) {
          const auto sc = finite_subcover(s, cs);
          json sets = json::array();
          for (const auto& a : sc.sets) sets.push_back(subset_json(s, a));
          out["subcover"] = {{"indices", sc.indices}, {"sets", sets}, {"minimal", sc.minimal}};
        }
        return emit(out, cert.covering ? kOk : kFail);
      };
    });
  }

  // construct -----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Categorical constructions");
  construct->require_subcommand(1);
  std::string classes_arg;
  {
    auto* c = construct->add_subcommand("product", "X x Y");
    c->add_option("x", in_path)->required();
    c->add_option("y", in_path2)->required();
    c->callback([&] {
      run = [&] { return emit(write_space(product(load_space(in_path), load_space(in_path2)).space)); };
    });
  }
  {
    auto* c = construct->add_subcommand("coproduct", "X + Y");
    c->add_option("x", in_path)->required();
    c->add_option("y", in_path2)->required();
    c->callback([&] {
      run = [&] { return emit(write_space(coproduct(load_space(in_path), load_space(in_path2)).space)); };
    });
  }
  {
    auto* c = construct->add_subcommand("subspace", "Subspace on a subset");
    c->add_option("space", in_path)->required();
    c->add_option("--subset", subset_arg, "Comma-separated labels")->required();
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        return emit(write_space(subspace(s, parse_subset(s, subset_arg)).space));
      };
    });
  }
  {
    auto* c = construct->add_subcommand("quotient", "Quotient by classes; unlisted points stay single");
    c->add_option("space", in_path)->required();
    c->add_option("--classes", classes_arg, "Classes as 'a,b;c,d'")->required();
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        std::vector<std::vector<Point>> cls;
        Subset seen(s.size());
        for (const auto& c : split(classes_arg, ';')) {
          cls.emplace_back();
          for (const auto& l : split(c, ',')) {
            cls.back().push_back(s.index_of(l));
            seen.set(cls.back().back());
          }
        }
        for (Point p = 0; p < s.size(); ++p)
          if (!seen.test(p)) cls.push_back({p});
        const auto q = quotient(s, cls);
        return emit({{"space", write_space(q.space)},
                     {"projection", assignment_labels(s, q.space, q.projection.assignment())}});
      };
    });
  }
  {
    auto* c = construct->add_subcommand("pushout", "Pushout of A <-i- B -f-> Y");
    c->add_option("i", in_path)->required();
    c->add_option("f", in_path2)->required();
    c->callback([&] {
      run = [&] {
        const SpaceMap i = load_map(in_path), f = load_map(in_path2);
        const auto po = pushout(i, f);
        return emit({{"space", write_space(po.apex)},
                     {"q0", assignment_labels(i.codomain(), po.apex, po.q0.assignment())},
                     {"q1", assignment_labels(f.codomain(), po.apex, po.q1.assignment())}});
      };
    });
  }
  {
    auto* c = construct->add_subcommand("expspace", "Function space C(X, Y)");
    c->add_option("x", in_path)->required();
    c->add_option("y", in_path2)->required();
    c->callback([&] {
      run = [&] {
        const Space x = load_space(in_path), y = load_space(in_path2);
        const auto fs = function_space(x, y, cap);
        json maps = json::array();
        for (const auto& m : fs.maps()) maps.push_back(assignment_labels(x, y, m));
        return emit({{"space", write_space(fs.space())}, {"maps", maps}, {"limits", {{"cap", cap}}}});
      };
    });
  }

  // homotopy ------------------------------------------------------------
  auto* hom = app.add_subcommand("homotopy", "Homotopy classes, equivalences and chains");
  hom->require_subcommand(1);
  {
    auto* c = hom->add_subcommand("classes", "Components of C(X, Y) under one-step homotopy");
    c->add_option("x", in_path)->required();
    c->add_option("y", in_path2)->required();
    c->callback([&] {
      run = [&] {
        const Space x = load_space(in_path), y = load_space(in_path2);
        const auto hc = homotopy_classes(x, y, cap, budget);
        json cls = json::array();
        for (std::size_t k = 0; k < hc.count; ++k) cls.push_back(json::array());
        for (std::size_t m = 0; m < hc.maps.size(); ++m)
          cls[hc.class_of[m]].push_back(assignment_labels(x, y, hc.maps[m]));
        return emit({{"maps", hc.maps.size()},
                     {"count", hc.count},
                     {"classes", cls},
                     {"limits", {{"cap", cap}, {"budget", budget}}}});
      };
    });
  }
  {
    auto* c = hom->add_subcommand("equiv", "Homotopy-equivalence decision with witness");
    c->add_option("map", in_path)->required();
    c->callback([&] {
      run = [&] {
        const SpaceMap f = load_map(in_path);
        const auto w = is_homotopy_equivalence(f, cap, budget);
        json out{{"equivalence", w.has_value()}, {"limits", {{"cap", cap}, {"budget", budget}}}};
        if (w) {
          const Space &x = f.domain(), &y = f.codomain();
          out["inverse"] = assignment_labels(y, x, w->inverse.assignment());
          out["chainGF"] = chain_json(x, x, w->chain_gf);
          out["chainFG"] = chain_json(y, y, w->chain_fg);
        }
        return emit(out, w ? kOk : kFail);
      };
    });
  }
  {
    auto* c = hom->add_subcommand("chain", "Shortest one-step chain between two maps");
    c->add_option("f", in_path)->required();
    c->add_option("g", in_path2)->required();
    c->callback([&] {
      run = [&] {
        const SpaceMap f = load_map(in_path), g = load_map(in_path2);
        const auto ch = are_homotopic(f, g, budget);
        json out{{"homotopic", ch.has_value()}};
        if (ch) {
          out["length"] = ch->size() - 1;
          out["chain"] = chain_json(f.domain(), f.codomain(), *ch);
        }
        return emit(out, ch ? kOk : kFail);
      };
    });
  }

  // cofib ---------------------------------------------------------------
  auto* cof = app.add_subcommand("cofib", "Cofibrations, homotopy extension and axiom suites");
  cof->require_subcommand(1);
  std::size_t length = 1, max_cyl = 0;
  int end = 0;
  {
    auto* c = cof->add_subcommand("check", "Cofibration decision by the retract criterion");
    c->add_option("map", in_path)->required();
    c->add_option("--length", length, "Cylinder length")->check(CLI::PositiveNumber);
    c->add_option("--max-cyl", max_cyl, "Try cylinder lengths up to this bound");
    c->callback([&] {
      run = [&] {
        const SpaceMap i = load_map(in_path);
        const auto r = is_cofibration(i, length, max_cyl, budget);
        json out{{"cofibration", r.cofibration}, {"length", r.length}, {"tried", r.tried},
                 {"nodes", r.nodes}, {"limits", {{"budget", budget}, {"maxCyl", max_cyl}}}};
        if (r.retract)
          out["retract"] = assignment_labels(r.retract->domain(), r.retract->codomain(),
                                             r.retract->assignment());
        return emit(out, r.cofibration ? kOk : kFail);
      };
    });
  }
  {
    auto* c = cof->add_subcommand("hep", "Solve a homotopy extension problem");
    c->add_option("i", in_path, "Map B -> A")->required();
    c->add_option("f", in_path2, "Map A -> Z")->required();
    c->add_option("homotopy", in_path3, "Homotopy on B as a chain of slices")->required();
    c->add_option("--end", end, "Which end of the homotopy f matches")->check(CLI::Range(0, 1));
    c->callback([&] {
      run = [&] {
        const SpaceMap i = load_map(in_path), f = load_map(in_path2);
        const Homotopy g = load_homotopy(in_path3);
        const auto h = hep_solve(i, f, g, end, budget);
        json out{{"solvable", h.has_value()}};
        if (h) out["extension"] = chain_json(i.codomain(), f.codomain(), h->chain());
        return emit(out, h ? kOk : kFail);
      };
    });
  }
  {
    auto* c = cof->add_subcommand("factorize", "Mapping-cylinder factorization and its checks");
    c->add_option("map", in_path)->required();
    c->add_option("--length", length, "Cylinder length")->check(CLI::PositiveNumber);
    c->add_option("--max-cyl", max_cyl, "Try cylinder lengths up to this bound");
    c->callback([&] {
      run = [&] {
        const SpaceMap f = load_map(in_path);
        const auto fz = factorize(f, length);
        const auto rep = verify_factorization(fz, max_cyl, cap, budget);
        return emit({{"mappingCylinder", write_space(fz.mapping_cylinder)},
                     {"i", assignment_labels(f.domain(), fz.mapping_cylinder, fz.i.assignment())},
                     {"g", assignment_labels(fz.mapping_cylinder, f.codomain(), fz.g.assignment())},
                     {"commutes", rep.commutes},
                     {"cofibration", to_string(rep.cofibration)},
                     {"equivalence", to_string(rep.equivalence)},
                     {"verdict", to_string(rep.verdict())}},
                    verdict_code(rep.verdict()));
      };
    });
  }
  std::string suite_name = "i-category";
  SuiteOptions sopt;
  {
    auto* c = cof->add_subcommand("axioms", "Instance-level axiom suite on a sample directory");
    c->add_option("dir", in_path, "Directory of space documents")->required();
    c->add_option("--suite", suite_name)->check(CLI::IsMember({"i-category", "cofibration-category"}));
    c->add_option("--length", sopt.length)->check(CLI::PositiveNumber);
    c->add_option("--max-cyl", sopt.max_cyl);
    c->add_option("--maps-per-pair", sopt.maps_per_pair);
    c->add_option("--factorizations", sopt.factorizations);
    c->add_option("--squares", sopt.squares);
    c->add_option("--max-space-size", sopt.max_space_size);
    c->callback([&] {
      run = [&] {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(in_path))
          if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        std::vector<std::pair<std::string, Space>> sample;
        for (const auto& p : files) sample.emplace_back(p.stem().string(), load_space(p));
        sopt.seed = seed;
        sopt.exponential_cap = cap;
        sopt.node_budget = budget;
        const auto rep = verify_axioms(sample, *parse_suite(suite_name), sopt);
        return emit(rep.to_json(), verdict_code(rep.verdict()));
      };
    });
  }

  // invariants ----------------------------------------------------------
  auto* inv = app.add_subcommand("invariants", "Components, budgeted homotopy groups, suspension");
  inv->require_subcommand(1);
  std::string base_label, budgets_arg = "3,4";
  std::size_t n_arg = 1;
  PiNOptions popt;
  auto based = [&](const Space& s) {
    if (s.empty()) throw UnknownPoint("a based space needs at least one point");
    return make_based(s, base_label.empty() ? 0 : s.index_of(base_label));
  };
  {
    auto* c = inv->add_subcommand("pi0", "Path components");
    c->add_option("space", in_path)->required();
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        const auto p = pi0(s);
        json cls = json::array();
        for (const auto& c : p.classes()) {
          json m = json::array();
          for (Point q : c) m.push_back(s.label(q));
          cls.push_back(m);
        }
        return emit({{"components", p.count}, {"classes", cls}});
      };
    });
  }
  {
    auto* c = inv->add_subcommand("pin", "Budgeted based homotopy classes of sphere models");
    c->add_option("space", in_path)->required();
    c->add_option("--base", base_label, "Base point label; default the first point");
    c->add_option("--n", n_arg, "Sphere dimension");
    c->add_option("--budgets", budgets_arg, "Increasing interval lengths, comma-separated");
    c->add_option("--map-cap", popt.map_cap, "Based maps enumerated per budget");
    c->callback([&] {
      run = [&] {
        const Space s = load_space(in_path);
        const BasedSpace b = based(s);
        popt.node_budget = budget;
        const auto r = pi_n(b, n_arg, parse_sizes(budgets_arg), popt);
        json out = r.to_json();
        out["base"] = s.label(b.base);
        out["limits"] = {{"mapCap", popt.map_cap}, {"budget", budget}};
        return emit(out, r.stabilized ? kOk : kBudget);
      };
    });
  }
  {
    auto* c = inv->add_subcommand("suspend", "Suspension with interval length n");
    c->add_option("space", in_path)->required();
    c->add_option("--base", base_label, "Base point label; default the first point");
    c->add_option("--length", length)->check(CLI::PositiveNumber);
    c->callback([&] {
      run = [&] { return emit(based_json(suspension(based(load_space(in_path)), length).result)); };
    });
  }
  {
    auto* c = inv->add_subcommand("winding", "Winding number of a loop I_L -> C_k");
    c->add_option("map", in_path)->required();
    c->callback([&] { run = [&] { return emit({{"winding", winding_oracle(load_map(in_path))}}); }; });
  }

  // cells ---------------------------------------------------------------
  auto* cells = app.add_subcommand("cells", "Cell attachments, presentations, lifting checks");
  cells->require_subcommand(1);
  std::size_t dim = 1;
  std::string attach_arg, meet_arg, models_arg = "0:2,1:2,2:2";
  {
    auto* c = cells->add_subcommand("attach", "Attach one cell");
    c->add_option("space", in_path)->required();
    c->add_option("--dim", dim);
    c->add_option("--length", length)->check(CLI::PositiveNumber);
    c->add_option("--attach", attach_arg, "Images of the sphere points, comma-separated");
    c->callback([&] {
      run = [&] {
        const Space x = load_space(in_path);
        const CellModel m = cell_model(dim, length);
        Assignment a;
        for (const auto& l : split(attach_arg, ',')) a.push_back(x.index_of(l));
        if (a.size() != m.sphere.size())
          throw ParseError("--attach", "expected " + std::to_string(m.sphere.size()) + " points");
        const auto att = attach_cell(x, m, SpaceMap(m.sphere, x, a));
        return emit({{"model", m.declaration()},
                     {"space", write_space(att.result)},
                     {"inclusion", assignment_labels(x, att.result, att.inclusion.assignment())},
                     {"characteristic",
                      assignment_labels(m.disk, att.result, att.characteristic.assignment())}});
      };
    });
  }
  {
    auto* c = cells->add_subcommand("present", "Build a presentation");
    c->add_option("file", in_path)->required();
    c->add_option("--meet", meet_arg, "Labels of a subset; report the cells it meets");
    c->callback([&] {
      run = [&] {
        const auto p = read_presentation(read_json_file(in_path), fs::path(in_path).parent_path());
        json out = p.to_json();
        out["topological"] = is_topological(p.result());
        if (!meet_arg.empty()) out["cellsMeeting"] = cells_meeting(p, parse_subset(p.result(), meet_arg));
        return emit(out);
      };
    });
  }
  std::size_t max_cells = 3, max_dim = 1, max_length = 2, max_size = 12;
  {
    auto* c = cells->add_subcommand("search", "Search small presentations for a non-topological result");
    c->add_option("--max-cells", max_cells);
    c->add_option("--max-dim", max_dim);
    c->add_option("--max-length", max_length);
    c->add_option("--max-size", max_size);
    c->callback([&] {
      run = [&] {
        const auto r = search_non_topological(max_cells, max_dim, max_length, max_size);
        json out{{"examined", r.examined}, {"found", r.non_topological.has_value()},
                 {"limits", {{"maxCells", max_cells}, {"maxDim", max_dim},
                             {"maxLength", max_length}, {"maxSize", max_size}}}};
        if (r.non_topological) out["presentation"] = r.non_topological->to_json();
        return emit(out);
      };
    });
  }
  SerreOptions serre_opt;
  {
    auto* c = cells->add_subcommand("serre", "Lifting check against declared cell models");
    c->add_option("map", in_path)->required();
    c->add_option("--models", models_arg, "dim:length pairs, comma-separated");
    c->add_option("--square-cap", serre_opt.square_cap);
    c->callback([&] {
      run = [&] {
        const SpaceMap p = load_map(in_path);
        serre_opt.models.clear();
        for (const auto& m : split(models_arg, ',')) {
          const auto dl = split(m, ':');
          if (dl.size() != 2) throw ParseError("--models", "expected dim:length, got '" + m + "'");
          serre_opt.models.emplace_back(std::stoul(dl[0]), std::stoul(dl[1]));
        }
        serre_opt.node_budget = budget;
        const auto r = serre_check(p, serre_opt);
        json out = r.to_json(p.domain(), p.codomain());
        out["limits"] = {{"squareCap", serre_opt.square_cap}, {"budget", budget}};
        return emit(out, verdict_code(r.verdict()));
      };
    });
  }
  WeqOptions weq_opt;
  {
    auto* c = cells->add_subcommand("weq", "Budgeted weak-equivalence check");
    c->add_option("map", in_path)->required();
    c->add_option("--n-max", weq_opt.n_max);
    c->add_option("--budgets", budgets_arg, "Increasing interval lengths, comma-separated");
    c->add_option("--map-cap", weq_opt.pin.map_cap);
    c->callback([&] {
      run = [&] {
        const SpaceMap f = load_map(in_path);
        weq_opt.budgets = parse_sizes(budgets_arg);
        weq_opt.pin.node_budget = budget;
        const auto r = weak_equivalence_check(f, weq_opt);
        json out = r.to_json(f.domain(), f.codomain());
        out["limits"] = {{"nMax", weq_opt.n_max}, {"budgets", weq_opt.budgets},
                         {"mapCap", weq_opt.pin.map_cap}, {"budget", budget}};
        return emit(out, verdict_code(r.verdict));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  try {
    return run();
  } catch (const ExponentialTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const SearchSpaceTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExhausted& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
}
