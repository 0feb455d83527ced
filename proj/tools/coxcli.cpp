// coxcli: batch front end over the library. Subcommands inspect a Coxeter
// matrix file, build ball truncations and ruins, run the verification
// batteries, and emit one deterministic JSON report per invocation (timing
// fields are the only nondeterministic content). Exit codes: 0 success,
// 1 verification failure, 2 input/usage error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cox/complex.hpp"
#include "cox/homology.hpp"
#include "cox/matrix.hpp"
#include "cox/nerve.hpp"
#include "cox/ruin.hpp"
#include "cox/svg.hpp"
#include "cox/system.hpp"
#include "cox/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cox;

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json name_list(const CoxeterMatrix& M, GenSet T) {
  json out = json::array();
  for (Gen g : set_members(T)) out.push_back(M.name(g));
  return out;
}

json verdict_json(const CheckReport& rep) {
  json v;
  v["lemma"] = rep.id;
  v["instances_checked"] = rep.instances;
  v["failures"] = rep.failures;
  v["pass"] = rep.pass();
  v["title"] = rep.title;
  v["facts"] = rep.facts;
  return v;
}

// Lazily built per-invocation state: one matrix, one word engine, one ball
// truncation at the resolved radius.
struct Context {
  std::string path;
  std::string text;
  CoxeterMatrix M;
  int radius = 0;
  std::optional<CoxeterSystem> W;
  std::optional<BallComplex> B;

  CoxeterSystem& system() {
    if (!W) W.emplace(M);
    return *W;
  }
  BallComplex& complex() {
    if (!B) B.emplace(system().ball(radius));
    return *B;
  }
};

std::vector<Gen> pick_gens(const CoxeterMatrix& M, const std::string& gen) {
  if (!gen.empty()) return {M.generator(gen)};
  std::vector<Gen> all;
  for (Gen g = 0; g < static_cast<Gen>(M.rank()); ++g) all.push_back(g);
  return all;
}

void absorb(CheckReport& into, const CheckReport& part, const std::string& prefix) {
  if (into.id.empty()) {
    into.id = part.id;
    into.title = part.title;
  }
  into.instances += part.instances;
  for (const auto& f : part.failures) into.failures.push_back(prefix + f);
  for (const auto& f : part.facts) into.facts.push_back(prefix + f);
}

// Runs one battery, aggregating over generators/pairs unless the caller
// pins them down with --gen/--pair.
CheckReport run_battery(Context& ctx, const std::string& lemma, const std::string& gen,
                        const std::string& pair) {
  const CoxeterMatrix& M = ctx.M;
  if (lemma == "2.1") return check_blockers_stay_left(ctx.system(), ctx.radius);
  if (lemma == "2.2") return check_prefix_confinement(ctx.system(), ctx.radius);
  if (lemma == "3.1") return check_heavy_partners_unbonded(M);
  if (lemma == "3.3") return check_alternating_words_reduced(ctx.system());

  CheckReport out;
  if (lemma == "3.2" || lemma == "3.5" || lemma == "3.10") {
    for (Gen t : pick_gens(M, gen)) {
      CheckReport part = lemma == "3.2"   ? check_two_even_colors(ctx.complex(), t)
                         : lemma == "3.5" ? check_same_color_disjoint(ctx.complex(), t)
                                          : check_odd_meets_evens(ctx.complex(), t);
      absorb(out, part, "t=" + M.name(t) + ": ");
    }
    return out;
  }
  if (lemma == "3.6" || lemma == "3.7") {
    std::vector<std::pair<Gen, Gen>> pairs;  // (t, s)
    for (Gen t : pick_gens(M, gen)) {
      GenSet heavy = neighborhood(M, t).heavy;
      if (!pair.empty()) {
        pairs.emplace_back(t, M.generator(pair));
      } else {
        for (Gen s : set_members(heavy)) pairs.emplace_back(t, s);
      }
    }
    if (pairs.empty()) {
      out.id = lemma;
      out.title = "even collar overlap (no heavy pairs in this system)";
      out.facts.push_back("no heavy partners; nothing to check");
      return out;
    }
    for (auto [t, s] : pairs)
      absorb(out, verify_evens_isomorphism(ctx.complex(), s, t),
             "t=" + M.name(t) + ",s=" + M.name(s) + ": ");
    out.id = lemma;
    return out;
  }
  if (lemma == "4.1") {
    std::vector<GenSet> filters;
    if (!gen.empty() && !pair.empty()) {
      filters.push_back(set_add(set_add(GenSet{0}, M.generator(gen)), M.generator(pair)));
    } else {
      for (Gen t : pick_gens(M, gen))
        for (Gen s : set_members(neighborhood(M, t).heavy))
          if (s > t || !gen.empty()) filters.push_back(set_add(set_add(GenSet{0}, t), s));
    }
    if (filters.empty()) {
      out.id = "4.1";
      out.title = "codimension-1 classification (no heavy pairs in this system)";
      out.facts.push_back("no heavy partners; nothing to check");
      return out;
    }
    for (GenSet T : filters)
      absorb(out, classify_codim1_faces(build_ruin(ctx.complex(), M.full_set(), T)),
             "T=" + M.format_set(T) + ": ");
    return out;
  }
  if (lemma == "excision") {
    GenSet S = M.full_set();
    for (Gen t : pick_gens(M, gen)) {
      GenSet tset = set_add(GenSet{0}, t);
      std::string pre = "t=" + M.name(t) + ": ";
      absorb(out, verify_excision(ctx.complex(), S, tset), pre);
      for (Gen s : set_members(neighborhood(M, t).heavy))
        absorb(out, verify_excision(ctx.complex(), S, set_add(tset, s)), pre);
      for (Gen x = 0; x < static_cast<Gen>(M.rank()); ++x)
        if (x != t) absorb(out, verify_excision(ctx.complex(), set_remove(S, x), tset), pre);
    }
    out.id = "excision";
    return out;
  }
  throw DomainError("unknown lemma id '" + lemma + "'");
}

json homology_json(const ChainComplex& C) {
  HomologyResult H = homology(C);
  json out;
  out["betti"] = H.betti;
  out["torsion"] = H.torsion;
  out["chi"] = rational_string(Rat(C.euler_characteristic(), 1));
  return out;
}

int write_output(const json& report, const std::string& json_path) {
  std::string text = report.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(json_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << json_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of even Coxeter systems: balls, ruins, colors, homology"};
  app.require_subcommand(1);

  std::string file, gen, pair, lemma, svg_path, json_path, target = "sigma";
  int radius = -1, dim = -1;
  bool orbihedral = false;

  auto add_common = [&](CLI::App* sub, bool with_radius) {
    sub->add_option("file", file, "Coxeter matrix file (.cox)")->required();
    sub->add_option("--json", json_path, "write the JSON report to this path");
    if (with_radius) sub->add_option("--radius", radius, "ball radius (default 4, or 3 for rank > 4)");
    return sub;
  };

  CLI::App* c_validate = add_common(app.add_subcommand("validate", "parse and summarize a system"), false);
  CLI::App* c_nerve = add_common(app.add_subcommand("nerve", "nerve of the system"), false);
  CLI::App* c_flag = add_common(app.add_subcommand("flag", "flagness of the nerve"), false);
  CLI::App* c_sphere = add_common(app.add_subcommand("sphere-check", "sphere battery on the nerve"), false);
  c_sphere->add_option("--dim", dim, "expected sphere dimension (0..3)")->required();
  CLI::App* c_ball = add_common(app.add_subcommand("ball", "ball truncation census"), true);
  CLI::App* c_ruin = add_common(app.add_subcommand("ruin", "one- or two-letter ruin of a ball"), true);
  c_ruin->add_option("--gen", gen, "ruin letter")->required();
  c_ruin->add_option("--pair", pair, "second letter for a two-letter ruin");
  c_ruin->add_option("--svg", svg_path, "write a collar strip diagram (rank-3 systems)");
  CLI::App* c_colors = add_common(app.add_subcommand("colors", "vertex colors on the identity component"), true);
  c_colors->add_option("--gen", gen, "ruin letter")->required();
  CLI::App* c_hom = add_common(app.add_subcommand("homology", "homology of a complex"), true);
  c_hom->add_option("--target", target, "sigma | ruin | pair | nerve")
      ->check(CLI::IsMember({"sigma", "ruin", "pair", "nerve"}));
  c_hom->add_option("--gen", gen, "ruin letter (targets ruin/pair)");
  c_hom->add_option("--pair", pair, "second ruin letter (targets ruin/pair)");
  CLI::App* c_euler = add_common(app.add_subcommand("euler", "Euler characteristics"), false);
  c_euler->add_flag("--orbihedral", orbihedral, "weighted sum over spherical subsets");
  CLI::App* c_verify = add_common(app.add_subcommand("verify", "run one verification battery"), true);
  c_verify->add_option("--lemma", lemma, "battery id")->required()
      ->check(CLI::IsMember({"2.1", "2.2", "3.1", "3.2", "3.3", "3.5", "3.6", "3.7", "3.10",
                             "4.1", "excision"}));
  c_verify->add_option("--gen", gen, "restrict to this generator");
  c_verify->add_option("--pair", pair, "restrict to this heavy partner");
  CLI::App* c_all = add_common(app.add_subcommand("all", "full verification battery"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  json report;
  try {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    Context ctx{file, buf.str(), CoxeterMatrix::parse(buf.str())};
    const CoxeterMatrix& M = ctx.M;
    ctx.radius = radius >= 0 ? radius : (M.rank() <= 4 ? 4 : 3);
    CLI::App* sub = app.get_subcommands().front();

    report["command"] = sub->get_name();
    report["input"] = file;
    report["input_digest"] = "fnv1a:" + fnv1a_hex(ctx.text);
    json params = json::object();
    if (sub == c_ball || sub == c_ruin || sub == c_colors || sub == c_hom || sub == c_verify ||
        sub == c_all)
      params["radius"] = ctx.radius;
    if (!gen.empty()) params["gen"] = gen;
    if (!pair.empty()) params["pair"] = pair;
    if (!lemma.empty()) params["lemma"] = lemma;
    if (dim >= 0) params["dim"] = dim;
    if (sub == c_hom) params["target"] = target;
    if (orbihedral) params["orbihedral"] = true;
    report["parameters"] = params;

    if (sub == c_validate) {
      report["rank"] = M.rank();
      report["generators"] = M.names();
      report["even"] = M.is_even();
      const SphericalPoset& P = M.spherical_poset();
      report["spherical_subsets"] = P.sets.size();
      report["max_longest"] = P.max_longest;
      report["ok"] = true;
    } else if (sub == c_nerve) {
      SimplicialComplex L = build_nerve(M);
      json faces = json::array();
      for (GenSet F : L.faces) faces.push_back(name_list(M, F));
      report["dim"] = L.dim();
      report["f_vector"] = L.f_vector();
      report["euler_characteristic"] = L.euler_characteristic();
      report["connected"] = L.connected();
      report["flag"] = is_flag(L);
      report["faces"] = faces;
    } else if (sub == c_flag) {
      SimplicialComplex L = build_nerve(M);
      GenSet witness = 0;
      bool ok = is_flag(L, &witness);
      report["flag"] = ok;
      if (!ok) {
        report["missing_face"] = name_list(M, witness);
        exit_code = 1;
      }
    } else if (sub == c_sphere) {
      if (dim < 0 || dim > 3) throw DomainError("--dim must be between 0 and 3");
      SphereCheck sc = sphere_check(build_nerve(M), dim);
      report["dim"] = sc.n;
      report["pass"] = sc.pass;
      report["failures"] = sc.failures;
      json facts;
      for (const auto& [k, v] : sc.facts) facts[k] = v;
      report["facts"] = facts;
      if (!sc.pass) exit_code = 1;
    } else if (sub == c_ball) {
      BallComplex& B = ctx.complex();
      report["radius"] = ctx.radius;
      report["vertex_count"] = B.ball().size();
      json layers = json::array();
      for (int l = 0; l <= B.ball().max_length(); ++l)
        layers.push_back(B.ball().layer_end(l) - B.ball().layer_begin(l));
      report["layer_sizes"] = layers;
      json by_type;
      for (GenSet T : B.types()) by_type[M.format_set(T)] = B.cells_of_type(T).size();
      report["cells_by_type"] = by_type;
      report["cells_total"] = B.cells().size();
      auto oc = B.order_complex(B.cells());
      std::vector<long long> fvec;
      for (const Simplex& s : oc.simplices) {
        if (static_cast<int>(s.size()) > static_cast<int>(fvec.size()))
          fvec.resize(s.size(), 0);
        ++fvec[s.size() - 1];
      }
      report["f_vector_of_order_complex"] = fvec;
    } else if (sub == c_ruin) {
      BallComplex& B = ctx.complex();
      Gen t = M.generator(gen);
      if (!pair.empty()) {
        GenSet T = set_add(set_add(GenSet{0}, t), M.generator(pair));
        Ruin r = build_ruin(B, M.full_set(), T);
        report["filter"] = name_list(M, T);
        report["omega_cells"] = r.omega.size();
        report["boundary_cells"] = r.boundary.size();
        report["hat_cells"] = r.hat.size();
        long long tops = 0;
        for (const CellKey& c : r.omega)
          if (set_size(c.type) == 4) ++tops;
        report["top_cells"] = tops;
      } else {
        std::vector<RuinComponent> comps = ruin_components(B, t);
        const RuinComponent& comp0 = comps.front();
        std::vector<Collar> cs = collars(B, comp0);
        Coloring col = color_vertices(B, comp0);
        report["components"] = comps.size();
        json comp;
        comp["vertices"] = comp0.vertices.size();
        comp["cells"] = comp0.cells.size();
        comp["collars"] = cs.size();
        json collar_list = json::array();
        for (const Collar& c : cs) {
          const Element& rep = B.ball().element(c.vertices.front());
          json e;
          e["coset"] = rep.is_identity() ? "e" : M.format_word(rep.word);
          e["parity"] =
              col.parity.at(col.color_at(c.vertices.front())) == 0 ? "even" : "odd";
          e["boundary_cells"] = c.boundary_component.size();
          e["body_cells"] = c.body.size();
          e["inner_cells"] = c.inner.size();
          collar_list.push_back(e);
        }
        comp["collar_list"] = collar_list;
        report["identity_component"] = comp;
      }
      if (!svg_path.empty()) {
        std::string drawing = render_ruin_strips(B, t);  // may refuse before the file exists
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw ParseError("cannot write " + svg_path);
        svg << drawing;
        report["svg"] = svg_path;
      }
    } else if (sub == c_colors) {
      BallComplex& B = ctx.complex();
      Gen t = M.generator(gen);
      std::vector<RuinComponent> comps = ruin_components(B, t);
      const RuinComponent& comp0 = comps.front();
      Coloring col = color_vertices(B, comp0);
      json coords = json::array();
      for (GenSet T : col.coordinates) coords.push_back(name_list(M, T));
      report["coordinates"] = coords;
      std::map<std::string, long long> counts;
      for (int v : comp0.vertices) ++counts[col.color_at(v)];
      json classes = json::array();
      for (const auto& [key, n] : counts) {
        json e;
        e["color"] = key;
        e["parity"] = col.parity.at(key) == 0 ? "even" : "odd";
        e["vertices"] = n;
        classes.push_back(e);
      }
      report["component_vertices"] = comp0.vertices.size();
      report["classes"] = classes;
      report["trivial_color"] = col.trivial_color;
    } else if (sub == c_hom) {
      if (target == "nerve") {
        report.update(homology_json(build_nerve(M).chain_complex()));
      } else if (target == "sigma") {
        BallComplex& B = ctx.complex();
        auto oc = B.order_complex(B.cells());
        report.update(homology_json(ChainComplex(oc.simplices)));
      } else {
        if (gen.empty()) throw DomainError("targets ruin/pair need --gen");
        BallComplex& B = ctx.complex();
        GenSet T = set_add(GenSet{0}, M.generator(gen));
        if (!pair.empty()) T = set_add(T, M.generator(pair));
        Ruin r = build_ruin(B, M.full_set(), T);
        auto oc = B.order_complex(r.omega);
        ChainComplex C(oc.simplices);
        if (target == "ruin") {
          report.update(homology_json(C));
        } else {
          std::vector<bool> in_bd(oc.cells.size(), false);
          for (std::size_t i = 0; i < oc.cells.size(); ++i)
            in_bd[i] = std::binary_search(r.boundary.begin(), r.boundary.end(), oc.cells[i],
                                          cell_less);
          ChainComplex rel = C.relative([&](const Simplex& s) {
            for (auto v : s)
              if (!in_bd[v]) return false;
            return true;
          });
          report.update(homology_json(rel));
        }
      }
    } else if (sub == c_euler) {
      if (orbihedral) {
        report["orbihedral"] = true;
        report["chi"] = rational_string(orbihedral_euler_characteristic(M));
      } else {
        report["orbihedral"] = false;
        report["chi"] = rational_string(Rat(build_nerve(M).euler_characteristic(), 1));
      }
    } else if (sub == c_verify || sub == c_all) {
      if (!pair.empty() && gen.empty()) throw DomainError("--pair needs --gen");
      std::vector<std::string> ids;
      if (sub == c_verify)
        ids = {lemma};
      else
        ids = {"2.1", "2.2", "3.1", "3.2", "3.3", "3.5", "3.6", "3.10", "4.1", "excision"};
      json verdicts = json::array();
      bool all_pass = true;
      for (const std::string& id : ids) {
        CheckReport rep = run_battery(ctx, id, gen, pair);
        all_pass = all_pass && rep.pass();
        verdicts.push_back(verdict_json(rep));
      }
      report["verdicts"] = verdicts;
      report["pass"] = all_pass;
      if (!all_pass) exit_code = 1;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["timing_ms"] = ms;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int write_rc = write_output(report, json_path);
  return write_rc != 0 ? write_rc : exit_code;
}
