// Command-line entry point. Every subcommand wraps exactly one library
// operation; json output is stable-keyed, text output renders the same data.

#include <cstdio>
#include <exception>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/decomposition.hpp"
#include "raag/json_io.hpp"
#include "raag/word_oracle.hpp"

namespace {

using raag::json;

struct Options {
  std::string format = "text";
  std::string data_dir = "./data";
  std::uint64_t seed = raag::kDefaultSeed;
  bool emit_dot = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--data-dir", opt.data_dir, "bundled data directory");
  cmd->add_option("--seed", opt.seed, "seed for sampling");
}

std::string word_line(const raag::Word& w) { return raag::format_word(w); }

json surface_json(const raag::SurfaceType& s) { return raag::format_surface(s); }

json graph_payload(const raag::Graph& g) { return raag::graph_to_json(g); }

std::string graph_text(const raag::Graph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) out += " " + v;
  out += "\nedges:";
  for (const auto& [a, b] : g.edges()) out += " " + a + "-" + b;
  return out + "\n";
}

raag::PresentationPtr presentation_for(const std::string& graph_file,
                                       const std::string& flavor) {
  return raag::make_presentation(raag::load_graph(graph_file), raag::parse_flavor(flavor));
}

json decomposition_json(const std::vector<raag::DecompositionCase>& cases, int target) {
  json out;
  out["target"] = target;
  out["cases"] = json::array();
  for (const auto& c : cases) {
    json jc;
    jc["alpha"] = c.alpha;
    jc["alpha_chain_sensitive"] = c.alpha_chain_sensitive;
    jc["circles_to_f1"] = c.b1;
    jc["circles_to_f2"] = c.b2;
    jc["zeta_f1"] = c.zeta1;
    jc["zeta_f2"] = c.zeta2;
    jc["f0_options"] = json::array();
    for (const auto& opt : c.f0_options) {
      json jo = json::array();
      for (const auto& p : opt)
        jo.push_back({{"piece", raag::format_surface(p.type)},
                      {"to_f1", p.to_f1},
                      {"to_f2", p.to_f2}});
      jc["f0_options"].push_back(jo);
    }
    jc["f1_types"] = json::array();
    for (const auto& t : c.f1_types) jc["f1_types"].push_back(raag::format_surface(raag::as_marked(t)));
    jc["f2_types"] = json::array();
    for (const auto& t : c.f2_types) jc["f2_types"].push_back(raag::format_surface(raag::as_marked(t)));
    jc["realizable_pairs"] = json::array();
    for (const auto& [t1, t2] : c.realizable_pairs)
      jc["realizable_pairs"].push_back(
          {raag::format_surface(raag::as_marked(t1)), raag::format_surface(raag::as_marked(t2))});
    out["cases"].push_back(jc);
  }
  return out;
}

std::string decomposition_text(const json& j) {
  std::string out = "target " + std::to_string(j["target"].get<int>()) + ": " +
                    std::to_string(j["cases"].size()) + " cases\n";
  int k = 0;
  for (const auto& jc : j["cases"]) {
    out += "case " + std::to_string(++k) + ": alpha=" + std::to_string(jc["alpha"].get<int>()) +
           " zeta=(" + std::to_string(jc["zeta_f1"].get<int>()) + "," +
           std::to_string(jc["zeta_f2"].get<int>()) + ") circles=(" +
           std::to_string(jc["circles_to_f1"].get<int>()) + "," +
           std::to_string(jc["circles_to_f2"].get<int>()) + ")";
    if (jc["alpha_chain_sensitive"].get<bool>()) out += " [alpha chain-rule sensitive]";
    out += "\n  F0:";
    bool first = true;
    for (const auto& opt : jc["f0_options"]) {
      if (!first) out += "  or";
      first = false;
      for (const auto& p : opt)
        out += " " + p["piece"].get<std::string>() + "(" + std::to_string(p["to_f1"].get<int>()) +
               "," + std::to_string(p["to_f2"].get<int>()) + ")";
    }
    out += "\n  F1 in {";
    for (const auto& t : jc["f1_types"]) out += " " + t.get<std::string>();
    out += " }\n  F2 in {";
    for (const auto& t : jc["f2_types"]) out += " " + t.get<std::string>();
    out += " }\n  realizable pairs: " + std::to_string(jc["realizable_pairs"].size()) + "\n";
  }
  return out;
}

json check_map_json(const raag::VertexMap& f) {
  json out;
  out["surjective"] = raag::is_surjective(f);
  if (auto ce = raag::full_counterexample(f)) {
    out["full"] = false;
    out["full_counterexample"] = {
        {"edge", {ce->u1, ce->u2}}, {"fiber_pair", {ce->v1, ce->v2}}};
  } else {
    out["full"] = true;
  }
  if (raag::is_surjective(f)) {
    if (auto ce = raag::condition_star_counterexample(f)) {
      out["condition_star"] = false;
      out["condition_star_counterexample"] = {
          {"vertex", ce->v}, {"over", ce->u}, {"against", ce->u_other}};
    } else {
      out["condition_star"] = true;
    }
  } else {
    out["condition_star"] = nullptr;
  }
  out["graph_morphism"] = raag::is_graph_morphism(f);
  out["locally_surjective"] = raag::is_locally_surjective(f);
  out["fibers_form_cliques"] = raag::fibers_form_cliques(f);
  return out;
}

std::string check_map_text(const json& j) {
  auto show = [&](const char* key) -> std::string {
    if (j[key].is_null()) return "n/a (map not surjective)";
    return j[key].get<bool>() ? "yes" : "no";
  };
  std::string out;
  out += std::string("surjective:          ") + show("surjective") + "\n";
  out += std::string("full:                ") + show("full") + "\n";
  if (j.contains("full_counterexample")) {
    const auto& ce = j["full_counterexample"];
    out += "  counterexample: fibers over edge {" + ce["edge"][0].get<std::string>() + "," +
           ce["edge"][1].get<std::string>() + "} contain non-adjacent pair (" +
           ce["fiber_pair"][0].get<std::string>() + "," + ce["fiber_pair"][1].get<std::string>() +
           ")\n";
  }
  out += std::string("condition (*):       ") + show("condition_star") + "\n";
  if (j.contains("condition_star_counterexample")) {
    const auto& ce = j["condition_star_counterexample"];
    out += "  counterexample: '" + ce["vertex"].get<std::string>() + "' over '" +
           ce["over"].get<std::string>() + "' adjacent to the whole fiber of '" +
           ce["against"].get<std::string>() + "'\n";
  }
  out += std::string("graph morphism:      ") + show("graph_morphism") + "\n";
  out += std::string("locally surjective:  ") + show("locally_surjective") + "\n";
  out += std::string("fibers are cliques:  ") + show("fibers_form_cliques") + "\n";
  return out;
}

json hom_json(const raag::DiagonalHom& h) {
  json out;
  out["flavor"] = raag::flavor_name(h.source->flavor);
  out["lipschitz"] = h.lipschitz;
  out["images"] = json::object();
  for (const auto& [u, fib] : h.images) out["images"][u] = fib;
  return out;
}

std::string hom_text(const json& j) {
  std::string out = "flavor: " + j["flavor"].get<std::string>() + "\n";
  for (const auto& [u, fib] : j["images"].items()) {
    out += u + " ->";
    for (const auto& v : fib) out += " " + v.get<std::string>();
    out += "\n";
  }
  out += "K = " + std::to_string(j["lipschitz"].get<int>()) + "\n";
  return out;
}

json verify_json(const raag::VerifyReport& rep) {
  json out;
  out["samples"] = rep.samples;
  out["failures"] = rep.failures;
  out["failing_words"] = rep.failing_words;
  out["lipschitz"] = rep.lipschitz;
  out["max_input_len"] = rep.max_input_len;
  out["total_input_len"] = rep.total_input_len;
  out["total_image_len"] = rep.total_image_len;
  out["passed"] = rep.passed;
  return out;
}

std::string verify_text(const json& j) {
  std::string out;
  out += "samples:         " + std::to_string(j["samples"].get<std::size_t>()) + "\n";
  out += "failures:        " + std::to_string(j["failures"].get<std::size_t>()) + "\n";
  for (const auto& w : j["failing_words"])
    out += "  failing word: " + w.get<std::string>() + "\n";
  out += "K:               " + std::to_string(j["lipschitz"].get<int>()) + "\n";
  out += "max input len:   " + std::to_string(j["max_input_len"].get<std::size_t>()) + "\n";
  out += "total input len: " + std::to_string(j["total_input_len"].get<std::size_t>()) + "\n";
  out += "total image len: " + std::to_string(j["total_image_len"].get<std::size_t>()) + "\n";
  out += std::string("passed:          ") + (j["passed"].get<bool>() ? "yes" : "no") + "\n";
  return out;
}

json recipe_json(const raag::TwistRecipe& r) {
  json out;
  out["twists"] = json::array();
  for (const auto& e : r.entries)
    out["twists"].push_back({{"curve", e.curve},
                             {"exponent", e.exponent},
                             {"handedness", e.handedness == raag::Handedness::right
                                                ? "right"
                                                : "left"}});
  out["deck_pairing"] = json::object();
  for (const auto& [a, b] : r.deck_pairing) out["deck_pairing"][a] = b;
  out["free_factor"] = r.free_factor;
  return out;
}

std::string recipe_text(const json& j) {
  std::string out = "twist recipe:";
  for (const auto& t : j["twists"])
    out += " t_" + t["curve"].get<std::string>() + "^" + t["exponent"].get<std::string>();
  out += "\ndeck pairing:";
  for (const auto& [a, b] : j["deck_pairing"].items())
    if (a < b.get<std::string>()) out += " " + a + "<->" + b.get<std::string>();
  out += "\n";
  return out;
}

void emit(const Options& opt, const json& payload, const std::string& text) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word arithmetic in right-angled Artin/Coxeter groups, graph-map "
               "certificates, and curve-system bookkeeping on nonorientable surfaces"};
  app.require_subcommand(1);

  Options opt;

  // ---- words ----
  std::string graph_file, flavor = "artin", word_text, word_text2;
  auto add_word_opts = [&](CLI::App* cmd, bool two_words) {
    cmd->add_option("--graph", graph_file, "graph JSON file")->required();
    cmd->add_option("--flavor", flavor, "group flavor")
        ->check(CLI::IsMember({"artin", "coxeter"}));
    cmd->add_option("word", word_text, "word, e.g. \"b a b^-1\"")->required();
    if (two_words) cmd->add_option("word2", word_text2, "second word")->required();
    add_common(cmd, opt);
  };
  auto* c_reduce = app.add_subcommand("reduce", "reduce a word");
  add_word_opts(c_reduce, false);
  auto* c_nf = app.add_subcommand("normal-form", "canonical normal form of a word");
  add_word_opts(c_nf, false);
  auto* c_equal = app.add_subcommand("equal", "decide equality of two words");
  add_word_opts(c_equal, true);

  // ---- maps ----
  std::string map_file;
  std::size_t samples = 2000;
  int max_len = 20;
  auto* c_check = app.add_subcommand("check-map", "classify a vertex map");
  c_check->add_option("--map", map_file, "map JSON file")->required();
  add_common(c_check, opt);
  auto* c_hom = app.add_subcommand("diagonal-hom", "build the certified diagonal homomorphism");
  c_hom->add_option("--map", map_file, "map JSON file")->required();
  c_hom->add_option("--flavor", flavor, "group flavor")
      ->check(CLI::IsMember({"artin", "coxeter"}));
  add_common(c_hom, opt);
  auto* c_verify = app.add_subcommand("verify-hom", "sample reduced words through the hom");
  c_verify->add_option("--map", map_file, "map JSON file")->required();
  c_verify->add_option("--flavor", flavor, "group flavor")
      ->check(CLI::IsMember({"artin", "coxeter"}));
  c_verify->add_option("--samples", samples, "number of sampled words");
  c_verify->add_option("--max-len", max_len, "maximum sampled word length");
  add_common(c_verify, opt);

  // ---- surfaces ----
  std::string surface_text;
  int target = 4, max_genus = 2, max_marked = 5;
  auto* c_xi = app.add_subcommand("xi", "complexity of a surface");
  c_xi->add_option("surface", surface_text, "e.g. N{1,6} or S{0,4}")->required();
  add_common(c_xi, opt);
  auto* c_xi2 = app.add_subcommand("xi-two", "two-sided complexity of a nonorientable surface");
  c_xi2->add_option("surface", surface_text, "e.g. N{1,6}")->required();
  add_common(c_xi2, opt);
  auto* c_cover = app.add_subcommand("double-cover", "orientation double cover");
  c_cover->add_option("surface", surface_text, "closed nonorientable surface")->required();
  add_common(c_cover, opt);
  auto* c_enum = app.add_subcommand("enumerate-c4-cases",
                                    "enumerate four-cycle neighborhood decompositions");
  c_enum->add_option("--target", target, "target two-sided complexity")->required();
  c_enum->add_option("--max-genus", max_genus, "piece catalog genus bound");
  c_enum->add_option("--max-marked", max_marked, "piece catalog marked-point bound");
  add_common(c_enum, opt);

  // ---- curves ----
  std::string curves_file, lift_file, target_file, small_file, big_file;
  int p4_p = 0;
  std::size_t limit = 0;
  bool all_curves = false;
  auto* c_cg = app.add_subcommand("curve-graph", "graph induced by a curve system");
  c_cg->add_option("--curves", curves_file, "curve system JSON file")->required();
  c_cg->add_flag("--all", all_curves, "include one-sided curves");
  c_cg->add_flag("--emit-dot", opt.emit_dot, "emit Graphviz DOT instead");
  add_common(c_cg, opt);
  auto* c_lift = app.add_subcommand("lift", "lift a curve system to the double cover");
  c_lift->add_option("--curves", curves_file, "curve system JSON file")->required();
  c_lift->add_option("--lift", lift_file, "lift spec JSON file")->required();
  add_common(c_lift, opt);
  auto* c_pipe = app.add_subcommand("pipeline", "embedding pipeline: curves -> lift -> hom -> twists");
  c_pipe->add_option("--curves", curves_file, "curve system JSON file");
  c_pipe->add_option("--lift", lift_file, "lift spec JSON file");
  c_pipe->add_option("--target", target_file, "target graph JSON file");
  c_pipe->add_option("--p4", p4_p, "use the built-in four-curve chain on N{1,p}");
  add_common(c_pipe, opt);
  auto* c_gamma = app.add_subcommand("gamma-demo", "validate and exercise the bundled graph pair");
  c_gamma->add_option("--samples", samples, "number of sampled words");
  c_gamma->add_option("--max-len", max_len, "maximum sampled word length");
  add_common(c_gamma, opt);
  auto* c_find = app.add_subcommand("find-induced", "induced embeddings of one graph in another");
  c_find->add_option("--small", small_file, "pattern graph JSON file")->required();
  c_find->add_option("--big", big_file, "host graph JSON file")->required();
  c_find->add_option("--limit", limit, "stop after this many embeddings (0 = all)");
  add_common(c_find, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*c_reduce || *c_nf) {
      auto pres = presentation_for(graph_file, flavor);
      raag::Word w = raag::parse_word(pres, word_text);
      raag::Word r = *c_reduce ? raag::reduce(w) : raag::normal_form(w);
      emit(opt, json{{*c_reduce ? "reduced" : "normal_form", word_line(r)}}, word_line(r) + "\n");
    } else if (*c_equal) {
      auto pres = presentation_for(graph_file, flavor);
      bool eq = raag::equal(raag::parse_word(pres, word_text), raag::parse_word(pres, word_text2));
      emit(opt, json{{"equal", eq}}, std::string(eq ? "true" : "false") + "\n");
    } else if (*c_check) {
      json j = check_map_json(raag::load_map(map_file));
      emit(opt, j, check_map_text(j));
    } else if (*c_hom) {
      auto h = raag::diagonal_hom(raag::load_map(map_file), raag::parse_flavor(flavor));
      json j = hom_json(h);
      emit(opt, j, hom_text(j));
    } else if (*c_verify) {
      auto h = raag::diagonal_hom(raag::load_map(map_file), raag::parse_flavor(flavor));
      auto rep = raag::verify_reduced_preservation(h, samples, max_len, opt.seed);
      json j = verify_json(rep);
      emit(opt, j, verify_text(j));
      if (!rep.passed) return 1;
    } else if (*c_xi) {
      int v = raag::xi(raag::parse_surface(surface_text));
      emit(opt, json{{"value", v}}, std::to_string(v) + "\n");
    } else if (*c_xi2) {
      int v = raag::xi_two(raag::parse_surface(surface_text));
      emit(opt, json{{"value", v}}, std::to_string(v) + "\n");
    } else if (*c_cover) {
      auto s = raag::orientation_double_cover(raag::parse_surface(surface_text));
      emit(opt, json{{"cover", surface_json(s)}}, raag::format_surface(s) + "\n");
    } else if (*c_enum) {
      auto cases = raag::enumerate_c4_decompositions(target, max_genus, max_marked);
      json j = decomposition_json(cases, target);
      emit(opt, j, decomposition_text(j));
    } else if (*c_cg) {
      auto cs = raag::load_curve_system(curves_file);
      auto g = raag::curve_graph(cs, all_curves ? raag::CurveSelection::all
                                                : raag::CurveSelection::two_sided_only);
      if (opt.emit_dot)
        std::cout << raag::graph_to_dot(g, "curves");
      else
        emit(opt, graph_payload(g), graph_text(g));
    } else if (*c_lift) {
      auto cs = raag::load_curve_system(curves_file);
      auto res = raag::build_lift(cs, raag::load_lift_spec(lift_file));
      json j;
      j["cover"] = surface_json(res.lifted.ambient());
      j["lifted"] = raag::curve_system_to_json(res.lifted);
      j["projection"] = json::object();
      for (const auto& [v, u] : res.projection.assignment) j["projection"][v] = u;
      j["full"] = true;
      j["condition_star"] = true;
      std::string text = "cover: " + raag::format_surface(res.lifted.ambient()) + "\n";
      text += "lifted curves:";
      for (const auto& c : res.lifted.curves()) text += " " + c.name;
      text += "\nprojection:";
      for (const auto& [v, u] : res.projection.assignment) text += " " + v + "->" + u;
      text += "\nfull: yes\ncondition (*): yes\n";
      emit(opt, j, text);
    } else if (*c_pipe) {
      raag::Graph target_graph;
      std::unique_ptr<raag::CurveSystem> cs;
      raag::LiftSpec spec;
      if (p4_p > 0) {
        cs = std::make_unique<raag::CurveSystem>(raag::p4_configuration(p4_p));
        target_graph = raag::named_graph(raag::NamedKind::path, 4);
        spec = raag::load_lift_spec(lift_file.empty() ? opt.data_dir + "/p4_n1_4_lift.json"
                                                      : lift_file);
      } else {
        if (curves_file.empty() || lift_file.empty() || target_file.empty())
          throw raag::input_error(
              "pipeline needs either --p4 or all of --curves, --lift, --target");
        cs = std::make_unique<raag::CurveSystem>(raag::load_curve_system(curves_file));
        target_graph = raag::load_graph(target_file);
        spec = raag::load_lift_spec(lift_file);
      }
      auto rep = raag::theorem1_pipeline(*cs, target_graph, spec);
      json j;
      j["embedding"] = json::object();
      for (const auto& [v, c] : rep.embedding) j["embedding"][v] = c;
      j["downstairs_graph"] = graph_payload(rep.downstairs_graph);
      j["lifted_graph"] = graph_payload(rep.lifted_graph);
      j["hom"] = hom_json(rep.hom);
      j["recipe"] = recipe_json(rep.recipe);
      std::string text = "embedding:";
      for (const auto& [v, c] : rep.embedding) text += " " + v + "->" + c;
      text += "\n" + hom_text(j["hom"]) + recipe_text(j["recipe"]);
      emit(opt, j, text);
    } else if (*c_gamma) {
      auto bundle = raag::load_gamma_bundle(opt.data_dir);
      auto rep = raag::verify_reduced_preservation(bundle.hom, samples, max_len, opt.seed);
      json j;
      j["gamma0"] = graph_payload(bundle.gamma0);
      j["gamma1"] = graph_payload(bundle.gamma1);
      j["phi_q"] = word_line(raag::apply_hom(bundle.hom, raag::parse_word(bundle.hom.source, "q")));
      j["hom"] = hom_json(bundle.hom);
      j["verify"] = verify_json(rep);
      std::string text = "gamma0:\n" + graph_text(bundle.gamma0) + "gamma1:\n" +
                         graph_text(bundle.gamma1) + "phi(q) = " +
                         j["phi_q"].get<std::string>() + "\n" + hom_text(j["hom"]) +
                         verify_text(j["verify"]);
      emit(opt, j, text);
      if (!rep.passed) return 1;
    } else if (*c_find) {
      auto embeddings = raag::find_induced_embeddings(raag::load_graph(small_file),
                                                      raag::load_graph(big_file), limit);
      json j;
      j["count"] = embeddings.size();
      j["embeddings"] = json::array();
      for (const auto& e : embeddings) {
        json je = json::object();
        for (const auto& [v, u] : e) je[v] = u;
        j["embeddings"].push_back(je);
      }
      std::string text = std::to_string(embeddings.size()) + " embeddings\n";
      for (const auto& e : embeddings) {
        std::string line;
        for (const auto& [v, u] : e) line += (line.empty() ? "" : " ") + v + "->" + u;
        text += line + "\n";
      }
      emit(opt, j, text);
    }
  } catch (const raag::input_error& e) {
    std::cerr << "error: E_INPUT: " << e.what() << "\n";
    return 1;
  } catch (const raag::data_error& e) {
    std::cerr << "error: E_DATA: " << e.what() << "\n";
    return 1;
  } catch (const raag::internal_error& e) {
    std::cerr << "error: E_INTERNAL: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: E_UNEXPECTED: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
