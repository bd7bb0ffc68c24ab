#ifndef RAAG_CURVES_HPP
#define RAAG_CURVES_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/graph_map.hpp"
#include "raag/surface.hpp"
#include "raag/word.hpp"

namespace raag {

struct Curve {
  std::string name;
  bool two_sided = true;
};

// Curves on a surface as combinatorial data: sidedness plus pairwise
// minimal-position geometric intersection numbers. Bigon-freeness of the
// underlying configuration is an input promise carried by the data files.
class CurveSystem {
 public:
  CurveSystem(SurfaceType ambient, std::vector<Curve> curves,
              std::vector<std::tuple<std::string, std::string, int>> intersections)
      : ambient_(ambient) {
    validate(ambient);
    std::sort(curves.begin(), curves.end(),
              [](const Curve& a, const Curve& b) { return a.name < b.name; });
    for (std::size_t i = 0; i + 1 < curves.size(); ++i)
      if (curves[i].name == curves[i + 1].name)
        throw input_error("curve system: duplicate curve '" + curves[i].name + "'");
    curves_ = std::move(curves);
    inter_.assign(curves_.size(), std::vector<int>(curves_.size(), 0));
    for (const auto& [a, b, n] : intersections) {
      int i = index_of(a), j = index_of(b);
      if (i == j) throw input_error("curve system: self-intersection entry for '" + a + "'");
      if (n < 0) throw input_error("curve system: negative intersection number");
      inter_[i][j] = inter_[j][i] = n;
    }
    if (ambient_.orientable)
      for (const auto& c : curves_)
        if (!c.two_sided)
          throw input_error("curve system: one-sided curve '" + c.name +
                            "' on an orientable surface");
    int cap = ambient_.orientable ? xi(ambient_) : xi_two(ambient_);
    if (max_disjoint_two_sided() > cap)
      throw input_error("curve system: " + std::to_string(max_disjoint_two_sided()) +
                        " mutually disjoint two-sided curves exceed the capacity " +
                        std::to_string(cap) + " of " + format_surface(ambient_));
  }

  const SurfaceType& ambient() const { return ambient_; }
  const std::vector<Curve>& curves() const { return curves_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < curves_.size(); ++i)
      if (curves_[i].name == name) return static_cast<int>(i);
    throw input_error("curve system: unknown curve '" + name + "'");
  }

  int intersection(const std::string& a, const std::string& b) const {
    return inter_[index_of(a)][index_of(b)];
  }

  // Largest set of pairwise disjoint two-sided curves (brute force).
  int max_disjoint_two_sided() const {
    std::vector<int> two;
    for (std::size_t i = 0; i < curves_.size(); ++i)
      if (curves_[i].two_sided) two.push_back(static_cast<int>(i));
    int best = 0;
    std::vector<int> chosen;
    auto grow = [&](auto&& self, std::size_t start) -> void {
      best = std::max(best, static_cast<int>(chosen.size()));
      for (std::size_t k = start; k < two.size(); ++k) {
        bool ok = true;
        for (int c : chosen)
          if (inter_[c][two[k]] != 0) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(two[k]);
        self(self, k + 1);
        chosen.pop_back();
      }
    };
    grow(grow, 0);
    return best;
  }

 private:
  SurfaceType ambient_;
  std::vector<Curve> curves_;
  std::vector<std::vector<int>> inter_;
};

enum class CurveSelection { two_sided_only, all };

// Vertices are the selected curves; edges are the disjoint pairs.
inline Graph curve_graph(const CurveSystem& cs, CurveSelection which) {
  std::vector<std::string> verts;
  for (const auto& c : cs.curves())
    if (which == CurveSelection::all || c.two_sided) verts.push_back(c.name);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (cs.intersection(verts[i], verts[j]) == 0) edges.emplace_back(verts[i], verts[j]);
  return Graph(verts, edges);
}

// Four two-sided curves on N{1,p}, consecutive ones meeting twice, so the
// two-sided curve graph is the path on four vertices. Needs p >= 4: below
// that the two-sided complexity is at most 1, so the path's commuting pair
// has no room.
inline CurveSystem p4_configuration(int p) {
  SurfaceType ambient{false, 1, p, 0};
  if (p < 4)
    throw input_error("p4 configuration: xi-two(" + format_surface(ambient) + ") = " +
                      std::to_string(p < 0 ? 0 : xi_two(ambient)) +
                      " < 2, so no pair of disjoint two-sided curves exists and the "
                      "path on four vertices cannot be realized");
  std::vector<Curve> curves;
  for (int i = 1; i <= 4; ++i) curves.push_back({"alpha" + std::to_string(i), true});
  std::vector<std::tuple<std::string, std::string, int>> inter;
  for (int i = 1; i < 4; ++i)
    inter.emplace_back("alpha" + std::to_string(i), "alpha" + std::to_string(i + 1), 2);
  return CurveSystem(ambient, std::move(curves), std::move(inter));
}

// Maximal disjoint two-sided family on a closed nonorientable surface,
// following the standard pattern: crosscaps grouped into pairs, three curves
// per pair (two through it, one around it), one circle per marked point in a
// chain, with end circles dropped as inessential or isotopic. Degenerate
// low-complexity surfaces are special-cased. Serves as a cross-check against
// the complexity formula.
inline CurveSystem canonical_disjoint_family(const SurfaceType& n) {
  if (n.orientable || n.boundary != 0)
    throw input_error("canonical family: ambient must be closed nonorientable");
  validate(n);
  int pairs = n.genus / 2;
  bool odd = n.genus % 2 != 0;
  // 3 per crosscap pair, 1 per marked point, minus the end circles of the
  // chain (two when a stray crosscap caps one end, three otherwise)
  int count = 3 * pairs + n.marked - (odd ? 2 : 3);
  if (n.genus == 1 && n.marked <= 1) count = 0;
  if (n.genus == 2 && n.marked == 0) count = 1;
  if (count < 0) count = 0;
  std::vector<Curve> curves;
  for (int i = 1; i <= count; ++i) curves.push_back({"c" + std::to_string(i), true});
  return CurveSystem(n, std::move(curves), {});
}

// How a curve system lifts to the orientation double cover: per curve the
// upstairs component names, the deck-involution pairing, and the upstairs
// intersection numbers. Supplied as data and validated against the
// covering-space constraints rather than computed from geometry.
struct LiftSpec {
  std::map<std::string, std::vector<std::string>> lifts;
  std::map<std::string, std::string> pairing;  // involution on upstairs names
  std::vector<std::tuple<std::string, std::string, int>> intersections;
};

namespace lift_detail {

inline int lookup(const std::map<std::pair<std::string, std::string>, int>& m,
                  const std::string& a, const std::string& b) {
  auto it = m.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  return it == m.end() ? 0 : it->second;
}

}  // namespace lift_detail

// All violations, sorted; empty means valid.
inline std::vector<std::string> validate_lift(const CurveSystem& cs, const LiftSpec& spec) {
  std::vector<std::string> errors;
  std::map<std::pair<std::string, std::string>, int> up;
  std::map<std::string, std::string> owner;  // upstairs name -> downstairs curve

  for (const auto& c : cs.curves()) {
    if (!c.two_sided) {
      errors.push_back("curve '" + c.name + "' is one-sided; lift specs cover two-sided systems");
      continue;
    }
    auto it = spec.lifts.find(c.name);
    if (it == spec.lifts.end()) {
      errors.push_back("curve '" + c.name + "' has no lift entry");
      continue;
    }
    const auto& comps = it->second;
    if (comps.empty() || comps.size() > 2)
      errors.push_back("curve '" + c.name + "' must lift to 1 or 2 components");
    for (const auto& n : comps) {
      if (owner.count(n)) errors.push_back("upstairs name '" + n + "' used twice");
      owner[n] = c.name;
    }
  }
  for (const auto& [name, comps] : spec.lifts)
    if (std::none_of(cs.curves().begin(), cs.curves().end(),
                     [&](const Curve& c) { return c.name == name; }))
      errors.push_back("lift entry for unknown curve '" + name + "'");

  for (const auto& [a, b, n] : spec.intersections) {
    if (!owner.count(a) || !owner.count(b)) {
      errors.push_back("intersection entry names unknown lift (" + a + "," + b + ")");
      continue;
    }
    if (n < 0) errors.push_back("negative upstairs intersection (" + a + "," + b + ")");
    up[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = n;
  }

  // Deck pairing: an involution, fixed-point-free exactly on 2-component fibers.
  for (const auto& [name, comps] : spec.lifts) {
    if (comps.size() == 2) {
      auto i1 = spec.pairing.find(comps[0]);
      auto i2 = spec.pairing.find(comps[1]);
      if (i1 == spec.pairing.end() || i2 == spec.pairing.end() || i1->second != comps[1] ||
          i2->second != comps[0])
        errors.push_back("pairing must swap the two lifts of '" + name + "'");
    } else if (comps.size() == 1) {
      auto it = spec.pairing.find(comps[0]);
      if (it != spec.pairing.end() && it->second != comps[0])
        errors.push_back("single lift of '" + name + "' cannot pair with another component");
    }
  }

  auto deck = [&](const std::string& n) {
    auto it = spec.pairing.find(n);
    return it == spec.pairing.end() ? n : it->second;
  };

  std::vector<std::string> names;
  for (const auto& [n, o] : owner) names.push_back(n);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const std::string &x = names[i], &y = names[j];
      int v = lift_detail::lookup(up, x, y);
      if (lift_detail::lookup(up, deck(x), deck(y)) != v)
        errors.push_back("pairing does not preserve intersections at (" + x + "," + y + ")");
      if (owner[x] == owner[y] && v != 0)
        errors.push_back("lifts of '" + owner[x] + "' must be mutually disjoint");
    }

  // Covering constraints per downstairs pair.
  const auto& curves = cs.curves();
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const auto& a = curves[i].name;
      const auto& b = curves[j].name;
      if (!spec.lifts.count(a) || !spec.lifts.count(b)) continue;
      int down = cs.intersection(a, b);
      int sum = 0;
      for (const auto& x : spec.lifts.at(a))
        for (const auto& y : spec.lifts.at(b)) sum += lift_detail::lookup(up, x, y);
      if (sum != 2 * down)
        errors.push_back("upstairs intersections of (" + a + "," + b + ") sum to " +
                         std::to_string(sum) + ", expected " + std::to_string(2 * down));
      if (down > 0) {
        for (const auto& x : spec.lifts.at(a)) {
          bool meets = false;
          for (const auto& y : spec.lifts.at(b))
            if (lift_detail::lookup(up, x, y) > 0) meets = true;
          if (!meets)
            errors.push_back("lift '" + x + "' of '" + a + "' meets no lift of '" + b + "'");
        }
        for (const auto& y : spec.lifts.at(b)) {
          bool meets = false;
          for (const auto& x : spec.lifts.at(a))
            if (lift_detail::lookup(up, x, y) > 0) meets = true;
          if (!meets)
            errors.push_back("lift '" + y + "' of '" + b + "' meets no lift of '" + a + "'");
        }
      }
    }

  std::sort(errors.begin(), errors.end());
  return errors;
}

struct LiftResult {
  CurveSystem lifted;
  VertexMap projection;  // lifted curve graph -> downstairs two-sided curve graph
};

// Builds the lifted system on the orientation double cover and the covering
// projection between the curve graphs. The projection is re-certified full
// and condition-(*) as a postcondition; failure there is an internal
// inconsistency, not a data error.
inline LiftResult build_lift(const CurveSystem& cs, const LiftSpec& spec) {
  auto errors = validate_lift(cs, spec);
  if (!errors.empty()) {
    std::string msg = "lift validation failed:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw input_error(msg);
  }
  std::vector<Curve> up_curves;
  VertexAssignment assignment;
  for (const auto& [down, comps] : spec.lifts)
    for (const auto& n : comps) {
      up_curves.push_back({n, true});
      assignment[n] = down;
    }
  std::vector<std::tuple<std::string, std::string, int>> inter;
  for (const auto& [a, b, n] : spec.intersections)
    if (n > 0) inter.emplace_back(a, b, n);
  CurveSystem lifted(orientation_double_cover(cs.ambient()), std::move(up_curves),
                     std::move(inter));
  VertexMap proj{curve_graph(lifted, CurveSelection::two_sided_only),
                 curve_graph(cs, CurveSelection::two_sided_only), std::move(assignment)};
  if (!is_full(proj) || !satisfies_condition_star(proj))
    throw internal_error("lift certification failed after validation");
  return LiftResult{std::move(lifted), std::move(proj)};
}

enum class Handedness { right, left };

struct TwistEntry {
  std::string curve;
  std::string exponent = "n";  // symbolic; no numeric power is computed
  Handedness handedness = Handedness::right;
};

// Symbolic multi-twist recipe over the lifted curves, closed under the deck
// pairing so the prescribed homeomorphism commutes with the involution.
// free_factor marks recipes meant to be augmented by a pseudo-Anosov symbol
// generating an extra free factor.
struct TwistRecipe {
  std::vector<TwistEntry> entries;
  std::map<std::string, std::string> deck_pairing;
  bool free_factor = false;
};

struct PipelineReport {
  VertexAssignment embedding;  // target graph vertex -> downstairs curve
  Graph downstairs_graph;
  Graph lifted_graph;
  DiagonalHom hom;  // A(downstairs curve graph) -> A(lifted curve graph)
  TwistRecipe recipe;
};

// End-to-end: identify the target graph inside the two-sided curve graph,
// lift, build the certified diagonal homomorphism, and emit the symbolic
// twist recipe over the lifted curves.
inline PipelineReport theorem1_pipeline(const CurveSystem& cs, const Graph& target,
                                        const LiftSpec& spec) {
  Graph down = curve_graph(cs, CurveSelection::two_sided_only);
  if (target.num_vertices() != down.num_vertices())
    throw input_error("pipeline: no induced isomorphism (vertex counts differ: " +
                      std::to_string(target.num_vertices()) + " vs " +
                      std::to_string(down.num_vertices()) + ")");
  auto embeddings = find_induced_embeddings(target, down, 1);
  if (embeddings.empty())
    throw input_error("pipeline: no induced embedding of the target graph in the "
                      "two-sided curve graph");
  LiftResult lift = build_lift(cs, spec);
  DiagonalHom hom = diagonal_hom(lift.projection, Flavor::artin);
  TwistRecipe recipe;
  for (const auto& c : lift.lifted.curves()) recipe.entries.push_back({c.name});
  recipe.deck_pairing = spec.pairing;
  // deck-equivariance: the recipe's curve set is closed under the pairing
  for (const auto& e : recipe.entries) {
    auto it = spec.pairing.find(e.curve);
    if (it != spec.pairing.end() &&
        std::none_of(recipe.entries.begin(), recipe.entries.end(),
                     [&](const TwistEntry& o) { return o.curve == it->second; }))
      throw internal_error("twist recipe is not closed under the deck pairing");
  }
  return PipelineReport{embeddings.front(), std::move(down),
                        curve_graph(lift.lifted, CurveSelection::two_sided_only),
                        std::move(hom), std::move(recipe)};
}

struct GammaBundle {
  Graph gamma0;
  Graph gamma1;
  DiagonalHom hom;  // A(gamma0) -> A(gamma1), q -> ef
};

// Validates the bundled graph pair and assembles the substitution q -> ef.
// Every textual constraint on the pair is enforced here so that a bad
// transcription fails loudly rather than silently skewing results.
inline GammaBundle make_gamma_bundle(const Graph& gamma0, const Graph& gamma1) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw data_error("gamma bundle: " + what);
  };
  for (const auto* g : {&gamma0, &gamma1})
    for (const auto& v : {"a", "b", "c", "d"})
      require(g->has_vertex(v), std::string("missing vertex '") + v + "'");
  require(gamma0.has_vertex("q"), "gamma0 must contain q");
  require(gamma0.has_vertex("g") && gamma0.has_vertex("h"), "gamma0 must contain g and h");
  require(gamma1.has_vertex("e") && gamma1.has_vertex("f"), "gamma1 must contain e and f");
  require(!gamma1.has_vertex("q"), "gamma1 must not contain q");

  // {a,b,c,d} spans a 4-cycle a-b-c-d in both graphs
  for (const auto* g : {&gamma0, &gamma1}) {
    require(g->adjacent("a", "b") && g->adjacent("b", "c") && g->adjacent("c", "d") &&
                g->adjacent("d", "a") && !g->adjacent("a", "c") && !g->adjacent("b", "d"),
            "{a,b,c,d} does not span a 4-cycle");
  }
  // intersecting pairs in the source configuration: q-g, q-h, g-h are non-edges
  require(!gamma0.adjacent("q", "g") && !gamma0.adjacent("q", "h") &&
              !gamma0.adjacent("g", "h"),
          "q-g, q-h, g-h must be non-edges in gamma0");
  require(!gamma1.adjacent("e", "f"), "e-f must be a non-edge in gamma1");

  // q -> ef as the diagonal of the fold e,f -> q; its certification doubles
  // as the well-definedness check of the substitution.
  VertexAssignment fold;
  for (const auto& v : gamma1.vertices()) fold[v] = (v == "e" || v == "f") ? "q" : v;
  for (const auto& [v, u] : fold)
    if (v != "e" && v != "f")
      require(gamma0.has_vertex(u), "vertex sets of gamma0 and gamma1 do not match");
  VertexMap f{gamma1, gamma0, fold};
  DiagonalHom hom;
  try {
    hom = diagonal_hom(f, Flavor::artin);
  } catch (const input_error& e) {
    throw data_error(std::string("gamma bundle: substitution is not well-defined: ") + e.what());
  }
  return GammaBundle{gamma0, gamma1, std::move(hom)};
}

}  // namespace raag

#endif
