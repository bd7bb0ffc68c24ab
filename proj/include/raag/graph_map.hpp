#ifndef RAAG_GRAPH_MAP_HPP
#define RAAG_GRAPH_MAP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/rng.hpp"
#include "raag/word.hpp"

namespace raag {

// Total vertex assignment between two graphs. Not required to preserve
// edges; the predicates below classify what it does preserve.
struct VertexMap {
  Graph source;
  Graph target;
  VertexAssignment assignment;
};

inline void validate(const VertexMap& f) {
  if (f.assignment.size() != f.source.num_vertices())
    throw input_error("vertex map: assignment must be total on the source");
  for (const auto& [v, u] : f.assignment) {
    if (!f.source.has_vertex(v)) throw input_error("vertex map: unknown source vertex '" + v + "'");
    if (!f.target.has_vertex(u)) throw input_error("vertex map: unknown target vertex '" + u + "'");
  }
}

inline std::map<std::string, VertexSet> fibers(const VertexMap& f) {
  std::map<std::string, VertexSet> out;
  for (const auto& u : f.target.vertices()) out[u] = {};
  for (const auto& [v, u] : f.assignment) out[u].push_back(v);
  return out;  // fibers come out sorted since assignment is an ordered map
}

inline std::optional<std::string> uncovered_vertex(const VertexMap& f) {
  for (const auto& [u, fib] : fibers(f))
    if (fib.empty()) return u;
  return std::nullopt;
}

inline bool is_surjective(const VertexMap& f) { return !uncovered_vertex(f).has_value(); }

struct FullCounterexample {
  std::string u1, u2;  // adjacent in target
  std::string v1, v2;  // non-adjacent fiber representatives
};

inline std::optional<FullCounterexample> full_counterexample(const VertexMap& f) {
  auto fib = fibers(f);
  for (const auto& [u1, u2] : f.target.edges())
    for (const auto& v1 : fib[u1])
      for (const auto& v2 : fib[u2])
        if (!f.source.adjacent(v1, v2)) return FullCounterexample{u1, u2, v1, v2};
  return std::nullopt;
}

inline bool is_full(const VertexMap& f) { return !full_counterexample(f).has_value(); }

struct StarCounterexample {
  std::string u, u_other;  // non-adjacent in target
  std::string v;           // fiber element of u adjacent to all of fiber(u_other)
};

// Condition (*): for every non-adjacent pair u != u' in the target and every
// v over u, some v' over u' is non-adjacent to v in the source.
inline std::optional<StarCounterexample> condition_star_counterexample(const VertexMap& f) {
  if (auto miss = uncovered_vertex(f))
    throw input_error("condition (*): map is not surjective; '" + *miss + "' is uncovered");
  auto fib = fibers(f);
  const auto& vs = f.target.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j || f.target.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      for (const auto& v : fib[vs[i]]) {
        bool ok = false;
        for (const auto& vp : fib[vs[j]])
          if (!f.source.adjacent(v, vp)) { ok = true; break; }
        if (!ok) return StarCounterexample{vs[i], vs[j], v};
      }
    }
  }
  return std::nullopt;
}

inline bool satisfies_condition_star(const VertexMap& f) {
  return !condition_star_counterexample(f).has_value();
}

// Every source edge maps to a target edge (no collapsed or broken edges).
inline bool is_graph_morphism(const VertexMap& f) {
  for (const auto& [v1, v2] : f.source.edges()) {
    const auto& u1 = f.assignment.at(v1);
    const auto& u2 = f.assignment.at(v2);
    if (u1 == u2 || !f.target.adjacent(u1, u2)) return false;
  }
  return true;
}

// For every source vertex v and every target edge at f(v), some edge at v
// maps onto it.
inline bool is_locally_surjective(const VertexMap& f) {
  for (const auto& v : f.source.vertices()) {
    const auto& u = f.assignment.at(v);
    for (const auto& u_other : link(f.target, u)) {
      bool covered = false;
      for (const auto& v_other : link(f.source, v))
        if (f.assignment.at(v_other) == u_other) { covered = true; break; }
      if (!covered) return false;
    }
  }
  return true;
}

// Same assignment viewed between the complement graphs; involutive.
inline VertexMap complementary_map(const VertexMap& f) {
  return VertexMap{complement(f.source), complement(f.target), f.assignment};
}

inline bool fibers_form_cliques(const VertexMap& f) {
  for (const auto& [u, fib] : fibers(f))
    if (!is_clique(f.source, fib)) return false;
  return true;
}

// Substitution u -> ordered product of the fiber over u, certified at
// construction time to extend to an injective homomorphism
// A(target) -> A(source) (resp. C -> C with clique fibers).
struct DiagonalHom {
  PresentationPtr source;  // group on the map's target graph
  PresentationPtr target;  // group on the map's source graph
  std::map<std::string, VertexSet> images;  // ascending fiber per generator
  int lipschitz = 1;       // max fiber size
};

inline DiagonalHom diagonal_hom(const VertexMap& f, Flavor flavor) {
  validate(f);
  if (auto miss = uncovered_vertex(f))
    throw input_error("diagonal hom: map is not surjective; '" + *miss + "' is uncovered");
  if (auto ce = full_counterexample(f))
    throw input_error("diagonal hom: map is not full; fiber pair (" + ce->v1 + "," + ce->v2 +
                      ") over edge {" + ce->u1 + "," + ce->u2 + "} is non-adjacent");
  if (auto ce = condition_star_counterexample(f))
    throw input_error("diagonal hom: condition (*) fails at '" + ce->v + "' over '" + ce->u +
                      "' against '" + ce->u_other + "'");
  if (flavor == Flavor::coxeter && !fibers_form_cliques(f))
    throw input_error("diagonal hom: coxeter flavor requires every fiber to be a clique");
  DiagonalHom h;
  h.source = make_presentation(f.target, flavor);
  h.target = make_presentation(f.source, flavor);
  h.images = fibers(f);
  for (const auto& [u, fib] : h.images)
    h.lipschitz = std::max(h.lipschitz, static_cast<int>(fib.size()));
  return h;
}

// Letterwise substitution; an inverse letter maps to the reversed fiber word
// with inverted signs.
inline Word apply_hom(const DiagonalHom& h, const Word& w) {
  if (!(*w.presentation() == *h.source))
    throw input_error("apply hom: word is not over the hom's source presentation");
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const auto& fib = h.images.at(w.graph().vertex(l.vertex));
    if (l.sign == 1) {
      for (const auto& v : fib) out.push_back({h.target->graph.index_of(v), 1});
    } else {
      for (auto it = fib.rbegin(); it != fib.rend(); ++it)
        out.push_back({h.target->graph.index_of(*it), -1});
    }
  }
  return Word(h.target, std::move(out));
}

// Seeded reduced-word sampler: uniform length in [1, max_len], rejection
// sampled until reduced.
inline Word random_reduced_word(const PresentationPtr& pres, int max_len, Lcg& rng) {
  const int nv = static_cast<int>(pres->graph.num_vertices());
  if (nv == 0) return Word(pres, {});
  for (;;) {
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) {
      int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
      int s = (pres->flavor == Flavor::coxeter || rng.below(2) == 0) ? 1 : -1;
      ls.push_back({v, s});
    }
    Word w(pres, std::move(ls));
    if (is_reduced(w)) return w;
  }
}

struct VerifyReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> failing_words;  // capped at 10
  int lipschitz = 1;
  std::size_t max_input_len = 0;
  std::size_t total_input_len = 0;
  std::size_t total_image_len = 0;
  bool passed = false;
};

// Samples reduced source words and asserts the image of each is reduced,
// non-empty, and of length exactly the sum of fiber sizes over its letters
// (whence the bi-Lipschitz bounds |w| <= |phi(w)| <= K|w|). A failure here is
// an implementation bug, not an expected runtime condition.
inline VerifyReport verify_reduced_preservation(const DiagonalHom& h, std::size_t samples,
                                                int max_len, std::uint64_t seed) {
  Lcg rng(seed);
  VerifyReport rep;
  rep.samples = samples;
  rep.lipschitz = h.lipschitz;
  for (std::size_t i = 0; i < samples; ++i) {
    Word w = random_reduced_word(h.source, max_len, rng);
    Word img = apply_hom(h, w);
    std::size_t expect = 0;
    for (const auto& l : w.letters())
      expect += h.images.at(w.graph().vertex(l.vertex)).size();
    bool ok = is_reduced(img) && (!w.empty() ? !img.empty() : true) &&
              img.size() == expect && img.size() >= w.size() &&
              img.size() <= static_cast<std::size_t>(h.lipschitz) * w.size();
    if (!ok) {
      ++rep.failures;
      if (rep.failing_words.size() < 10) rep.failing_words.push_back(format_word(w));
    }
    rep.max_input_len = std::max(rep.max_input_len, w.size());
    rep.total_input_len += w.size();
    rep.total_image_len += img.size();
  }
  rep.passed = rep.failures == 0;
  return rep;
}

}  // namespace raag

#endif
