#ifndef RAAG_WORD_HPP
#define RAAG_WORD_HPP

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "raag/error.hpp"
#include "raag/graph.hpp"

namespace raag {

enum class Flavor { artin, coxeter };

inline std::string flavor_name(Flavor f) { return f == Flavor::artin ? "artin" : "coxeter"; }

inline Flavor parse_flavor(const std::string& s) {
  if (s == "artin") return Flavor::artin;
  if (s == "coxeter") return Flavor::coxeter;
  throw input_error("unknown flavor '" + s + "' (expected artin or coxeter)");
}

// A(graph) when artin, C(graph) when coxeter: generators are the vertices,
// [u,v]=1 exactly for edges, and coxeter additionally imposes v^2=1.
struct GroupPresentation {
  Graph graph;
  Flavor flavor = Flavor::artin;

  bool operator==(const GroupPresentation&) const = default;
};

using PresentationPtr = std::shared_ptr<const GroupPresentation>;

inline PresentationPtr make_presentation(Graph g, Flavor f) {
  return std::make_shared<GroupPresentation>(GroupPresentation{std::move(g), f});
}

struct Letter {
  int vertex = 0;  // index into the presentation graph
  int sign = 1;    // +1 or -1; always +1 in coxeter flavor

  bool operator==(const Letter&) const = default;
};

// (vertex identifier asc, then sign +1 < -1); all enumeration orders and the
// normal form derive from this.
inline bool letter_less(const Graph& g, const Letter& a, const Letter& b) {
  if (g.vertex(a.vertex) != g.vertex(b.vertex)) return g.vertex(a.vertex) < g.vertex(b.vertex);
  return a.sign > b.sign;
}

class Word {
 public:
  Word() = default;

  Word(PresentationPtr pres, std::vector<Letter> letters)
      : pres_(std::move(pres)), letters_(std::move(letters)) {
    if (!pres_) throw input_error("word: null presentation");
    for (auto& l : letters_) {
      if (l.vertex < 0 || l.vertex >= static_cast<int>(pres_->graph.num_vertices()))
        throw input_error("word: letter vertex out of range");
      if (l.sign != 1 && l.sign != -1) throw input_error("word: sign must be +1 or -1");
      if (pres_->flavor == Flavor::coxeter) l.sign = 1;  // v = v^-1 in C(graph)
    }
  }

  const PresentationPtr& presentation() const { return pres_; }
  const Graph& graph() const { return pres_->graph; }
  Flavor flavor() const { return pres_->flavor; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool same_sequence(const Word& other) const {
    return letters_ == other.letters_;
  }

  Word inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv) l.sign = -l.sign;
    return Word(pres_, std::move(inv));
  }

  Word concat(const Word& other) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
    return Word(pres_, std::move(ls));
  }

 private:
  PresentationPtr pres_;
  std::vector<Letter> letters_;
};

inline bool letters_commute(const Graph& g, int u, int v) {
  return u == v || g.adjacent(u, v);
}

// Positions (i, j) of a cancelling pair v^e ... v^{-e} (or v ... v for
// coxeter) with everything in between commuting with v.
using CancelWitness = std::pair<std::size_t, std::size_t>;

inline std::optional<CancelWitness> find_cancellation(const Word& w) {
  const Graph& g = w.graph();
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[j].vertex == ls[i].vertex) {
        if (w.flavor() == Flavor::coxeter || ls[j].sign == -ls[i].sign)
          return CancelWitness{i, j};
        continue;  // same sign: commutes with itself, keep walking
      }
      if (!letters_commute(g, ls[i].vertex, ls[j].vertex)) break;
    }
  }
  return std::nullopt;
}

inline bool is_reduced(const Word& w) { return !find_cancellation(w).has_value(); }

inline Word reduce(Word w) {
  auto pres = w.presentation();
  std::vector<Letter> ls = w.letters();
  for (;;) {
    Word cur(pres, ls);
    auto hit = find_cancellation(cur);
    if (!hit) return cur;
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(hit->second));
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(hit->first));
  }
}

// Lexicographically least reduced word equal to w: repeatedly pull the least
// letter that commutes past everything before it to the front.
inline Word normal_form(const Word& w) {
  Word r = reduce(w);
  const Graph& g = r.graph();
  std::vector<Letter> rest = r.letters();
  std::vector<Letter> out;
  while (!rest.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool movable = true;
      for (std::size_t q = 0; q < p; ++q)
        if (!letters_commute(g, rest[q].vertex, rest[p].vertex)) { movable = false; break; }
      if (!movable) continue;
      if (!have || letter_less(g, rest[p], rest[best])) {
        best = p;
        have = true;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Word(r.presentation(), std::move(out));
}

inline bool equal(const Word& u, const Word& w) {
  if (!(*u.presentation() == *w.presentation()))
    throw input_error("word equality: mismatched presentations");
  return normal_form(u).same_sequence(normal_form(w));
}

// Text format: whitespace-separated letters, `a` or `a^-1`. The empty word
// prints as "1". Coxeter input carrying ^-1 is rejected unless
// normalize_signs is set.
inline Word parse_word(const PresentationPtr& pres, const std::string& text,
                       bool normalize_signs = false) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" && letters.empty() && !(in >> tok)) break;
    int sign = 1;
    std::string name = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      if (exp == "-1") sign = -1;
      else if (exp != "1") throw input_error("word: bad exponent in '" + tok + "'");
    }
    if (pres->flavor == Flavor::coxeter && sign == -1 && !normalize_signs)
      throw input_error("word: coxeter letters carry no signs; '" + tok +
                        "' needs sign normalization enabled");
    letters.push_back({pres->graph.index_of(name), sign});
  }
  return Word(pres, std::move(letters));
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.graph().vertex(l.vertex);
    if (l.sign == -1) out += "^-1";
  }
  return out;
}

}  // namespace raag

#endif
