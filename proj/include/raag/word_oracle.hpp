#ifndef RAAG_WORD_ORACLE_HPP
#define RAAG_WORD_ORACLE_HPP

#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "raag/error.hpp"
#include "raag/word.hpp"

namespace raag {

// Brute-force ground truth for the word problem, independent of the
// reduction/normal-form path: breadth-first closure of a word under
// elementary moves (adjacent commuting swap, adjacent inverse-pair
// cancellation, vv cancellation in coxeter, and bounded inverse-pair
// insertion). Desk scale only: words of length <= 8 over <= 6 vertices.
namespace oracle {

struct budget_exhausted : std::runtime_error {
  budget_exhausted() : std::runtime_error("oracle: budget exhausted without decision") {}
};

namespace detail {

inline std::string encode(const std::vector<Letter>& ls) {
  std::string s;
  s.reserve(ls.size());
  for (const auto& l : ls)
    s.push_back(static_cast<char>(l.vertex * 2 + (l.sign == -1 ? 1 : 0)));
  return s;
}

inline std::vector<Letter> decode(const std::string& s) {
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char c : s)
    ls.push_back({static_cast<unsigned char>(c) / 2,
                  (static_cast<unsigned char>(c) % 2) ? -1 : 1});
  return ls;
}

// Closure under swap + cancel (length never grows). If insert_limit > 0,
// inverse-pair insertions are also applied while the word stays within
// insert_limit letters. Throws budget_exhausted past max_states.
inline std::unordered_set<std::string> closure(const Word& w, std::size_t insert_limit,
                                               std::size_t max_states = 2000000) {
  const Graph& g = w.graph();
  const bool coxeter = w.flavor() == Flavor::coxeter;
  const int nverts = static_cast<int>(g.num_vertices());
  std::unordered_set<std::string> seen;
  std::deque<std::string> todo;
  auto add = [&](const std::string& s) {
    auto [it, fresh] = seen.insert(s);
    if (fresh) {
      if (seen.size() > max_states) throw budget_exhausted();
      todo.push_back(s);
    }
  };
  add(encode(w.letters()));
  auto vert = [](char c) { return static_cast<unsigned char>(c) / 2; };
  auto sign = [](char c) { return (static_cast<unsigned char>(c) % 2) ? -1 : 1; };
  while (!todo.empty()) {
    std::string s = std::move(todo.front());
    todo.pop_front();
    const std::size_t n = s.size();
    for (std::size_t p = 0; p + 1 < n; ++p) {
      int u = vert(s[p]), v = vert(s[p + 1]);
      if (u == v) {
        if (coxeter || sign(s[p]) == -sign(s[p + 1])) {
          std::string t = s.substr(0, p) + s.substr(p + 2);
          add(t);
        }
        if (s[p] != s[p + 1]) {  // same vertex, different signs: commuting swap
          std::string t = s;
          std::swap(t[p], t[p + 1]);
          add(t);
        }
      } else if (g.adjacent(u, v)) {
        std::string t = s;
        std::swap(t[p], t[p + 1]);
        add(t);
      }
    }
    if (insert_limit > 0 && n + 2 <= insert_limit) {
      for (std::size_t p = 0; p <= n; ++p) {
        for (int vtx = 0; vtx < nverts; ++vtx) {
          for (int e : {1, -1}) {
            if (coxeter && e == -1) continue;
            char a = static_cast<char>(vtx * 2 + (e == -1 ? 1 : 0));
            char b = coxeter ? a : static_cast<char>(vtx * 2 + (e == -1 ? 0 : 1));
            std::string t = s.substr(0, p);
            t.push_back(a);
            t.push_back(b);
            t += s.substr(p);
            add(t);
          }
        }
      }
    }
  }
  return seen;
}

}  // namespace detail

// True iff u and w represent the same element, decided by intersecting the
// bounded move-closures. The budget bounds how many inverse pairs may be
// inserted beyond the longer input.
inline bool oracle_equal(const Word& u, const Word& w, std::size_t move_budget) {
  if (!(*u.presentation() == *w.presentation()))
    throw input_error("oracle: mismatched presentations");
  std::size_t limit = std::max(u.size(), w.size()) + 2 * move_budget;
  auto cu = detail::closure(u, limit);
  auto cw = detail::closure(w, limit);
  const auto& small = cu.size() <= cw.size() ? cu : cw;
  const auto& large = cu.size() <= cw.size() ? cw : cu;
  for (const auto& s : small)
    if (large.count(s)) return true;
  return false;
}

// Canonical representative computed purely from moves: among the shortest
// words in the swap/cancel closure, the lexicographically least under the
// letter order.
inline Word oracle_normal_form(const Word& w) {
  auto cl = detail::closure(w, 0);
  const Graph& g = w.graph();
  const std::string* best = nullptr;
  for (const auto& s : cl) {
    if (!best) { best = &s; continue; }
    if (s.size() < best->size()) { best = &s; continue; }
    if (s.size() > best->size()) continue;
    // lexicographic under (vertex id asc, sign + before -)
    auto av = detail::decode(s);
    auto bv = detail::decode(*best);
    for (std::size_t i = 0; i < av.size(); ++i) {
      if (av[i] == bv[i]) continue;
      if (letter_less(g, av[i], bv[i])) best = &s;
      break;
    }
  }
  return Word(w.presentation(), best ? detail::decode(*best) : std::vector<Letter>{});
}

}  // namespace oracle

using oracle::oracle_equal;
using oracle::oracle_normal_form;

}  // namespace raag

#endif
