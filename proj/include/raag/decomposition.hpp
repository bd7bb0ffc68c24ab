#ifndef RAAG_DECOMPOSITION_HPP
#define RAAG_DECOMPOSITION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "raag/error.hpp"
#include "raag/surface.hpp"

namespace raag {

// One connected complement component between the two curve neighborhoods,
// with its boundary circles split between them. type.boundary is the circle
// count, type.marked the true marked points.
struct DecompPiece {
  SurfaceType type;
  int to_f1 = 0;
  int to_f2 = 0;

  bool operator==(const DecompPiece&) const = default;
  auto operator<=>(const DecompPiece&) const = default;
};

// A normalized decomposition case: the complement pieces with their gluing
// pattern, the isotopy-class count of the gluing circles, and the admissible
// neighborhood types on each side (named in boundaries-as-marked form).
// Cases are normalized up to swapping the two sides. A connected complement
// may admit several homeomorphism types with the same gluing combinatorics;
// those are alternatives of one case, hence f0_options.
struct DecompositionCase {
  std::vector<std::vector<DecompPiece>> f0_options;
  int alpha = 0;
  int b1 = 0, b2 = 0;        // gluing circles received by F1 / F2
  int zeta1 = 0, zeta2 = 0;
  std::vector<SurfaceType> f1_types;
  std::vector<SurfaceType> f2_types;
  // Bordered (F1, F2) type choices whose gluing reassembles to a closed
  // nonorientable surface of the target two-sided complexity (union over the
  // f0 alternatives).
  std::vector<std::pair<SurfaceType, SurfaceType>> realizable_pairs;
  // Set when the complement has two or more unmarked annulus components, so
  // the class count could drop under a hypothetical chain-merge rule.
  bool alpha_chain_sensitive = false;
};

namespace decomp_detail {

// An unmarked annulus identifies its two boundary circles into one free
// isotopy class; every other component keeps its circles in distinct classes.
inline bool is_plain_annulus(const SurfaceType& t) {
  return t.orientable && t.genus == 0 && t.marked == 0 && t.boundary == 2;
}

inline int alpha_contribution(const DecompPiece& p) {
  return is_plain_annulus(p.type) ? 1 : p.type.boundary;
}

// A gluing circle bounding a disk, a once-marked disk, or a plain Moebius
// band on the complement side would be inessential; such components cannot
// occur next to essential curves.
inline bool inessential_component(const SurfaceType& t) {
  if (t.boundary != 1) return false;
  if (t.orientable && t.genus == 0 && t.marked <= 1) return true;
  if (!t.orientable && t.genus == 1 && t.marked == 0) return true;
  return false;
}

inline bool glue_graph_connected(const std::vector<DecompPiece>& comps) {
  // nodes: 0 = F1, 1 = F2, 2.. = components
  std::size_t n = comps.size() + 2;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    if (x < 2) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        int circles = x == 0 ? comps[c].to_f1 : comps[c].to_f2;
        if (circles > 0 && !seen[c + 2]) { seen[c + 2] = 1; stack.push_back(c + 2); }
      }
    } else {
      const auto& p = comps[x - 2];
      if (p.to_f1 > 0 && !seen[0]) { seen[0] = 1; stack.push_back(0); }
      if (p.to_f2 > 0 && !seen[1]) { seen[1] = 1; stack.push_back(1); }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

inline int bordered_euler(const SurfaceType& as_marked_type, int circles) {
  SurfaceType bordered = as_marked_type;
  bordered.marked -= circles;
  bordered.boundary = circles;
  return euler_characteristic(bordered);
}

}  // namespace decomp_detail

// Exhausts the ways a closed nonorientable surface of two-sided complexity
// `target` can split into two disjoint curve-pair neighborhoods F1, F2 and
// the complement F0, subject to the accounting identity
//   target = zeta(F1) + zeta(F2) + zeta(F0) + alpha.
inline std::vector<DecompositionCase> enumerate_c4_decompositions(
    int target, int max_genus = 2, int max_marked = 5) {
  if (target < 1) throw input_error("enumerate: target must be >= 1");
  if (max_genus < 2 || max_marked < 5)
    throw input_error("enumerate: catalog bounds too small (need genus >= 2, marked >= 5)");

  // Neighborhood-side catalog, keyed by zeta; types in as-marked form.
  std::map<int, std::vector<SurfaceType>> side_types;
  for (int ori = 0; ori < 2; ++ori)
    for (int g = ori ? 0 : 1; g <= max_genus; ++g)
      for (int m = 0; m <= max_marked; ++m) {
        SurfaceType t{ori != 0, g, m, 0};
        int z = zeta(t);
        if (z >= 1 && z < target) side_types[z].push_back(t);
      }

  // Complement-component catalog: bordered pieces with a boundary split.
  std::vector<DecompPiece> comp_catalog;
  for (int ori = 0; ori < 2; ++ori)
    for (int g = ori ? 0 : 1; g <= max_genus; ++g)
      for (int b = 1; b <= 4; ++b)
        for (int m = 0; m + b <= max_marked; ++m) {
          SurfaceType t{ori != 0, g, m, b};
          if (decomp_detail::inessential_component(t)) continue;
          if (zeta(as_marked(t)) >= target) continue;
          if (decomp_detail::alpha_contribution({t, 0, 0}) > target) continue;
          for (int to1 = 0; to1 <= b; ++to1)
            comp_catalog.push_back({t, to1, b - to1});
        }
  std::sort(comp_catalog.begin(), comp_catalog.end());

  // One concrete complement multiset with its side data; merged into
  // DecompositionCase values at the end.
  struct Family {
    std::vector<DecompPiece> f0;
    int alpha = 0;
    int b1 = 0, b2 = 0;
    int zeta1 = 0, zeta2 = 0;
    std::vector<SurfaceType> f1_types;
    std::vector<SurfaceType> f2_types;
    std::vector<std::pair<SurfaceType, SurfaceType>> realizable_pairs;
  };

  std::map<std::string, Family> families;

  auto family_key = [](const Family& c) {
    std::string k = std::to_string(c.alpha) + "|" + std::to_string(c.zeta1) + "," +
                    std::to_string(c.zeta2) + "|";
    for (const auto& p : c.f0)
      k += format_surface(p.type) + ":" + std::to_string(p.to_f1) + "," +
           std::to_string(p.to_f2) + ";";
    return k;
  };

  auto swapped = [](Family c) {
    for (auto& p : c.f0) std::swap(p.to_f1, p.to_f2);
    std::sort(c.f0.begin(), c.f0.end());
    std::swap(c.b1, c.b2);
    std::swap(c.zeta1, c.zeta2);
    std::swap(c.f1_types, c.f2_types);
    for (auto& [a, b] : c.realizable_pairs) std::swap(a, b);
    std::sort(c.realizable_pairs.begin(), c.realizable_pairs.end());
    return c;
  };

  auto consider = [&](std::vector<DecompPiece> comps) {
    int b1 = 0, b2 = 0, alpha = 0, zeta0 = 0;
    for (const auto& p : comps) {
      b1 += p.to_f1;
      b2 += p.to_f2;
      alpha += decomp_detail::alpha_contribution(p);
      zeta0 += zeta(as_marked(p.type));
    }
    if (b1 < 1 || b1 > 4 || b2 < 1 || b2 > 4) return;
    if (alpha < 1 || !decomp_detail::glue_graph_connected(comps)) return;
    int zsum = target - zeta0 - alpha;  // zeta1 + zeta2
    if (zsum < 2) return;
    for (int z1 = 1; z1 < zsum; ++z1) {
      int z2 = zsum - z1;
      Family c;
      c.f0 = comps;
      std::sort(c.f0.begin(), c.f0.end());
      c.alpha = alpha;
      c.b1 = b1;
      c.b2 = b2;
      c.zeta1 = z1;
      c.zeta2 = z2;
      for (const auto& t : side_types[z1])
        if (t.marked >= b1) c.f1_types.push_back(t);
      for (const auto& t : side_types[z2])
        if (t.marked >= b2) c.f2_types.push_back(t);
      if (c.f1_types.empty() || c.f2_types.empty()) continue;
      // Concrete pairs reassembling to a genuine target surface.
      int comp_chi = 0, comp_marked = 0;
      for (const auto& p : c.f0) {
        comp_chi += euler_characteristic(p.type);
        comp_marked += p.type.marked;
      }
      for (const auto& t1 : c.f1_types)
        for (const auto& t2 : c.f2_types) {
          int chi = decomp_detail::bordered_euler(t1, b1) +
                    decomp_detail::bordered_euler(t2, b2) + comp_chi;
          int marked = (t1.marked - b1) + (t2.marked - b2) + comp_marked;
          int genus = 2 - chi;
          if (genus < 1) continue;
          if (xi_two(SurfaceType{false, genus, marked, 0}) == target)
            c.realizable_pairs.emplace_back(t1, t2);
        }
      if (c.realizable_pairs.empty()) continue;
      // Normalize up to the F1/F2 swap: keep the lexicographically least key.
      Family alt = swapped(c);
      std::string k = family_key(c), ka = family_key(alt);
      if (ka < k) { c = std::move(alt); k = std::move(ka); }
      families.emplace(std::move(k), std::move(c));
    }
  };

  // Multisets of up to `target` components, non-decreasing over the catalog,
  // pruned by the alpha budget.
  std::vector<DecompPiece> current;
  auto build = [&](auto&& self, std::size_t start, int alpha_so_far) -> void {
    if (!current.empty()) consider(current);
    if (static_cast<int>(current.size()) >= target) return;
    for (std::size_t i = start; i < comp_catalog.size(); ++i) {
      int a = decomp_detail::alpha_contribution(comp_catalog[i]);
      if (alpha_so_far + a > target) continue;
      current.push_back(comp_catalog[i]);
      self(self, i, alpha_so_far + a);
      current.pop_back();
    }
  };
  build(build, 0, 0);

  // A connected complement with a fixed circle split may have several
  // admissible homeomorphism types; those families collapse to one case with
  // f0 alternatives. Disconnected complements stay distinct cases.
  auto case_key = [&](const Family& c) {
    std::string k = std::to_string(c.alpha) + "|" + std::to_string(c.zeta1) + "," +
                    std::to_string(c.zeta2) + "|" + std::to_string(c.b1) + "," +
                    std::to_string(c.b2) + "|";
    for (const auto& t : c.f1_types) k += format_surface(t) + ",";
    k += "|";
    for (const auto& t : c.f2_types) k += format_surface(t) + ",";
    if (c.f0.size() != 1) k += "|" + family_key(c);  // no merging across multisets
    return k;
  };

  std::map<std::string, DecompositionCase> merged;
  for (auto& [k, fam] : families) {
    DecompositionCase& c = merged[case_key(fam)];
    c.f0_options.push_back(fam.f0);
    c.alpha = fam.alpha;
    c.b1 = fam.b1;
    c.b2 = fam.b2;
    c.zeta1 = fam.zeta1;
    c.zeta2 = fam.zeta2;
    c.f1_types = fam.f1_types;
    c.f2_types = fam.f2_types;
    c.realizable_pairs.insert(c.realizable_pairs.end(), fam.realizable_pairs.begin(),
                              fam.realizable_pairs.end());
    int annuli = 0;
    for (const auto& p : fam.f0)
      if (decomp_detail::is_plain_annulus(p.type)) ++annuli;
    if (annuli >= 2) c.alpha_chain_sensitive = true;
  }
  std::vector<DecompositionCase> out;
  for (auto& [k, c] : merged) {
    std::sort(c.f0_options.begin(), c.f0_options.end());
    std::sort(c.realizable_pairs.begin(), c.realizable_pairs.end());
    c.realizable_pairs.erase(std::unique(c.realizable_pairs.begin(), c.realizable_pairs.end()),
                             c.realizable_pairs.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace raag

#endif
