#include "cox/verify.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cox/nerve.hpp"

namespace cox {
namespace {

std::string word_str(const CoxeterMatrix& M, const Element& e) {
  return e.is_identity() ? std::string("e") : M.format_word(e.word);
}

std::string word_str(const CoxeterMatrix& M, const Word& w) {
  return w.empty() ? std::string("e") : M.format_word(w);
}

void sort_cells(std::vector<CellKey>& cs) {
  std::sort(cs.begin(), cs.end(), cell_less);
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

std::vector<CellKey> cell_difference(const std::vector<CellKey>& a,
                                     const std::vector<CellKey>& b) {
  std::vector<CellKey> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      cell_less);
  return out;
}

std::vector<CellKey> cell_intersection(const std::vector<CellKey>& a,
                                       const std::vector<CellKey>& b) {
  std::vector<CellKey> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        cell_less);
  return out;
}

// Pushes one failure describing how the sorted cell lists differ; no-op when equal.
void report_diff(CheckReport& rep, const BallComplex& B, const std::string& what,
                 const std::vector<CellKey>& lhs, const std::vector<CellKey>& rhs) {
  std::vector<CellKey> lonly = cell_difference(lhs, rhs);
  std::vector<CellKey> ronly = cell_difference(rhs, lhs);
  if (lonly.empty() && ronly.empty()) return;
  std::string msg = what + ": " + std::to_string(lonly.size()) + " cells on the left only, " +
                    std::to_string(ronly.size()) + " on the right only";
  for (std::size_t i = 0; i < lonly.size() && i < 3; ++i)
    msg += "; left " + B.format_cell(lonly[i]);
  for (std::size_t i = 0; i < ronly.size() && i < 3; ++i)
    msg += "; right " + B.format_cell(ronly[i]);
  rep.failures.push_back(msg);
}

const RuinComponent& identity_component(const std::vector<RuinComponent>& comps) {
  // ruin_components sorts the identity's component first.
  return comps.front();
}

}  // namespace

CheckReport check_blockers_stay_left(const CoxeterSystem& W, int radius) {
  CheckReport rep{"2.1", "letters that cannot hop the bond stay left of every t"};
  const CoxeterMatrix& M = W.matrix();
  GroupBall ball = W.ball(radius);
  for (int id = 1; id < ball.size(); ++id) {
    const Element& g = ball.element(id);
    std::vector<Word> words = W.reduced_words(g.word);
    for (Gen t : set_members(g.support)) {
      // Blockers: letters r of some t-free prefix w (with r absent from the
      // matching suffix v) whose bond with t is not a plain commutation.
      GenSet blockers = 0;
      for (const Word& w : words) {
        GenSet pre = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] == t) {
            // Only the first t admits a t-free prefix.
            GenSet post = 0;
            for (std::size_t j = i + 1; j < w.size(); ++j) post = set_add(post, w[j]);
            for (Gen r : set_members(pre & ~post))
              if (M.order(r, t) != 2) blockers = set_add(blockers, r);
            break;
          }
          pre = set_add(pre, w[i]);
        }
      }
      for (Gen r : set_members(blockers)) {
        ++rep.instances;
        for (const Word& w : words) {
          int last_r = -1, first_t = -1;
          for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            if (w[i] == r) last_r = i;
            if (w[i] == t && first_t < 0) first_t = i;
          }
          if (last_r > first_t) {
            rep.failures.push_back("element " + word_str(M, g) + ": word " + word_str(M, w) +
                                   " puts " + M.name(r) + " right of " + M.name(t));
            break;
          }
        }
      }
    }
  }
  rep.facts.push_back("elements examined: " + std::to_string(ball.size() - 1));
  return rep;
}

CheckReport check_prefix_confinement(const CoxeterSystem& W, int radius) {
  CheckReport rep{"2.2", "prefixes of t s t ... splits stay inside the pair commuters"};
  const CoxeterMatrix& M = W.matrix();
  GroupBall ball = W.ball(radius);
  long long starts = 0;
  for (Gen t = 0; t < static_cast<Gen>(M.rank()); ++t) {
    GenNeighborhood nh = neighborhood(M, t);
    for (Gen s : set_members(nh.heavy)) {
      GenSet ust = nh.pair_commuters.at(s);
      GenSet allowed_suffix = set_add(set_add(ust, s), t);
      GenSet allowed_prefix = set_add(ust, s);
      for (int id = 0; id < ball.size(); ++id) {
        if (ball.length(id) < 3) continue;
        const Element& g = ball.element(id);
        if (!set_contains(W.left_descents(g), t)) continue;
        Element g1 = W.left_mul(t, g);
        if (!set_contains(W.left_descents(g1), s)) continue;
        Element g2 = W.left_mul(s, g1);
        if (!set_contains(W.left_descents(g2), t)) continue;
        ++starts;
        for (const Word& w : W.reduced_words(g.word)) {
          GenSet pre = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == t) {
              GenSet post = 0;
              for (std::size_t j = i + 1; j < w.size(); ++j) post = set_add(post, w[j]);
              if ((post & ~allowed_suffix) == 0) {
                ++rep.instances;
                if ((pre & ~allowed_prefix) != 0) {
                  rep.failures.push_back(
                      "element " + word_str(M, g) + ", word " + word_str(M, w) +
                      ", split after position " + std::to_string(i) + ": prefix uses " +
                      M.format_set(pre & ~allowed_prefix));
                }
              }
              break;
            }
            pre = set_add(pre, w[i]);
          }
        }
      }
    }
  }
  rep.facts.push_back("elements with a t s t start: " + std::to_string(starts));
  return rep;
}

CheckReport check_heavy_partners_unbonded(const CoxeterMatrix& M) {
  CheckReport rep{"3.1", "heavy partners of one generator never span a finite bond"};
  SimplicialComplex L = build_nerve(M);
  GenSet witness = 0;
  if (!is_flag(L, &witness)) {
    rep.facts.push_back("nerve is not flag (no face " + M.format_set(witness) +
                        "); hypothesis void, nothing to check");
    return rep;
  }
  rep.facts.push_back("nerve is flag");
  for (Gen t = 0; t < static_cast<Gen>(M.rank()); ++t) {
    std::vector<Gen> heavy = set_members(neighborhood(M, t).heavy);
    for (std::size_t i = 0; i < heavy.size(); ++i)
      for (std::size_t j = i + 1; j < heavy.size(); ++j) {
        ++rep.instances;
        if (M.order(heavy[i], heavy[j]) != kInfinity)
          rep.failures.push_back("t = " + M.name(t) + ": heavy partners " + M.name(heavy[i]) +
                                 ", " + M.name(heavy[j]) + " have bond " +
                                 std::to_string(M.order(heavy[i], heavy[j])));
      }
  }
  return rep;
}

CheckReport check_two_even_colors(const BallComplex& B, Gen t) {
  CheckReport rep{"3.2", "two even colors force t and a unique heavy partner"};
  const CoxeterSystem& W = B.system();
  const CoxeterMatrix& M = B.matrix();
  GenNeighborhood nh = neighborhood(M, t);
  const SphericalPoset& P = M.spherical_poset();

  // Subset level: a spherical type through a heavy pair extends it only by
  // letters commuting with both members.
  for (Gen s : set_members(nh.heavy)) {
    GenSet st = set_add(set_add(GenSet{0}, s), t);
    for (GenSet T : P.at_least(st))
      for (Gen u : set_members(T & ~st)) {
        ++rep.instances;
        if (M.order(u, t) != 2 || M.order(u, s) != 2)
          rep.failures.push_back("type " + M.format_set(T) + ": member " + M.name(u) +
                                 " fails to commute with the pair " + M.format_set(st));
      }
  }

  // Cell level, on the identity component of the t-ruin.
  std::vector<RuinComponent> comps = ruin_components(B, t);
  const RuinComponent& comp0 = identity_component(comps);
  Coloring col = color_vertices(B, comp0);
  long long multi = 0, multi_even = 0;
  for (const CellKey& c : comp0.cells) {
    if (c.type == 0) continue;
    std::vector<int> verts = B.vertices_of(c);
    std::set<std::string> colors;
    std::map<std::string, int> even_rep;  // even color -> one vertex wearing it
    for (int v : verts) {
      const std::string& k = col.color_at(v);
      colors.insert(k);
      if (col.parity.at(k) == 0) even_rep.emplace(k, v);
    }
    if (colors.size() >= 2) {
      ++rep.instances;
      ++multi;
      if (!set_contains(c.type, t))
        rep.failures.push_back("cell " + B.format_cell(c) + " has " +
                               std::to_string(colors.size()) + " colors but no " + M.name(t));
    }
    if (even_rep.size() >= 2) {
      ++rep.instances;
      ++multi_even;
      GenSet hs = c.type & nh.heavy;
      if (set_size(hs) != 1 || !set_contains(c.type, t)) {
        rep.failures.push_back("cell " + B.format_cell(c) + " has " +
                               std::to_string(even_rep.size()) +
                               " even colors but heavy members " + M.format_set(hs));
        continue;
      }
      Gen s = set_members(hs).front();
      std::vector<int> reps;
      for (const auto& [k, v] : even_rep) reps.push_back(v);
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          Element d = W.multiply(W.inverse(B.ball().element(reps[i])),
                                 B.ball().element(reps[j]));
          int cnt = W.letter_count(d, t);
          if (cnt < 2 || cnt % 2 != 0 || !set_contains(d.support, s))
            rep.failures.push_back("cell " + B.format_cell(c) + ": even-color difference " +
                                   word_str(M, d) + " is not a t-even element through " +
                                   M.name(s));
        }
    }
  }
  rep.facts.push_back("multi-colored cells: " + std::to_string(multi));
  rep.facts.push_back("cells with two or more even colors: " + std::to_string(multi_even));
  return rep;
}

CheckReport check_alternating_words_reduced(const CoxeterSystem& W) {
  CheckReport rep{"3.3", "alternating pair words are reduced on both sides of the coset"};
  const CoxeterMatrix& M = W.matrix();
  for (Gen t = 0; t < static_cast<Gen>(M.rank()); ++t) {
    GenNeighborhood nh = neighborhood(M, t);
    GenSet around = set_remove(nh.U, t);
    for (Gen s : set_members(nh.heavy)) {
      int m = M.order(s, t);
      for (int len = 3; len <= 7 && len <= m - 1; len += 2) {
        ++rep.instances;
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? t : s);
        Element u = W.normal_form(w);
        if (u.length() != len)
          rep.failures.push_back("word " + word_str(M, w) + " is not reduced");
        else if (!W.is_reduced_for_cosets(u, around, around))
          rep.failures.push_back("word " + word_str(M, w) +
                                 " has a descent inside U - t on some side");
      }
    }
  }
  return rep;
}

CheckReport check_same_color_disjoint(const BallComplex& B, Gen t) {
  CheckReport rep{"3.5", "same-colored collars have disjoint bodies"};
  std::vector<RuinComponent> comps = ruin_components(B, t);
  const RuinComponent& comp0 = identity_component(comps);
  std::vector<Collar> cs = collars(B, comp0);
  Coloring col = color_vertices(B, comp0);
  std::map<std::string, std::vector<int>> classes = color_classes(col, cs);
  for (const auto& [color, idx] : classes)
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        ++rep.instances;
        std::vector<CellKey> shared = color_intersection(cs, {idx[i]}, {idx[j]});
        if (!shared.empty())
          rep.failures.push_back("collars " + std::to_string(idx[i]) + " and " +
                                 std::to_string(idx[j]) + " share color yet meet in " +
                                 std::to_string(shared.size()) + " cells, e.g. " +
                                 B.format_cell(shared.front()));
      }
  rep.facts.push_back("collars: " + std::to_string(cs.size()) + ", colors: " +
                      std::to_string(classes.size()));
  return rep;
}

CheckReport verify_evens_isomorphism(const BallComplex& B, Gen s, Gen t) {
  CheckReport rep{"3.6", "the even collar overlap is the commuting subsystem's truncation"};
  const CoxeterSystem& W = B.system();
  const CoxeterMatrix& M = B.matrix();
  GenNeighborhood nh = neighborhood(M, t);
  if (!set_contains(nh.heavy, s))
    throw DomainError("verify_evens_isomorphism: " + M.name(s) + " is not a heavy partner of " +
                      M.name(t));
  int m = M.order(s, t);
  GenSet ust = nh.pair_commuters.at(s);
  GenSet st = set_add(set_add(GenSet{0}, s), t);
  GenSet around = set_remove(nh.U, t);

  // The two collar bodies, named by the coset minima e and t s t.
  Element u = W.normal_form({t, s, t});
  int id_u = B.ball().find(u);
  std::vector<GenSet> filter = chamber_filter_types(M, nh.U, t);
  auto body_of = [&](int rep_vertex) {
    std::vector<CellKey> body;
    for (int v = 0; v < B.ball().size(); ++v) {
      if (B.ball().min_rep_in_coset(v, around) != rep_vertex) continue;
      std::vector<CellKey> ch = B.chamber(v, &filter);
      body.insert(body.end(), ch.begin(), ch.end());
    }
    sort_cells(body);
    return body;
  };
  std::vector<CellKey> overlap = cell_intersection(body_of(0), body_of(id_u));
  rep.facts.push_back("overlap cells: " + std::to_string(overlap.size()));

  // (a) The overlap equals the in-ball cells named by a vertex of the
  // pair-commuter subsystem with a type extending {s, t} inside it.
  std::vector<GenSet> types_st;
  for (GenSet Bp : M.spherical_poset().sets) {
    if ((Bp & ~ust) != 0) continue;
    GenSet T = Bp | st;
    if (!M.spherical_poset().contains(T)) {
      rep.failures.push_back("commuting extension " + M.format_set(T) + " is not spherical");
      continue;
    }
    types_st.push_back(T);
  }
  std::vector<CellKey> spanned;
  for (int v = 0; v < B.ball().size(); ++v) {
    if ((B.ball().element(v).support & ~ust) != 0) continue;
    for (GenSet T : types_st) {
      CellKey c = B.canonical(v, T);
      if (B.has_cell(c)) spanned.push_back(c);
    }
  }
  sort_cells(spanned);
  rep.instances += static_cast<long long>(overlap.size());
  report_diff(rep, B, "overlap vs spanned cells", overlap, spanned);

  if (B.radius() < m) {
    // No cell of a type through {s, t} fits yet, so the overlap must vanish.
    rep.facts.push_back("radius below the bond order " + std::to_string(m) +
                        "; the overlap must be empty");
    if (!overlap.empty())
      rep.failures.push_back("overlap holds " + std::to_string(overlap.size()) +
                             " cells inside radius " + std::to_string(B.radius()));
    return rep;
  }

  if (ust == 0) {
    rep.facts.push_back("subsystem is empty; the overlap is a single cell");
    if (overlap.size() != 1 || overlap.front().type != st || overlap.front().rep != 0)
      rep.failures.push_back("overlap is not the single identity cell of the pair type");
    return rep;
  }

  // (b) Relabel through the pair commuters and compare with that subsystem's
  // own ball truncation of radius R - m, cell-for-cell and order-for-order.
  CoxeterMatrix sub = M.restrict_to(ust);
  std::vector<Gen> to_sub(static_cast<std::size_t>(M.rank()), Gen{0});
  for (Gen g = 0; g < static_cast<Gen>(sub.rank()); ++g)
    to_sub[M.generator(sub.name(g))] = g;
  CoxeterSystem sub_sys(sub);
  BallComplex sub_complex(sub_sys.ball(B.radius() - m));
  rep.facts.push_back("subsystem rank " + std::to_string(sub.rank()) + ", truncation radius " +
                      std::to_string(B.radius() - m) + ", cells " +
                      std::to_string(sub_complex.cells().size()));

  std::vector<CellKey> image;
  image.reserve(overlap.size());
  bool mapped_ok = true;
  for (const CellKey& c : overlap) {
    const Element& w = B.ball().element(c.rep);
    if ((w.support & ~ust) != 0 || (c.type & st) != st) {
      rep.failures.push_back("overlap cell " + B.format_cell(c) +
                             " is not named inside the subsystem");
      mapped_ok = false;
      break;
    }
    Word relabeled;
    relabeled.reserve(w.word.size());
    for (Gen g : w.word) relabeled.push_back(to_sub[g]);
    GenSet type_sub = 0;
    for (Gen g : set_members(c.type & ~st)) type_sub = set_add(type_sub, to_sub[g]);
    int vid = sub_complex.ball().find(sub_sys.normal_form(relabeled));
    if (vid < 0) {
      rep.failures.push_back("overlap cell " + B.format_cell(c) +
                             " lands outside the subsystem truncation");
      mapped_ok = false;
      break;
    }
    CellKey img{vid, type_sub};
    if (!sub_complex.has_cell(img) || sub_complex.canonical(vid, type_sub) != img) {
      rep.failures.push_back("overlap cell " + B.format_cell(c) +
                             " does not map onto a canonical subsystem cell");
      mapped_ok = false;
      break;
    }
    image.push_back(img);
  }
  if (mapped_ok) {
    std::vector<CellKey> sorted_image = image;
    sort_cells(sorted_image);
    if (sorted_image.size() != image.size())
      rep.failures.push_back("relabeling is not injective on the overlap");
    report_diff(rep, sub_complex, "image vs subsystem cells", sorted_image,
                sub_complex.cells());
    if (rep.pass()) {
      for (std::size_t i = 0; i < overlap.size(); ++i)
        for (std::size_t j = 0; j < overlap.size(); ++j) {
          if (i == j) continue;
          ++rep.instances;
          if (B.cell_subset(overlap[i], overlap[j]) !=
              sub_complex.cell_subset(image[i], image[j])) {
            rep.failures.push_back("containment of " + B.format_cell(overlap[i]) + " in " +
                                   B.format_cell(overlap[j]) +
                                   " is not mirrored in the subsystem");
            i = overlap.size();
            break;
          }
        }
    }
  }

  // (c) When the subsystem is two-dimensional its truncation must look like a
  // surface away from the rim: each interior edge lies in exactly two 2-cells.
  int top_dim = 0;
  for (GenSet T : sub.spherical_poset().sets) top_dim = std::max(top_dim, set_size(T));
  rep.facts.push_back("subsystem top cell dimension " + std::to_string(top_dim));
  if (top_dim == 2 && rep.pass()) {
    long long interior = 0;
    for (const CellKey& c : sub_complex.cells()) {
      if (set_size(c.type) != 1) continue;
      std::vector<int> ends = sub_complex.vertices_of(c);
      bool safe = true;
      for (int v : ends) safe = safe && sub_complex.vertex_safe(v);
      if (!safe) continue;
      ++interior;
      ++rep.instances;
      int twos = 0;
      for (const CellKey& cf : sub_complex.cofaces_of(c))
        if (set_size(cf.type) == 2) ++twos;
      if (twos != 2)
        rep.failures.push_back("interior edge " + sub_complex.format_cell(c) + " lies in " +
                               std::to_string(twos) + " 2-cells");
    }
    for (int v = 0; v < sub_complex.ball().size(); ++v) {
      if (!sub_complex.vertex_safe(v)) continue;
      bool in_two = false;
      for (const CellKey& c : sub_complex.chamber(v))
        if (set_size(c.type) == 2) in_two = true;
      if (!in_two)
        rep.failures.push_back("safe subsystem vertex " +
                               word_str(sub, sub_complex.ball().element(v)) +
                               " lies in no 2-cell");
    }
    if (interior == 0)
      rep.failures.push_back("no interior edges at this radius; surface battery is vacuous");
    else
      rep.facts.push_back("interior edges checked: " + std::to_string(interior));
  }
  return rep;
}

CheckReport check_odd_meets_evens(const BallComplex& B, Gen t) {
  CheckReport rep{"3.10", "odd collars meet the even region exactly in their inner rim"};
  std::vector<RuinComponent> comps = ruin_components(B, t);
  const RuinComponent& comp0 = identity_component(comps);
  std::vector<Collar> cs = collars(B, comp0);
  Coloring col = color_vertices(B, comp0);
  std::map<std::string, std::vector<int>> classes = color_classes(col, cs);
  std::vector<int> evens, odds;
  for (const auto& [color, idx] : classes) {
    std::vector<int>& side = col.parity.at(color) == 0 ? evens : odds;
    side.insert(side.end(), idx.begin(), idx.end());
  }
  std::sort(evens.begin(), evens.end());
  std::sort(odds.begin(), odds.end());
  for (int d : odds) {
    ++rep.instances;
    std::vector<CellKey> met = color_intersection(cs, {d}, evens);
    report_diff(rep, B, "odd collar " + std::to_string(d) + " against its inner rim", met,
                cs[d].inner);
  }
  rep.facts.push_back("even collars: " + std::to_string(evens.size()) + ", odd collars: " +
                      std::to_string(odds.size()));
  return rep;
}

CheckReport classify_codim1_faces(const Ruin& r) {
  CheckReport rep{"4.1", "codimension-1 faces of ruin tops are shared in pairs or free"};
  if (set_size(r.T) != 2)
    throw DomainError("classify_codim1_faces needs a two-letter filter");
  const BallComplex& B = *r.ball;
  const CoxeterSystem& W = B.system();
  const CoxeterMatrix& M = B.matrix();

  std::vector<CellKey> tops;
  for (const CellKey& c : r.omega)
    if (set_size(c.type) == 4) tops.push_back(c);
  rep.facts.push_back("top cells: " + std::to_string(tops.size()));
  if (tops.empty()) {
    rep.facts.push_back("no top-dimensional cells inside the ball; nothing to classify");
    return rep;
  }

  std::unordered_map<CellKey, std::vector<GenSet>, CellKeyHash> by_face;
  for (const CellKey& top : tops)
    for (const CellKey& f : B.faces_of(top))
      if (set_size(f.type) == 3) by_face[f].push_back(top.type);
  std::vector<std::pair<CellKey, std::vector<GenSet>>> faces(by_face.begin(), by_face.end());
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) { return cell_less(a.first, b.first); });

  long long shared = 0, free_faces = 0;
  std::set<std::tuple<GenSet, GenSet, GenSet>> patterns;
  for (const auto& [f, top_types] : faces) {
    ++rep.instances;
    if (top_types.size() > 2) {
      rep.failures.push_back("face " + B.format_cell(f) + " lies in " +
                             std::to_string(top_types.size()) + " tops");
      continue;
    }
    if (top_types.size() == 2) {
      ++shared;
      if ((f.type & r.T) != r.T) {
        rep.failures.push_back("shared face " + B.format_cell(f) +
                               " drops a filter letter");
        continue;
      }
      GenSet a = top_types[0], b = top_types[1];
      if (a == b) {
        rep.failures.push_back("face " + B.format_cell(f) + " is shared by two tops of type " +
                               M.format_set(a));
        continue;
      }
      if (set_less(b, a)) std::swap(a, b);
      patterns.insert({f.type, a, b});
    } else {
      ++free_faces;
    }
  }
  rep.facts.push_back("shared faces: " + std::to_string(shared) + ", free faces: " +
                      std::to_string(free_faces));

  for (const auto& [base, ta, tb] : patterns) {
    ++rep.instances;
    Gen ra = set_members(ta & ~base).front();
    Gen qb = set_members(tb & ~base).front();
    if (M.order(ra, qb) != kInfinity) {
      rep.failures.push_back("pattern " + M.format_set(base) + " + " + M.name(ra) + "/" +
                             M.name(qb) + ": extending letters have finite bond " +
                             std::to_string(M.order(ra, qb)));
      continue;
    }
    // Walk of top cells glued along the shared faces, driven by alternating
    // translates: ..., r q W_a, r W_b, W_a, W_b, q W_a, q r W_b, ...
    auto count_from = [&](bool forward) {
      Element p;  // identity
      int count = 0;
      for (int k = 0;; ++k) {
        GenSet type;
        if (forward) {
          type = (k % 2 == 0) ? ta : tb;
          if (k >= 2) p = W.right_mul(p, (k % 2 == 0) ? qb : ra);
        } else {
          type = (k % 2 == 0) ? tb : ta;
          p = W.right_mul(p, (k % 2 == 0) ? ra : qb);
        }
        int vid = B.ball().find(p);
        if (vid < 0) break;
        if (!B.has_cell(B.canonical(vid, type))) break;
        ++count;
      }
      return count;
    };
    int fwd = count_from(true);
    int bwd = count_from(false);
    rep.facts.push_back("shared pattern base=" + M.format_set(base) + " tops=+" + M.name(ra) +
                        ",+" + M.name(qb) + " bond=infinity walk back=" + std::to_string(bwd) +
                        " forward=" + std::to_string(fwd) + " walk_length=" +
                        std::to_string(fwd + bwd));
  }
  return rep;
}

CheckReport verify_excision(const BallComplex& B, GenSet V, GenSet T) {
  CheckReport rep{"excision", "boundary collapse identities for relative chains"};
  const CoxeterMatrix& M = B.matrix();
  if ((T & V) != T || !M.spherical_poset().contains(T))
    throw DomainError("verify_excision: filter must be a spherical subset of the ambient set");
  auto cells_within = [&](GenSet A) {
    std::vector<CellKey> out;
    for (const CellKey& c : B.cells())
      if ((c.type & ~A) == 0) out.push_back(c);
    return out;  // cell_less order inherited from B.cells()
  };

  Ruin rv = build_ruin(B, V, T);
  std::vector<CellKey> lhs = cell_difference(rv.omega, rv.boundary);
  std::vector<CellKey> rhs = cell_difference(cells_within(V), rv.hat);
  rep.instances += static_cast<long long>(lhs.size());
  report_diff(rep, B, "interior of the ruin vs complement of the hat", lhs, rhs);
  rep.facts.push_back("ambient " + M.format_set(V) + ", filter " + M.format_set(T) +
                      ": interior cells " + std::to_string(lhs.size()));

  for (Gen s : set_members(T)) {
    GenSet Ts = set_remove(T, s);
    GenSet Vs = set_remove(V, s);
    Ruin rv_minor = build_ruin(B, V, Ts);
    Ruin rs = build_ruin(B, Vs, Ts);
    std::vector<CellKey> small = cell_difference(cells_within(Vs), rs.hat);
    std::vector<CellKey> pair = cell_difference(rv.hat, rv_minor.hat);
    rep.instances += static_cast<long long>(small.size());
    report_diff(rep, B, "dropping " + M.name(s) + ": small pair vs hat pair", small, pair);
  }
  return rep;
}

}  // namespace cox
