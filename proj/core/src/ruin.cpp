#include "cox/ruin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cox/nerve.hpp"

namespace cox {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int index_of(const std::vector<CellKey>& sorted, const CellKey& c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c, cell_less);
  if (it == sorted.end() || !(*it == c)) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Union each cell with its codimension-1 faces; connectivity then follows the
// underlying polyhedra (two cells touching in any common face end up joined,
// because both chains reach the shared vertices).
void join_codim1(const BallComplex& B, const std::vector<CellKey>& cells, UnionFind& uf) {
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    const CellKey& c = cells[i];
    if (c.type == 0) continue;
    auto members = B.vertices_of(c);
    for (Gen g : set_members(c.type)) {
      GenSet sub = set_remove(c.type, g);
      for (int v : members) {
        int j = index_of(cells, B.canonical(v, sub));
        if (j >= 0) uf.unite(i, j);
      }
    }
  }
}

}  // namespace

Ruin build_ruin(const BallComplex& B, GenSet U, GenSet T) {
  const CoxeterMatrix& M = B.matrix();
  if ((T & U) != T || !M.is_spherical(T))
    throw DomainError("ruin parameter must be a spherical subset of U");
  Ruin r;
  r.U = U;
  r.T = T;
  r.ball = &B;
  for (const CellKey& c : B.cells()) {
    if ((c.type & U) != c.type) continue;
    bool contains_T = (c.type & T) == T;
    GenSet K = c.type | T;
    if (M.is_spherical(K) && B.has_cell(B.canonical(c.rep, K))) {
      r.omega.push_back(c);
      if (!contains_T) r.boundary.push_back(c);
    }
    if (!contains_T) r.hat.push_back(c);
  }
  return r;
}

std::vector<RuinComponent> ruin_components(const BallComplex& B, Gen t) {
  const CoxeterMatrix& M = B.matrix();
  if (t >= M.rank()) throw DomainError("unknown generator");
  GenSet U = neighborhood(M, t).U;
  GenSet tbit = set_add(0, t);

  std::vector<CellKey> cells;
  for (const CellKey& c : B.cells())
    if (M.is_spherical(c.type | tbit)) cells.push_back(c);

  UnionFind uf(static_cast<int>(cells.size()));
  join_codim1(B, cells, uf);

  std::map<int, RuinComponent> by_root;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    RuinComponent& comp = by_root[uf.find(i)];
    comp.cells.push_back(cells[i]);
    if (cells[i].type == 0) comp.vertices.push_back(cells[i].rep);
  }

  std::vector<RuinComponent> out;
  for (auto& [root, comp] : by_root) {
    comp.t = t;
    comp.U = U;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.rep_id = B.ball().min_rep_in_coset(comp.vertices.front(), U);
    comp.coset_rep = B.ball().element(comp.rep_id);
    for (int v : comp.vertices)
      if (B.ball().min_rep_in_coset(v, U) != comp.rep_id)
        throw DomainError("ruin component spans more than one coset");
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const RuinComponent& a, const RuinComponent& b) {
    if (a.rep_id != b.rep_id) return a.rep_id < b.rep_id;
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

std::vector<Collar> collars(const BallComplex& B, const RuinComponent& comp) {
  GenSet tbit = set_add(0, comp.t);
  std::vector<CellKey> bd;
  for (const CellKey& c : comp.cells)
    if ((c.type & tbit) == 0) bd.push_back(c);

  UnionFind uf(static_cast<int>(bd.size()));
  join_codim1(B, bd, uf);

  std::map<int, Collar> by_root;
  for (int i = 0; i < static_cast<int>(bd.size()); ++i) {
    Collar& col = by_root[uf.find(i)];
    col.boundary_component.push_back(bd[i]);
    if (bd[i].type == 0) col.vertices.push_back(bd[i].rep);
  }

  auto filter = chamber_filter_types(B.matrix(), comp.U, comp.t);
  std::vector<Collar> out;
  for (auto& [root, col] : by_root) {
    std::sort(col.vertices.begin(), col.vertices.end());
    for (int v : col.vertices)
      for (const CellKey& c : B.chamber(v, &filter)) col.body.push_back(c);
    std::sort(col.body.begin(), col.body.end(), cell_less);
    col.body.erase(std::unique(col.body.begin(), col.body.end()), col.body.end());
    for (const CellKey& c : col.body)
      if ((c.type & tbit) != 0) col.inner.push_back(c);
    out.push_back(std::move(col));
  }
  std::sort(out.begin(), out.end(), [](const Collar& a, const Collar& b) {
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

const std::string& Coloring::color_at(int vertex) const {
  auto it = colors.find(vertex);
  if (it == colors.end()) throw DomainError("vertex was not painted");
  return it->second;
}

Coloring color_vertices(const BallComplex& B, const std::vector<int>& vertices, Gen t) {
  const CoxeterSystem& W = B.system();
  const CoxeterMatrix& M = B.matrix();
  if (!M.is_even()) throw EvennessError("vertex painting needs an even system");
  if (t >= M.rank()) throw DomainError("unknown generator");

  Coloring col;
  col.t = t;
  GenSet tbit = set_add(0, t);
  for (GenSet T : M.spherical_poset().at_least(tbit)) col.coordinates.push_back(T);
  auto names_of = [&](GenSet T) {
    std::vector<std::string> names;
    for (Gen g : set_members(T)) names.push_back(M.name(g));
    std::sort(names.begin(), names.end());
    return names;
  };
  std::sort(col.coordinates.begin(), col.coordinates.end(), [&](GenSet a, GenSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return names_of(a) < names_of(b);
  });

  auto key_of = [&](const std::vector<Element>& tuple) {
    std::ostringstream os;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) os << '|';
      os << M.format_word(tuple[i].word);
    }
    return os.str();
  };
  col.trivial_color =
      key_of(std::vector<Element>(col.coordinates.size(), W.identity()));

  for (int v : vertices) {
    Element w = B.ball().element(v);
    std::vector<Element> tuple;
    tuple.reserve(col.coordinates.size());
    for (GenSet T : col.coordinates) {
      Element g = W.erase_generators_outside(w, T);
      tuple.push_back(W.coset_min_rep(g, set_remove(T, t)));
    }
    std::string key = key_of(tuple);
    int par = W.letter_count(w, t) & 1;
    auto [it, fresh] = col.parity.emplace(key, par);
    if (!fresh && it->second != par)
      throw DomainError("vertices of one color disagree on parity");
    col.tuples.emplace(v, std::move(tuple));
    col.colors.emplace(v, std::move(key));
  }
  return col;
}

Coloring color_vertices(const BallComplex& B, const RuinComponent& comp) {
  return color_vertices(B, comp.vertices, comp.t);
}

std::map<std::string, std::vector<int>> color_classes(const Coloring& coloring,
                                                      const std::vector<Collar>& cs) {
  std::map<std::string, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    const Collar& col = cs[i];
    const std::string& key = coloring.color_at(col.vertices.front());
    for (int v : col.vertices)
      if (coloring.color_at(v) != key)
        throw DomainError("collar boundary is not monochromatic");
    out[key].push_back(i);
  }
  return out;
}

std::vector<CellKey> color_intersection(const std::vector<Collar>& all,
                                        const std::vector<int>& F,
                                        const std::vector<int>& Fprime) {
  auto body_union = [&](const std::vector<int>& idx) {
    std::vector<CellKey> u;
    for (int i : idx)
      u.insert(u.end(), all.at(i).body.begin(), all.at(i).body.end());
    std::sort(u.begin(), u.end(), cell_less);
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
  };
  std::vector<CellKey> a = body_union(F), b = body_union(Fprime), out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        cell_less);
  return out;
}

}  // namespace cox
