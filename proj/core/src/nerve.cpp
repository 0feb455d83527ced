#include "cox/nerve.hpp"

#include <algorithm>
#include <sstream>

namespace cox {

SimplicialComplex SimplicialComplex::from_faces(std::vector<GenSet> faces) {
  SimplicialComplex K;
  std::sort(faces.begin(), faces.end(), set_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (GenSet F : faces) {
    if (F == 0) throw DomainError("faces must be nonempty");
    K.vertices |= F;
    K.face_set.insert(F);
  }
  for (GenSet F : faces)
    for (GenSet sub = F & (F - 1); sub; sub = F & (sub - 1))
      if (!K.face_set.count(sub)) throw DomainError("face list is not closed under subsets");
  K.faces = std::move(faces);
  return K;
}

int SimplicialComplex::dim() const {
  return faces.empty() ? -1 : set_size(faces.back()) - 1;
}

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f(dim() + 1, 0);
  for (GenSet F : faces) ++f[set_size(F) - 1];
  return f;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (GenSet F : faces) chi += set_size(F) % 2 ? 1 : -1;
  return chi;
}

bool SimplicialComplex::connected() const {
  auto verts = set_members(vertices);
  if (verts.size() <= 1) return true;
  GenSet seen = set_add(0, verts[0]);
  std::vector<Gen> queue{verts[0]};
  while (!queue.empty()) {
    Gen v = queue.back();
    queue.pop_back();
    for (Gen w : verts)
      if (!set_contains(seen, w) && has_face(set_add(set_add(0, v), w))) {
        seen = set_add(seen, w);
        queue.push_back(w);
      }
  }
  return seen == vertices;
}

ChainComplex SimplicialComplex::chain_complex() const {
  std::vector<Simplex> simplices;
  simplices.reserve(faces.size());
  for (GenSet F : faces) {
    Simplex s;
    for (Gen g : set_members(F)) s.push_back(g);
    simplices.push_back(std::move(s));
  }
  return ChainComplex(std::move(simplices));
}

SimplicialComplex build_nerve(const CoxeterMatrix& M) {
  std::vector<GenSet> faces;
  for (GenSet T : M.spherical_poset().sets)
    if (T != 0) faces.push_back(T);
  return SimplicialComplex::from_faces(std::move(faces));
}

bool is_flag(const SimplicialComplex& K, GenSet* witness) {
  auto verts = set_members(K.vertices);
  const int n = static_cast<int>(verts.size());
  // Scan vertex subsets by size so the first hit is a smallest missing face.
  std::vector<GenSet> subsets;
  for (GenSet m = 1; m < (GenSet{1} << n); ++m) {
    GenSet T = 0;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) T = set_add(T, verts[i]);
    subsets.push_back(T);
  }
  std::sort(subsets.begin(), subsets.end(), set_less);
  for (GenSet T : subsets) {
    if (set_size(T) < 3 || K.has_face(T)) continue;
    bool clique = true;
    auto members = set_members(T);
    for (std::size_t i = 0; i < members.size() && clique; ++i)
      for (std::size_t j = i + 1; j < members.size() && clique; ++j)
        clique = K.has_face(set_add(set_add(0, members[i]), members[j]));
    if (clique) {
      if (witness) *witness = T;
      return false;
    }
  }
  return true;
}

SimplicialComplex link_of(const SimplicialComplex& K, GenSet F) {
  if (!K.has_face(F)) throw DomainError("link of a non-face");
  std::vector<GenSet> faces;
  for (GenSet G : K.faces)
    if ((G & F) == 0 && K.has_face(G | F)) faces.push_back(G);
  return SimplicialComplex::from_faces(std::move(faces));
}

namespace {

std::string format_fvector(const std::vector<int>& f) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << ")";
  return out.str();
}

// Counts of cofaces one dimension up, keyed by k-face.
int coface_count(const SimplicialComplex& K, GenSet F) {
  int c = 0;
  for (Gen g : set_members(K.vertices & ~F))
    if (K.has_face(F | (GenSet{1} << g))) ++c;
  return c;
}

}  // namespace

SphereCheck sphere_check(const SimplicialComplex& K, int n) {
  SphereCheck R;
  R.n = n;
  auto fail = [&](const std::string& msg) { R.failures.push_back(msg); };
  if (n < 0 || n > 3) {
    fail("only dimensions 0..3 are supported");
    R.pass = false;
    return R;
  }
  if (K.dim() != n)
    fail("dimension is " + std::to_string(K.dim()) + ", expected " + std::to_string(n));
  auto f = K.f_vector();
  R.facts.push_back({"f_vector", format_fvector(f)});
  if (K.dim() == n) {
    // purity: every maximal face is top-dimensional
    for (GenSet F : K.faces)
      if (set_size(F) - 1 < n && coface_count(K, F) == 0) {
        fail("face of dimension " + std::to_string(set_size(F) - 1) + " is maximal");
        break;
      }
  }
  if (n == 0) {
    if (f.empty() || f[0] != 2) fail("a 0-sphere has exactly two vertices");
    if (K.dim() > 0) fail("a 0-sphere has no edges");
    R.pass = R.failures.empty();
    return R;
  }
  if (!K.connected()) fail("not connected");
  long long chi = K.euler_characteristic();
  R.facts.push_back({"euler", std::to_string(chi)});
  long long chi_expect = n % 2 ? 0 : 2;
  if (chi != chi_expect) fail("euler characteristic " + std::to_string(chi) +
                              ", expected " + std::to_string(chi_expect));
  if (n == 1) {
    for (Gen v : set_members(K.vertices))
      if (coface_count(K, GenSet{1} << v) != 2) {
        fail("a vertex lies in " + std::to_string(coface_count(K, GenSet{1} << v)) +
             " edges, expected 2");
        break;
      }
  } else {
    // codimension-one faces sit in exactly two top faces
    for (GenSet F : K.faces)
      if (set_size(F) == n && coface_count(K, F) != 2) {
        fail("a codimension-one face lies in " + std::to_string(coface_count(K, F)) +
             " top faces, expected 2");
        break;
      }
    // vertex links are spheres one dimension down
    for (Gen v : set_members(K.vertices)) {
      auto sub = sphere_check(link_of(K, GenSet{1} << v), n - 1);
      if (!sub.pass) {
        fail("link of a vertex fails the " + std::to_string(n - 1) + "-sphere battery: " +
             (sub.failures.empty() ? "?" : sub.failures.front()));
        break;
      }
    }
    if (K.dim() == n) {
      auto H = homology(K.chain_complex());
      R.facts.push_back({"homology", H.to_string()});
      bool good = static_cast<int>(H.betti.size()) == n + 1;
      for (int k = 0; good && k <= n; ++k) {
        long long expect = (k == 0 || k == n) ? 1 : 0;
        if (H.betti[k] != expect || !H.torsion[k].empty()) good = false;
      }
      if (!good) fail("integer homology differs from the n-sphere");
    }
  }
  R.pass = R.failures.empty();
  return R;
}

GenNeighborhood neighborhood(const CoxeterMatrix& M, Gen t) {
  GenNeighborhood N;
  N.t = t;
  N.U = set_add(0, t);
  for (Gen s = 0; s < M.rank(); ++s) {
    if (s == t) continue;
    int m = M.order(s, t);
    if (m == kInfinity) continue;
    N.U = set_add(N.U, s);
    if (m >= 4) N.heavy = set_add(N.heavy, s);
  }
  for (Gen s : set_members(N.heavy)) {
    GenSet wing = 0;
    for (Gen u : set_members(N.U)) {
      if (u == s || u == t) continue;
      if (M.order(u, s) == 2 && M.order(u, t) == 2) wing = set_add(wing, u);
    }
    N.pair_commuters[s] = wing;
  }
  return N;
}

Rat orbihedral_euler_characteristic(const CoxeterMatrix& M) {
  Rat chi(0);
  for (GenSet T : M.spherical_poset().sets) {
    Rat term(1, static_cast<long long>(M.spherical_order(T)));
    chi += set_size(T) % 2 ? -term : term;
  }
  return chi;
}

}  // namespace cox
