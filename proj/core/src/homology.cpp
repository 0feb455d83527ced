#include "cox/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace cox {

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ArithmeticOverflow {};

template <typename I>
I mul(const I& a, const I& b) {
  return a * b;
}
template <typename I>
I sub(const I& a, const I& b) {
  return a - b;
}
template <>
long long mul<long long>(const long long& a, const long long& b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
template <>
long long sub<long long>(const long long& a, const long long& b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

template <typename I>
I abs_of(const I& a) {
  return a < 0 ? I(-a) : a;
}

long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
boost::multiprecision::cpp_int gcd_of(const boost::multiprecision::cpp_int& a,
                                      const boost::multiprecision::cpp_int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Classic Smith reduction with min-magnitude pivoting. Row and column
// operations are unimodular, so the multiset of elementary divisors is
// preserved; divisibility along the diagonal is restored afterwards.
template <typename I>
std::vector<I> smith_impl(std::vector<std::vector<I>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  const int n = std::min(rows, cols);
  std::vector<I> diag;
  int r = 0;
  while (r < n) {
    // Find the smallest nonzero entry of the working submatrix.
    int pi = -1, pj = -1;
    I best{};
    for (int i = r; i < rows && best != 1; ++i)
      for (int j = r; j < cols; ++j) {
        I v = abs_of(a[i][j]);
        if (v != 0 && (pi < 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi < 0) break;
    std::swap(a[pi], a[r]);
    for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][r]);

    bool clean = true;
    const I p = a[r][r];
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][r] == 0) continue;
      I q = a[i][r] / p;
      if (q != 0)
        for (int j = r; j < cols; ++j) a[i][j] = sub(a[i][j], mul(q, a[r][j]));
      if (a[i][r] != 0) clean = false;
    }
    for (int j = r + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      I q = a[r][j] / p;
      if (q != 0)
        for (int i = r; i < rows; ++i) a[i][j] = sub(a[i][j], mul(q, a[i][r]));
      if (a[r][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; re-pivot at the same r
    diag.push_back(abs_of(p));
    ++r;
  }
  // Restore the divisibility chain on the diagonal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        I g = gcd_of(diag[i], diag[j]);
        I cofactor = I(diag[i] / g);
        diag[j] = mul(cofactor, diag[j]);
        diag[i] = g;
        changed = true;
      }
  }
  diag.resize(n, I{0});
  return diag;
}

}  // namespace

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> M) {
  try {
    auto work = M;  // keep the input intact for the escalation path
    return smith_impl(std::move(work));
  } catch (const ArithmeticOverflow&) {
    using Big = boost::multiprecision::cpp_int;
    std::vector<std::vector<Big>> big(M.size());
    for (std::size_t i = 0; i < M.size(); ++i)
      big[i].assign(M[i].begin(), M[i].end());
    auto d = smith_impl(std::move(big));
    std::vector<long long> out;
    out.reserve(d.size());
    for (const Big& v : d) out.push_back(v.convert_to<long long>());
    return out;
  }
}

ChainComplex::ChainComplex(std::vector<Simplex> simplices) {
  int top = -1;
  std::vector<std::unordered_map<Simplex, std::int32_t, SimplexHash>> index;
  for (auto& s : simplices) {
    if (s.empty()) throw DomainError("empty simplex");
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("simplex vertex lists must be strictly increasing");
    top = std::max(top, static_cast<int>(s.size()) - 1);
  }
  basis_.resize(top + 1);
  index.resize(top + 1);
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& x, const Simplex& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });
  for (auto& s : simplices) {
    int k = static_cast<int>(s.size()) - 1;
    if (index[k].count(s)) throw DomainError("duplicate simplex");
    index[k].emplace(s, static_cast<std::int32_t>(basis_[k].size()));
    basis_[k].push_back(std::move(s));
  }
  boundary_.resize(top + 1);
  for (int k = 1; k <= top; ++k) {
    boundary_[k].resize(basis_[k].size());
    for (std::size_t c = 0; c < basis_[k].size(); ++c) {
      const Simplex& s = basis_[k][c];
      Simplex face(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        for (std::size_t i = 0, j = 0; i < s.size(); ++i)
          if (i != drop) face[j++] = s[i];
        auto it = index[k - 1].find(face);
        if (it == index[k - 1].end())
          throw DomainError("simplex list is not closed under faces");
        boundary_[k][c].push_back({it->second, static_cast<std::int8_t>(drop % 2 ? -1 : 1)});
      }
    }
  }
  check_boundary_squared();
}

void ChainComplex::check_boundary_squared() const {
  for (int k = 2; k <= top_dim(); ++k)
    for (const auto& col : boundary_[k]) {
      std::unordered_map<std::int32_t, long long> acc;
      for (auto [mid, s1] : col)
        for (auto [row, s2] : boundary_[k - 1][mid]) acc[row] += s1 * s2;
      for (auto& [row, v] : acc)
        if (v != 0) throw Error("boundary of boundary is nonzero");
    }
}

long long ChainComplex::size(int k) const {
  if (k < 0 || k > top_dim()) return 0;
  return static_cast<long long>(basis_[k].size());
}

long long ChainComplex::total_size() const {
  long long t = 0;
  for (int k = 0; k <= top_dim(); ++k) t += size(k);
  return t;
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int k = 0; k <= top_dim(); ++k) chi += (k % 2 ? -1 : 1) * size(k);
  return chi;
}

ChainComplex ChainComplex::relative(
    const std::function<bool(const Simplex&)>& in_sub) const {
  ChainComplex Q;
  std::vector<std::vector<std::int32_t>> keep(top_dim() + 1);
  Q.basis_.resize(top_dim() + 1);
  Q.boundary_.resize(top_dim() + 1);
  for (int k = 0; k <= top_dim(); ++k) {
    keep[k].assign(basis_[k].size(), -1);
    for (std::size_t i = 0; i < basis_[k].size(); ++i)
      if (!in_sub(basis_[k][i])) {
        keep[k][i] = static_cast<std::int32_t>(Q.basis_[k].size());
        Q.basis_[k].push_back(basis_[k][i]);
      }
  }
  for (int k = 1; k <= top_dim(); ++k)
    for (std::size_t c = 0; c < basis_[k].size(); ++c) {
      if (keep[k][c] < 0) continue;
      std::vector<std::pair<std::int32_t, std::int8_t>> col;
      for (auto [row, sgn] : boundary_[k][c])
        if (keep[k - 1][row] >= 0) col.push_back({keep[k - 1][row], sgn});
      Q.boundary_[k].push_back(std::move(col));
    }
  while (!Q.basis_.empty() && Q.basis_.back().empty()) {
    Q.basis_.pop_back();
    Q.boundary_.pop_back();
  }
  Q.check_boundary_squared();
  return Q;
}

bool HomologyResult::reduced_trivial() const {
  if (betti.empty() || betti[0] != 1) return false;
  for (std::size_t k = 1; k < betti.size(); ++k)
    if (betti[k] != 0) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

std::string HomologyResult::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (k) out << " ";
    out << "b" << k << "=" << betti[k];
    if (k < torsion.size() && !torsion[k].empty()) {
      out << "+[";
      for (std::size_t i = 0; i < torsion[k].size(); ++i)
        out << (i ? "," : "") << torsion[k][i];
      out << "]";
    }
  }
  return out.str();
}

HomologyResult homology(const ChainComplex& C) {
  const int top = C.top_dim();
  HomologyResult H;
  if (top < 0) return H;
  // Smith forms of all boundary maps (index k = map from degree k).
  std::vector<std::vector<long long>> diag(top + 2);
  for (int k = 1; k <= top; ++k) {
    std::vector<std::vector<long long>> M(
        static_cast<std::size_t>(C.size(k - 1)),
        std::vector<long long>(static_cast<std::size_t>(C.size(k)), 0));
    for (std::size_t c = 0; c < C.boundary(k).size(); ++c)
      for (auto [row, sgn] : C.boundary(k)[c]) M[row][c] = sgn;
    diag[k] = smith_diagonal(std::move(M));
  }
  auto rank_of = [&](int k) -> long long {
    if (k < 1 || k > top) return 0;
    return static_cast<long long>(
        std::count_if(diag[k].begin(), diag[k].end(), [](long long d) { return d != 0; }));
  };
  H.betti.resize(top + 1);
  H.torsion.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    H.betti[k] = C.size(k) - rank_of(k) - rank_of(k + 1);
    if (k + 1 <= top)
      for (long long d : diag[k + 1])
        if (d > 1) H.torsion[k].push_back(d);
  }
  return H;
}

std::string rational_string(const Rat& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << "/" << r.denominator();
  return out.str();
}

}  // namespace cox
