#include "cox/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cox {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

FiniteType dihedral(int m) {
  return {2ull * m, m};
}

FiniteType symmetric_group(int n) {  // type A_n
  std::uint64_t ord = 1;
  for (int i = 2; i <= n + 1; ++i) ord *= i;
  return {ord, n * (n + 1) / 2};
}

FiniteType hyperoctahedral(int n) {  // type B_n
  std::uint64_t ord = 1;
  for (int i = 2; i <= n; ++i) ord *= i;
  return {ord << n, n * n};
}

FiniteType demihyperoctahedral(int n) {  // type D_n
  std::uint64_t ord = 1;
  for (int i = 2; i <= n; ++i) ord *= i;
  return {ord << (n - 1), n * (n - 1)};
}

}  // namespace

std::optional<FiniteType> classify_connected_diagram(
    const std::vector<int>& verts, const std::vector<std::vector<int>>& order) {
  const int n = static_cast<int>(verts.size());
  if (n == 1) return FiniteType{2, 1};
  if (n == 2) {
    int m = order[verts[0]][verts[1]];
    return m == kInfinity ? std::nullopt : std::optional(dihedral(m));
  }

  // Rank >= 3: the diagram must be a tree with at most one branch point of
  // degree 3; anything denser contains an affine or worse subdiagram.
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = order[verts[i]][verts[j]];
      if (m == kInfinity) return std::nullopt;
      if (m >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  if (edges != n - 1) return std::nullopt;  // connected input with a cycle

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() >= 4) return std::nullopt;
    if (adj[i].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = i;
    }
  }

  auto label = [&](int i, int j) { return order[verts[i]][verts[j]]; };

  if (branch < 0) {
    // A path: walk it from one endpoint and read off the labels.
    int start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (static_cast<int>(path.size()) < n) {
      int next = (adj[cur].size() == 1 || adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    std::vector<int> labels(n - 1);
    int big = 0;
    for (int i = 0; i + 1 < n; ++i) {
      labels[i] = label(path[i], path[i + 1]);
      if (labels[i] > 3) ++big;
    }
    if (big == 0) return symmetric_group(n);
    if (big > 1) return std::nullopt;
    int pos = 0;
    while (labels[pos] == 3) ++pos;
    bool at_end = pos == 0 || pos == n - 2;
    if (labels[pos] == 4) {
      if (at_end) return hyperoctahedral(n);
      if (n == 4) return FiniteType{1152, 24};  // F4
      return std::nullopt;
    }
    if (labels[pos] == 5 && at_end) {
      if (n == 3) return FiniteType{120, 15};    // H3
      if (n == 4) return FiniteType{14400, 60};  // H4
    }
    return std::nullopt;
  }

  // One branch point: all labels must be 3 and the three arm lengths decide.
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (label(i, j) != 3) return std::nullopt;
  std::vector<int> arms;
  for (int first : adj[branch]) {
    int len = 1, prev = branch, cur = first;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return demihyperoctahedral(arms[2] + 3);
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return FiniteType{51840, 36};      // E6
    if (arms[2] == 3) return FiniteType{2903040, 63};    // E7
    if (arms[2] == 4) return FiniteType{696729600, 120}; // E8
  }
  return std::nullopt;
}

CoxeterMatrix CoxeterMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  CoxeterMatrix m;
  bool have_generators = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(strip_comment(line));
    if (toks.empty()) continue;
    auto at = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (!have_generators) {
      if (toks[0] != "generators:")
        throw ParseError("expected a 'generators:' line first" + at());
      if (toks.size() < 2) throw ParseError("no generators listed" + at());
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (m.by_name_.count(toks[i]))
          throw ParseError("duplicate generator '" + toks[i] + "'" + at());
        m.by_name_[toks[i]] = static_cast<Gen>(m.names_.size());
        m.names_.push_back(toks[i]);
      }
      if (m.rank() > 31) throw ScaleError("more than 31 generators" + at());
      m.orders_.assign(m.rank(), std::vector<int>(m.rank(), kInfinity));
      for (int i = 0; i < m.rank(); ++i) m.orders_[i][i] = 1;
      have_generators = true;
      continue;
    }
    if (toks[0] != "m:") throw ParseError("expected an 'm:' line" + at());
    if (toks.size() != 4) throw ParseError("'m:' lines take exactly 'm: a b k'" + at());
    auto lookup = [&](const std::string& name) -> Gen {
      auto it = m.by_name_.find(name);
      if (it == m.by_name_.end())
        throw ParseError("unknown generator '" + name + "'" + at());
      return it->second;
    };
    Gen a = lookup(toks[1]), b = lookup(toks[2]);
    if (a == b) throw ParseError("diagonal entry for '" + toks[1] + "' is fixed at 1" + at());
    int k;
    if (toks[3] == "inf") {
      k = kInfinity;
    } else {
      try {
        std::size_t used = 0;
        k = std::stoi(toks[3], &used);
        if (used != toks[3].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("bad order '" + toks[3] + "'" + at());
      }
      if (k < 2) throw ParseError("orders must be >= 2 (got " + toks[3] + ")" + at());
    }
    int& slot = m.orders_[a][b];
    if (slot != kInfinity && slot != k)
      throw ParseError("conflicting orders for pair " + toks[1] + "," + toks[2] + at());
    // A repeated "m: a b inf" is indistinguishable from the default; accept it.
    slot = k;
    m.orders_[b][a] = k;
  }
  if (!have_generators) throw ParseError("empty input: no 'generators:' line");
  m.validate();
  return m;
}

CoxeterMatrix CoxeterMatrix::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

CoxeterMatrix CoxeterMatrix::from_orders(std::vector<std::string> names,
                                         std::vector<std::vector<int>> orders) {
  CoxeterMatrix m;
  m.names_ = std::move(names);
  m.orders_ = std::move(orders);
  for (std::size_t i = 0; i < m.names_.size(); ++i) {
    if (m.by_name_.count(m.names_[i])) throw ParseError("duplicate generator '" + m.names_[i] + "'");
    m.by_name_[m.names_[i]] = static_cast<Gen>(i);
  }
  m.validate();
  return m;
}

void CoxeterMatrix::validate() const {
  int n = rank();
  if (n < 1) throw ParseError("no generators");
  if (n > 31) throw ScaleError("more than 31 generators");
  if (static_cast<int>(orders_.size()) != n) throw ParseError("order matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(orders_[i].size()) != n) throw ParseError("order matrix is not square");
    if (orders_[i][i] != 1) throw ParseError("diagonal entries must be 1");
    for (int j = 0; j < n; ++j) {
      if (orders_[i][j] != orders_[j][i]) throw ParseError("order matrix is not symmetric");
      if (i != j && orders_[i][j] != kInfinity && orders_[i][j] < 2)
        throw ParseError("off-diagonal orders must be >= 2");
    }
  }
}

Gen CoxeterMatrix::generator(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw DomainError("unknown generator '" + name + "'");
  return it->second;
}

bool CoxeterMatrix::is_even() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (orders_[i][j] != kInfinity && orders_[i][j] % 2 != 0) return false;
  return true;
}

std::string CoxeterMatrix::format_set(GenSet T) const {
  std::string out = "{";
  bool first = true;
  for (Gen g : set_members(T)) {
    if (!first) out += ",";
    out += name(g);
    first = false;
  }
  return out + "}";
}

std::string CoxeterMatrix::format_word(const Word& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += name(w[i]);
  }
  return out;
}

GenSet CoxeterMatrix::parse_set(const std::vector<std::string>& gens) const {
  GenSet T = 0;
  for (const auto& n : gens) T = set_add(T, generator(n));
  return T;
}

std::optional<FiniteType> CoxeterMatrix::finite_type(GenSet T) const {
  auto members = set_members(T);
  // An infinite bond anywhere in T kills sphericity outright.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (order(members[i], members[j]) == kInfinity) return std::nullopt;

  // Split into diagram components (edges are bonds of order >= 3) and combine.
  FiniteType total;
  std::vector<bool> seen(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(members[v]);
      for (std::size_t w = 0; w < members.size(); ++w)
        if (!seen[w] && order(members[v], members[w]) >= 3) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    auto ft = classify_connected_diagram(comp, orders_);
    if (!ft) return std::nullopt;
    total.order *= ft->order;
    total.longest += ft->longest;
  }
  return total;
}

bool CoxeterMatrix::is_spherical(GenSet T) const {
  return finite_type(T).has_value();
}

std::uint64_t CoxeterMatrix::spherical_order(GenSet T) const {
  auto ft = finite_type(T);
  if (!ft) throw DomainError("subset " + format_set(T) + " generates an infinite group");
  return ft->order;
}

int CoxeterMatrix::longest_length(GenSet T) const {
  auto ft = finite_type(T);
  if (!ft) throw DomainError("subset " + format_set(T) + " generates an infinite group");
  return ft->longest;
}

const SphericalPoset& CoxeterMatrix::spherical_poset() const {
  if (poset_) return *poset_;
  SphericalPoset p;
  // Grow spherical sets one generator at a time; every nonempty spherical set
  // has spherical proper subsets, so this reaches all of them.
  std::vector<GenSet> level{0};
  std::vector<GenSet> all{0};
  while (!level.empty()) {
    std::vector<GenSet> next;
    for (GenSet T : level)
      for (Gen g = 0; g < rank(); ++g) {
        if (set_contains(T, g)) continue;
        GenSet U = set_add(T, g);
        if (std::find(next.begin(), next.end(), U) != next.end()) continue;
        if (is_spherical(U)) next.push_back(U);
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), set_less);
  for (GenSet T : all) {
    auto ft = finite_type(T);
    p.index[T] = static_cast<int>(p.sets.size());
    p.sets.push_back(T);
    p.orders.push_back(ft->order);
    p.longest.push_back(ft->longest);
    p.max_longest = std::max(p.max_longest, ft->longest);
  }
  poset_ = std::move(p);
  return *poset_;
}

CoxeterMatrix CoxeterMatrix::restrict_to(GenSet U) const {
  auto members = set_members(U);
  std::vector<std::string> names;
  std::vector<std::vector<int>> orders(members.size(), std::vector<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    names.push_back(name(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j)
      orders[i][j] = order(members[i], members[j]);
  }
  return from_orders(std::move(names), std::move(orders));
}

int SphericalPoset::index_of(GenSet T) const {
  auto it = index.find(T);
  if (it == index.end()) throw DomainError("subset is not spherical");
  return it->second;
}

std::vector<GenSet> SphericalPoset::at_least(GenSet T) const {
  std::vector<GenSet> out;
  for (GenSet U : sets)
    if ((U & T) == T) out.push_back(U);
  return out;
}

}  // namespace cox
