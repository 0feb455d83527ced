#include "cox/system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "cox/ball.hpp"

namespace cox {

namespace {

// One step of the word problem: breadth-first closure of a word under braid
// moves. Every visited word is reported to `visit`. If an adjacent equal pair
// shows up the scan stops and returns that word and position; otherwise the
// start word was reduced and the whole braid class has been visited.
struct Cancellation {
  Word word;
  int pos;
};

template <typename Visit>
std::optional<Cancellation> braid_closure(const CoxeterMatrix& M, const Word& start,
                                          Visit&& visit) {
  std::unordered_set<PackedWord, PackedWordHash> seen;
  std::deque<Word> queue;
  seen.insert(pack_word(start));
  queue.push_back(start);
  const int n = static_cast<int>(start.size());
  Word next;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    visit(static_cast<const Word&>(w));
    for (int i = 0; i + 1 < n; ++i) {
      Gen a = w[i], b = w[i + 1];
      if (a == b) return Cancellation{std::move(w), i};
      int m = M.order(a, b);
      if (m == kInfinity || i + m > n) continue;
      bool alt = true;
      for (int j = 2; j < m && alt; ++j) alt = w[i + j] == (j % 2 ? b : a);
      if (!alt) continue;
      next = w;
      for (int j = 0; j < m; ++j) next[i + j] = (j % 2 ? a : b);
      if (seen.insert(pack_word(next)).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

void check_letters(const Word& w, int rank) {
  for (Gen g : w)
    if (g >= rank) throw DomainError("letter index out of range");
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix m) : mat_(std::move(m)) {
  if (mat_.rank() > 15)
    throw ScaleError("the word engine packs words into nibbles; rank is capped at 15");
}

Element CoxeterSystem::generator_element(Gen s) const {
  if (s >= rank()) throw DomainError("letter index out of range");
  return Element{Word{s}, set_add(0, s)};
}

Element CoxeterSystem::from_names(const std::vector<std::string>& letters) const {
  Word w;
  for (const auto& name : letters) w.push_back(mat_.generator(name));
  return normal_form(w);
}

bool CoxeterSystem::is_reduced(const Word& w) const {
  check_letters(w, rank());
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(pack_word(w));
    if (it != memo_.end()) return it->second.length() == static_cast<int>(w.size());
  }
  return !braid_closure(mat_, w, [](const Word&) {}).has_value();
}

std::vector<Word> CoxeterSystem::reduced_words(const Word& w) const {
  check_letters(w, rank());
  std::vector<Word> all;
  auto cancel = braid_closure(mat_, w, [&](const Word& u) { all.push_back(u); });
  if (cancel) throw DomainError("word is not reduced");
  std::sort(all.begin(), all.end());
  return all;
}

Element CoxeterSystem::normal_form(const Word& input) const {
  check_letters(input, rank());
  Word w = input;
  std::vector<PackedWord> aliases;
  for (;;) {
    PackedWord key = pack_word(w);
    {
      std::shared_lock lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    aliases.push_back(key);
    Word best = w;
    auto cancel = braid_closure(mat_, w, [&](const Word& u) {
      if (u < best) best = u;
    });
    if (cancel) {
      // Drop the equal adjacent pair and reduce the shorter word.
      Word shorter;
      shorter.reserve(w.size() - 2);
      for (int i = 0; i < static_cast<int>(cancel->word.size()); ++i)
        if (i != cancel->pos && i != cancel->pos + 1) shorter.push_back(cancel->word[i]);
      w = std::move(shorter);
      continue;
    }
    Element e{best, word_support(best)};
    {
      std::unique_lock lock(memo_mutex_);
      for (const PackedWord& k : aliases) memo_.emplace(k, e);
      memo_.emplace(pack_word(best), e);
    }
    return e;
  }
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  Element x = a;
  for (Gen s : b.word) x = right_mul(x, s);
  return x;
}

Element CoxeterSystem::right_mul(const Element& a, Gen s) const {
  Word w = a.word;
  w.push_back(s);
  return normal_form(w);
}

Element CoxeterSystem::left_mul(Gen s, const Element& a) const {
  Word w;
  w.reserve(a.word.size() + 1);
  w.push_back(s);
  w.insert(w.end(), a.word.begin(), a.word.end());
  return normal_form(w);
}

Element CoxeterSystem::inverse(const Element& a) const {
  Word w(a.word.rbegin(), a.word.rend());
  return normal_form(w);
}

Element CoxeterSystem::power(const Element& a, int k) const {
  Element x = identity();
  for (int i = 0; i < k; ++i) x = multiply(x, a);
  return x;
}

GenSet CoxeterSystem::right_descents(const Element& a) const {
  if (a.is_identity()) return 0;
  PackedWord key = pack_word(a.word);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = descent_memo_.find(key);
    if (it != descent_memo_.end()) return it->second & 0xffffu;
  }
  // s is a right (left) descent exactly when some reduced word ends (starts)
  // with s, so one braid closure yields both descent sets.
  GenSet right = 0, left = 0;
  auto cancel = braid_closure(mat_, a.word, [&](const Word& u) {
    left = set_add(left, u.front());
    right = set_add(right, u.back());
  });
  if (cancel) throw DomainError("element carries a non-reduced canonical word");
  {
    std::unique_lock lock(memo_mutex_);
    descent_memo_.emplace(key, right | (left << 16));
  }
  return right;
}

GenSet CoxeterSystem::left_descents(const Element& a) const {
  if (a.is_identity()) return 0;
  right_descents(a);  // fills the memo entry
  std::shared_lock lock(memo_mutex_);
  return descent_memo_.at(pack_word(a.word)) >> 16;
}

bool CoxeterSystem::is_reduced_for_cosets(const Element& w, GenSet X, GenSet Y) const {
  return (left_descents(w) & X) == 0 && (right_descents(w) & Y) == 0;
}

Element CoxeterSystem::coset_min_rep(const Element& w, GenSet T) const {
  Element x = w;
  for (;;) {
    GenSet d = right_descents(x) & T;
    if (!d) return x;
    x = right_mul(x, static_cast<Gen>(__builtin_ctz(d)));
  }
}

Element CoxeterSystem::longest_element(GenSet T) const {
  int target = mat_.longest_length(T);  // throws if T is not spherical
  Element x = identity();
  for (;;) {
    GenSet up = T & ~right_descents(x);
    if (!up) break;
    x = right_mul(x, static_cast<Gen>(__builtin_ctz(up)));
  }
  if (x.length() != target) throw Error("longest element search ended early");
  return x;
}

void CoxeterSystem::require_even(const char* op) const {
  if (!mat_.is_even())
    throw EvennessError(std::string(op) + " requires every finite order to be even");
}

Element CoxeterSystem::erase_generators_outside(const Element& w, GenSet T) const {
  require_even("erasing generators");
  Word kept;
  for (Gen g : w.word)
    if (set_contains(T, g)) kept.push_back(g);
  Element e = normal_form(kept);
  assert((e.support & ~T) == 0);
  return e;
}

int CoxeterSystem::letter_count(const Element& w, Gen t) const {
  return static_cast<int>(std::count(w.word.begin(), w.word.end(), t));
}

bool CoxeterSystem::occurs_evenly(const Element& w, Gen t) const {
  require_even("letter parity");
  return letter_count(w, t) % 2 == 0;
}

std::size_t CoxeterSystem::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

GroupBall CoxeterSystem::ball(int radius) const {
  if (radius < 0) throw DomainError("radius must be >= 0");
  const int n = rank();
  constexpr std::int32_t kUnset = -2;
  GroupBall B;
  B.sys_ = this;
  B.radius_ = radius;
  B.rank_ = n;
  B.elems_.push_back(identity());
  B.table_.assign(n, kUnset);
  B.layer_start_ = {0, 1};

  struct Cand {
    int from;
    Gen s;
  };
  for (int k = 0; k < radius; ++k) {
    const int lb = B.layer_start_[k], le = B.layer_start_[k + 1];
    std::vector<Cand> cands;
    std::unordered_map<PackedWord, int, PackedWordHash> by_word;
    for (int id = lb; id < le; ++id)
      for (Gen s = 0; s < n; ++s)
        if (B.table_[std::size_t(id) * n + s] == kUnset) {
          Word w = B.elems_[id].word;
          w.push_back(s);
          by_word.emplace(pack_word(w), static_cast<int>(cands.size()));
          cands.push_back({id, s});
        }

    struct Fresh {
      Word canon;
      std::vector<int> members;  // candidate indices reaching this element
    };
    std::vector<Fresh> fresh;
    std::vector<char> done(cands.size(), 0);
    for (int ci = 0; ci < static_cast<int>(cands.size()); ++ci) {
      if (done[ci]) continue;
      Word w0 = B.elems_[cands[ci].from].word;
      w0.push_back(cands[ci].s);
      Fresh f;
      f.canon = w0;
      // Every unset pair is an ascent, so w0 is reduced and the closure visits
      // the element's entire braid class; intersecting it with the candidate
      // words groups all pairs that reach this element.
      auto cancel = braid_closure(mat_, w0, [&](const Word& u) {
        if (u < f.canon) f.canon = u;
        auto it = by_word.find(pack_word(u));
        if (it != by_word.end() && !done[it->second]) {
          done[it->second] = 1;
          f.members.push_back(it->second);
        }
      });
      if (cancel) throw Error("ascent candidate was not reduced");
      fresh.push_back(std::move(f));
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Fresh& a, const Fresh& b) { return a.canon < b.canon; });
    for (const Fresh& f : fresh) {
      int id = static_cast<int>(B.elems_.size());
      B.elems_.push_back(Element{f.canon, word_support(f.canon)});
      B.table_.resize(B.table_.size() + n, kUnset);
      for (int ci : f.members) {
        B.table_[std::size_t(cands[ci].from) * n + cands[ci].s] = id;
        B.table_[std::size_t(id) * n + cands[ci].s] = cands[ci].from;
      }
    }
    B.layer_start_.push_back(static_cast<int>(B.elems_.size()));
  }

  // Ascents out of the outermost layer leave the ball; anything still unset
  // in an inner layer would be a bookkeeping bug.
  for (int id = 0; id < B.size(); ++id)
    for (Gen s = 0; s < n; ++s) {
      auto& slot = B.table_[std::size_t(id) * n + s];
      if (slot == kUnset) {
        if (B.length(id) != radius) throw Error("incomplete multiplication table");
        slot = GroupBall::kOutside;
      }
    }
  B.index_.reserve(B.elems_.size());
  for (int id = 0; id < B.size(); ++id) B.index_.emplace(pack_word(B.elems_[id].word), id);
  return B;
}

int GroupBall::find(const Element& w) const {
  auto it = index_.find(pack_word(w.word));
  return it == index_.end() ? kOutside : it->second;
}

int GroupBall::min_rep_in_coset(int id, GenSet T) const {
  for (;;) {
    int best = id;
    for (GenSet rest = T; rest; rest &= rest - 1) {
      int nb = right(id, static_cast<Gen>(__builtin_ctz(rest)));
      if (nb != kOutside && length(nb) < length(id)) {
        best = nb;
        break;
      }
    }
    if (best == id) return id;
    id = best;
  }
}

bool GroupBall::coset_in_ball(int rep, GenSet T, std::vector<int>* vertices) const {
  std::vector<int> seen{rep};
  std::vector<int> queue{rep};
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (GenSet rest = T; rest; rest &= rest - 1) {
      int nb = right(v, static_cast<Gen>(__builtin_ctz(rest)));
      if (nb == kOutside) return false;
      if (std::find(seen.begin(), seen.end(), nb) == seen.end()) {
        seen.push_back(nb);
        queue.push_back(nb);
      }
    }
  }
  if (vertices) {
    std::sort(seen.begin(), seen.end());
    *vertices = std::move(seen);
  }
  return true;
}

}  // namespace cox
