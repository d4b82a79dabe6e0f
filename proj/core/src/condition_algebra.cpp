#include "cn/condition_algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <tuple>
#include <unordered_set>

#include "cn/condition_laws.hpp"
#include "cn/error.hpp"
#include "cn/set_condition.hpp"
#include "cn/term_model.hpp"

namespace cn {

namespace alg_detail {

enum class EK { Var, Atom, Bracket };

struct Elem {
  EK kind = EK::Var;
  std::string name;           // leaves
  std::vector<Elem> content;  // brackets, sorted by ser
  std::string word;           // innermost letter first, no "--"
  std::string base;           // serialization without the word
  std::string ser;
};

using Multi = std::vector<Elem>;

void finalize(Elem& e);

void finalize(Multi& m) {
  for (auto& e : m) finalize(e);
  std::sort(m.begin(), m.end(), [](const Elem& a, const Elem& b) { return a.ser < b.ser; });
}

void finalize(Elem& e) {
  if (e.kind == EK::Bracket) {
    finalize(e.content);
    e.base = "[";
    for (std::size_t i = 0; i < e.content.size(); ++i) {
      if (i) e.base += ',';
      e.base += e.content[i].ser;
    }
    e.base += ']';
  } else {
    e.base = (e.kind == EK::Var ? "V" : "a") + e.name;
  }
  e.ser = e.word.empty() ? e.base : e.base + "^" + e.word;
}

std::string serialize(const Multi& m) {
  std::string r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) r += ',';
    r += m[i].ser;
  }
  return r;
}

// Applies one letter; with bracket extension the letter is pushed inside.
void apply_letter(Elem& e, char l, bool bext) {
  if (e.kind == EK::Bracket && bext) {
    for (auto& c : e.content) apply_letter(c, l, bext);
    return;
  }
  e.word = cancel_double_inverse(e.word + l);
}

Multi to_multi(const Condition& c, bool bext) {
  switch (c.kind()) {
    case CondKind::Var:
    case CondKind::Atom: {
      Elem e;
      e.kind = c.kind() == CondKind::Var ? EK::Var : EK::Atom;
      e.name = c.name();
      return {e};
    }
    case CondKind::Neutral: return {};
    case CondKind::Product: {
      Multi l = to_multi(c.left(), bext);
      Multi r = to_multi(c.right(), bext);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case CondKind::Inverse:
    case CondKind::Copy0:
    case CondKind::Copy1: {
      char l = c.kind() == CondKind::Inverse ? '-' : c.kind() == CondKind::Copy0 ? '0' : '1';
      Multi m = to_multi(c.inner(), bext);
      for (auto& e : m) apply_letter(e, l, bext);
      return m;
    }
    case CondKind::Bracket: {
      Multi inner = to_multi(c.inner(), bext);
      if (inner.empty()) return {};
      Elem e;
      e.kind = EK::Bracket;
      e.content = std::move(inner);
      return {e};
    }
  }
  return {};
}

Condition to_condition(const Multi& m);

Condition to_condition(const Elem& e) {
  Condition c = e.kind == EK::Var    ? Condition::var(e.name)
                : e.kind == EK::Atom ? Condition::atom(e.name)
                                     : Condition::bracket(to_condition(e.content));
  for (char l : e.word) c = l == '-' ? Condition::inverse(c) : Condition::copy(c, l - '0');
  return c;
}

Condition to_condition(const Multi& m) {
  std::vector<Condition> fs;
  fs.reserve(m.size());
  for (const auto& e : m) fs.push_back(to_condition(e));
  return Condition::product_of(fs);
}

// Leaf exponents as met walking up, with '-' dropped.
void collect(const Multi& m, const std::string& suffix, std::map<std::string, std::vector<std::string>>& out) {
  for (const auto& e : m) {
    std::string w = e.word + suffix;
    if (e.kind == EK::Bracket) {
      collect(e.content, w, out);
    } else {
      std::string p;
      for (char ch : w)
        if (ch != '-') p.push_back(ch);
      out[e.base].push_back(std::move(p));
    }
  }
}

bool unique(const Multi& m) {
  std::map<std::string, std::vector<std::string>> leaves;
  collect(m, "", leaves);
  for (const auto& [k, ws] : leaves)
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (exponents_comparable(ws[i], ws[j])) return false;
  return true;
}

struct MoveSet {
  bool merge = false;     // A^{w0v} A^{w1v} -> A^{wv}
  bool annihilate = false;
  bool split = false;     // A^{wv} -> A^{w0v} A^{w1v}
  bool reacting_split = false;  // a split followed by a merge or annihilation of one piece
  bool check_unique = false;    // intermediate terms of compound moves must have unique exponents
  const std::vector<Elem>* witnesses = nullptr;  // enables I -> W^0 W^1- beside a lone element
  bool pair_reaction = false;   // insert an annihilating pair, one member reacting at once
  int limit = 3;
  bool bext = false;
};

// Dissolves an unexponentiated bracket into the bracket around it while
// the outer content stays within the limit. The top level is left alone.
void flatten(Multi& m, int limit, bool inside) {
  for (auto& e : m)
    if (e.kind == EK::Bracket) flatten(e.content, limit, true);
  if (!inside) return;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Elem& e = m[i];
      if (e.kind != EK::Bracket || !e.word.empty()) continue;
      if (static_cast<int>(m.size() - 1 + e.content.size()) > limit) continue;
      Multi inner = e.content;
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
      m.insert(m.end(), inner.begin(), inner.end());
      changed = true;
      break;
    }
  }
}

// Longest exponent word, counting copy letters only.
std::size_t max_word(const Multi& m) {
  std::size_t w = 0;
  for (const auto& e : m) {
    auto copies = static_cast<std::size_t>(std::count_if(e.word.begin(), e.word.end(), [](char l) { return l != '-'; }));
    w = std::max({w, copies, e.kind == EK::Bracket ? max_word(e.content) : 0});
  }
  return w;
}

std::size_t letters(const Multi& m) {
  std::size_t n = 0;
  for (const auto& e : m) n += e.word.size() + (e.kind == EK::Bracket ? letters(e.content) : 0);
  return n;
}

std::size_t leaf_count(const Multi& m) {
  std::size_t n = 0;
  for (const auto& e : m) n += e.kind == EK::Bracket ? leaf_count(e.content) : 1;
  return n;
}

std::size_t weight(const Multi& m) {
  std::size_t w = m.size();
  for (const auto& e : m)
    if (e.kind == EK::Bracket) w += weight(e.content);
  return w;
}

Multi without(const Multi& m, std::size_t i, std::size_t j = static_cast<std::size_t>(-1)) {
  Multi r;
  r.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    if (k != i && k != j) r.push_back(m[k]);
  return r;
}

// Word obtained by dropping the letter at k, if u and v differ exactly there
// by 0 against 1.
bool merge_words(const std::string& u, const std::string& v, std::string& out) {
  if (u.size() != v.size()) return false;
  std::size_t diff = u.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == v[k]) continue;
    if (diff != u.size()) return false;
    diff = k;
  }
  if (diff == u.size()) return false;
  char a = u[diff], b = v[diff];
  if (!((a == '0' && b == '1') || (a == '1' && b == '0'))) return false;
  out = cancel_double_inverse(u.substr(0, diff) + u.substr(diff + 1));
  return true;
}

// u = w0v and v' = w1-v (or w1v and w0-v), up to "--" cancellation.
bool annihilating(const std::string& u, const std::string& v) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != '0' && u[k] != '1') continue;
    std::string cand =
        cancel_double_inverse(u.substr(0, k) + (u[k] == '0' ? "1-" : "0-") + u.substr(k + 1));
    if (cand == v) return true;
  }
  return false;
}

Elem with_inserted(const Elem& e, std::size_t k, char l, bool bext) {
  Elem r = e;
  if (r.kind == EK::Bracket && bext) {
    apply_letter(r, l, bext);
  } else {
    r.word = cancel_double_inverse(e.word.substr(0, k) + l + e.word.substr(k));
  }
  return r;
}

// Words v with A^u A^v = I by one annihilation.
std::vector<std::string> annihilation_partners(const std::string& u) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != '0' && u[k] != '1') continue;
    std::string flip(1, u[k] == '0' ? '1' : '0');
    if (k + 1 < u.size() && u[k + 1] == '-')
      out.push_back(cancel_double_inverse(u.substr(0, k) + flip + u.substr(k + 2)));
    else
      out.push_back(cancel_double_inverse(u.substr(0, k) + flip + "-" + u.substr(k + 1)));
  }
  return out;
}

// Leaf subterms of the state: each leaf with each prefix of its word, also
// inside brackets. Bracket witnesses are left out; they nest without bound.
void witnesses(const Multi& m, std::vector<Elem>& out, std::unordered_set<std::string>& seen) {
  for (const auto& e : m) {
    for (std::size_t k = 0; e.kind != EK::Bracket && k <= e.word.size(); ++k) {
      Elem w = e;
      w.word = cancel_double_inverse(e.word.substr(0, k));
      finalize(w);
      if (seen.insert(w.ser).second) out.push_back(std::move(w));
    }
    if (e.kind == EK::Bracket) witnesses(e.content, out, seen);
  }
}

// Neighbors of m. With mids, each compound move also reports the state
// between its insertion or split and its reaction.
void moves(const Multi& m, const MoveSet& ms, std::vector<Multi>& out,
           std::vector<std::optional<Multi>>* mids = nullptr) {
  const std::size_t n = m.size();
  auto push = [&out, &ms, mids](Multi r, const Multi* mid = nullptr) {
    flatten(r, ms.limit, false);
    finalize(r);
    out.push_back(std::move(r));
    if (!mids) return;
    if (!mid) {
      mids->emplace_back();
      return;
    }
    Multi x = *mid;
    finalize(x);
    mids->push_back(std::move(x));
  };
  if (ms.pair_reaction && static_cast<int>(n) + 2 <= ms.limit) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem& e = m[i];
      if (e.kind == EK::Bracket && ms.bext) continue;
      std::vector<std::string> qs = annihilation_partners(e.word);
      for (std::size_t k = 0; k < e.word.size(); ++k)
        if (e.word[k] == '0' || e.word[k] == '1') {
          std::string q = e.word;
          q[k] = q[k] == '0' ? '1' : '0';
          qs.push_back(q);
        }
      for (const auto& q : qs)
        for (const auto& other : annihilation_partners(q)) {
          Elem qe = e, oe = e;
          qe.word = q;
          oe.word = other;
          Multi mid = m;
          mid.push_back(qe);
          mid.push_back(oe);
          finalize(mid);
          if (ms.check_unique && !unique(mid)) continue;
          std::string w;
          Multi r = without(m, i);
          if (merge_words(e.word, q, w)) {
            Elem x = e;
            x.word = w;
            r.push_back(std::move(x));
          }
          r.push_back(oe);
          push(std::move(r), &mid);
        }
    }
  }
  // A lone element e = B^{us} is (B^u I)^s; the unit may become W^0 W^1- or W^1 W^0-.
  if (ms.witnesses && n == 1 && static_cast<int>(n) + 2 <= ms.limit && !(m[0].kind == EK::Bracket && ms.bext)) {
    const Elem& e = m[0];
    for (std::size_t k = 0; k <= e.word.size(); ++k) {
      const std::string s = e.word.substr(k);
      for (const auto& w : *ms.witnesses)
        for (const char* pair : {"01-", "10-"}) {
          Elem x = w, y = w;
          x.word = cancel_double_inverse(w.word + pair[0] + s);
          y.word = cancel_double_inverse(w.word + pair[1] + pair[2] + s);
          push({e, std::move(x), std::move(y)});
        }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Elem& a = m[i];
      const Elem& b = m[j];
      if (a.base == b.base) {
        std::string w;
        if (ms.merge && merge_words(a.word, b.word, w)) {
          Multi r = without(m, i, j);
          Elem e = a;
          e.word = w;
          r.push_back(e);
          push(std::move(r));
        }
        if (ms.annihilate && (annihilating(a.word, b.word) || annihilating(b.word, a.word)))
          push(without(m, i, j));
      }
      if (a.kind == EK::Bracket && b.kind == EK::Bracket && a.word == b.word &&
          static_cast<int>(a.content.size() + b.content.size()) <= ms.limit) {
        Multi r = without(m, i, j);
        Elem e = a;
        e.content.insert(e.content.end(), b.content.begin(), b.content.end());
        r.push_back(e);
        push(std::move(r));
      }
    }
  }
  const bool room = static_cast<int>(n) + 1 <= ms.limit;
  for (std::size_t i = 0; i < n; ++i) {
    const Elem& e = m[i];
    if (ms.split && room) {
      std::size_t slots = (e.kind == EK::Bracket && ms.bext) ? 1 : e.word.size() + 1;
      for (std::size_t k = 0; k < slots; ++k) {
        Multi r = without(m, i);
        r.push_back(with_inserted(e, k, '0', ms.bext));
        r.push_back(with_inserted(e, k, '1', ms.bext));
        push(std::move(r));
      }
    }
    if (ms.reacting_split && room) {
      std::size_t slots = (e.kind == EK::Bracket && ms.bext) ? 1 : e.word.size() + 1;
      for (std::size_t k = 0; k < slots; ++k) {
        Elem piece[2] = {with_inserted(e, k, '0', ms.bext), with_inserted(e, k, '1', ms.bext)};
        finalize(piece[0]);
        finalize(piece[1]);
        Multi rest = without(m, i);
        Multi mid = rest;
        mid.push_back(piece[0]);
        mid.push_back(piece[1]);
        if (ms.check_unique && !unique(mid)) continue;
        for (std::size_t j = 0; j < rest.size(); ++j) {
          for (int p = 0; p < 2; ++p) {
            const Elem& a = piece[p];
            const Elem& b = rest[j];
            if (a.base != b.base) continue;
            std::string w;
            if (ms.merge && merge_words(a.word, b.word, w)) {
              Multi r = without(rest, j);
              Elem x = a;
              x.word = w;
              r.push_back(std::move(x));
              r.push_back(piece[1 - p]);
              push(std::move(r), &mid);
            }
            if (ms.annihilate && (annihilating(a.word, b.word) || annihilating(b.word, a.word))) {
              Multi r = without(rest, j);
              r.push_back(piece[1 - p]);
              push(std::move(r), &mid);
            }
          }
        }
      }
    }
    if (e.kind != EK::Bracket) continue;
    const std::size_t c = e.content.size();
    if (room && c >= 2 && c < 16) {
      for (unsigned mask = 1; mask < (1u << c) - 1; ++mask) {
        if (!(mask & 1u)) continue;
        Elem x = e, y = e;
        x.content.clear();
        y.content.clear();
        for (std::size_t k = 0; k < c; ++k) ((mask >> k) & 1u ? x : y).content.push_back(e.content[k]);
        Multi r = without(m, i);
        r.push_back(std::move(x));
        r.push_back(std::move(y));
        push(std::move(r));
      }
    }
    std::vector<Multi> inner;
    std::vector<std::optional<Multi>> inner_mids;
    // Intermediate states must be unique as a whole, not just inside e.
    const bool need_mids = mids || ms.check_unique;
    moves(e.content, ms, inner, need_mids ? &inner_mids : nullptr);
    auto wrap = [&](Multi ic) {
      Multi r = without(m, i);
      if (!ic.empty()) {
        Elem x = e;
        x.content = std::move(ic);
        r.push_back(std::move(x));
      }
      return r;
    };
    for (std::size_t k = 0; k < inner.size(); ++k) {
      if (need_mids && inner_mids[k]) {
        Multi mid = wrap(*inner_mids[k]);
        if (ms.check_unique) {
          Multi whole = mid;
          finalize(whole);
          if (!unique(whole)) continue;
        }
        push(wrap(std::move(inner[k])), &mid);
      } else {
        push(wrap(std::move(inner[k])));
      }
    }
  }
}

}  // namespace alg_detail

using namespace alg_detail;

struct ConditionAlgebra::State {
  Multi elems;
  std::string ser;
};

struct ConditionAlgebra::ClassInfo {
  std::string key;
  Condition rep;
  int size = 0;
  bool complete = true;
  Multi rep_state;
  std::vector<Condition> size_one;
};

namespace {

constexpr std::size_t kClassCap = 20000;

MoveSet move_set(const EngineConfig& cfg, Theory theory) {
  MoveSet ms;
  ms.limit = cfg.limit;
  ms.bext = cfg.bracketExt;
  if (theory == Theory::Full) ms.merge = ms.annihilate = ms.reacting_split = ms.pair_reaction = true;
  return ms;
}

}  // namespace

ConditionAlgebra::ConditionAlgebra(EngineConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void ConditionAlgebra::check_well_formed(const Condition& c) const {
  if (!is_limited(c, cfg_.limit))
    throw Error(ErrorKind::SizeLimitExceeded, "a subterm exceeds the size limit " + std::to_string(cfg_.limit));
  if (!cfg_.unsafeMode && !has_unique_exponents(AnyTerm(c)))
    throw Error(ErrorKind::ExponentClash, "copy exponents are not unique");
}

std::shared_ptr<const ConditionAlgebra::ClassInfo> ConditionAlgebra::class_of(const Condition& c,
                                                                              Theory theory) const {
  State s;
  s.elems = to_multi(c, cfg_.bracketExt);
  flatten(s.elems, cfg_.limit, false);
  finalize(s.elems);
  s.ser = serialize(s.elems);
  return class_of_state(s, theory);
}

namespace {

struct Explorer {
  MoveSet ms;
  bool filter = true;
  bool full = true;

  Explorer(const EngineConfig& cfg, Theory theory, const Multi& start) : ms(move_set(cfg, theory)) {
    filter = !cfg.unsafeMode && unique(start);
    ms.check_unique = filter;
    full = theory == Theory::Full;
  }

  // Follows the first strictly lighter neighbor until there is none.
  Multi descend(Multi cur, std::vector<Multi>* path) const {
    std::vector<Multi> next;
    for (;;) {
      next.clear();
      moves(cur, ms, next);
      const Multi* best = nullptr;
      std::size_t bw = weight(cur);
      std::string bkey;
      for (const auto& n : next) {
        if (filter && !unique(n)) continue;
        std::size_t w = weight(n);
        std::string k = serialize(n);
        if (w < bw || (best && w == bw && k < bkey)) {
          best = &n;
          bw = w;
          bkey = std::move(k);
        }
      }
      if (!best) return cur;
      cur = *best;
      if (path) path->push_back(cur);
    }
  }

  // Breadth-first closure of start; false when the cap cut it short.
  bool explore(const Multi& start, std::vector<Multi>& members, std::vector<std::size_t>& parent) const {
    // Detours may grow the term a little beyond its starting point.
    const std::size_t max_weight = weight(start) + 2;
    const std::size_t max_len = max_word(start) + 1;
    MoveSet local = ms;
    std::unordered_set<std::string> seen{serialize(start)};
    members = {start};
    parent = {0};
    std::vector<Multi> next;
    for (std::size_t at = 0; at < members.size(); ++at) {
      next.clear();
      std::vector<Elem> ws;
      if (full) {
        std::unordered_set<std::string> wseen;
        witnesses(members[at], ws, wseen);
        local.witnesses = &ws;
      }
      moves(members[at], local, next);
      for (auto& n : next) {
        std::string key = serialize(n);
        if (seen.count(key)) continue;
        if (filter && !unique(n)) continue;
        if (full && (weight(n) > max_weight || max_word(n) > max_len)) continue;
        seen.insert(std::move(key));
        members.push_back(std::move(n));
        parent.push_back(at);
        if (members.size() >= kClassCap) return false;
      }
    }
    return true;
  }
};

}  // namespace

std::shared_ptr<const ConditionAlgebra::ClassInfo> ConditionAlgebra::class_of_state(const State& s,
                                                                                    Theory theory) const {
  auto& cache = classes_[theory == Theory::Full ? 0 : 1];
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache.find(s.ser); it != cache.end()) return it->second;
  }
  const Explorer ex(cfg_, theory, s.elems);

  // Descend first so that the detour allowance is measured from a reduced term.
  Multi low = ex.descend(s.elems, nullptr);
  if (std::string key = serialize(low); key != s.ser) {
    auto info = class_of_state(State{low, key}, theory);
    std::lock_guard<std::mutex> lock(mu_);
    cache.emplace(s.ser, info);
    return info;
  }

  std::vector<Multi> members;
  std::vector<std::size_t> parent;
  const bool complete = ex.explore(s.elems, members, parent);

  auto info = std::make_shared<ClassInfo>();
  info->complete = complete;
  const Multi* best = nullptr;
  std::string best_key;
  std::size_t best_weight = 0;
  std::size_t best_letters = 0;
  for (const auto& m : members) {
    std::string key = serialize(m);
    std::size_t w = weight(m);
    std::size_t l = letters(m);
    if (!best || std::make_tuple(m.size(), w, l, key) <
                     std::make_tuple(best->size(), best_weight, best_letters, best_key)) {
      best_letters = l;
      best = &m;
      best_key = key;
      best_weight = w;
    }
    if (m.size() == 1) info->size_one.push_back(to_condition(m));
  }
  info->key = best_key;
  info->rep_state = *best;
  info->rep = to_condition(*best);
  info->size = static_cast<int>(best->size());

  std::lock_guard<std::mutex> lock(mu_);
  if (complete) {
    for (const auto& m : members) cache.emplace(serialize(m), info);
  } else {
    cache.emplace(s.ser, info);
  }
  return info;
}

std::vector<Condition> ConditionAlgebra::derivation(const Condition& c, Theory theory) const {
  Multi start = to_multi(c, cfg_.bracketExt);
  flatten(start, cfg_.limit, false);
  finalize(start);
  const Explorer ex(cfg_, theory, start);
  std::vector<Multi> path{start};
  Multi low = ex.descend(start, &path);
  auto info = class_of_state(State{low, serialize(low)}, theory);

  if (serialize(low) != info->key) {
    std::vector<Multi> members;
    std::vector<std::size_t> parent;
    ex.explore(low, members, parent);
    std::size_t i = 0;
    while (i < members.size() && serialize(members[i]) != info->key) ++i;
    if (i == members.size()) return {};
    std::vector<std::size_t> chain;
    for (std::size_t k = i; k != 0; k = parent[k]) chain.push_back(k);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) path.push_back(members[*it]);
  }

  // Spell out compound moves through their intermediate state.
  std::vector<Condition> out{c};
  auto emit = [&out](const Multi& m) {
    Condition t = to_condition(m);
    if (!(t == out.back())) out.push_back(t);
  };
  emit(path.front());
  MoveSet ms = ex.ms;
  for (std::size_t k = 1; k < path.size(); ++k) {
    std::vector<Elem> ws;
    if (ex.full) {
      std::unordered_set<std::string> wseen;
      witnesses(path[k - 1], ws, wseen);
      ms.witnesses = &ws;
    }
    std::vector<Multi> next;
    std::vector<std::optional<Multi>> mids;
    moves(path[k - 1], ms, next, &mids);
    const std::string target = serialize(path[k]);
    for (std::size_t j = 0; j < next.size(); ++j)
      if (mids[j] && serialize(next[j]) == target) {
        emit(*mids[j]);
        break;
      }
    emit(path[k]);
  }
  return out;
}

CanonicalCondition ConditionAlgebra::canonicalize(const Condition& c, Theory theory) const {
  check_well_formed(c);
  auto info = class_of(c, theory);
  return {info->key, info->rep, info->size, info->complete};
}

CanonicalCondition ConditionAlgebra::constructor_key(const Condition& c, Theory theory) const {
  auto info = class_of(c, theory);
  for (int guard = 0; guard < 16; ++guard) {
    const Multi& r = info->rep_state;
    if (r.size() != 1 || r[0].kind != EK::Bracket || !r[0].word.empty()) break;
    State inner;
    inner.elems = r[0].content;
    inner.ser = serialize(inner.elems);
    auto ii = class_of_state(inner, theory);
    if (ii->size > 1) break;
    info = ii;
  }
  return {info->key, info->rep, info->size, info->complete};
}

bool ConditionAlgebra::cond_equal(const Condition& a, const Condition& b) const {
  return canonicalize(a).key == canonicalize(b).key;
}

bool ConditionAlgebra::cond_equal_direct(const Condition& a, const Condition& b) const {
  check_well_formed(a);
  check_well_formed(b);
  Multi sa = to_multi(a, cfg_.bracketExt);
  Multi sb = to_multi(b, cfg_.bracketExt);
  flatten(sa, cfg_.limit, false);
  flatten(sb, cfg_.limit, false);
  finalize(sa);
  finalize(sb);
  const std::string target = serialize(sb);
  std::string start = serialize(sa);
  if (start == target) return true;
  MoveSet ms = move_set(cfg_, Theory::Symmetric);
  ms.split = true;
  const bool filter = !cfg_.unsafeMode && unique(sa);
  // No direct move removes a leaf, so states with more leaves than b are dead ends.
  const std::size_t max_leaves = leaf_count(sb);
  if (leaf_count(sa) > max_leaves) return false;
  std::unordered_set<std::string> seen{start};
  std::deque<Multi> queue{sa};
  std::vector<Multi> next;
  while (!queue.empty() && seen.size() < kClassCap) {
    Multi cur = std::move(queue.front());
    queue.pop_front();
    next.clear();
    moves(cur, ms, next);
    for (auto& n : next) {
      std::string key = serialize(n);
      if (key == target) return true;
      if (seen.count(key) || (filter && !unique(n)) || leaf_count(n) > max_leaves) continue;
      seen.insert(key);
      queue.push_back(std::move(n));
    }
  }
  return false;
}

bool ConditionAlgebra::is_neutral(const Condition& c) const { return canonicalize(c).size == 0; }

Condition ConditionAlgebra::cond_product(const Condition& a, const Condition& b) const {
  Condition p = Condition::product(a, b);
  // Uniqueness is a property of the product as written, checked before any rewriting.
  if (!cfg_.unsafeMode && !has_unique_exponents(AnyTerm(p)))
    throw Error(ErrorKind::ExponentClash, "product has clashing copy exponents");
  if (!is_limited(p, cfg_.limit)) {
    Condition q = Condition::product(canonicalize(a).rep, canonicalize(b).rep);
    if (!is_limited(q, cfg_.limit))
      throw Error(ErrorKind::SizeLimitExceeded, "product exceeds the size limit " + std::to_string(cfg_.limit));
    p = q;
  }
  if (!cfg_.unsafeMode && !has_unique_exponents(AnyTerm(p)))
    throw Error(ErrorKind::ExponentClash, "product has clashing copy exponents");
  return p;
}

std::vector<Condition> ConditionAlgebra::size_one_members(const Condition& c, Theory theory) const {
  return class_of(c, theory)->size_one;
}

UnsafeTrace ConditionAlgebra::unsafe_closure_demo(const Condition& a) const {
  if (!cfg_.unsafeMode)
    throw Error(ErrorKind::Refused, "the closure demonstration requires unsafe mode");
  using C = Condition;
  const C I = C::neutral();
  UnsafeTrace t;
  auto annihilation = [&](const C& x) {
    const C x0 = C::copy0(x), x1 = C::copy1(x);
    std::vector<TraceStep> s;
    s.push_back({C::product(x, C::inverse(x)), "start"});
    s.push_back({C::product(C::product(x0, x1), C::inverse(C::product(x0, x1))), "split A = A^0 A^1"});
    s.push_back({C::product_of({x0, x1, C::inverse(x0), C::inverse(x1)}), "distribute inverse over the product"});
    s.push_back({C::product(C::product(x0, C::inverse(x1)), C::product(x1, C::inverse(x0))), "regroup"});
    s.push_back({C::product(I, I), "annihilation A^0 A^1- = I and A^1 A^0- = I"});
    s.push_back({I, "unit"});
    return s;
  };
  if (a.kind() == CondKind::Neutral) {
    t.annihilation = {{I, "start"}};
    t.contradiction = {{I, "start"}, {I, "I^0 = I = I^1"}};
    t.verified = true;
    return t;
  }
  t.annihilation = annihilation(a);
  const C a0 = C::copy0(a), a1 = C::copy1(a);
  t.contradiction = {
      {a0, "start"},
      {C::product(a0, I), "unit"},
      {C::product(a0, C::product(a1, C::inverse(a0))), "annihilation A^1 A^0- = I, backwards"},
      {C::product(C::product(a0, C::inverse(a0)), a1), "regroup"},
      {C::product(I, a1), "A A^- = I at A := A^0"},
      {a1, "unit"},
  };

  EngineConfig vc = cfg_;
  vc.unsafeMode = true;
  // The trace multiplies A by up to four of its copies.
  vc.limit = std::max({cfg_.limit, 4, 4 * size(a)});
  auto check = [&](const std::vector<TraceStep>& steps, std::size_t skip) {
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (i == skip) continue;
      if (!laws::reachable(steps[i - 1].term, steps[i].term, vc, 200000, 4)) return false;
    }
    return true;
  };
  bool ok = check(t.annihilation, 0) && check(t.contradiction, 4);
  // The lemma step: the first trace, instantiated at A^0, discharges A^0 A^0-.
  ok = ok && check(annihilation(a0), 0);
  t.verified = ok;
  return t;
}

}  // namespace cn
