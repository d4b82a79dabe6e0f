#include "cn/equivalence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cn/error.hpp"
#include "cn/syntax.hpp"
#include "cn/term_model.hpp"

namespace cn {

namespace {

using N = NumberTerm;
using C = Condition;

N remake(const N& t, std::vector<C> conds, std::vector<N> args) {
  return t.with_children(std::move(conds), std::move(args));
}

int copy_bit(const N& t) {
  if (t.kind() == NumKind::Copy0) return 0;
  if (t.kind() == NumKind::Copy1) return 1;
  return -1;
}

int cond_copy_bit(const C& c) {
  if (c.kind() == CondKind::Copy0) return 0;
  if (c.kind() == CondKind::Copy1) return 1;
  return -1;
}

// One level of copy distribution, if the argument allows it.
bool push_once(const N& a, int bit, N& out) {
  switch (a.kind()) {
    case NumKind::Zero: out = N::zero(C::copy(a.cond(0), bit)); return true;
    case NumKind::Suc: out = N::suc(C::copy(a.cond(0), bit), N::copy(a.arg(), bit)); return true;
    case NumKind::Ann:
      out = N::ann(C::copy(a.cond(0), bit), C::copy(a.cond(1), bit), N::copy(a.arg(), bit));
      return true;
    case NumKind::Tuple: {
      std::vector<N> items;
      for (const auto& x : a.args()) items.push_back(N::copy(x, bit));
      out = N::tuple(std::move(items));
      return true;
    }
    default: return false;
  }
}

// Copy-expansion, left to right, if the result respects the size limit.
bool expand_once(const C& A, const N& a, int limit, N& out) {
  if (size(A) + 1 > limit) return false;
  switch (a.kind()) {
    case NumKind::Zero: out = N::zero(C::bracket(C::product(A, a.cond(0)))); return true;
    case NumKind::Suc:
      out = N::suc(C::bracket(C::product(C::copy0(A), a.cond(0))), N::cond_app(C::copy1(A), a.arg()));
      return true;
    case NumKind::Ann:
      out = N::ann(C::bracket(C::product(C::copy0(C::copy0(A)), a.cond(0))),
                   C::bracket(C::product(C::copy1(C::copy0(A)), a.cond(1))), N::cond_app(C::copy1(A), a.arg()));
      return true;
    default: return false;
  }
}

bool is_limited_number(const N& a, int limit) {
  for (const auto& c : a.conds())
    if (!is_limited(c, limit)) return false;
  for (const auto& x : a.args())
    if (!is_limited_number(x, limit)) return false;
  return true;
}

}  // namespace

bool is_constructor_number(const NumberTerm& a) {
  const N* t = &a;
  while (t->kind() == NumKind::Suc || t->kind() == NumKind::Ann) t = &t->arg();
  return t->kind() == NumKind::Zero;
}

NumberTerm copy_push(const NumberTerm& a) {
  std::vector<N> args;
  for (const auto& x : a.args()) args.push_back(copy_push(x));
  N t = remake(a, a.conds(), std::move(args));
  int bit = copy_bit(t);
  N pushed;
  if (bit >= 0 && push_once(t.arg(), bit, pushed)) return copy_push(pushed);
  return t;
}

std::string ConstructorClassKey::serialize() const {
  std::string r = "zero{" + tail + "}";
  for (const auto& p : positive) r += " +" + p;
  for (const auto& n : negative) r += " -" + n;
  r += " #" + std::to_string(suc_count) + "/" + std::to_string(ann_count);
  return r;
}

Chain Equivalence::chain_of(const NumberTerm& normalized, Mode mode) const {
  Chain c;
  const N* t = &normalized;
  while (t->kind() == NumKind::Suc || t->kind() == NumKind::Ann) {
    c.positive.push_back(alg_.constructor_key(t->cond(0), theory(mode)));
    if (t->kind() == NumKind::Ann) c.negative.push_back(alg_.constructor_key(t->cond(1), theory(mode)));
    t = &t->arg();
  }
  c.tail = *t;
  return c;
}

NumberTerm Equivalence::build_chain(Chain c, Mode mode) const {
  auto by_key = [](const CanonicalCondition& a, const CanonicalCondition& b) { return a.key < b.key; };
  std::sort(c.positive.begin(), c.positive.end(), by_key);
  std::sort(c.negative.begin(), c.negative.end(), by_key);
  if (mode == Mode::Full) {
    for (std::size_t k = 0; k < c.negative.size();) {
      const C inv = C::inverse(c.negative[k].rep);
      auto it = std::find_if(c.positive.begin(), c.positive.end(), [&](const CanonicalCondition& p) {
        return alg_.is_neutral(C::product(p.rep, inv));
      });
      if (it != c.positive.end()) {
        c.positive.erase(it);
        c.negative.erase(c.negative.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        ++k;
      }
    }
  }
  N t = c.tail;
  if (t.kind() == NumKind::Zero) t = N::zero(alg_.constructor_key(t.cond(0), theory(mode)).rep);
  const std::size_t sucs = c.positive.size() >= c.negative.size() ? c.positive.size() - c.negative.size() : 0;
  for (std::size_t k = c.negative.size(); k-- > 0;) {
    if (sucs + k >= c.positive.size()) throw Error(ErrorKind::IllFormed, "chain with more negative slots than positive");
    t = N::ann(c.positive[sucs + k].rep, c.negative[k].rep, t);
  }
  for (std::size_t i = sucs; i-- > 0;) t = N::suc(c.positive[i].rep, t);
  return t;
}

NumberTerm Equivalence::norm(const NumberTerm& a, Mode mode) const {
  const int limit = alg_.config().limit;
  switch (a.kind()) {
    case NumKind::Var: return a;
    case NumKind::Zero: return build_chain(Chain{{}, {}, a}, mode);
    case NumKind::Suc:
    case NumKind::Ann: {
      Chain c = chain_of(norm(a.arg(), mode), mode);
      c.positive.push_back(alg_.constructor_key(a.cond(0), theory(mode)));
      if (a.kind() == NumKind::Ann) c.negative.push_back(alg_.constructor_key(a.cond(1), theory(mode)));
      return build_chain(std::move(c), mode);
    }
    case NumKind::Tuple: {
      std::vector<N> items;
      for (const auto& x : a.args()) items.push_back(norm(x, mode));
      return N::tuple(std::move(items));
    }
    case NumKind::Proj: {
      N inner = norm(a.arg(), mode);
      if (inner.kind() == NumKind::Tuple && a.index() >= 1 && static_cast<std::size_t>(a.index()) <= inner.args().size())
        return inner.args()[static_cast<std::size_t>(a.index() - 1)];
      return N::proj(a.index(), inner);
    }
    case NumKind::CondApp: {
      N inner = norm(a.arg(), mode);
      N expanded;
      if (expand_once(a.cond(0), inner, limit, expanded)) return norm(expanded, mode);
      return N::cond_app(alg_.canonicalize(a.cond(0), theory(mode)).rep, inner);
    }
    case NumKind::Copy0:
    case NumKind::Copy1: {
      N inner = norm(a.arg(), mode);
      N pushed;
      if (push_once(inner, copy_bit(a), pushed)) return norm(pushed, mode);
      return N::copy(inner, copy_bit(a));
    }
    case NumKind::FunApp: {
      std::vector<N> args;
      for (const auto& x : a.args()) args.push_back(norm(x, mode));
      return N::fun_app(a.name(), std::move(args));
    }
  }
  return a;
}

NumberTerm Equivalence::normalize(const NumberTerm& a, Mode mode) const { return norm(a, mode); }

std::string Equivalence::key(const NumberTerm& a, Mode mode) const { return render(norm(a, mode)); }

ConstructorClassKey Equivalence::constructor_canonical(const NumberTerm& a) const {
  if (!is_constructor_number(a))
    throw Error(ErrorKind::NotConstructorNumber, render(a) + " is not built from zero, suc and ann");
  Chain c = chain_of(norm(a, Mode::Full), Mode::Full);
  ConstructorClassKey k;
  k.tail = alg_.constructor_key(c.tail.cond(0)).key;
  for (const auto& p : c.positive) k.positive.push_back(p.key);
  for (const auto& n : c.negative) k.negative.push_back(n.key);
  std::sort(k.positive.begin(), k.positive.end());
  std::sort(k.negative.begin(), k.negative.end());
  k.ann_count = static_cast<int>(c.negative.size());
  k.suc_count = static_cast<int>(c.positive.size()) - k.ann_count;
  return k;
}

std::vector<NumberTerm> Equivalence::smooth_neighbors(const NumberTerm& a, Mode mode) const {
  const Theory th = theory(mode);
  const int limit = alg_.config().limit;

  // Rewrites of one condition slot of a constructor.
  auto cond_variants = [&](const C& c) {
    std::vector<C> out;
    out.push_back(C::bracket(c));
    if (c.kind() == CondKind::Bracket && size(c.inner()) == 1) out.push_back(c.inner());
    for (const auto& m : alg_.size_one_members(c, th))
      if (m != c) out.push_back(m);
    return out;
  };

  // Laws applied at the root of t.
  auto local = [&](const N& t) {
    std::vector<N> out;
    switch (t.kind()) {
      case NumKind::Suc: {
        const N& in = t.arg();
        if (in.kind() == NumKind::Suc) out.push_back(N::suc(in.cond(0), N::suc(t.cond(0), in.arg())));
        if (in.kind() == NumKind::Ann) {
          out.push_back(N::ann(in.cond(0), in.cond(1), N::suc(t.cond(0), in.arg())));
          out.push_back(N::suc(in.cond(0), N::ann(t.cond(0), in.cond(1), in.arg())));
        }
        int bit = cond_copy_bit(t.cond(0));
        if (bit >= 0 && copy_bit(in) == bit) out.push_back(N::copy(N::suc(t.cond(0).inner(), in.arg()), bit));
        break;
      }
      case NumKind::Ann: {
        const N& in = t.arg();
        if (in.kind() == NumKind::Suc) out.push_back(N::suc(in.cond(0), N::ann(t.cond(0), t.cond(1), in.arg())));
        if (in.kind() == NumKind::Ann) {
          out.push_back(N::ann(in.cond(0), in.cond(1), N::ann(t.cond(0), t.cond(1), in.arg())));
          out.push_back(N::ann(t.cond(0), in.cond(1), N::ann(in.cond(0), t.cond(1), in.arg())));
        }
        int bit = cond_copy_bit(t.cond(0));
        if (bit >= 0 && cond_copy_bit(t.cond(1)) == bit && copy_bit(in) == bit)
          out.push_back(N::copy(N::ann(t.cond(0).inner(), t.cond(1).inner(), in.arg()), bit));
        if (mode == Mode::Full && alg_.is_neutral(C::product(t.cond(0), C::inverse(t.cond(1))))) out.push_back(in);
        break;
      }
      case NumKind::Zero: {
        int bit = cond_copy_bit(t.cond(0));
        if (bit >= 0) out.push_back(N::copy(N::zero(t.cond(0).inner()), bit));
        break;
      }
      case NumKind::Tuple: {
        int bit = copy_bit(t.args()[0]);
        bool all = bit >= 0;
        for (const auto& x : t.args()) all = all && copy_bit(x) == bit;
        if (all) {
          std::vector<N> items;
          for (const auto& x : t.args()) items.push_back(x.arg());
          out.push_back(N::copy(N::tuple(std::move(items)), bit));
        }
        break;
      }
      case NumKind::Copy0:
      case NumKind::Copy1: {
        N pushed;
        if (push_once(t.arg(), copy_bit(t), pushed)) out.push_back(pushed);
        break;
      }
      case NumKind::Proj:
        if (t.arg().kind() == NumKind::Tuple && static_cast<std::size_t>(t.index()) <= t.arg().args().size())
          out.push_back(t.arg().args()[static_cast<std::size_t>(t.index() - 1)]);
        break;
      case NumKind::CondApp: {
        N expanded;
        if (expand_once(t.cond(0), t.arg(), limit, expanded)) out.push_back(expanded);
        for (const auto& m : alg_.size_one_members(t.cond(0), th))
          if (m != t.cond(0)) out.push_back(N::cond_app(m, t.arg()));
        break;
      }
      default: break;
    }
    if (t.is_constructor()) {
      for (std::size_t k = 0; k < t.conds().size(); ++k)
        for (const auto& v : cond_variants(t.cond(k))) {
          auto conds = t.conds();
          conds[k] = v;
          out.push_back(remake(t, std::move(conds), t.args()));
        }
    }
    // Copy-expansion read right to left.
    if (mode == Mode::Full && t.is_constructor()) {
      auto split_off = [](const C& br, const C* needed, std::vector<std::pair<C, C>>& res) {
        // res: (rest A, removed factor) pairs for a bracket's factor list.
        if (br.kind() != CondKind::Bracket) return;
        auto fs = factors(br.inner());
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (needed && fs[i] != *needed) continue;
          std::vector<C> rest;
          for (std::size_t j = 0; j < fs.size(); ++j)
            if (j != i) rest.push_back(fs[j]);
          if (rest.empty()) continue;
          res.emplace_back(C::product_of(rest), fs[i]);
        }
      };
      if (t.kind() == NumKind::Zero) {
        std::vector<std::pair<C, C>> parts;
        split_off(t.cond(0), nullptr, parts);
        for (auto& [rest, f] : parts)
          if (size(rest) == 1) out.push_back(N::cond_app(f, N::zero(rest)));
      } else if (t.arg().kind() == NumKind::CondApp && t.arg().cond(0).kind() == CondKind::Copy1) {
        const C A = t.arg().cond(0).inner();
        const N& rest_arg = t.arg().arg();
        if (t.kind() == NumKind::Suc) {
          std::vector<std::pair<C, C>> parts;
          C want = C::copy0(A);
          split_off(t.cond(0), &want, parts);
          for (auto& [rest, f] : parts)
            if (size(rest) == 1) out.push_back(N::cond_app(A, N::suc(rest, rest_arg)));
        } else {
          std::vector<std::pair<C, C>> p0, p1;
          C w0 = C::copy0(C::copy0(A)), w1 = C::copy1(C::copy0(A));
          split_off(t.cond(0), &w0, p0);
          split_off(t.cond(1), &w1, p1);
          for (auto& [r0, f0] : p0)
            for (auto& [r1, f1] : p1)
              if (size(r0) == 1 && size(r1) == 1) out.push_back(N::cond_app(A, N::ann(r0, r1, rest_arg)));
        }
      }
    }
    return out;
  };

  std::vector<N> raw;
  auto everywhere = [&](auto&& self, const N& t) -> std::vector<N> {
    std::vector<N> res = local(t);
    for (std::size_t i = 0; i < t.args().size(); ++i)
      for (auto& r : self(self, t.args()[i])) {
        auto args = t.args();
        args[i] = std::move(r);
        res.push_back(remake(t, t.conds(), std::move(args)));
      }
    return res;
  };
  raw = everywhere(everywhere, a);

  std::vector<N> out;
  std::set<std::string> seen;
  for (auto& r : raw) {
    if (!is_limited_number(r, limit) || !is_well_formed_number(r, alg_)) continue;
    if (seen.insert(render(r)).second) out.push_back(std::move(r));
  }
  return out;
}

Verdict Equivalence::smooth_equal(const NumberTerm& a, const NumberTerm& b, std::size_t budget) const {
  struct Side {
    std::unordered_set<std::string> seen;
    std::vector<N> frontier;
  };
  N na = norm(a, Mode::Full), nb = norm(b, Mode::Full);
  std::string ka = render(na), kb = render(nb);
  if (ka == kb) return Verdict::True;
  Side sa{{ka}, {na}}, sb{{kb}, {nb}};
  while (!sa.frontier.empty() || !sb.frontier.empty()) {
    Side& s = sb.frontier.empty() || (!sa.frontier.empty() && sa.seen.size() <= sb.seen.size()) ? sa : sb;
    Side& o = &s == &sa ? sb : sa;
    std::vector<N> next;
    for (const auto& t : s.frontier)
      for (const auto& n : smooth_neighbors(t, Mode::Full)) {
        N nn = norm(n, Mode::Full);
        std::string k = render(nn);
        if (o.seen.count(k)) return Verdict::True;
        if (s.seen.insert(k).second) next.push_back(std::move(nn));
        if (sa.seen.size() + sb.seen.size() > budget) return Verdict::Unknown;
      }
    s.frontier = std::move(next);
  }
  return Verdict::False;
}

}  // namespace cn
