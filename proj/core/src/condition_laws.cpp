#include "cn/condition_laws.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cn/syntax.hpp"
#include "cn/term_model.hpp"

namespace cn::laws {

namespace {

using C = Condition;
using Rewrites = std::vector<std::pair<C, std::string>>;

bool is_unary(const C& c) {
  return c.kind() == CondKind::Inverse || c.kind() == CondKind::Copy0 || c.kind() == CondKind::Copy1;
}

C rebuild_unary(CondKind k, const C& inner) {
  switch (k) {
    case CondKind::Inverse: return C::inverse(inner);
    case CondKind::Copy0: return C::copy0(inner);
    case CondKind::Copy1: return C::copy1(inner);
    default: return C::bracket(inner);
  }
}

C product_list(std::vector<C> fs) {
  if (fs.empty()) return C::neutral();
  return C::product_of(fs);
}

std::vector<C> without(const std::vector<C>& fs, std::size_t i, std::size_t j = static_cast<std::size_t>(-1)) {
  std::vector<C> r;
  for (std::size_t k = 0; k < fs.size(); ++k)
    if (k != i && k != j) r.push_back(fs[k]);
  return r;
}

void subterms(const C& c, std::set<std::string>& seen, std::vector<C>& out) {
  if (c.kind() == CondKind::Neutral) return;
  if (seen.insert(render(c)).second) out.push_back(c);
  for (std::size_t i = 0; i < c.child_count(); ++i) subterms(c.child(i), seen, out);
}

struct Gen {
  const EngineConfig& cfg;
  const LawOptions& opts;
  const std::vector<C>& witnesses;

  // Rewrites of a whole factor list (the factors of one product node).
  Rewrites list(const std::vector<C>& fs) const {
    Rewrites out;
    const std::size_t n = fs.size();
    auto emit = [&](std::vector<C> r, const char* law) { out.emplace_back(product_list(std::move(r)), law); };
    for (std::size_t i = 0; i < n; ++i) {
      const C& a = fs[i];
      if (a.kind() == CondKind::Neutral && n > 1) emit(without(fs, i), "unit");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const C& b = fs[j];
        if (a.kind() == CondKind::Copy0 && b.kind() == CondKind::Copy1 && a.inner() == b.inner()) {
          auto r = without(fs, i, j);
          r.push_back(a.inner());
          emit(r, "merge A^0 A^1 = A");
        }
        if (b.kind() == CondKind::Inverse && is_unary(b.inner())) {
          const C& bi = b.inner();
          if ((a.kind() == CondKind::Copy0 && bi.kind() == CondKind::Copy1 && a.inner() == bi.inner()) ||
              (a.kind() == CondKind::Copy1 && bi.kind() == CondKind::Copy0 && a.inner() == bi.inner()))
            emit(without(fs, i, j), "annihilation");
        }
        if (i < j && a.kind() == CondKind::Bracket && b.kind() == CondKind::Bracket &&
            size(a.inner()) + size(b.inner()) <= cfg.limit) {
          auto r = without(fs, i, j);
          r.push_back(C::bracket(C::product(a.inner(), b.inner())));
          emit(r, "bracket merge");
        }
        if (i < j && is_unary(a) && a.kind() == b.kind() && size(a.inner()) + size(b.inner()) <= cfg.limit) {
          auto r = without(fs, i, j);
          r.push_back(rebuild_unary(a.kind(), C::product(a.inner(), b.inner())));
          emit(r, "group");
        }
        if (a.kind() == CondKind::Inverse && b.kind() != CondKind::Inverse && b.kind() != CondKind::Neutral &&
            size(a.inner()) + size(b) <= cfg.limit) {
          auto r = without(fs, i, j);
          r.push_back(C::inverse(C::product(a.inner(), C::inverse(b))));
          emit(r, "group A^- B = (A B^-)^-");
        }
      }
      if (a.kind() == CondKind::Bracket && a.inner().kind() == CondKind::Product) {
        auto in = factors(a.inner());
        const std::size_t m = in.size();
        if (m < 12) {
          for (unsigned mask = 1; mask < (1u << m) - 1; ++mask) {
            if (!(mask & 1u)) continue;
            std::vector<C> x, y;
            for (std::size_t k = 0; k < m; ++k) ((mask >> k) & 1u ? x : y).push_back(in[k]);
            auto r = without(fs, i);
            r.push_back(C::bracket(product_list(x)));
            r.push_back(C::bracket(product_list(y)));
            emit(r, "bracket split");
          }
        }
      }
      if (opts.split && a.kind() != CondKind::Neutral) {
        auto r = without(fs, i);
        r.push_back(C::copy0(a));
        r.push_back(C::copy1(a));
        emit(r, "split A = A^0 A^1");
      }
      for (auto& [ra, law] : node(a)) {
        auto r = fs;
        r[i] = ra;
        out.emplace_back(product_list(std::move(r)), law);
      }
    }
    if (opts.invent)
      for (const auto& w : witnesses) {
        auto r0 = fs;
        r0.push_back(C::copy0(w));
        r0.push_back(C::inverse(C::copy1(w)));
        emit(r0, "annihilation, backwards");
        auto r1 = fs;
        r1.push_back(C::copy1(w));
        r1.push_back(C::inverse(C::copy0(w)));
        emit(r1, "annihilation, backwards");
      }
    return out;
  }

  // Rewrites of a single non-product node, including inside it.
  Rewrites node(const C& c) const {
    Rewrites out;
    if (is_unary(c)) {
      const C& in = c.inner();
      if (in.kind() == CondKind::Product) {
        std::vector<C> fs;
        for (const auto& f : factors(in)) fs.push_back(rebuild_unary(c.kind(), f));
        out.emplace_back(product_list(fs), "distribute");
      }
      if (c.kind() == CondKind::Inverse && in.kind() == CondKind::Inverse)
        out.emplace_back(in.inner(), "A^-- = A");
      if (in.kind() == CondKind::Neutral) out.emplace_back(C::neutral(), "I^x = I");
      if (cfg.bracketExt && in.kind() == CondKind::Bracket)
        out.emplace_back(C::bracket(rebuild_unary(c.kind(), in.inner())), "bracket extension");
      if (opts.invent && c.kind() == CondKind::Inverse)
        out.emplace_back(C::inverse(C::inverse(c)), "A = A^--, backwards");
      for (auto& [r, law] : sub(in)) out.emplace_back(rebuild_unary(c.kind(), r), law);
    } else if (c.kind() == CondKind::Bracket) {
      const C& in = c.inner();
      if (in.kind() == CondKind::Neutral) out.emplace_back(C::neutral(), "<I> = I");
      if (in.kind() == CondKind::Bracket) out.emplace_back(in, "<<A>> = <A>");
      auto fs = factors(in);
      for (std::size_t i = 0; fs.size() > 1 && i < fs.size(); ++i) {
        if (fs[i].kind() != CondKind::Bracket) continue;
        auto r = without(fs, i);
        for (const auto& g : factors(fs[i].inner())) r.push_back(g);
        out.emplace_back(C::bracket(product_list(r)), "<A <B>> = <A B>");
      }
      if (opts.invent && fs.size() > 1 && fs.size() < 12) {
        for (unsigned mask = 1; mask < (1u << fs.size()) - 1; ++mask) {
          std::vector<C> x, y;
          for (std::size_t k = 0; k < fs.size(); ++k) ((mask >> k) & 1u ? y : x).push_back(fs[k]);
          x.push_back(C::bracket(product_list(y)));
          out.emplace_back(C::bracket(product_list(x)), "<A <B>> = <A B>, backwards");
        }
      }
      if (opts.invent) out.emplace_back(C::bracket(c), "<<A>> = <A>, backwards");
      if (cfg.bracketExt && is_unary(in))
        out.emplace_back(rebuild_unary(in.kind(), C::bracket(in.inner())), "bracket extension");
      for (auto& [r, law] : sub(in)) out.emplace_back(C::bracket(r), law);
    }
    return out;
  }

  // Rewrites of an arbitrary term; a non-product is a one-factor list.
  Rewrites sub(const C& c) const { return list(factors(c)); }
};

}  // namespace

Condition ac_normal(const Condition& c) {
  switch (c.kind()) {
    case CondKind::Product: {
      std::vector<std::pair<std::string, C>> fs;
      for (const auto& f : factors(c)) {
        C n = ac_normal(f);
        for (const auto& g : factors(n))
          if (g.kind() != CondKind::Neutral) fs.emplace_back(render(g), g);
      }
      std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<C> out;
      for (auto& p : fs) out.push_back(p.second);
      return C::product_of(out);
    }
    case CondKind::Inverse:
    case CondKind::Copy0:
    case CondKind::Copy1:
    case CondKind::Bracket: {
      C in = ac_normal(c.inner());
      return in.kind() == CondKind::Neutral ? in : rebuild_unary(c.kind(), in);
    }
    default: return c;
  }
}

std::vector<std::pair<Condition, std::string>> neighbors(const Condition& c, const EngineConfig& cfg,
                                                         const LawOptions& opts) {
  std::vector<C> witnesses;
  if (opts.invent) {
    std::set<std::string> seen;
    subterms(c, seen, witnesses);
  }
  Gen g{cfg, opts, witnesses};
  Rewrites raw = g.sub(ac_normal(c));
  std::vector<std::pair<Condition, std::string>> out;
  std::set<std::string> keys;
  for (auto& [r, law] : raw) {
    C n = ac_normal(r);
    if (!is_limited(n, cfg.limit)) continue;
    if (!cfg.unsafeMode && !has_unique_exponents(AnyTerm(n))) continue;
    if (keys.insert(render(n)).second) out.emplace_back(n, law);
  }
  return out;
}

bool reachable(const Condition& a, const Condition& b, const EngineConfig& cfg, std::size_t maxNodes,
               int maxDepth, const LawOptions& opts) {
  struct Side {
    std::unordered_map<std::string, int> seen;
    std::vector<C> frontier;
    int depth = 0;
  };
  C na = ac_normal(a), nb = ac_normal(b);
  Side sa, sb;
  sa.seen[render(na)] = 0;
  sa.frontier = {na};
  sb.seen[render(nb)] = 0;
  sb.frontier = {nb};
  if (sb.seen.count(render(na))) return true;
  while (!sa.frontier.empty() || !sb.frontier.empty()) {
    if (sa.seen.size() + sb.seen.size() >= maxNodes) return false;
    const bool a_open = !sa.frontier.empty() && (maxDepth < 0 || sa.depth < maxDepth);
    const bool b_open = !sb.frontier.empty() && (maxDepth < 0 || sb.depth < maxDepth);
    if (!a_open && !b_open) return false;
    Side& s = (!b_open || (a_open && sa.frontier.size() <= sb.frontier.size())) ? sa : sb;
    Side& other = (&s == &sa) ? sb : sa;
    std::vector<C> next;
    for (const auto& t : s.frontier) {
      for (auto& [n, law] : neighbors(t, cfg, opts)) {
        std::string k = render(n);
        if (other.seen.count(k)) return true;
        if (s.seen.emplace(k, s.depth + 1).second) next.push_back(n);
        if (s.seen.size() + other.seen.size() >= maxNodes) return false;
      }
    }
    s.frontier = std::move(next);
    ++s.depth;
  }
  return false;
}

}  // namespace cn::laws
