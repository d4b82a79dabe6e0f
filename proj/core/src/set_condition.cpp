#include "cn/set_condition.hpp"

#include <algorithm>
#include <optional>

#include "cn/term_model.hpp"

namespace cn {

std::string ElementaryCondition::to_string() const {
  return exponent.empty() ? base : base + "^" + exponent;
}

SetCondition SetCondition::of(std::vector<ElementaryCondition> elems) {
  std::sort(elems.begin(), elems.end());
  return SetCondition{std::move(elems)};
}

std::string SetCondition::to_string() const {
  if (elems.empty()) return "{}";
  std::string r = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) r += ", ";
    r += elems[i].to_string();
  }
  return r + "}";
}

std::string cancel_double_inverse(const std::string& word) {
  std::string out;
  for (char ch : word) {
    if (ch == '-' && !out.empty() && out.back() == '-')
      out.pop_back();
    else
      out.push_back(ch);
  }
  return out;
}

bool has_unique_exponents(const SetCondition& s) {
  auto project = [](const std::string& w) {
    std::string p;
    for (char ch : w)
      if (ch != '-') p.push_back(ch);
    return p;
  };
  for (std::size_t i = 0; i < s.elems.size(); ++i)
    for (std::size_t j = i + 1; j < s.elems.size(); ++j)
      if (s.elems[i].base == s.elems[j].base &&
          exponents_comparable(project(s.elems[i].exponent), project(s.elems[j].exponent)))
        return false;
  return true;
}

namespace {

bool ends_with(const std::string& w, const std::string& suffix, std::string& stem) {
  if (w.size() < suffix.size() || w.compare(w.size() - suffix.size(), suffix.size(), suffix) != 0)
    return false;
  stem = w.substr(0, w.size() - suffix.size());
  return true;
}

// Result of one of rules (2)-(4) on an ordered pair, if applicable.
// An engaged optional holding nullopt means "both removed".
std::optional<std::optional<ElementaryCondition>> react_ordered(const ElementaryCondition& a,
                                                                const ElementaryCondition& b) {
  if (a.base != b.base) return std::nullopt;
  std::string pa, pb;
  if (ends_with(a.exponent, "0", pa) && ends_with(b.exponent, "1", pb) && pa == pb)
    return std::optional<ElementaryCondition>(ElementaryCondition{a.base, pa});
  if (ends_with(a.exponent, "0", pa) && ends_with(b.exponent, "1-", pb) && pa == pb)
    return std::optional<ElementaryCondition>();
  if (ends_with(a.exponent, "1", pa) && ends_with(b.exponent, "0-", pb) && pa == pb)
    return std::optional<ElementaryCondition>();
  return std::nullopt;
}

auto react(const ElementaryCondition& a, const ElementaryCondition& b) {
  auto r = react_ordered(a, b);
  if (!r) r = react_ordered(b, a);
  return r;
}

void apply(std::vector<ElementaryCondition>& elems, std::size_t i, std::size_t j,
           const std::optional<ElementaryCondition>& result) {
  if (i > j) std::swap(i, j);
  elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(j));
  elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(i));
  if (result) elems.push_back(*result);
}

SetCondition apply_letter(SetCondition s, char letter) {
  for (auto& e : s.elems) e.exponent.push_back(letter);
  return SetCondition::of(std::move(s.elems));
}

}  // namespace

SetCondition normal_form(const SetCondition& s) {
  std::vector<ElementaryCondition> elems = s.elems;
  for (auto& e : elems) e.exponent = cancel_double_inverse(e.exponent);
  std::sort(elems.begin(), elems.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < elems.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < elems.size() && !changed; ++j)
        if (auto r = react(elems[i], elems[j])) {
          apply(elems, i, j, *r);
          std::sort(elems.begin(), elems.end());
          changed = true;
        }
  }
  return SetCondition::of(std::move(elems));
}

SetCondition normal_form_randomized(const SetCondition& s, std::mt19937_64& rng) {
  std::vector<ElementaryCondition> elems = s.elems;
  std::shuffle(elems.begin(), elems.end(), rng);
  for (auto& e : elems) {
    // Cancel "--" pairs at random occurrences until none is left.
    while (true) {
      std::vector<std::size_t> at;
      for (std::size_t k = 0; k + 1 < e.exponent.size(); ++k)
        if (e.exponent[k] == '-' && e.exponent[k + 1] == '-') at.push_back(k);
      if (at.empty()) break;
      std::size_t k = at[std::uniform_int_distribution<std::size_t>(0, at.size() - 1)(rng)];
      e.exponent.erase(k, 2);
    }
  }
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (react(elems[i], elems[j])) candidates.emplace_back(i, j);
    if (candidates.empty()) break;
    auto [i, j] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    auto r = *react(elems[i], elems[j]);
    apply(elems, i, j, r);
    std::shuffle(elems.begin(), elems.end(), rng);
  }
  return SetCondition::of(std::move(elems));
}

SetCondition to_set_condition(const Condition& c) {
  switch (c.kind()) {
    case CondKind::Var:
    case CondKind::Atom: return SetCondition::of({{c.name(), ""}});
    case CondKind::Neutral: return {};
    case CondKind::Bracket: {
      auto inner = to_set_condition(c.inner());
      if (inner.empty()) return {};
      return SetCondition::of({{"[" + inner.to_string() + "]", ""}});
    }
    case CondKind::Product: {
      auto l = to_set_condition(c.left());
      auto r = to_set_condition(c.right());
      l.elems.insert(l.elems.end(), r.elems.begin(), r.elems.end());
      return normal_form(l);
    }
    case CondKind::Inverse: return normal_form(apply_letter(to_set_condition(c.inner()), '-'));
    case CondKind::Copy0: return apply_letter(to_set_condition(c.inner()), '0');
    case CondKind::Copy1: return apply_letter(to_set_condition(c.inner()), '1');
  }
  return {};
}

}  // namespace cn
