#include "cn/condition.hpp"

#include <algorithm>
#include <stdexcept>

#include "cn/error.hpp"

namespace cn {

struct Condition::Node {
  CondKind kind;
  std::string name;
  std::vector<Condition> children;
};

Condition::Condition() {
  static const std::shared_ptr<const Node> neutral =
      std::make_shared<const Node>(Node{CondKind::Neutral, {}, {}});
  node_ = neutral;
}

Condition Condition::var(std::string name) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Var, std::move(name), {}}));
}
Condition Condition::atom(std::string name) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Atom, std::move(name), {}}));
}
Condition Condition::neutral() { return Condition(); }
Condition Condition::product(Condition a, Condition b) {
  return Condition(std::make_shared<const Node>(
      Node{CondKind::Product, {}, {std::move(a), std::move(b)}}));
}
Condition Condition::inverse(Condition a) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Inverse, {}, {std::move(a)}}));
}
Condition Condition::copy0(Condition a) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Copy0, {}, {std::move(a)}}));
}
Condition Condition::copy1(Condition a) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Copy1, {}, {std::move(a)}}));
}
Condition Condition::copy(Condition a, int bit) {
  return bit == 0 ? copy0(std::move(a)) : copy1(std::move(a));
}
Condition Condition::bracket(Condition a) {
  return Condition(std::make_shared<const Node>(Node{CondKind::Bracket, {}, {std::move(a)}}));
}
Condition Condition::product_of(const std::vector<Condition>& fs) {
  if (fs.empty()) return neutral();
  Condition acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = product(acc, fs[i]);
  return acc;
}

CondKind Condition::kind() const { return node_->kind; }
const std::string& Condition::name() const { return node_->name; }
std::size_t Condition::child_count() const { return node_->children.size(); }
const Condition& Condition::child(std::size_t i) const {
  if (i >= node_->children.size()) throw Error(ErrorKind::InvalidPosition, "no such child");
  return node_->children[i];
}

bool operator==(const Condition& a, const Condition& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  if (a.child_count() != b.child_count()) return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

int size(const Condition& c) {
  switch (c.kind()) {
    case CondKind::Neutral: return 0;
    case CondKind::Var:
    case CondKind::Atom:
    case CondKind::Bracket: return 1;
    case CondKind::Product: return size(c.left()) + size(c.right());
    case CondKind::Inverse:
    case CondKind::Copy0:
    case CondKind::Copy1: return size(c.inner());
  }
  return 0;
}

bool is_limited(const Condition& c, int limit) {
  if (size(c) > limit) return false;
  for (std::size_t i = 0; i < c.child_count(); ++i)
    if (!is_limited(c.child(i), limit)) return false;
  return true;
}

std::vector<Condition> factors(const Condition& c) {
  if (c.kind() != CondKind::Product) return {c};
  auto l = factors(c.left());
  auto r = factors(c.right());
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

}  // namespace cn
