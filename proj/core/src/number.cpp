#include "cn/number.hpp"

#include "cn/error.hpp"

namespace cn {

struct NumberTerm::Node {
  NumKind kind;
  std::string name;
  int index = 0;
  std::vector<Condition> conds;
  std::vector<NumberTerm> args;
};

NumberTerm::NumberTerm()
    : node_(std::make_shared<const Node>(Node{NumKind::Var, "x", 0, {}, {}})) {}

NumberTerm NumberTerm::var(std::string name) {
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Var, std::move(name), 0, {}, {}}));
}
NumberTerm NumberTerm::zero(Condition c) {
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Zero, {}, 0, {std::move(c)}, {}}));
}
NumberTerm NumberTerm::suc(Condition c, NumberTerm arg) {
  return NumberTerm(std::make_shared<const Node>(
      Node{NumKind::Suc, {}, 0, {std::move(c)}, {std::move(arg)}}));
}
NumberTerm NumberTerm::ann(Condition pos, Condition neg, NumberTerm arg) {
  return NumberTerm(std::make_shared<const Node>(
      Node{NumKind::Ann, {}, 0, {std::move(pos), std::move(neg)}, {std::move(arg)}}));
}
NumberTerm NumberTerm::tuple(std::vector<NumberTerm> items) {
  if (items.size() < 2) throw Error(ErrorKind::IllTyped, "tuples need at least two components");
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Tuple, {}, 0, {}, std::move(items)}));
}
NumberTerm NumberTerm::proj(int index, NumberTerm arg) {
  if (index < 1) throw Error(ErrorKind::IllTyped, "projection index must be positive");
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Proj, {}, index, {}, {std::move(arg)}}));
}
NumberTerm NumberTerm::cond_app(Condition c, NumberTerm arg) {
  return NumberTerm(std::make_shared<const Node>(
      Node{NumKind::CondApp, {}, 0, {std::move(c)}, {std::move(arg)}}));
}
NumberTerm NumberTerm::copy0(NumberTerm arg) {
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Copy0, {}, 0, {}, {std::move(arg)}}));
}
NumberTerm NumberTerm::copy1(NumberTerm arg) {
  return NumberTerm(std::make_shared<const Node>(Node{NumKind::Copy1, {}, 0, {}, {std::move(arg)}}));
}
NumberTerm NumberTerm::copy(NumberTerm arg, int bit) {
  return bit == 0 ? copy0(std::move(arg)) : copy1(std::move(arg));
}
NumberTerm NumberTerm::fun_app(std::string fun, std::vector<NumberTerm> args) {
  return NumberTerm(std::make_shared<const Node>(
      Node{NumKind::FunApp, std::move(fun), 0, {}, std::move(args)}));
}

NumKind NumberTerm::kind() const { return node_->kind; }
const std::string& NumberTerm::name() const { return node_->name; }
int NumberTerm::index() const { return node_->index; }
const std::vector<Condition>& NumberTerm::conds() const { return node_->conds; }
const std::vector<NumberTerm>& NumberTerm::args() const { return node_->args; }
const NumberTerm& NumberTerm::arg() const {
  if (node_->args.empty()) throw Error(ErrorKind::InvalidPosition, "term has no number argument");
  return node_->args.front();
}

bool operator==(const NumberTerm& a, const NumberTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.index() == b.index() &&
         a.conds() == b.conds() && a.args() == b.args();
}

std::size_t constructor_count(const NumberTerm& a) {
  std::size_t n = a.is_constructor() ? 1 : 0;
  for (const auto& x : a.args()) n += constructor_count(x);
  return n;
}

NumberTerm NumberTerm::with_children(std::vector<Condition> conds, std::vector<NumberTerm> args) const {
  return NumberTerm(std::make_shared<const Node>(Node{kind(), name(), index(), std::move(conds), std::move(args)}));
}

}  // namespace cn
