#pragma once

#include <memory>
#include <string>
#include <vector>

namespace cn {

enum class CondKind { Var, Atom, Product, Neutral, Inverse, Copy0, Copy1, Bracket };

/// Immutable condition-algebra term. Copies share structure.
class Condition {
 public:
  Condition();  // the neutral element I

  static Condition var(std::string name);
  static Condition atom(std::string name);
  static Condition neutral();
  static Condition product(Condition a, Condition b);
  static Condition inverse(Condition a);
  static Condition copy0(Condition a);
  static Condition copy1(Condition a);
  static Condition copy(Condition a, int bit);
  static Condition bracket(Condition a);
  /// Left-nested product of all factors; I for an empty list.
  static Condition product_of(const std::vector<Condition>& factors);

  CondKind kind() const;
  const std::string& name() const;
  std::size_t child_count() const;
  const Condition& child(std::size_t i) const;  // 0-based
  const Condition& left() const { return child(0); }
  const Condition& right() const { return child(1); }
  const Condition& inner() const { return child(0); }

  bool is_leaf() const { return kind() == CondKind::Var || kind() == CondKind::Atom; }

  friend bool operator==(const Condition& a, const Condition& b);
  friend bool operator!=(const Condition& a, const Condition& b) { return !(a == b); }

 private:
  struct Node;
  explicit Condition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Syntactic size: I is 0, leaves and brackets are 1, products add up,
/// unary exponents are transparent.
int size(const Condition& c);

/// True iff every subterm has size <= limit.
bool is_limited(const Condition& c, int limit);

/// Flattens nested products into their factor list (I factors included).
std::vector<Condition> factors(const Condition& c);

}  // namespace cn
