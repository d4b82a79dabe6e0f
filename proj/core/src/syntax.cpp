#include "cn/syntax.hpp"

#include <cctype>
#include <sstream>

#include "cn/condition_algebra.hpp"
#include "cn/error.hpp"
#include "cn/term_model.hpp"

namespace cn {

namespace {

bool is_unary(CondKind k) {
  return k == CondKind::Inverse || k == CondKind::Copy0 || k == CondKind::Copy1;
}

std::string render_primary(const Condition& c);

std::string render_cond(const Condition& c) {
  if (c.kind() == CondKind::Product) {
    std::string r = render_cond(c.left());
    r += ' ';
    if (c.right().kind() == CondKind::Product)
      r += "(" + render_cond(c.right()) + ")";
    else
      r += render_cond(c.right());
    return r;
  }
  if (is_unary(c.kind())) {
    std::string letters;
    Condition cur = c;
    while (is_unary(cur.kind())) {
      letters.insert(letters.begin(), cur.kind() == CondKind::Inverse ? '-'
                                      : cur.kind() == CondKind::Copy0 ? '0'
                                                                      : '1');
      cur = cur.inner();
    }
    return render_primary(cur) + "^" + letters;
  }
  return render_primary(c);
}

std::string render_primary(const Condition& c) {
  switch (c.kind()) {
    case CondKind::Neutral: return "I";
    case CondKind::Var:
    case CondKind::Atom: return c.name();
    case CondKind::Bracket: return "[" + render_cond(c.inner()) + "]";
    default: return "(" + render_cond(c) + ")";
  }
}

std::string render_num(const NumberTerm& a);

// Operand of a postfix copy or of a projection.
std::string render_num_primary(const NumberTerm& a) {
  if (a.kind() == NumKind::CondApp || a.kind() == NumKind::Proj) return "(" + render_num(a) + ")";
  return render_num(a);
}

std::string render_num(const NumberTerm& a) {
  switch (a.kind()) {
    case NumKind::Var: return a.name();
    case NumKind::Zero: return "zero{" + render_cond(a.cond(0)) + "}";
    case NumKind::Suc: return "suc{" + render_cond(a.cond(0)) + "}(" + render_num(a.arg()) + ")";
    case NumKind::Ann:
      return "ann{" + render_cond(a.cond(0)) + "," + render_cond(a.cond(1)) + "}(" +
             render_num(a.arg()) + ")";
    case NumKind::Tuple:
    case NumKind::FunApp: {
      std::string r = a.kind() == NumKind::FunApp ? a.name() + "(" : "(";
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (i) r += ", ";
        r += render_num(a.args()[i]);
      }
      return r + ")";
    }
    case NumKind::Proj: return std::to_string(a.index()) + " ! " + render_num_primary(a.arg());
    case NumKind::CondApp: return render_cond(a.cond(0)) + " -> " + render_num(a.arg());
    case NumKind::Copy0: return render_num_primary(a.arg()) + "^0";
    case NumKind::Copy1: return render_num_primary(a.arg()) + "^1";
  }
  return {};
}

}  // namespace

std::string render(const Condition& c) { return render_cond(c); }
std::string render(const NumberTerm& a) { return render_num(a); }

namespace detail {

void Scanner::skip_ws() {
  while (pos_ < src_.size()) {
    char ch = src_[pos_];
    if (ch == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos_;
    } else {
      break;
    }
  }
}

bool Scanner::at_end() {
  skip_ws();
  return pos_ >= src_.size();
}

bool Scanner::peek(std::string_view tok) {
  skip_ws();
  return src_.substr(pos_, tok.size()) == tok;
}

bool Scanner::accept(std::string_view tok) {
  if (!peek(tok)) return false;
  pos_ += tok.size();
  return true;
}

void Scanner::expect(std::string_view tok) {
  if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
}

void Scanner::fail(const std::string& msg) const {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
    if (src_[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << line << ":" << col << ": " << msg;
  throw Error(ErrorKind::Syntax, os.str());
}

std::string Scanner::identifier() {
  skip_ws();
  std::size_t start = pos_;
  if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
    ++pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
  }
  if (start == pos_) fail("expected identifier");
  return std::string(src_.substr(start, pos_ - start));
}

long Scanner::integer() {
  skip_ws();
  std::size_t start = pos_;
  while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  if (start == pos_) fail("expected integer");
  return std::stol(std::string(src_.substr(start, pos_ - start)));
}

bool Scanner::factor_start() {
  skip_ws();
  if (pos_ >= src_.size()) return false;
  char ch = src_[pos_];
  if (ch == '[' || ch == '(') return true;
  if (ch == '@') return !opts_.atomFunction.empty();
  return std::isalpha(static_cast<unsigned char>(ch)) != 0;
}

Condition Scanner::condition() {
  if (!factor_start()) fail("expected condition");
  Condition acc = factor();
  while (factor_start()) acc = Condition::product(acc, factor());
  return acc;
}

Condition Scanner::factor() {
  Condition c = cond_primary();
  while (true) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < src_.size() && (src_[pos_] == '0' || src_[pos_] == '1' || src_[pos_] == '-')) {
        char l = src_[pos_++];
        c = l == '-' ? Condition::inverse(c) : Condition::copy(c, l - '0');
      }
      if (start == pos_) fail("expected exponent letters after '^'");
    } else {
      break;
    }
  }
  return c;
}

Condition Scanner::cond_primary() {
  skip_ws();
  if (accept("[")) {
    Condition inner = condition();
    expect("]");
    return Condition::bracket(inner);
  }
  if (accept("(")) {
    Condition inner = condition();
    expect(")");
    return inner;
  }
  if (pos_ < src_.size() && src_[pos_] == '@') {
    ++pos_;
    long i = integer();
    return Condition::atom(opts_.atomFunction + std::to_string(i));
  }
  std::string id = identifier();
  if (id == "I") return Condition::neutral();
  if (std::isupper(static_cast<unsigned char>(id[0]))) return Condition::var(id);
  if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
    bool arrow = src_[pos_] == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>';
    if (!arrow) id += src_[pos_++];
  }
  return Condition::atom(id);
}

NumberTerm Scanner::number() {
  // Condition application needs a condition followed by "->"; anything else
  // is a plain number term.
  std::size_t save = pos_;
  if (factor_start()) {
    try {
      Condition c = condition();
      if (accept("->")) return NumberTerm::cond_app(c, number());
    } catch (const Error&) {
    }
    pos_ = save;
  }
  return postfix_number();
}

NumberTerm Scanner::postfix_number() {
  NumberTerm a = atom_number();
  while (true) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < src_.size() && (src_[pos_] == '0' || src_[pos_] == '1'))
        a = NumberTerm::copy(a, src_[pos_++] - '0');
      if (start == pos_) fail("expected 0 or 1 after '^'");
    } else {
      return a;
    }
  }
}

NumberTerm Scanner::atom_number() {
  skip_ws();
  if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
    long i = integer();
    expect("!");
    if (i < 1) fail("projection index must be positive");
    return NumberTerm::proj(static_cast<int>(i), postfix_number());
  }
  if (accept("(")) {
    std::vector<NumberTerm> items{number()};
    while (accept(",")) items.push_back(number());
    expect(")");
    if (items.size() == 1) return items.front();
    return NumberTerm::tuple(std::move(items));
  }
  std::string id = identifier();
  if (id == "zero" && peek("{")) {
    expect("{");
    Condition c = condition();
    expect("}");
    return NumberTerm::zero(c);
  }
  if (id == "suc" && peek("{")) {
    expect("{");
    Condition c = condition();
    expect("}");
    expect("(");
    NumberTerm a = number();
    expect(")");
    return NumberTerm::suc(c, a);
  }
  if (id == "ann" && peek("{")) {
    expect("{");
    Condition c = condition();
    expect(",");
    Condition d = condition();
    expect("}");
    expect("(");
    NumberTerm a = number();
    expect(")");
    return NumberTerm::ann(c, d, a);
  }
  if (std::isupper(static_cast<unsigned char>(id[0]))) fail("number variables are lowercase");
  if (accept("(")) {
    std::vector<NumberTerm> args;
    if (!peek(")")) {
      args.push_back(number());
      while (accept(",")) args.push_back(number());
    }
    expect(")");
    return NumberTerm::fun_app(id, std::move(args));
  }
  return NumberTerm::var(id);
}

}  // namespace detail

Condition parse_condition_raw(std::string_view src, const ParseOptions& opts) {
  detail::Scanner s(src, opts);
  Condition c = s.condition();
  if (!s.at_end()) s.fail("trailing input");
  return c;
}

NumberTerm parse_number_raw(std::string_view src, const ParseOptions& opts) {
  detail::Scanner s(src, opts);
  NumberTerm a = s.number();
  if (!s.at_end()) s.fail("trailing input");
  return a;
}

Condition parse_condition(std::string_view src, const ConditionAlgebra& alg) {
  Condition c = parse_condition_raw(src);
  alg.check_well_formed(c);
  return c;
}

NumberTerm parse_number(std::string_view src, const ConditionAlgebra& alg) {
  NumberTerm a = parse_number_raw(src);
  if (!is_well_formed_number(a, alg))
    throw Error(ErrorKind::IllFormed, "number term is not well-formed: " + render(a));
  return a;
}

}  // namespace cn
