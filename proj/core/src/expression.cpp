#include "smse/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "smse/errors.hpp"

namespace smse {

enum class Op { Const, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Log, Sqrt };

struct Expression::Node {
  Op op;
  double value = 0.0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;

  std::unique_ptr<Node> clone() const {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->value = value;
    if (lhs) n->lhs = lhs->clone();
    if (rhs) n->rhs = rhs->clone();
    return n;
  }
};

namespace {

using NodePtr = std::unique_ptr<Expression::Node>;

NodePtr make(Op op, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_unique<Expression::Node>();
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return e;
  }

 private:
  // expr := term (('+'|'-') term)*
  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        lhs = make(Op::Add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = make(Op::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  // term := factor (('*'|'/') factor)*
  NodePtr term() {
    auto lhs = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        lhs = make(Op::Mul, std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = make(Op::Div, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  // factor := unary ('^' factor)?   (right associative)
  NodePtr factor() {
    auto base = unary();
    skip_ws();
    if (accept('^')) return make(Op::Pow, std::move(base), factor());
    return base;
  }

  NodePtr unary() {
    skip_ws();
    if (accept('-')) return make(Op::Neg, unary());
    if (accept('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return ident();
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    fail("unexpected character");
    return nullptr;
  }

  NodePtr number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    auto n = make(Op::Const);
    n->value = v;
    return n;
  }

  NodePtr ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "x") return make(Op::VarX);
    if (name == "y") return make(Op::VarY);
    Op op;
    if (name == "sin") op = Op::Sin;
    else if (name == "cos") op = Op::Cos;
    else if (name == "exp") op = Op::Exp;
    else if (name == "log") op = Op::Log;
    else if (name == "sqrt") op = Op::Sqrt;
    else { pos_ = start; fail("unknown identifier '" + name + "'"); return nullptr; }
    skip_ws();
    expect('(');
    auto arg = expr();
    expect(')');
    return make(op, std::move(arg));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw IoError("expression parse error at position " + std::to_string(pos_) + ": " + what +
                  " in \"" + s_ + "\"");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

double eval_node(const Expression::Node& n, double x, double y) {
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::VarX: return x;
    case Op::VarY: return y;
    case Op::Add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
    case Op::Sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
    case Op::Mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
    case Op::Div: return eval_node(*n.lhs, x, y) / eval_node(*n.rhs, x, y);
    case Op::Pow: return std::pow(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
    case Op::Neg: return -eval_node(*n.lhs, x, y);
    case Op::Sin: return std::sin(eval_node(*n.lhs, x, y));
    case Op::Cos: return std::cos(eval_node(*n.lhs, x, y));
    case Op::Exp: return std::exp(eval_node(*n.lhs, x, y));
    case Op::Log: return std::log(eval_node(*n.lhs, x, y));
    case Op::Sqrt: return std::sqrt(eval_node(*n.lhs, x, y));
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(const std::string& source) {
  Parser p(source);
  return Expression(source, p.run());
}

double Expression::eval(double x, double y) const { return eval_node(*root_, x, y); }

Expression::Expression(std::string src, std::unique_ptr<Node> root)
    : source_(std::move(src)), root_(std::move(root)) {}

Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

Expression::Expression(const Expression& other)
    : source_(other.source_), root_(other.root_ ? other.root_->clone() : nullptr) {}

Expression& Expression::operator=(const Expression& other) {
  if (this != &other) {
    source_ = other.source_;
    root_ = other.root_ ? other.root_->clone() : nullptr;
  }
  return *this;
}

}  // namespace smse
