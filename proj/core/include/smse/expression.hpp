#pragma once

#include <memory>
#include <string>

namespace smse {

// Scalar function of (x, y) parsed from a text formula. Supports + - * / ^,
// parentheses, unary minus, and sin/cos/exp/log/sqrt. Used for boundary data
// and user-supplied level sets.
class Expression {
 public:
  struct Node;

  static Expression parse(const std::string& source);

  double eval(double x, double y) const;
  const std::string& source() const { return source_; }

  Expression(const Expression&);
  Expression& operator=(const Expression&);
  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  ~Expression();

 private:
  Expression(std::string src, std::unique_ptr<Node> root);

  std::string source_;
  std::unique_ptr<Node> root_;
};

}  // namespace smse
