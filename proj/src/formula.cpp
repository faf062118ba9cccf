#include "formula.hpp"

#include <cctype>

namespace arfrf::formula {

namespace {

class Parser {
public:
  Parser(std::string_view text, const Bindings &vars, Division mode)
      : text_(text), vars_(vars), mode_(mode) {}

  Int parse() {
    Int v = expression();
    skip_space();
    if (pos_ != text_.size())
      throw FormulaError("trailing input in '" + std::string(text_) + "'");
    return v;
  }

private:
  std::string_view text_;
  const Bindings &vars_;
  Division mode_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int expression() {
    Int v = term();
    for (;;) {
      if (accept('+'))
        v = checked_add(v, term());
      else if (accept('-'))
        v = checked_sub(v, term());
      else
        return v;
    }
  }

  Int term() {
    Int v = unary();
    for (;;) {
      if (accept('*')) {
        v = checked_mul(v, unary());
      } else if (accept('/')) {
        const Int d = unary();
        if (d == 0)
          throw FormulaError("division by zero");
        if (mode_ == Division::Exact) {
          if (v % d != 0)
            throw FormulaError("inexact division " + std::to_string(v) + "/" +
                               std::to_string(d));
          v /= d;
        } else {
          v = floor_div(v, d);
        }
      } else {
        return v;
      }
    }
  }

  Int unary() {
    if (accept('-'))
      return checked_neg(unary());
    return primary();
  }

  Int primary() {
    skip_space();
    if (accept('(')) {
      Int v = expression();
      if (!accept(')'))
        throw FormulaError("missing ')' in '" + std::string(text_) + "'");
      return v;
    }
    if (pos_ >= text_.size())
      throw FormulaError("unexpected end of '" + std::string(text_) + "'");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = checked_add(checked_mul(v, 10), text_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto it = vars_.find(c);
      if (it == vars_.end())
        throw FormulaError(std::string("unbound variable '") + c + "'");
      return it->second;
    }
    throw FormulaError("unexpected '" + std::string(1, c) + "' in '" +
                       std::string(text_) + "'");
  }
};

} // namespace

Int evaluate(std::string_view expr, const Bindings &vars, Division mode) {
  return Parser(expr, vars, mode).parse();
}

} // namespace arfrf::formula
