#include "wanas/expression.hpp"

#include <cctype>

#include "wanas/errors.hpp"

namespace wanas {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols)
      : text_(text), symbols_(symbols) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const Polynomial divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) {
          fail("division by a non-constant or zero expression");
        }
        acc *= divisor.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("decimal numbers are not accepted");
      }
      return Polynomial(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto v = var_from_name(name)) return Polynomial(*v);
      if (auto it = symbols_.find(name); it != symbols_.end()) return it->second;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_expression(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).run();
}

std::pair<Polynomial, bool> parse_condition(std::string_view text, const SymbolTable& symbols) {
  const auto ne = text.find("!=");
  if (ne != std::string_view::npos) {
    return {parse_expression(text.substr(0, ne), symbols) -
                parse_expression(text.substr(ne + 2), symbols),
            false};
  }
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("condition needs '=' or '!=': '" + std::string(text) + "'");
  }
  return {parse_expression(text.substr(0, eq), symbols) -
              parse_expression(text.substr(eq + 1), symbols),
          true};
}

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected name=value, got '" + std::string(item) + "'");
    }
    const std::string_view name = trim(item.substr(0, eq));
    auto v = var_from_name(name);
    if (!v) throw ParseError("unknown parameter '" + std::string(name) + "'");
    if (out.count(*v)) throw ParseError("parameter '" + std::string(name) + "' given twice");
    out.emplace(*v, Rational::parse(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace wanas
