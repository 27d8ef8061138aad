// Recursive-descent reader for the polynomial grammar
//
//   expr    := ws [sign] term { sign term } ws
//   term    := factor { '*' factor }
//   factor  := number | axis [ '^' power ]
//   power   := [sign] number | '(' [sign] number ')'
//   axis    := 'x' | 'y' | 'z' | 't'
//
// Whitespace is allowed between tokens.

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "fraczee/error.hpp"
#include "fraczee/monomial.hpp"

namespace fraczee {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  PolyExpr expr() {
    std::vector<PowerTerm> terms;
    skip_ws();
    if (at_end()) {
      throw ParseError("empty expression", pos_);
    }
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) {
        break;
      }
      const char c = peek();
      if (c != '+' && c != '-') {
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
      }
      take();
      terms.push_back(term(c == '-' ? -1.0 : 1.0));
    }
    return PolyExpr(std::move(terms));
  }

 private:
  PowerTerm term(double sign) {
    PowerTerm t{sign, {}};
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') {
        break;
      }
      take();
      factor(t);
    }
    return t;
  }

  void factor(PowerTerm& t) {
    skip_ws();
    if (at_end()) {
      throw ParseError("expected a number or an axis", pos_);
    }
    const char c = peek();
    if (const auto axis = axis_from_name(std::string_view(&c, 1))) {
      take();
      double e = 1.0;
      skip_ws();
      if (!at_end() && peek() == '^') {
        take();
        e = power();
      }
      t.exponents[index(*axis)] += e;
      return;
    }
    t.coeff *= number();
  }

  double power() {
    skip_ws();
    const bool paren = !at_end() && peek() == '(';
    if (paren) {
      take();
      skip_ws();
    }
    double sign = 1.0;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      sign = take() == '-' ? -1.0 : 1.0;
      skip_ws();
    }
    const double v = sign * number();
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') {
        throw ParseError("expected ')'", pos_);
      }
      take();
    }
    return v;
  }

  double number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      take();
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      const std::size_t save = pos_;
      take();
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        take();
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        take();
      }
    }
    if (pos_ == start) {
      throw ParseError("expected a number or an axis", start);
    }
    const std::string text(src_.substr(start, pos_ - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::out_of_range&) {
      throw ParseError("non-finite literal '" + text + "'", start);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number '" + text + "'", start);
    }
    if (used != text.size()) {
      throw ParseError("malformed number '" + text + "'", start + used);
    }
    if (!std::isfinite(v)) {
      throw ParseError("non-finite literal '" + text + "'", start);
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char take() { return src_[pos_++]; }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_expr(std::string_view src) { return Reader(src).expr(); }

Point parse_point(std::string_view src) {
  const auto trim = [](std::string_view v, std::size_t& offset) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
      v.remove_prefix(1);
      ++offset;
    }
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
      v.remove_suffix(1);
    }
    return v;
  };
  Point p;
  std::size_t pos = 0;
  while (pos < src.size()) {
    std::size_t comma = src.find(',', pos);
    if (comma == std::string_view::npos) {
      comma = src.size();
    }
    const std::string_view item = src.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected axis=value", pos);
    }
    std::size_t name_at = pos;
    const std::string_view name = trim(item.substr(0, eq), name_at);
    const auto axis = axis_from_name(name);
    if (!axis) {
      throw ParseError("unknown axis '" + std::string(name) + "'", name_at);
    }
    if (p.contains(*axis)) {
      throw ParseError("axis '" + std::string(name) + "' given twice", name_at);
    }
    std::size_t num_at = pos + eq + 1;
    const std::string_view num = trim(item.substr(eq + 1), num_at);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || !std::isfinite(v)) {
      throw ParseError("bad coordinate '" + std::string(num) + "'", num_at);
    }
    p[*axis] = v;
    pos = comma + 1;
  }
  return p;
}

}  // namespace fraczee
