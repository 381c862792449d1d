#pragma once
//
// Text format for boundary-evaluable functions, shared by the CLI and the
// tests. Grammar (whitespace insensitive):
//
//   expr      := term (('+' | '-') term)*
//   term      := unary ('*' unary)*
//   unary     := '-' unary | power
//   power     := atom ('^' uint)?
//   atom      := 'z' | number | number 'i' | 'i' | 'ext' | '(' expr ')' | call
//   call      := 'poly' '(' const (',' const)* ')'
//              | 'blaschke' '(' uint (';' const ',' uint)* ')'
//              | 'extremal' '(' const ';' inner ')'
//   inner     := 'z' ('^' uint)? | blaschke-call
//
// 'ext' is the literal 1/sqrt(3). Arguments marked const must evaluate to a
// number without using z. Examples: "z^3", "poly(1,2,1)", "z*(2-z)",
// "blaschke(2; 0.3+0.4i,1)", "extremal(ext; z)".
//

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardylab/blaschke.hpp"
#include "hardylab/defaults.hpp"
#include "hardylab/extremal.hpp"
#include "hardylab/taylor.hpp"

namespace hardylab {

using FuncHandle = std::function<cplx(cplx)>;

namespace detail {

struct FuncNode {
  FuncHandle fn;
  bool is_const = false;
  cplx const_value{0.0, 0.0};
};

class FuncParser {
 public:
  explicit FuncParser(std::string text) : text_(std::move(text)) {}

  FuncNode parse_full() {
    FuncNode n = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return n;
  }

  BlaschkeSpec parse_inner_full() {
    BlaschkeSpec b = parse_inner();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return b;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("function spec: " + what + " at position " +
                                std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string read_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  bool at_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  // number with optional adjacent 'i' suffix
  FuncNode read_number() {
    skip_ws();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected number");
    pos_ += static_cast<std::size_t>(end - begin);
    cplx value{v, 0.0};
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      value = cplx{0.0, v};
    }
    return make_const(value);
  }

  static FuncNode make_const(cplx v) {
    return FuncNode{[v](cplx) { return v; }, true, v};
  }

  cplx parse_const_arg() {
    const FuncNode n = parse_expr();
    if (!n.is_const) fail("argument must not depend on z");
    return n.const_value;
  }

  int parse_uint_arg(const char* what) {
    const cplx v = parse_const_arg();
    const double re = v.real();
    if (v.imag() != 0.0 || re < 0.0 || std::abs(re - std::round(re)) > 1e-9)
      fail(std::string("expected a nonnegative integer for ") + what);
    return static_cast<int>(std::llround(re));
  }

  int parse_exponent() {
    skip_ws();
    if (!at_number()) fail("expected integer exponent");
    const FuncNode n = read_number();
    if (!n.is_const || n.const_value.imag() != 0.0) fail("expected integer exponent");
    const double re = n.const_value.real();
    if (re < 0.0 || std::abs(re - std::round(re)) > 1e-9) fail("expected integer exponent");
    return static_cast<int>(std::llround(re));
  }

  BlaschkeSpec parse_blaschke_args() {
    expect('(');
    BlaschkeSpec b;
    b.origin_multiplicity = parse_uint_arg("origin multiplicity");
    while (accept(';')) {
      BlaschkeZero zero;
      zero.position = parse_const_arg();
      expect(',');
      zero.multiplicity = parse_uint_arg("zero multiplicity");
      b.zeros.push_back(zero);
    }
    expect(')');
    b.validate();
    return b;
  }

  BlaschkeSpec parse_inner() {
    skip_ws();
    const std::string id = read_ident();
    if (id == "z") {
      int m = 1;
      if (accept('^')) m = parse_exponent();
      if (m < 1) fail("inner factor must vanish at the origin");
      return BlaschkeSpec::monomial(m);
    }
    if (id == "blaschke") return parse_blaschke_args();
    fail("expected an inner factor ('z', 'z^k' or 'blaschke(...)')");
  }

  FuncNode parse_call(const std::string& id) {
    if (id == "poly") {
      expect('(');
      std::vector<cplx> coeffs;
      coeffs.push_back(parse_const_arg());
      while (accept(',')) coeffs.push_back(parse_const_arg());
      expect(')');
      TaylorCoeffs f(std::move(coeffs));
      return FuncNode{[f](cplx z) { return evaluate(f, z); }, false, cplx{}};
    }
    if (id == "blaschke") {
      const BlaschkeSpec b = parse_blaschke_args();
      return FuncNode{[b](cplx z) { return blaschke_eval(b, z); }, false, cplx{}};
    }
    if (id == "extremal") {
      expect('(');
      ExtremalSpec e;
      const cplx lam = parse_const_arg();
      if (lam.imag() != 0.0) fail("lambda must be real");
      e.lambda = lam.real();
      expect(';');
      e.inner = parse_inner();
      expect(')');
      e.validate();
      return FuncNode{[e](cplx z) { return extremal_eval(e, z); }, false, cplx{}};
    }
    fail("unknown function '" + id + "'");
  }

  FuncNode parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FuncNode n = parse_expr();
      expect(')');
      return n;
    }
    if (at_number()) return read_number();
    const std::string id = read_ident();
    if (id == "z") return FuncNode{[](cplx z) { return z; }, false, cplx{}};
    if (id == "i") return make_const(cplx{0.0, 1.0});
    if (id == "ext") return make_const(cplx{kExtremalLambda, 0.0});
    return parse_call(id);
  }

  FuncNode parse_power() {
    FuncNode base = parse_atom();
    if (!accept('^')) return base;
    const int e = parse_exponent();
    if (base.is_const) {
      cplx r{1.0, 0.0};
      for (int k = 0; k < e; ++k) r *= base.const_value;
      return make_const(r);
    }
    FuncHandle b = base.fn;
    return FuncNode{[b, e](cplx z) {
                      const cplx v = b(z);
                      cplx r{1.0, 0.0};
                      for (int k = 0; k < e; ++k) r *= v;
                      return r;
                    },
                    false, cplx{}};
  }

  FuncNode parse_unary() {
    if (accept('-')) {
      FuncNode n = parse_unary();
      if (n.is_const) return make_const(-n.const_value);
      FuncHandle f = n.fn;
      return FuncNode{[f](cplx z) { return -f(z); }, false, cplx{}};
    }
    return parse_power();
  }

  FuncNode parse_term() {
    FuncNode acc = parse_unary();
    while (accept('*')) {
      FuncNode rhs = parse_unary();
      if (acc.is_const && rhs.is_const) {
        acc = make_const(acc.const_value * rhs.const_value);
      } else {
        FuncHandle a = acc.fn, b = rhs.fn;
        acc = FuncNode{[a, b](cplx z) { return a(z) * b(z); }, false, cplx{}};
      }
    }
    return acc;
  }

  FuncNode parse_expr() {
    FuncNode acc = parse_unary_or_term_start();
    for (;;) {
      if (accept('+')) {
        FuncNode rhs = parse_term();
        acc = combine_sum(acc, rhs, +1.0);
      } else if (accept('-')) {
        FuncNode rhs = parse_term();
        acc = combine_sum(acc, rhs, -1.0);
      } else {
        return acc;
      }
    }
  }

  FuncNode parse_unary_or_term_start() { return parse_term(); }

  static FuncNode combine_sum(const FuncNode& a, const FuncNode& b, double sign) {
    if (a.is_const && b.is_const)
      return make_const(a.const_value + sign * b.const_value);
    FuncHandle fa = a.fn, fb = b.fn;
    return FuncNode{[fa, fb, sign](cplx z) { return fa(z) + sign * fb(z); }, false, cplx{}};
  }
};

}  // namespace detail

// Parses a boundary-evaluable function expression.
inline FuncHandle parse_function(const std::string& text) {
  return detail::FuncParser(text).parse_full().fn;
}

// Parses an inner-factor expression: 'z', 'z^k' or 'blaschke(...)'.
inline BlaschkeSpec parse_inner(const std::string& text) {
  return detail::FuncParser(text).parse_inner_full();
}

// Parses a constant complex expression such as "0.3+0.4i" or "-0.2i".
inline cplx parse_complex(const std::string& text) {
  const detail::FuncNode n = detail::FuncParser(text).parse_full();
  if (!n.is_const) throw std::invalid_argument("function spec: expected a constant, got a function of z");
  return n.const_value;
}

}  // namespace hardylab
