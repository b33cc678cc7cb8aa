#include "affyh/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "affyh/errors.hpp"
#include "affyh/modified.hpp"

namespace affyh {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Num, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Ident, src.substr(start, i - start), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

std::optional<Scalar> invert(const Scalar& s) {
  if (s.terms().size() != 1) return std::nullopt;
  const auto& [exp, c] = s.terms().front();
  return Scalar::q_power(s.field(), -exp) * cyc_invert(c);
}

Scalar scalar_power(const Scalar& s, int k) {
  Scalar out(s.field(), 1);
  for (int i = 0; i < k; ++i) out = out * s;
  return out;
}

// Value semantics for the parser: expansion into formal words.
struct ExpandSemantics {
  using Value = FormalExpression;
  int field;

  Value lift(const FormalExpression& e, const std::string&) const { return e; }
  Value constant(const Scalar& c) const { return FormalExpression::constant(c); }
  Value zero() const { return FormalExpression(field); }
  Value add(Value a, const Value& b) const { return a += b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value scale(const Value& a, const Scalar& c) const { return a * c; }
  std::optional<Scalar> scalar_of(const Value& e) const {
    if (e.is_zero()) return Scalar(field);
    if (e.terms().size() != 1 || !e.terms().begin()->first.empty()) return std::nullopt;
    return e.terms().begin()->second;
  }
};

// Value semantics for direct evaluation: every factor becomes an Element.
struct EvaluateSemantics {
  using Value = Element;
  const Assignment& assign;
  Context ctx;
  std::map<std::string, Element>* atoms;

  Value lift(const FormalExpression& e, const std::string& key) const {
    if (auto it = atoms->find(key); it != atoms->end()) return it->second;
    Element v = evaluate(e, assign, ctx);
    atoms->emplace(key, v);
    return v;
  }
  Value constant(const Scalar& c) const { return unit(ctx) * lift_scalar(c); }
  Value zero() const { return Element(ctx); }
  Value add(Value a, const Value& b) const { return a += b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return affyh::mul(a, b); }
  Value scale(const Value& a, const Scalar& c) const { return a * lift_scalar(c); }
  std::optional<Scalar> scalar_of(const Value& e) const {
    if (e.is_zero()) return Scalar(ctx.field);
    if (e.size() != 1 || !(e.terms().begin()->first == GroupIndex::identity(ctx.n))) return std::nullopt;
    return e.terms().begin()->second;
  }
  Scalar lift_scalar(const Scalar& c) const {
    return evaluate(FormalExpression::constant(c), assign, ctx).coefficient(GroupIndex::identity(ctx.n));
  }
};

template <class Sem>
class Parser {
 public:
  using Value = typename Sem::Value;

  Parser(const std::string& src, const SymbolScope& scope, Sem sem)
      : tokens_(lex(src)), scope_(scope), sem_(std::move(sem)) {}

  Value parse() {
    Value e = expression();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().pos, msg + " at position " + std::to_string(peek().pos));
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  int integer() {
    if (peek().kind != Tok::Num) fail("expected an integer");
    const Token& t = next();
    if (t.text.size() > 6) throw ParseError(t.pos, "integer too large at position " + std::to_string(t.pos));
    return std::stoi(t.text);
  }

  Value expression() {
    Value acc = sem_.zero();
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    Value t = term();
    acc = sem_.add(std::move(acc), negate ? sem_.neg(t) : t);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Value u = term();
      acc = sem_.add(std::move(acc), minus ? sem_.neg(u) : u);
    }
    return acc;
  }

  bool starts_factor() const {
    const Tok k = peek().kind;
    return k == Tok::Num || k == Tok::Ident || k == Tok::LParen;
  }

  Value term() {
    Value acc = factor();
    while (true) {
      if (peek().kind == Tok::Star) {
        ++pos_;
        acc = sem_.mul(acc, factor());
      } else if (peek().kind == Tok::Slash) {
        ++pos_;
        const std::size_t at = peek().pos;
        Value d = factor();
        auto s = sem_.scalar_of(d);
        std::optional<Scalar> inv = s ? invert(*s) : std::nullopt;
        if (!inv) throw ParseError(at, "divisor is not an invertible scalar at position " + std::to_string(at));
        acc = sem_.scale(acc, *inv);
      } else if (starts_factor()) {
        acc = sem_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    const std::size_t at = peek().pos;
    if (peek().kind == Tok::Ident) {
      const Token name = next();
      if (name.text == "e" && peek().kind == Tok::LParen) {
        ++pos_;
        const int i = integer();
        expect(Tok::Comma, "','");
        const int k = integer();
        expect(Tok::RParen, "')'");
        if (i < 1 || i > scope_.n || k < 1 || k > scope_.n) {
          throw Error(ErrorKind::UnknownSymbol, "e(" + std::to_string(i) + "," + std::to_string(k) + ") out of range");
        }
        const std::string key = "e(" + std::to_string(i) + "," + std::to_string(k) + ")";
        return sem_.lift(checked(expr::e_pair(scope_.r, scope_.torus, i, k), at), key);
      }
      const int k = exponent();
      return sem_.lift(checked(named(name, k), at), name.text + "^" + std::to_string(k));
    }
    if (peek().kind == Tok::Num) {
      const Scalar c(scope_.field, Rational(integer()));
      const int k = exponent();
      if (k < 0) {
        auto inv = invert(c);
        if (!inv) throw ParseError(at, "negative power of zero at position " + std::to_string(at));
        return sem_.constant(scalar_power(*inv, -k));
      }
      return sem_.constant(scalar_power(c, k));
    }
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Value base = expression();
      expect(Tok::RParen, "')'");
      return power(base, exponent(), at);
    }
    fail("expected a factor");
  }

  int exponent() {
    if (peek().kind != Tok::Caret) return 1;
    ++pos_;
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      ++pos_;
      neg = true;
    }
    const int k = integer();
    return neg ? -k : k;
  }

  Value power(const Value& base, int k, std::size_t at) {
    if (k < 0) {
      auto s = sem_.scalar_of(base);
      std::optional<Scalar> inv = s ? invert(*s) : std::nullopt;
      if (!inv) throw ParseError(at, "negative power of a non-invertible factor at position " + std::to_string(at));
      return sem_.constant(scalar_power(*inv, -k));
    }
    Value out = sem_.constant(Scalar(scope_.field, 1));
    for (int i = 0; i < k; ++i) out = sem_.mul(out, base);
    return out;
  }

  FormalExpression checked(FormalExpression e, std::size_t at) const {
    if (scope_.allowed) {
      for (const auto& s : e.symbols()) {
        if (!scope_.allowed->contains(s)) {
          throw Error(ErrorKind::UnknownSymbol,
                      "symbol '" + s + "' is not a generator here (position " + std::to_string(at) + ")");
        }
      }
    }
    return e;
  }

  [[noreturn]] void unknown(const Token& t) const {
    throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + t.text + "' at position " + std::to_string(t.pos));
  }

  FormalExpression repeat(const FormalExpression& pos, const FormalExpression& neg, int k) const {
    FormalExpression out = FormalExpression::one(scope_.field);
    for (int i = 0; i < std::abs(k); ++i) out = out * (k > 0 ? pos : neg);
    return out;
  }

  FormalExpression scalar_atom(const Token& t, const Scalar& s, int k) const {
    if (k >= 0) return FormalExpression::constant(scalar_power(s, k));
    auto inv = invert(s);
    if (!inv) throw ParseError(t.pos, "cannot invert '" + t.text + "' at position " + std::to_string(t.pos));
    return FormalExpression::constant(scalar_power(*inv, -k));
  }

  FormalExpression named(const Token& t, int k) {
    const int r = scope_.r;
    const int n = scope_.n;
    const int f = scope_.field;
    const std::string& name = t.text;
    std::size_t split = 0;
    while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split]))) ++split;
    const std::string head = name.substr(0, split);
    const std::string digits = name.substr(split);
    const int idx = digits.empty() ? -1 : (digits.size() > 4 ? 100000 : std::stoi(digits));

    if (digits.empty()) {
      if (head == "q") return FormalExpression::constant(Scalar::q_power(f, k));
      if (head == "zeta") {
        return FormalExpression::constant(Scalar(CycRational::zeta_power(f, static_cast<long>(k) * (f / r))));
      }
      if (head == "r") return scalar_atom(t, Scalar(f, Rational(r)), k);
      if (head == "Delta") {
        if (f != r) unknown(t);
        return scalar_atom(t, Scalar(vandermonde(r).delta), k);
      }
      if (head == "Trho" || head == "hrho") {
        return repeat(expr::sym(f, head), expr::sym(f, head + "^-1"), k);
      }
      unknown(t);
    }
    if (head == "t" || head == "w") {
      if (idx < 1 || idx > n) unknown(t);
      return expr::torus_power(r, head, idx, k);
    }
    if (head == "g") {
      if (idx < 1 || idx > n - 1) unknown(t);
      return repeat(expr::sym(f, name), expr::quadratic_inverse(r, n, "t", "g", idx), k);
    }
    if (head == "Ts") {
      if (idx < 0 || idx > n - 1) unknown(t);
      return repeat(expr::sym(f, name), expr::quadratic_inverse(r, n, "t", "Ts", idx), k);
    }
    if (head == "hs") {
      if (idx < 0 || idx > n - 1) unknown(t);
      const FormalExpression h = expr::sym(f, name);
      return repeat(h, h - FormalExpression::constant(Scalar::q_minus_qinv(f)), k);
    }
    if (head == "X") {
      if (idx < 1 || idx > n) unknown(t);
      return repeat(expr::x_macro(r, n, idx, false), expr::x_macro(r, n, idx, true), k);
    }
    if (head == "e") {
      if (idx < 0 || idx > n - 1 || n < 2) unknown(t);
      if (k < 1) throw ParseError(t.pos, "idempotent powers must be positive at position " + std::to_string(t.pos));
      return expr::e_index(r, n, scope_.torus, idx);
    }
    unknown(t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SymbolScope scope_;
  Sem sem_;
};

}  // namespace

SymbolScope universal_scope(int r, int n) { return SymbolScope{r, n, r, std::nullopt, "t"}; }

SymbolScope presentation_scope(const std::string& name, int r, int n) {
  SymbolScope s = universal_scope(r, n);
  std::vector<std::string> syms;
  if (name == "yokonuma") {
    syms = yokonuma_symbols(n);
  } else if (name == "im_affine" || name == "h1" || name == "h2") {
    syms = im_symbols(n);
  } else if (name == "modified_affine" || name == "c1" || name == "c2" || name == "hecke_ext") {
    syms = modified_symbols(n);
    s.torus = "w";
  } else if (name == "universal") {
    return s;
  } else {
    throw Error(ErrorKind::UnknownName, "unknown presentation '" + name + "'");
  }
  s.allowed = std::set<std::string>(syms.begin(), syms.end());
  return s;
}

FormalExpression parse_expression(const std::string& src, const SymbolScope& scope) {
  return Parser<ExpandSemantics>(src, scope, ExpandSemantics{scope.field}).parse();
}

Element evaluate_source(const std::string& src, const SymbolScope& scope, const Assignment& assign,
                        const Context& ctx) {
  std::map<std::string, Element> atoms;
  return Parser<EvaluateSemantics>(src, scope, EvaluateSemantics{assign, ctx, &atoms}).parse();
}

}  // namespace affyh
