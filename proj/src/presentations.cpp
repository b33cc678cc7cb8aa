#include "affyh/presentations.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "affyh/errors.hpp"
#include "affyh/modified.hpp"
#include "affyh/parser.hpp"

namespace affyh {

// ---------------------------------------------------------------------------
// FormalExpression

FormalExpression FormalExpression::constant(const Scalar& c) {
  FormalExpression e(c.field());
  e.add_term({}, c);
  return e;
}

FormalExpression FormalExpression::symbol(int field, const std::string& name) { return word(field, {name}); }

FormalExpression FormalExpression::word(int field, const Word& w) {
  FormalExpression e(field);
  e.add_term(w, Scalar(field, 1));
  return e;
}

void FormalExpression::add_term(const Word& w, const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorKind::MixedRoot, "expression coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::set<std::string> FormalExpression::symbols() const {
  std::set<std::string> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

FormalExpression FormalExpression::operator-() const {
  FormalExpression e(field_);
  for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
  return e;
}

FormalExpression& FormalExpression::operator+=(const FormalExpression& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FormalExpression& FormalExpression::operator-=(const FormalExpression& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FormalExpression& FormalExpression::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FormalExpression operator*(const FormalExpression& a, const FormalExpression& b) {
  FormalExpression out(a.field());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      FormalExpression::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string FormalExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& s : w) os << " " << s;
  }
  return os.str();
}

FormalExpression product(int field, const std::vector<FormalExpression>& factors) {
  FormalExpression out = FormalExpression::one(field);
  for (const auto& f : factors) out = out * f;
  return out;
}

// ---------------------------------------------------------------------------
// expression helpers

namespace expr {

FormalExpression sym(int field, const std::string& name) { return FormalExpression::symbol(field, name); }

FormalExpression torus_power(int r, const std::string& torus, int j, int k) {
  const int kk = ((k % r) + r) % r;
  return FormalExpression::word(r, FormalExpression::Word(static_cast<std::size_t>(kk), torus + std::to_string(j)));
}

FormalExpression e_pair(int r, const std::string& torus, int i, int k) {
  FormalExpression out(r);
  for (int s = 0; s < r; ++s) out += torus_power(r, torus, i, s) * torus_power(r, torus, k, -s);
  return out * Scalar(r, Rational(1, r));
}

FormalExpression e_index(int r, int n, const std::string& torus, int i) {
  return i == 0 ? e_pair(r, torus, n, 1) : e_pair(r, torus, i, i + 1);
}

FormalExpression quadratic_inverse(int r, int n, const std::string& torus, const std::string& gen, int i) {
  return sym(r, gen + std::to_string(i)) - Scalar::q_minus_qinv(r) * e_index(r, n, torus, i);
}

FormalExpression x_macro(int r, int n, int j, bool inverse) {
  if (j < 1 || j > n) throw Error(ErrorKind::IndexOutOfRange, "X index outside 1..n");
  if (j == 1) return sym(r, inverse ? "X1^-1" : "X1");
  const FormalExpression g =
      inverse ? quadratic_inverse(r, n, "t", "g", j - 1) : sym(r, "g" + std::to_string(j - 1));
  return g * x_macro(r, n, j - 1, inverse) * g;
}

}  // namespace expr

// ---------------------------------------------------------------------------
// symbols

std::vector<std::string> yokonuma_symbols(int n) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j) out.push_back("t" + std::to_string(j));
  for (int i = 1; i < n; ++i) out.push_back("g" + std::to_string(i));
  out.push_back("X1");
  out.push_back("X1^-1");
  return out;
}

std::vector<std::string> im_symbols(int n) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j) out.push_back("t" + std::to_string(j));
  for (int i = 0; i < n; ++i) out.push_back("Ts" + std::to_string(i));
  out.push_back("Trho");
  out.push_back("Trho^-1");
  return out;
}

std::vector<std::string> modified_symbols(int n) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j) out.push_back("w" + std::to_string(j));
  for (int i = 0; i < n; ++i) out.push_back("hs" + std::to_string(i));
  out.push_back("hrho");
  out.push_back("hrho^-1");
  return out;
}

// ---------------------------------------------------------------------------
// built-in presentations

namespace {

std::string str(int i) { return std::to_string(i); }

int mod(int a, int n) { return ((a % n) + n) % n; }

// g_a g_{a-1} ... g_b, empty when a < b.
std::string down(const std::string& g, int a, int b, bool inv = false) {
  std::string out;
  for (int i = a; i >= b; --i) out += " " + g + str(i) + (inv ? "^-1" : "");
  return out;
}

// g_a g_{a+1} ... g_b, empty when a > b.
std::string up(const std::string& g, int a, int b, bool inv = false) {
  std::string out;
  for (int i = a; i <= b; ++i) out += " " + g + str(i) + (inv ? "^-1" : "");
  return out;
}

class Builder {
 public:
  Builder(std::string name, int r, int n, std::vector<std::string> gens, const std::string& scope)
      : scope_(scope == "universal" ? universal_scope(r, n) : presentation_scope(scope, r, n)) {
    p_.scope = scope;
    p_.name = std::move(name);
    p_.r = r;
    p_.n = n;
    p_.generators = std::move(gens);
  }

  int r() const { return p_.r; }
  int n() const { return p_.n; }

  void family(const std::string& label) { p_.families.push_back(label); }

  void add(const std::string& instance, FormalExpression lhs, FormalExpression rhs) {
    p_.relations.push_back({p_.families.back(), instance, std::move(lhs), std::move(rhs), {}, {}});
  }

  static std::string nonblank(const std::string& src) {
    const bool blank = std::all_of(src.begin(), src.end(), [](char c) { return c == ' '; });
    return blank ? "1" : src;
  }

  FormalExpression parse(const std::string& src) const { return parse_expression(nonblank(src), scope_); }

  void add(const std::string& instance, const std::string& lhs, const std::string& rhs) {
    add(instance, parse(lhs), parse(rhs));
    p_.relations.back().lhs_src = nonblank(lhs);
    p_.relations.back().rhs_src = nonblank(rhs);
  }

  FormalExpression word(const FormalExpression::Word& w) const { return FormalExpression::word(p_.r, w); }
  FormalExpression one() const { return FormalExpression::one(p_.r); }
  FormalExpression z() const { return FormalExpression::constant(Scalar::q_minus_qinv(p_.r)); }

  Presentation done() { return std::move(p_); }

 private:
  SymbolScope scope_;
  Presentation p_;
};

std::string sname(const std::string& head, int i) { return head + str(i); }

// t_i^r = 1 and t_i t_j = t_j t_i (torus prefix t or w).
void torus_families(Builder& b, const std::string& x) {
  b.family(x + "_order");
  for (int i = 1; i <= b.n(); ++i) {
    b.add(sname(x, i), b.word(FormalExpression::Word(static_cast<std::size_t>(b.r()), sname(x, i))), b.one());
  }
  b.family(x + "_commute");
  for (int i = 1; i <= b.n(); ++i) {
    for (int j = i + 1; j <= b.n(); ++j) {
      b.add(sname(x, i) + "," + sname(x, j), b.word({sname(x, i), sname(x, j)}), b.word({sname(x, j), sname(x, i)}));
    }
  }
}

// x_i^2 = 1 + z e_i x_i, or h^2 = 1 + z h when `plain`.
void quadratic(Builder& b, const std::string& x, int i, const std::string& torus, bool plain) {
  const std::string s = sname(x, i);
  const FormalExpression xi = b.word({s});
  FormalExpression rhs = b.one() + b.z() * (plain ? xi : expr::e_index(b.r(), b.n(), torus, i) * xi);
  b.add(s, b.word({s, s}), rhs);
}

void braid(Builder& b, const std::string& x, int i, int j) {
  const std::string a = sname(x, i);
  const std::string c = sname(x, j);
  b.add(a + "," + c, b.word({a, c, a}), b.word({c, a, c}));
}

void commute(Builder& b, const std::string& x, const std::string& y) {
  b.add(x + "," + y, b.word({x, y}), b.word({y, x}));
}

// Ts_i t_j = t_{s_i(j)} Ts_i for 1 <= i <= n-1.
void finite_exchange(Builder& b, const std::string& x, int i, const std::string& torus) {
  for (int j = 1; j <= b.n(); ++j) {
    const int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
    b.add(sname(x, i) + "," + sname(torus, j), b.word({sname(x, i), sname(torus, j)}),
          b.word({sname(torus, sj), sname(x, i)}));
  }
}

// Ts0 t1 = tn Ts0, Ts0 tn = t1 Ts0, Ts0 t_k = t_k Ts0.
void s0_exchange(Builder& b) {
  const int n = b.n();
  b.family("Ts0_t1_exchange");
  b.add("Ts0,t1", b.word({"Ts0", "t1"}), b.word({sname("t", n), "Ts0"}));
  b.family("Ts0_tn_exchange");
  b.add("Ts0,t" + str(n), b.word({"Ts0", sname("t", n)}), b.word({"t1", "Ts0"}));
  b.family("Ts0_t_commute");
  for (int k = 2; k <= n - 1; ++k) commute(b, "Ts0", sname("t", k));
}

// Delta^{-2} sum_{c1<c2} (zeta^{c2} - zeta^{c1}) z F_{c1}(w_i) F_{c2}(w_{i+1}), w_0 = w_n.
FormalExpression modified_defect(int r, int n, int i) {
  const int a = i == 0 ? n : i;
  const int bidx = i == n ? 1 : (i == 0 ? 1 : i + 1);
  const VandermondeData& v = vandermonde(r);
  auto F = [&](int c, int j) {
    FormalExpression f(r);
    for (int k = 0; k < r; ++k) {
      f += expr::torus_power(r, "w", j, k) * Scalar(v.F[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(k)]);
    }
    return f;
  };
  FormalExpression sum(r);
  for (int c1 = 1; c1 <= r; ++c1) {
    for (int c2 = c1 + 1; c2 <= r; ++c2) {
      const CycRational diff = CycRational::zeta_power(r, c2) - CycRational::zeta_power(r, c1);
      sum += (F(c1, a) * F(c2, bidx)) * Scalar(diff);
    }
  }
  const CycRational inv = cyc_invert(v.delta);
  return sum * (Scalar(inv * inv) * Scalar::q_minus_qinv(r));
}

// h_i w_i = w_{i+1} h_i - D_i, h_i w_{i+1} = w_i h_i + D_i, h_i w_l = w_l h_i.
void modified_exchange(Builder& b, const std::vector<int>& indices, bool modular) {
  const int n = b.n();
  auto w_of = [&](int i) { return sname("w", i == 0 ? n : i); };
  b.family("hs_wi_exchange");
  for (int i : indices) {
    const std::string h = sname("hs", i);
    b.add(h + "," + w_of(i), b.word({h, w_of(i)}), b.word({w_of(i + 1), h}) - modified_defect(b.r(), n, i));
  }
  b.family("hs_wi1_exchange");
  for (int i : indices) {
    const std::string h = sname("hs", i);
    b.add(h + "," + w_of(i + 1), b.word({h, w_of(i + 1)}), b.word({w_of(i), h}) + modified_defect(b.r(), n, i));
  }
  b.family("hs_w_commute");
  for (int i : indices) {
    for (int l = 1; l <= n; ++l) {
      const bool skip = modular ? (mod(l - i, n) == 0 || mod(l - i - 1, n) == 0) : (l == i || l == i + 1);
      if (!skip) commute(b, sname("hs", i), sname("w", l));
    }
  }
}

void rho_families(Builder& b, const std::string& rho, const std::string& x, const std::string& torus) {
  const int n = b.n();
  if (!torus.empty()) {
    b.family(rho + "_" + torus + "_exchange");
    for (int j = 1; j <= n; ++j) {
      b.add(rho + "," + sname(torus, j), b.word({rho, sname(torus, j)}),
            b.word({sname(torus, j == 1 ? n : j - 1), rho}));
    }
  }
  b.family(rho + "_" + x + "_rotation");
  for (int i = 0; i < n; ++i) {
    b.add(rho + "," + sname(x, i), b.word({rho, sname(x, i)}), b.word({sname(x, mod(i - 1, n)), rho}));
  }
}

void rho_inverse(Builder& b, const std::string& rho) {
  b.family(rho + "_inverse");
  b.add("right", b.word({rho, rho + "^-1"}), b.one());
  b.add("left", b.word({rho + "^-1", rho}), b.one());
}

void affine_coxeter(Builder& b, const std::string& x) {
  const int n = b.n();
  b.family(x + "_far_commute");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = mod(i - j, n);
      if (d != 1 && d != n - 1) commute(b, sname(x, i), sname(x, j));
    }
  }
  b.family(x + "_braid");
  if (n >= 3) {
    for (int i = 0; i < n; ++i) braid(b, x, i, mod(i + 1, n));
  }
}

Presentation yokonuma(int r, int n) {
  Builder b("yokonuma", r, n, yokonuma_symbols(n), "yokonuma");
  b.family("g_far_commute");
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) commute(b, sname("g", i), sname("g", j));
  }
  b.family("g_braid");
  for (int i = 1; i <= n - 2; ++i) braid(b, "g", i, i + 1);
  b.family("t_commute");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) commute(b, sname("t", i), sname("t", j));
  }
  b.family("g_t_exchange");
  for (int i = 1; i < n; ++i) finite_exchange(b, "g", i, "t");
  b.family("t_order");
  for (int i = 1; i <= n; ++i) {
    b.add(sname("t", i), b.word(FormalExpression::Word(static_cast<std::size_t>(r), sname("t", i))), b.one());
  }
  b.family("g_quadratic");
  for (int i = 1; i < n; ++i) quadratic(b, "g", i, "t", false);
  b.family("X1_inverse");
  b.add("right", b.word({"X1", "X1^-1"}), b.one());
  b.add("left", b.word({"X1^-1", "X1"}), b.one());
  b.family("g1_X1_reflection");
  b.add("g1,X1", b.word({"g1", "X1", "g1", "X1"}), b.word({"X1", "g1", "X1", "g1"}));
  b.family("g_X1_commute");
  for (int i = 2; i < n; ++i) commute(b, sname("g", i), "X1");
  b.family("t_X1_commute");
  for (int j = 1; j <= n; ++j) commute(b, sname("t", j), "X1");
  return b.done();
}

Presentation im_affine(int r, int n) {
  Builder b("im_affine", r, n, im_symbols(n), "im_affine");
  torus_families(b, "t");
  b.family("Ts_t_exchange");
  for (int i = 1; i < n; ++i) finite_exchange(b, "Ts", i, "t");
  rho_families(b, "Trho", "Ts", "t");
  affine_coxeter(b, "Ts");
  b.family("Ts_quadratic");
  for (int i = 0; i < n; ++i) quadratic(b, "Ts", i, "t", false);
  rho_inverse(b, "Trho");
  return b.done();
}

Presentation modified_affine(int r, int n) {
  Builder b("modified_affine", r, n, modified_symbols(n), "modified_affine");
  torus_families(b, "w");
  rho_families(b, "hrho", "hs", "w");
  affine_coxeter(b, "hs");
  b.family("hs_quadratic");
  for (int i = 0; i < n; ++i) quadratic(b, "hs", i, "w", true);
  std::vector<int> finite;
  for (int i = 1; i < n; ++i) finite.push_back(i);
  modified_exchange(b, finite, false);
  rho_inverse(b, "hrho");
  return b.done();
}

std::vector<int> h1_indices(int n) {
  std::vector<int> out;
  for (int i = 0; i <= n - 2; ++i) out.push_back(i);
  return out;
}

std::vector<int> h2_indices(int n) {
  std::vector<int> out{0};
  for (int i = 2; i <= n - 1; ++i) out.push_back(i);
  return out;
}

std::vector<std::string> restricted_symbols(int n, const std::string& torus, const std::string& x,
                                            const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j) out.push_back(sname(torus, j));
  for (int i : idx) out.push_back(sname(x, i));
  return out;
}

Presentation h1(int r, int n) {
  Builder b("h1", r, n, restricted_symbols(n, "t", "Ts", h1_indices(n)), "im_affine");
  torus_families(b, "t");
  s0_exchange(b);
  b.family("Ts_t_exchange");
  for (int i = 1; i <= n - 2; ++i) finite_exchange(b, "Ts", i, "t");
  b.family("Ts_far_commute");
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = i + 2; j <= n - 2; ++j) commute(b, sname("Ts", i), sname("Ts", j));
  }
  b.family("Ts_braid");
  if (n >= 3) {
    for (int i = 0; i <= n - 3; ++i) braid(b, "Ts", i, i + 1);
  }
  b.family("Ts_quadratic");
  for (int i : h1_indices(n)) quadratic(b, "Ts", i, "t", false);
  return b.done();
}

Presentation c1(int r, int n) {
  Builder b("c1", r, n, restricted_symbols(n, "w", "hs", h1_indices(n)), "modified_affine");
  torus_families(b, "w");
  b.family("hs_far_commute");
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = i + 2; j <= n - 2; ++j) commute(b, sname("hs", i), sname("hs", j));
  }
  b.family("hs_braid");
  if (n >= 3) {
    for (int i = 0; i <= n - 3; ++i) braid(b, "hs", i, i + 1);
  }
  b.family("hs_quadratic");
  for (int i : h1_indices(n)) quadratic(b, "hs", i, "w", true);
  modified_exchange(b, h1_indices(n), true);
  return b.done();
}

Presentation h2(int r, int n) {
  Builder b("h2", r, n, restricted_symbols(n, "t", "Ts", h2_indices(n)), "im_affine");
  torus_families(b, "t");
  s0_exchange(b);
  b.family("Ts_t_exchange");
  for (int i = 2; i <= n - 1; ++i) finite_exchange(b, "Ts", i, "t");
  b.family("Ts_far_commute");
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) commute(b, sname("Ts", i), sname("Ts", j));
  }
  b.family("Ts_braid");
  for (int i = 2; i <= n - 2; ++i) braid(b, "Ts", i, i + 1);
  b.family("Ts0_Ts_commute");
  for (int k = 2; k <= n - 2; ++k) commute(b, "Ts0", sname("Ts", k));
  b.family("Ts0_last_braid");
  if (n >= 3) braid(b, "Ts", 0, n - 1);
  b.family("Ts_quadratic");
  for (int i : h2_indices(n)) quadratic(b, "Ts", i, "t", false);
  return b.done();
}

Presentation c2(int r, int n) {
  Builder b("c2", r, n, restricted_symbols(n, "w", "hs", h2_indices(n)), "modified_affine");
  torus_families(b, "w");
  b.family("hs_far_commute");
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) commute(b, sname("hs", i), sname("hs", j));
  }
  b.family("hs_braid");
  for (int i = 2; i <= n - 2; ++i) braid(b, "hs", i, i + 1);
  b.family("hs0_hs_commute");
  for (int k = 2; k <= n - 2; ++k) commute(b, "hs0", sname("hs", k));
  b.family("hs0_last_braid");
  if (n >= 3) braid(b, "hs", 0, n - 1);
  b.family("hs_quadratic");
  for (int i : h2_indices(n)) quadratic(b, "hs", i, "w", true);
  modified_exchange(b, h2_indices(n), true);
  return b.done();
}

Presentation hecke_ext(int r, int n) {
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) gens.push_back(sname("hs", i));
  gens.push_back("hrho");
  gens.push_back("hrho^-1");
  Builder b("hecke_ext", r, n, gens, "modified_affine");
  rho_families(b, "hrho", "hs", "");
  affine_coxeter(b, "hs");
  b.family("hs_quadratic");
  for (int i = 0; i < n; ++i) quadratic(b, "hs", i, "w", true);
  rho_inverse(b, "hrho");
  return b.done();
}

// Intermediate identities from the proof that the Bernstein and
// Iwahori-Matsumoto presentations agree.  Words in g, X are evaluated
// through Psi; words in Ts, Trho directly.
Presentation bernstein_identities(int r, int n) {
  std::vector<std::string> gens = yokonuma_symbols(n);
  for (const auto& s : im_symbols(n)) {
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  Builder b("bernstein_identities", r, n, gens, "universal");
  const int m = n - 1;
  const std::string Xn = " X" + str(n);
  // Phi(T_s0) and Phi(T_rho).
  const std::string P = "X1^-1" + Xn + down("g", m, 2, true) + " g1^-1" + up("g", 2, m, true);
  const std::string R = down("g", m, 1) + " X1";
  auto phi = [&](int i) { return i == 0 ? "(" + P + ")" : " g" + str(i); };
  // Psi(X1).
  const std::string Q = up("Ts", 1, m, true) + " Trho";

  b.family("rho_image_conjugation");
  for (int i = 0; i < n; ++i) b.add("i=" + str(i), R + " " + phi(i), phi(mod(i - 1, n)) + " " + R);

  b.family("s0_image_rewrites");
  b.add("X1 inside", P, "X1^-1" + down("g", m, 1) + " X1" + up("g", 2, m, true));
  b.add("X1 outside", P, "X1^-1" + down("g", m, 1) + up("g", 2, m, true) + " X1");

  b.family("braid_conjugation_chain");
  b.add("full", down("g", m, 1) + up("g", 2, m, true), up("g", 1, m - 1, true) + down("g", m, 1));
  for (int i = 1; i <= n - 2; ++i) {
    b.add("i=" + str(i), "g" + str(i + 1) + " g" + str(i) + " g" + str(i + 1) + "^-1",
          "g" + str(i) + "^-1 g" + str(i + 1) + " g" + str(i));
  }

  b.family("rho_image_conjugates_s1");
  b.add("s1", down("g", m, 1) + " X1 g1 X1^-1" + up("g", 1, m, true),
        "X1^-1" + down("g", m, 1) + " X1" + up("g", 2, m, true));

  b.family("rho_image_shifts_g");
  for (int i = 2; i <= m; ++i) b.add("i=" + str(i), R + " g" + str(i), "g" + str(i - 1) + " " + R);

  b.family("s0_image_commutes_far_g");
  for (int j = 2; j <= n - 2; ++j) {
    const std::string s0 = "X1^-1" + down("g", m, 1) + up("g", 2, m, true) + " X1";
    b.add("j=" + str(j), "g" + str(j) + " " + s0, s0 + " g" + str(j));
  }

  b.family("s0_s1_image_braid");
  if (n >= 3) b.add("s1", phi(1) + phi(0) + phi(1), phi(0) + phi(1) + phi(0));
  b.family("s0_last_image_braid");
  if (n >= 3) b.add("s" + str(m), phi(m) + phi(0) + phi(m), phi(0) + phi(m) + phi(0));

  b.family("s1_s0_s1_image_form");
  if (n >= 3) {
    b.add("middle", phi(1) + phi(0) + phi(1),
          "g1 X1^-1" + Xn + down("g", m, 3, true) + " g1^-1 g2^-1 g1^-1" + up("g", 3, m, true) + " g1");
    b.add("final", phi(1) + phi(0) + phi(1), "g1 X1^-1" + Xn + " g1^-1" + down("g", m, 2, true) + up("g", 3, m, true));
  }
  b.family("s0_s1_s0_image_form");
  if (n >= 3) {
    b.add("final", phi(0) + phi(1) + phi(0),
          "X1^-1" + Xn + " g1^-1 X1^-1 g1 X1" + down("g", m, 2, true) + up("g", 3, m, true));
    b.add("reduction", "g1 X1^-1 g1^-1", "X1^-1 g1^-1 X1^-1 g1 X1");
    b.add("conjugate", "g1^-1 X1^-1 g1^-1 X1^-1 g1 X1 g1", "X1^-1");
  }
  b.family("last_s0_last_image_form");
  if (n >= 3) {
    b.add("final", phi(m) + phi(0) + phi(m),
          "X1^-1 g" + str(m) + Xn + down("g", m, 2, true) + " g1^-1" + up("g", 2, m - 1, true));
  }
  b.family("s0_last_s0_image_form");
  if (n >= 3) {
    b.add("middle", phi(0) + phi(m) + phi(0),
          "X1^-1" + down("g", m, 1) + " X1" + up("g", 2, m - 1, true) + " " + P);
    b.add("final", phi(0) + phi(m) + phi(0),
          "X1^-1 g" + str(m) + Xn + down("g", m - 1, 2) + " g1" + up("g", 2, m - 1, true) + down("g", m, 2, true) +
              " g1^-1" + up("g", 2, m, true));
  }

  const std::string pal = down("g", m, 2, true) + " g1^-1" + up("g", 2, m, true);
  b.family("inverse_palindrome_reduction");
  if (n >= 3) {
    b.add("target", down("g", m, 2, true) + " g1^-1" + up("g", 2, m - 1, true),
          down("g", m - 1, 2) + " g1" + up("g", 2, m - 1, true) + pal);
    b.add("short palindrome", down("g", m - 1, 2, true) + " g1^-1" + up("g", 2, m - 1, true),
          up("g", 1, m - 2, true) + " g" + str(m - 1) + "^-1" + down("g", m - 2, 1, true));
    b.add("long palindrome", pal, up("g", 1, m - 1, true) + " g" + str(m) + "^-1" + down("g", m - 1, 1, true));
  }
  b.family("palindrome_reduction_shifted");
  if (n >= 3) {
    b.add("shifted", "g" + str(m) + "^-1" + up("g", 1, m - 2, true),
          down("g", m - 1, 2) + " g1" + up("g", 2, m - 1, true) + up("g", 1, m - 1, true) + " g" + str(m) + "^-1");
  }
  b.family("palindrome_reduction_core");
  if (n >= 3) {
    b.add("core", up("g", 1, m - 2, true), down("g", m - 1, 2) + " g1" + up("g", 2, m - 1, true) + up("g", 1, m - 1, true));
  }

  b.family("s0_image_quadratic");
  b.add("square", P + " " + P, "1 + (q - q^-1) e(" + str(n) + ",1) " + P);
  b.add("expanded", P + " " + P, "X1^-1" + down("g", m, 2) + " g1 g1" + up("g", 2, m, true) + " X1");

  b.family("X1_image_reflection");
  b.add("Y8", Q + " Ts1 " + Q + " Ts1", "Ts1 " + Q + " Ts1 " + Q);
  b.add("rho shift", "Trho" + up("Ts", 2, m, true) + " Trho Ts1", up("Ts", 1, m - 1, true) + " Trho^2 Ts1");
  b.add("rho square", up("Ts", 1, m - 1, true) + " Trho^2 Ts1", up("Ts", 1, m - 1, true) + " Ts" + str(m) + " Trho^2");

  b.family("X1_image_reflection_reduced");
  b.add("chain", up("Ts", 1, m, true) + up("Ts", 1, m - 1, true) + " Ts" + str(m),
        up("Ts", 2, m, true) + up("Ts", 1, m - 1, true));

  b.family("inverse_chain_braid");
  b.add("chain", up("Ts", 1, m - 1, true) + down("Ts", m, 1), down("Ts", m, 1) + up("Ts", 2, m, true));

  b.family("X1_image_commutes_far_T");
  for (int i = 2; i <= m; ++i) b.add("i=" + str(i), "Ts" + str(i) + " " + Q, Q + " Ts" + str(i));

  b.family("inverse_chain_shifts_T");
  for (int i = 2; i <= m; ++i) {
    b.add("i=" + str(i), "Ts" + str(i) + up("Ts", 1, m, true), up("Ts", 1, m, true) + " Ts" + str(i - 1));
    b.add("step i=" + str(i), "Ts" + str(i) + " Ts" + str(i - 1) + "^-1 Ts" + str(i) + "^-1",
          "Ts" + str(i - 1) + "^-1 Ts" + str(i) + "^-1 Ts" + str(i - 1));
  }

  b.family("X1_image_commutes_t");
  for (int j = 1; j <= n; ++j) b.add("j=" + str(j), Q + " t" + str(j), "t" + str(j) + " " + Q);
  return b.done();
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"yokonuma", "im_affine", "modified_affine", "h1", "c1",
                                              "h2",       "c2",        "hecke_ext",       "bernstein_identities"};
  return names;
}

Presentation builtin(const std::string& name, int r, int n) {
  if (r < 1 || n < 2) throw Error(ErrorKind::InvalidArgument, "presentations need r >= 1 and n >= 2");
  if (name == "yokonuma") return yokonuma(r, n);
  if (name == "im_affine") return im_affine(r, n);
  if (name == "modified_affine") return modified_affine(r, n);
  if (name == "h1") return h1(r, n);
  if (name == "c1") return c1(r, n);
  if (name == "h2") return h2(r, n);
  if (name == "c2") return c2(r, n);
  if (name == "hecke_ext") return hecke_ext(r, n);
  if (name == "bernstein_identities") return bernstein_identities(r, n);
  throw Error(ErrorKind::UnknownName, "unknown presentation '" + name + "'");
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

using Word = FormalExpression::Word;

class Evaluator {
 public:
  Evaluator(const Assignment& assign, const Context& ctx) : assign_(assign), ctx_(ctx) {}

  Element operator()(const FormalExpression& e) {
    Element out(ctx_);
    for (const auto& [w, c] : e.terms()) out += suffix(w, 0) * lift(c);
    return out;
  }

 private:
  Scalar lift(const Scalar& c) const {
    if (c.field() == ctx_.field) return c;
    if (ctx_.field % c.field() != 0) throw Error(ErrorKind::MixedRoot, "expression field does not embed");
    const int step = ctx_.field / c.field();
    std::vector<Scalar::Term> terms;
    for (const auto& [e, v] : c.terms()) {
      std::vector<Rational> p(static_cast<std::size_t>(step * (static_cast<int>(v.coeffs().size()) - 1) + 1));
      for (std::size_t k = 0; k < v.coeffs().size(); ++k) p[k * static_cast<std::size_t>(step)] = v.coeffs()[k];
      terms.emplace_back(e, cyclotomic_reduce(p, ctx_.field));
    }
    return Scalar::from_terms(ctx_.field, std::move(terms));
  }

  const Element& symbol(const std::string& s) const {
    auto it = assign_.find(s);
    if (it == assign_.end()) throw Error(ErrorKind::UnboundSymbol, "symbol '" + s + "' has no value");
    return it->second;
  }

  Element suffix(const Word& w, std::size_t from) {
    if (from == w.size()) return unit(ctx_);
    Word key(w.begin() + static_cast<long>(from), w.end());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Element v = mul(symbol(w[from]), suffix(w, from + 1));
    cache_.emplace(std::move(key), v);
    return v;
  }

  const Assignment& assign_;
  Context ctx_;
  std::map<Word, Element> cache_;
};

}  // namespace

Element evaluate(const FormalExpression& e, const Assignment& assign, const Context& ctx) {
  return Evaluator(assign, ctx)(e);
}

bool Report::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

Report check_relations(const Presentation& p, const Assignment& assign, const Context& ctx) {
  Report report{p.name, p.r, p.n, {}};
  Evaluator eval(assign, ctx);
  const SymbolScope scope = p.scope == "universal" ? universal_scope(p.r, p.n) : presentation_scope(p.scope, p.r, p.n);
  auto side = [&](const FormalExpression& e, const std::string& src) {
    return src.empty() ? eval(e) : evaluate_source(src, scope, assign, ctx);
  };
  for (const auto& fam : p.families) {
    CheckResult res{fam, true, 0, std::nullopt, ""};
    for (const auto& rel : p.relations) {
      if (rel.family != fam) continue;
      ++res.instances;
      Element d = side(rel.lhs, rel.lhs_src) - side(rel.rhs, rel.rhs_src);
      if (!d.is_zero() && res.pass) {
        res.pass = false;
        res.diff = std::move(d);
        res.failed_instance = rel.instance;
      }
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

// ---------------------------------------------------------------------------
// realizations and morphisms

Assignment im_assignment(const Context& ctx) {
  Assignment out;
  for (int j = 1; j <= ctx.n; ++j) out.emplace("t" + str(j), generator_element(ctx, Generator::t(j)));
  for (int i = 0; i < ctx.n; ++i) out.emplace("Ts" + str(i), generator_element(ctx, Generator::s(i)));
  out.emplace("Trho", rho_element(ctx, 1));
  out.emplace("Trho^-1", rho_element(ctx, -1));
  return out;
}

Assignment yokonuma_assignment(const Context& ctx) { return psi_assignment(ctx); }

Assignment universal_assignment(const Context& ctx) {
  Assignment out = im_assignment(ctx);
  out.merge(yokonuma_assignment(ctx));
  out.merge(psi_c_assignment(ctx));
  return out;
}

Morphism phi_morphism(int r, int n) {
  const SymbolScope scope = presentation_scope("yokonuma", r, n);
  const int m = n - 1;
  Morphism out;
  for (int j = 1; j <= n; ++j) out.emplace("t" + str(j), parse_expression("t" + str(j), scope));
  for (int i = 1; i < n; ++i) out.emplace("Ts" + str(i), parse_expression("g" + str(i), scope));
  out.emplace("Ts0", parse_expression("X1^-1 X" + str(n) + down("g", m, 2, true) + " g1^-1" + up("g", 2, m, true), scope));
  out.emplace("Trho", parse_expression(down("g", m, 1) + " X1", scope));
  out.emplace("Trho^-1", parse_expression("X1^-1" + up("g", 1, m, true), scope));
  return out;
}

Morphism psi_morphism(int r, int n) {
  const SymbolScope scope = presentation_scope("im_affine", r, n);
  const int m = n - 1;
  Morphism out;
  for (int j = 1; j <= n; ++j) out.emplace("t" + str(j), parse_expression("t" + str(j), scope));
  for (int i = 1; i < n; ++i) out.emplace("g" + str(i), parse_expression("Ts" + str(i), scope));
  out.emplace("X1", parse_expression(up("Ts", 1, m, true) + " Trho", scope));
  out.emplace("X1^-1", parse_expression("Trho^-1" + down("Ts", m, 1), scope));
  return out;
}

namespace {

// Delta^{-2} z sum_{c1<c2} F_{c1}(x_i) F_{c2}(x_{i+1}) with x_0 = x_n.
FormalExpression correction(int r, int n, const std::string& torus, int i) {
  const int a = i == 0 ? n : i;
  const int bidx = i == 0 ? 1 : i + 1;
  const VandermondeData& v = vandermonde(r);
  auto F = [&](int c, int j) {
    FormalExpression f(r);
    for (int k = 0; k < r; ++k) {
      f += expr::torus_power(r, torus, j, k) * Scalar(v.F[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(k)]);
    }
    return f;
  };
  FormalExpression sum(r);
  for (int c1 = 1; c1 <= r; ++c1) {
    for (int c2 = c1 + 1; c2 <= r; ++c2) sum += F(c1, a) * F(c2, bidx);
  }
  const CycRational inv = cyc_invert(v.delta);
  return sum * (Scalar(inv * inv) * Scalar::q_minus_qinv(r));
}

}  // namespace

Morphism phi_c_morphism(int r, int n) {
  Morphism out;
  for (int j = 1; j <= n; ++j) out.emplace("t" + str(j), expr::sym(r, "w" + str(j)));
  for (int i = 0; i < n; ++i) out.emplace("Ts" + str(i), expr::sym(r, "hs" + str(i)) - correction(r, n, "w", i));
  out.emplace("Trho", expr::sym(r, "hrho"));
  out.emplace("Trho^-1", expr::sym(r, "hrho^-1"));
  return out;
}

Morphism psi_c_morphism(int r, int n) {
  Morphism out;
  for (int j = 1; j <= n; ++j) out.emplace("w" + str(j), expr::sym(r, "t" + str(j)));
  for (int i = 0; i < n; ++i) out.emplace("hs" + str(i), expr::sym(r, "Ts" + str(i)) + correction(r, n, "t", i));
  out.emplace("hrho", expr::sym(r, "Trho"));
  out.emplace("hrho^-1", expr::sym(r, "Trho^-1"));
  return out;
}

Report verify_inverse_pair(const std::string& name, const Morphism& fwd, const Morphism& back,
                           const Assignment& real_a, const Assignment& real_b, const Context& ctx) {
  Report report{name, ctx.r, ctx.n, {}};
  // Realize each symbol of the other side through the opposite map.
  auto realize = [&](const Morphism& m, const Assignment& real) {
    Assignment out;
    Evaluator eval(real, ctx);
    for (const auto& [s, e] : m) out.emplace(s, eval(e));
    return out;
  };
  const Assignment b_in_a = realize(back, real_a);
  const Assignment a_in_b = realize(fwd, real_b);
  auto round_trip = [&](const std::string& prefix, const Morphism& m, const Assignment& via, const Assignment& real) {
    Evaluator eval(via, ctx);
    for (const auto& [s, e] : m) {
      CheckResult res{prefix + s, true, 1, std::nullopt, ""};
      auto target = real.find(s);
      if (target == real.end()) throw Error(ErrorKind::UnboundSymbol, "no realization for '" + s + "'");
      Element d = eval(e) - target->second;
      if (!d.is_zero()) {
        res.pass = false;
        res.diff = std::move(d);
        res.failed_instance = s;
      }
      report.results.push_back(std::move(res));
    }
  };
  round_trip("back_after_fwd:", fwd, b_in_a, real_a);
  round_trip("fwd_after_back:", back, a_in_b, real_b);
  return report;
}

// ---------------------------------------------------------------------------
// structural checks

namespace {

std::vector<std::vector<int>> all_tori(int r, int n) {
  std::vector<std::vector<int>> out;
  long total = 1;
  for (int j = 0; j < n; ++j) total *= r;
  for (long code = 0; code < total; ++code) {
    std::vector<int> beta(static_cast<std::size_t>(n));
    long c = code;
    for (int& b : beta) {
      b = static_cast<int>(c % r);
      c /= r;
    }
    out.push_back(std::move(beta));
  }
  return out;
}

std::vector<GroupIndex> bounded_indices(const Context& ctx, int max_length, int max_rho) {
  std::vector<GroupIndex> out;
  for (const auto& w : enumerate_bounded(ctx.n, max_length, max_rho)) {
    for (auto beta : all_tori(ctx.r, ctx.n)) out.push_back(GroupIndex{std::move(beta), w});
  }
  return out;
}

GroupIndex gidx(const Context& ctx, const Generator& g) { return generator(g, ctx.r, ctx.n); }

// (a, b) with e_i = e_{a,b}.
std::pair<int, int> e_pair_of(const Context& ctx, int i) { return i == 0 ? std::pair{ctx.n, 1} : std::pair{i, i + 1}; }

// Right multiplication rules mirrored from the left ones.
Element right_mul_s(const Element& x, int i) {
  const Context& ctx = x.context();
  const GroupIndex s = gidx(ctx, Generator::s(i));
  const auto [a, b] = e_pair_of(ctx, i);
  const Element e = e_element(ctx, a, b);
  Element out(ctx);
  for (const auto& [w, c] : x.terms()) {
    const GroupIndex ws = compose(w, s, ctx.r);
    out.add_term(ws, c);
    if (length(ws) < length(w)) out += group_mul(basis(ctx, w), e) * (c * z_const(ctx));
  }
  return out;
}

void record(CheckResult& res, const Element& d, const std::string& where) {
  ++res.instances;
  if (!d.is_zero() && res.pass) {
    res.pass = false;
    res.diff = d;
    res.failed_instance = where;
  }
}

}  // namespace

Report verify_lemma27(const Context& ctx, int max_length, int max_rho) {
  Report report{"exchange_identities", ctx.r, ctx.n, {}};
  CheckResult one{"e_s_w_equals_e_w_s", true, 0, std::nullopt, ""};
  CheckResult two{"s_w_e_equals_e_w_s", true, 0, std::nullopt, ""};
  CheckResult three{"e_w_equals_w_e", true, 0, std::nullopt, ""};
  for (const auto& w : bounded_indices(ctx, max_length, max_rho)) {
    const Element W = basis(ctx, w);
    for (int i = 0; i < ctx.n; ++i) {
      const GroupIndex si = gidx(ctx, Generator::s(i));
      const GroupIndex siw = compose(si, w, ctx.r);
      for (int j = 0; j < ctx.n; ++j) {
        const GroupIndex sj = gidx(ctx, Generator::s(j));
        const GroupIndex wsj = compose(w, sj, ctx.r);
        if (length(compose(siw, sj, ctx.r)) != length(w) || length(siw) != length(wsj)) continue;
        const Element ei = e_affine(ctx, i);
        const Element ej = e_affine(ctx, j);
        const Element ewsj = group_mul(ei, basis(ctx, wsj));
        const std::string where = "i=" + str(i) + " j=" + str(j) + " w=" + to_string(w);
        record(one, group_mul(ei, basis(ctx, siw)) - ewsj, where);
        record(two, group_mul(basis(ctx, siw), ej) - ewsj, where);
        record(three, group_mul(ei, W) - group_mul(W, ej), where);
      }
    }
  }
  report.results = {one, two, three};
  return report;
}

Report verify_pq_commute(const Context& ctx, int max_length, int max_rho) {
  Report report{"pq_commute", ctx.r, ctx.n, {}};
  struct Op {
    std::string kind;
    std::string name;
    std::function<Element(const Element&)> apply;
  };
  std::vector<Op> P;
  std::vector<Op> Q;
  for (int k = 1; k <= ctx.n; ++k) {
    const Generator g = Generator::t(k);
    const Element t = generator_element(ctx, g);
    P.push_back({"t", "t" + str(k), [g](const Element& x) { return left_mul_gen(g, x); }});
    Q.push_back({"t", "t" + str(k), [t](const Element& x) { return group_mul(x, t); }});
  }
  for (int sign : {1, -1}) {
    const Generator g = sign > 0 ? Generator::rho() : Generator::rho_inv();
    const Element rho = rho_element(ctx, sign);
    const std::string nm = sign > 0 ? "rho" : "rho^-1";
    P.push_back({"rho", nm, [g](const Element& x) { return left_mul_gen(g, x); }});
    Q.push_back({"rho", nm, [rho](const Element& x) { return group_mul(x, rho); }});
  }
  for (int i = 0; i < ctx.n; ++i) {
    const Generator g = Generator::s(i);
    P.push_back({"s", "s" + str(i), [g](const Element& x) { return left_mul_gen(g, x); }});
    Q.push_back({"s", "s" + str(i), [i](const Element& x) { return right_mul_s(x, i); }});
  }
  std::map<std::string, CheckResult> results;
  const std::vector<std::string> kinds{"t", "rho", "s"};
  for (const auto& a : kinds) {
    for (const auto& b : kinds) results.emplace("P_" + a + "_Q_" + b, CheckResult{"P_" + a + "_Q_" + b, true, 0, std::nullopt, ""});
  }
  for (const auto& w : bounded_indices(ctx, max_length, max_rho)) {
    const Element x = basis(ctx, w);
    for (const auto& u : P) {
      for (const auto& v : Q) {
        const Element d = u.apply(v.apply(x)) - v.apply(u.apply(x));
        record(results.at("P_" + u.kind + "_Q_" + v.kind), d, "u=" + u.name + " v=" + v.name + " w=" + to_string(w));
      }
    }
  }
  for (const auto& a : kinds) {
    for (const auto& b : kinds) report.results.push_back(results.at("P_" + a + "_Q_" + b));
  }
  return report;
}

Report verify_prop_quadratic(const Context& ctx) {
  Report report{"pro_p_quadratic", ctx.r, ctx.n, {}};
  CheckResult res{"ts_quadratic", true, 0, std::nullopt, ""};
  for (const auto& beta : all_tori(ctx.r, ctx.n)) {
    const GroupIndex t = torus_index(beta, ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
      const GroupIndex ts = compose(t, gidx(ctx, Generator::s(i)), ctx.r);
      const Element T = basis(ctx, ts);
      const Element c = group_mul(basis(ctx, t), e_affine(ctx, i)) * z_const(ctx);
      const Element d = mul(T, T) - (basis(ctx, compose(ts, ts, ctx.r)) + mul(c, T));
      record(res, d, "t=" + to_string(t) + " i=" + str(i));
    }
  }
  report.results.push_back(std::move(res));
  return report;
}

}  // namespace affyh
