#pragma once

// Normal-form arithmetic on the basis t^beta T_w of the affine
// Yokonuma-Hecke algebra in its Iwahori-Matsumoto presentation.

#include <map>
#include <string>
#include <vector>

#include "affyh/scalars.hpp"
#include "affyh/weyl.hpp"

namespace affyh {

/// (r, n) plus the order of the root of unity used for coefficients.
/// `field` equals r except for the r = 1 kernel used by block
/// decompositions, whose entries need Q(zeta_r') coefficients.
struct Context {
  int r = 1;
  int n = 2;
  int field = 1;

  Context() = default;
  Context(int r_, int n_) : Context(r_, n_, r_) {}
  Context(int r_, int n_, int field_);

  friend bool operator==(const Context&, const Context&) = default;
};

class Element {
 public:
  using Map = std::map<GroupIndex, Scalar>;

  explicit Element(Context ctx) : ctx_(ctx) {}

  const Context& context() const noexcept { return ctx_; }
  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of T_index (zero when absent).
  Scalar coefficient(const GroupIndex& index) const;

  void add_term(const GroupIndex& index, const Scalar& coeff);

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }

  friend bool operator==(const Element& a, const Element& b);

  /// Terms sorted by (k, length, reduced word, beta).
  std::vector<std::pair<GroupIndex, Scalar>> canonical_terms() const;

  std::string to_string() const;

 private:
  void check_same(const Element& other) const;

  Context ctx_;
  Map terms_;
};

Scalar scalar(const Context& ctx, const Rational& value);
/// q - q^{-1} in the context's coefficient field.
Scalar z_const(const Context& ctx);

Element basis(const Context& ctx, const GroupIndex& index);
Element unit(const Context& ctx);
Element generator_element(const Context& ctx, const Generator& g);

/// (1/r) sum_s t_i^s t_k^{-s}.
Element e_element(const Context& ctx, int i, int k);
/// e_i = e_{i,i+1} for 1 <= i <= n-1 and e_0 = e_{n,1}.
Element e_affine(const Context& ctx, int i);

Element left_mul_gen(const Generator& g, const Element& x);
Element mul(const Element& x, const Element& y);
/// Multiplication folded along an explicit word rho^k s_{i_1} ... s_{i_m}
/// for the Weyl part of each term of x.
Element mul_along(const Element& x, const WeylWord& word, std::vector<int> beta);

/// Product in the group algebra of W_{r,n} (no quadratic correction).
Element group_mul(const Element& x, const Element& y);

/// T_{s_i} - (q - q^{-1}) e_i.
Element ts_inverse(const Context& ctx, int i);

Element rho_element(const Context& ctx, int k);

/// Images of the Bernstein-side generators t1.., g1.., X1, X1^-1.
std::map<std::string, Element> psi_assignment(const Context& ctx);

/// Image of X_j built by X_{j+1} = T_{s_j} X_j T_{s_j}.
Element x_element(const Context& ctx, int j);

}  // namespace affyh
