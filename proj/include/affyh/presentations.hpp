#pragma once

// Formal expressions over named generators, the built-in relation sets of
// the three presentations, and verification drivers that evaluate both
// sides of every relation in the Iwahori-Matsumoto kernel.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affyh/algebra.hpp"

namespace affyh {

class FormalExpression {
 public:
  using Word = std::vector<std::string>;

  explicit FormalExpression(int field) : field_(field) {}

  static FormalExpression constant(const Scalar& c);
  static FormalExpression one(int field) { return constant(Scalar(field, 1)); }
  static FormalExpression symbol(int field, const std::string& name);
  static FormalExpression word(int field, const Word& w);

  int field() const noexcept { return field_; }
  const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c);
  std::set<std::string> symbols() const;

  FormalExpression operator-() const;
  FormalExpression& operator+=(const FormalExpression& other);
  FormalExpression& operator-=(const FormalExpression& other);
  FormalExpression& operator*=(const Scalar& c);

  friend FormalExpression operator+(FormalExpression a, const FormalExpression& b) { return a += b; }
  friend FormalExpression operator-(FormalExpression a, const FormalExpression& b) { return a -= b; }
  /// Concatenation product.
  friend FormalExpression operator*(const FormalExpression& a, const FormalExpression& b);
  friend FormalExpression operator*(FormalExpression a, const Scalar& c) { return a *= c; }
  friend FormalExpression operator*(const Scalar& c, FormalExpression a) { return a *= c; }
  friend bool operator==(const FormalExpression&, const FormalExpression&) = default;

  std::string to_string() const;

 private:
  int field_;
  std::map<Word, Scalar> terms_;
};

/// Product of a list of expressions, left to right.
FormalExpression product(int field, const std::vector<FormalExpression>& factors);

struct Relation {
  std::string family;
  std::string instance;
  FormalExpression lhs;
  FormalExpression rhs;
  /// Text the sides were parsed from, when they came from text.  Lets the
  /// checker multiply factor by factor instead of expanding products of sums.
  std::string lhs_src;
  std::string rhs_src;
};

struct Presentation {
  std::string name;
  int r = 1;
  int n = 2;
  std::vector<std::string> generators;
  /// Family labels in display order; a family may have no instances.
  std::vector<std::string> families;
  std::vector<Relation> relations;
  /// Symbol scope used for the relation sources.
  std::string scope = "universal";
};

using Assignment = std::map<std::string, Element>;
using Morphism = std::map<std::string, FormalExpression>;

/// yokonuma, im_affine, modified_affine, h1, c1, h2, c2, hecke_ext,
/// bernstein_identities.
Presentation builtin(const std::string& name, int r, int n);
const std::vector<std::string>& builtin_names();

/// Generator symbols for a presentation family.
std::vector<std::string> yokonuma_symbols(int n);
std::vector<std::string> im_symbols(int n);
std::vector<std::string> modified_symbols(int n);

Element evaluate(const FormalExpression& expr, const Assignment& assign, const Context& ctx);

struct CheckResult {
  std::string label;
  bool pass = true;
  long instances = 0;
  std::optional<Element> diff;
  std::string failed_instance;
};

struct Report {
  std::string name;
  int r = 1;
  int n = 2;
  std::vector<CheckResult> results;

  bool pass() const;
};

Report check_relations(const Presentation& p, const Assignment& assign, const Context& ctx);

// Realizations of each presentation inside the kernel.
Assignment im_assignment(const Context& ctx);
Assignment yokonuma_assignment(const Context& ctx);
Assignment universal_assignment(const Context& ctx);

// Morphisms given as generator images, written in the other presentation.
Morphism phi_morphism(int r, int n);    // im_affine -> yokonuma
Morphism psi_morphism(int r, int n);    // yokonuma -> im_affine
Morphism phi_c_morphism(int r, int n);  // im_affine -> modified_affine
Morphism psi_c_morphism(int r, int n);  // modified_affine -> im_affine

/// For each generator a of A: fwd(a), evaluated with b -> back(b) realized
/// in A, must equal the realization of a; and symmetrically for B.
Report verify_inverse_pair(const std::string& name, const Morphism& fwd, const Morphism& back,
                           const Assignment& real_a, const Assignment& real_b, const Context& ctx);

Report verify_lemma27(const Context& ctx, int max_length, int max_rho = 1);
Report verify_pq_commute(const Context& ctx, int max_length, int max_rho = 1);
Report verify_prop_quadratic(const Context& ctx);

// Expression helpers; `torus` is the prefix of the torus symbols ("t" or "w").
namespace expr {

FormalExpression sym(int field, const std::string& name);
FormalExpression torus_power(int r, const std::string& torus, int j, int k);
/// (1/r) sum_s x_i^s x_k^{-s}.
FormalExpression e_pair(int r, const std::string& torus, int i, int k);
/// e_i with the affine convention e_0 = e_{n,1}.
FormalExpression e_index(int r, int n, const std::string& torus, int i);
/// x - (q - q^{-1}) e_i for a generator x satisfying the deformed quadratic relation.
FormalExpression quadratic_inverse(int r, int n, const std::string& torus, const std::string& gen, int i);
FormalExpression x_macro(int r, int n, int j, bool inverse);

}  // namespace expr

}  // namespace affyh
