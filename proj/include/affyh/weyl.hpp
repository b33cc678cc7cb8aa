#pragma once

// Combinatorics of the extended affine Weyl group of type A, realized as
// X^lambda * sigma in Z^n x| S_n, and of its torus extension
// (Z/r)^n x Z^n x| S_n.
//
// Conventions:
//   (lambda1, sigma1)(lambda2, sigma2) = (lambda1 + sigma1.lambda2, sigma1 sigma2)
//   (sigma.v)_i = v_{sigma^{-1}(i)}
//   s_0 = (e_n - e_1, (1 n)),  rho = (e_n, 1->n, j->j-1)
// The length is the inversion count of the affine permutation
//   f(i) = sigma(i) - n * lambda_{sigma(i)}.

#include <compare>
#include <string>
#include <vector>

namespace affyh {

/// One-line notation for an element of S_n; images are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The transposition (a b), 1-based.
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// (sigma.v)_i = v_{sigma^{-1}(i)}.
  std::vector<int> act(const std::vector<int>& v) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// An element X^lambda sigma of the extended affine Weyl group.
struct ExtAffineWeyl {
  std::vector<int> lambda;
  Permutation sigma;

  static ExtAffineWeyl identity(int n);
  int rank() const noexcept { return sigma.size(); }

  friend auto operator<=>(const ExtAffineWeyl&, const ExtAffineWeyl&) = default;
  friend bool operator==(const ExtAffineWeyl&, const ExtAffineWeyl&) = default;
};

/// t^beta X^lambda sigma; beta entries are kept in [0, r).
struct GroupIndex {
  std::vector<int> beta;
  ExtAffineWeyl w;

  static GroupIndex identity(int n);
  int rank() const noexcept { return w.rank(); }

  friend auto operator<=>(const GroupIndex&, const GroupIndex&) = default;
  friend bool operator==(const GroupIndex&, const GroupIndex&) = default;
};

/// rho^k s_{word[0]} s_{word[1]} ...
struct WeylWord {
  int k = 0;
  std::vector<int> word;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

enum class GeneratorKind { S, Rho, RhoInv, T, X };

struct Generator {
  GeneratorKind kind;
  int index = 0;  // s_i: 0..n-1; t_j, X_j: 1..n

  static Generator s(int i) { return {GeneratorKind::S, i}; }
  static Generator rho() { return {GeneratorKind::Rho, 0}; }
  static Generator rho_inv() { return {GeneratorKind::RhoInv, 0}; }
  static Generator t(int j) { return {GeneratorKind::T, j}; }
  static Generator x(int j) { return {GeneratorKind::X, j}; }

  /// Accepts "s0", "rho", "rho_inv", "t1", "X2".
  static Generator parse(const std::string& name);
  std::string name() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

ExtAffineWeyl compose(const ExtAffineWeyl& a, const ExtAffineWeyl& b);
GroupIndex compose(const GroupIndex& a, const GroupIndex& b, int r);

ExtAffineWeyl inverse(const ExtAffineWeyl& w);
GroupIndex inverse(const GroupIndex& w, int r);

/// Normal form of a named generator inside W_{r,n}.
GroupIndex generator(const Generator& g, int r, int n);
ExtAffineWeyl weyl_generator(const Generator& g, int n);

/// rho^k for any integer k.
ExtAffineWeyl rho_power(int n, int k);

/// Torus element t^beta as a group index.
GroupIndex torus_index(std::vector<int> beta, int n);

/// Sum of lambda; the power of rho in any expression of w.
int rho_degree(const ExtAffineWeyl& w);

/// Window of the affine permutation attached to w.
std::vector<long> affine_window(const ExtAffineWeyl& w);

/// Coxeter length of the affine part (rho has length 0).
int length(const ExtAffineWeyl& w);
inline int length(const GroupIndex& w) { return length(w.w); }

/// Reduced expression by greedy left descent, smallest index first.
WeylWord reduced_word_of(const ExtAffineWeyl& w);

/// Product rho^k s_{i_1} ... s_{i_m}.
ExtAffineWeyl evaluate_word(const WeylWord& word, int n);

/// Every reduced expression of the affine part of w, in lexicographic order.
std::vector<std::vector<int>> all_reduced_words(const ExtAffineWeyl& w);

/// Bruhat order: equal rho-degree and subword containment on the affine part.
bool bruhat_leq(const ExtAffineWeyl& y, const ExtAffineWeyl& w);

/// All rho^k w with |k| <= max_rho, length(w) <= max_length, ordered by
/// (k, length, reduced word).
std::vector<ExtAffineWeyl> enumerate_bounded(int n, int max_length, int max_rho);

/// The permutations of S_n, lexicographic in one-line notation.
std::vector<Permutation> all_permutations(int n);

std::string to_string(const ExtAffineWeyl& w);
std::string to_string(const GroupIndex& w);

}  // namespace affyh
