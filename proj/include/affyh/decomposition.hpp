#pragma once

// Block decomposition of the (r, n) kernel along the characters of the
// torus.  A character chi is stored as exponents c_j in 1..r with
// chi(t_j) = zeta^{c_j}.  For an r-composition mu the block algebra H^mu is
// the tensor product of the r = 1 kernels of ranks mu_1, ..., mu_r; its
// elements are stored as r = 1 elements of rank n whose indices lie in
// Z^n x| S^mu, and multiplied factor by factor.

#include <vector>

#include "affyh/algebra.hpp"

namespace affyh {

struct Character {
  int r = 1;
  std::vector<int> c;

  Character() = default;
  Character(int r_, std::vector<int> c_);
  int rank() const noexcept { return static_cast<int>(c.size()); }
  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;
};

using Composition = std::vector<int>;

/// All r-compositions of n in lexicographically decreasing order.
std::vector<Composition> compositions(int r, int n);
/// mu_a = #{j : c_j = a}.
Composition composition_of(const Character& chi);
void validate_composition(const Composition& mu, int r, int n);

/// w(chi)(t_i) = chi(t_{sigma^{-1}(i)}); translations act trivially.
Character char_action(const ExtAffineWeyl& w, const Character& chi);
Character char_action(const Permutation& sigma, const Character& chi);

/// prod_i (1/r) sum_s chi(t_i)^s t_i^{-s}.
Element idempotent_E(const Context& ctx, const Character& chi);
Element idempotent_E_mu(const Context& ctx, const Composition& mu);

struct CosetData {
  int r = 1;
  Composition mu;
  /// Minimal left coset representatives of S_n / S^mu, identity first.
  std::vector<Permutation> reps;
  /// chars[k] = reps[k](chars[0]); chars[0] is block-constant.
  std::vector<Character> chars;
  int size() const noexcept { return static_cast<int>(reps.size()); }
};

CosetData coset_data(int r, const Composition& mu);

/// True when the permutation part of w preserves every block of mu.
bool in_block_subgroup(const Composition& mu, const ExtAffineWeyl& w);

/// Product in H^mu of two r = 1 elements supported on Z^n x| S^mu.
Element block_kernel_mul(const Composition& mu, const Element& a, const Element& b);

struct BlockMatrix {
  Composition mu;
  /// Context of the entries: r = 1, rank n, coefficients of the big kernel.
  Context entry_ctx;
  std::vector<std::vector<Element>> entries;

  static BlockMatrix zero(const Composition& mu, const Context& entry_ctx, int m);
  static BlockMatrix identity(const Composition& mu, const Context& entry_ctx, int m);
  int size() const noexcept { return static_cast<int>(entries.size()); }
  friend bool operator==(const BlockMatrix&, const BlockMatrix&);
};

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);

/// Context for the matrix entries belonging to the kernel ctx.
Context block_entry_context(const Context& ctx);

/// E_{chi_k} T_w  ->  S_{pi_k^{-1} w pi_j} M_{k,j} with w(chi_j) = chi_k.
BlockMatrix phi_mu(const Context& ctx, const Composition& mu, const Element& x);
/// (S_{w_ij})  ->  sum E_{chi_i} T_{pi_i w_ij pi_j^{-1}} E_{chi_j}.
Element psi_mu(const Context& ctx, const BlockMatrix& m);

}  // namespace affyh
