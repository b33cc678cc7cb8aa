#pragma once

// Vandermonde data over Q(zeta_r), the modified presentation realized
// through its map into the Iwahori-Matsumoto kernel, and the triangular
// basis t^alpha h_w.

#include <vector>

#include "affyh/algebra.hpp"
#include "affyh/presentations.hpp"

namespace affyh {

struct VandermondeData {
  int r = 1;
  std::vector<std::vector<CycRational>> A;  // a_ij = zeta^{j(i-1)}
  CycRational delta;
  std::vector<std::vector<CycRational>> B;  // adjugate, A^{-1} = delta^{-1} B
  /// F[i][j] is the coefficient of X^j in F_{i+1}(X); equals row i of B.
  std::vector<std::vector<CycRational>> F;
};

VandermondeData vandermonde(int r);

/// Determinant by cofactor expansion (r <= 8).
CycRational determinant(const std::vector<std::vector<CycRational>>& m);

/// F_c(t_j) inside the kernel, t_0 = t_n.
Element f_eval(const Context& ctx, int c, int j);
/// delta^{-1} F_c(t_j).
Element spectral_projector(const Context& ctx, int c, int j);
/// (1/r) sum_s zeta^{cs} t_j^{-s}.
Element character_projector(const Context& ctx, int c, int j);

/// delta^{-2} (q - q^{-1}) sum_{c1<c2} F_{c1}(t_i) F_{c2}(t_{i+1}).
Element modified_correction(const Context& ctx, int i);

/// w_j, hs_i, hrho, hrho^-1 mapped into the kernel.
Assignment psi_c_assignment(const Context& ctx);

/// T_{s_i} = psi(h_{s_i}) - correction for every i.
bool verify_phi_psi_identity(const Context& ctx);

/// t^alpha h_rho^k h_{s_{i_1}} ... along the given word.
Element h_word_element(const Context& ctx, const std::vector<int>& alpha, const WeylWord& word);
/// t^alpha h_w along reduced_word_of(w).
Element h_basis_element(const Context& ctx, const std::vector<int>& alpha, const ExtAffineWeyl& w);

/// Leading term 1 at (alpha, w) and all other support strictly below w.
Report triangularity_check(const Context& ctx, int max_length, int max_rho = 1);

}  // namespace affyh
