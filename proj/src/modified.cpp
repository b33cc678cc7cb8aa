#include "affyh/modified.hpp"

#include <map>
#include <mutex>

#include "affyh/errors.hpp"

namespace affyh {

namespace {

using Matrix = std::vector<std::vector<CycRational>>;

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<CycRational> line;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) line.push_back(m[i][j]);
    }
    out.push_back(std::move(line));
  }
  return out;
}

Element torus_power_element(const Context& ctx, int j, int k) {
  const int jj = j == 0 ? ctx.n : j;
  std::vector<int> beta(static_cast<std::size_t>(ctx.n), 0);
  beta[static_cast<std::size_t>(jj - 1)] = ((k % ctx.r) + ctx.r) % ctx.r;
  return basis(ctx, torus_index(beta, ctx.n));
}

}  // namespace

CycRational determinant(const Matrix& m) {
  if (m.empty()) return CycRational(1, 1);
  const int r = m[0][0].order();
  if (m.size() > 8) throw Error(ErrorKind::InvalidArgument, "cofactor determinant limited to size 8");
  if (m.size() == 1) return m[0][0];
  CycRational det(r);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].is_zero()) continue;
    CycRational term = m[0][j] * determinant(minor_of(m, 0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

VandermondeData vandermonde(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  static std::mutex lock;
  static std::map<int, VandermondeData> cache;
  std::lock_guard guard(lock);
  if (auto it = cache.find(r); it != cache.end()) return it->second;

  VandermondeData d;
  d.r = r;
  const auto R = static_cast<std::size_t>(r);
  d.A.assign(R, std::vector<CycRational>(R, CycRational(r)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) d.A[i - 1][j - 1] = CycRational::zeta_power(r, static_cast<long>(j) * (i - 1));
  }
  d.delta = r == 1 ? CycRational(1, 1) : determinant(d.A);
  d.B.assign(R, std::vector<CycRational>(R, CycRational(r)));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < R; ++j) {
      // adj(A)_{ij} is the (j, i) cofactor.
      CycRational cof = R == 1 ? CycRational(r, 1) : determinant(minor_of(d.A, j, i));
      d.B[i][j] = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  d.F = d.B;
  cache.emplace(r, d);
  return d;
}

Element f_eval(const Context& ctx, int c, int j) {
  if (c < 1 || c > ctx.r) throw Error(ErrorKind::IndexOutOfRange, "F index outside 1..r");
  if (j < 0 || j > ctx.n) throw Error(ErrorKind::IndexOutOfRange, "torus index outside 0..n");
  if (ctx.field != ctx.r) throw Error(ErrorKind::MixedRoot, "F polynomials need the field Q(zeta_r)");
  const VandermondeData& v = vandermonde(ctx.r);
  Element out(ctx);
  for (int k = 0; k < ctx.r; ++k) {
    out += torus_power_element(ctx, j, k) * Scalar(v.F[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(k)]);
  }
  return out;
}

Element spectral_projector(const Context& ctx, int c, int j) {
  return f_eval(ctx, c, j) * Scalar(cyc_invert(vandermonde(ctx.r).delta));
}

Element character_projector(const Context& ctx, int c, int j) {
  Element out(ctx);
  const CycRational w(ctx.field, Rational(1, ctx.r));
  const int step = ctx.field / ctx.r;
  for (int s = 0; s < ctx.r; ++s) {
    out += torus_power_element(ctx, j, -s) * Scalar(CycRational::zeta_power(ctx.field, static_cast<long>(c) * s * step) * w);
  }
  return out;
}

Element modified_correction(const Context& ctx, int i) {
  if (i < 0 || i > ctx.n - 1) throw Error(ErrorKind::IndexOutOfRange, "h_s index outside 0..n-1");
  const VandermondeData& v = vandermonde(ctx.r);
  const CycRational inv = cyc_invert(v.delta);
  const int a = i == 0 ? ctx.n : i;
  const int b = i == 0 ? 1 : i + 1;
  Element sum(ctx);
  for (int c1 = 1; c1 <= ctx.r; ++c1) {
    for (int c2 = c1 + 1; c2 <= ctx.r; ++c2) sum += group_mul(f_eval(ctx, c1, a), f_eval(ctx, c2, b));
  }
  return sum * (Scalar(inv * inv) * z_const(ctx));
}

Assignment psi_c_assignment(const Context& ctx) {
  Assignment out;
  for (int j = 1; j <= ctx.n; ++j) out.emplace("w" + std::to_string(j), generator_element(ctx, Generator::t(j)));
  for (int i = 0; i < ctx.n; ++i) {
    out.emplace("hs" + std::to_string(i), generator_element(ctx, Generator::s(i)) + modified_correction(ctx, i));
  }
  out.emplace("hrho", rho_element(ctx, 1));
  out.emplace("hrho^-1", rho_element(ctx, -1));
  return out;
}

bool verify_phi_psi_identity(const Context& ctx) {
  const Assignment psi = psi_c_assignment(ctx);
  for (int i = 0; i < ctx.n; ++i) {
    Element back = psi.at("hs" + std::to_string(i)) - modified_correction(ctx, i);
    if (!(back == generator_element(ctx, Generator::s(i)))) return false;
  }
  for (int j = 1; j <= ctx.n; ++j) {
    if (!(psi.at("w" + std::to_string(j)) == generator_element(ctx, Generator::t(j)))) return false;
  }
  return psi.at("hrho") == rho_element(ctx, 1) && psi.at("hrho^-1") == rho_element(ctx, -1);
}

Element h_word_element(const Context& ctx, const std::vector<int>& alpha, const WeylWord& word) {
  const Assignment psi = psi_c_assignment(ctx);
  Element out = unit(ctx);
  for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) out = mul(psi.at("hs" + std::to_string(*it)), out);
  out = mul(rho_element(ctx, word.k), out);
  return mul(basis(ctx, torus_index(alpha, ctx.n)), out);
}

Element h_basis_element(const Context& ctx, const std::vector<int>& alpha, const ExtAffineWeyl& w) {
  return h_word_element(ctx, alpha, reduced_word_of(w));
}

Report triangularity_check(const Context& ctx, int max_length, int max_rho) {
  Report report{"triangularity", ctx.r, ctx.n, {}};
  CheckResult res{"triangular_expansion", true, 0, std::nullopt, ""};
  const int tori = [&] {
    int p = 1;
    for (int j = 0; j < ctx.n; ++j) p *= ctx.r;
    return p;
  }();
  const std::vector<int> zero(static_cast<std::size_t>(ctx.n), 0);
  for (const auto& w : enumerate_bounded(ctx.n, max_length, max_rho)) {
    const Element h = h_basis_element(ctx, zero, w);
    for (int code = 0; code < tori; ++code) {
      std::vector<int> alpha(static_cast<std::size_t>(ctx.n));
      int c = code;
      for (int& a : alpha) {
        a = c % ctx.r;
        c /= ctx.r;
      }
      ++res.instances;
      const Element x = mul(basis(ctx, torus_index(alpha, ctx.n)), h);
      bool ok = x.coefficient({alpha, w}) == Scalar(ctx.field, 1);
      for (const auto& [idx, v] : x.terms()) {
        if (idx.w == w) {
          if (!(idx.beta == alpha)) ok = false;
        } else if (!bruhat_leq(idx.w, w)) {
          ok = false;
        }
      }
      if (!ok && res.pass) {
        res.pass = false;
        res.diff = x;
        res.failed_instance = "t^alpha h_w with w = " + to_string(w);
      }
    }
  }
  report.results.push_back(std::move(res));
  return report;
}

}  // namespace affyh
