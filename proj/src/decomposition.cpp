#include "affyh/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "affyh/errors.hpp"
#include "affyh/modified.hpp"

namespace affyh {

namespace {

// Block number (0-based) of each position 1..n.
std::vector<int> block_of(const Composition& mu) {
  std::vector<int> out;
  for (std::size_t a = 0; a < mu.size(); ++a) out.insert(out.end(), static_cast<std::size_t>(mu[a]), static_cast<int>(a));
  return out;
}

ExtAffineWeyl perm_elt(const Permutation& p) {
  return {std::vector<int>(static_cast<std::size_t>(p.size()), 0), p};
}

// Restriction of w to each nonempty block, as elements of smaller ranks.
std::vector<ExtAffineWeyl> factor(const Composition& mu, const ExtAffineWeyl& w) {
  std::vector<ExtAffineWeyl> out;
  int off = 0;
  for (int m : mu) {
    if (m == 0) continue;
    std::vector<int> lambda(w.lambda.begin() + off, w.lambda.begin() + off + m);
    std::vector<int> images;
    for (int i = 1; i <= m; ++i) images.push_back(w.sigma(off + i) - off);
    out.push_back({std::move(lambda), Permutation(std::move(images))});
    off += m;
  }
  return out;
}

ExtAffineWeyl assemble(const std::vector<ExtAffineWeyl>& parts) {
  ExtAffineWeyl out;
  std::vector<int> images;
  int off = 0;
  for (const auto& p : parts) {
    out.lambda.insert(out.lambda.end(), p.lambda.begin(), p.lambda.end());
    for (int v : p.sigma.images()) images.push_back(v + off);
    off += p.rank();
  }
  out.sigma = Permutation(std::move(images));
  return out;
}

Scalar char_value(const Context& ctx, const Character& chi, const std::vector<int>& beta) {
  long e = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) e += static_cast<long>(chi.c[j]) * beta[j];
  return Scalar(CycRational::zeta_power(ctx.field, e * (ctx.field / ctx.r)));
}

}  // namespace

Character::Character(int r_, std::vector<int> c_) : r(r_), c(std::move(c_)) {
  for (int v : c) {
    if (v < 1 || v > r) throw Error(ErrorKind::IndexOutOfRange, "character exponents must lie in 1..r");
  }
}

std::vector<Composition> compositions(int r, int n) {
  std::vector<Composition> out;
  Composition cur(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int a, int left) -> void {
    if (a == r - 1) {
      cur[static_cast<std::size_t>(a)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(a)] = v;
      self(self, a + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

Composition composition_of(const Character& chi) {
  Composition mu(static_cast<std::size_t>(chi.r), 0);
  for (int v : chi.c) ++mu[static_cast<std::size_t>(v - 1)];
  return mu;
}

void validate_composition(const Composition& mu, int r, int n) {
  if (static_cast<int>(mu.size()) != r || std::any_of(mu.begin(), mu.end(), [](int m) { return m < 0; }) ||
      std::accumulate(mu.begin(), mu.end(), 0) != n) {
    throw Error(ErrorKind::InvalidComposition,
                "expected " + std::to_string(r) + " nonnegative parts summing to " + std::to_string(n));
  }
}

Character char_action(const Permutation& sigma, const Character& chi) {
  if (sigma.size() != chi.rank()) throw Error(ErrorKind::SizeMismatch, "character and permutation ranks differ");
  Character out = chi;
  out.c = sigma.act(chi.c);
  return out;
}

Character char_action(const ExtAffineWeyl& w, const Character& chi) { return char_action(w.sigma, chi); }

Element idempotent_E(const Context& ctx, const Character& chi) {
  if (chi.r != ctx.r || chi.rank() != ctx.n) throw Error(ErrorKind::ContextMismatch, "character does not match context");
  Element out = unit(ctx);
  for (int i = 1; i <= ctx.n; ++i) out = group_mul(out, character_projector(ctx, chi.c[static_cast<std::size_t>(i - 1)], i));
  return out;
}

Element idempotent_E_mu(const Context& ctx, const Composition& mu) {
  const CosetData cd = coset_data(ctx.r, mu);
  if (cd.chars.front().rank() != ctx.n) throw Error(ErrorKind::ContextMismatch, "composition does not sum to n");
  Element out(ctx);
  for (const auto& chi : cd.chars) out += idempotent_E(ctx, chi);
  return out;
}

CosetData coset_data(int r, const Composition& mu) {
  const int n = std::accumulate(mu.begin(), mu.end(), 0);
  validate_composition(mu, r, n);
  if (n < 1) throw Error(ErrorKind::InvalidComposition, "composition of zero");
  const std::vector<int> blocks = block_of(mu);
  CosetData cd;
  cd.r = r;
  cd.mu = mu;
  for (const auto& p : all_permutations(n)) {
    bool minimal = true;
    for (int i = 1; i < n; ++i) {
      if (blocks[static_cast<std::size_t>(i - 1)] == blocks[static_cast<std::size_t>(i)] && p(i) > p(i + 1)) minimal = false;
    }
    if (minimal) cd.reps.push_back(p);
  }
  std::sort(cd.reps.begin(), cd.reps.end(), [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
  if (!cd.reps.front().is_identity()) throw Error(ErrorKind::InvalidArgument, "first coset representative is not 1");
  std::vector<int> c1;
  for (int b : blocks) c1.push_back(b + 1);
  const Character chi1(r, c1);
  for (const auto& p : cd.reps) cd.chars.push_back(char_action(p, chi1));
  return cd;
}

bool in_block_subgroup(const Composition& mu, const ExtAffineWeyl& w) {
  const std::vector<int> blocks = block_of(mu);
  if (static_cast<int>(blocks.size()) != w.rank()) return false;
  for (int i = 1; i <= w.rank(); ++i) {
    if (blocks[static_cast<std::size_t>(i - 1)] != blocks[static_cast<std::size_t>(w.sigma(i) - 1)]) return false;
  }
  return true;
}

Element block_kernel_mul(const Composition& mu, const Element& a, const Element& b) {
  const Context& ctx = a.context();
  if (!(ctx == b.context())) throw Error(ErrorKind::ContextMismatch, "block entries from different contexts");
  if (ctx.r != 1) throw Error(ErrorKind::ContextMismatch, "block entries live in the r = 1 kernel");
  std::vector<Context> small;
  for (int m : mu) {
    if (m > 0) small.emplace_back(1, m, ctx.field);
  }
  auto check = [&](const GroupIndex& g) {
    if (!in_block_subgroup(mu, g.w)) throw Error(ErrorKind::EntryOutsideSubalgebra, "index " + to_string(g) + " is outside H^mu");
  };
  std::map<std::tuple<std::size_t, ExtAffineWeyl, ExtAffineWeyl>, Element> cache;
  Element out(ctx);
  const std::vector<int> beta(static_cast<std::size_t>(ctx.n), 0);
  for (const auto& [u, cu] : a.terms()) {
    check(u);
    const auto uf = factor(mu, u.w);
    for (const auto& [v, cv] : b.terms()) {
      check(v);
      const auto vf = factor(mu, v.w);
      // Tensor product of the blockwise products.
      std::vector<std::pair<std::vector<ExtAffineWeyl>, Scalar>> acc{{{}, cu * cv}};
      for (std::size_t blk = 0; blk < small.size(); ++blk) {
        auto key = std::make_tuple(blk, uf[blk], vf[blk]);
        auto it = cache.find(key);
        if (it == cache.end()) {
          const std::vector<int> zero(static_cast<std::size_t>(small[blk].n), 0);
          it = cache.emplace(key, mul(basis(small[blk], {zero, uf[blk]}), basis(small[blk], {zero, vf[blk]}))).first;
        }
        std::vector<std::pair<std::vector<ExtAffineWeyl>, Scalar>> next;
        for (const auto& [parts, c] : acc) {
          for (const auto& [g, d] : it->second.terms()) {
            auto p = parts;
            p.push_back(g.w);
            next.emplace_back(std::move(p), c * d);
          }
        }
        acc = std::move(next);
      }
      for (const auto& [parts, c] : acc) out.add_term({beta, assemble(parts)}, c);
    }
  }
  return out;
}

BlockMatrix BlockMatrix::zero(const Composition& mu, const Context& entry_ctx, int m) {
  BlockMatrix out{mu, entry_ctx, {}};
  out.entries.assign(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(m), Element(entry_ctx)));
  return out;
}

BlockMatrix BlockMatrix::identity(const Composition& mu, const Context& entry_ctx, int m) {
  BlockMatrix out = zero(mu, entry_ctx, m);
  for (int i = 0; i < m; ++i) out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = unit(entry_ctx);
  return out;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  return a.mu == b.mu && a.entry_ctx == b.entry_ctx && a.entries == b.entries;
}

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.mu != b.mu || a.size() != b.size() || !(a.entry_ctx == b.entry_ctx)) {
    throw Error(ErrorKind::ShapeMismatch, "block matrices of different shapes");
  }
  const auto m = static_cast<std::size_t>(a.size());
  BlockMatrix out = BlockMatrix::zero(a.mu, a.entry_ctx, a.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        if (a.entries[i][l].is_zero() || b.entries[l][j].is_zero()) continue;
        out.entries[i][j] += block_kernel_mul(a.mu, a.entries[i][l], b.entries[l][j]);
      }
    }
  }
  return out;
}

Context block_entry_context(const Context& ctx) { return Context(1, ctx.n, ctx.field); }

BlockMatrix phi_mu(const Context& ctx, const Composition& mu, const Element& x) {
  if (!(x.context() == ctx)) throw Error(ErrorKind::ContextMismatch, "element from a different context");
  validate_composition(mu, ctx.r, ctx.n);
  if (!(mul(idempotent_E_mu(ctx, mu), x) == x)) throw Error(ErrorKind::NotInBlock, "element is not in E_mu H");
  const CosetData cd = coset_data(ctx.r, mu);
  const Context ectx = block_entry_context(ctx);
  BlockMatrix out = BlockMatrix::zero(mu, ectx, cd.size());
  const std::vector<int> zero(static_cast<std::size_t>(ctx.n), 0);

  // Coefficients of E_{chi_k} T_w, from E_chi t^beta = chi(t^beta) E_chi.
  std::map<std::pair<int, ExtAffineWeyl>, Scalar> coeff;
  for (const auto& [idx, c] : x.terms()) {
    for (int k = 0; k < cd.size(); ++k) {
      auto key = std::make_pair(k, idx.w);
      Scalar v = c * char_value(ctx, cd.chars[static_cast<std::size_t>(k)], idx.beta);
      auto it = coeff.find(key);
      if (it == coeff.end()) {
        coeff.emplace(key, v);
      } else {
        it->second = it->second + v;
      }
    }
  }
  for (const auto& [key, c] : coeff) {
    if (c.is_zero()) continue;
    const auto& [k, w] = key;
    int j = -1;
    for (int l = 0; l < cd.size(); ++l) {
      if (char_action(w, cd.chars[static_cast<std::size_t>(l)]) == cd.chars[static_cast<std::size_t>(k)]) {
        if (j >= 0) throw Error(ErrorKind::InvalidArgument, "coset index j is not unique");
        j = l;
      }
    }
    if (j < 0) throw Error(ErrorKind::InvalidArgument, "no coset index j");
    const ExtAffineWeyl s = compose(compose(perm_elt(cd.reps[static_cast<std::size_t>(k)].inverse()), w),
                                    perm_elt(cd.reps[static_cast<std::size_t>(j)]));
    out.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].add_term({zero, s}, c);
  }
  return out;
}

Element psi_mu(const Context& ctx, const BlockMatrix& m) {
  const CosetData cd = coset_data(ctx.r, m.mu);
  if (m.size() != cd.size()) throw Error(ErrorKind::ShapeMismatch, "matrix size differs from m_mu");
  std::vector<Element> idem;
  for (const auto& chi : cd.chars) idem.push_back(idempotent_E(ctx, chi));
  const std::vector<int> zero(static_cast<std::size_t>(ctx.n), 0);
  Element out(ctx);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = 0; j < idem.size(); ++j) {
      for (const auto& [g, c] : m.entries[i][j].terms()) {
        if (m.entries[i][j].context().r != 1 || g.rank() != ctx.n ||
            std::any_of(g.beta.begin(), g.beta.end(), [](int b) { return b != 0; }) || !in_block_subgroup(m.mu, g.w)) {
          throw Error(ErrorKind::EntryOutsideSubalgebra, "entry index " + to_string(g) + " is outside H^mu");
        }
        const ExtAffineWeyl u = compose(compose(perm_elt(cd.reps[i]), g.w), perm_elt(cd.reps[j].inverse()));
        Element lift = Element(ctx);
        lift.add_term({zero, u}, c);
        out += mul(mul(idem[i], lift), idem[j]);
      }
    }
  }
  return out;
}

}  // namespace affyh
