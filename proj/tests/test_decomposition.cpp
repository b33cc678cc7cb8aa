#include <random>
#include <set>

#include "affyh/decomposition.hpp"
#include "affyh/errors.hpp"
#include "affyh/modified.hpp"
#include "doctest.h"

using namespace affyh;

namespace {

Element T(const Context& c, const Generator& g) { return generator_element(c, g); }

Element e_times(const Context& ctx, const Character& chi, const ExtAffineWeyl& w) {
  return mul(idempotent_E(ctx, chi), basis(ctx, {std::vector<int>(static_cast<std::size_t>(ctx.n), 0), w}));
}

Element entry(const Context& ectx, const ExtAffineWeyl& w) {
  return basis(ectx, {std::vector<int>(static_cast<std::size_t>(ectx.n), 0), w});
}

ExtAffineWeyl wg(const Generator& g, int n) { return weyl_generator(g, n); }

}  // namespace

TEST_CASE("idempotents E_chi") {
  Context c1(1, 2);
  CHECK(idempotent_E(c1, Character(1, {1, 1})) == unit(c1));

  Context c(2, 2);
  const Character chi(2, {1, 2});
  // (1/4)(1 - t1)(1 + t2)
  Element expect = (unit(c) - T(c, Generator::t(1))) * Scalar(2, Rational(1, 4));
  expect = group_mul(expect, unit(c) + T(c, Generator::t(2)));
  CHECK(idempotent_E(c, chi) == expect);

  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      const Character other(2, {a, b});
      const Element p = mul(idempotent_E(c, chi), idempotent_E(c, other));
      CHECK(p == (other == chi ? idempotent_E(c, chi) : Element(c)));
    }
  }
  CHECK_THROWS_AS(Character(2, {0, 1}), Error);
}

TEST_CASE("E_chi equals the product of spectral projectors") {
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    Context c(r, n);
    for (const auto& mu : compositions(r, n)) {
      for (const auto& chi : coset_data(r, mu).chars) {
        Element p = unit(c);
        for (int i = 1; i <= n; ++i) p = group_mul(p, spectral_projector(c, chi.c[static_cast<std::size_t>(i - 1)], i));
        CHECK(idempotent_E(c, chi) == p);
      }
    }
  }
}

TEST_CASE("E_chi span the torus and are independent") {
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    Context c(r, n);
    std::vector<Character> all;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= r;
    for (int code = 0; code < total; ++code) {
      std::vector<int> v;
      for (int i = 0, x = code; i < n; ++i, x /= r) v.push_back(x % r + 1);
      all.emplace_back(r, v);
    }
    // t^beta = sum_chi chi(t^beta) E_chi, so the span contains every t^beta.
    for (int code = 0; code < total; ++code) {
      std::vector<int> beta;
      for (int i = 0, x = code; i < n; ++i, x /= r) beta.push_back(x % r);
      Element sum(c);
      for (const auto& chi : all) {
        long e = 0;
        for (int i = 0; i < n; ++i) e += static_cast<long>(chi.c[static_cast<std::size_t>(i)]) * beta[static_cast<std::size_t>(i)];
        sum += idempotent_E(c, chi) * Scalar(CycRational::zeta_power(r, e));
      }
      CHECK(sum == basis(c, torus_index(beta, n)));
    }
    // Orthogonal nonzero idempotents are linearly independent.
    for (const auto& a : all) {
      CHECK_FALSE(idempotent_E(c, a).is_zero());
      for (const auto& b : all) {
        if (!(a == b)) CHECK(mul(idempotent_E(c, a), idempotent_E(c, b)).is_zero());
      }
    }
  }
}

TEST_CASE("character action") {
  const Character chi(2, {1, 2});
  CHECK(char_action(ExtAffineWeyl::identity(2), chi) == chi);
  CHECK(char_action(wg(Generator::s(1), 2), chi) == Character(2, {2, 1}));
  CHECK(char_action(wg(Generator::x(1), 2), chi) == chi);
  const Character chi3(3, {1, 2, 3});
  CHECK(char_action(wg(Generator::rho(), 3), chi3) == Character(3, {2, 3, 1}));
}

TEST_CASE("compositions and coset data") {
  CHECK(compositions(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(compositions(3, 3).size() == 10);

  const CosetData trivial = coset_data(2, {3, 0});
  CHECK(trivial.size() == 1);
  CHECK(trivial.reps.front().is_identity());

  const CosetData d = coset_data(2, {1, 1});
  REQUIRE(d.size() == 2);
  CHECK(d.reps[0].is_identity());
  CHECK(d.reps[1] == Permutation::transposition(2, 1, 2));
  CHECK(d.chars[0] == Character(2, {1, 2}));
  CHECK(d.chars[1] == Character(2, {2, 1}));

  CHECK(coset_data(2, {2, 1}).size() == 3);
  CHECK(coset_data(3, {1, 1, 1}).size() == 6);
  for (const auto& mu : compositions(3, 3)) {
    const CosetData cd = coset_data(3, mu);
    int expect = 6;
    for (int m : mu) {
      for (int f = 2; f <= m; ++f) expect /= f;
    }
    CHECK(cd.size() == expect);
    std::set<Character> distinct(cd.chars.begin(), cd.chars.end());
    CHECK(static_cast<int>(distinct.size()) == cd.size());
    for (const auto& chi : cd.chars) CHECK(composition_of(chi) == mu);
  }

  CHECK_THROWS_AS(validate_composition({1, 2}, 2, 2), Error);
  CHECK_THROWS_AS(coset_data(2, {3}), Error);
  CHECK_THROWS_AS(coset_data(2, {-1, 3}), Error);
}

TEST_CASE("E_mu is a central resolution of unity") {
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    Context c(r, n);
    Element sum(c);
    const auto comps = compositions(r, n);
    std::vector<Generator> gens{Generator::rho(), Generator::rho_inv()};
    for (int i = 0; i < n; ++i) gens.push_back(Generator::s(i));
    for (int j = 1; j <= n; ++j) gens.push_back(Generator::t(j));
    for (const auto& mu : comps) {
      const Element e = idempotent_E_mu(c, mu);
      sum += e;
      CHECK(mul(e, e) == e);
      for (const auto& g : gens) CHECK(mul(e, T(c, g)) == mul(T(c, g), e));
      for (const auto& nu : comps) {
        if (nu != mu) CHECK(mul(e, idempotent_E_mu(c, nu)).is_zero());
      }
    }
    CHECK(sum == unit(c));
  }
}

TEST_CASE("phi_mu examples") {
  Context c(2, 2);
  const Context ec = block_entry_context(c);
  const Composition mu{1, 1};
  const CosetData cd = coset_data(2, mu);
  const Character chi1 = cd.chars[0];

  BlockMatrix m = phi_mu(c, mu, idempotent_E(c, chi1));
  BlockMatrix expect = BlockMatrix::zero(mu, ec, 2);
  expect.entries[0][0] = unit(ec);
  CHECK(m == expect);

  m = phi_mu(c, mu, e_times(c, chi1, wg(Generator::s(1), 2)));
  expect = BlockMatrix::zero(mu, ec, 2);
  expect.entries[0][1] = unit(ec);
  CHECK(m == expect);

  m = phi_mu(c, mu, e_times(c, chi1, wg(Generator::x(1), 2)));
  expect = BlockMatrix::zero(mu, ec, 2);
  expect.entries[0][0] = entry(ec, wg(Generator::x(1), 2));
  CHECK(m == expect);

  CHECK_THROWS_AS(phi_mu(c, mu, T(c, Generator::s(1))), Error);
  try {
    phi_mu(c, mu, unit(c));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInBlock);
  }
}

TEST_CASE("psi_mu examples") {
  Context c(2, 3);
  const Context ec = block_entry_context(c);
  for (const auto& mu : compositions(2, 3)) {
    const int m = coset_data(2, mu).size();
    CHECK(psi_mu(c, BlockMatrix::zero(mu, ec, m)).is_zero());
    CHECK(psi_mu(c, BlockMatrix::identity(mu, ec, m)) == idempotent_E_mu(c, mu));
  }
  BlockMatrix bad = BlockMatrix::zero({2, 1}, ec, 3);
  bad.entries[0][0] = entry(ec, wg(Generator::s(2), 3));
  try {
    psi_mu(c, bad);
    FAIL("expected EntryOutsideSubalgebra");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EntryOutsideSubalgebra);
  }
}

TEST_CASE("block multiplication") {
  Context c(2, 2);
  const Context ec = block_entry_context(c);
  const Composition mu{1, 1};
  BlockMatrix a = BlockMatrix::zero(mu, ec, 2), b = BlockMatrix::zero(mu, ec, 2), ab = BlockMatrix::zero(mu, ec, 2);
  a.entries[0][1] = unit(ec);
  b.entries[1][0] = unit(ec);
  ab.entries[0][0] = unit(ec);
  CHECK(block_mul(a, b) == ab);
  CHECK(block_mul(BlockMatrix::identity(mu, ec, 2), a) == a);
  CHECK_THROWS_AS(block_mul(a, BlockMatrix::identity({2, 0}, ec, 1)), Error);

  // H^(1,1) is two rank one kernels: X1 and X1^-1 are inverse there.
  const Element x1 = entry(ec, wg(Generator::x(1), 2));
  const Element x1inv = entry(ec, inverse(wg(Generator::x(1), 2)));
  CHECK(block_kernel_mul(mu, x1, x1inv) == unit(ec));

  // Closure: products of block indices stay in the block subgroup.
  for (const auto& bm : std::vector<Composition>{{2, 1}, {1, 2}}) {
    Context ec3(1, 3, 2);
    std::vector<ExtAffineWeyl> ball;
    for (const auto& w : enumerate_bounded(3, 3, 1)) {
      if (in_block_subgroup(bm, w)) ball.push_back(w);
    }
    for (std::size_t i = 0; i < ball.size(); i += 3) {
      for (std::size_t j = 0; j < ball.size(); j += 5) {
        const Element prod = block_kernel_mul(bm, entry(ec3, ball[i]), entry(ec3, ball[j]));
        for (const auto& [g, v] : prod.terms()) {
          CHECK(in_block_subgroup(bm, g.w));
        }
      }
    }
  }
}

TEST_CASE("psi_mu inverts phi_mu") {
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    Context c(r, n);
    const Context ec = block_entry_context(c);
    const auto ball = enumerate_bounded(n, 3, 1);
    for (const auto& mu : compositions(r, n)) {
      const CosetData cd = coset_data(r, mu);
      for (const auto& chi : cd.chars) {
        for (const auto& w : ball) {
          const Element x = e_times(c, chi, w);
          CHECK(psi_mu(c, phi_mu(c, mu, x)) == x);
        }
      }
      // Matrix units from the same range.
      std::vector<ExtAffineWeyl> block;
      for (const auto& w : ball) {
        if (in_block_subgroup(mu, w)) block.push_back(w);
      }
      for (int i = 0; i < cd.size(); ++i) {
        for (int j = 0; j < cd.size(); ++j) {
          for (std::size_t s = 0; s < block.size(); s += 7) {
            BlockMatrix u = BlockMatrix::zero(mu, ec, cd.size());
            u.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(ec, block[s]);
            CHECK(phi_mu(c, mu, psi_mu(c, u)) == u);
          }
        }
      }
    }
  }
}

TEST_CASE("phi_mu is multiplicative on random pairs") {
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    Context c(r, n);
    const auto ball = enumerate_bounded(n, 2, 1);
    std::mt19937_64 rng(77 + 10 * r + n);
    for (const auto& mu : compositions(r, n)) {
      const CosetData cd = coset_data(r, mu);
      std::uniform_int_distribution<std::size_t> pw(0, ball.size() - 1), pk(0, cd.chars.size() - 1);
      for (int it = 0; it < 20; ++it) {
        const Element x = e_times(c, cd.chars[pk(rng)], ball[pw(rng)]);
        const Element y = e_times(c, cd.chars[pk(rng)], ball[pw(rng)]) + e_times(c, cd.chars[pk(rng)], ball[pw(rng)]);
        CHECK(block_mul(phi_mu(c, mu, x), phi_mu(c, mu, y)) == phi_mu(c, mu, mul(x, y)));
      }
    }
  }
}
