#include "affyh/errors.hpp"
#include "affyh/modified.hpp"
#include "affyh/presentations.hpp"
#include "doctest.h"

using namespace affyh;

namespace {

Element T(const Context& c, const Generator& g) { return generator_element(c, g); }

CycRational z(int r, long k) { return CycRational::zeta_power(r, k); }

}  // namespace

TEST_CASE("Vandermonde data by hand") {
  const VandermondeData v1 = vandermonde(1);
  CHECK(v1.delta == CycRational(1, 1));
  CHECK(v1.F[0] == std::vector<CycRational>{CycRational(1, 1)});

  const VandermondeData v = vandermonde(2);
  const CycRational one(2, 1), mone(2, -1);
  CHECK(v.A == std::vector<std::vector<CycRational>>{{one, one}, {mone, one}});
  CHECK(v.delta == CycRational(2, 2));
  CHECK(v.B == std::vector<std::vector<CycRational>>{{one, mone}, {one, one}});
  CHECK(v.F[0] == std::vector<CycRational>{one, mone});
  CHECK(v.F[1] == std::vector<CycRational>{one, one});
}

TEST_CASE("Vandermonde invariants") {
  for (int r = 1; r <= 6; ++r) {
    CAPTURE(r);
    const VandermondeData v = vandermonde(r);
    CycRational prod(r, 1);
    for (int i = 1; i <= r; ++i) {
      for (int j = 1; j < i; ++j) prod *= z(r, i) - z(r, j);
    }
    CHECK(v.delta == prod);
    CHECK(determinant(v.A) == v.delta);
    const CycRational inv = cyc_invert(v.delta);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < r; ++k) {
        CycRational ab(r), fe(r);
        for (int l = 0; l < r; ++l) {
          ab += v.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] * v.B[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
          // Delta^-1 F_{i+1}(zeta^{k+1})
          fe += v.F[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] * z(r, static_cast<long>(k + 1) * l);
        }
        CHECK(ab * inv == CycRational(r, i == k ? 1 : 0));
        CHECK(fe * inv == CycRational(r, i == k ? 1 : 0));
      }
    }
  }
}

TEST_CASE("f_eval and spectral projectors") {
  const Context c1(1, 2);
  CHECK(f_eval(c1, 1, 1) == unit(c1));

  const Context c2(2, 2);
  CHECK(f_eval(c2, 1, 1) == unit(c2) - T(c2, Generator::t(1)));
  CHECK_THROWS_AS(f_eval(c2, 3, 1), Error);
  CHECK_THROWS_AS(f_eval(c2, 1, 5), Error);

  for (int r = 1; r <= 4; ++r) {
    const Context c(r, 2);
    for (int i = 0; i <= 2; ++i) {
      Element sum(c);
      for (int a = 1; a <= r; ++a) {
        const Element p = spectral_projector(c, a, i);
        CHECK(p == character_projector(c, a, i));
        CHECK(mul(p, p) == p);
        for (int b = 1; b <= r; ++b) {
          if (b != a) CHECK(mul(p, spectral_projector(c, b, i)).is_zero());
        }
        sum += p;
      }
      CHECK(sum == unit(c));
    }
  }
}

TEST_CASE("psi_c assignment") {
  const Context c1(1, 3);
  const Assignment a1 = psi_c_assignment(c1);
  for (int i = 0; i < 3; ++i) CHECK(a1.at("hs" + std::to_string(i)) == T(c1, Generator::s(i)));

  const Context c(2, 2);
  const Assignment a = psi_c_assignment(c);
  Element corr = group_mul(unit(c) - T(c, Generator::t(1)), unit(c) + T(c, Generator::t(2)));
  corr = corr * (z_const(c) * Scalar(2, Rational(1, 4)));
  CHECK(a.at("hs1") == T(c, Generator::s(1)) + corr);
  CHECK(a.at("w2") == T(c, Generator::t(2)));
  CHECK(a.at("hrho") == rho_element(c, 1));
  CHECK(check_relations(builtin("modified_affine", 2, 2), a, c).pass());

  for (auto [r, n] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 3}}) CHECK(verify_phi_psi_identity(Context(r, n)));
}

TEST_CASE("h basis elements") {
  const Context c(2, 2);
  const std::vector<int> zero{0, 0};
  const Assignment a = psi_c_assignment(c);
  CHECK(h_basis_element(c, zero, ExtAffineWeyl::identity(2)) == unit(c));
  CHECK(h_basis_element(c, zero, weyl_generator(Generator::s(1), 2)) == a.at("hs1"));
  CHECK(h_basis_element(c, zero, weyl_generator(Generator::rho(), 2)) == rho_element(c, 1));

  // Independent of the reduced word.
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Context k(r, n);
    const std::vector<int> alpha(static_cast<std::size_t>(n), 1 % r);
    for (const auto& w : enumerate_bounded(n, 3, 1)) {
      const Element h = h_basis_element(k, alpha, w);
      for (const auto& word : all_reduced_words(w)) CHECK(h_word_element(k, alpha, {rho_degree(w), word}) == h);
    }
  }
}

TEST_CASE("triangular expansion") {
  const Context c(2, 2);
  const Element h = h_basis_element(c, {0, 0}, weyl_generator(Generator::s(1), 2));
  for (const auto& [idx, v] : h.terms()) {
    const bool top = idx.w == weyl_generator(Generator::s(1), 2);
    CHECK((top || idx.w == ExtAffineWeyl::identity(2)));
    if (top) CHECK(v == Scalar(2, 1));
  }
  for (auto [r, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Report rep = triangularity_check(Context(r, n), 3);
    CHECK(rep.pass());
    CHECK(rep.results.front().instances > 0);
  }
}
