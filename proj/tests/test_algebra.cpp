#include <random>
#include <set>

#include "affyh/algebra.hpp"
#include "affyh/errors.hpp"
#include "doctest.h"

using namespace affyh;

namespace {

GroupIndex idx(std::vector<int> beta, std::vector<int> lambda, std::vector<int> sigma) {
  return {std::move(beta), {std::move(lambda), Permutation(std::move(sigma))}};
}

Element T(const Context& c, const Generator& g) { return generator_element(c, g); }

Scalar half_z(const Context& c) { return z_const(c) * scalar(c, Rational(1, 2)); }

}  // namespace

TEST_CASE("basis and unit") {
  Context c(2, 2);
  CHECK(mul(unit(c), T(c, Generator::s(1))) == T(c, Generator::s(1)));
  CHECK(T(c, Generator::t(1)).size() == 1);
  CHECK(T(c, Generator::rho()).terms().begin()->first == idx({0, 0}, {0, 1}, {2, 1}));
}

TEST_CASE("e elements") {
  Context c1(1, 2);
  CHECK(e_affine(c1, 1) == unit(c1));
  Context c(2, 2);
  Element e1 = unit(c) * scalar(c, Rational(1, 2)) + basis(c, idx({1, 1}, {0, 0}, {1, 2})) * scalar(c, Rational(1, 2));
  CHECK(e_affine(c, 1) == e1);
  CHECK(e_element(c, 2, 2) == unit(c));
  CHECK(e_affine(c, 0) == e_element(c, 2, 1));
  CHECK_THROWS_AS(e_affine(c, 2), Error);
  for (int r : {2, 3}) {
    for (int n : {2, 3}) {
      Context k(r, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          Element e = e_element(k, i, j);
          CHECK(mul(e, e) == e);
          CHECK(e == e_element(k, j, i));
          for (int s = 1; s < n; ++s) {
            auto image = [&](int a) { return a == s ? s + 1 : (a == s + 1 ? s : a); };
            CHECK(mul(T(k, Generator::s(s)), e) == mul(e_element(k, image(i), image(j)), T(k, Generator::s(s))));
          }
        }
      }
    }
  }
}

TEST_CASE("left multiplication examples") {
  Context c(2, 2);
  CHECK(left_mul_gen(Generator::s(1), unit(c)) == T(c, Generator::s(1)));
  Element expect = unit(c) + (T(c, Generator::s(1)) + basis(c, idx({1, 1}, {0, 0}, {2, 1}))) * half_z(c);
  CHECK(left_mul_gen(Generator::s(1), T(c, Generator::s(1))) == expect);
  CHECK(mul(T(c, Generator::s(1)), T(c, Generator::s(1))) == expect);
  // T_rho t_1 = t_n T_rho.
  Element lhs = left_mul_gen(Generator::rho(), T(c, Generator::t(1)));
  CHECK(lhs == mul(T(c, Generator::t(2)), T(c, Generator::rho())));
}

TEST_CASE("inverses") {
  Context c1(1, 3);
  CHECK(ts_inverse(c1, 1) == T(c1, Generator::s(1)) - unit(c1) * z_const(c1));
  Context c(2, 2);
  Element expect = T(c, Generator::s(1)) - (unit(c) + basis(c, idx({1, 1}, {0, 0}, {1, 2}))) * half_z(c);
  CHECK(ts_inverse(c, 1) == expect);
  for (int r : {1, 2, 3}) {
    for (int n : {2, 3}) {
      Context k(r, n);
      for (int i = 0; i < n; ++i) {
        CHECK(mul(ts_inverse(k, i), T(k, Generator::s(i))) == unit(k));
        CHECK(mul(T(k, Generator::s(i)), ts_inverse(k, i)) == unit(k));
      }
      CHECK(mul(rho_element(k, 1), rho_element(k, -1)) == unit(k));
    }
  }
}

TEST_CASE("Bernstein generators") {
  Context c(2, 2);
  auto psi = psi_assignment(c);
  CHECK(psi.at("g1") == T(c, Generator::s(1)));
  Element expect = basis(c, idx({0, 0}, {1, 0}, {1, 2})) -
                   (T(c, Generator::rho()) + basis(c, idx({1, 1}, {0, 1}, {2, 1}))) * half_z(c);
  CHECK(psi.at("X1") == expect);
  CHECK(mul(psi.at("X1"), psi.at("X1^-1")) == unit(c));
  CHECK(mul(psi.at("X1^-1"), psi.at("X1")) == unit(c));
  CHECK(mul(x_element(c, 1), x_element(c, 2)) == basis(c, idx({0, 0}, {1, 1}, {1, 2})));
  CHECK(x_element(c, 1) == psi.at("X1"));
  for (int r : {1, 2, 3}) {
    Context k(r, 3);
    std::vector<Element> xs;
    for (int j = 1; j <= 3; ++j) xs.push_back(x_element(k, j));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) CHECK(mul(xs[a], xs[b]) == mul(xs[b], xs[a]));
      for (int j = 1; j <= 3; ++j) CHECK(mul(xs[a], T(k, Generator::t(j))) == mul(T(k, Generator::t(j)), xs[a]));
    }
    CHECK(mul(T(k, Generator::s(2)), xs[0]) == mul(xs[0], T(k, Generator::s(2))));
  }
}

TEST_CASE("Matsumoto independence") {
  for (int n : {2, 3}) {
    Context c(2, n);
    const Element probe = T(c, Generator::s(1)) + T(c, Generator::t(1)) * z_const(c) + rho_element(c, -1);
    for (const auto& w : enumerate_bounded(n, 4, 1)) {
      std::vector<int> beta(static_cast<std::size_t>(n), 0);
      beta[0] = 1;
      const Element expect = mul(basis(c, {beta, w}), probe);
      for (const auto& word : all_reduced_words(w)) {
        CHECK(mul_along(probe, {rho_degree(w), word}, beta) == expect);
      }
    }
  }
}

TEST_CASE("associativity on random basis triples") {
  for (auto [r, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    Context c(r, n);
    auto ball = enumerate_bounded(n, 3, 1);
    std::mt19937_64 rng(2024 + 10 * r + n);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    std::uniform_int_distribution<int> tb(0, r - 1);
    auto random_basis = [&]() {
      std::vector<int> beta(static_cast<std::size_t>(n));
      for (int& b : beta) b = tb(rng);
      return basis(c, {beta, ball[pick(rng)]});
    };
    for (int i = 0; i < 25; ++i) {
      Element a = random_basis(), b = random_basis(), d = random_basis();
      CHECK(mul(mul(a, b), d) == mul(a, mul(b, d)));
    }
  }
}

TEST_CASE("finite sector closure") {
  Context c(2, 3);
  std::set<GroupIndex> sector;
  for (const auto& p : all_permutations(3)) {
    for (int m = 0; m < 8; ++m) {
      sector.insert({{m & 1, (m >> 1) & 1, (m >> 2) & 1}, {{0, 0, 0}, p}});
    }
  }
  CHECK(sector.size() == 48);
  for (int i = 1; i <= 2; ++i) {
    for (const auto& g : sector) {
      const Element prod = mul(T(c, Generator::s(i)), basis(c, g));
      for (const auto& kv : prod.terms()) CHECK(sector.contains(kv.first));
    }
  }
}

TEST_CASE("r = 1 degenerates to the extended affine Hecke algebra") {
  Context c(1, 3);
  for (int i = 0; i < 3; ++i) {
    Element s = T(c, Generator::s(i));
    CHECK(mul(s, s) == unit(c) + s * z_const(c));
    const int j = (i + 1) % 3;
    Element t = T(c, Generator::s(j));
    CHECK(mul(mul(s, t), s) == mul(mul(t, s), t));
  }
}

TEST_CASE("pro-p quadratic form") {
  for (int n : {2, 3}) {
    Context c(2, n);
    for (int m = 0; m < (1 << n); ++m) {
      std::vector<int> beta(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) beta[static_cast<std::size_t>(j)] = (m >> j) & 1;
      for (int i = 0; i < n; ++i) {
        GroupIndex ts = compose(torus_index(beta, n), generator(Generator::s(i), 2, n), 2);
        Element x = basis(c, ts);
        Element cts = mul(basis(c, torus_index(beta, n)), e_affine(c, i)) * z_const(c);
        CHECK(mul(x, x) == basis(c, compose(ts, ts, 2)) + mul(cts, x));
      }
    }
  }
}

TEST_CASE("context errors") {
  Context a(2, 2), b(3, 2);
  CHECK_THROWS_AS(mul(unit(a), unit(b)), Error);
  try {
    (void)mul(unit(a), unit(b));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContextMismatch);
  }
  CHECK_THROWS_AS(Context(2, 2, 3), Error);
}
