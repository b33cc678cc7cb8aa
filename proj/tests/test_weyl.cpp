#include <map>
#include <queue>
#include <set>

#include "affyh/errors.hpp"
#include "affyh/weyl.hpp"
#include "doctest.h"

using namespace affyh;

namespace {

ExtAffineWeyl s(int i, int n) { return weyl_generator(Generator::s(i), n); }
ExtAffineWeyl rho(int n) { return weyl_generator(Generator::rho(), n); }
ExtAffineWeyl xj(int j, int n) { return weyl_generator(Generator::x(j), n); }

// Cayley-graph distances in W^aff from the identity, up to `depth`.
std::map<ExtAffineWeyl, int> bfs_ball(int n, int depth) {
  std::map<ExtAffineWeyl, int> dist{{ExtAffineWeyl::identity(n), 0}};
  std::queue<ExtAffineWeyl> frontier;
  frontier.push(ExtAffineWeyl::identity(n));
  while (!frontier.empty()) {
    ExtAffineWeyl u = frontier.front();
    frontier.pop();
    const int d = dist[u];
    if (d == depth) continue;
    for (int i = 0; i < n; ++i) {
      ExtAffineWeyl v = compose(u, s(i, n));
      if (dist.emplace(v, d + 1).second) frontier.push(v);
    }
  }
  return dist;
}

// Bruhat order via the lifting property, independent of subword products.
bool bruhat_lifting(const ExtAffineWeyl& y, const ExtAffineWeyl& w) {
  const int n = w.rank();
  if (length(w) == 0) return y == w;
  for (int i = 0; i < n; ++i) {
    ExtAffineWeyl sw = compose(s(i, n), w);
    if (length(sw) < length(w)) {
      ExtAffineWeyl sy = compose(s(i, n), y);
      return length(sy) < length(y) ? bruhat_lifting(sy, sw) : bruhat_lifting(y, sw);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("composition examples") {
  CHECK(compose(s(1, 2), s(1, 2)) == ExtAffineWeyl::identity(2));
  ExtAffineWeyl rr = compose(rho(2), rho(2));
  CHECK(rr.lambda == std::vector<int>{1, 1});
  CHECK(rr.sigma.is_identity());
  GroupIndex t1 = generator(Generator::t(1), 2, 2);
  GroupIndex s1 = generator(Generator::s(1), 2, 2);
  GroupIndex a = compose(t1, s1, 2);
  CHECK(a.beta == std::vector<int>{1, 0});
  CHECK(a.w == s(1, 2));
  GroupIndex b = compose(s1, t1, 2);
  CHECK(b.beta == std::vector<int>{0, 1});
  CHECK_THROWS_AS(compose(s(1, 2), s(1, 3)), Error);
}

TEST_CASE("generator normal forms") {
  ExtAffineWeyl s0 = s(0, 2);
  CHECK(s0.lambda == std::vector<int>{-1, 1});
  CHECK(s0.sigma.images() == std::vector<int>{2, 1});
  CHECK(xj(1, 2).lambda == std::vector<int>{1, 0});
  ExtAffineWeyl r3 = rho(3);
  CHECK(r3.lambda == std::vector<int>{0, 0, 1});
  CHECK(r3.sigma.images() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(s(2, 2), Error);
  CHECK_THROWS_AS(generator(Generator::t(3), 2, 2), Error);
  try {
    s(5, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("lemma-style images of s0 and rho") {
  for (int n = 2; n <= 4; ++n) {
    // s_0 = s_{n-1} ... s_2 s_1 s_2 ... s_{n-1} X_1 X_n^{-1}
    ExtAffineWeyl w = ExtAffineWeyl::identity(n);
    for (int i = n - 1; i >= 2; --i) w = compose(w, s(i, n));
    w = compose(w, s(1, n));
    for (int i = 2; i <= n - 1; ++i) w = compose(w, s(i, n));
    w = compose(w, compose(xj(1, n), inverse(xj(n, n))));
    CHECK(w == s(0, n));
    // rho = s_{n-1} ... s_1 X_1
    ExtAffineWeyl p = ExtAffineWeyl::identity(n);
    for (int i = n - 1; i >= 1; --i) p = compose(p, s(i, n));
    CHECK(compose(p, xj(1, n)) == rho(n));
  }
}

TEST_CASE("length examples") {
  CHECK(length(ExtAffineWeyl::identity(3)) == 0);
  for (int n = 2; n <= 4; ++n) CHECK(length(rho(n)) == 0);
  CHECK(length(xj(1, 2)) == 1);
  WeylWord w = reduced_word_of(xj(1, 2));
  CHECK(w.k == 1);
  CHECK(w.word == std::vector<int>{0});
  CHECK(reduced_word_of(s(0, 3)).word == std::vector<int>{0});
  CHECK(reduced_word_of(ExtAffineWeyl::identity(3)).word.empty());
}

TEST_CASE("length equals BFS distance") {
  for (int n : {2, 3}) {
    auto ball = bfs_ball(n, 6);
    for (const auto& [w, d] : ball) {
      CHECK(length(w) == d);
      for (int k : {-2, 1, 3}) CHECK(length(compose(rho_power(n, k), w)) == d);
    }
  }
}

TEST_CASE("parity and reduced word round trip") {
  for (int n : {2, 3, 4}) {
    for (const auto& w : enumerate_bounded(n, 4, 1)) {
      for (int i = 0; i < n; ++i) CHECK(std::abs(length(compose(s(i, n), w)) - length(w)) == 1);
      WeylWord word = reduced_word_of(w);
      CHECK(static_cast<int>(word.word.size()) == length(w));
      CHECK(evaluate_word(word, n) == w);
      for (const auto& alt : all_reduced_words(w)) CHECK(evaluate_word({word.k, alt}, n) == w);
    }
  }
}

TEST_CASE("group relations on generators") {
  for (int n : {2, 3, 4}) {
    for (int r : {1, 2, 3}) {
      auto g = [&](const Generator& x) { return generator(x, r, n); };
      auto c = [&](const GroupIndex& a, const GroupIndex& b) { return compose(a, b, r); };
      const GroupIndex id = GroupIndex::identity(n);
      for (int i = 0; i < n; ++i) {
        GroupIndex si = g(Generator::s(i));
        CHECK(c(si, si) == id);
        CHECK(c(g(Generator::rho()), si) == c(g(Generator::s((i + n - 1) % n)), g(Generator::rho())));
        for (int j = 0; j < n; ++j) {
          GroupIndex sj = g(Generator::s(j));
          const int d = ((i - j) % n + n) % n;
          if (d != 1 && d != n - 1) CHECK(c(si, sj) == c(sj, si));
          if (n >= 3 && j == (i + 1) % n) CHECK(c(c(si, sj), si) == c(c(sj, si), sj));
        }
      }
      for (int j = 1; j <= n; ++j) {
        GroupIndex tj = g(Generator::t(j));
        GroupIndex tprev = g(Generator::t(j == 1 ? n : j - 1));
        CHECK(c(g(Generator::rho()), tj) == c(tprev, g(Generator::rho())));
        GroupIndex power = id;
        for (int k = 0; k < r; ++k) power = c(power, tj);
        CHECK(power == id);
        for (int i = 1; i < n; ++i) {
          const int image = j == i ? i + 1 : (j == i + 1 ? i : j);
          CHECK(c(g(Generator::s(i)), tj) == c(g(Generator::t(image)), g(Generator::s(i))));
        }
      }
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_bounded(2, 0, 0) == std::vector<ExtAffineWeyl>{ExtAffineWeyl::identity(2)});
  auto one = enumerate_bounded(2, 1, 0);
  REQUIRE(one.size() == 3);
  CHECK(one[1] == s(0, 2));
  CHECK(one[2] == s(1, 2));
  CHECK(enumerate_bounded(2, 2, 0).size() == 5);
  auto ball = enumerate_bounded(3, 3, 1);
  std::set<ExtAffineWeyl> unique(ball.begin(), ball.end());
  CHECK(unique.size() == ball.size());
  // Sizes of spheres in affine A_2: 1, 3, 6, 9.
  CHECK(ball.size() == 3 * 19);
}

TEST_CASE("bruhat order") {
  const int n = 2;
  CHECK(bruhat_leq(ExtAffineWeyl::identity(n), s(0, n)));
  CHECK(bruhat_leq(s(1, n), compose(s(1, n), s(0, n))));
  CHECK(!bruhat_leq(s(0, n), s(1, n)));
  CHECK(!bruhat_leq(ExtAffineWeyl::identity(n), rho(n)));
  CHECK(bruhat_leq(rho(n), xj(1, n)));
  for (int m : {2, 3}) {
    auto ball = enumerate_bounded(m, 3, 1);
    for (const auto& y : ball) {
      for (const auto& w : ball) {
        const bool le = bruhat_leq(y, w);
        const bool same_k = rho_degree(y) == rho_degree(w);
        const ExtAffineWeyl shift = rho_power(m, -rho_degree(w));
        CHECK(le == (same_k && bruhat_lifting(compose(shift, y), compose(shift, w))));
        if (le && !(y == w)) CHECK(length(y) < length(w));
        if (le && bruhat_leq(w, y)) CHECK(y == w);
      }
    }
  }
}

TEST_CASE("permutations") {
  auto perms = all_permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front().is_identity());
  Permutation p(std::vector<int>{2, 3, 1});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.act({10, 20, 30}) == std::vector<int>{30, 10, 20});
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), Error);
  CHECK(Generator::parse("s0") == Generator::s(0));
  CHECK(Generator::parse("rho_inv") == Generator::rho_inv());
  CHECK_THROWS_AS(Generator::parse("y2"), Error);
}
