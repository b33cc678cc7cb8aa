#include "affyh/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "affyh/errors.hpp"

namespace affyh {

namespace {

void check_rank(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::SizeMismatch,
                "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

int mod(int a, int r) {
  int m = a % r;
  return m < 0 ? m + r : m;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorKind::InvalidArgument, "not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<int> Permutation::act(const std::vector<int>& v) const {
  check_rank(size(), static_cast<int>(v.size()));
  std::vector<int> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[static_cast<std::size_t>(images_[j] - 1)] = v[j];
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  check_rank(a.size(), b.size());
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
  }
  return p;
}

// ---------------------------------------------------------------------------
// Group elements

ExtAffineWeyl ExtAffineWeyl::identity(int n) {
  return {std::vector<int>(static_cast<std::size_t>(n), 0), Permutation::identity(n)};
}

GroupIndex GroupIndex::identity(int n) {
  return {std::vector<int>(static_cast<std::size_t>(n), 0), ExtAffineWeyl::identity(n)};
}

Generator Generator::parse(const std::string& name) {
  auto index_of = [&](std::size_t prefix) {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw Error(ErrorKind::UnknownName, "unknown generator '" + name + "'");
    }
    return std::stoi(digits);
  };
  if (name == "rho") return rho();
  if (name == "rho_inv" || name == "rho^-1") return rho_inv();
  if (name.rfind("s", 0) == 0) return s(index_of(1));
  if (name.rfind("t", 0) == 0) return t(index_of(1));
  if (name.rfind("X", 0) == 0) return x(index_of(1));
  throw Error(ErrorKind::UnknownName, "unknown generator '" + name + "'");
}

std::string Generator::name() const {
  switch (kind) {
    case GeneratorKind::S: return "s" + std::to_string(index);
    case GeneratorKind::Rho: return "rho";
    case GeneratorKind::RhoInv: return "rho_inv";
    case GeneratorKind::T: return "t" + std::to_string(index);
    case GeneratorKind::X: return "X" + std::to_string(index);
  }
  return "?";
}

ExtAffineWeyl compose(const ExtAffineWeyl& a, const ExtAffineWeyl& b) {
  check_rank(a.rank(), b.rank());
  std::vector<int> moved = a.sigma.act(b.lambda);
  for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += a.lambda[i];
  return {std::move(moved), a.sigma * b.sigma};
}

GroupIndex compose(const GroupIndex& a, const GroupIndex& b, int r) {
  check_rank(a.rank(), b.rank());
  std::vector<int> beta = a.w.sigma.act(b.beta);
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = mod(beta[i] + a.beta[i], r);
  return {std::move(beta), compose(a.w, b.w)};
}

ExtAffineWeyl inverse(const ExtAffineWeyl& w) {
  Permutation inv = w.sigma.inverse();
  std::vector<int> lambda = inv.act(w.lambda);
  for (int& v : lambda) v = -v;
  return {std::move(lambda), std::move(inv)};
}

GroupIndex inverse(const GroupIndex& w, int r) {
  Permutation inv = w.w.sigma.inverse();
  std::vector<int> beta = inv.act(w.beta);
  for (int& v : beta) v = mod(-v, r);
  return {std::move(beta), inverse(w.w)};
}

ExtAffineWeyl weyl_generator(const Generator& g, int n) {
  auto unit = [n](int j) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(j - 1)] = 1;
    return v;
  };
  switch (g.kind) {
    case GeneratorKind::S: {
      if (n < 2 || g.index < 0 || g.index > n - 1) {
        throw Error(ErrorKind::IndexOutOfRange, "s_" + std::to_string(g.index) + " with n=" + std::to_string(n));
      }
      if (g.index == 0) {
        std::vector<int> lambda(static_cast<std::size_t>(n), 0);
        lambda.front() = -1;
        lambda.back() = 1;
        return {std::move(lambda), Permutation::transposition(n, 1, n)};
      }
      return {std::vector<int>(static_cast<std::size_t>(n), 0),
              Permutation::transposition(n, g.index, g.index + 1)};
    }
    case GeneratorKind::Rho:
    case GeneratorKind::RhoInv: {
      std::vector<int> images(static_cast<std::size_t>(n));
      images[0] = n;
      for (int j = 2; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = j - 1;
      ExtAffineWeyl rho{unit(n), Permutation(std::move(images))};
      return g.kind == GeneratorKind::Rho ? rho : inverse(rho);
    }
    case GeneratorKind::X:
      if (g.index < 1 || g.index > n) {
        throw Error(ErrorKind::IndexOutOfRange, "X_" + std::to_string(g.index) + " with n=" + std::to_string(n));
      }
      return {unit(g.index), Permutation::identity(n)};
    case GeneratorKind::T:
      throw Error(ErrorKind::InvalidArgument, "t_j is not an element of the Weyl group");
  }
  throw Error(ErrorKind::InvalidArgument, "bad generator");
}

GroupIndex generator(const Generator& g, int r, int n) {
  if (g.kind == GeneratorKind::T) {
    if (g.index < 1 || g.index > n) {
      throw Error(ErrorKind::IndexOutOfRange, "t_" + std::to_string(g.index) + " with n=" + std::to_string(n));
    }
    GroupIndex idx = GroupIndex::identity(n);
    idx.beta[static_cast<std::size_t>(g.index - 1)] = mod(1, r);
    return idx;
  }
  return {std::vector<int>(static_cast<std::size_t>(n), 0), weyl_generator(g, n)};
}

ExtAffineWeyl rho_power(int n, int k) {
  ExtAffineWeyl out = ExtAffineWeyl::identity(n);
  const ExtAffineWeyl step = weyl_generator(k >= 0 ? Generator::rho() : Generator::rho_inv(), n);
  for (int i = 0; i < std::abs(k); ++i) out = compose(step, out);
  return out;
}

GroupIndex torus_index(std::vector<int> beta, int n) {
  check_rank(static_cast<int>(beta.size()), n);
  return {std::move(beta), ExtAffineWeyl::identity(n)};
}

int rho_degree(const ExtAffineWeyl& w) { return std::accumulate(w.lambda.begin(), w.lambda.end(), 0); }

std::vector<long> affine_window(const ExtAffineWeyl& w) {
  const int n = w.rank();
  std::vector<long> f(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int si = w.sigma(i);
    f[static_cast<std::size_t>(i - 1)] = si - static_cast<long>(n) * w.lambda[static_cast<std::size_t>(si - 1)];
  }
  return f;
}

int length(const ExtAffineWeyl& w) {
  const auto f = affine_window(w);
  const long n = static_cast<long>(f.size());
  long total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) total += std::abs(floor_div(f[j] - f[i], n));
  }
  return static_cast<int>(total);
}

WeylWord reduced_word_of(const ExtAffineWeyl& w) {
  const int n = w.rank();
  WeylWord out;
  out.k = rho_degree(w);
  ExtAffineWeyl u = compose(rho_power(n, -out.k), w);
  int len = length(u);
  while (len > 0) {
    for (int i = 0; i < n; ++i) {
      ExtAffineWeyl next = compose(weyl_generator(Generator::s(i), n), u);
      const int next_len = length(next);
      if (next_len < len) {
        out.word.push_back(i);
        u = std::move(next);
        len = next_len;
        break;
      }
    }
  }
  return out;
}

ExtAffineWeyl evaluate_word(const WeylWord& word, int n) {
  ExtAffineWeyl out = ExtAffineWeyl::identity(n);
  for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) {
    out = compose(weyl_generator(Generator::s(*it), n), out);
  }
  return compose(rho_power(n, word.k), out);
}

namespace {

void collect_reduced_words(const ExtAffineWeyl& u, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  const int len = length(u);
  if (len == 0) {
    out.push_back(prefix);
    return;
  }
  const int n = u.rank();
  for (int i = 0; i < n; ++i) {
    ExtAffineWeyl next = compose(weyl_generator(Generator::s(i), n), u);
    if (length(next) < len) {
      prefix.push_back(i);
      collect_reduced_words(next, prefix, out);
      prefix.pop_back();
    }
  }
}

ExtAffineWeyl affine_part(const ExtAffineWeyl& w) {
  return compose(rho_power(w.rank(), -rho_degree(w)), w);
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const ExtAffineWeyl& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_reduced_words(affine_part(w), prefix, out);
  return out;
}

bool bruhat_leq(const ExtAffineWeyl& y, const ExtAffineWeyl& w) {
  check_rank(y.rank(), w.rank());
  if (rho_degree(y) != rho_degree(w)) return false;
  const ExtAffineWeyl target = affine_part(y);
  const int n = w.rank();
  // Products of all subexpressions of one reduced word of w.
  std::set<ExtAffineWeyl> reachable{ExtAffineWeyl::identity(n)};
  for (int i : reduced_word_of(w).word) {
    const ExtAffineWeyl s = weyl_generator(Generator::s(i), n);
    std::vector<ExtAffineWeyl> extended;
    for (const auto& u : reachable) extended.push_back(compose(u, s));
    reachable.insert(extended.begin(), extended.end());
  }
  return reachable.contains(target);
}

std::vector<ExtAffineWeyl> enumerate_bounded(int n, int max_length, int max_rho) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "enumeration needs n >= 2");
  if (max_length < 0 || max_rho < 0) throw Error(ErrorKind::InvalidArgument, "bounds must be nonnegative");
  std::vector<std::pair<std::vector<int>, ExtAffineWeyl>> affine;  // (reduced word, element)
  std::set<ExtAffineWeyl> level{ExtAffineWeyl::identity(n)};
  for (int len = 0; len <= max_length; ++len) {
    std::vector<std::pair<std::vector<int>, ExtAffineWeyl>> sorted;
    for (const auto& u : level) sorted.emplace_back(reduced_word_of(u).word, u);
    std::sort(sorted.begin(), sorted.end());
    affine.insert(affine.end(), sorted.begin(), sorted.end());
    if (len == max_length) break;
    std::set<ExtAffineWeyl> next;
    for (const auto& u : level) {
      for (int i = 0; i < n; ++i) {
        ExtAffineWeyl v = compose(weyl_generator(Generator::s(i), n), u);
        if (length(v) == len + 1) next.insert(std::move(v));
      }
    }
    level = std::move(next);
  }
  std::vector<ExtAffineWeyl> out;
  out.reserve(affine.size() * static_cast<std::size_t>(2 * max_rho + 1));
  for (int k = -max_rho; k <= max_rho; ++k) {
    const ExtAffineWeyl shift = rho_power(n, k);
    for (const auto& entry : affine) out.push_back(compose(shift, entry.second));
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string to_string(const ExtAffineWeyl& w) {
  return "X^" + join(w.lambda) + " sigma=" + join(w.sigma.images());
}

std::string to_string(const GroupIndex& w) { return "t^" + join(w.beta) + " " + to_string(w.w); }

}  // namespace affyh
