#include "affyh/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "affyh/errors.hpp"

namespace affyh {

Context::Context(int r_, int n_, int field_) : r(r_), n(n_), field(field_) {
  if (r < 1 || n < 1 || field < 1) throw Error(ErrorKind::InvalidArgument, "r, n and field must be positive");
  if (field % r != 0) {
    throw Error(ErrorKind::MixedRoot, "coefficient field must contain the r-th roots of unity");
  }
}

// ---------------------------------------------------------------------------
// Element

Scalar Element::coefficient(const GroupIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar(ctx_.field) : it->second;
}

void Element::add_term(const GroupIndex& index, const Scalar& coeff) {
  if (coeff.field() != ctx_.field) throw Error(ErrorKind::MixedRoot, "coefficient field differs from context");
  if (index.rank() != ctx_.n) throw Error(ErrorKind::SizeMismatch, "index rank differs from context");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_same(const Element& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw Error(ErrorKind::ContextMismatch,
                "elements live in different algebras (r=" + std::to_string(ctx_.r) + ", n=" + std::to_string(ctx_.n) +
                    ") vs (r=" + std::to_string(other.ctx_.r) + ", n=" + std::to_string(other.ctx_.n) + ")");
  }
}

Element Element::operator-() const {
  Element out(*this);
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& other) {
  check_same(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.field() != ctx_.field) throw Error(ErrorKind::MixedRoot, "scalar field differs from context");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

bool operator==(const Element& a, const Element& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

std::vector<std::pair<GroupIndex, Scalar>> Element::canonical_terms() const {
  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::vector<std::pair<Key, const Map::value_type*>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& kv : terms_) {
    WeylWord word = reduced_word_of(kv.first.w);
    keyed.emplace_back(Key{word.k, static_cast<int>(word.word.size()), std::move(word.word), kv.first.beta}, &kv);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<GroupIndex, Scalar>> out;
  out.reserve(keyed.size());
  for (const auto& [key, kv] : keyed) out.emplace_back(kv->first, kv->second);
  return out;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : canonical_terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "] T{" << affyh::to_string(idx) << "}";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Constructors

Scalar scalar(const Context& ctx, const Rational& value) { return Scalar(ctx.field, value); }

Scalar z_const(const Context& ctx) { return Scalar::q_minus_qinv(ctx.field); }

Element basis(const Context& ctx, const GroupIndex& index) {
  Element e(ctx);
  e.add_term(index, scalar(ctx, 1));
  return e;
}

Element unit(const Context& ctx) { return basis(ctx, GroupIndex::identity(ctx.n)); }

Element generator_element(const Context& ctx, const Generator& g) {
  return basis(ctx, generator(g, ctx.r, ctx.n));
}

namespace {

void check_torus_index(const Context& ctx, int j) {
  if (j < 1 || j > ctx.n) {
    throw Error(ErrorKind::IndexOutOfRange, "torus index " + std::to_string(j) + " outside 1.." + std::to_string(ctx.n));
  }
}

std::pair<int, int> e_pair(const Context& ctx, int i) {
  if (i < 0 || i > ctx.n - 1 || ctx.n < 2) {
    throw Error(ErrorKind::IndexOutOfRange, "e_" + std::to_string(i) + " with n=" + std::to_string(ctx.n));
  }
  return i == 0 ? std::pair{ctx.n, 1} : std::pair{i, i + 1};
}

// beta of t_a^s t_b^{-s}.
std::vector<int> pair_beta(const Context& ctx, int a, int b, int s) {
  std::vector<int> beta(static_cast<std::size_t>(ctx.n), 0);
  beta[static_cast<std::size_t>(a - 1)] = (beta[static_cast<std::size_t>(a - 1)] + s) % ctx.r;
  beta[static_cast<std::size_t>(b - 1)] = ((beta[static_cast<std::size_t>(b - 1)] - s) % ctx.r + ctx.r) % ctx.r;
  return beta;
}

Element left_shift(const GroupIndex& g, const Element& x) {
  const Context& ctx = x.context();
  Element out(ctx);
  for (const auto& [idx, c] : x.terms()) out.add_term(compose(g, idx, ctx.r), c);
  return out;
}

Element left_mul_s(int i, const Element& x) {
  const Context& ctx = x.context();
  const auto [a, b] = e_pair(ctx, i);
  const GroupIndex s = generator(Generator::s(i), ctx.r, ctx.n);
  std::vector<GroupIndex> pairs;
  for (int k = 0; k < ctx.r; ++k) pairs.push_back(torus_index(pair_beta(ctx, a, b, k), ctx.n));
  const Scalar zr = z_const(ctx) * scalar(ctx, Rational(1, ctx.r));
  Element out(ctx);
  for (const auto& [idx, c] : x.terms()) {
    GroupIndex sw = compose(s, idx, ctx.r);
    const bool down = length(sw) < length(idx);
    out.add_term(sw, c);
    if (down) {
      const Scalar cz = c * zr;
      for (const auto& p : pairs) out.add_term(compose(p, idx, ctx.r), cz);
    }
  }
  return out;
}

Element fold_word(const WeylWord& word, const std::vector<int>& beta, Element y) {
  const Context& ctx = y.context();
  for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) y = left_mul_s(*it, y);
  GroupIndex head{beta, rho_power(ctx.n, word.k)};
  return left_shift(head, y);
}

}  // namespace

Element e_element(const Context& ctx, int i, int k) {
  check_torus_index(ctx, i);
  check_torus_index(ctx, k);
  Element out(ctx);
  const Scalar w = scalar(ctx, Rational(1, ctx.r));
  for (int s = 0; s < ctx.r; ++s) out.add_term(torus_index(pair_beta(ctx, i, k, s), ctx.n), w);
  return out;
}

Element e_affine(const Context& ctx, int i) {
  const auto [a, b] = e_pair(ctx, i);
  return e_element(ctx, a, b);
}

Element left_mul_gen(const Generator& g, const Element& x) {
  const Context& ctx = x.context();
  switch (g.kind) {
    case GeneratorKind::S:
      return left_mul_s(g.index, x);
    case GeneratorKind::T:
    case GeneratorKind::Rho:
    case GeneratorKind::RhoInv:
      return left_shift(generator(g, ctx.r, ctx.n), x);
    case GeneratorKind::X:
      return mul(generator_element(ctx, g), x);
  }
  throw Error(ErrorKind::InvalidArgument, "bad generator");
}

Element mul(const Element& x, const Element& y) {
  if (!(x.context() == y.context())) {
    throw Error(ErrorKind::ContextMismatch, "mul: operands live in different algebras");
  }
  const Context& ctx = x.context();
  std::map<ExtAffineWeyl, std::vector<std::pair<std::vector<int>, Scalar>>> grouped;
  for (const auto& [idx, c] : x.terms()) grouped[idx.w].emplace_back(idx.beta, c);
  Element out(ctx);
  const std::vector<int> zero(static_cast<std::size_t>(ctx.n), 0);
  for (const auto& [w, parts] : grouped) {
    const Element folded = fold_word(reduced_word_of(w), zero, y);
    for (const auto& [beta, c] : parts) {
      const GroupIndex t = torus_index(beta, ctx.n);
      for (const auto& [idx, v] : folded.terms()) out.add_term(compose(t, idx, ctx.r), v * c);
    }
  }
  return out;
}

Element mul_along(const Element& x, const WeylWord& word, std::vector<int> beta) {
  const Context& ctx = x.context();
  if (static_cast<int>(beta.size()) != ctx.n) throw Error(ErrorKind::SizeMismatch, "torus part has wrong size");
  for (int& b : beta) b = ((b % ctx.r) + ctx.r) % ctx.r;
  return fold_word(word, beta, x);
}

Element group_mul(const Element& x, const Element& y) {
  if (!(x.context() == y.context())) {
    throw Error(ErrorKind::ContextMismatch, "group_mul: operands live in different algebras");
  }
  const Context& ctx = x.context();
  Element out(ctx);
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add_term(compose(a, b, ctx.r), ca * cb);
  }
  return out;
}

Element ts_inverse(const Context& ctx, int i) {
  return generator_element(ctx, Generator::s(i)) - e_affine(ctx, i) * z_const(ctx);
}

Element rho_element(const Context& ctx, int k) {
  return basis(ctx, {std::vector<int>(static_cast<std::size_t>(ctx.n), 0), rho_power(ctx.n, k)});
}

std::map<std::string, Element> psi_assignment(const Context& ctx) {
  std::map<std::string, Element> out;
  for (int j = 1; j <= ctx.n; ++j) out.emplace("t" + std::to_string(j), generator_element(ctx, Generator::t(j)));
  for (int i = 1; i <= ctx.n - 1; ++i) out.emplace("g" + std::to_string(i), generator_element(ctx, Generator::s(i)));
  Element x1 = rho_element(ctx, 1);
  for (int i = ctx.n - 1; i >= 1; --i) x1 = mul(ts_inverse(ctx, i), x1);
  Element x1_inv = unit(ctx);
  for (int i = 1; i <= ctx.n - 1; ++i) x1_inv = left_mul_gen(Generator::s(i), x1_inv);
  x1_inv = left_mul_gen(Generator::rho_inv(), x1_inv);
  out.emplace("X1", std::move(x1));
  out.emplace("X1^-1", std::move(x1_inv));
  return out;
}

Element x_element(const Context& ctx, int j) {
  check_torus_index(ctx, j);
  Element x = psi_assignment(ctx).at("X1");
  for (int i = 1; i < j; ++i) {
    const Element s = generator_element(ctx, Generator::s(i));
    x = mul(mul(s, x), s);
  }
  return x;
}

}  // namespace affyh
