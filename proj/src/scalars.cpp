#include "affyh/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "affyh/errors.hpp"

namespace affyh {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedRoot: return "MixedRoot";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotInBlock: return "NotInBlock";
    case ErrorKind::EntryOutsideSubalgebra: return "EntryOutsideSubalgebra";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidComposition: return "InvalidComposition";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw Error(ErrorKind::InvalidArgument, "not a rational: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

int euler_phi(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "root order must be >= 1");
  int result = r;
  int m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using IntPoly = std::vector<long>;

// Exact quotient of a by the monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly quotient(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const long c = a[k];
    quotient[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return quotient;
}

IntPoly compute_cyclotomic(int r) {
  IntPoly poly(static_cast<std::size_t>(r) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division p = q * d + rem over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly p, const RatPoly& d) {
  trim(p);
  RatPoly q;
  if (p.size() < d.size()) return {q, p};
  q.assign(p.size() - d.size() + 1, 0);
  const Rational lead = d.back();
  for (std::size_t k = p.size(); k-- >= d.size();) {
    if (p[k] == 0) continue;
    Rational c = p[k] / lead;
    q[k - (d.size() - 1)] = c;
    for (std::size_t j = 0; j < d.size(); ++j) p[k - (d.size() - 1) + j] -= c * d[j];
  }
  trim(p);
  trim(q);
  return {q, p};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "root order must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  IntPoly poly = compute_cyclotomic(r);
  std::lock_guard lock(mutex);
  return cache.emplace(r, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------
// CycRational

CycRational::CycRational(int r) : order_(r), coeffs_(static_cast<std::size_t>(euler_phi(r)), 0) {}

CycRational::CycRational(int r, const Rational& value) : CycRational(r) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycRational CycRational::zeta_power(int r, long k) {
  long e = k % r;
  if (e < 0) e += r;
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, 0);
  p[static_cast<std::size_t>(e)] = 1;
  return cyclotomic_reduce(p, r);
}

bool CycRational::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycRational::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void CycRational::check_same(const CycRational& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorKind::MixedRoot, "cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                                          std::to_string(other.order_));
  }
}

CycRational CycRational::operator-() const {
  CycRational out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycRational& CycRational::operator+=(const CycRational& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& other) {
  check_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator*=(const Rational& other) {
  for (auto& c : coeffs_) c *= other;
  return *this;
}

CycRational& CycRational::operator*=(const CycRational& other) { return *this = *this * other; }

CycRational operator*(const CycRational& a, const CycRational& b) {
  a.check_same(b);
  const std::size_t d = a.coeffs_.size();
  if (d == 1) return CycRational(a.order_, a.coeffs_[0] * b.coeffs_[0]);
  std::vector<Rational> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return cyclotomic_reduce(prod, a.order_);
}

bool operator==(const CycRational& a, const CycRational& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string CycRational::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycRational cyclotomic_reduce(std::span<const Rational> p, int r) {
  const auto& phi_r = cyclotomic_polynomial(r);
  const std::size_t d = phi_r.size() - 1;
  std::vector<Rational> work(p.begin(), p.end());
  for (auto& c : work) c.canonicalize();
  if (work.size() < d) work.resize(d, 0);
  for (std::size_t k = work.size(); k-- > d;) {
    if (work[k] == 0) continue;
    const Rational c = work[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi_r[j] != 0) work[k - d + j] -= c * phi_r[j];
    }
    work[k] = 0;
  }
  work.resize(d);
  CycRational out(r);
  out.coeffs_ = std::move(work);
  return out;
}

CycRational cyc_invert(const CycRational& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta)");
  const int r = a.order();
  const auto& phi_r = cyclotomic_polynomial(r);
  RatPoly r0(phi_r.begin(), phi_r.end());
  RatPoly r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the cyclotomic polynomial is irreducible.
  const Rational g = r0.at(0);
  for (auto& c : s0) c /= g;
  return cyclotomic_reduce(s0, r);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(int field, const Rational& value) : field_(field) {
  if (value != 0) terms_.emplace_back(0, CycRational(field, value));
}

Scalar::Scalar(const CycRational& value) : field_(value.order()) {
  if (!value.is_zero()) terms_.emplace_back(0, value);
}

Scalar Scalar::q_power(int field, int exponent) {
  Scalar s(field);
  s.terms_.emplace_back(exponent, CycRational(field, 1));
  return s;
}

Scalar Scalar::q_minus_qinv(int field) { return q_power(field, 1) - q_power(field, -1); }

CycRational Scalar::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return CycRational(field_);
}

void Scalar::check_same(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorKind::MixedRoot, "scalar fields differ: Q(zeta_" + std::to_string(field_) +
                                          ") vs Q(zeta_" + std::to_string(other.field_) + ")");
  }
}

Scalar Scalar::from_terms(int field, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  Scalar out(field);
  for (auto& t : terms) {
    if (t.second.order() != field) {
      throw Error(ErrorKind::MixedRoot, "coefficient field differs from scalar field");
    }
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second.is_zero(); });
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      CycRational sum = std::move(a->second);
      sum += b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar& Scalar::operator*=(const CycRational& other) {
  if (other.order() != field_) throw Error(ErrorKind::MixedRoot, "coefficient field differs");
  for (auto& t : terms_) t.second = t.second * other;
  std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Scalar(a.field_);
  std::vector<Scalar::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
  }
  return Scalar::from_terms(a.field_, std::move(raw));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*q^" << e;
  }
  return os.str();
}

}  // namespace affyh
