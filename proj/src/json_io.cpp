#include "affyh/json_io.hpp"

#include "affyh/errors.hpp"

namespace affyh {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::InvalidArgument, "malformed JSON: " + what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_integer()) malformed(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const CycRational& c) {
  Json out = Json::array();
  for (const auto& v : c.coeffs()) out.push_back(to_string(v));
  return out;
}

CycRational cyc_from_json(const Json& j, int field) {
  if (!j.is_array()) malformed("cyc must be an array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& v : j) {
    if (v.is_string()) {
      coeffs.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      coeffs.emplace_back(v.get<long>());
    } else {
      malformed("cyc entries must be strings");
    }
  }
  return cyclotomic_reduce(coeffs, field);
}

Json to_json(const Scalar& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json{{"qexp", e}, {"cyc", to_json(c)}});
  return Json{{"terms", terms}};
}

Scalar scalar_from_json(const Json& j, int field) {
  std::vector<Scalar::Term> terms;
  for (const auto& t : field_of(j, "terms")) terms.emplace_back(int_field(t, "qexp"), cyc_from_json(field_of(t, "cyc"), field));
  return Scalar::from_terms(field, std::move(terms));
}

Json to_json(const GroupIndex& g) {
  return Json{{"beta", g.beta}, {"lambda", g.w.lambda}, {"sigma", g.w.sigma.images()}};
}

GroupIndex index_from_json(const Json& j) {
  GroupIndex g{int_list(field_of(j, "beta"), "beta"), {int_list(field_of(j, "lambda"), "lambda"), Permutation()}};
  g.w.sigma = Permutation(int_list(field_of(j, "sigma"), "sigma"));
  if (g.beta.size() != g.w.lambda.size() || static_cast<int>(g.beta.size()) != g.w.sigma.size()) {
    throw Error(ErrorKind::SizeMismatch, "index vectors of different lengths");
  }
  return g;
}

Json to_json(const Element& e) {
  const Context& c = e.context();
  Json out{{"r", c.r}, {"n", c.n}};
  if (c.field != c.r) out["field"] = c.field;
  Json terms = Json::array();
  for (const auto& [idx, v] : e.canonical_terms()) terms.push_back(Json{{"index", to_json(idx)}, {"coeff", to_json(v)}});
  out["terms"] = terms;
  return out;
}

Element element_from_json(const Json& j) {
  const int r = int_field(j, "r");
  const int n = int_field(j, "n");
  const int field = j.contains("field") ? int_field(j, "field") : r;
  const Context ctx(r, n, field);
  Element out(ctx);
  for (const auto& t : field_of(j, "terms")) {
    GroupIndex g = index_from_json(field_of(t, "index"));
    if (g.rank() != n) throw Error(ErrorKind::SizeMismatch, "index rank differs from n");
    for (int& b : g.beta) {
      if (b < 0 || b >= r) throw Error(ErrorKind::IndexOutOfRange, "beta entries must lie in [0, r)");
    }
    out.add_term(g, scalar_from_json(field_of(t, "coeff"), field));
  }
  return out;
}

Json to_json(const Report& rep) {
  Json results = Json::array();
  for (const auto& res : rep.results) {
    Json item{{"label", res.label}, {"pass", res.pass}, {"instances", res.instances}};
    if (!res.pass) {
      if (!res.failed_instance.empty()) item["failed_instance"] = res.failed_instance;
      if (res.diff) item["diff"] = to_json(*res.diff);
    }
    results.push_back(std::move(item));
  }
  return Json{{"presentation", rep.name}, {"r", rep.r}, {"n", rep.n}, {"pass", rep.pass()}, {"results", results}};
}

Json to_json(const VandermondeData& v) {
  auto matrix = [](const std::vector<std::vector<CycRational>>& m) {
    Json out = Json::array();
    for (const auto& row : m) {
      Json line = Json::array();
      for (const auto& x : row) line.push_back(x.to_string());
      out.push_back(line);
    }
    return out;
  };
  return Json{{"r", v.r}, {"A", matrix(v.A)}, {"Delta", v.delta.to_string()}, {"B", matrix(v.B)}, {"F", matrix(v.F)}};
}

Json to_json(const BlockMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
      if (m.entries[i][j].is_zero()) continue;
      entries.push_back(Json{{"row", i + 1}, {"col", j + 1}, {"entry", to_json(m.entries[i][j])}});
    }
  }
  return Json{{"mu", m.mu}, {"size", m.size()}, {"entries", entries}};
}

}  // namespace affyh
