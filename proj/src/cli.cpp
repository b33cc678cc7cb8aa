#include "affyh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "affyh/acceptance.hpp"
#include "affyh/errors.hpp"
#include "affyh/json_io.hpp"
#include "affyh/parser.hpp"

namespace affyh {

namespace {

constexpr int kMaxR = 6;
constexpr int kMaxN = 4;
constexpr int kMaxL = 6;

struct Options {
  int r = 2;
  int n = 2;
  int length_bound = 3;
  int rho_bound = 1;
  std::uint64_t seed = 1;
  std::string presentation;
  std::string pair = "Phi-Psi";
  std::string lhs, rhs, expr;
  std::string json_in, json_out;
  bool images = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_caps(const Options& o, bool needs_n) {
  if (o.r < 1 || o.r > kMaxR) throw UsageError("r must lie in 1.." + std::to_string(kMaxR));
  if (needs_n && (o.n < 2 || o.n > kMaxN)) throw UsageError("n must lie in 2.." + std::to_string(kMaxN));
  if (o.length_bound < 0 || o.length_bound > kMaxL) throw UsageError("length bound must lie in 0.." + std::to_string(kMaxL));
  if (o.rho_bound < 0) throw UsageError("rho bound must be nonnegative");
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "malformed JSON in " + path + ": " + e.what());
  }
}

SymbolScope scope_for(const std::string& name, int r, int n) {
  return name.empty() || name == "universal" ? universal_scope(r, n) : presentation_scope(name, r, n);
}

Element expression_element(const std::string& src, const Options& o, const Context& c, const Assignment& u) {
  return evaluate_source(src, scope_for(o.presentation, o.r, o.n), u, c);
}

// {"name", "scope", "relations": [{"family", "instance", "lhs", "rhs"}]};
// sides are expressions in the given scope.
Presentation presentation_from_json(const Json& j, int r, int n) {
  Presentation p;
  p.name = j.value("name", std::string("custom"));
  p.scope = j.value("scope", std::string("universal"));
  p.r = r;
  p.n = n;
  const SymbolScope scope = scope_for(p.scope, r, n);
  if (!j.contains("relations") || !j.at("relations").is_array()) throw Error(ErrorKind::InvalidArgument, "missing relations array");
  int count = 0;
  for (const auto& rel : j.at("relations")) {
    Relation out{rel.value("family", std::string("relations")), rel.value("instance", std::to_string(++count)),
                 FormalExpression(scope.field), FormalExpression(scope.field), rel.value("lhs", std::string("1")),
                 rel.value("rhs", std::string("1"))};
    out.lhs = parse_expression(out.lhs_src, scope);
    out.rhs = parse_expression(out.rhs_src, scope);
    if (std::find(p.families.begin(), p.families.end(), out.family) == p.families.end()) p.families.push_back(out.family);
    p.relations.push_back(std::move(out));
  }
  return p;
}

int cmd_relations(const Options& o, Json& result) {
  check_caps(o, true);
  const Context c(o.r, o.n);
  Presentation p;
  if (!o.json_in.empty()) {
    p = presentation_from_json(read_json(o.json_in), o.r, o.n);
  } else {
    if (o.presentation.empty()) throw UsageError("relations needs --presentation or --json-in");
    p = builtin(o.presentation, o.r, o.n);
  }
  const Report rep = check_relations(p, universal_assignment(c), c);
  result = to_json(rep);
  return rep.pass() ? 0 : 1;
}

int cmd_mul(const Options& o, Json& result) {
  check_caps(o, true);
  Element a(Context(o.r, o.n)), b(Context(o.r, o.n));
  if (!o.json_in.empty()) {
    const Json j = read_json(o.json_in);
    if (!j.contains("lhs") || !j.contains("rhs")) throw Error(ErrorKind::InvalidArgument, "mul input needs lhs and rhs");
    a = element_from_json(j.at("lhs"));
    b = element_from_json(j.at("rhs"));
  } else {
    if (o.lhs.empty() || o.rhs.empty()) throw UsageError("mul needs --lhs and --rhs or --json-in");
    const Context c(o.r, o.n);
    const Assignment u = universal_assignment(c);
    a = expression_element(o.lhs, o, c, u);
    b = expression_element(o.rhs, o, c, u);
  }
  result = to_json(mul(a, b));
  return 0;
}

int cmd_normal_form(const Options& o, Json& result) {
  check_caps(o, true);
  if (!o.json_in.empty()) {
    result = to_json(element_from_json(read_json(o.json_in)));
    return 0;
  }
  if (o.expr.empty()) throw UsageError("normal-form needs --expr or --json-in");
  const Context c(o.r, o.n);
  result = to_json(expression_element(o.expr, o, c, universal_assignment(c)));
  return 0;
}

int cmd_iso_check(const Options& o, Json& result) {
  check_caps(o, true);
  const Context c(o.r, o.n);
  Report rep;
  if (o.pair == "Phi-Psi") {
    rep = verify_inverse_pair("Phi-Psi", phi_morphism(o.r, o.n), psi_morphism(o.r, o.n), im_assignment(c), yokonuma_assignment(c), c);
  } else if (o.pair == "phi-psi") {
    rep = verify_inverse_pair("phi-psi", phi_c_morphism(o.r, o.n), psi_c_morphism(o.r, o.n), im_assignment(c), psi_c_assignment(c), c);
    rep.results.push_back({"phi_after_psi_identity", verify_phi_psi_identity(c), o.n + 1, std::nullopt, ""});
  } else {
    throw UsageError("--pair must be Phi-Psi or phi-psi");
  }
  result = to_json(rep);
  return rep.pass() ? 0 : 1;
}

int cmd_decompose(const Options& o, Json& result) {
  check_caps(o, true);
  const Context c(o.r, o.n);
  const std::vector<int> zero(static_cast<std::size_t>(o.n), 0);
  std::vector<std::pair<std::string, GroupIndex>> gens;
  for (int i = 0; i < o.n; ++i) gens.emplace_back("Ts" + std::to_string(i), generator(Generator::s(i), o.r, o.n));
  gens.emplace_back("Trho", generator(Generator::rho(), o.r, o.n));
  gens.emplace_back("Trho^-1", generator(Generator::rho_inv(), o.r, o.n));
  for (int j = 1; j <= o.n; ++j) gens.emplace_back("t" + std::to_string(j), generator(Generator::t(j), o.r, o.n));

  bool pass = true;
  Json blocks = Json::array();
  for (const auto& mu : compositions(o.r, o.n)) {
    const CosetData cd = coset_data(o.r, mu);
    Json reps = Json::array(), chars = Json::array();
    for (const auto& p : cd.reps) reps.push_back(p.images());
    for (const auto& chi : cd.chars) chars.push_back(chi.c);
    Json block{{"mu", mu}, {"m", cd.size()}, {"reps", reps}, {"chars", chars}};
    if (o.images) {
      Json images = Json::array();
      for (int k = 0; k < cd.size(); ++k) {
        const Element e = idempotent_E(c, cd.chars[static_cast<std::size_t>(k)]);
        for (const auto& [name, g] : gens) {
          const Element x = mul(e, basis(c, g));
          const BlockMatrix m = phi_mu(c, mu, x);
          const bool back = psi_mu(c, m) == x;
          pass = pass && back;
          images.push_back(Json{{"k", k + 1}, {"generator", name}, {"round_trip", back}, {"matrix", to_json(m)}});
        }
      }
      block["images"] = images;
    }
    blocks.push_back(std::move(block));
  }
  result = Json{{"r", o.r}, {"n", o.n}, {"compositions", blocks.size()}, {"blocks", blocks}};
  if (o.images) result["pass"] = pass;
  return pass ? 0 : 1;
}

int cmd_basis(const Options& o, Json& result) {
  check_caps(o, true);
  Json elements = Json::array();
  const auto ball = enumerate_bounded(o.n, o.length_bound, o.rho_bound);
  for (const auto& w : ball) {
    const WeylWord word = reduced_word_of(w);
    elements.push_back(Json{{"lambda", w.lambda},
                            {"sigma", w.sigma.images()},
                            {"rho_degree", word.k},
                            {"reduced_word", word.word},
                            {"length", length(w)}});
  }
  long tori = 1;
  for (int j = 0; j < o.n; ++j) tori *= o.r;
  result = Json{{"r", o.r},
                {"n", o.n},
                {"length_bound", o.length_bound},
                {"rho_bound", o.rho_bound},
                {"weyl_count", ball.size()},
                {"torus_count", tori},
                {"count", tori * static_cast<long>(ball.size())},
                {"elements", elements}};
  return 0;
}

int cmd_vandermonde(const Options& o, Json& result) {
  check_caps(o, false);
  result = to_json(vandermonde(o.r));
  return 0;
}

int cmd_selftest(const Options& o, Json& result) {
  const auto res = run_acceptance(o.seed);
  result = to_json(res, o.seed);
  return result.at("pass").get<bool>() ? 0 : 1;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact kernel for affine Yokonuma-Hecke algebras", "affyh"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-r,--r", o.r, "order of the torus generators");
    sub->add_option("-n,--n", o.n, "rank");
    sub->add_option("--json-out", o.json_out, "write the JSON result to FILE");
  };
  using Handler = int (*)(const Options&, Json&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;

  auto* relations = app.add_subcommand("relations", "check a relation suite in the kernel");
  common(relations);
  relations->add_option("--presentation", o.presentation, "built-in presentation name");
  relations->add_option("--json-in", o.json_in, "custom presentation file");
  verbs.emplace_back(relations, cmd_relations);

  auto* mulc = app.add_subcommand("mul", "multiply two elements");
  common(mulc);
  mulc->add_option("--lhs", o.lhs, "left factor expression");
  mulc->add_option("--rhs", o.rhs, "right factor expression");
  mulc->add_option("--presentation", o.presentation, "symbol scope for the expressions");
  mulc->add_option("--json-in", o.json_in, "file with Element JSON under lhs and rhs");
  verbs.emplace_back(mulc, cmd_mul);

  auto* nf = app.add_subcommand("normal-form", "expand an expression in the T-basis");
  common(nf);
  nf->add_option("--expr", o.expr, "expression");
  nf->add_option("--presentation", o.presentation, "symbol scope for the expression");
  nf->add_option("--json-in", o.json_in, "Element JSON file to canonicalize");
  verbs.emplace_back(nf, cmd_normal_form);

  auto* iso = app.add_subcommand("iso-check", "verify an inverse pair of presentations");
  common(iso);
  iso->add_option("--pair", o.pair, "Phi-Psi or phi-psi");
  verbs.emplace_back(iso, cmd_iso_check);

  auto* dec = app.add_subcommand("decompose", "block decomposition data");
  common(dec);
  dec->add_flag("--images", o.images, "include the images of E_chi T_g for every generator");
  verbs.emplace_back(dec, cmd_decompose);

  auto* bas = app.add_subcommand("basis", "enumerate basis indices up to a length bound");
  common(bas);
  bas->add_option("--length-bound", o.length_bound, "maximal length");
  bas->add_option("--rho-bound", o.rho_bound, "maximal |rho degree|");
  verbs.emplace_back(bas, cmd_basis);

  auto* van = app.add_subcommand("vandermonde", "Vandermonde data A, Delta, B, F");
  common(van);
  verbs.emplace_back(van, cmd_vandermonde);

  auto* self = app.add_subcommand("selftest", "run the acceptance grid");
  self->add_option("--seed", o.seed, "seed for the sampled checks");
  self->add_option("--json-out", o.json_out, "write the JSON result to FILE");
  verbs.emplace_back(self, cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  Json result;
  int status = 2;
  try {
    for (const auto& [sub, handler] : verbs) {
      if (sub->parsed()) status = handler(o, result);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    out << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    Json j = error_json("ParseError", e.what());
    j["error"]["position"] = e.position();
    out << j.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    out << error_json(to_string(e.kind()), e.what()).dump(2) << "\n";
    return 2;
  }

  const std::string text = result.dump(2) + "\n";
  if (o.json_out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.json_out);
    if (!file) {
      err << "cannot write " << o.json_out << "\n";
      return 2;
    }
    file << text;
  }
  return status;
}

}  // namespace affyh
