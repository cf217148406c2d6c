#include "hlroots/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "hlroots/json_io.hpp"
#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"
#include "hlroots/ribbon_tableau.hpp"
#include "hlroots/rigged_config.hpp"
#include "hlroots/symfunc.hpp"
#include "hlroots/tuple_tableau.hpp"

namespace hlroots {

namespace {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

Check expect_poly(std::string name, const IntPolynomial& got, const std::string& want) {
  const bool ok = got == parse_polynomial(want);
  return {std::move(name), ok, ok ? "" : "got " + to_string(got) + ", expected " + want};
}

Check expect_text(std::string name, const std::string& got, const std::string& want) {
  const bool ok = got == want;
  return {std::move(name), ok, ok ? "" : "got " + got + ", expected " + want};
}

QSymFunction schur_from_text(const std::vector<std::pair<Partition, std::string>>& terms) {
  QSymFunction f{Basis::schur, terms.empty() ? 0 : terms.front().first.weight(), {}};
  for (const auto& [lambda, text] : terms) f.terms.emplace(lambda, RatPolynomial(parse_polynomial(text)));
  return f;
}

std::vector<Check> example_checks(const BasisTables& tables) {
  std::vector<Check> out;
  const Partition fig{8, 7, 6, 5, 1};
  out.push_back(expect_text("quotient of (8,7,6,5,1) by 3", to_string(k_quotient(fig, 3)),
                            "((2),(3,2),(2))"));
  out.push_back({"core and quotient rebuild (8,7,6,5,1)",
                 from_core_quotient(Partition{}, k_quotient(fig, 3), 3) == fig, ""});
  out.push_back({"quotient of (6,6,6) by 3",
                 k_quotient(Partition{6, 6, 6}, 3) == PartitionTuple{{2}, {2}, {2}}, ""});

  const std::string golden = "3*q^5+17*q^4+33*q^3+31*q^2+18*q+5";
  out.push_back(expect_poly("cospin polynomial (8,7,6,5,1), (3,3,2,1), k=3",
                            cospin_polynomial(fig, {3, 3, 2, 1}, 3), golden));
  out.push_back(expect_poly("inversion polynomial ((2),(3,2),(2)), (3,3,2,1)",
                            inversion_polynomial({{2}, {3, 2}, {2}}, {3, 3, 2, 1}), golden));

  // Q'_{211} as printed, and its eta-reversal Q~'_{211}
  const std::vector<std::pair<Partition, std::string>> q211 = {
      {{1, 1, 1, 1}, "q^3+3*q^2+5*q+3"}, {{2, 2}, "q^3+q^2+2*q"},
      {{2, 1, 1}, "q^3+2*q^2+3*q+1"},  {{3, 1}, "q^3+q^2+q"}, {{4}, "q^3"}};
  const auto qp = hl_q_prime(Partition{2, 1, 1});
  const auto qt = hl_monomial_expansion(Partition{2, 1, 1});
  for (const auto& [mu, text] : q211) {
    const auto want = RatPolynomial(parse_polynomial(text));
    out.push_back({"Q'(2,1,1) at m" + to_string(mu), qp.coefficient(mu, {}) == want, ""});
    out.push_back({"Q~'(2,1,1) at m" + to_string(mu), qt.coefficient(mu, {}) == want.reversed(3), ""});
  }

  const auto s222 = to_schur(hl_monomial_expansion(Partition{2, 2, 2}), tables);
  const auto want222 = schur_from_text({{{2, 2, 2}, "q^6"},
                                        {{3, 2, 1}, "q^5+q^4"},
                                        {{3, 3}, "q^3"},
                                        {{4, 1, 1}, "q^3"},
                                        {{4, 2}, "q^4+q^3+q^2"},
                                        {{5, 1}, "q^2+q"},
                                        {{6}, "1"}});
  out.push_back({"Q~'(2,2,2) in Schur functions", s222 == want222, to_string(s222)});

  const auto at3 = specialize(s222, 3);
  out.push_back(expect_text("Q~'(2,2,2) at a primitive cube root", to_string(at3),
                            "s(6)-s(5,1)+s(4,1,1)+s(3,3)-s(3,2,1)+s(2,2,2)"));
  const auto p3h2 = plethysm_pk(basis_element(Basis::complete, Partition{2}), 3, tables);
  out.push_back({"p3 o h2 in Schur functions equals the specialization",
                 specialize(basis_convert(p3h2, Basis::schur, tables), 3) == at3, ""});
  out.push_back(expect_text("p3 o h2 in power sums",
                            to_string(basis_convert(p3h2, Basis::power, tables)),
                            "1/2*p(6)+1/2*p(3,3)"));
  out.push_back(expect_text("h2 in power sums",
                            to_string(basis_convert(basis_element(Basis::complete, Partition{2}),
                                                    Basis::power, tables)),
                            "1/2*p(2)+1/2*p(1,1)"));

  const auto ex = tuple_from_json(Json::parse("[[1,4],[1,2],[1,2,3,3]]"));
  out.push_back(expect_text("diagonal vector of ((1,4),(1,2),(1,2,3,3))",
                            to_string(diagonal_vector(ex)), "({1,1,1},{2,2,4},{3},{3})"));
  out.push_back(expect_text("diagonal matrix of ((1,4),(1,2),(1,2,3,3))",
                            to_string(diagonal_matrix(ex)), "3 0 0 0\n0 2 0 1\n0 0 1 0\n0 0 1 0\n"));
  out.push_back(expect_text("A_E of the diagonal matrix", to_string(a_e(diagonal_matrix(ex))),
                            "3 3 3 3\n0 2 2 3\n0 0 1 1\n0 0 1 1\n"));
  const auto rc = theta(ex);
  out.push_back(expect_text("theta shape of ((1,4),(1,2),(1,2,3,3))",
                            to_string(rc.config().shapes()), "((3),(3,2),(3,2,1,1),(3,3,1,1))"));
  out.push_back({"cocharge equals inversions on ((1,4),(1,2),(1,2,3,3))",
                 cocharge(rc) == inversions(ex), ""});

  const auto classes = diagonal_classes({{2}, {2}, {4}}, {3, 2, 2, 1});
  const auto big = std::find_if(classes.begin(), classes.end(),
                                [](const DiagonalClass& c) { return c.members.size() == 12; });
  out.push_back({"a 12-member class with q^5+3*q^4+4*q^3+3*q^2+q",
                 big != classes.end() && restricted_inversion_polynomial(*big) ==
                                             parse_polynomial("q^5+3*q^4+4*q^3+3*q^2+q"),
                 ""});
  if (big != classes.end())
    out.push_back({"its theta image is the full rigging fiber",
                   fiber_check({{2}, {2}, {4}}, Partition{3, 2, 2, 1}, big->vector), ""});

  const Configuration ex6({{2, 1}, {3, 1}, {3, 2}, {3, 3, 1}}, Partition{3, 1, 1, 1},
                          Partition{3, 2, 2});
  const auto vac = vacancy(ex6);
  out.push_back({"alpha of ((2,1),(3,1),(3,2),(3,3,1))", alpha(ex6) == 1, ""});
  out.push_back({"vacancies p1 = 1, p2 = 0 on the first shape", vac.p(1, 1) == 1 && vac.p(1, 2) == 0, ""});
  const RiggedConfiguration rc6(ex6, {{{1}, {0}, {}}, {{0, 0}, {1}, {}}, {{0}, {1, 0}, {}}});
  out.push_back({"cocharge of the rigged example", cocharge(rc6) == 4, ""});
  return out;
}

int report(const std::vector<Check>& checks, std::ostream& out) {
  bool ok = true;
  for (const auto& c : checks) {
    out << (c.ok ? "OK   " : "FAIL ") << c.name;
    if (!c.ok && !c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
    ok = ok && c.ok;
  }
  return ok ? 0 : 1;
}

std::vector<Check> rectangular_checks(const BasisTables& tables, std::optional<int> n,
                                      std::optional<int> k, std::ostream& out, bool table) {
  std::vector<std::pair<int, int>> cases;
  if (n && k) {
    cases.emplace_back(*n, *k);
  } else {
    for (int kk = 2; kk <= tables.budget(); ++kk)
      for (int nn = 1; nn * kk <= tables.budget(); ++nn)
        if ((!n || *n == nn) && (!k || *k == kk)) cases.emplace_back(nn, kk);
  }
  std::vector<Check> checks;
  for (auto [nn, kk] : cases) {
    const auto r = verify_rectangular_theorem(nn, kk, tables);
    if (table) {
      out << "n=" << nn << " k=" << kk << '\n';
      for (const auto& t : r.terms)
        out << "  m" << to_string(t.mu) << "  expected " << t.expected << "  got " << t.actual
            << (t.ok ? "" : "  MISMATCH") << '\n';
    }
    std::ostringstream detail;
    detail << "tilde " << r.tilde_ok << ", sign " << r.sign_ok << ", eta " << r.eta_sign_ok
           << ", dichotomy " << r.dichotomy_ok;
    checks.push_back({"rectangle n=" + std::to_string(nn) + " k=" + std::to_string(kk), r.ok(),
                      detail.str()});
  }
  return checks;
}

std::vector<Check> column_checks(const BasisTables& tables, std::optional<int> n,
                                 std::optional<int> k, std::ostream& out, bool table) {
  std::vector<std::pair<int, int>> cases;
  if (n && k)
    cases.emplace_back(*n, *k);
  else
    cases = {{1, 2}, {2, 2}, {1, 3}};
  std::vector<Check> checks;
  for (auto [nn, kk] : cases) {
    const auto r = verify_column_case(nn, kk, tables);
    if (table) {
      out << "n=" << nn << " k=" << kk << '\n';
      for (const auto& t : r.terms)
        out << "  m" << to_string(t.mu) << "  expected " << t.expected << "  got " << t.actual
            << (t.ok ? "" : "  MISMATCH") << '\n';
    }
    checks.push_back({"column n=" + std::to_string(nn) + " k=" + std::to_string(kk), r.ok, ""});
  }
  return checks;
}

void print(std::ostream& out, bool json, const Json& j, const std::string& text) {
  if (json)
    out << j.dump(2) << '\n';
  else
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ribbon tableaux, rigged configurations and Hall-Littlewood functions at roots of unity"};
  app.require_subcommand(1);
  bool json = false;
  int budget = 8;
  int status = 0;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };

  // cospin
  std::string shape_text;
  std::string weight_text;
  int k = 1;
  auto* cospin_cmd = app.add_subcommand("cospin", "cospin polynomial of ribbon tableaux");
  cospin_cmd->add_option("--shape", shape_text, "outer shape, e.g. 8,7,6,5,1")->required();
  cospin_cmd->add_option("--weight", weight_text, "ribbons per label, e.g. 3,3,2,1")->required();
  cospin_cmd->add_option("--k", k, "ribbon length")->required();
  add_json(cospin_cmd);
  cospin_cmd->callback([&] {
    const auto lambda = parse_partition(shape_text);
    const auto mu = parse_int_list(weight_text);
    const auto g = cospin_polynomial(lambda, mu, k);
    print(out, json,
          {{"shape", to_json(lambda)}, {"weight", mu}, {"k", k}, {"polynomial", to_json(g)},
           {"text", to_string(g)}},
          to_string(g));
  });

  // inv-poly
  std::string tuple_text;
  auto* inv_cmd = app.add_subcommand("inv-poly", "inversion polynomial of tuples of tableaux");
  inv_cmd->add_option("--shape-tuple", tuple_text, "JSON list of partitions, e.g. [[2],[3,2],[2]]")
      ->required();
  inv_cmd->add_option("--weight", weight_text, "label multiplicities")->required();
  add_json(inv_cmd);
  inv_cmd->callback([&] {
    const auto shape = partition_tuple_from_json(Json::parse(tuple_text));
    const auto mu = parse_int_list(weight_text);
    const auto p = inversion_polynomial(shape, mu);
    print(out, json, {{"shape", to_json(shape)}, {"weight", mu}, {"polynomial", to_json(p)},
                      {"text", to_string(p)}},
          to_string(p));
  });

  // hl
  std::string lambda_text;
  std::string basis_text = "m";
  std::string route_text = "inversion";
  bool q_prime = false;
  int at = 0;
  auto* hl_cmd = app.add_subcommand("hl", "modified Hall-Littlewood function");
  hl_cmd->add_option("--lambda", lambda_text, "index partition")->required();
  hl_cmd->add_option("--basis", basis_text, "output basis: m, h, e, p or s");
  hl_cmd->add_option("--route", route_text, "inversion, cospin or fermionic");
  hl_cmd->add_flag("--q-prime", q_prime, "unmodified normalization q^eta f(1/q)");
  hl_cmd->add_option("--at", at, "evaluate q at a primitive root of this order");
  hl_cmd->add_option("--budget", budget, "largest degree of the basis tables");
  add_json(hl_cmd);
  hl_cmd->callback([&] {
    const auto lambda = parse_partition(lambda_text);
    if (lambda.weight() > budget)
      throw std::out_of_range("degree " + std::to_string(lambda.weight()) +
                              " exceeds the budget " + std::to_string(budget));
    const BasisTables tables(lambda.weight());
    HlRoute route = HlRoute::inversion;
    if (route_text == "cospin")
      route = HlRoute::cospin;
    else if (route_text == "fermionic")
      route = HlRoute::fermionic;
    else if (route_text != "inversion")
      throw std::invalid_argument("unknown route '" + route_text + "'");
    auto f = hl_monomial_expansion(lambda, route);
    if (q_prime)
      for (auto& [mu, c] : f.terms) c = c.reversed(eta(lambda));
    f = basis_convert(f, parse_basis(basis_text), tables);
    if (at > 0) {
      const auto v = specialize(f, at);
      print(out, json, to_json(v), to_string(v));
    } else {
      print(out, json, to_json(f), to_string(f));
    }
  });

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "rigged configuration of a tuple of rows");
  theta_cmd->add_option("--tuple", tuple_text, "JSON tuple, e.g. [[1,4],[1,2],[1,2,3,3]]")->required();
  theta_cmd->add_option("--weight", weight_text, "expected weight");
  add_json(theta_cmd);
  theta_cmd->callback([&] {
    const auto t = tuple_from_json(Json::parse(tuple_text));
    if (!weight_text.empty() && parse_int_list(weight_text) != t.weight())
      throw std::invalid_argument("tuple weight differs from --weight");
    const auto rc = theta(t);
    Json j = to_json(rc);
    j["cocharge"] = cocharge(rc);
    j["inversions"] = inversions(t);
    print(out, json, j,
          to_string(rc) + "inversions " + std::to_string(inversions(t)) + "\n");
  });

  // psi
  std::string core_text;
  int index = 0;
  auto* psi_cmd = app.add_subcommand("psi", "Stanton-White correspondence");
  psi_cmd->add_option("--shape", shape_text, "outer shape (forward direction)");
  psi_cmd->add_option("--weight", weight_text, "ribbons per label (forward direction)");
  psi_cmd->add_option("--k", k, "ribbon length")->required();
  psi_cmd->add_option("--index", index, "only the i-th tableau, 1-based");
  psi_cmd->add_option("--tuple", tuple_text, "JSON tuple (inverse direction)");
  psi_cmd->add_option("--core", core_text, "k-core for the inverse direction");
  add_json(psi_cmd);
  psi_cmd->callback([&] {
    if (!tuple_text.empty()) {
      const auto t = tuple_from_json(Json::parse(tuple_text));
      const auto r = stanton_white_inverse(t, parse_partition(core_text), k);
      print(out, json, to_json(r), to_string(r));
      return;
    }
    if (shape_text.empty() || weight_text.empty())
      throw std::invalid_argument("psi needs --shape and --weight, or --tuple");
    const auto tableaux = enumerate_ribbon_tableaux(parse_partition(shape_text),
                                                    parse_int_list(weight_text), k);
    if (tableaux.empty()) {
      print(out, json, Json::array(), "no tableaux");
      return;
    }
    if (index < 0 || index > static_cast<int>(tableaux.size()))
      throw std::out_of_range("--index outside 1.." + std::to_string(tableaux.size()));
    const auto cs = cospins(tableaux);
    Json j = Json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
      if (index > 0 && static_cast<int>(i) + 1 != index) continue;
      const auto image = stanton_white(tableaux[i]);
      j.push_back({{"tableau", to_json(tableaux[i])}, {"cospin", cs[i]},
                   {"tuple", to_json(image)}, {"offsets", image.content_offsets()},
                   {"inversions", inversions(image)}});
      text << "#" << i + 1 << "  cospin " << cs[i] << "  tuple " << to_string(image)
           << "  inversions " << inversions(image) << '\n'
           << to_string(tableaux[i]);
    }
    print(out, json, j, text.str());
  });

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "diagonal classes of tuples of rows");
  classes_cmd->add_option("--shape-tuple", tuple_text, "JSON list of one-row partitions")->required();
  classes_cmd->add_option("--weight", weight_text, "label multiplicities")->required();
  add_json(classes_cmd);
  classes_cmd->callback([&] {
    const auto shape = partition_tuple_from_json(Json::parse(tuple_text));
    const auto classes = diagonal_classes(shape, parse_int_list(weight_text));
    Json j = Json::array();
    std::ostringstream text;
    for (const auto& c : classes) {
      const auto p = restricted_inversion_polynomial(c);
      j.push_back({{"vector", to_json(c.vector)}, {"size", c.members.size()},
                   {"polynomial", to_json(p)}});
      text << to_string(c.vector) << "  " << c.members.size() << "  " << to_string(p) << '\n';
    }
    print(out, json, j, text.str());
  });

  // fermionic
  std::string mu_text;
  std::string config_text;
  bool list = false;
  auto* ferm_cmd = app.add_subcommand("fermionic", "fermionic formula over (lambda, mu)-configurations");
  ferm_cmd->add_option("--lambda", lambda_text, "first context partition")->required();
  ferm_cmd->add_option("--mu", mu_text, "second context partition")->required();
  ferm_cmd->add_option("--config", config_text, "JSON shapes: restrict to one configuration");
  ferm_cmd->add_flag("--list", list, "list the rigged configurations");
  add_json(ferm_cmd);
  ferm_cmd->callback([&] {
    const auto lambda = parse_partition(lambda_text);
    const auto mu = parse_partition(mu_text);
    std::vector<Configuration> configs;
    if (config_text.empty())
      configs = enumerate_configurations(lambda, mu);
    else
      configs.emplace_back(partition_tuple_from_json(Json::parse(config_text)), lambda, mu);
    IntPolynomial total_poly;
    Json j = Json::object();
    Json listed = Json::array();
    std::ostringstream text;
    for (const auto& c : configs) {
      total_poly += fermionic_restricted(c);
      if (!list) continue;
      for (const auto& rc : enumerate_riggings(c)) {
        Json item = to_json(rc);
        item["cocharge"] = cocharge(rc);
        listed.push_back(item);
        text << to_string(rc) << '\n';
      }
    }
    j["polynomial"] = to_json(total_poly);
    j["text"] = to_string(total_poly);
    if (list) j["rigged_configurations"] = listed;
    text << to_string(total_poly);
    print(out, json, j, text.str());
  });

  // verify
  std::string suite = "all";
  std::optional<int> vn;
  std::optional<int> vk;
  auto* verify_cmd = app.add_subcommand("verify", "rerun the worked examples and the root-of-unity checks");
  verify_cmd->add_option("--suite", suite, "examples, rectangular, column or all")
      ->check(CLI::IsMember({"examples", "rectangular", "column", "all"}));
  verify_cmd->add_option("--n", vn, "row length");
  verify_cmd->add_option("--k", vk, "root order");
  verify_cmd->add_option("--budget", budget, "largest degree of the basis tables");
  verify_cmd->callback([&] {
    const BasisTables tables(budget);
    std::vector<Check> checks;
    const bool table = vn.has_value() || vk.has_value();
    if (suite == "examples" || suite == "all") {
      auto c = example_checks(tables);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (suite == "rectangular" || suite == "all") {
      auto c = rectangular_checks(tables, vn, vk, out, table);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (suite == "column" || suite == "all") {
      auto c = column_checks(tables, vn, vk, out, table);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    status = report(checks, out);
    out << (status == 0 ? "OK" : "FAILED") << '\n';
  });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace hlroots
