// mirror-hg: exact verification and data export for the mirror-symmetry
// hypergeometric series toolkit.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mhg/asymptotics.hpp"
#include "mhg/conjecture.hpp"
#include "mhg/errors.hpp"
#include "mhg/hg_series.hpp"
#include "mhg/ip_family.hpp"
#include "mhg/mirror_checks.hpp"
#include "mhg/symbolic.hpp"

using json = nlohmann::ordered_json;
using namespace mhg;

namespace {

constexpr const char* kVersion = "0.1.0";

json report_to_json(const Report& r) {
  json j;
  j["check-name"] = r.check;
  j["n"] = r.n;
  j["order"] = r.order;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.failure) {
    json f;
    f["degree"] = r.failure->degree;
    if (!r.failure->where.empty()) f["where"] = r.failure->where;
    f["expected"] = r.failure->expected;
    f["actual"] = r.failure->actual;
    j["first-failure"] = f;
  }
  if (!r.details.empty()) {
    json d;
    for (const auto& [k, v] : r.details) d[k] = v;
    j["details"] = d;
  }
  return j;
}

json ratfun_to_json(const RatFun& f) {
  json num = json::array(), den = json::array();
  for (int i = 0; i <= f.num().degree(); ++i) num.push_back(f.num().coeff(i).str());
  for (int i = 0; i <= f.den().degree(); ++i) den.push_back(f.den().coeff(i).str());
  return json{{"num", num}, {"den", den}};
}

json qseries_to_json(const XSeries<Rational>& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(s[d].str());
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json wseries_to_json(const XSeries<RatFun>& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.order(); ++d) coeffs.push_back(ratfun_to_json(s[d]));
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json lpoly_to_json(const LPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"L", e}, {"coeff", c.str()}});
  return terms;
}

json polyq_to_json(const PolyQ& p) {
  json coeffs = json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).str());
  return coeffs;
}

struct RunConfig {
  std::vector<int> ns;       // explicit n list (empty = suite defaults)
  int x_order = -1;          // -1 = suite default (or env override)
  int smax = -1;
  int kmax = -1;
  std::string suite = "all";
  std::string format = "pretty";
  std::string out;
  int jobs = 1;
  int env_order = -1;
};

int pick_order(const RunConfig& cfg, int suite_default) {
  if (cfg.x_order >= 0) return cfg.x_order;
  if (cfg.env_order >= 0) return cfg.env_order;
  return suite_default;
}

std::vector<int> pick_ns(const RunConfig& cfg, int lo, int hi) {
  if (!cfg.ns.empty()) return cfg.ns;
  std::vector<int> r;
  for (int n = lo; n <= hi; ++n) r.push_back(n);
  return r;
}

struct Task {
  std::string suite;
  int n;
  std::function<std::vector<Report>()> run;
};

std::vector<Report> run_tasks(std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Report>> slots(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        slots[i] = tasks[i].run();
      } catch (const std::exception& e) {
        CheckFailure cf;
        cf.expected = "no exception";
        cf.actual = e.what();
        slots[i] = {Report::fail(tasks[i].suite + "-exception", tasks[i].n, 0, std::move(cf))};
      }
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<Report> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

void add_suite_tasks(const std::string& suite, const RunConfig& cfg, std::vector<Task>& tasks) {
  if (suite == "periodicity") {
    int order = pick_order(cfg, 12);
    for (int n : pick_ns(cfg, 1, 8))
      tasks.push_back({suite, n, [n, order] {
                         return std::vector<Report>{verify_periodicity(n, order)};
                       }});
  } else if (suite == "identities") {
    int order = pick_order(cfg, 20);
    for (int n : pick_ns(cfg, 2, 8))
      tasks.push_back({suite, n, [n, order] { return verify_i_identities(n, order); }});
  } else if (suite == "picard-fuchs") {
    int order = pick_order(cfg, 15);
    for (int n : pick_ns(cfg, 2, 8))
      tasks.push_back({suite, n, [n, order] { return verify_picard_fuchs(n, order); }});
  } else if (suite == "descent") {
    int order = pick_order(cfg, 12);
    for (int n : pick_ns(cfg, 3, 6))
      tasks.push_back({suite, n, [n, order] { return verify_descent_closed_forms(n, order); }});
  } else if (suite == "hat") {
    int order = pick_order(cfg, 10);
    for (int n : pick_ns(cfg, 2, 6))
      tasks.push_back({suite, n, [n, order] { return verify_hat_congruence(n, order); }});
  } else if (suite == "asymptotics") {
    int order = pick_order(cfg, 15);
    int smax = cfg.smax >= 0 ? cfg.smax : 1;
    for (int n : pick_ns(cfg, 2, 8))
      tasks.push_back({suite, n, [n, order, smax] {
                         std::vector<Report> out;
                         try {
                           AsymptoticExpansion ae = expand_log_f(n, order, std::max(1, smax));
                           out.push_back(Report::ok("regularity", n, order));
                           auto cs = verify_asymptotic_closed_forms(ae);
                           out.insert(out.end(), cs.begin(), cs.end());
                         } catch (const RegularityFailure& e) {
                           CheckFailure cf;
                           cf.degree = e.degree;
                           cf.expected = "w-degree <= 1";
                           cf.actual = e.what();
                           out.push_back(Report::fail("regularity", n, order, std::move(cf)));
                         }
                         return out;
                       }});
  } else if (suite == "table3") {
    for (int n : pick_ns(cfg, 3, 5)) {
      if (n < 3 || n > 5)
        throw CLI::ValidationError("--n", "table3 is tabulated for n in {3, 4, 5}");
    }
    for (int n : pick_ns(cfg, 3, 5))
      tasks.push_back({suite, n, [n] {
                         return std::vector<Report>{verify_phi_table(n)};
                       }});
  } else if (suite == "lemma24") {
    int order = pick_order(cfg, 15);
    for (int n : pick_ns(cfg, 2, 6))
      tasks.push_back({suite, n, [n, order] {
                         return std::vector<Report>{verify_h_log_identity(n, order)};
                       }});
  } else if (suite == "phi-crosscheck") {
    int order = pick_order(cfg, 12);
    int smax = cfg.smax >= 0 ? cfg.smax : 6;
    for (int n : pick_ns(cfg, 3, 8))
      tasks.push_back({suite, n, [n, order, smax] {
                         std::vector<Report> out;
                         out.push_back(check_h_tables(n, 12));
                         auto lops = check_l_operators(n);
                         out.insert(out.end(), lops.begin(), lops.end());
                         PhiSolution sol = solve_phi_recursion(n, smax);
                         out.push_back(verify_phi_structure(sol));
                         auto lows = verify_phi_low_closed_forms(sol);
                         out.insert(out.end(), lows.begin(), lows.end());
                         out.push_back(cross_check_phi(sol, expand_log_f(n, order, smax)));
                         return out;
                       }});
  } else if (suite == "symbolic") {
    int smax = cfg.smax >= 0 ? cfg.smax : 4;
    std::vector<int> ns = pick_ns(cfg, 3, 8);
    tasks.push_back({suite, 0, [smax, ns] {
                       std::vector<Report> out;
                       SymPhiSolution sol = solve_symbolic_phi(smax);
                       for (int n : ns) {
                         out.push_back(verify_symbolic_specialization(sol, n, smax));
                         out.push_back(verify_symbolic_operator_specialization(n, std::min(4, smax + 1)));
                       }
                       DenominatorReport rep = symbolic_denominator_report(sol);
                       Report den = Report::ok("symbolic-denominators", 0, smax);
                       den.details["all_powers_of_a"] = rep.all_powers_of_a ? "true" : "false";
                       if (!rep.all_powers_of_a) {
                         for (const auto& e : rep.entries)
                           if (!e.power_of_a)
                             den.details["offender s=" + std::to_string(e.s)] = e.denominator;
                       }
                       out.push_back(den);
                       return out;
                     }});
  } else if (suite == "conjecture") {
    int order = pick_order(cfg, 12);
    int kmax = cfg.kmax >= 0 ? cfg.kmax : 5;
    for (int n : pick_ns(cfg, 3, 10))
      tasks.push_back({suite, n, [n, kmax, order] {
                         return std::vector<Report>{verify_pk_residuals(n, kmax, order)};
                       }});
    tasks.push_back({suite, 0, [kmax, order] {
                       std::vector<Report> out;
                       std::vector<int> nodes;
                       for (int n = 3; n <= 14; ++n) nodes.push_back(n);
                       std::vector<PkInterpolation> interp;
                       for (int k = 0; k <= std::min(kmax, 5); ++k)
                         interp.push_back(interpolate_pk(k, nodes, order));
                       out.push_back(verify_pk_displays(interp));
                       out.push_back(verify_pk_leading_terms(interp));
                       out.push_back(verify_pk_divisibility(interp));
                       out.push_back(verify_ek_identity(7, 12));
                       return out;
                     }});
  } else {
    throw CLI::ValidationError("--suite", "unknown suite: " + suite);
  }
}

int emit(const RunConfig& cfg, const json& doc, const std::string& pretty_text) {
  std::ostringstream body;
  if (cfg.format == "json")
    body << doc.dump(2) << "\n";
  else if (cfg.format == "csv" || cfg.format == "pretty")
    body << pretty_text;
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot open output file: " << cfg.out << "\n";
      return 2;
    }
    f << body.str();
  } else {
    std::cout << body.str();
  }
  return 0;
}

json config_to_json(const RunConfig& cfg, const std::string& verb) {
  json c;
  c["verb"] = verb;
  c["suite"] = cfg.suite;
  if (!cfg.ns.empty()) c["n"] = cfg.ns;
  if (cfg.x_order >= 0) c["x-order"] = cfg.x_order;
  if (cfg.smax >= 0) c["smax"] = cfg.smax;
  if (cfg.kmax >= 0) c["kmax"] = cfg.kmax;
  c["jobs"] = cfg.jobs;
  return c;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = {"periodicity", "identities", "picard-fuchs", "descent",  "hat",
              "asymptotics", "table3",     "lemma24",      "phi-crosscheck",
              "symbolic",    "conjecture"};
  } else {
    suites = {cfg.suite};
  }
  std::vector<Task> tasks;
  for (const auto& s : suites) add_suite_tasks(s, cfg, tasks);
  std::vector<Report> reports = run_tasks(tasks, cfg.jobs);

  json doc;
  doc["version"] = kVersion;
  doc["config"] = config_to_json(cfg, "verify");
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  doc["reports"] = arr;

  std::ostringstream pretty;
  if (cfg.format == "csv") {
    pretty << "check,n,order,status,degree,where\n";
    for (const auto& r : reports) {
      pretty << r.check << "," << r.n << "," << r.order << ","
             << (r.pass ? "pass" : "fail") << ","
             << (r.failure ? std::to_string(r.failure->degree) : "") << ","
             << (r.failure ? r.failure->where : "") << "\n";
    }
  } else {
    for (const auto& r : reports) {
      pretty << (r.pass ? "[pass] " : "[FAIL] ") << r.check;
      if (r.n > 0) pretty << " n=" << r.n;
      if (r.order > 0) pretty << " order=" << r.order;
      for (const auto& [k, v] : r.details) pretty << " " << k << "=" << v;
      if (r.failure) {
        pretty << "  (degree=" << r.failure->degree;
        if (!r.failure->where.empty()) pretty << " " << r.failure->where;
        pretty << " expected=" << r.failure->expected << " actual=" << r.failure->actual << ")";
      }
      pretty << "\n";
    }
  }
  int rc = emit(cfg, doc, pretty.str());
  if (rc != 0) return rc;
  return all_pass(reports) ? 0 : 1;
}

int cmd_compute(const RunConfig& cfg, const std::string& object, int n, int k) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = config_to_json(cfg, "compute");
  doc["config"]["object"] = object;
  std::ostringstream pretty;
  std::ostringstream csv;
  csv << "object,index,exponent,value\n";

  int order = cfg.x_order >= 0 ? cfg.x_order : (cfg.env_order >= 0 ? cfg.env_order : 12);
  int smax = cfg.smax >= 0 ? cfg.smax : 4;

  if (object == "F") {
    HgSeries f = build_f(n, order);
    doc["F"] = json{{"n", n}, {"series", wseries_to_json(f.coeff)}};
    for (int d = 0; d <= order; ++d) {
      pretty << "x^" << d << ": " << f.coeff[d].str() << "\n";
      csv << "F," << d << ",," << '"' << f.coeff[d].str() << '"' << "\n";
    }
  } else if (object == "Ip" || object == "Hp") {
    IpFamily fam = compute_ip_family(n, order);
    const auto& list = (object == "Ip") ? fam.I : fam.H;
    json arr = json::array();
    for (size_t p = 0; p < list.size(); ++p) {
      arr.push_back(qseries_to_json(list[p]));
      for (int d = 0; d <= order; ++d) {
        csv << object << "," << p << "," << d << "," << list[p][d].str() << "\n";
      }
      pretty << object[0] << "_" << p << ": ";
      for (int d = 0; d <= order; ++d) pretty << list[p][d].str() << " ";
      pretty << "\n";
    }
    doc[object] = json{{"n", n}, {"order", order}, {"values", arr}};
  } else if (object == "mu") {
    AsymptoticExpansion ae = expand_log_f(n, order, 0);
    doc["mu"] = json{{"n", n}, {"series", qseries_to_json(ae.mu)}};
    for (int d = 0; d <= order; ++d) {
      pretty << "x^" << d << ": " << ae.mu[d].str() << "\n";
      csv << "mu,," << d << "," << ae.mu[d].str() << "\n";
    }
  } else if (object == "phi") {
    PhiSolution sol = solve_phi_recursion(n, smax);
    json arr = json::array();
    for (int s = 0; s <= smax; ++s) {
      arr.push_back(json{{"s", s}, {"terms", lpoly_to_json(sol.phi[s])}});
      for (const auto& [e, c] : sol.phi[s].terms())
        csv << "phi," << s << "," << e << "," << c.str() << "\n";
      pretty << "Phi_" << s << " = " << sol.phi[s].str() << "\n";
    }
    doc["phi"] = json{{"n", n}, {"values", arr}};
  } else if (object == "Lk") {
    auto ops = build_l_operators(n);
    json arr = json::array();
    for (const auto& op : ops) {
      json coefs = json::array();
      for (size_t i = 0; i < op.coef.size(); ++i) {
        coefs.push_back(json{{"i", i}, {"terms", lpoly_to_json(op.coef[i])}});
        for (const auto& [e, c] : op.coef[i].terms())
          csv << "L" << op.k << "," << i << "," << e << "," << c.str() << "\n";
      }
      arr.push_back(json{{"k", op.k}, {"coef", coefs}});
      pretty << "L_" << op.k << ":";
      for (size_t i = 0; i < op.coef.size(); ++i)
        pretty << " D^" << i << ": [" << op.coef[i].str() << "]";
      pretty << "\n";
    }
    doc["Lk"] = json{{"n", n}, {"operators", arr}};
  } else if (object == "Pk") {
    int kmax = cfg.kmax >= 0 ? cfg.kmax : 5;
    std::vector<int> nodes = cfg.ns;
    if (nodes.empty())
      for (int m = 3; m <= 14; ++m) nodes.push_back(m);
    json arr = json::array();
    for (int kk = 0; kk <= kmax; ++kk) {
      PkInterpolation interp = interpolate_pk(kk, nodes, order);
      json coefs = json::array();
      for (int j = 0; j <= kk; ++j) {
        coefs.push_back(json{{"X", j}, {"n-poly", polyq_to_json(interp.coef_n[j])}});
        for (int i = 0; i <= interp.coef_n[j].degree(); ++i)
          csv << "P" << kk << "," << j << "," << i << "," << interp.coef_n[j].coeff(i).str()
              << "\n";
      }
      arr.push_back(json{{"k", kk},
                         {"stable", interp.stable},
                         {"fits-consistent", interp.fits_consistent},
                         {"X-coeffs", coefs}});
      pretty << "P_" << kk << " stable=" << interp.stable << "\n";
    }
    doc["Pk"] = arr;
  } else if (object == "symphi") {
    SymPhiSolution sol = solve_symbolic_phi(smax);
    json arr = json::array();
    for (int s = 0; s <= smax; ++s) {
      json terms = json::array();
      for (const auto& [key, c] : sol.phi[s].terms()) {
        terms.push_back(json{{"Lam", key.first},
                             {"X", key.second},
                             {"coeff-num", polyq_to_json(c.num())},
                             {"coeff-den", polyq_to_json(c.den())}});
        csv << "symphi," << s << "," << key.first << "x" << key.second << ",\""
            << c.str("a") << "\"\n";
      }
      arr.push_back(json{{"s", s}, {"terms", terms}});
      pretty << "Phi_" << s << " = " << sol.phi[s].str() << "\n";
    }
    doc["symphi"] = json{{"smax", smax}, {"values", arr}};
  } else if (object == "ek") {
    PolyQ ek = ek_polynomial(k);
    doc["ek"] = json{{"k", k}, {"coefficients", polyq_to_json(ek)}};
    for (int i = 0; i <= ek.degree(); ++i) {
      pretty << "X^" << i << ": " << ek.coeff(i).str() << "\n";
      csv << "e" << k << ",," << i << "," << ek.coeff(i).str() << "\n";
    }
  } else {
    std::cerr << "unknown object: " << object << "\n";
    return 2;
  }
  return emit(cfg, doc, cfg.format == "csv" ? csv.str() : pretty.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the mirror-symmetry hypergeometric series"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("MIRROR_HG_DEFAULT_ORDER")) {
    try {
      cfg.env_order = std::stoi(env);
    } catch (...) {
      std::cerr << "invalid MIRROR_HG_DEFAULT_ORDER\n";
      return 2;
    }
  }

  int n_single = -1;
  std::string n_range;
  std::string object;
  int k_single = 2;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_single, "single n");
    sub->add_option("--n-range", n_range, "inclusive range A..B");
    sub->add_option("--x-order", cfg.x_order, "series truncation order");
    sub->add_option("--smax", cfg.smax, "asymptotic depth");
    sub->add_option("--kmax", cfg.kmax, "conjecture depth");
    sub->add_option("--format", cfg.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "parallel (suite, n) tasks");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite,
                     "periodicity|identities|picard-fuchs|descent|hat|asymptotics|table3|"
                     "lemma24|phi-crosscheck|symbolic|conjecture|all");
  add_common(verify);

  CLI::App* compute = app.add_subcommand("compute", "emit exact objects");
  compute->add_option("object", object, "F|Ip|Hp|mu|phi|Lk|Pk|symphi|ek")->required();
  compute->add_option("--k", k_single, "index for ek");
  add_common(compute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!n_range.empty()) {
      auto dots = n_range.find("..");
      if (dots == std::string::npos) {
        std::cerr << "--n-range expects A..B\n";
        return 2;
      }
      int lo = std::stoi(n_range.substr(0, dots));
      int hi = std::stoi(n_range.substr(dots + 2));
      if (lo < 1 || hi < lo) {
        std::cerr << "invalid --n-range\n";
        return 2;
      }
      for (int m = lo; m <= hi; ++m) cfg.ns.push_back(m);
    }
    if (n_single != -1) {
      if (n_single < 1) {
        std::cerr << "--n must be >= 1\n";
        return 2;
      }
      cfg.ns.push_back(n_single);
    }
    if (cfg.x_order == 0 || cfg.x_order < -1) {
      std::cerr << "--x-order must be positive\n";
      return 2;
    }

    if (verify->parsed()) return cmd_verify(cfg);
    if (compute->parsed()) {
      int n = cfg.ns.empty() ? 3 : cfg.ns.front();
      return cmd_compute(cfg, object, n, k_single);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
