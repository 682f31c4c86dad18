// capitula: analyze prime triples (p1, p2, q), scan ranges, and run
// verification campaigns for the 2-class capitulation data of
// Q(sqrt(p1*p2*q), i).
//
// Exit codes: 0 success, 1 property violation, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "capitula/analysis.hpp"
#include "capitula/report_io.hpp"
#include "capitula/verify.hpp"

namespace {

int apply_period_cap_env() {
  const char* env = std::getenv("CAPITULA_PERIOD_CAP");
  if (env == nullptr) return 0;
  try {
    std::size_t pos = 0;
    unsigned long long cap = std::stoull(env, &pos);
    if (pos != std::string(env).size() || cap == 0)
      throw std::invalid_argument("not a positive integer");
    capitula::set_period_cap(cap);
  } catch (const std::exception&) {
    std::cerr << "error: CAPITULA_PERIOD_CAP must be a positive integer\n";
    return 2;
  }
  return 0;
}

int run_analyze(long long p1, long long p2, long long q,
                const std::string& format) {
  using namespace capitula;
  PrimeTriple t;
  try {
    t = make_triple(Integer(static_cast<long>(p1)),
                    Integer(static_cast<long>(p2)),
                    Integer(static_cast<long>(q)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  TripleAnalysis a = analyze_triple(t);
  std::cout << (format == "json" ? to_json_string(a) : to_text(a));
  return 0;
}

int run_scan(long long pmax, long long qmax, bool only_222,
             const std::string& out_path, unsigned jobs) {
  using namespace capitula;
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  ScanSummary sum;
  try {
    sum = scan_triples(Integer(static_cast<long>(pmax)),
                       Integer(static_cast<long>(qmax)), only_222, out, jobs);
    out.flush();
    if (!out) throw std::runtime_error("write failed");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "triples: " << sum.triples << "\n"
            << "cl222: " << sum.cl222 << "\n"
            << "flagged: " << sum.flagged << "\n"
            << "main_theorem_failures: " << sum.main_failures << "\n";
  return sum.main_failures == 0 ? 0 : 1;
}

int run_verify(const std::string& property, long long bound) {
  using namespace capitula;
  if (!is_known_property(property)) {
    std::cerr << "error: unknown property '" << property << "'\n";
    return 2;
  }
  CampaignResult res = run_campaign(property, Integer(static_cast<long>(bound)));
  std::cout << "property: " << res.property << "\n"
            << "bound: " << res.bound << "\n";
  if (res.checked > 0) std::cout << "checked: " << res.checked << "\n";
  for (const std::string& n : res.notes) std::cout << "note: " << n << "\n";
  std::cout << "violations: " << res.violations.size() << "\n";
  for (const std::string& v : res.violations) std::cout << "  " << v << "\n";
  return res.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (int rc = apply_period_cap_env(); rc != 0) return rc;

  CLI::App app{"2-class capitulation toolkit for Q(sqrt(p1*p2*q), i)"};
  app.require_subcommand(1);

  long long p1 = 0, p2 = 0, q = 0;
  std::string format = "text";
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one triple");
  analyze->add_option("--p1", p1, "prime p1 = 1 (mod 4)")->required();
  analyze->add_option("--p2", p2, "prime p2 = 1 (mod 4)")->required();
  analyze->add_option("--q", q, "prime q = 3 (mod 4)")->required();
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  long long pmax = 0, qmax = 0;
  bool only_222 = false;
  std::string out_path;
  unsigned jobs = 0;
  CLI::App* scan = app.add_subcommand("scan", "scan all triples in a range");
  scan->add_option("--pmax", pmax, "largest p to scan")->required();
  scan->add_option("--qmax", qmax, "largest q to scan")->required();
  scan->add_flag("--only-222", only_222, "restrict to Cl_2 of type (2,2,2)");
  scan->add_option("--out", out_path, "CSV output path")->required();
  scan->add_option("--jobs", jobs, "worker threads (0 = auto)");

  std::string property;
  long long bound = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--property", property, "property id")->required();
  verify->add_option("--bound", bound, "enumeration bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(p1, p2, q, format);
    if (scan->parsed()) return run_scan(pmax, qmax, only_222, out_path, jobs);
    if (verify->parsed()) return run_verify(property, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
