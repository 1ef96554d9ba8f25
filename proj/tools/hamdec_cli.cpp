// Command-line front end: construct, verify, and sweep Hamilton
// decompositions of Cayley graphs on dihedral groups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "hamdec/certificate.hpp"
#include "hamdec/oracle.hpp"

namespace {

using namespace hamdec;

std::string to_token_list(const ConnectionSet& cs) {
  std::string out;
  for (const auto& g : cs.elements) {
    if (!out.empty()) out += ",";
    out += to_token(g);
  }
  return out;
}

int cmd_decompose(int n, const std::string& set_csv, bool tetravalent, int i, int j, int k,
                  const std::string& format) {
  ConnectionSet cs;
  Decomposition d;
  if (tetravalent) {
    d = decompose_tetravalent(n, i, j, k);
    cs = validate_connection_set(
        n, {rotation(n, i), rotation(n, -i), reflection(n, j), reflection(n, k)});
  } else {
    if (set_csv.empty()) throw std::invalid_argument("--set is required without --tetravalent");
    if (!is_prime(n)) {
      throw std::invalid_argument("n=" + std::to_string(n) +
                                  " is not prime; use --tetravalent for general n");
    }
    cs = parse_connection_set(n, set_csv);
    d = decompose(n, cs);
  }

  CayleyGraph graph = build_graph(cs);
  VerificationReport report = verify_decomposition(graph, d);
  if (!report.ok) {
    std::cerr << "internal error: constructed certificate failed verification\n"
              << report_to_json(report).dump(2) << "\n";
    return 1;
  }

  Certificate cert = make_certificate(cs, d);
  if (format == "json") {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else if (format == "text") {
    std::cout << certificate_to_text(cert);
  } else {
    std::cout << certificate_to_dot(cert);
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
  }
  Certificate cert = certificate_from_json(j);
  Instantiated inst = instantiate_certificate(cert);
  VerificationReport report = verify_decomposition(inst.graph, inst.decomposition);
  std::cout << report_to_json(report).dump(2) << "\n";
  return report.ok ? 0 : 1;
}

struct SweepResult {
  bool ok = false;
  bool oracle_checked = false;
  bool oracle_ok = false;
  std::vector<std::string> routes;
  std::string detail;
};

SweepResult run_instance(int p, std::uint64_t mask, bool with_oracle) {
  SweepResult r;
  ConnectionSet cs = instance_from_mask(p, mask);
  CayleyGraph graph = build_graph(cs);
  Decomposition d = decompose(p, cs);
  VerificationReport report = verify_decomposition(graph, d);
  r.ok = report.ok;
  if (!report.ok) r.detail = report_to_json(report).dump();
  r.routes = d.cycle_routes;
  if (!d.matching_route.empty()) r.routes.push_back(d.matching_route);
  if (with_oracle && brute_force_allowed(graph)) {
    r.oracle_checked = true;
    auto found = brute_force_decomposition(graph);
    r.oracle_ok = found.has_value() && verify_decomposition(graph, *found).ok;
    if (!r.oracle_ok) r.detail += " oracle search failed";
  }
  return r;
}

int cmd_sweep(int p, bool with_oracle, int jobs) {
  if (!is_prime(p)) throw std::invalid_argument("--p must be prime, got " + std::to_string(p));
  std::vector<std::uint64_t> masks = valid_instance_masks(p);
  std::vector<SweepResult> results(masks.size());

  jobs = std::max(1, jobs);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t idx = cursor.fetch_add(1);
      if (idx >= masks.size()) return;
      results[idx] = run_instance(p, masks[idx], with_oracle);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::size_t passes = 0, failures = 0, oracle_checked = 0, oracle_failures = 0;
  std::map<std::string, std::size_t> route_histogram;
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    const SweepResult& r = results[idx];
    if (r.ok) {
      ++passes;
    } else {
      ++failures;
      std::cout << "FAIL " << to_token_list(instance_from_mask(p, masks[idx])) << " "
                << r.detail << "\n";
    }
    for (const auto& route : r.routes) ++route_histogram[route];
    if (r.oracle_checked) {
      ++oracle_checked;
      if (!r.oracle_ok) {
        ++oracle_failures;
        std::cout << "ORACLE-FAIL " << to_token_list(instance_from_mask(p, masks[idx])) << "\n";
      }
    }
  }

  std::cout << "p=" << p << " instances=" << masks.size() << " pass=" << passes
            << " fail=" << failures << "\n";
  std::cout << "routes (per part):";
  for (const auto& [route, count] : route_histogram) std::cout << " " << route << "=" << count;
  std::cout << "\n";
  if (with_oracle) {
    std::cout << "oracle: checked=" << oracle_checked << " skipped="
              << (masks.size() - oracle_checked) << " failures=" << oracle_failures << "\n";
  }
  return (failures == 0 && oracle_failures == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton decompositions of Cayley graphs on dihedral groups D_2n"};
  app.require_subcommand(1);

  auto* dec = app.add_subcommand("decompose", "construct and self-verify a decomposition");
  int n = 0;
  std::string set_csv;
  std::string format = "json";
  bool tetravalent = false;
  int ti = 0, tj = 0, tk = 0;
  dec->add_option("--n", n, "group parameter; the graph has 2n vertices")->required();
  auto* set_opt = dec->add_option("--set", set_csv, "connection set, e.g. r1,r6,s0");
  auto* tetra_flag =
      dec->add_flag("--tetravalent", tetravalent, "use S={r^i,r^-i,s^j,s^k} on general n >= 3");
  auto* i_opt = dec->add_option("--i", ti, "rotation exponent for --tetravalent");
  auto* j_opt = dec->add_option("--j", tj, "first reflection exponent for --tetravalent");
  auto* k_opt = dec->add_option("--k", tk, "second reflection exponent for --tetravalent");
  tetra_flag->needs(i_opt)->needs(j_opt)->needs(k_opt);
  set_opt->excludes(tetra_flag);
  dec->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));

  auto* ver = app.add_subcommand("verify", "check a certificate file");
  std::string cert_path;
  ver->add_option("--certificate", cert_path, "path to a JSON certificate")->required();

  auto* sw = app.add_subcommand("sweep", "decompose and verify every valid set on D_2p");
  int p = 0;
  bool with_oracle = false;
  int jobs = 1;
  sw->add_option("--p", p, "prime group parameter")->required();
  sw->add_flag("--oracle", with_oracle, "cross-check with brute-force search where feasible");
  sw->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) return cmd_decompose(n, set_csv, tetravalent, ti, tj, tk, format);
    if (ver->parsed()) return cmd_verify(cert_path);
    return cmd_sweep(p, with_oracle, jobs);
  } catch (const hamdec::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hamdec::CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hamdec::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
