#include "hamdec/certificate.hpp"

#include <sstream>

namespace hamdec {

using nlohmann::json;

Certificate make_certificate(const ConnectionSet& s, const Decomposition& d) {
  Certificate c;
  c.n = s.n;
  for (const auto& g : s.elements) c.connection_set.push_back(to_token(g));
  for (const auto& cycle : d.cycles) {
    std::vector<std::string> tokens;
    tokens.reserve(cycle.vertices.size());
    for (const auto& v : cycle.vertices) tokens.push_back(to_token(v));
    c.cycles.push_back(std::move(tokens));
  }
  if (d.matching) {
    std::vector<std::array<std::string, 2>> pairs;
    for (const auto& [key, label] : *d.matching) {
      pairs.push_back({to_token(element_at(s.n, key.first)),
                       to_token(element_at(s.n, key.second))});
    }
    c.matching = std::move(pairs);
  }
  c.meta.version = kToolVersion;
  c.meta.cycle_routes = d.cycle_routes;
  c.meta.matching_route = d.matching_route;
  return c;
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["n"] = c.n;
  j["connection_set"] = c.connection_set;
  j["cycles"] = c.cycles;
  if (c.matching) j["matching"] = *c.matching;
  json routes;
  routes["cycles"] = c.meta.cycle_routes;
  if (!c.meta.matching_route.empty()) routes["matching"] = c.meta.matching_route;
  j["meta"] = {{"version", c.meta.version}, {"routes", routes}};
  return j;
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.n = j.at("n").get<int>();
    c.connection_set = j.at("connection_set").get<std::vector<std::string>>();
    c.cycles = j.at("cycles").get<std::vector<std::vector<std::string>>>();
    if (j.contains("matching") && !j["matching"].is_null()) {
      c.matching = j["matching"].get<std::vector<std::array<std::string, 2>>>();
    }
    if (j.contains("meta")) {
      const json& meta = j["meta"];
      c.meta.version = meta.value("version", "");
      if (meta.contains("routes")) {
        const json& routes = meta["routes"];
        if (routes.contains("cycles")) {
          c.meta.cycle_routes = routes["cycles"].get<std::vector<std::string>>();
        }
        c.meta.matching_route = routes.value("matching", "");
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

Instantiated instantiate_certificate(const Certificate& c) {
  if (c.n < 2) throw CertificateError("certificate has n < 2");
  Instantiated out;
  try {
    std::vector<GroupElement> elements;
    for (const auto& t : c.connection_set) elements.push_back(parse_element(c.n, t));
    out.graph = build_graph(validate_connection_set(c.n, std::move(elements)));
  } catch (const std::invalid_argument& e) {
    throw CertificateError(std::string("bad connection set: ") + e.what());
  } catch (const ValidationError& e) {
    throw CertificateError(std::string("bad connection set: ") + e.what());
  }

  try {
    for (const auto& tokens : c.cycles) {
      if (tokens.size() < 3) throw CertificateError("cycle with fewer than 3 vertices");
      Cycle cycle;
      for (const auto& t : tokens) cycle.vertices.push_back(parse_element(c.n, t));
      out.decomposition.cycles.push_back(std::move(cycle));
    }
    if (c.matching) {
      EdgeSet matching;
      for (const auto& [a, b] : *c.matching) {
        GroupElement u = parse_element(c.n, a);
        GroupElement v = parse_element(c.n, b);
        if (u == v) throw CertificateError("degenerate matching edge " + a + "-" + b);
        GroupElement label = canonical_class(multiply(v, inverse(u)));
        matching.emplace(edge_key(u, v), label);
      }
      out.decomposition.matching = std::move(matching);
    }
  } catch (const std::invalid_argument& e) {
    throw CertificateError(std::string("bad certificate tokens: ") + e.what());
  }
  out.decomposition.cycle_routes = c.meta.cycle_routes;
  out.decomposition.cycle_routes.resize(out.decomposition.cycles.size());
  out.decomposition.matching_route = c.meta.matching_route;
  return out;
}

std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "n: " << c.n << "\n";
  os << "connection set:";
  for (const auto& t : c.connection_set) os << " " << t;
  os << "\n";
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    os << "cycle " << (i + 1);
    if (i < c.meta.cycle_routes.size() && !c.meta.cycle_routes[i].empty()) {
      os << " [" << c.meta.cycle_routes[i] << "]";
    }
    os << ":";
    for (const auto& t : c.cycles[i]) os << " " << t;
    os << "\n";
  }
  if (c.matching) {
    os << "matching";
    if (!c.meta.matching_route.empty()) os << " [" << c.meta.matching_route << "]";
    os << ":";
    for (const auto& [a, b] : *c.matching) os << " " << a << "-" << b;
    os << "\n";
  }
  return os.str();
}

std::string certificate_to_dot(const Certificate& c) {
  Instantiated inst = instantiate_certificate(c);
  const CayleyGraph& g = inst.graph;

  std::map<EdgeKey, std::string> part_of;
  for (std::size_t i = 0; i < inst.decomposition.cycles.size(); ++i) {
    for (const auto& key : cycle_edge_keys(inst.decomposition.cycles[i])) {
      part_of[key] = "cycle" + std::to_string(i + 1);
    }
  }
  if (inst.decomposition.matching) {
    for (const auto& [key, label] : *inst.decomposition.matching) part_of[key] = "matching";
  }

  std::ostringstream os;
  os << "graph cayley {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << to_token(element_at(c.n, v)) << ";\n";
  }
  for (const auto& e : g.edges) {
    os << "  " << to_token(e.u) << " -- " << to_token(e.v);
    auto it = part_of.find(e.key());
    os << " [part=\"" << (it == part_of.end() ? "unused" : it->second) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json report_to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"kind", to_string(f.kind)},
                        {"part", f.part},
                        {"other_part", f.other_part},
                        {"witnesses", f.witnesses},
                        {"message", f.message}});
  }
  return json{{"ok", r.ok}, {"failures", failures}};
}

}  // namespace hamdec
