#include "racgc/graph_io.hpp"

#include "racgc/errors.hpp"

#include <fstream>
#include <sstream>

namespace racgc {

using nlohmann::json;

Graph theta_graph(const std::vector<int>& n) {
  std::vector<std::string> vs{"a", "b"};
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw InvalidInput("negative branch length");
    std::string prev = "a";
    for (int j = 1; j <= n[i]; ++j) {
      std::string x = "x" + std::to_string(i + 1) + "_" + std::to_string(j);
      vs.push_back(x);
      es.emplace_back(prev, x);
      prev = x;
    }
    es.emplace_back(prev, "b");
  }
  return Graph(std::move(vs), es);
}

Graph cycle_graph(const std::vector<std::vector<int>>& comps) {
  const std::size_t N = comps.size();
  if (N < 3) throw InvalidInput("a cycle of generalized theta-graphs needs at least 3 components");
  for (std::size_t i = 0; i < N; ++i) {
    if (comps[i].empty()) throw InvalidInput("component with no branches");
    if (comps[i].size() == 1 && comps[(i + 1) % N].size() == 1)
      throw InvalidInput("two consecutive components with a single branch");
  }
  std::vector<std::string> vs;
  std::vector<std::pair<std::string, std::string>> es;
  auto hub = [](std::size_t i) { return "a" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < N; ++i) vs.push_back(hub(i));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < comps[i].size(); ++j) {
      if (comps[i][j] < 0) throw InvalidInput("negative branch length");
      std::string prev = hub(i);
      for (int m = 1; m <= comps[i][j]; ++m) {
        std::string x = "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(m);
        vs.push_back(x);
        es.emplace_back(prev, x);
        prev = x;
      }
      es.emplace_back(prev, hub((i + 1) % N));
    }
  }
  return Graph(std::move(vs), es);
}

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("graph JSON must be an object");
    if (j.contains("format") && j.at("format") != "racg-graph/1")
      throw InvalidInput("unsupported graph format " + j.at("format").dump());
    std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(std::move(vs), es);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad graph JSON: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json es = json::array();
  for (auto [u, v] : g.edges()) es.push_back({g.name(u), g.name(v)});
  return {{"format", "racg-graph/1"}, {"vertices", g.names()}, {"edges", es}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer '" + tok + "' in '" + s + "'");
    }
  }
  return out;
}

Graph load_graph(const std::string& spec) {
  if (spec.rfind("theta:", 0) == 0) return theta_graph(parse_int_list(spec.substr(6)));
  if (spec.rfind("cycle:", 0) == 0) {
    json j;
    try {
      j = json::parse(spec.substr(6));
      return cycle_graph(j.get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
      throw InvalidInput("bad cycle shorthand '" + spec + "'");
    }
  }
  std::string text = spec;
  if (spec.empty() || spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw InvalidInput("cannot read '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput("'" + spec + "' is not valid JSON");
  }
  return graph_from_json(j);
}

}  // namespace racgc
