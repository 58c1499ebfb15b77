#include "hallforge/quiver.hpp"

#include <functional>
#include <stdexcept>

#include "hallforge/fq.hpp"
#include "json.hpp"

namespace hallforge {

bool QuiverSpec::has_oriented_cycle() const {
  // DFS three-color cycle detection; loops count.
  std::vector<std::vector<int>> adj(vertices);
  for (auto [s, t] : arrows) adj[s].push_back(t);
  std::vector<int> color(vertices, 0);
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int w : adj[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < vertices; ++v)
    if (color[v] == 0 && dfs(v)) return true;
  return false;
}

void QuiverSpec::validate() const {
  if (vertices < 1) throw std::invalid_argument("quiver: need at least one vertex");
  for (auto [s, t] : arrows)
    if (s < 0 || s >= vertices || t < 0 || t >= vertices)
      throw std::invalid_argument("quiver: arrow endpoint out of range");
  if (!is_prime(q)) throw std::invalid_argument("quiver: q must be prime");
  if (has_oriented_cycle() && !nilpotent)
    throw std::invalid_argument("quiver: oriented cycles require the nilpotent category");
}

QuiverSpec preset_quiver(const std::string& name, int q) {
  QuiverSpec s;
  s.q = q;
  if (name == "a1") {
    s.vertices = 1;
  } else if (name == "a2") {
    s.vertices = 2;
    s.arrows = {{0, 1}};
  } else if (name == "jordan") {
    s.vertices = 1;
    s.arrows = {{0, 0}};
    s.nilpotent = true;
  } else {
    throw std::invalid_argument("unknown quiver preset: " + name);
  }
  s.validate();
  return s;
}

QuiverSpec quiver_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  QuiverSpec s;
  s.vertices = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows")) s.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  s.nilpotent = j.value("nilpotent", false);
  s.q = j.at("q").get<int>();
  s.validate();
  return s;
}

std::string quiver_to_json_text(const QuiverSpec& spec) {
  nlohmann::json j;
  j["vertices"] = spec.vertices;
  auto arr = nlohmann::json::array();
  for (auto [s, t] : spec.arrows) arr.push_back({s, t});
  j["arrows"] = arr;
  j["nilpotent"] = spec.nilpotent;
  j["q"] = spec.q;
  return j.dump();
}

}  // namespace hallforge
