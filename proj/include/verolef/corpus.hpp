// The test corpus: curated fixtures covering the edge geometry (zero ideals,
// dimension 0 and 1, socle-degree extremes, the 8-variable counterexample)
// plus seeded random stable CM ideals with n <= 5, dim <= 3, generator
// degree <= 3. Fully deterministic.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "verolef/lefschetz.hpp"
#include "verolef/monomial_ideal.hpp"

namespace verolef {

struct CorpusEntry {
  std::string name;
  MonomialIdeal ideal;
};

inline std::vector<CorpusEntry> curated_corpus() {
  std::vector<CorpusEntry> out;
  const auto add = [&](const char* name, int n,
                       std::vector<std::vector<int>> exps) {
    std::vector<Monomial> gens;
    for (auto& e : exps) {
      e.resize(static_cast<std::size_t>(n), 0);
      gens.emplace_back(std::move(e));
    }
    out.push_back({name, MonomialIdeal(n, std::move(gens))});
  };
  add("zero-n2", 2, {});                                  // d=2, h=1
  add("zero-n3", 3, {});                                  // d=3, h=1
  add("square-n3", 3, {{2}});                             // d=2, h=1+t
  add("cube-n2", 2, {{3}});                               // d=1, h=1+t+t^2
  add("stable-n4", 4, {{2}, {1, 1}, {0, 3}});             // d=2, h=1+t+t^2
  add("wide-n3", 3, {{2}, {1, 1}, {0, 2}});               // d=1, h=1+2t
  add("artinian-d0", 2, {{2}, {1, 1}, {0, 3}});           // d=0, h=1+t+t^2
  add("powers-n5", 5, {{3}, {2, 1}, {1, 2}, {0, 3}});     // d=3, h=1+2t+3t^2
  out.push_back({"rank-drop-n8", rank_drop_ideal()});          // d=3, h=1+5t+10t^2
  return out;
}

// Seeded random entries: (n, d) cycles a fixed table, max_deg alternates in
// {2, 3} (generator degrees <= 4, deg h <= 3), seed = index.
inline std::vector<CorpusEntry> random_corpus(int count = 50) {
  static const std::vector<std::pair<int, int>> combos = {
      {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}};
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const auto [n, d] = combos[static_cast<std::size_t>(i) % combos.size()];
    const int max_deg = 2 + (i / static_cast<int>(combos.size())) % 2;
    const auto seed = static_cast<std::uint64_t>(i);
    std::string name = "rand-" + std::to_string(i) + "-n" + std::to_string(n) +
                       "d" + std::to_string(d) + "m" + std::to_string(max_deg);
    out.push_back({std::move(name), random_stable_cm_ideal(n, d, max_deg, seed)});
  }
  return out;
}

inline std::vector<CorpusEntry> full_corpus(int random_count = 50) {
  std::vector<CorpusEntry> out = curated_corpus();
  for (auto& e : random_corpus(random_count)) out.push_back(std::move(e));
  return out;
}

}  // namespace verolef
