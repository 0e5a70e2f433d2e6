#pragma once

// Independent oracles: plain enumeration, no use of the library's path logic.

#include <set>
#include <string>
#include <vector>

namespace oracle {

// Enumerates arrow words head to tail and drops those containing a
// relation factor; paths are returned as their letter strings.
inline std::set<std::string> brute_force_paths(int mu) {
  std::set<std::string> out;
  for (int v = 1; v <= mu; ++v) out.insert("e" + std::to_string(v));
  std::vector<std::pair<std::string, std::pair<int, char>>> frontier;
  for (int i = 1; i < mu; ++i) {
    frontier.push_back({"a" + std::to_string(i), {i + 1, 'a'}});
    frontier.push_back({"b" + std::to_string(i), {i + 1, 'b'}});
  }
  while (!frontier.empty()) {
    std::vector<std::pair<std::string, std::pair<int, char>>> next;
    for (const auto& [word, state] : frontier) {
      out.insert(word);
      const auto [end, last] = state;
      if (end >= mu) continue;
      for (char x : {'a', 'b'}) {
        if (x != last) continue;  // a_i b_{i+1} and b_i a_{i+1} vanish
        next.push_back({word + "*" + x + std::to_string(end), {end + 1, x}});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Number of relation-free arrow words from j to i.
inline int count_paths(int mu, int j, int i) {
  int n = 0;
  for (const auto& w : brute_force_paths(mu)) {
    if (w[0] == 'e') {
      n += (i == j && std::stoi(w.substr(1)) == j);
      continue;
    }
    const int first = std::stoi(w.substr(1, w.find('*') - 1));
    const auto last_star = w.rfind('*');
    const int last = std::stoi(w.substr(last_star == std::string::npos ? 1 : last_star + 2));
    n += (first == j && last + 1 == i);
  }
  return n;
}

}  // namespace oracle
