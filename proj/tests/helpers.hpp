#pragma once

#include <random>
#include <string>
#include <vector>

#include "iasm/pivots.hpp"
#include "iasm/sequences.hpp"

namespace iasm::testing {

inline std::string random_string(std::mt19937_64& rng, int max_len, std::string_view symbols) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string out(static_cast<std::size_t>(len(rng)), ' ');
  for (char& c : out) c = symbols[pick(rng)];
  return out;
}

inline Symbol random_symbol(std::mt19937_64& rng, std::string_view symbols) {
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  return symbols[pick(rng)];
}

inline std::vector<Pivot> sorted(std::vector<Pivot> points) {
  std::sort(points.begin(), points.end());
  return points;
}

/// Every string over `symbols` of length 0..max_len.
inline std::vector<std::string> all_strings(std::string_view symbols, int max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t t = begin; t < end; ++t) {
      for (char c : symbols) out.push_back(out[t] + c);
    }
    begin = end;
  }
  return out;
}

}  // namespace iasm::testing
