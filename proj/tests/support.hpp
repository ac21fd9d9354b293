#pragma once

#include <random>
#include <string>
#include <vector>

#include "gdifs/families.hpp"
#include "gdifs/graph.hpp"

namespace gdifs::gen {

inline constexpr std::uint64_t kSeed = 20240611;

// `n` positive rationals summing to 1: integer weights in [1, max_w] over
// their total.
inline std::vector<Rational> random_partition(std::mt19937_64& rng, std::size_t n, long max_w = 6) {
  std::uniform_int_distribution<long> w(1, max_w);
  std::vector<long> ws(n);
  long total = 0;
  for (auto& x : ws) total += (x = w(rng));
  std::vector<Rational> out;
  for (long x : ws) out.emplace_back(x, total);
  return out;
}

// Strongly connected, CSSC, unit-interval, non-reflecting system on 1..max_n
// vertices. A ring 0 -> 1 -> ... -> 0 guarantees strong connectivity.
inline GraphIFS random_graph(std::mt19937_64& rng, std::size_t max_n = 3, std::size_t max_deg = 3) {
  std::uniform_int_distribution<std::size_t> nd(1, max_n);
  const std::size_t n = nd(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  std::uniform_int_distribution<std::size_t> deg(2, max_deg);
  std::uniform_int_distribution<std::size_t> tgt(0, n - 1);
  int id = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t m = deg(rng);
    std::uniform_int_distribution<std::size_t> slot(0, m - 1);
    const std::size_t ring_slot = slot(rng);
    // m ratios and m-1 gaps, interleaved: r0 g0 r1 g1 ... r_{m-1}.
    const auto parts = random_partition(rng, 2 * m - 1);
    Rational pos(0);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& r = parts[2 * i];
      const std::size_t to = i == ring_slot ? (x + 1) % n : tgt(rng);
      edges.push_back({"e" + std::to_string(++id), names[x], names[to], Similarity(r, pos)});
      pos = pos + r;
      if (i + 1 < m) pos = pos + parts[2 * i + 1];
    }
  }
  return GraphIFS::build(names, edges);
}

// Two-vertex family instance with all denominators <= 64.
inline Figure1Params random_figure1(std::mt19937_64& rng, long max_den = 64) {
  std::uniform_int_distribution<long> den(3, max_den);
  auto row = [&](Rational& left, Rational& gap, Rational& right) {
    for (;;) {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(1, q - 2);
      const long a = num(rng);
      const long b = num(rng);
      if (a + b < q) {
        left = Rational(a, q);
        right = Rational(b, q);
        gap = Rational(1) - left - right;
        return;
      }
    }
  };
  Figure1Params p;
  row(p.a, p.g_u, p.b);
  row(p.c, p.g_v, p.d);
  return p;
}

}  // namespace gdifs::gen
