// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace spinshift {

// Kahan compensated accumulator. Used everywhere a mode or voxel sum feeds
// an identity that must hold to near machine precision.
class KahanSum {
public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Deterministic chunked reduction: terms are grouped into fixed-size chunks,
// each chunk is summed sequentially, and chunk partials are combined in chunk
// order with compensation. Which thread evaluates a chunk never changes the
// arithmetic, so the result is independent of the thread count.
template <std::size_t K, class Term>
std::array<double, K> chunked_sum_array(std::size_t n, Term&& term, int threads = 1,
                                        std::size_t chunk_size = 1024) {
  std::array<double, K> out{};
  if (n == 0) return out;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;

  std::vector<std::array<double, K>> partials(n_chunks);
  auto run_chunk = [&](std::size_t c) {
    std::array<KahanSum, K> acc{};
    const std::size_t lo = c * chunk_size;
    const std::size_t hi = std::min(n, lo + chunk_size);
    std::array<double, K> v{};
    for (std::size_t i = lo; i < hi; ++i) {
      term(i, v);
      for (std::size_t k = 0; k < K; ++k) acc[k].add(v[k]);
    }
    for (std::size_t k = 0; k < K; ++k) partials[c][k] = acc[k].value();
  };

  const int workers = static_cast<int>(
      std::min<std::size_t>(std::max(threads, 1), n_chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
          run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::array<KahanSum, K> total{};
  for (std::size_t c = 0; c < n_chunks; ++c)
    for (std::size_t k = 0; k < K; ++k) total[k].add(partials[c][k]);
  for (std::size_t k = 0; k < K; ++k) out[k] = total[k].value();
  return out;
}

template <class Term>
double chunked_sum(std::size_t n, Term&& term, int threads = 1,
                   std::size_t chunk_size = 1024) {
  auto r = chunked_sum_array<1>(
      n,
      [&](std::size_t i, std::array<double, 1>& v) { v[0] = term(i); },
      threads, chunk_size);
  return r[0];
}

} // namespace spinshift
