#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace progressio {

/// 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) for each on
/// its own worker and returns the per-chunk results in index order, so the
/// merged output never depends on completion order. The first exception
/// thrown by any chunk is rethrown.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::size_t count, unsigned threads, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), count));
  std::vector<Result> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (count + workers - 1) / std::max<std::size_t>(workers, 1);
  auto body = [&](std::size_t w) {
    try {
      const std::size_t begin = std::min(count, w * step);
      const std::size_t end = std::min(count, begin + step);
      results[w] = fn(begin, end);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

/// splitmix64 step; derives independent per-item seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

}  // namespace progressio
