#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rankcover {

inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Calls body(lo, hi, worker) over [begin, end) split into chunks handed out dynamically.
template <class Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads, std::uint64_t chunk, Body&& body) {
  if (end <= begin) return;
  threads = std::max(1u, resolve_threads(threads));
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t nchunks = (end - begin + chunk - 1) / chunk;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, nchunks));
  if (threads == 1) {
    for (std::uint64_t lo = begin; lo < end; lo += std::min(chunk, end - lo)) body(lo, lo + std::min(chunk, end - lo), 0u);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t k; (k = next.fetch_add(1)) < nchunks;) {
          std::uint64_t lo = begin + k * chunk;
          body(lo, std::min(end, lo + chunk), w);
        }
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
        next.store(nchunks);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace rankcover
