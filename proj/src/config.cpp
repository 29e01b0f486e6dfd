#include "gammalab/config.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

std::atomic<std::size_t> g_threads{0};

}  // namespace

std::uint64_t guard_limit(std::uint64_t base) {
  const char* env = std::getenv("GAMMA_LAB_GUARD");
  if (env == nullptr || *env == '\0') return base;
  std::string v(env);
  if (v == "off" || v == "OFF") return std::numeric_limits<std::uint64_t>::max();
  char* end = nullptr;
  unsigned long long k = std::strtoull(env, &end, 10);
  if (end == env || k == 0) return base;
  if (base > std::numeric_limits<std::uint64_t>::max() / k)
    return std::numeric_limits<std::uint64_t>::max();
  return base * k;
}

void enforce_guard(std::uint64_t value, std::uint64_t base, const std::string& what) {
  const auto limit = guard_limit(base);
  if (value > limit)
    throw SizeGuard(what + " (" + std::to_string(value) + " > " + std::to_string(limit) + ")");
}

std::size_t thread_count() {
  auto n = g_threads.load();
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return n;
}

void set_thread_count(std::size_t n) { g_threads.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gammalab
