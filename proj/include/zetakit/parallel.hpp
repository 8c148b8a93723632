// Minimal work distribution over a fixed number of threads.

#ifndef ZETAKIT_PARALLEL_HPP
#define ZETAKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace zetakit {

// Calls body(i) for i in [0, n) on min(jobs, n) threads.  body must not throw.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& body)
{
   const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
   if (workers <= 1)
   {
      for (std::size_t i = 0; i < n; ++i)
         body(i);
      return;
   }
   std::atomic<std::size_t> next{0};
   std::vector<std::jthread> pool;
   pool.reserve(workers);
   for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
         for (std::size_t i = next++; i < n; i = next++)
            body(i);
      });
}

} // namespace zetakit

#endif
