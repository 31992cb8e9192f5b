#ifndef BITONIC_WORKER_POOL_HPP
#define BITONIC_WORKER_POOL_HPP

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bitonic {

// Contiguous slice of `total` items owned by `worker` out of `workers`.
// Slices are disjoint, cover [0, total), and depend only on the arguments,
// so a given worker count always yields the same partition.
struct WorkRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline WorkRange work_slice(std::size_t total, unsigned worker,
                            unsigned workers) {
  return WorkRange{total * worker / workers, total * (worker + 1) / workers};
}

// Fork-join pool: run() invokes a task once per worker index and returns only
// after every invocation finished, giving the full barrier that separates
// consecutive launches. The calling thread acts as worker 0; a pool of size 1
// spawns no threads at all.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  unsigned worker_count() const { return workers_; }

  void run(const std::function<void(unsigned)>& task);

 private:
  void thread_main(unsigned worker);

  unsigned workers_;
  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(unsigned)>* task_ = nullptr;
  std::uint64_t generation_ = 0;
  unsigned pending_ = 0;
  bool stop_ = false;
};

}  // namespace bitonic

#endif  // BITONIC_WORKER_POOL_HPP
