#pragma once

#include <mutex>
#include <string>
#include <utility>

namespace sbcw {

// Every verification sweep runs the same per-item check either serially or
// under OpenMP; reports are identical in both modes.
enum class ExecMode { serial, parallel };

// Keeps the failure with the smallest item id so that parallel sweeps report
// the same "first" counterexample as the serial reference.
class FailureCollector {
 public:
  void record(long long id, std::string message) {
    std::lock_guard<std::mutex> lock(mu_);
    if (id_ < 0 || id < id_) {
      id_ = id;
      message_ = std::move(message);
    }
  }

  bool failed() const {
    std::lock_guard<std::mutex> lock(mu_);
    return id_ >= 0;
  }

  long long id() const {
    std::lock_guard<std::mutex> lock(mu_);
    return id_;
  }

  std::string message() const {
    std::lock_guard<std::mutex> lock(mu_);
    return message_;
  }

 private:
  mutable std::mutex mu_;
  long long id_ = -1;
  std::string message_;
};

template <class Fn>
void for_each_index(long long n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)mode;
#endif
  for (long long i = 0; i < n; ++i) fn(i);
}

}  // namespace sbcw
