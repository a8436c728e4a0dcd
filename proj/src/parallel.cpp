#include <cstdlib>
#include <future>
#include <thread>

#include "prelie2/report.hpp"

namespace prelie2 {

std::size_t worker_limit() {
  if (const char* env = std::getenv("PRELIE2_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return static_cast<std::size_t>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ValidationReport run_families(const std::vector<CheckFamily>& families) {
  std::vector<ValidationReport> parts(families.size());
  const std::size_t workers = std::min(worker_limit(), families.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < families.size(); ++i) families[i](parts[i]);
  } else {
    // Static striping keeps the assignment deterministic; output order is
    // fixed by the merge below regardless of scheduling.
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < families.size(); i += workers) families[i](parts[i]);
      }));
    for (auto& j : jobs) j.get();
  }
  ValidationReport merged;
  for (const auto& p : parts) merged.merge(p);
  merged.sort();
  return merged;
}

}  // namespace prelie2
