#include "oyang/check.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace oyang {

SuiteSummary summarize(const std::vector<CheckRecord>& records) {
  SuiteSummary s;
  for (const auto& r : records) (r.pass ? s.pass : s.fail)++;
  return s;
}

std::vector<CheckRecord> TaskList::run(int jobs,
                                       std::optional<std::size_t> perturb_index) const {
  std::vector<CheckRecord> out(fns_.size());
  auto work = [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    bool perturb = perturb_index && (*perturb_index % fns_.size()) == i;
    auto [pass, witness] = fns_[i](perturb);
    auto t1 = std::chrono::steady_clock::now();
    CheckRecord r;
    r.suite = suite_;
    r.params = params_[i];
    r.pass = pass;
    r.witness = std::move(witness);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out[i] = std::move(r);
  };

  if (jobs <= 1 || fns_.size() <= 1) {
    for (std::size_t i = 0; i < fns_.size(); ++i) work(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= fns_.size()) return;
      work(i);
    }
  };
  std::vector<std::thread> pool;
  int w = std::min<std::size_t>(jobs, fns_.size());
  pool.reserve(w);
  for (int t = 0; t < w; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("OYANG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace oyang
