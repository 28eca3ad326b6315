#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace oyang {

/// Outcome of one grid point of an identity suite. `witness` holds the
/// canonical serialization of the nonzero difference LHS - RHS when the
/// check fails; pass iff the witness element was zero.
struct CheckRecord {
  std::string suite;
  std::string params;
  bool pass = false;
  std::string witness;
  double elapsed_ms = 0.0;
};

struct SuiteSummary {
  int pass = 0, fail = 0;
  int total() const { return pass + fail; }
};

SuiteSummary summarize(const std::vector<CheckRecord>& records);

/// A list of independent grid-point checks. Each function computes the
/// difference of the two sides and reports (pass, witness); when its
/// `perturb` argument is true it must add a unit to the difference before
/// the zero test, so a vacuously-passing comparison cannot survive the
/// negative-control run.
class TaskList {
 public:
  using Fn = std::function<std::pair<bool, std::string>(bool perturb)>;

  explicit TaskList(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string params, Fn fn) {
    params_.push_back(std::move(params));
    fns_.push_back(std::move(fn));
  }
  std::size_t size() const { return fns_.size(); }
  const std::string& suite() const { return suite_; }

  /// Runs every task (sharded over `jobs` workers), merging records in task
  /// order so output is independent of scheduling. `perturb_index` modulo
  /// the task count selects exactly one task to run in its perturbed
  /// variant.
  std::vector<CheckRecord> run(int jobs,
                               std::optional<std::size_t> perturb_index = {}) const;

 private:
  std::string suite_;
  std::vector<std::string> params_;
  std::vector<Fn> fns_;
};

/// Worker count resolution: explicit value, else OYANG_JOBS, else 1.
int default_jobs();

}  // namespace oyang
