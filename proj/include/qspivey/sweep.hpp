#pragma once

#include "qspivey/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qspivey {

/// Runs fn(0..count-1) on up to `jobs` threads. Results land at their own index,
/// so the output order never depends on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct CheckOutcome {
  Json record;
  bool passed = false;
};

/// One unit of an acceptance criterion. The criterion holds when every check's
/// outcome matches expect_pass.
struct Check {
  std::function<CheckOutcome()> run;
  bool expect_pass = true;
};

Check report_check(std::function<VerificationReport()> make, bool expect_pass = true);

struct Criterion {
  unsigned id = 0;
  std::string title;
  std::vector<Check> checks;
};

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  std::size_t checks = 0;
  std::size_t met = 0;
  std::vector<Json> unmet;  // first few records that missed their expectation

  bool ok() const { return met == checks; }
};

struct SweepResult {
  std::vector<CriterionResult> criteria;

  std::size_t passed() const;
  std::size_t failed() const { return criteria.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

/// Runs every check; a check that throws counts as failed with the message recorded.
SweepResult run_suite(const std::vector<Criterion>& suite, unsigned jobs);

/// One JSON line per criterion, then the summary {failed, passed, total}.
std::string to_jsonl(const SweepResult& result);

/// Acceptance criteria 1-10: identities, oracle certification, specializations.
std::vector<Criterion> acceptance_core();

/// acceptance_core plus criterion 11 (sweep determinism across job counts and
/// lossless JSON round-trips).
std::vector<Criterion> acceptance_suite();

/// Number of set partitions of an n-element set by explicit enumeration.
BigInt count_set_partitions(unsigned n);

}  // namespace qspivey
