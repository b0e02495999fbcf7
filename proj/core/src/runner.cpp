#include "qmahler/runner.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

namespace qm::verify {

namespace {

CheckResult evaluate(const CheckDef& def, std::optional<Real> tol_override) {
  CheckResult r;
  r.id = def.id;
  r.description = def.description;
  r.paper_anchor = def.anchor;
  r.status = def.status;
  r.tol = (tol_override && !def.exact) ? *tol_override : def.tol;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Evaluation e = def.evaluate();
    r.lhs = e.lhs;
    r.rhs = e.rhs;
    r.abs_err = std::abs(e.lhs - e.rhs);
    r.pass = r.abs_err <= r.tol;
    if (!e.note.empty()) r.description += " [" + e.note + "]";
  } catch (const std::exception& ex) {
    r.lhs = r.rhs = r.abs_err = std::numeric_limits<Real>::quiet_NaN();
    r.pass = false;
    r.description += " [error: " + std::string(ex.what()) + "]";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

CheckResult run_check(const std::string& id, std::optional<Real> tol_override) {
  const CheckDef* def = find_check(id);
  if (def == nullptr) throw UnknownCheck(id);
  return evaluate(*def, tol_override);
}

std::vector<CheckResult> run_all(const RunOptions& options) {
  std::vector<const CheckDef*> selected;
  for (const auto& def : registry()) {
    if (options.proved_only && def.status != Status::proved) continue;
    if (options.filter && fnmatch(options.filter->c_str(), def.id.c_str(), 0) != 0) continue;
    selected.push_back(&def);
  }
  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      results[i] = evaluate(*selected[i], options.tol_override);
    }
  };
  const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  const std::size_t extra = std::min(jobs, selected.size()) > 0 ? std::min(jobs, selected.size()) - 1 : 0;
  std::vector<std::jthread> pool;
  pool.reserve(extra);
  for (std::size_t k = 0; k < extra; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

int default_jobs() {
  if (const char* env = std::getenv("VERIFY_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

int exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (r.status == Status::proved && !r.pass) return 1;
  }
  return 0;
}

}  // namespace qm::verify
