#include "newsdesk/pipeline/scheduler.hpp"

#include <spdlog/spdlog.h>

namespace newsdesk::pipeline {

PeriodicJob::PeriodicJob(std::string name, std::chrono::milliseconds interval,
                         std::function<void()> job, bool run_immediately)
    : name_(std::move(name)),
      interval_(interval),
      job_(std::move(job)),
      pending_(run_immediately),
      thread_([this] { loop(); }) {}

PeriodicJob::~PeriodicJob() { stop(); }

void PeriodicJob::trigger() {
  {
    std::lock_guard lock(mu_);
    if (pending_ || running_) ++coalesced_;
    pending_ = true;
  }
  cv_.notify_all();
}

void PeriodicJob::stop() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
  if (thread_.joinable()) thread_.join();
}

void PeriodicJob::loop() {
  using clock = std::chrono::steady_clock;
  auto next = clock::now() + interval_;
  std::unique_lock lock(mu_);
  while (!stop_) {
    cv_.wait_until(lock, next, [this] { return stop_ || pending_; });
    if (stop_) break;
    const auto now = clock::now();
    if (!pending_ && now < next) continue;
    if (now >= next) {
      // Every tick that fell due while we were busy folds into this run.
      const auto missed = (now - next) / interval_;
      if (missed > 0) coalesced_ += static_cast<std::uint64_t>(missed);
      if (pending_) ++coalesced_;
      next += interval_ * (missed + 1);
    }
    pending_ = false;
    running_ = true;
    lock.unlock();
    const int active = ++active_;
    int seen = max_active_.load();
    while (active > seen && !max_active_.compare_exchange_weak(seen, active)) {
    }
    try {
      job_();
    } catch (const std::exception& e) {
      ++failures_;
      spdlog::error("job {} failed: {}", name_, e.what());
    }
    --active_;
    ++runs_;
    lock.lock();
    running_ = false;
  }
}

}  // namespace newsdesk::pipeline
