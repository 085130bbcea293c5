#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

namespace newsdesk::pipeline {

/// Runs `job` every `interval` on a dedicated thread. Runs never overlap:
/// ticks that fall due while the job runs collapse into a single follow-up
/// run, and trigger() during a run only marks one as pending.
class PeriodicJob {
 public:
  PeriodicJob(std::string name, std::chrono::milliseconds interval, std::function<void()> job,
              bool run_immediately = true);
  ~PeriodicJob();
  PeriodicJob(const PeriodicJob&) = delete;
  PeriodicJob& operator=(const PeriodicJob&) = delete;

  /// Requests a run as soon as possible.
  void trigger();
  void stop();

  std::uint64_t runs() const noexcept { return runs_.load(); }
  std::uint64_t failures() const noexcept { return failures_.load(); }
  /// Requests that were folded into an already pending or running run.
  std::uint64_t coalesced() const noexcept { return coalesced_.load(); }
  /// Highest number of simultaneously executing runs seen (1 by construction).
  int max_concurrency() const noexcept { return max_active_.load(); }
  const std::string& name() const noexcept { return name_; }

 private:
  void loop();

  std::string name_;
  std::chrono::milliseconds interval_;
  std::function<void()> job_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool pending_;
  bool running_ = false;
  bool stop_ = false;
  std::atomic<std::uint64_t> runs_{0};
  std::atomic<std::uint64_t> failures_{0};
  std::atomic<std::uint64_t> coalesced_{0};
  std::atomic<int> active_{0};
  std::atomic<int> max_active_{0};
  std::thread thread_;
};

}  // namespace newsdesk::pipeline
