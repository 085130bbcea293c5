#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "newsdesk/pipeline/queue.hpp"

namespace newsdesk::pipeline {

/// Maps one input message to the payloads to publish downstream. Must be
/// idempotent with respect to the article the message carries; may be
/// called concurrently when parallelism > 1.
using Handler = std::function<std::vector<std::string>(const Message&)>;

struct StageDescriptor {
  std::string name;  // also the consumer group on the input topic
  std::string input_topic;
  std::string output_topic;  // empty for a sink
  Handler handler;
  std::size_t parallelism = 1;
  std::size_t max_retries = 3;
  std::size_t batch_size = 32;

  std::string dead_letter_topic() const { return name + ".dead"; }
};

/// Simulated process death; never counted as a handler failure.
class StageKilled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FaultPoint {
  before_handle,  // per message
  after_handle,   // per batch, outputs computed but not published
  after_publish,  // per batch, outputs published but offset not committed
};

class FaultInjector {
 public:
  virtual ~FaultInjector() = default;
  /// May throw StageKilled.
  virtual void at(FaultPoint point, const std::string& stage, Offset offset) = 0;
};

struct StageStats {
  std::uint64_t processed = 0;  // committed messages
  std::uint64_t failures = 0;   // handler exceptions
  std::uint64_t dead_lettered = 0;
  std::uint64_t batches = 0;
};

/// Consumes a stage's input from the committed offset: handles each message
/// (retrying a failing one up to max_retries times, then routing it to the
/// dead-letter topic), publishes outputs in input order, and commits only
/// after publishing.
class StageRunner {
 public:
  StageRunner(MessageQueue& queue, StageDescriptor desc, FaultInjector* faults = nullptr);

  /// One batch; returns the number of messages committed (0 when idle).
  /// StageKilled propagates with nothing committed for the batch.
  std::size_t run_once();
  std::size_t run_until_idle();

  const StageDescriptor& descriptor() const noexcept { return desc_; }
  StageStats stats() const;

 private:
  MessageQueue& queue_;
  StageDescriptor desc_;
  FaultInjector* faults_;
  mutable std::mutex stats_mu_;
  StageStats stats_;
};

/// A StageRunner on its own thread, polling while the input is idle.
class RunningStage {
 public:
  RunningStage(MessageQueue& queue, StageDescriptor desc,
               std::chrono::milliseconds idle_wait = std::chrono::milliseconds(200),
               FaultInjector* faults = nullptr);
  ~RunningStage();
  RunningStage(const RunningStage&) = delete;
  RunningStage& operator=(const RunningStage&) = delete;

  void stop();
  bool running() const noexcept { return !done_.load(); }
  /// True when the thread ended because of StageKilled or an unexpected error.
  bool crashed() const noexcept { return crashed_.load(); }
  std::string last_error() const;
  StageStats stats() const { return runner_.stats(); }

 private:
  void loop(std::chrono::milliseconds idle_wait);

  StageRunner runner_;
  std::atomic<bool> stop_{false};
  std::atomic<bool> done_{false};
  std::atomic<bool> crashed_{false};
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::string last_error_;
  std::thread thread_;
};

/// Creates the input, output and dead-letter topics and starts the stage.
std::unique_ptr<RunningStage> run_stage(MessageQueue& queue, StageDescriptor desc,
                                        std::chrono::milliseconds idle_wait =
                                            std::chrono::milliseconds(200));

void ensure_topics(MessageQueue& queue, const StageDescriptor& desc);

}  // namespace newsdesk::pipeline
