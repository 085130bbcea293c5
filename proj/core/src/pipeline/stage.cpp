#include "newsdesk/pipeline/stage.hpp"

#include <condition_variable>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

namespace newsdesk::pipeline {

namespace {

struct Outcome {
  std::vector<std::string> outputs;
  std::optional<std::string> dead_letter;
  std::uint64_t failures = 0;
};

}  // namespace

void ensure_topics(MessageQueue& queue, const StageDescriptor& desc) {
  queue.create_topic(desc.input_topic);
  if (!desc.output_topic.empty()) queue.create_topic(desc.output_topic);
  queue.create_topic(desc.dead_letter_topic());
}

StageRunner::StageRunner(MessageQueue& queue, StageDescriptor desc, FaultInjector* faults)
    : queue_(queue), desc_(std::move(desc)), faults_(faults) {
  if (desc_.parallelism == 0) desc_.parallelism = 1;
  if (desc_.batch_size == 0) desc_.batch_size = 1;
}

StageStats StageRunner::stats() const {
  std::lock_guard lock(stats_mu_);
  return stats_;
}

std::size_t StageRunner::run_once() {
  const Offset from = queue_.committed(desc_.input_topic, desc_.name);
  const auto batch = queue_.read(desc_.input_topic, from, desc_.batch_size);
  if (batch.empty()) return 0;

  std::vector<Outcome> outcomes(batch.size());
  auto handle = [&](std::size_t i) {
    const auto& msg = batch[i];
    if (faults_) faults_->at(FaultPoint::before_handle, desc_.name, msg.offset);
    auto& out = outcomes[i];
    std::string error;
    for (std::size_t attempt = 0; attempt <= desc_.max_retries; ++attempt) {
      try {
        out.outputs = desc_.handler(msg);
        return;
      } catch (const StageKilled&) {
        throw;
      } catch (const std::exception& e) {
        error = e.what();
      } catch (...) {
        error = "unknown exception";
      }
      ++out.failures;
    }
    out.outputs.clear();
    out.dead_letter = nlohmann::json{{"stage", desc_.name},
                                     {"topic", desc_.input_topic},
                                     {"offset", msg.offset},
                                     {"attempts", out.failures},
                                     {"error", error},
                                     {"payload", msg.payload}}
                          .dump();
  };

  const std::size_t workers = std::min(desc_.parallelism, batch.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) handle(i);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < batch.size(); i += workers) handle(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  if (faults_) faults_->at(FaultPoint::after_handle, desc_.name, batch.front().offset);

  std::vector<std::string> outputs;
  std::vector<std::string> dead;
  std::uint64_t failures = 0;
  for (auto& o : outcomes) {
    failures += o.failures;
    for (auto& p : o.outputs) outputs.push_back(std::move(p));
    if (o.dead_letter) {
      spdlog::warn("stage {}: message dead-lettered after {} attempts", desc_.name, o.failures);
      dead.push_back(std::move(*o.dead_letter));
    }
  }
  if (!desc_.output_topic.empty() && !outputs.empty()) {
    queue_.publish_batch(desc_.output_topic, outputs);
  }
  if (!dead.empty()) queue_.publish_batch(desc_.dead_letter_topic(), dead);
  if (faults_) faults_->at(FaultPoint::after_publish, desc_.name, batch.front().offset);
  queue_.commit(desc_.input_topic, desc_.name, batch.back().offset + 1);

  std::lock_guard lock(stats_mu_);
  stats_.processed += batch.size();
  stats_.failures += failures;
  stats_.dead_lettered += dead.size();
  ++stats_.batches;
  return batch.size();
}

std::size_t StageRunner::run_until_idle() {
  std::size_t total = 0;
  while (const auto n = run_once()) total += n;
  return total;
}

RunningStage::RunningStage(MessageQueue& queue, StageDescriptor desc,
                           std::chrono::milliseconds idle_wait, FaultInjector* faults)
    : runner_(queue, std::move(desc), faults) {
  thread_ = std::thread([this, idle_wait] { loop(idle_wait); });
}

RunningStage::~RunningStage() { stop(); }

void RunningStage::stop() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
  if (thread_.joinable()) thread_.join();
}

std::string RunningStage::last_error() const {
  std::lock_guard lock(mu_);
  return last_error_;
}

void RunningStage::loop(std::chrono::milliseconds idle_wait) {
  const auto& name = runner_.descriptor().name;
  try {
    while (!stop_) {
      if (runner_.run_once() > 0) continue;
      std::unique_lock lock(mu_);
      cv_.wait_for(lock, idle_wait, [this] { return stop_.load(); });
    }
  } catch (const std::exception& e) {
    crashed_ = true;
    std::lock_guard lock(mu_);
    last_error_ = e.what();
    spdlog::error("stage {} stopped: {}", name, e.what());
  }
  done_ = true;
}

std::unique_ptr<RunningStage> run_stage(MessageQueue& queue, StageDescriptor desc,
                                        std::chrono::milliseconds idle_wait) {
  ensure_topics(queue, desc);
  return std::make_unique<RunningStage>(queue, std::move(desc), idle_wait);
}

}  // namespace newsdesk::pipeline
