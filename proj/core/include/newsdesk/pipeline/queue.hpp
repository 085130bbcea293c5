#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace newsdesk::pipeline {

using Offset = std::uint64_t;

struct Message {
  Offset offset = 0;
  std::string payload;
};

/// Named append-only topics with per-consumer-group committed offsets.
/// Delivery is at-least-once: a consumer reads from its committed offset and
/// commits after its outputs are durable.
class MessageQueue {
 public:
  virtual ~MessageQueue() = default;

  /// Idempotent.
  virtual void create_topic(const std::string& topic) = 0;
  virtual bool has_topic(const std::string& topic) const = 0;
  virtual std::vector<std::string> topics() const = 0;

  /// Durable append. Throws NoTopic.
  virtual Offset publish(const std::string& topic, const std::string& payload) = 0;
  /// Appends all payloads; returns the offset of the first. Throws NoTopic.
  virtual Offset publish_batch(const std::string& topic, const std::vector<std::string>& payloads) = 0;

  /// Up to `max` messages starting at `from`. Throws NoTopic.
  virtual std::vector<Message> read(const std::string& topic, Offset from, std::size_t max) const = 0;
  /// Offset the next publish will get.
  virtual Offset end_offset(const std::string& topic) const = 0;

  /// Next offset the group will read; 0 before any commit.
  virtual Offset committed(const std::string& topic, const std::string& group) const = 0;
  /// Records that everything before `next` is done. Commits never move
  /// backwards: a lower value is ignored. Throws NoTopic, and RangeError past
  /// the end of the topic.
  virtual void commit(const std::string& topic, const std::string& group, Offset next) = 0;
  /// Operator replay: moves the group's position to `offset`, possibly
  /// backwards. Throws NoTopic / RangeError.
  virtual void seek(const std::string& topic, const std::string& group, Offset offset) = 0;

  Offset lag(const std::string& topic, const std::string& group) const {
    return end_offset(topic) - committed(topic, group);
  }
};

enum class Durability {
  flush,  // hand writes to the OS; survives process crashes
  fsync,  // also fsync; survives power loss
};

/// One file per topic under `dir` holding records [u32 length][u32 crc32]
/// [payload], offsets are record numbers. On open, a torn or corrupt tail
/// record is truncated away. Group offsets live in small files replaced
/// atomically (write, fsync, rename).
class DurableLog final : public MessageQueue {
 public:
  explicit DurableLog(std::filesystem::path dir, Durability durability = Durability::fsync);
  ~DurableLog() override;
  DurableLog(const DurableLog&) = delete;
  DurableLog& operator=(const DurableLog&) = delete;

  void create_topic(const std::string& topic) override;
  bool has_topic(const std::string& topic) const override;
  std::vector<std::string> topics() const override;
  Offset publish(const std::string& topic, const std::string& payload) override;
  Offset publish_batch(const std::string& topic, const std::vector<std::string>& payloads) override;
  std::vector<Message> read(const std::string& topic, Offset from, std::size_t max) const override;
  Offset end_offset(const std::string& topic) const override;
  Offset committed(const std::string& topic, const std::string& group) const override;
  void commit(const std::string& topic, const std::string& group, Offset next) override;
  void seek(const std::string& topic, const std::string& group, Offset offset) override;

  const std::filesystem::path& dir() const noexcept { return dir_; }
  /// Bytes dropped from torn tails when topics were opened.
  std::uint64_t truncated_bytes() const noexcept { return truncated_bytes_; }

 private:
  struct Topic;
  Topic& topic_locked(const std::string& name) const;
  void open_topic_locked(const std::string& name);
  void write_offset_locked(const std::string& topic, const std::string& group, Offset next);

  std::filesystem::path dir_;
  Durability durability_;
  mutable std::mutex mu_;
  std::map<std::string, std::unique_ptr<Topic>> topics_;
  std::map<std::pair<std::string, std::string>, Offset> offsets_;
  std::uint64_t truncated_bytes_ = 0;
};

/// Topic names: [A-Za-z0-9._-]+, not starting with '.'.
bool valid_topic_name(const std::string& name);

}  // namespace newsdesk::pipeline
