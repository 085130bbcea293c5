#include <gtest/gtest.h>

#include <fstream>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/pipeline/queue.hpp"
#include "support/pipeline_harness.hpp"

using namespace newsdesk;
using namespace newsdesk::pipeline;

namespace {

std::uintmax_t log_size(const std::filesystem::path& p) { return std::filesystem::file_size(p); }

}  // namespace

TEST(DurableLog, PublishReadAndOffsets) {
  const auto dir = newsdesk::testing::scratch_dir("queue-basic");
  DurableLog q(dir);
  q.create_topic("a");
  q.create_topic("a");
  EXPECT_TRUE(q.has_topic("a"));
  EXPECT_EQ(q.publish("a", "one"), 0u);
  EXPECT_EQ(q.publish_batch("a", {"two", "three", ""}), 1u);
  EXPECT_EQ(q.end_offset("a"), 4u);
  const auto msgs = q.read("a", 1, 2);
  ASSERT_EQ(msgs.size(), 2u);
  EXPECT_EQ(msgs[0].offset, 1u);
  EXPECT_EQ(msgs[0].payload, "two");
  EXPECT_EQ(msgs[1].payload, "three");
  EXPECT_EQ(q.read("a", 3, 10).at(0).payload, "");
  EXPECT_TRUE(q.read("a", 4, 10).empty());
  EXPECT_EQ(q.lag("a", "g"), 4u);
}

TEST(DurableLog, CommitIsMonotoneAndSeekRewinds) {
  const auto dir = newsdesk::testing::scratch_dir("queue-commit");
  DurableLog q(dir);
  q.create_topic("t");
  q.publish_batch("t", {"a", "b", "c"});
  q.commit("t", "g", 2);
  q.commit("t", "g", 1);
  EXPECT_EQ(q.committed("t", "g"), 2u);
  EXPECT_THROW(q.commit("t", "g", 4), RangeError);
  q.seek("t", "g", 0);
  EXPECT_EQ(q.committed("t", "g"), 0u);
  EXPECT_EQ(q.committed("t", "other"), 0u);
}

TEST(DurableLog, UnknownTopicsAndBadNames) {
  const auto dir = newsdesk::testing::scratch_dir("queue-errors");
  DurableLog q(dir);
  EXPECT_THROW(q.publish("missing", "x"), NoTopic);
  EXPECT_THROW(q.read("missing", 0, 1), NoTopic);
  EXPECT_THROW(q.commit("missing", "g", 0), NoTopic);
  EXPECT_THROW(q.create_topic("../escape"), ConfigError);
  EXPECT_TRUE(valid_topic_name("articles.ingested"));
  EXPECT_TRUE(valid_topic_name("stance.dead"));
  EXPECT_FALSE(valid_topic_name(".hidden"));
  EXPECT_FALSE(valid_topic_name(""));
  EXPECT_FALSE(valid_topic_name("a/b"));
}

TEST(DurableLog, SurvivesReopen) {
  const auto dir = newsdesk::testing::scratch_dir("queue-reopen");
  {
    DurableLog q(dir, Durability::flush);
    q.create_topic("t");
    q.publish_batch("t", {"x", "y"});
    q.commit("t", "g", 1);
  }
  DurableLog q(dir);
  EXPECT_EQ(q.end_offset("t"), 2u);
  EXPECT_EQ(q.committed("t", "g"), 1u);
  EXPECT_EQ(q.read("t", 1, 1).at(0).payload, "y");
  EXPECT_EQ(q.truncated_bytes(), 0u);
}

TEST(DurableLog, TornTailIsTruncated) {
  const auto dir = newsdesk::testing::scratch_dir("queue-torn");
  std::uintmax_t intact = 0;
  {
    DurableLog q(dir);
    q.create_topic("t");
    q.publish_batch("t", {"first", "second"});
    intact = log_size(dir / "t.log");
  }
  {
    // Header of a 100-byte record followed by only 3 payload bytes.
    std::ofstream out(dir / "t.log", std::ios::binary | std::ios::app);
    const unsigned char partial[] = {100, 0, 0, 0, 1, 2, 3, 4, 'a', 'b', 'c'};
    out.write(reinterpret_cast<const char*>(partial), sizeof partial);
  }
  DurableLog q(dir);
  EXPECT_EQ(q.end_offset("t"), 2u);
  EXPECT_EQ(q.truncated_bytes(), 11u);
  EXPECT_EQ(log_size(dir / "t.log"), intact);
  EXPECT_EQ(q.publish("t", "third"), 2u);
  EXPECT_EQ(q.read("t", 0, 10).size(), 3u);
}

TEST(DurableLog, CorruptRecordEndsTheLog) {
  const auto dir = newsdesk::testing::scratch_dir("queue-crc");
  {
    DurableLog q(dir);
    q.create_topic("t");
    q.publish_batch("t", {"aaaa", "bbbb", "cccc"});
  }
  {
    // Flip a payload byte of the second record (8-byte header + 4 bytes each).
    std::fstream f(dir / "t.log", std::ios::binary | std::ios::in | std::ios::out);
    f.seekp(12 + 8);
    f.put('X');
  }
  DurableLog q(dir);
  EXPECT_EQ(q.end_offset("t"), 1u);
  EXPECT_EQ(q.truncated_bytes(), 24u);
  EXPECT_EQ(q.read("t", 0, 5).at(0).payload, "aaaa");
}

TEST(DurableLog, CommitPastRecoveredEndIsClamped) {
  const auto dir = newsdesk::testing::scratch_dir("queue-clamp");
  {
    DurableLog q(dir);
    q.create_topic("t");
    q.publish_batch("t", {"a", "b"});
    q.commit("t", "g", 2);
  }
  std::filesystem::resize_file(dir / "t.log", 9 + 8);  // keep record 0, tear record 1
  DurableLog q(dir);
  EXPECT_EQ(q.end_offset("t"), 1u);
  EXPECT_LE(q.committed("t", "g"), q.end_offset("t"));
}
