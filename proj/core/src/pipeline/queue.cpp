#include "newsdesk/pipeline/queue.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>
#include <zlib.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include "newsdesk/common/errors.hpp"

namespace fs = std::filesystem;

namespace newsdesk::pipeline {

namespace {

constexpr std::size_t kHeader = 8;
constexpr std::uint32_t kMaxRecord = 64u << 20;

std::uint32_t crc_of(const std::string& payload) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size())));
}

void put_u32(char* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
}

std::uint32_t get_u32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

[[noreturn]] void fail(const std::string& what) {
  throw StoreError(what + ": " + std::strerror(errno));
}

void write_all(int fd, const char* data, std::size_t n, off_t at) {
  while (n > 0) {
    const ssize_t w = ::pwrite(fd, data, n, at);
    if (w < 0) {
      if (errno == EINTR) continue;
      fail("queue write");
    }
    data += w;
    at += w;
    n -= static_cast<std::size_t>(w);
  }
}

bool read_all(int fd, char* data, std::size_t n, off_t at) {
  while (n > 0) {
    const ssize_t r = ::pread(fd, data, n, at);
    if (r < 0) {
      if (errno == EINTR) continue;
      fail("queue read");
    }
    if (r == 0) return false;
    data += r;
    at += r;
    n -= static_cast<std::size_t>(r);
  }
  return true;
}

void fsync_dir(const fs::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
}

}  // namespace

struct DurableLog::Topic {
  int fd = -1;
  std::vector<std::uint64_t> positions;  // file position of each record
  std::uint64_t end = 0;                 // file size

  ~Topic() {
    if (fd >= 0) ::close(fd);
  }
};

bool valid_topic_name(const std::string& name) {
  if (name.empty() || name.front() == '.' || name.size() > 200) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

DurableLog::DurableLog(fs::path dir, Durability durability)
    : dir_(std::move(dir)), durability_(durability) {
  fs::create_directories(dir_ / "offsets");
  std::lock_guard lock(mu_);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.is_regular_file() && entry.path().extension() == ".log") {
      open_topic_locked(entry.path().stem().string());
    }
  }
  for (const auto& tdir : fs::directory_iterator(dir_ / "offsets")) {
    if (!tdir.is_directory()) continue;
    const auto topic = tdir.path().filename().string();
    auto it = topics_.find(topic);
    if (it == topics_.end()) continue;
    for (const auto& g : fs::directory_iterator(tdir.path())) {
      if (!g.is_regular_file() || g.path().extension() == ".tmp") continue;
      std::ifstream in(g.path());
      Offset v = 0;
      if (in >> v) {
        offsets_[{topic, g.path().filename().string()}] =
            std::min<Offset>(v, it->second->positions.size());
      }
    }
  }
}

DurableLog::~DurableLog() = default;

void DurableLog::open_topic_locked(const std::string& name) {
  auto t = std::make_unique<Topic>();
  const auto path = dir_ / (name + ".log");
  t->fd = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (t->fd < 0) fail("open " + path.string());
  struct stat st {};
  if (::fstat(t->fd, &st) != 0) fail("stat " + path.string());
  const auto size = static_cast<std::uint64_t>(st.st_size);

  std::uint64_t pos = 0;
  char header[kHeader];
  std::string payload;
  while (pos + kHeader <= size) {
    if (!read_all(t->fd, header, kHeader, static_cast<off_t>(pos))) break;
    const auto len = get_u32(header);
    const auto crc = get_u32(header + 4);
    if (len > kMaxRecord || pos + kHeader + len > size) break;
    payload.resize(len);
    if (!read_all(t->fd, payload.data(), len, static_cast<off_t>(pos + kHeader))) break;
    if (crc_of(payload) != crc) break;
    t->positions.push_back(pos);
    pos += kHeader + len;
  }
  if (pos < size) {
    truncated_bytes_ += size - pos;
    if (::ftruncate(t->fd, static_cast<off_t>(pos)) != 0) fail("truncate " + path.string());
    if (durability_ == Durability::fsync) ::fsync(t->fd);
  }
  t->end = pos;
  topics_[name] = std::move(t);
}

DurableLog::Topic& DurableLog::topic_locked(const std::string& name) const {
  auto it = topics_.find(name);
  if (it == topics_.end()) throw NoTopic("no such topic '" + name + "'");
  return *it->second;
}

void DurableLog::create_topic(const std::string& topic) {
  if (!valid_topic_name(topic)) throw ConfigError("invalid topic name '" + topic + "'");
  std::lock_guard lock(mu_);
  if (topics_.count(topic)) return;
  open_topic_locked(topic);
  if (durability_ == Durability::fsync) fsync_dir(dir_);
}

bool DurableLog::has_topic(const std::string& topic) const {
  std::lock_guard lock(mu_);
  return topics_.count(topic) > 0;
}

std::vector<std::string> DurableLog::topics() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [name, t] : topics_) out.push_back(name);
  return out;
}

Offset DurableLog::publish(const std::string& topic, const std::string& payload) {
  return publish_batch(topic, {payload});
}

Offset DurableLog::publish_batch(const std::string& topic, const std::vector<std::string>& payloads) {
  std::lock_guard lock(mu_);
  auto& t = topic_locked(topic);
  const Offset first = t.positions.size();
  if (payloads.empty()) return first;
  std::string buf;
  std::vector<std::uint64_t> starts;
  for (const auto& p : payloads) {
    if (p.size() > kMaxRecord) throw RangeError("message larger than 64 MiB");
    starts.push_back(t.end + buf.size());
    char header[kHeader];
    put_u32(header, static_cast<std::uint32_t>(p.size()));
    put_u32(header + 4, crc_of(p));
    buf.append(header, kHeader);
    buf += p;
  }
  write_all(t.fd, buf.data(), buf.size(), static_cast<off_t>(t.end));
  if (durability_ == Durability::fsync && ::fdatasync(t.fd) != 0) fail("queue fsync");
  t.end += buf.size();
  t.positions.insert(t.positions.end(), starts.begin(), starts.end());
  return first;
}

std::vector<Message> DurableLog::read(const std::string& topic, Offset from, std::size_t max) const {
  std::lock_guard lock(mu_);
  const auto& t = topic_locked(topic);
  std::vector<Message> out;
  char header[kHeader];
  for (Offset o = from; o < t.positions.size() && out.size() < max; ++o) {
    const auto pos = t.positions[o];
    if (!read_all(t.fd, header, kHeader, static_cast<off_t>(pos))) fail("queue short read");
    Message m;
    m.offset = o;
    m.payload.resize(get_u32(header));
    if (!read_all(t.fd, m.payload.data(), m.payload.size(), static_cast<off_t>(pos + kHeader))) {
      fail("queue short read");
    }
    out.push_back(std::move(m));
  }
  return out;
}

Offset DurableLog::end_offset(const std::string& topic) const {
  std::lock_guard lock(mu_);
  return topic_locked(topic).positions.size();
}

Offset DurableLog::committed(const std::string& topic, const std::string& group) const {
  std::lock_guard lock(mu_);
  topic_locked(topic);
  auto it = offsets_.find({topic, group});
  return it == offsets_.end() ? 0 : it->second;
}

void DurableLog::write_offset_locked(const std::string& topic, const std::string& group, Offset next) {
  if (!valid_topic_name(group)) throw ConfigError("invalid consumer group '" + group + "'");
  const auto tdir = dir_ / "offsets" / topic;
  fs::create_directories(tdir);
  const auto tmp = tdir / (group + ".tmp");
  const auto dst = tdir / group;
  {
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) fail("open " + tmp.string());
    const std::string text = std::to_string(next) + "\n";
    write_all(fd, text.data(), text.size(), 0);
    if (durability_ == Durability::fsync) ::fsync(fd);
    ::close(fd);
  }
  if (std::rename(tmp.c_str(), dst.c_str()) != 0) fail("rename " + dst.string());
  if (durability_ == Durability::fsync) fsync_dir(tdir);
  offsets_[{topic, group}] = next;
}

void DurableLog::commit(const std::string& topic, const std::string& group, Offset next) {
  std::lock_guard lock(mu_);
  const auto& t = topic_locked(topic);
  if (next > t.positions.size()) throw RangeError("commit past the end of '" + topic + "'");
  auto it = offsets_.find({topic, group});
  if (it != offsets_.end() && it->second >= next) return;
  write_offset_locked(topic, group, next);
}

void DurableLog::seek(const std::string& topic, const std::string& group, Offset offset) {
  std::lock_guard lock(mu_);
  const auto& t = topic_locked(topic);
  if (offset > t.positions.size()) throw RangeError("seek past the end of '" + topic + "'");
  write_offset_locked(topic, group, offset);
}

}  // namespace newsdesk::pipeline
