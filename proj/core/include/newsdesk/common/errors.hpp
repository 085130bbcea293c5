#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newsdesk {

// Base for every error raised by the library. Callers that do not care about
// the specific failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NEWSDESK_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

NEWSDESK_DEFINE_ERROR(UnsupportedKind);
NEWSDESK_DEFINE_ERROR(InvalidUrl);
NEWSDESK_DEFINE_ERROR(ExtractError);
NEWSDESK_DEFINE_ERROR(EmptyCorpus);
NEWSDESK_DEFINE_ERROR(DegenerateLabels);
NEWSDESK_DEFINE_ERROR(ShapeError);
NEWSDESK_DEFINE_ERROR(NotFitted);
NEWSDESK_DEFINE_ERROR(RangeError);
NEWSDESK_DEFINE_ERROR(NoStanceBackend);
NEWSDESK_DEFINE_ERROR(PartitionMismatch);
NEWSDESK_DEFINE_ERROR(UndefinedValence);
NEWSDESK_DEFINE_ERROR(NotFound);
NEWSDESK_DEFINE_ERROR(NoTopic);
NEWSDESK_DEFINE_ERROR(InvariantViolation);
NEWSDESK_DEFINE_ERROR(ConfigError);
NEWSDESK_DEFINE_ERROR(StoreError);
NEWSDESK_DEFINE_ERROR(FetchError);

#undef NEWSDESK_DEFINE_ERROR

// Malformed input document. `offset` is the byte position where parsing
// stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace newsdesk
