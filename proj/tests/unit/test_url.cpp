#include <gtest/gtest.h>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/url.hpp"

using namespace newsdesk;
using namespace newsdesk::ingest;

namespace {

struct Case {
  const char* reference;
  const char* expected;
};

// RFC 3986 section 5.4, normal and abnormal examples, base http://a/b/c/d;p?q.
constexpr Case kRfcExamples[] = {
    {"g:h", "g:h"},
    {"g", "http://a/b/c/g"},
    {"./g", "http://a/b/c/g"},
    {"g/", "http://a/b/c/g/"},
    {"/g", "http://a/g"},
    {"//g", "http://g"},
    {"?y", "http://a/b/c/d;p?y"},
    {"g?y", "http://a/b/c/g?y"},
    {"#s", "http://a/b/c/d;p?q#s"},
    {"g#s", "http://a/b/c/g#s"},
    {"g?y#s", "http://a/b/c/g?y#s"},
    {";x", "http://a/b/c/;x"},
    {"g;x", "http://a/b/c/g;x"},
    {"g;x?y#s", "http://a/b/c/g;x?y#s"},
    {"", "http://a/b/c/d;p?q"},
    {".", "http://a/b/c/"},
    {"./", "http://a/b/c/"},
    {"..", "http://a/b/"},
    {"../", "http://a/b/"},
    {"../g", "http://a/b/g"},
    {"../..", "http://a/"},
    {"../../", "http://a/"},
    {"../../g", "http://a/g"},
    {"../../../g", "http://a/g"},
    {"../../../../g", "http://a/g"},
    {"/./g", "http://a/g"},
    {"/../g", "http://a/g"},
    {"g.", "http://a/b/c/g."},
    {".g", "http://a/b/c/.g"},
    {"g..", "http://a/b/c/g.."},
    {"..g", "http://a/b/c/..g"},
    {"./../g", "http://a/b/g"},
    {"./g/.", "http://a/b/c/g/"},
    {"g/./h", "http://a/b/c/g/h"},
    {"g/../h", "http://a/b/c/h"},
    {"g;x=1/./y", "http://a/b/c/g;x=1/y"},
    {"g;x=1/../y", "http://a/b/c/y"},
    {"g?y/./x", "http://a/b/c/g?y/./x"},
    {"g?y/../x", "http://a/b/c/g?y/../x"},
    {"g#s/./x", "http://a/b/c/g#s/./x"},
    {"g#s/../x", "http://a/b/c/g#s/../x"},
    {"http:g", "http:g"},
};

}  // namespace

TEST(ResolveUrl, MatchesRfc3986Examples) {
  for (const auto& c : kRfcExamples) {
    EXPECT_EQ(resolve_url("http://a/b/c/d;p?q", c.reference), c.expected) << c.reference;
  }
}

TEST(ResolveUrl, FeedRelativeLinks) {
  EXPECT_EQ(resolve_url("https://x.y/feed", "/a"), "https://x.y/a");
  EXPECT_EQ(resolve_url("https://x.y/news/feed.xml", "story?id=3"), "https://x.y/news/story?id=3");
  EXPECT_EQ(resolve_url("https://x.y/feed", "https://other.example/p"), "https://other.example/p");
}

TEST(ParseUrl, KeepsEmptyAndAbsentComponentsApart) {
  const auto a = parse_url_reference("http://h/p?");
  ASSERT_TRUE(a.query);
  EXPECT_EQ(*a.query, "");
  EXPECT_FALSE(parse_url_reference("http://h/p").query);
  EXPECT_EQ(a.to_string(), "http://h/p?");
  EXPECT_THROW(parse_url_reference("http://h/a b"), InvalidUrl);
  EXPECT_THROW(parse_absolute_url("/relative"), InvalidUrl);
  EXPECT_THROW(parse_absolute_url("http:///nohost"), InvalidUrl);
}

TEST(CanonicalizeUrl, NormalizationRules) {
  EXPECT_EQ(canonicalize_url("HTTPS://X.COM:443/a#frag"), "https://x.com/a");
  EXPECT_EQ(canonicalize_url("https://x.com/a?utm_source=t&b=2&a=1"), "https://x.com/a?a=1&b=2");
  EXPECT_EQ(canonicalize_url("https://x.com/a"), "https://x.com/a");
  EXPECT_EQ(canonicalize_url("http://x.com:80"), "http://x.com/");
  EXPECT_EQ(canonicalize_url("http://x.com:8080/A?fbclid=1&gclid=2&utm_medium=x"),
            "http://x.com:8080/A");
  EXPECT_THROW(canonicalize_url("not a url"), InvalidUrl);
  EXPECT_THROW(canonicalize_url("/a"), InvalidUrl);
}

TEST(CanonicalizeUrl, Idempotent) {
  const char* urls[] = {"HTTPS://X.COM:443/a/../b/./c?z=1&utm_x=2&a=&b=3#f",
                        "http://Example.org?b=2&a=1",
                        "https://x.com/%7Euser?q=%20",
                        "http://x.com:8080/path;p?k=v&k=u"};
  for (const char* u : urls) {
    const auto once = canonicalize_url(u);
    EXPECT_EQ(canonicalize_url(once), once) << u;
  }
}

TEST(UrlHost, StripsPortAndUserinfo) {
  EXPECT_EQ(url_host("https://user:pw@News.Example.com:8443/x"), "news.example.com");
}
