#include "newsdesk/ingest/feed.hpp"

#include <set>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/utf8.hpp"
#include "newsdesk/ingest/html.hpp"
#include "newsdesk/ingest/url.hpp"
#include "newsdesk/ingest/xml.hpp"

namespace newsdesk::ingest {

namespace {

std::string trimmed_text(const XmlElement* el) {
  return el ? utf8::collapse_whitespace(el->text_content()) : std::string();
}

std::optional<Timestamp> date_of(const XmlElement& item,
                                 std::initializer_list<std::string_view> names) {
  for (auto name : names) {
    if (const auto* el = item.child(name)) {
      if (auto t = parse_any_date(trimmed_text(el))) return t;
    }
  }
  return std::nullopt;
}

void parse_rss_items(const XmlElement& parent, std::string_view feed_url,
                     std::vector<FeedEntry>& out) {
  for (const auto* item : parent.children_named("item")) {
    std::string link = trimmed_text(item->child("link"));
    if (link.empty()) {
      if (const auto* guid = item->child("guid")) {
        const auto* permalink = guid->attribute("isPermaLink");
        if (!permalink || *permalink != "false") link = trimmed_text(guid);
      }
    }
    if (link.empty()) continue;
    out.push_back({trimmed_text(item->child("title")), resolve_url(feed_url, link),
                   date_of(*item, {"pubDate", "date", "published", "updated"})});
  }
}

std::vector<FeedEntry> parse_rss(std::string_view raw, std::string_view feed_url) {
  const XmlElement root = parse_xml(raw);
  std::vector<FeedEntry> out;
  if (root.local_name() == "rss") {
    const auto* channel = root.child("channel");
    if (!channel) throw ParseError("<rss> without <channel>", 0);
    parse_rss_items(*channel, feed_url, out);
  } else if (root.local_name() == "RDF") {
    parse_rss_items(root, feed_url, out);
  } else {
    throw ParseError("expected <rss> or <rdf:RDF> root, found <" + root.name + ">", 0);
  }
  return out;
}

std::vector<FeedEntry> parse_atom(std::string_view raw, std::string_view feed_url) {
  const XmlElement root = parse_xml(raw);
  if (root.local_name() != "feed") {
    throw ParseError("expected <feed> root, found <" + root.name + ">", 0);
  }
  std::vector<FeedEntry> out;
  for (const auto* entry : root.children_named("entry")) {
    std::string href;
    for (const auto* link : entry->children_named("link")) {
      const auto* rel = link->attribute("rel");
      const auto* h = link->attribute("href");
      if (h && (!rel || *rel == "alternate")) {
        href = *h;
        break;
      }
    }
    if (href.empty()) continue;
    out.push_back({trimmed_text(entry->child("title")), resolve_url(feed_url, href),
                   date_of(*entry, {"published", "updated", "issued"})});
  }
  return out;
}

std::vector<FeedEntry> parse_list_page(std::string_view raw, std::string_view page_url) {
  const std::string host = url_host(page_url);
  std::vector<FeedEntry> out;
  std::set<std::string> seen;
  const auto tokens = tokenize_html(raw);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    if (tok.kind != HtmlToken::Kind::start_tag || tok.name != "a") continue;
    const auto* href = tok.attribute("href");
    if (!href || href->empty() || (*href)[0] == '#') continue;
    std::string text;
    for (std::size_t k = i + 1; k < tokens.size(); ++k) {
      if (tokens[k].kind == HtmlToken::Kind::end_tag && tokens[k].name == "a") break;
      if (tokens[k].kind == HtmlToken::Kind::text) text += tokens[k].text;
    }
    text = utf8::collapse_whitespace(text);
    if (text.empty()) continue;
    std::string link;
    try {
      link = resolve_url(page_url, *href);
      const Url u = parse_absolute_url(link);
      if (*u.scheme != "http" && *u.scheme != "https") continue;
      if (url_host(link) != host) continue;
    } catch (const InvalidUrl&) {
      continue;
    }
    if (!seen.insert(link).second) continue;
    out.push_back({std::move(text), std::move(link), std::nullopt});
  }
  return out;
}

}  // namespace

FeedKind parse_feed_kind(std::string_view name) {
  if (name == "rss") return FeedKind::rss;
  if (name == "atom") return FeedKind::atom;
  if (name == "list-page") return FeedKind::list_page;
  throw UnsupportedKind("unsupported feed kind '" + std::string(name) + "'");
}

std::string_view to_string(FeedKind kind) {
  switch (kind) {
    case FeedKind::rss:
      return "rss";
    case FeedKind::atom:
      return "atom";
    case FeedKind::list_page:
      return "list-page";
  }
  return "rss";
}

std::vector<FeedEntry> parse_feed(std::string_view raw, FeedKind kind, std::string_view feed_url) {
  switch (kind) {
    case FeedKind::rss:
      return parse_rss(raw, feed_url);
    case FeedKind::atom:
      return parse_atom(raw, feed_url);
    case FeedKind::list_page:
      return parse_list_page(raw, feed_url);
  }
  throw UnsupportedKind("unsupported feed kind");
}

}  // namespace newsdesk::ingest
