#include "newsdesk/textproc/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::textproc {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename F>
void for_each_line(std::string_view content, F&& f) {
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') f(line);
    start = end + 1;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lexicons build(std::string_view en, std::string_view ar, std::string_view lemmas) {
  Lexicons lex;
  for (auto& w : parse_word_list(en)) lex.stopwords_en.insert(w);
  for (auto& w : parse_word_list(ar)) lex.stopwords_ar.insert(normalize_ar(w));
  lex.lemmas_en = parse_lemma_table(lemmas);
  return lex;
}

}  // namespace

std::vector<std::string> parse_word_list(std::string_view content) {
  std::vector<std::string> out;
  for_each_line(content, [&](std::string_view line) {
    auto t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  });
  return out;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  return parse_word_list(read_file(path));
}

std::unordered_map<std::string, std::string> parse_lemma_table(std::string_view content) {
  std::unordered_map<std::string, std::string> out;
  for_each_line(content, [&](std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) return;
    auto from = trim(line.substr(0, tab));
    auto to = trim(line.substr(tab + 1));
    if (!from.empty() && !to.empty()) out.emplace(std::string(from), std::string(to));
  });
  return out;
}

Lexicons Lexicons::load(const std::filesystem::path& dir) {
  return build(read_file(dir / "stopwords_en.txt"), read_file(dir / "stopwords_ar.txt"),
               read_file(dir / "lemmas_en.tsv"));
}

const Lexicons& Lexicons::builtin() {
  static const Lexicons lex =
      build(builtin_stopwords_en(), builtin_stopwords_ar(), builtin_lemmas_en());
  return lex;
}

}  // namespace newsdesk::textproc
