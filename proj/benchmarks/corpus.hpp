#pragma once

#include <cstdint>
#include <vector>

#include "newsdesk/model/article.hpp"

namespace newsdesk::bench {

/// `topics` clusters of made-up words over `days` days, `n` articles total.
std::vector<Article> make_corpus(std::size_t n, std::size_t topics, int days, std::uint64_t seed);

}  // namespace newsdesk::bench
