#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "newsdesk/classifiers/frame.hpp"
#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/classifiers/source_classifier.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/textproc/tokenize.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace newsdesk;
using namespace newsdesk::classifiers;

namespace {

std::vector<std::string> six() {
  std::vector<std::string> out;
  for (auto s : all_values<SectionLabel>()) out.emplace_back(to_string(s));
  return out;
}

}  // namespace

TEST(SectionClassifier, HandBuiltModelArgmax) {
  const std::vector<textproc::Tokens> docs{{"goal", "match"}, {"stock"}};
  auto vocab = textproc::fit_vocabulary(docs);
  LinearModel m(six(), {"tfidf", vocab.size(), nlohmann::json::object()});
  const auto sports = to_index(SectionLabel::sports);
  for (std::size_t j = 0; j < vocab.size(); ++j) m.weights()[sports * vocab.size() + j] = 5.0;
  m.bias()[to_index(SectionLabel::health)] = 1.0;
  const SectionClassifier c(vocab, m);
  EXPECT_EQ(c.categorize("goal match goal", Language::en), SectionLabel::sports);
  // No features: the bias alone decides.
  EXPECT_EQ(c.categorize("", Language::en), SectionLabel::health);
  // All-zero model: every class ties and the first label wins.
  const SectionClassifier flat(vocab, LinearModel(six(), {"tfidf", vocab.size(), {}}));
  EXPECT_EQ(flat.categorize("goal", Language::en), SectionLabel::entertainment);
  EXPECT_THROW(SectionClassifier().categorize("x", Language::en), NotFitted);
  EXPECT_THROW(SectionClassifier(vocab, LinearModel({"a", "b"}, {"tfidf", vocab.size(), {}})),
               ConfigError);
}

TEST(SectionClassifier, HeldOutMacroF1OnSyntheticSections) {
  newsdesk::testing::SectionCorpusSpec spec;
  spec.per_section = 100;
  spec.seed = 1;
  const auto train = newsdesk::testing::make_section_corpus(spec);
  spec.seed = 2;
  spec.per_section = 50;
  const auto test = newsdesk::testing::make_section_corpus(spec);
  const auto model = SectionClassifier::train(train, TrainConfig{}, 1);
  std::vector<std::size_t> truth, pred;
  for (const auto& e : test) {
    truth.push_back(to_index(e.label));
    pred.push_back(to_index(model.categorize(e.text, e.language)));
  }
  EXPECT_GE(newsdesk::testing::macro_f1(truth, pred, 6), 0.9);
  const auto copy = SectionClassifier::from_json(model.to_json());
  EXPECT_EQ(copy.model(), model.model());
  EXPECT_EQ(copy.categorize(test[0].text, Language::en), model.categorize(test[0].text, Language::en));
}

TEST(SectionClassifier, NeedsTwoSections) {
  const std::vector<SectionExample> one{{"a b", Language::en, SectionLabel::sports},
                                        {"c d", Language::en, SectionLabel::sports}};
  EXPECT_THROW(SectionClassifier::train(one, {}), DegenerateLabels);
}

TEST(PropagandaLabel, IntervalTable) {
  EXPECT_EQ(propaganda_label(0.1), PropagandaLabel::very_unlikely);
  EXPECT_EQ(propaganda_label(0.0), PropagandaLabel::very_unlikely);
  EXPECT_EQ(propaganda_label(0.2), PropagandaLabel::unlikely);
  EXPECT_EQ(propaganda_label(std::nextafter(0.2, 0.0)), PropagandaLabel::very_unlikely);
  EXPECT_EQ(propaganda_label(0.4), PropagandaLabel::somehow);
  EXPECT_EQ(propaganda_label(0.59999), PropagandaLabel::somehow);
  EXPECT_EQ(propaganda_label(0.6), PropagandaLabel::likely);
  EXPECT_EQ(propaganda_label(0.8), PropagandaLabel::very_likely);
  EXPECT_EQ(propaganda_label(1.0), PropagandaLabel::very_likely);
  EXPECT_THROW(propaganda_label(-1e-12), RangeError);
  EXPECT_THROW(propaganda_label(1.0000001), RangeError);
  EXPECT_THROW(propaganda_label(std::nan("")), RangeError);
}

TEST(PropagandaLabel, Monotone) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    EXPECT_LE(to_index(propaganda_label(a)), to_index(propaganda_label(b)));
  }
}

TEST(PropagandaScorer, FeaturesAndTraining) {
  const auto f = propaganda_features("Abc abc.");
  EXPECT_EQ(f.extent() <= kPropagandaDimension, true);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_GE(f.weight(static_cast<std::uint32_t>(i)), 0.0);

  // Loud, repetitive texts against plain reporting; probes are unseen members of each template.
  std::vector<PropagandaExample> ex;
  for (int i = 0; i < 30; ++i) {
    ex.push_back({"ENEMIES! TRAITORS! They betray us, always betray us, betray betray! " +
                      std::to_string(i),
                  true});
    ex.push_back({"The committee published its quarterly report on regional infrastructure "
                  "spending, noting modest changes " + std::to_string(i) + ".",
                  false});
  }
  const auto s = PropagandaScorer::train(ex, {});
  const auto loud = s.score("ENEMIES! TRAITORS! They betray us, always betray us, betray betray! 97");
  const auto calm = s.score("The committee published its quarterly report on regional infrastructure "
                             "spending, noting modest changes 97.");
  EXPECT_GT(loud.index, 0.5);
  EXPECT_LT(calm.index, 0.5);
  EXPECT_EQ(loud.label, propaganda_label(loud.index));
  EXPECT_THROW(PropagandaScorer().score("x"), NotFitted);
  EXPECT_THROW(PropagandaScorer(LinearModel({"non_propagandistic", "propagandistic"},
                                            {"x", 10, nlohmann::json::object()})),
               ShapeError);
}

TEST(FrameBaseline, DistributionRules) {
  const KeywordFrameBaseline b;
  const auto none = b.classify("zzz qqq");
  double sum = 0;
  for (const auto& [f, p] : none) {
    EXPECT_DOUBLE_EQ(p, 1.0 / static_cast<double>(enum_count<FrameLabel>()));
    sum += p;
  }
  EXPECT_EQ(none.size(), enum_count<FrameLabel>());
  EXPECT_NEAR(sum, 1.0, 1e-12);

  std::unordered_multimap<std::string, FrameLabel> lex{{"tax", FrameLabel::economic},
                                                      {"hospital", FrameLabel::health_and_safety}};
  const KeywordFrameBaseline custom(lex);
  const auto d = classify_frame("tax tax hospital", custom);
  EXPECT_NEAR(d.at(FrameLabel::economic), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.at(FrameLabel::health_and_safety), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(d.at(FrameLabel::morality), 0.0);
}

TEST(FrameBaseline, ShippedLexiconParses) {
  const auto lex = parse_frame_lexicon(textproc::builtin_frame_lexicon());
  EXPECT_GT(lex.size(), 50u);
  const auto d = KeywordFrameBaseline().classify("The economy and unemployment dominate the budget.");
  EXPECT_GT(d.at(FrameLabel::economic), 0.5);
}

TEST(SourceClassifier, TrainsFromLabelledMedia) {
  using newsdesk::testing::make_article;
  std::map<MediumId, std::vector<Article>> articles;
  std::map<MediumId, MediumLabels> labels;
  for (int m = 0; m < 6; ++m) {
    const bool loud = m % 2 == 0;
    const auto id = "m" + std::to_string(m);
    for (int i = 0; i < 4; ++i) {
      articles[id].push_back(make_article(
          "https://" + id + ".example/" + std::to_string(i), "t",
          loud ? "SHOCKING!!! They LIE! Traitors everywhere!!! " + std::to_string(i)
               : "The ministry released figures on regional output and employment " + std::to_string(i),
          0, id));
    }
    labels[id] = {loud ? Factuality::low : Factuality::high, std::nullopt};
  }
  const auto c = SourceClassifier::train(labels, articles, {});
  EXPECT_TRUE(c.has_factuality());
  EXPECT_FALSE(c.has_bias());
  const std::vector<Article> probe{make_article("https://n.example/1", "t",
                                                "SHOCKING!!! LIES! Traitors!!!", 0, "n")};
  EXPECT_EQ(c.predict(probe).factuality, Factuality::low);
  EXPECT_FALSE(c.predict({}).factuality);
}

TEST(MediumLabels, CsvParsing) {
  const auto l = parse_labels_csv("medium_id,factuality,bias\na,high,center\nb,,left\nc,mixed,\n");
  EXPECT_EQ(l.at("a"), (MediumLabels{Factuality::high, BiasLabel::center}));
  EXPECT_EQ(l.at("b"), (MediumLabels{std::nullopt, BiasLabel::left}));
  EXPECT_EQ(l.at("c"), (MediumLabels{Factuality::mixed, std::nullopt}));
  EXPECT_THROW(parse_labels_csv("medium_id,factuality,bias\na,great,\n"), ConfigError);
}
