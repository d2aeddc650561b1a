#include <gtest/gtest.h>

#include "geosem/text.hpp"

using namespace geosem;

TEST(Text, TokenizeSplitsOnSpaceAndPunctuationAndFoldsCase) {
  EXPECT_EQ(text::tokenize("Nosocomi pediatrici, a TORINO!"),
            (std::vector<std::string>{"nosocomi", "pediatrici", "a", "torino"}));
  EXPECT_EQ(text::tokenize("dell'ospedale"), (std::vector<std::string>{"dell", "ospedale"}));
  EXPECT_EQ(text::tokenize("  "), std::vector<std::string>{});
}

TEST(Text, TokenizeFoldsLatin1Letters) {
  EXPECT_EQ(text::tokenize("CITTÀ Università"),
            (std::vector<std::string>{"città", "università"}));
}

TEST(Text, PropertyTermsDropPunctuationInsideWords) {
  EXPECT_EQ(text::property_terms("Ospedale Sant'Anna, Torino"),
            (std::vector<std::string>{"ospedale", "santanna", "torino"}));
  EXPECT_EQ(text::property_terms("GAM - Galleria"),
            (std::vector<std::string>{"gam", "galleria"}));
}

TEST(Text, Utf8RoundTrip) {
  const std::string s = "perché è già così";
  EXPECT_EQ(text::encode_utf8(text::decode_utf8(s)), s);
  EXPECT_EQ(text::length(s), 17u);
}

TEST(Text, TrimJoinSplit) {
  EXPECT_EQ(text::trim("  a b \t"), "a b");
  EXPECT_EQ(text::join({"a", "b", "c"}, "+"), "a+b+c");
  EXPECT_EQ(text::split_ws(" a  b\tc "), (std::vector<std::string>{"a", "b", "c"}));
}
