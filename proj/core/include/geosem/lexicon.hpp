#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace geosem {

/// Source of query-dependent synonyms. `context` is the simplified query
/// (place reference removed) so that a word-sense disambiguation client can
/// pick the sense; the file-based Lexicon ignores it.
///
/// Implementations return lowercase lemmas and never the input lemma itself.
class SynonymProvider {
 public:
  virtual ~SynonymProvider() = default;
  virtual std::set<std::string> synonyms(std::string_view lemma,
                                         std::string_view context) const = 0;
};

/// Offline lemmatizer, stop list and flat synonym groups.
///
/// Files (UTF-8, '#' comments and blank lines ignored):
///   lemma table     surface<TAB>lemma
///   stop words      one word per line
///   synonym groups  one group per line, lemmas separated by commas
class Lexicon : public SynonymProvider {
 public:
  Lexicon() = default;
  Lexicon(std::map<std::string, std::string> lemma_table,
          std::set<std::string> stopwords,
          std::vector<std::set<std::string>> synonym_groups);

  static Lexicon load(std::istream& lemmas, std::istream& stopwords,
                      std::istream& synonyms);
  static Lexicon load_files(const std::filesystem::path& lemmas,
                            const std::filesystem::path& stopwords,
                            const std::filesystem::path& synonyms);

  /// Table lookup on the lowercased word; unknown words map to themselves.
  std::string lemmatize(std::string_view word) const;
  bool is_stopword(std::string_view word) const;
  std::set<std::string> synonyms(std::string_view lemma,
                                 std::string_view context) const override;

  const std::map<std::string, std::string, std::less<>>& lemma_table() const {
    return lemma_table_;
  }
  const std::set<std::string, std::less<>>& stopwords() const { return stopwords_; }
  const std::vector<std::set<std::string>>& synonym_groups() const {
    return groups_;
  }

 private:
  std::map<std::string, std::string, std::less<>> lemma_table_;
  std::set<std::string, std::less<>> stopwords_;
  std::vector<std::set<std::string>> groups_;
  std::map<std::string, std::size_t, std::less<>> group_of_;
};

}  // namespace geosem
