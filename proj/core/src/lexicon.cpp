#include "geosem/lexicon.hpp"

#include <fstream>
#include <istream>

#include "geosem/errors.hpp"
#include "geosem/text.hpp"

namespace geosem {

namespace {

std::string canonical(std::string_view s) {
  return text::join(text::split_ws(text::to_lower(text::trim(s))), " ");
}

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    fn(body, lineno);
  }
}

std::ifstream open(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw NotFoundError("cannot open lexicon file " + p.string());
  return in;
}

}  // namespace

Lexicon::Lexicon(std::map<std::string, std::string> lemma_table,
                 std::set<std::string> stopwords,
                 std::vector<std::set<std::string>> synonym_groups) {
  for (auto& [surface, lemma] : lemma_table) {
    auto s = canonical(surface);
    auto l = canonical(lemma);
    if (s.empty() || l.empty()) throw DataError("empty lemma table entry");
    lemma_table_[s] = l;
  }
  for (const auto& [surface, lemma] : lemma_table_) {
    auto it = lemma_table_.find(lemma);
    if (it != lemma_table_.end() && it->second != lemma) {
      throw DataError("lemma '" + lemma + "' (of '" + surface +
                      "') is itself mapped to '" + it->second + "'");
    }
  }
  for (const auto& w : stopwords) {
    auto c = canonical(w);
    if (!c.empty()) stopwords_.insert(std::move(c));
  }
  for (const auto& group : synonym_groups) {
    std::set<std::string> g;
    for (const auto& l : group) {
      auto c = canonical(l);
      if (!c.empty()) g.insert(std::move(c));
    }
    if (g.size() < 2) continue;
    for (const auto& l : g) {
      if (group_of_.contains(l)) {
        throw DataError("lemma '" + l + "' appears in more than one synonym group");
      }
      group_of_.emplace(l, groups_.size());
    }
    groups_.push_back(std::move(g));
  }
}

Lexicon Lexicon::load(std::istream& lemmas, std::istream& stopwords,
                      std::istream& synonyms) {
  std::map<std::string, std::string> table;
  for_each_line(lemmas, [&](std::string_view line, std::size_t n) {
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("lemma table", n, "expected 'surface<TAB>lemma'");
    }
    auto surface = text::trim(line.substr(0, tab));
    auto lemma = text::trim(line.substr(tab + 1));
    if (surface.empty() || lemma.empty()) {
      throw ParseError("lemma table", n, "empty surface form or lemma");
    }
    table[std::string(surface)] = std::string(lemma);
  });
  std::set<std::string> stop;
  for_each_line(stopwords, [&](std::string_view line, std::size_t) {
    stop.emplace(line);
  });
  std::vector<std::set<std::string>> groups;
  for_each_line(synonyms, [&](std::string_view line, std::size_t) {
    std::set<std::string> g;
    std::size_t start = 0;
    while (start <= line.size()) {
      auto comma = line.find(',', start);
      auto part = text::trim(line.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start));
      if (!part.empty()) g.emplace(part);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    groups.push_back(std::move(g));
  });
  return Lexicon(std::move(table), std::move(stop), std::move(groups));
}

Lexicon Lexicon::load_files(const std::filesystem::path& lemmas,
                            const std::filesystem::path& stopwords,
                            const std::filesystem::path& synonyms) {
  auto l = open(lemmas);
  auto s = open(stopwords);
  auto g = open(synonyms);
  return load(l, s, g);
}

std::string Lexicon::lemmatize(std::string_view word) const {
  if (word.empty()) throw InvalidArgument("lemmatize: empty word");
  auto lower = text::to_lower(word);
  auto it = lemma_table_.find(lower);
  return it == lemma_table_.end() ? lower : it->second;
}

bool Lexicon::is_stopword(std::string_view word) const {
  if (word.empty()) throw InvalidArgument("is_stopword: empty word");
  return stopwords_.contains(text::to_lower(word));
}

std::set<std::string> Lexicon::synonyms(std::string_view lemma,
                                        std::string_view /*context*/) const {
  auto it = group_of_.find(lemma);
  if (it == group_of_.end()) return {};
  std::set<std::string> out = groups_[it->second];
  out.erase(std::string(lemma));
  return out;
}

}  // namespace geosem
