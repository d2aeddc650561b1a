#include "geosem/interpreter.hpp"

#include <algorithm>
#include <map>

#include "geosem/text.hpp"

namespace geosem {

std::vector<std::string> NormalizedQuery::lemmas() const {
  std::vector<std::string> out;
  for (const auto& g : groups) {
    out.push_back(g.original);
    out.insert(out.end(), g.synonyms.begin(), g.synonyms.end());
  }
  return out;
}

Interpreter::Interpreter(std::shared_ptr<const Ontology> ontology,
                         std::shared_ptr<const Lexicon> lexicon,
                         std::shared_ptr<const GeoResolver> geo,
                         InterpreterOptions options,
                         std::shared_ptr<const SynonymProvider> synonyms)
    : ontology_(std::move(ontology)),
      lexicon_(std::move(lexicon)),
      geo_(std::move(geo)),
      options_(options),
      synonyms_(std::move(synonyms)) {
  if (!ontology_ || !lexicon_ || !geo_) {
    throw InvalidArgument("interpreter needs an ontology, a lexicon and a gazetteer");
  }
  if (!options_.default_bbox.valid()) {
    throw InvalidArgument("invalid default bounding box");
  }
  if (options_.max_tuple == 0) options_.max_tuple = 1;
  if (!synonyms_) synonyms_ = lexicon_;
}

NormalizedQuery Interpreter::preprocess(std::string_view query,
                                        const std::optional<BoundingBox>& viewport) const {
  if (text::trim(query).empty()) throw EmptyQueryError("query is empty");
  if (viewport && !viewport->valid()) {
    throw InvalidArgument("invalid viewport " + format_bbox(*viewport));
  }
  NormalizedQuery nq;
  nq.raw = std::string(query);

  const auto tokens = text::tokenize(query);
  auto geo = geo_->extract_geo_reference(tokens);
  nq.place = geo.place;
  nq.simplified = text::join(geo.remaining, " ");

  if (viewport) {
    nq.bbox = *viewport;
  } else if (geo.place) {
    nq.bbox = geo_->resolve(*geo.place);
  } else {
    nq.bbox = options_.default_bbox;
  }

  std::size_t position = 0;
  for (const auto& word : geo.remaining) {
    if (lexicon_->is_stopword(word)) continue;
    TermGroup g;
    g.original = lexicon_->lemmatize(word);
    g.synonyms = synonyms_->synonyms(g.original, nq.simplified);
    g.synonyms.erase(g.original);
    g.position = position++;
    nq.groups.push_back(std::move(g));
  }
  if (nq.groups.empty()) {
    throw NothingToInterpretError("query '" + nq.raw +
                                  "' has nothing left after removing the place "
                                  "reference and stop words");
  }
  return nq;
}

std::vector<Interpreter::DirectHit> Interpreter::direct_hits(
    const NormalizedQuery& nq) const {
  std::vector<DirectHit> hits;
  const auto& groups = nq.groups;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto try_lemma = [&](const std::string& lemma) {
      auto words = text::split_ws(lemma);
      auto found = ontology_->direct_matches(words);
      if (!found.empty()) hits.push_back({std::move(found), {i}});
    };
    try_lemma(groups[i].original);
    for (const auto& s : groups[i].synonyms) try_lemma(s);
  }
  // Adjacent tuples are formed from original lemmas only.
  for (std::size_t len = 2; len <= options_.max_tuple; ++len) {
    for (std::size_t start = 0; start + len <= groups.size(); ++start) {
      std::vector<std::string> words;
      std::set<std::size_t> members;
      for (std::size_t k = start; k < start + len; ++k) {
        for (auto& w : text::split_ws(groups[k].original)) words.push_back(std::move(w));
        members.insert(k);
      }
      auto found = ontology_->direct_matches(words);
      if (!found.empty()) hits.push_back({std::move(found), std::move(members)});
    }
  }
  return hits;
}

QualifierSet Interpreter::build_qualifiers(const NormalizedQuery& nq,
                                           const std::set<std::size_t>& consumed) const {
  QualifierSet out;
  auto add = [&](Qualifier q) {
    if (q.terms.empty()) return;
    for (auto it = out.qualifiers.begin(); it != out.qualifiers.end(); ++it) {
      if (it->terms != q.terms) continue;
      if (q.source == Qualifier::Source::kSynonym) return;
      // A run of originals equal to an earlier substitution takes its place.
      out.qualifiers.erase(it);
      break;
    }
    out.qualifiers.push_back(std::move(q));
  };

  std::size_t i = 0;
  const auto& groups = nq.groups;
  while (i < groups.size()) {
    if (consumed.contains(i)) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < groups.size() && !consumed.contains(end)) ++end;

    std::vector<std::vector<std::string>> words;  // per group, original split
    for (std::size_t k = i; k < end; ++k) words.push_back(text::split_ws(groups[k].original));

    auto flatten = [&](std::size_t replaced, const std::vector<std::string>* with) {
      std::vector<std::string> terms;
      for (std::size_t k = 0; k < words.size(); ++k) {
        const auto& src = (with && k == replaced) ? *with : words[k];
        terms.insert(terms.end(), src.begin(), src.end());
      }
      return terms;
    };

    add({flatten(0, nullptr), Qualifier::Source::kOriginal});
    for (std::size_t k = i; k < end; ++k) {
      for (const auto& syn : groups[k].synonyms) {
        const auto syn_words = text::split_ws(syn);
        add({flatten(k - i, &syn_words), Qualifier::Source::kSynonym});
      }
    }
    i = end;
  }
  return out;
}

InterpretationOutcome Interpreter::identify_concepts(const NormalizedQuery& nq) const {
  const auto hits = direct_hits(nq);
  if (!hits.empty()) {
    ConceptIds matched;
    std::set<std::size_t> consumed;
    for (const auto& h : hits) {
      matched.insert(h.concepts.begin(), h.concepts.end());
      consumed.insert(h.groups.begin(), h.groups.end());
    }
    Results r;
    r.concepts = ontology_->most_specific(matched);
    r.qualifier_set = build_qualifiers(nq, consumed);
    r.bbox = nq.bbox;
    r.normalized = nq;
    return r;
  }

  std::map<std::string, std::set<std::string>> keyword_hits;
  for (const auto& lemma : nq.lemmas()) {
    for (const auto& id : ontology_->keyword_matches(lemma)) {
      keyword_hits[id].insert(lemma);
    }
  }
  if (!keyword_hits.empty()) {
    Disambiguation d;
    for (const auto& [id, lemmas] : keyword_hits) {
      d.candidates.push_back(
          {id, ontology_->get(id).label, *lemmas.begin(), lemmas.size()});
    }
    std::stable_sort(d.candidates.begin(), d.candidates.end(),
                     [](const auto& a, const auto& b) {
                       if (a.match_count != b.match_count) {
                         return a.match_count > b.match_count;
                       }
                       return a.concept_id < b.concept_id;
                     });
    d.normalized = nq;
    return d;
  }
  return NoMatch{nq};
}

InterpretationOutcome Interpreter::interpret(
    std::string_view query, const std::optional<BoundingBox>& viewport,
    const std::optional<ConceptIds>& selected) const {
  if (selected) {
    for (const auto& id : *selected) {
      if (!ontology_->contains(id)) {
        throw NotFoundError("unknown concept '" + id + "'");
      }
    }
  }
  NormalizedQuery nq = preprocess(query, viewport);
  if (!selected || selected->empty()) return identify_concepts(nq);

  // The user's choice replaces concept identification; lemmas tied to the
  // chosen concepts (directly or through their keywords) count as consumed.
  std::set<std::size_t> consumed;
  for (const auto& h : direct_hits(nq)) {
    for (const auto& id : h.concepts) {
      if (selected->contains(id)) consumed.insert(h.groups.begin(), h.groups.end());
    }
  }
  for (std::size_t i = 0; i < nq.groups.size(); ++i) {
    std::vector<std::string> lemmas{nq.groups[i].original};
    lemmas.insert(lemmas.end(), nq.groups[i].synonyms.begin(), nq.groups[i].synonyms.end());
    for (const auto& lemma : lemmas) {
      for (const auto& id : ontology_->keyword_matches(lemma)) {
        if (selected->contains(id)) consumed.insert(i);
      }
    }
  }
  Results r;
  r.concepts = ontology_->most_specific(*selected);
  r.qualifier_set = build_qualifiers(nq, consumed);
  r.bbox = nq.bbox;
  r.normalized = std::move(nq);
  return r;
}

}  // namespace geosem
