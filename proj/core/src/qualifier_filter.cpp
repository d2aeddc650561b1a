#include "geosem/qualifier_filter.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "geosem/errors.hpp"
#include "geosem/text.hpp"

namespace geosem {

namespace {

constexpr double kIntegerSlack = 1e-9;
constexpr std::size_t kParallelThreshold = 4096;

// Two-row DP restricted to the diagonal band |i - j| <= k. Returns k + 1 as
// soon as the distance is known to exceed k.
std::size_t bounded_distance(std::u32string_view a, std::u32string_view b,
                             std::size_t k) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  if (la - lb > k) return k + 1;
  if (lb == 0) return la;
  const std::size_t cap = k + 1;
  std::vector<std::size_t> prev(lb + 1, cap);
  std::vector<std::size_t> cur(lb + 1, cap);
  for (std::size_t j = 0; j <= std::min(lb, k); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= la; ++i) {
    const std::size_t lo = i > k ? i - k : 1;
    const std::size_t hi = std::min(lb, i + k);
    std::fill(cur.begin(), cur.end(), cap);
    if (i <= k) cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = lo; j <= hi; ++j) {
      std::size_t best = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      cur[j] = std::min(best, cap);
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > k) return cap;
    std::swap(prev, cur);
  }
  return std::min(prev[lb], cap);
}

std::size_t budget_to_limit(double budget) {
  return static_cast<std::size_t>(std::floor(budget + kIntegerSlack));
}

}  // namespace

void SimilarityParams::validate() const {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1], got " + std::to_string(beta));
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("gamma must lie in (0, 1], got " + std::to_string(gamma));
  }
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::u32string x = text::decode_utf8(a);
  const std::u32string y = text::decode_utf8(b);
  std::vector<std::size_t> row(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[y.size()];
}

double term_distance_budget(std::size_t len_a, std::size_t len_b,
                            const SimilarityParams& params) {
  const double raw = params.gamma * static_cast<double>(std::max(len_a, len_b));
  if (params.rounding == ThresholdRounding::kCeil) {
    return std::ceil(raw - kIntegerSlack);
  }
  return raw;
}

QualifierMatcher::QualifierMatcher(const QualifierSet& qualifiers,
                                   const SimilarityParams& params)
    : params_(params) {
  params_.validate();
  if (qualifiers.empty()) {
    throw InvalidArgument("qualifier set is empty");
  }
  qualifiers_.reserve(qualifiers.size());
  for (const auto& q : qualifiers.qualifiers) {
    std::vector<Term> terms;
    for (const auto& t : q.terms) terms.push_back({text::decode_utf8(text::to_lower(t))});
    qualifiers_.push_back(std::move(terms));
  }
}

bool QualifierMatcher::property_similar(std::string_view property) const {
  std::vector<std::u32string> words;
  for (const auto& w : text::property_terms(property)) {
    words.push_back(text::decode_utf8(w));
  }
  for (const auto& q : qualifiers_) {
    // Counts restart for every qualifier: the item must resemble one
    // qualifier on its own.
    const double lm =
        params_.beta * static_cast<double>(std::min(words.size(), q.size()));
    std::size_t similar = 0;
    for (const auto& tp : words) {
      for (const auto& tq : q) {
        const std::size_t limit = budget_to_limit(
            term_distance_budget(tp.size(), tq.chars.size(), params_));
        if (bounded_distance(tp, tq.chars, limit) <= limit) {
          ++similar;
          if (static_cast<double>(similar) > lm + kIntegerSlack) return true;
        }
      }
    }
  }
  return false;
}

bool QualifierMatcher::item_similar(const GeoItem& item) const {
  return std::any_of(item.properties.begin(), item.properties.end(),
                     [&](const auto& kv) { return property_similar(kv.second); });
}

bool property_similar(std::string_view property, const QualifierSet& qualifiers,
                      const SimilarityParams& params) {
  return QualifierMatcher(qualifiers, params).property_similar(property);
}

std::vector<GeoItem> filter_items(std::vector<GeoItem> items,
                                  const QualifierSet& qualifiers,
                                  const SimilarityParams& params) {
  if (qualifiers.empty()) return items;
  const QualifierMatcher matcher(qualifiers, params);
  std::vector<char> keep(items.size(), 0);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) keep[i] = matcher.item_similar(items[i]);
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (items.size() < kParallelThreshold || workers == 1) {
    run(0, items.size());
  } else {
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    std::vector<std::future<void>> tasks;
    for (std::size_t b = 0; b < items.size(); b += chunk) {
      tasks.push_back(std::async(std::launch::async, run, b,
                                 std::min(items.size(), b + chunk)));
    }
    for (auto& t : tasks) t.get();
  }
  std::vector<GeoItem> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (keep[i]) out.push_back(std::move(items[i]));
  }
  return out;
}

}  // namespace geosem
