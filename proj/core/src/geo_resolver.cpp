#include "geosem/geo_resolver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>

#include "geosem/errors.hpp"
#include "geosem/text.hpp"

namespace geosem {

namespace {

double parse_double(std::string_view s) {
  s = text::trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("'" + std::string(s) + "' is not a number");
  }
  return v;
}

std::string place_key(std::string_view name) {
  return text::join(text::tokenize(name), " ");
}

}  // namespace

BoundingBox BoundingBox::make(double min_lon, double min_lat, double max_lon,
                              double max_lat) {
  BoundingBox b{min_lon, min_lat, max_lon, max_lat};
  if (!b.valid()) {
    throw DataError("invalid bounding box " + format_bbox(b));
  }
  return b;
}

bool BoundingBox::valid() const {
  return std::isfinite(min_lon) && std::isfinite(min_lat) &&
         std::isfinite(max_lon) && std::isfinite(max_lat) &&
         min_lon <= max_lon && min_lat <= max_lat && min_lon >= -180.0 &&
         max_lon <= 180.0 && min_lat >= -90.0 && max_lat <= 90.0;
}

BoundingBox BoundingBox::expanded(double margin) const {
  return {std::max(-180.0, min_lon - margin), std::max(-90.0, min_lat - margin),
          std::min(180.0, max_lon + margin), std::min(90.0, max_lat + margin)};
}

BoundingBox parse_bbox(std::string_view s) {
  std::vector<double> v;
  std::size_t start = 0;
  try {
    while (true) {
      auto comma = s.find(',', start);
      v.push_back(parse_double(s.substr(
          start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } catch (const std::invalid_argument& e) {
    throw InvalidArgument("bounding box: " + std::string(e.what()));
  }
  if (v.size() != 4) {
    throw InvalidArgument("bounding box needs min_lon,min_lat,max_lon,max_lat");
  }
  return BoundingBox::make(v[0], v[1], v[2], v[3]);
}

std::string format_bbox(const BoundingBox& b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.6g", b.min_lon, b.min_lat,
                b.max_lon, b.max_lat);
  return buf;
}

Gazetteer Gazetteer::load(std::istream& in, const std::string& source) {
  Gazetteer g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      auto tab = body.find('\t', start);
      cols.push_back(body.substr(start, tab == std::string_view::npos
                                            ? tab
                                            : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 5) {
      throw ParseError(source, lineno,
                       "expected name<TAB>min_lon<TAB>min_lat<TAB>max_lon<TAB>max_lat");
    }
    try {
      auto box = BoundingBox::make(parse_double(cols[1]), parse_double(cols[2]),
                                   parse_double(cols[3]), parse_double(cols[4]));
      if (place_key(cols[0]).empty()) throw std::invalid_argument("empty name");
      g.add(cols[0], box);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    } catch (const DataError& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return g;
}

Gazetteer Gazetteer::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open gazetteer " + path.string());
  return load(in, path.string());
}

void Gazetteer::add(std::string_view name, const BoundingBox& box) {
  auto key = place_key(name);
  if (key.empty()) throw DataError("gazetteer name is empty");
  if (!box.valid()) throw DataError("invalid box for '" + key + "'");
  longest_ = std::max(longest_, text::tokenize(key).size());
  entries_[key] = box;
}

std::optional<BoundingBox> Gazetteer::find(std::string_view name) const {
  auto it = entries_.find(place_key(name));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

GeoResolver::GeoResolver(Gazetteer gazetteer, std::vector<std::string> prepositions)
    : gazetteer_(std::move(gazetteer)) {
  for (auto& p : prepositions) prepositions_.push_back(text::to_lower(p));
}

GeoReference GeoResolver::extract_geo_reference(
    std::span<const std::string> tokens) const {
  std::size_t best_start = 0;
  std::size_t best_len = 0;
  const std::size_t max_len = std::min(gazetteer_.longest_name_tokens(), tokens.size());
  // Longest first, then earliest start: the first hit is the answer.
  for (std::size_t len = max_len; len >= 1 && best_len == 0; --len) {
    for (std::size_t start = 0; start + len <= tokens.size(); ++start) {
      std::string key = tokens[start];
      for (std::size_t k = start + 1; k < start + len; ++k) {
        key += ' ';
        key += tokens[k];
      }
      if (gazetteer_.entries().contains(key)) {
        best_start = start;
        best_len = len;
        break;
      }
    }
  }
  GeoReference out;
  if (best_len == 0) {
    out.remaining.assign(tokens.begin(), tokens.end());
    return out;
  }
  std::string place = tokens[best_start];
  for (std::size_t k = best_start + 1; k < best_start + best_len; ++k) {
    place += ' ';
    place += tokens[k];
  }
  out.place = std::move(place);
  std::size_t cut_from = best_start;
  if (best_start > 0 &&
      std::find(prepositions_.begin(), prepositions_.end(),
                tokens[best_start - 1]) != prepositions_.end()) {
    cut_from = best_start - 1;
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i < cut_from || i >= best_start + best_len) out.remaining.push_back(tokens[i]);
  }
  return out;
}

BoundingBox GeoResolver::resolve(std::string_view place) const {
  if (auto box = gazetteer_.find(place)) return *box;
  throw NotFoundError("unknown place '" + std::string(place) + "'");
}

}  // namespace geosem
