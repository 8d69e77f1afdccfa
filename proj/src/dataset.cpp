#include "tsetlin/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "tsetlin/errors.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

binarize_spec binarize_spec::standard(std::uint32_t bits) {
  binarize_spec spec;
  spec.bits = bits;
  for (std::uint32_t t = 1; t <= bits && t <= 4; ++t)
    spec.thresholds[t - 1] = static_cast<std::uint8_t>(
        std::lround(255.0 * t / (bits + 1)));
  spec.validate();
  return spec;
}

void binarize_spec::validate() const {
  if (bits < 1 || bits > 4)
    throw shape_error("binarization bits must be in [1, 4]");
  for (std::uint32_t t = 0; t < bits; ++t) {
    if (thresholds[t] < 1)
      throw shape_error("thresholds must be in [1, 255]");
    if (t > 0 && thresholds[t] <= thresholds[t - 1])
      throw shape_error("thresholds must be strictly ascending");
  }
}

void bool_dataset::append(const bit_vector& row, std::int32_t label) {
  if (row.size() != features_)
    throw shape_error("row width does not match dataset features");
  words_.insert(words_.end(), row.words().begin(), row.words().end());
  labels_.push_back(label);
}

std::span<std::uint64_t> bool_dataset::append_raw(std::int32_t label) {
  words_.resize(words_.size() + words_per_row_, 0);
  labels_.push_back(label);
  return {words_.data() + words_.size() - words_per_row_, words_per_row_};
}

bool_dataset binarize_images(const byte_matrix& pixels,
                             std::span<const std::int32_t> labels,
                             std::uint32_t classes,
                             const binarize_spec& spec) {
  spec.validate();
  if (pixels.rows == 0 || pixels.cols == 0)
    throw shape_error("empty image matrix");
  if (labels.size() != pixels.rows)
    throw shape_error("label count does not match image count");

  bool_dataset ds(pixels.cols * spec.bits, classes);
  ds.prov.kind = dataset_kind::image_thermometer;
  ds.prov.spec = spec;
  for (std::uint32_t r = 0; r < pixels.rows; ++r) {
    if (labels[r] < 0 || static_cast<std::uint32_t>(labels[r]) >= classes)
      throw shape_error("label " + std::to_string(labels[r]) +
                        " outside [0, " + std::to_string(classes) + ")");
    auto words = ds.append_raw(labels[r]);
    for (std::uint32_t p = 0; p < pixels.cols; ++p) {
      const std::uint8_t v = pixels.at(r, p);
      for (std::uint32_t t = 0; t < spec.bits; ++t) {
        if (v >= spec.thresholds[t]) {
          const std::uint32_t bit = p * spec.bits + t;
          words[bit >> 6] |= 1ULL << (bit & 63u);
        }
      }
    }
  }
  return ds;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> build_vocabulary(std::span<const std::string> docs,
                                          std::uint32_t vocab_size) {
  if (vocab_size == 0) throw shape_error("vocabulary size must be positive");
  std::unordered_map<std::string, std::uint32_t> doc_freq;
  for (const std::string& doc : docs) {
    std::unordered_set<std::string> seen;
    for (std::string& tok : tokenize(doc)) seen.insert(std::move(tok));
    for (const std::string& tok : seen) ++doc_freq[tok];
  }
  std::vector<std::pair<std::string, std::uint32_t>> ranked(doc_freq.begin(),
                                                            doc_freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > vocab_size) ranked.resize(vocab_size);
  std::vector<std::string> vocab;
  vocab.reserve(ranked.size());
  for (auto& [tok, _] : ranked) vocab.push_back(std::move(tok));
  return vocab;
}

bool_dataset vectorize_text(std::span<const std::string> docs,
                            std::span<const std::int32_t> labels,
                            std::uint32_t classes,
                            std::span<const std::string> vocabulary) {
  if (vocabulary.empty()) throw shape_error("empty vocabulary");
  if (labels.size() != docs.size())
    throw shape_error("label count does not match document count");
  std::unordered_map<std::string_view, std::uint32_t> lookup;
  lookup.reserve(vocabulary.size());
  for (std::uint32_t v = 0; v < vocabulary.size(); ++v)
    lookup.emplace(vocabulary[v], v);

  bool_dataset ds(static_cast<std::uint32_t>(vocabulary.size()), classes);
  ds.prov.kind = dataset_kind::text_bag;
  ds.prov.vocab_size = static_cast<std::uint32_t>(vocabulary.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (labels[d] < 0 || static_cast<std::uint32_t>(labels[d]) >= classes)
      throw shape_error("label " + std::to_string(labels[d]) +
                        " outside [0, " + std::to_string(classes) + ")");
    auto words = ds.append_raw(labels[d]);
    for (const std::string& tok : tokenize(docs[d])) {
      const auto it = lookup.find(tok);
      if (it != lookup.end())
        words[it->second >> 6] |= 1ULL << (it->second & 63u);
    }
  }
  return ds;
}

bool_dataset make_noisy_xor(std::uint32_t examples, std::uint32_t features,
                            double label_noise, std::uint64_t seed) {
  if (features < 2) throw shape_error("noisy-xor needs at least two features");
  bool_dataset ds(features, 2);
  ds.prov.kind = dataset_kind::synthetic;
  ds.prov.source = "noisy-xor";
  rng gen(seed);
  for (std::uint32_t r = 0; r < examples; ++r) {
    bit_vector row(features);
    for (std::uint32_t k = 0; k < features; ++k)
      row.set(k, gen.bernoulli(0.5));
    std::int32_t label = row.test(0) != row.test(1) ? 1 : 0;
    if (label_noise > 0.0 && gen.bernoulli(label_noise)) label = 1 - label;
    ds.append(row, label);
  }
  return ds;
}

} // namespace tsetlin
