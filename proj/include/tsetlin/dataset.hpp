#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsetlin/bits.hpp"

namespace tsetlin {

/// Thermometer binarization: pixel p maps to `bits` output bits, bit t set
/// iff p >= thresholds[t]. Thresholds are strictly ascending in [1, 255].
struct binarize_spec {
  std::uint32_t bits = 1;
  std::array<std::uint8_t, 4> thresholds{};

  /// Evenly spaced levels: round(255 * t / (bits + 1)) for t = 1..bits.
  static binarize_spec standard(std::uint32_t bits);

  void validate() const;
  bool operator==(const binarize_spec&) const = default;
};

enum class dataset_kind : std::uint8_t {
  synthetic = 0,
  image_thermometer = 1,
  text_bag = 2,
};

/// Where a dataset came from and how it was binarized.
struct provenance {
  dataset_kind kind = dataset_kind::synthetic;
  binarize_spec spec{}; // image_thermometer only
  std::uint32_t vocab_size = 0; // text_bag only
  std::string source;

  bool operator==(const provenance&) const = default;
};

/// Row-major byte matrix (one row per example).
struct byte_matrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint8_t> data;

  std::uint8_t at(std::uint32_t r, std::uint32_t c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  std::span<const std::uint8_t> row(std::uint32_t r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols, cols};
  }
};

/// Binarized examples: a packed bit matrix plus labels. Only the positive
/// literals are stored; negations are derived at evaluation time.
class bool_dataset {
public:
  bool_dataset() = default;
  bool_dataset(std::uint32_t features, std::uint32_t classes)
      : features_(features), classes_(classes),
        words_per_row_(bit_vector::words_for(features)) {}

  std::uint32_t features() const { return features_; }
  std::uint32_t classes() const { return classes_; }
  std::uint32_t count() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t words_per_row() const { return words_per_row_; }

  void append(const bit_vector& row, std::int32_t label);
  /// Appends an all-zero row and returns a mutable word span for it.
  std::span<std::uint64_t> append_raw(std::int32_t label);

  bit_span row(std::uint32_t r) const {
    return {words_.data() + static_cast<std::size_t>(r) * words_per_row_,
            features_};
  }
  std::int32_t label(std::uint32_t r) const { return labels_[r]; }
  std::span<const std::int32_t> labels() const { return labels_; }
  std::span<const std::uint64_t> raw_words() const { return words_; }
  std::span<std::uint64_t> raw_words() { return words_; }

  provenance prov;

  bool operator==(const bool_dataset& other) const {
    return features_ == other.features_ && classes_ == other.classes_ &&
           labels_ == other.labels_ && words_ == other.words_ &&
           prov == other.prov;
  }

private:
  std::uint32_t features_ = 0;
  std::uint32_t classes_ = 0;
  std::uint32_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::int32_t> labels_;
};

/// Thermometer-encodes grayscale images. Output width is cols * spec.bits,
/// with the bits of pixel p at positions [p*bits, (p+1)*bits). Labels must
/// lie in [0, classes).
bool_dataset binarize_images(const byte_matrix& pixels,
                             std::span<const std::int32_t> labels,
                             std::uint32_t classes, const binarize_spec& spec);

/// Lowercase alphanumeric tokens of a document.
std::vector<std::string> tokenize(std::string_view text);

/// Most document-frequent tokens of the training split, capped at
/// vocab_size, ordered by descending frequency (ties lexicographic).
std::vector<std::string> build_vocabulary(std::span<const std::string> docs,
                                          std::uint32_t vocab_size);

/// Set-of-words vectors over a fixed vocabulary: bit v is set iff token v
/// occurs in the document. Width equals the vocabulary size.
bool_dataset vectorize_text(std::span<const std::string> docs,
                            std::span<const std::int32_t> labels,
                            std::uint32_t classes,
                            std::span<const std::string> vocabulary);

/// Synthetic two-class problem: the label is the exclusive-or of the first
/// two features, the rest are noise bits, and `label_noise` of the labels are
/// flipped. Test splits are generated with label_noise = 0.
bool_dataset make_noisy_xor(std::uint32_t examples, std::uint32_t features,
                            double label_noise, std::uint64_t seed);

} // namespace tsetlin
