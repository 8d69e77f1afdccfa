#include <doctest.h>

#include <unistd.h>
#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "helpers.hpp"
#include "tsetlin/dataset_io.hpp"
#include "tsetlin/errors.hpp"
#include "tsetlin/idx_io.hpp"
#include "tsetlin/inclusion_index.hpp"
#include "tsetlin/model_io.hpp"

using namespace tsetlin;
using namespace test_helpers;

namespace {

struct temp_file {
  std::filesystem::path path;
  explicit temp_file(const std::string& name)
      : path(std::filesystem::temp_directory_path() /
             ("tsetlin_test_" + std::to_string(::getpid()) + "_" + name)) {}
  ~temp_file() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& b) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(b.data()),
            static_cast<std::streamsize>(b.size()));
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back((v >> 24) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back(v & 0xff);
}

// count images of rows x cols, pixel = (image + offset) mod 256
std::vector<std::uint8_t> make_idx_images(std::uint32_t count,
                                          std::uint32_t rows,
                                          std::uint32_t cols) {
  std::vector<std::uint8_t> bytes;
  put_be32(bytes, 0x00000803);
  put_be32(bytes, count);
  put_be32(bytes, rows);
  put_be32(bytes, cols);
  for (std::uint32_t i = 0; i < count * rows * cols; ++i)
    bytes.push_back(static_cast<std::uint8_t>(i % 251));
  return bytes;
}

std::vector<std::uint8_t> make_idx_labels(
    const std::vector<std::uint8_t>& labels) {
  std::vector<std::uint8_t> bytes;
  put_be32(bytes, 0x00000801);
  put_be32(bytes, static_cast<std::uint32_t>(labels.size()));
  bytes.insert(bytes.end(), labels.begin(), labels.end());
  return bytes;
}

std::vector<std::uint8_t> gzip_bytes(const std::vector<std::uint8_t>& data) {
  z_stream zs{};
  REQUIRE(deflateInit2(&zs, Z_BEST_SPEED, Z_DEFLATED, 16 + MAX_WBITS, 8,
                       Z_DEFAULT_STRATEGY) == Z_OK);
  std::vector<std::uint8_t> out(deflateBound(&zs, data.size()) + 32);
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  REQUIRE(deflate(&zs, Z_FINISH) == Z_STREAM_END);
  out.resize(zs.total_out);
  deflateEnd(&zs);
  return out;
}

std::uint32_t crc_of(const std::vector<std::uint8_t>& buf, std::size_t begin,
                     std::size_t end) {
  return static_cast<std::uint32_t>(
      crc32(0, buf.data() + begin, static_cast<uInt>(end - begin)));
}

void restamp_crc(std::vector<std::uint8_t>& buf) {
  const std::uint32_t crc = crc_of(buf, 4, buf.size() - 4);
  for (int i = 0; i < 4; ++i)
    buf[buf.size() - 4 + i] = (crc >> (8 * i)) & 0xff;
}

bool_dataset sample_dataset() {
  rng gen(73);
  byte_matrix pixels{4, 6, {}};
  pixels.data.resize(24);
  for (auto& p : pixels.data) p = static_cast<std::uint8_t>(gen.below(256));
  const std::vector<std::int32_t> labels{0, 1, 1, 0};
  bool_dataset ds =
      binarize_images(pixels, labels, 2, binarize_spec::standard(3));
  ds.prov.source = "fixture";
  return ds;
}

} // namespace

TEST_CASE("a four-image fixture loads as a 4 x 784 matrix") {
  temp_file f("images.idx");
  write_bytes(f.str(), make_idx_images(4, 28, 28));
  const byte_matrix m = load_idx_images(f.str());
  CHECK(m.rows == 4);
  CHECK(m.cols == 784);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 250) == 250 % 251);
  CHECK(m.at(3, 783) == (3 * 784 + 783) % 251);
}

TEST_CASE("gzip-compressed IDX files load transparently") {
  temp_file f("images.idx.gz");
  write_bytes(f.str(), gzip_bytes(make_idx_images(2, 3, 3)));
  const byte_matrix m = load_idx_images(f.str());
  CHECK(m.rows == 2);
  CHECK(m.cols == 9);
  CHECK(m.at(1, 8) == 17);
}

TEST_CASE("IDX label files round-trip") {
  temp_file f("labels.idx");
  write_bytes(f.str(), make_idx_labels({3, 1, 4, 1, 5}));
  CHECK(load_idx_labels(f.str()) == std::vector<std::uint8_t>{3, 1, 4, 1, 5});
}

TEST_CASE("a wrong IDX magic is a format error") {
  temp_file f("bad.idx");
  auto bytes = make_idx_images(1, 2, 2);
  bytes[3] = 0x05;
  write_bytes(f.str(), bytes);
  CHECK_THROWS_AS(load_idx_images(f.str()), format_error);
  // images loaded through the label entry point fail the same way
  temp_file g("bad2.idx");
  write_bytes(g.str(), make_idx_images(1, 2, 2));
  CHECK_THROWS_AS(load_idx_labels(g.str()), format_error);
}

TEST_CASE("a truncated IDX body is a dimension mismatch") {
  temp_file f("short.idx");
  auto bytes = make_idx_images(2, 4, 4);
  bytes.resize(bytes.size() - 5);
  write_bytes(f.str(), bytes);
  CHECK_THROWS_AS(load_idx_images(f.str()), format_error);
}

TEST_CASE("missing files are I/O errors") {
  CHECK_THROWS_AS(load_idx_images("/nonexistent/images.idx"), io_error);
}

TEST_CASE("datasets round-trip bit-exactly") {
  temp_file f("ds.tmds");
  const bool_dataset original = sample_dataset();
  save_dataset(original, f.str());
  CHECK(load_dataset(f.str()) == original);

  // text and synthetic kinds too
  const std::vector<std::string> vocab{"aa", "bb"};
  const std::vector<std::string> docs{"aa", "bb aa"};
  const std::vector<std::int32_t> labels{0, 1};
  bool_dataset text = vectorize_text(docs, labels, 2, vocab);
  text.prov.source = "docs";
  save_dataset(text, f.str());
  CHECK(load_dataset(f.str()) == text);

  const bool_dataset xo = make_noisy_xor(50, 5, 0.1, 3);
  save_dataset(xo, f.str());
  CHECK(load_dataset(f.str()) == xo);
}

TEST_CASE("a corrupted dataset byte fails the checksum") {
  temp_file f("corrupt.tmds");
  save_dataset(sample_dataset(), f.str());
  auto bytes = read_bytes(f.str());
  bytes[bytes.size() / 2] ^= 0x40;
  write_bytes(f.str(), bytes);
  CHECK_THROWS_WITH_AS(load_dataset(f.str()),
                       doctest::Contains("checksum"), format_error);
}

TEST_CASE("an unsupported dataset version is rejected") {
  temp_file f("version.tmds");
  save_dataset(sample_dataset(), f.str());
  auto bytes = read_bytes(f.str());
  bytes[4] = 99; // version field follows the magic
  restamp_crc(bytes);
  write_bytes(f.str(), bytes);
  CHECK_THROWS_WITH_AS(load_dataset(f.str()), doctest::Contains("version"),
                       format_error);
}

TEST_CASE("image dataset width must divide by the bit depth") {
  temp_file f("width.tmds");
  save_dataset(sample_dataset(), f.str()); // bits = 3, features = 18
  auto bytes = read_bytes(f.str());
  // features field: magic(4) version(4) kind(1) bits(1) thresholds(4)
  // vocab(4) -> offset 18
  REQUIRE(bytes[18] == 18);
  bytes[18] = 19;
  restamp_crc(bytes);
  write_bytes(f.str(), bytes);
  CHECK_THROWS_WITH_AS(load_dataset(f.str()),
                       doctest::Contains("divisible"), format_error);
}

TEST_CASE("models round-trip and re-index identically") {
  temp_file f("model.tmbk");
  rng gen(79);
  const clause_bank original = random_bank(gen, 3, 6, 5, 0.4);
  save_model(original, f.str());
  const clause_bank loaded = load_model(f.str());
  CHECK(loaded == original);
  CHECK(inclusion_index(loaded).equivalent_as_sets(inclusion_index(original)));
}

TEST_CASE("model files reject bad magic, truncation, and wild states") {
  temp_file f("model.tmbk");
  rng gen(83);
  save_model(random_bank(gen, 1, 2, 2, 0.5), f.str());

  auto bytes = read_bytes(f.str());
  auto tampered = bytes;
  tampered[0] = 'X';
  write_bytes(f.str(), tampered);
  CHECK_THROWS_WITH_AS(load_model(f.str()), doctest::Contains("magic"),
                       format_error);

  tampered = bytes;
  tampered.resize(tampered.size() - 1);
  write_bytes(f.str(), tampered);
  CHECK_THROWS_WITH_AS(load_model(f.str()), doctest::Contains("truncated"),
                       format_error);

  tampered = bytes;
  tampered.back() = 255; // outside [1, 2N]
  write_bytes(f.str(), tampered);
  CHECK_THROWS_WITH_AS(load_model(f.str()),
                       doctest::Contains("out of range"), format_error);
}
