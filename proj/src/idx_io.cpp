#include "tsetlin/idx_io.hpp"

#include <zlib.h>

#include "binary_io.hpp"

namespace tsetlin {

namespace {

constexpr std::uint32_t idx_images_magic = 0x00000803;
constexpr std::uint32_t idx_labels_magic = 0x00000801;

bool looks_gzipped(const std::vector<std::uint8_t>& data) {
  return data.size() >= 2 && data[0] == 0x1f && data[1] == 0x8b;
}

std::vector<std::uint8_t> gunzip(const std::vector<std::uint8_t>& data,
                                 const std::string& path) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
    throw io_error("zlib init failed for " + path);
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> buffer(1 << 16);
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = buffer.data();
    zs.avail_out = static_cast<uInt>(buffer.size());
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw format_error("corrupt gzip stream in " + path);
    }
    out.insert(out.end(), buffer.data(),
               buffer.data() + (buffer.size() - zs.avail_out));
  }
  inflateEnd(&zs);
  return out;
}

std::vector<std::uint8_t> read_maybe_gzipped(const std::string& path) {
  auto data = detail::read_file(path);
  return looks_gzipped(data) ? gunzip(data, path) : data;
}

} // namespace

byte_matrix load_idx_images(const std::string& path) {
  const auto data = read_maybe_gzipped(path);
  detail::cursor c{data.data(), data.size(), 0, "IDX image file " + path};
  const std::uint32_t magic = c.be_u32();
  if (magic != idx_images_magic)
    throw format_error("bad magic in " + path + ": expected IDX images");
  byte_matrix m;
  m.rows = c.be_u32();
  const std::uint32_t h = c.be_u32();
  const std::uint32_t w = c.be_u32();
  m.cols = h * w;
  const std::uint64_t expected =
      static_cast<std::uint64_t>(m.rows) * m.cols;
  if (data.size() - c.pos != expected)
    throw format_error("dimension mismatch in " + path + ": header promises " +
                       std::to_string(expected) + " pixel bytes, file has " +
                       std::to_string(data.size() - c.pos));
  m.data.assign(data.begin() + static_cast<std::ptrdiff_t>(c.pos), data.end());
  return m;
}

std::vector<std::uint8_t> load_idx_labels(const std::string& path) {
  const auto data = read_maybe_gzipped(path);
  detail::cursor c{data.data(), data.size(), 0, "IDX label file " + path};
  const std::uint32_t magic = c.be_u32();
  if (magic != idx_labels_magic)
    throw format_error("bad magic in " + path + ": expected IDX labels");
  const std::uint32_t count = c.be_u32();
  if (data.size() - c.pos != count)
    throw format_error("dimension mismatch in " + path + ": header promises " +
                       std::to_string(count) + " labels, file has " +
                       std::to_string(data.size() - c.pos));
  return {data.begin() + static_cast<std::ptrdiff_t>(c.pos), data.end()};
}

} // namespace tsetlin
