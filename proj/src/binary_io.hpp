#pragma once

// Internal little-endian buffer helpers shared by the file formats.

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "tsetlin/errors.hpp"

namespace tsetlin::detail {

inline void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) {
  out.push_back(v);
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

inline void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

inline void put_bytes(std::vector<std::uint8_t>& out, const void* data,
                      std::size_t size) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  out.insert(out.end(), p, p + size);
}

struct cursor {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos = 0;
  std::string what; // for error messages

  void need(std::size_t bytes) const {
    if (pos + bytes > size)
      throw format_error("truncated " + what + " (needs " +
                         std::to_string(bytes) + " bytes at offset " +
                         std::to_string(pos) + ")");
  }
  std::uint8_t u8() {
    need(1);
    return data[pos++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(data[pos++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(data[pos++]) << (8 * i);
    return v;
  }
  std::uint32_t be_u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data[pos++];
    return v;
  }
  void bytes(void* out, std::size_t count) {
    need(count);
    std::memcpy(out, data + pos, count);
    pos += count;
  }
};

inline std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::vector<std::uint8_t> data(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw io_error("read failed for " + path);
  return data;
}

inline void write_file(const std::string& path,
                       const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot create " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw io_error("write failed for " + path);
}

} // namespace tsetlin::detail
