#include "tsetlin/dataset_io.hpp"

#include <zlib.h>

#include <cstring>

#include "binary_io.hpp"

namespace tsetlin {

namespace {

constexpr char dataset_magic[4] = {'T', 'M', 'D', 'S'};
constexpr std::uint32_t dataset_version = 1;

std::uint32_t payload_crc(const std::vector<std::uint8_t>& buf,
                          std::size_t begin, std::size_t end) {
  return static_cast<std::uint32_t>(
      crc32(0, buf.data() + begin, static_cast<uInt>(end - begin)));
}

} // namespace

void save_dataset(const bool_dataset& ds, const std::string& path) {
  std::vector<std::uint8_t> buf;
  detail::put_bytes(buf, dataset_magic, 4);
  detail::put_u32(buf, dataset_version);
  detail::put_u8(buf, static_cast<std::uint8_t>(ds.prov.kind));
  detail::put_u8(buf, static_cast<std::uint8_t>(
                          ds.prov.kind == dataset_kind::image_thermometer
                              ? ds.prov.spec.bits
                              : 0));
  for (int t = 0; t < 4; ++t) detail::put_u8(buf, ds.prov.spec.thresholds[t]);
  detail::put_u32(buf, ds.prov.vocab_size);
  detail::put_u32(buf, ds.features());
  detail::put_u32(buf, ds.classes());
  detail::put_u64(buf, ds.count());
  detail::put_u32(buf, static_cast<std::uint32_t>(ds.prov.source.size()));
  detail::put_bytes(buf, ds.prov.source.data(), ds.prov.source.size());
  for (std::uint32_t r = 0; r < ds.count(); ++r)
    detail::put_u32(buf, static_cast<std::uint32_t>(ds.label(r)));
  for (const std::uint64_t w : ds.raw_words()) detail::put_u64(buf, w);
  detail::put_u32(buf, payload_crc(buf, 4, buf.size()));
  detail::write_file(path, buf);
}

bool_dataset load_dataset(const std::string& path) {
  const auto buf = detail::read_file(path);
  detail::cursor c{buf.data(), buf.size(), 0, "dataset file " + path};
  char magic[4];
  c.bytes(magic, 4);
  if (std::memcmp(magic, dataset_magic, 4) != 0)
    throw format_error("bad magic in " + path + ": not a dataset file");
  if (buf.size() < 8) throw format_error("truncated dataset file " + path);
  const std::uint32_t stored_crc =
      std::uint32_t(buf[buf.size() - 4]) |
      std::uint32_t(buf[buf.size() - 3]) << 8 |
      std::uint32_t(buf[buf.size() - 2]) << 16 |
      std::uint32_t(buf[buf.size() - 1]) << 24;
  if (payload_crc(buf, 4, buf.size() - 4) != stored_crc)
    throw format_error("checksum mismatch in " + path);

  const std::uint32_t version = c.u32();
  if (version != dataset_version)
    throw format_error("unsupported dataset version " +
                       std::to_string(version) + " in " + path);
  provenance prov;
  prov.kind = static_cast<dataset_kind>(c.u8());
  const std::uint8_t bits = c.u8();
  for (int t = 0; t < 4; ++t) prov.spec.thresholds[t] = c.u8();
  prov.vocab_size = c.u32();
  const std::uint32_t features = c.u32();
  const std::uint32_t classes = c.u32();
  const std::uint64_t count = c.u64();
  const std::uint32_t source_len = c.u32();
  prov.source.resize(source_len);
  if (source_len > 0) c.bytes(prov.source.data(), source_len);

  if (prov.kind == dataset_kind::image_thermometer) {
    prov.spec.bits = bits;
    prov.spec.validate();
    if (features % bits != 0)
      throw format_error("inconsistent header in " + path + ": width " +
                         std::to_string(features) +
                         " not divisible by bit depth " + std::to_string(bits));
  } else {
    prov.spec = binarize_spec{}; // thresholds only apply to image datasets
  }
  if (prov.kind == dataset_kind::text_bag && prov.vocab_size != features)
    throw format_error("inconsistent header in " + path +
                       ": vocabulary size differs from width");

  bool_dataset ds(features, classes);
  ds.prov = prov;
  std::vector<std::int32_t> labels(count);
  for (std::uint64_t r = 0; r < count; ++r)
    labels[r] = static_cast<std::int32_t>(c.u32());
  for (std::uint64_t r = 0; r < count; ++r) {
    auto words = ds.append_raw(labels[r]);
    for (std::uint64_t& w : words) w = c.u64();
  }
  if (c.pos != buf.size() - 4)
    throw format_error("trailing bytes in " + path);
  return ds;
}

} // namespace tsetlin
