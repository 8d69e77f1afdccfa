#include "tsetlin/model_io.hpp"

#include <cstring>

#include "binary_io.hpp"

namespace tsetlin {

namespace {
constexpr char model_magic[4] = {'T', 'M', 'B', 'K'};
constexpr std::uint32_t model_version = 1;
} // namespace

void save_model(const clause_bank& bank, const std::string& path) {
  std::vector<std::uint8_t> buf;
  detail::put_bytes(buf, model_magic, 4);
  detail::put_u32(buf, model_version);
  detail::put_u32(buf, bank.classes());
  detail::put_u32(buf, bank.clauses_per_class());
  detail::put_u32(buf, bank.features());
  detail::put_u32(buf, bank.half_range());
  detail::put_bytes(buf, bank.raw_states().data(), bank.raw_states().size());
  detail::write_file(path, buf);
}

clause_bank load_model(const std::string& path) {
  const auto buf = detail::read_file(path);
  detail::cursor c{buf.data(), buf.size(), 0, "model file " + path};
  char magic[4];
  c.bytes(magic, 4);
  if (std::memcmp(magic, model_magic, 4) != 0)
    throw format_error("bad magic in " + path + ": not a model file");
  const std::uint32_t version = c.u32();
  if (version != model_version)
    throw format_error("unsupported model version " + std::to_string(version) +
                       " in " + path);
  const std::uint32_t classes = c.u32();
  const std::uint32_t clauses = c.u32();
  const std::uint32_t features = c.u32();
  const std::uint32_t half_range = c.u32();
  if (half_range < 1 || half_range > 127)
    throw format_error("invalid state half-range in " + path);
  clause_bank bank(classes, clauses, features,
                   static_cast<std::uint8_t>(half_range));
  auto states = bank.raw_states();
  c.bytes(states.data(), states.size());
  if (c.pos != buf.size()) throw format_error("trailing bytes in " + path);
  // States must stay inside [1, 2N] or later transitions would wrap.
  const std::uint8_t top = static_cast<std::uint8_t>(2 * half_range);
  for (const std::uint8_t v : states)
    if (v < 1 || v > top)
      throw format_error("state value out of range in " + path);
  return bank;
}

} // namespace tsetlin
