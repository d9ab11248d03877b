#include "cc2/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <system_error>
#include <thread>

#include <unistd.h>

#include "cc2/error.hpp"

namespace cc2::cache {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'C', 'C', '2', 'G'};
constexpr std::string_view kExtension = ".cc2g";

void put16(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& b) : b_(b) {}

  std::uint8_t u8() {
    need(1);
    return b_[pos_++];
  }
  std::uint16_t u16() {
    need(2);
    const auto v = static_cast<std::uint16_t>(b_[pos_] | (b_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  void u16_array(std::vector<std::uint16_t>& out) {
    need(out.size() * 2);
    const std::uint8_t* p = b_.data() + pos_;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<std::uint16_t>(p[2 * i] | (p[2 * i + 1] << 8));
    }
    pos_ += out.size() * 2;
  }
  std::string cstr() {
    std::string s;
    for (;;) {
      const auto c = u8();
      if (c == 0) return s;
      s.push_back(static_cast<char>(c));
    }
  }
  [[nodiscard]] bool at_end() const { return pos_ == b_.size(); }

 private:
  void need(std::size_t k) const {
    if (pos_ + k > b_.size()) throw CacheError("cache file truncated");
  }
  const std::vector<std::uint8_t>& b_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<fs::path> env_dir() {
  const char* v = std::getenv("CC2_CACHE");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return fs::path(v);
}

std::string file_name(const GroupSpec& spec) {
  return spec.id() + "_n" + std::to_string(spec.n) + std::string(kExtension);
}

std::vector<std::uint8_t> serialize(const ConcreteGroup& g) {
  if (!g.has_dense_table()) throw CacheError("group of order " + std::to_string(g.order()) + " has no dense table");
  const auto table = g.dense_table();
  std::vector<std::uint8_t> out;
  out.reserve(16 + table.size() * 2);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kFormatVersion);
  out.push_back(static_cast<std::uint8_t>(g.log2_order()));
  put16(out, static_cast<std::uint32_t>(g.generators().size()));
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const auto& name = g.generator_names()[i];
    out.insert(out.end(), name.begin(), name.end());
    out.push_back(0);
    put16(out, g.generators()[i]);
  }
  for (const std::uint16_t v : table) put16(out, v);
  return out;
}

ConcreteGroup deserialize(const std::vector<std::uint8_t>& bytes, std::optional<GroupSpec> spec) {
  Reader r(bytes);
  for (const char c : kMagic) {
    if (r.u8() != static_cast<std::uint8_t>(c)) throw CacheError("bad magic (not a CC2G file)");
  }
  const auto version = r.u8();
  if (version != kFormatVersion) {
    throw CacheError("unsupported cache version " + std::to_string(version) + " (expected " +
                     std::to_string(kFormatVersion) + ")");
  }
  const int n = r.u8();
  if (n < 1 || static_cast<std::size_t>(1) << n > kDenseTableLimit) {
    throw CacheError("cache order 2^" + std::to_string(n) + " out of range");
  }
  if (spec && spec->n != n) {
    throw CacheError("cache holds order 2^" + std::to_string(n) + ", expected 2^" + std::to_string(spec->n));
  }
  const std::size_t gens = r.u16();
  std::vector<std::string> names;
  std::vector<Element> images;
  for (std::size_t i = 0; i < gens; ++i) {
    names.push_back(r.cstr());
    images.push_back(r.u16());
  }
  const std::size_t order = std::size_t{1} << n;
  std::vector<std::uint16_t> table(order * order);
  r.u16_array(table);
  if (!r.at_end()) throw CacheError("trailing bytes after cache table");
  try {
    return ConcreteGroup::from_table(std::move(table), std::move(names), std::move(images), std::move(spec));
  } catch (const ConsistencyError& e) {
    throw CacheError(std::string("cache table is not a group: ") + e.what());
  }
}

void write_file(const fs::path& path, const ConcreteGroup& g) {
  const auto bytes = serialize(g);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  // Unique per process and thread so concurrent writers never share a temp file.
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("cannot rename cache file into " + path.string());
  }
}

ConcreteGroup read_file(const fs::path& path, std::optional<GroupSpec> spec) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw CacheError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(in.tellg()));
  in.seekg(0);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!in) throw CacheError("cannot read " + path.string());
  try {
    return deserialize(bytes, std::move(spec));
  } catch (const CacheError& e) {
    throw CacheError(path.filename().string() + ": " + e.what());
  }
}

ConcreteGroup load_or_realize(const GroupSpec& spec, const std::optional<fs::path>& dir, bool* hit) {
  if (hit != nullptr) *hit = false;
  if (!dir || spec.order() > kDenseTableLimit) return realize(spec);
  const fs::path path = *dir / file_name(spec);
  if (fs::exists(path)) {
    if (hit != nullptr) *hit = true;
    return read_file(path, spec);
  }
  ConcreteGroup g = realize(spec);
  write_file(path, g);
  return g;
}

Stat stat(const fs::path& dir) {
  Stat s;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return s;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != kExtension) continue;
    ++s.files;
    s.bytes += entry.file_size();
    s.entries.push_back(entry.path().filename().string());
  }
  std::sort(s.entries.begin(), s.entries.end());
  return s;
}

std::size_t clear(const fs::path& dir) {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto name = entry.path().filename().string();
    if (entry.path().extension() == kExtension || name.find(".cc2g.tmp.") != std::string::npos) {
      doomed.push_back(entry.path());
    }
  }
  for (const auto& p : doomed) removed += fs::remove(p) ? 1 : 0;
  return removed;
}

}  // namespace cc2::cache
