#include "morselab/ball_cache.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "morselab/errors.hpp"

namespace morselab {

namespace {

constexpr char kMagic[8] = {'M', 'L', 'B', 'A', 'L', 'L', '\0', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

struct Header {
  char magic[8];
  std::uint32_t version;
  std::uint32_t kind;
  std::uint64_t fingerprint;
  std::uint32_t radius;
  std::uint32_t degree;
  std::uint64_t elements;
  std::uint64_t arena_bytes;
};

template <class T>
void write_vector(std::ostream& out, const std::vector<T>& v) {
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <class T>
void read_vector(std::istream& in, std::vector<T>& v, std::size_t count) {
  v.resize(count);
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(count * sizeof(T)));
  if (!in) throw Error("ball cache file is truncated");
}

}  // namespace

struct BallCodec {
  static void save(const BallIndex& b, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write ball cache '" + tmp + "'");
      Header h{};
      std::memcpy(h.magic, kMagic, sizeof kMagic);
      h.version = kFormatVersion;
      h.kind = b.presentation().is_raag() ? 1 : 0;
      h.fingerprint = b.presentation().graph().fingerprint();
      h.radius = static_cast<std::uint32_t>(b.radius_);
      h.degree = static_cast<std::uint32_t>(b.degree());
      h.elements = b.size();
      h.arena_bytes = b.arena_.size();
      out.write(reinterpret_cast<const char*>(&h), sizeof h);
      write_vector(out, b.layer_begin_);
      write_vector(out, b.layer_offset_);
      write_vector(out, b.arena_);
      write_vector(out, b.adjacency_);
      if (!out) throw Error("failed writing ball cache '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
  }

  static BallIndex load(const Presentation& p, int radius, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open ball cache '" + path + "'");
    Header h{};
    in.read(reinterpret_cast<char*>(&h), sizeof h);
    if (!in || std::memcmp(h.magic, kMagic, sizeof kMagic) != 0) {
      throw Error("'" + path + "' is not a ball cache");
    }
    if (h.version != kFormatVersion) throw Error("ball cache version mismatch");
    if (h.kind != (p.is_raag() ? 1U : 0U) || h.fingerprint != p.graph().fingerprint() ||
        h.radius != static_cast<std::uint32_t>(radius) || h.degree != p.alphabet().size()) {
      throw Error("ball cache describes a different presentation or radius");
    }
    BallIndex b(p);
    b.radius_ = radius;
    read_vector(in, b.layer_begin_, static_cast<std::size_t>(radius) + 2);
    read_vector(in, b.layer_offset_, static_cast<std::size_t>(radius) + 1);
    read_vector(in, b.arena_, h.arena_bytes);
    read_vector(in, b.adjacency_, h.elements * h.degree);
    if (b.layer_begin_.back() != h.elements) throw Error("ball cache layer table is inconsistent");
    std::size_t capacity = 1024;
    while (capacity < 2 * h.elements + 2) capacity *= 2;
    b.rebuild_table(capacity);
    return b;
  }
};

void save_ball(const BallIndex& ball, const std::string& path) { BallCodec::save(ball, path); }

BallIndex load_ball(const Presentation& p, int radius, const std::string& path) {
  return BallCodec::load(p, radius, path);
}

std::string ball_cache_path(const std::string& dir, const Presentation& p, int radius) {
  std::ostringstream name;
  name << std::hex << p.graph().fingerprint() << std::dec << '-' << to_string(p.kind()) << "-r"
       << radius << ".ball";
  return (std::filesystem::path(dir) / name.str()).string();
}

std::optional<std::string> cache_dir_from_env() {
  const char* dir = std::getenv("MORSELAB_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

BallIndex build_ball_cached(const Presentation& p, int radius, const BallOptions& options,
                            const std::optional<std::string>& cache_dir) {
  if (!cache_dir) return build_ball(p, radius, options);
  const std::string path = ball_cache_path(*cache_dir, p, radius);
  if (std::filesystem::exists(path)) {
    try {
      BallIndex cached = load_ball(p, radius, path);
      if (cached.size() <= options.element_budget) return cached;
    } catch (const Error&) {
      // Stale or damaged snapshot: rebuild and overwrite.
    }
  }
  BallIndex built = build_ball(p, radius, options);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  try {
    save_ball(built, path);
  } catch (const std::exception&) {
    // Caching is best effort.
  }
  return built;
}

}  // namespace morselab
