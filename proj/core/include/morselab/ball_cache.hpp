#pragma once

#include <optional>
#include <string>

#include "morselab/cayley.hpp"

namespace morselab {

/// Binary snapshot of a ball: versioned header (graph fingerprint, kind,
/// radius), then layer table, word arena and adjacency, in native byte order.
void save_ball(const BallIndex& ball, const std::string& path);

/// Throws Error if the file is unreadable, truncated, or describes a different
/// presentation or radius.
BallIndex load_ball(const Presentation& p, int radius, const std::string& path);

std::string ball_cache_path(const std::string& dir, const Presentation& p, int radius);

/// Directory named by MORSELAB_CACHE_DIR, if set and non-empty.
std::optional<std::string> cache_dir_from_env();

/// Loads from `cache_dir` when a matching snapshot exists, otherwise builds
/// and stores one. Without a directory this is build_ball().
BallIndex build_ball_cached(const Presentation& p, int radius, const BallOptions& options,
                            const std::optional<std::string>& cache_dir);

}  // namespace morselab
