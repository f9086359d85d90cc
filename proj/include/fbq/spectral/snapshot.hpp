/// @file snapshot.hpp
/// @brief Binary field snapshots.
///
/// Layout (all little-endian):
///   bytes  0..11  magic "FBQ-SNAPSHOT"
///   bytes 12..15  u32 format version (currently 1)
///   u32           n
///   f64           torus length
///   n*n f64       physical values, row-major (index i*n + j, i along x1)
#pragma once

#include <filesystem>

#include "fbq/spectral/field.hpp"

namespace fbq {

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const ScalarField& f);

/// Throws NumericalError on I/O failure and ConfigError on malformed content.
ScalarField read_snapshot(const std::filesystem::path& path);

}  // namespace fbq
