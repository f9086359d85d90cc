#include "fbq/spectral/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "fbq/errors.hpp"

namespace fbq {
namespace {

constexpr std::array<char, 12> kMagic = {'F', 'B', 'Q', '-', 'S', 'N',
                                         'A', 'P', 'S', 'H', 'O', 'T'};

template <class T>
void put_le(std::ostream& os, T value) {
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    os.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& is) {
    std::array<char, sizeof(T)> bytes;
    if (!is.read(bytes.data(), bytes.size())) throw ConfigError("snapshot truncated");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const ScalarField& f) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw NumericalError("cannot open snapshot for writing: " + path.string());
    os.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(os, kSnapshotVersion);
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().n()));
    put_le<double>(os, f.grid().length());
    for (double v : f.physical_values()) put_le<double>(os, v);
    if (!os) throw NumericalError("failed writing snapshot: " + path.string());
}

ScalarField read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw NumericalError("cannot open snapshot: " + path.string());
    std::array<char, 12> magic;
    if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
        throw ConfigError("not a field snapshot: " + path.string());
    }
    const auto version = get_le<std::uint32_t>(is);
    if (version != kSnapshotVersion) throw ConfigError("unsupported snapshot version");
    const auto n = get_le<std::uint32_t>(is);
    const auto length = get_le<double>(is);
    if (n > 65536) throw ConfigError("snapshot grid size out of range");
    const SpectralGrid grid(static_cast<int>(n), length);
    RealArray v(grid.physical_size());
    for (double& x : v) x = get_le<double>(is);
    return ScalarField::from_physical(grid, std::move(v));
}

}  // namespace fbq
