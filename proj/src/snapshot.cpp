#include "gs/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

namespace gs {

namespace {

constexpr char kMagic[4] = {'G', 'S', 'F', '1'};

void put_u32(std::vector<unsigned char>& out, std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(x >> (8 * i)));
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(x >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double x) {
    put_u64(out, std::bit_cast<std::uint64_t>(x));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return x;
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return x;
}

double get_f64(const unsigned char* p) { return std::bit_cast<double>(get_u64(p)); }

} // namespace

void write_snapshot(const SimState& s, double dt, const std::filesystem::path& path) {
    require_same_shape(s.u, s.v, "write_snapshot");
    std::vector<unsigned char> buf;
    buf.reserve(28 + 16 * s.u.size());
    buf.insert(buf.end(), kMagic, kMagic + 4);
    put_u32(buf, static_cast<std::uint32_t>(s.u.nx()));
    put_u32(buf, static_cast<std::uint32_t>(s.u.ny()));
    put_u64(buf, s.step);
    put_f64(buf, dt);
    for (double x : s.u.data()) put_f64(buf, x);
    for (double x : s.v.data()) put_f64(buf, x);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

LoadedSnapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (buf.size() < 28) throw FormatError("snapshot truncated: " + path.string());
    if (std::memcmp(buf.data(), kMagic, 4) != 0) {
        throw FormatError("bad snapshot magic: " + path.string());
    }
    const std::uint32_t nx = get_u32(buf.data() + 4);
    const std::uint32_t ny = get_u32(buf.data() + 8);
    if (nx == 0 || ny == 0 ||
        nx > static_cast<std::uint32_t>(std::numeric_limits<int>::max()) ||
        ny > static_cast<std::uint32_t>(std::numeric_limits<int>::max()) ||
        static_cast<std::uint64_t>(nx) * ny > (1ull << 32)) {
        throw FormatError("snapshot dimensions out of range: " + path.string());
    }
    const std::uint64_t cells = static_cast<std::uint64_t>(nx) * ny;
    const std::uint64_t expected = 28 + 16 * cells;
    if (buf.size() != expected) {
        throw FormatError("snapshot length " + std::to_string(buf.size()) +
                          " != expected " + std::to_string(expected) + ": " +
                          path.string());
    }

    LoadedSnapshot snap;
    snap.state.step = get_u64(buf.data() + 12);
    snap.dt = get_f64(buf.data() + 20);
    snap.state.time = static_cast<double>(snap.state.step) * snap.dt;
    snap.state.u = Field(static_cast<int>(nx), static_cast<int>(ny));
    snap.state.v = Field(static_cast<int>(nx), static_cast<int>(ny));
    const unsigned char* p = buf.data() + 28;
    for (double& x : snap.state.u.data()) {
        x = get_f64(p);
        p += 8;
    }
    for (double& x : snap.state.v.data()) {
        x = get_f64(p);
        p += 8;
    }
    return snap;
}

} // namespace gs
