#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "rpdmd/volume.hpp"

namespace rpdmd {

// .vvol: little-endian header of three uint32 (F, H, W) followed by
// F*H*W IEEE-754 doubles in row-major (f, h, w) order.

namespace detail {

inline void write_u32_le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t read_u32_le(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

inline void write_f64_le(std::ostream& os, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, sizeof(bits));
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  }
  os.write(reinterpret_cast<const char*>(b), 8);
}

inline double read_f64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  }
  double d;
  std::memcpy(&d, &bits, sizeof(d));
  return d;
}

}  // namespace detail

inline void save_vvol(const VideoVolume& v, const std::string& path) {
  require_nonempty(v, "save_vvol");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("save_vvol: cannot open " + path);
  detail::write_u32_le(os, static_cast<std::uint32_t>(v.frames()));
  detail::write_u32_le(os, static_cast<std::uint32_t>(v.height()));
  detail::write_u32_le(os, static_cast<std::uint32_t>(v.width()));
  for (double x : v.data()) detail::write_f64_le(os, x);
  if (!os) throw std::runtime_error("save_vvol: write failed for " + path);
}

inline VideoVolume load_vvol(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load_vvol: cannot open " + path);
  const std::uint32_t f = detail::read_u32_le(is);
  const std::uint32_t h = detail::read_u32_le(is);
  const std::uint32_t w = detail::read_u32_le(is);
  if (!is || f == 0 || h == 0 || w == 0) {
    throw std::runtime_error("load_vvol: malformed header in " + path);
  }
  std::vector<double> data(static_cast<std::size_t>(f) * h * w);
  for (double& x : data) x = detail::read_f64_le(is);
  if (!is) throw std::runtime_error("load_vvol: truncated data in " + path);
  return VideoVolume(f, h, w, std::move(data));
}

/// Shortest decimal that round-trips the double; deterministic output.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// Writes one frame as ASCII PGM (P2, maxval 255), min-max scaled over the
/// frame. Display-only scaling; a flat frame maps to all zeros.
inline void write_frame_pgm(const VideoVolume& v, std::size_t frame,
                            const std::string& path) {
  require_nonempty(v, "write_frame_pgm");
  if (frame >= v.frames()) {
    throw std::invalid_argument("write_frame_pgm: frame out of range");
  }
  double lo = v.at(frame, 0, 0);
  double hi = lo;
  for (std::size_t h = 0; h < v.height(); ++h) {
    for (std::size_t w = 0; w < v.width(); ++w) {
      const double x = v.at(frame, h, w);
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
  }
  const double range = hi - lo;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_frame_pgm: cannot open " + path);
  os << "P2\n" << v.width() << " " << v.height() << "\n255\n";
  for (std::size_t h = 0; h < v.height(); ++h) {
    for (std::size_t w = 0; w < v.width(); ++w) {
      int level = 0;
      if (range >= kDegenerateEps) {
        level = static_cast<int>((v.at(frame, h, w) - lo) / range * 255.0 + 0.5);
        if (level < 0) level = 0;
        if (level > 255) level = 255;
      }
      os << level << (w + 1 == v.width() ? "\n" : " ");
    }
  }
  if (!os) throw std::runtime_error("write_frame_pgm: write failed for " + path);
}

}  // namespace rpdmd
