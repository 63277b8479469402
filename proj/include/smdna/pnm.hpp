#pragma once

// Binary netpbm I/O: P5 (grayscale) and P6 (RGB), maxval 255 only.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "smdna/image.hpp"

namespace smdna {

/// One Image per channel: a single plane for P5, three (R, G, B) for P6.
struct PnmImage {
  std::vector<Image> channels;

  bool is_rgb() const noexcept { return channels.size() == 3; }
};

bool operator==(const PnmImage& a, const PnmImage& b);

PnmImage read_pnm(std::istream& in);
PnmImage read_pnm(const std::filesystem::path& path);
void write_pnm(std::ostream& out, const PnmImage& img);
void write_pnm(const std::filesystem::path& path, const PnmImage& img);

/// Grayscale convenience wrappers; read_pgm rejects P6 input.
Image read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const Image& img);

std::string encode_pnm(const PnmImage& img);
PnmImage decode_pnm(const std::string& bytes);

}  // namespace smdna
