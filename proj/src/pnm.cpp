#include "smdna/pnm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "smdna/error.hpp"

namespace smdna {

namespace {

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (c != std::char_traits<char>::eof() && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long read_header_int(std::istream& in, const char* what) {
  skip_space_and_comments(in);
  long v = 0;
  int digits = 0;
  while (std::isdigit(in.peek())) {
    v = v * 10 + (in.get() - '0');
    if (v > 1'000'000'000) throw FormatError(std::string("malformed header: ") + what + " too large");
    ++digits;
  }
  if (digits == 0) throw FormatError(std::string("malformed header: missing ") + what);
  return v;
}

}  // namespace

bool operator==(const PnmImage& a, const PnmImage& b) {
  if (a.channels.size() != b.channels.size()) return false;
  for (std::size_t i = 0; i < a.channels.size(); ++i)
    if (!same_pixels(a.channels[i], b.channels[i])) return false;
  return true;
}

PnmImage read_pnm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
    throw FormatError("malformed header: expected P5 or P6 magic");
  const bool rgb = magic[1] == '6';
  if (!std::isspace(in.peek()) && in.peek() != '#')
    throw FormatError("malformed header: no separator after magic");

  const long width = read_header_int(in, "width");
  const long height = read_header_int(in, "height");
  const long maxval = read_header_int(in, "maxval");
  if (width <= 0 || height <= 0) throw FormatError("malformed header: zero dimension");
  if (maxval != 255) throw FormatError("unsupported maxval " + std::to_string(maxval));
  if (!std::isspace(in.get())) throw FormatError("malformed header: no separator after maxval");

  const std::size_t planes = rgb ? 3 : 1;
  const auto pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<char> raw(pixels * planes);
  in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size())
    throw FormatError("truncated payload: expected " + std::to_string(raw.size()) +
                      " bytes, got " + std::to_string(in.gcount()));

  PnmImage img;
  for (std::size_t c = 0; c < planes; ++c) {
    Image plane(height, width);
    std::uint8_t* dst = plane.data();
    for (std::size_t i = 0; i < pixels; ++i)
      dst[i] = static_cast<std::uint8_t>(raw[i * planes + c]);
    img.channels.push_back(std::move(plane));
  }
  return img;
}

void write_pnm(std::ostream& out, const PnmImage& img) {
  if (img.channels.size() != 1 && img.channels.size() != 3)
    throw DimensionError("PNM image needs 1 or 3 channels");
  const Image& first = img.channels.front();
  require_nonempty(first);
  for (const Image& c : img.channels) require_same_shape(first, c);

  const std::size_t planes = img.channels.size();
  out << (planes == 3 ? "P6" : "P5") << '\n'
      << first.cols() << ' ' << first.rows() << '\n'
      << "255\n";
  const std::size_t pixels = pixel_count(first);
  std::vector<char> raw(pixels * planes);
  for (std::size_t c = 0; c < planes; ++c) {
    const std::uint8_t* src = img.channels[c].data();
    for (std::size_t i = 0; i < pixels; ++i) raw[i * planes + c] = static_cast<char>(src[i]);
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
}

PnmImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_pnm(in);
}

void write_pnm(const std::filesystem::path& path, const PnmImage& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_pnm(out, img);
  if (!out) throw Error("write failed for " + path.string());
}

Image read_pgm(const std::filesystem::path& path) {
  PnmImage img = read_pnm(path);
  if (img.is_rgb()) throw FormatError(path.string() + " is an RGB (P6) image, expected P5");
  return std::move(img.channels.front());
}

void write_pgm(const std::filesystem::path& path, const Image& img) {
  write_pnm(path, PnmImage{{img}});
}

std::string encode_pnm(const PnmImage& img) {
  std::ostringstream os(std::ios::binary);
  write_pnm(os, img);
  return os.str();
}

PnmImage decode_pnm(const std::string& bytes) {
  std::istringstream is(bytes, std::ios::binary);
  return read_pnm(is);
}

}  // namespace smdna
