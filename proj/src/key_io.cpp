#include "smdna/key_io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "smdna/error.hpp"

namespace smdna {

namespace {

constexpr std::array<const char*, 8> kFieldOrder{"X0", "Y0", "K", "K1", "K2", "K3", "K4", "N"};

std::string render_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_real(const std::string& field, std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw KeyError(field, field + " is not a valid decimal number");
  return v;
}

int parse_int(const std::string& field, std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw KeyError(field, field + " is not a valid integer");
  return v;
}

}  // namespace

std::string format_key(const SecretKey& key) {
  std::ostringstream os;
  os << "X0=" << render_real(key.x0) << '\n'
     << "Y0=" << render_real(key.y0) << '\n'
     << "K=" << render_real(key.k) << '\n'
     << "K1=" << render_real(key.k1) << '\n'
     << "K2=" << render_real(key.k2) << '\n'
     << "K3=" << render_real(key.k3) << '\n'
     << "K4=" << render_real(key.k4) << '\n'
     << "N=" << key.n << '\n';
  return os.str();
}

SecretKey parse_key(std::string_view text) {
  std::map<std::string, std::string_view, std::less<>> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw KeyError("", "line " + std::to_string(line_no) + ": expected NAME=value");
    const std::string name(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    bool known = false;
    for (const char* f : kFieldOrder) known = known || name == f;
    if (!known) throw KeyError(name, "unknown key field " + name);
    if (!fields.emplace(name, value).second) throw KeyError(name, "duplicate key field " + name);
  }
  for (const char* f : kFieldOrder)
    if (!fields.contains(f)) throw KeyError(f, std::string("missing key field ") + f);

  SecretKey key;
  key.x0 = parse_real("X0", fields.at("X0"));
  key.y0 = parse_real("Y0", fields.at("Y0"));
  key.k = parse_real("K", fields.at("K"));
  key.k1 = parse_real("K1", fields.at("K1"));
  key.k2 = parse_real("K2", fields.at("K2"));
  key.k3 = parse_real("K3", fields.at("K3"));
  key.k4 = parse_real("K4", fields.at("K4"));
  key.n = parse_int("N", fields.at("N"));
  validate_key(key);
  return key;
}

SecretKey read_key_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open key file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_key(ss.str());
}

void write_key_file(const std::filesystem::path& path, const SecretKey& key) {
  validate_key(key);
  std::ofstream out(path);
  if (!out) throw Error("cannot write key file " + path.string());
  out << format_key(key);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace smdna
