#pragma once

// Text key files, one NAME=value per line:
//
//   X0=<dec> Y0=<dec> K=<dec> K1=<dec> K2=<dec> K3=<dec> K4=<dec> N=<int>
//
// Reals are written with 17 significant digits so a write/parse cycle is
// bit-exact. Parsing is strict: unknown names, duplicates and missing fields
// are KeyErrors, as are range violations.

#include <filesystem>
#include <string>
#include <string_view>

#include "smdna/key_schedule.hpp"

namespace smdna {

std::string format_key(const SecretKey& key);
SecretKey parse_key(std::string_view text);

SecretKey read_key_file(const std::filesystem::path& path);
void write_key_file(const std::filesystem::path& path, const SecretKey& key);

}  // namespace smdna
