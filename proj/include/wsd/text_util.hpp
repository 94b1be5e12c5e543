#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace wsd {

// Split on a single-character delimiter, keeping empty fields.
std::vector<std::string> split_fields(std::string_view line, char delim);

std::string_view trim(std::string_view s);

// Blank lines and lines whose first non-space character is '#'.
bool is_blank_or_comment(std::string_view line);

// Open or throw with the path in the message.
std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);

// All lines of a file, trailing '\r' stripped.
std::vector<std::string> read_lines(const std::string& path);

std::uint64_t parse_count(std::string_view field, const std::string& context);
double parse_real(std::string_view field, const std::string& context);

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace wsd
