#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rg {

// FNV-1a 64-bit, used for provenance hashes of configs and files.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

// CRC-32 (IEEE 802.3 polynomial), used as the trailing checksum of the
// binary grid formats.
std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t seed = 0);

// FNV-1a of a whole file's bytes; throws on I/O failure.
std::uint64_t file_digest(const std::string& path);

// Deterministic 64-bit mix (splitmix64 finalizer); per-cell seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace rg
