#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace sri {

std::uint64_t fnv1a64(std::string_view bytes);

// 16-hex-digit content hash of a byte string, e.g. "cbf29ce484222325".
std::string digest_bytes(std::string_view bytes);

std::string digest_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace sri
