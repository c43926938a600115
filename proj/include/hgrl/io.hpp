#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hgrl {

// Reads a whole text file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& content);

std::vector<std::string> split(const std::string& line, char sep);

// FNV-1a over file bytes, used for the run manifest.
std::uint64_t hash_file(const std::filesystem::path& path);

void log_warn(const std::string& msg);

}  // namespace hgrl
