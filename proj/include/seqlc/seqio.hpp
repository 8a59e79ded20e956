#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqlc/generators.hpp"

namespace seqlc {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bits plus the period declared by a '# period=N' header, if any.
struct SequenceFile {
  Bits bits;
  std::optional<u128> period;
};

/// Comment lines start with '#'; other lines hold '0'/'1' with arbitrary
/// whitespace. Throws std::invalid_argument naming line and column.
SequenceFile parse_sequence(std::string_view text);
/// Optional header line, then the bits on one newline-terminated line (omitted when empty).
std::string format_sequence(const Bits& bits, std::optional<u128> period = std::nullopt);

/// Read/write helpers; IoError when the file cannot be accessed.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
SequenceFile read_sequence_file(const std::filesystem::path& path);

}  // namespace seqlc
