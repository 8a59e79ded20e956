#include "seqlc/seqio.hpp"

#include <fstream>
#include <sstream>

namespace seqlc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

SequenceFile parse_sequence(std::string_view text) {
  SequenceFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const std::string_view body = trim(line);
    if (!body.empty() && body.front() == '#') {
      std::string_view rest = trim(body.substr(1));
      constexpr std::string_view key = "period=";
      if (rest.substr(0, key.size()) == key) {
        try {
          out.period = parse_u128(trim(rest.substr(key.size())));
        } catch (const std::exception&) {
          throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed period header");
        }
      }
      continue;
    }
    for (std::size_t col = 0; col < line.size(); ++col) {
      const char c = line[col];
      if (c == '0' || c == '1') {
        out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (!is_space(c)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) +
                                    ": unexpected character '" + std::string(1, c) + "'");
      }
    }
  }
  return out;
}

std::string format_sequence(const Bits& bits, std::optional<u128> period) {
  std::string out;
  if (period) out += "# period=" + to_string(*period) + "\n";
  if (!bits.empty()) {
    out.reserve(out.size() + bits.size() + 1);
    for (auto b : bits) out += static_cast<char>('0' + (b & 1));
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out.flush()) throw IoError("error writing " + path.string());
}

SequenceFile read_sequence_file(const std::filesystem::path& path) { return parse_sequence(read_text_file(path)); }

}  // namespace seqlc
