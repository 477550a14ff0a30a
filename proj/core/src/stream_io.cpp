#include "mpsep/stream_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "mpsep/errors.hpp"

namespace mpsep {

void write_stream_ascii(std::ostream& out, const BitStream& stream) {
  std::string line;
  line.reserve(65);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    line.push_back(stream[i] != 0 ? '1' : '0');
    if (line.size() == 64 || i + 1 == stream.size()) {
      out << line << '\n';
      line.clear();
    }
  }
}

void write_stream_packed(std::ostream& out, const BitStream& stream) {
  for (std::size_t base = 0; base < stream.size(); base += 8) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      byte <<= 1;
      if (base + k < stream.size() && stream[base + k] != 0) byte |= 1U;
    }
    out.put(static_cast<char>(byte));
  }
}

BitStream read_stream_ascii(std::istream& in) {
  BitStream out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    for (char c : line) {
      if (c == '0' || c == '1') {
        out.push_back(c == '1' ? 1 : 0);
      } else if (c != ' ' && c != '\t' && c != '\r') {
        throw ParseError(line_no, std::string("unexpected character '") + c + "' in bit stream");
      }
    }
  }
  return out;
}

BitStream read_stream_packed(std::istream& in) {
  BitStream out;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    const auto byte = static_cast<unsigned char>(*it);
    for (int k = 7; k >= 0; --k) out.push_back(static_cast<std::uint8_t>((byte >> k) & 1U));
  }
  return out;
}

}  // namespace mpsep
