#pragma once

#include <iosfwd>

#include "mpsep/bitstats.hpp"

namespace mpsep {

/// ASCII dump: '0'/'1' characters, 64 per line (the last line may be shorter).
void write_stream_ascii(std::ostream& out, const BitStream& stream);
/// Packed dump: 8 bits per byte, first bit most significant, final byte zero-padded.
void write_stream_packed(std::ostream& out, const BitStream& stream);

/// Reads '0'/'1' characters, skipping whitespace and '#' comment lines.
/// Throws ParseError on any other character.
BitStream read_stream_ascii(std::istream& in);
/// Reads every byte as 8 bits, most significant first.
BitStream read_stream_packed(std::istream& in);

}  // namespace mpsep
