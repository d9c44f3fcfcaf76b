#pragma once

// Triangulation stream files and SVG rendering.
//
// Stream: the first line is a JSON header
//   {"format":"symtri-stream/1","d":3,"region":"full","mode":"unimodular",
//    "symmetric":true,"points":[[0,0],[1,0],...]}
// followed by one triangulation per line as space-separated "i,j,k" triples,
// each triple ascending and the triples in lex order.

#include "symtri/enumeration.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtri {

inline constexpr const char* kStreamFormat = "symtri-stream/1";

class StreamParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StreamHeader {
    Region region;
    Mode mode = Mode::Unimodular;
    bool symmetric = false;
};

std::string stream_header_line(const StreamHeader& header);
std::string stream_line(const Triangulation& t);

void write_stream_header(std::ostream& os, const StreamHeader& header);
void write_stream_line(std::ostream& os, const Triangulation& t);

struct StreamData {
    StreamHeader header;
    std::vector<Triangulation> triangulations;
};

/// Parses and validates a stream: the header point map must equal the lattice
/// points of its region, and every index must refer to it.
StreamData read_stream(std::istream& is);

struct SvgOptions {
    int unit = 40;  // pixels per lattice unit
    bool axis = false;
};

/// Standalone SVG 1.1 document: lattice points as dots, edges as 1 px black lines.
std::string render_svg(const PointConfiguration& config, const Triangulation& t, const SvgOptions& options = {});

}  // namespace symtri
