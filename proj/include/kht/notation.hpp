#pragma once

#include <string>

#include "kht/diagram.hpp"

namespace kht {

/// Parses the plain-text tangle notation. One declaration per line, '#'
/// starts a comment. Declarations:
///
///   X+ a b c d   crossing; edge labels counterclockwise from the incoming
///   X- a b c d   under-strand; the sign fixes the over-strand direction
///   A p q        crossing-free arc from boundary point p to q
///   O            crossing-free loop
///   B p1 .. pk   optional boundary ordering (at most one such line)
///
/// A label used at exactly two crossing ports is an internal edge and must
/// occur once incoming and once outgoing. A label used at one port names a
/// boundary point, as do the labels of A lines; boundary labels occur exactly
/// once. Throws ParseError / ValidationError.
TangleDiagram parse_diagram(const std::string& text);

/// Canonical text form. Internal edges are renamed in order of first
/// appearance, so serialize(parse(s)) is a fixed point.
std::string serialize_diagram(const TangleDiagram& d);

/// JSON serialization with the same content as the text form but explicit
/// ports (schema documented in the README). Round-trips exactly.
std::string diagram_to_json(const TangleDiagram& d);
TangleDiagram diagram_from_json(const std::string& text);

}  // namespace kht
