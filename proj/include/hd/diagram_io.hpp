#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hd/diagram.hpp"

namespace hd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the text diagram format and validates the result. Throws
/// ParseError with a line locus on syntax or reference errors, and with
/// the validation report when the structure is inconsistent.
HeegaardDiagram parse_diagram(std::string_view text);

/// Canonical text form; parse(emit(d)) reproduces an isomorphic diagram.
std::string emit_diagram(const HeegaardDiagram& dg);

/// Bundled example diagrams, keyed by name.
const std::map<std::string, std::string>& bundled_fixtures();

/// Parses a bundled fixture. Throws std::invalid_argument for unknown names.
HeegaardDiagram load_fixture(const std::string& name);

}  // namespace hd
