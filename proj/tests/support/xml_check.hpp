#pragma once

#include <string>

namespace neurocode::testing {

// Minimal well-formedness check for the XML this project emits: prolog,
// balanced tags, quoted attributes, no stray '<' or unescaped '&'. Fills
// `why` on failure.
bool xml_well_formed(const std::string& doc, std::string& why);

}  // namespace neurocode::testing
