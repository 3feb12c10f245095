#pragma once

#include <string>

#include "mcd/design.hpp"

namespace mcd {

// JSON encoding of a certified design.  Deterministic field order; encoding
// then decoding then encoding again is byte-identical.
json to_json(const CertifiedDesign& cert);
CertifiedDesign cert_from_json(const json& j);

std::string dump_cert(const CertifiedDesign& cert);  // pretty, trailing \n
CertifiedDesign parse_cert(const std::string& text);

CertifiedDesign load_cert_file(const std::string& path);
void save_cert_file(const CertifiedDesign& cert, const std::string& path);

json scope_to_json(const ClassScope& s);
ClassScope scope_from_json(const json& j);

}  // namespace mcd
