#pragma once

#include <string>
#include <vector>

#include "kmroot/cartan.hpp"

namespace kmroot {

struct GcmFile {
  Gcm gcm;
  std::vector<std::string> labels;  // empty when the file has none
};

// JSON object {"n": int, "entries": [[int,...],...], "labels": [str,...]?}
GcmFile parse_gcm_json(const std::string& text);
// Plain text: first line n, then n rows of n integers, whitespace separated.
GcmFile parse_gcm_text(const std::string& text);
// Dispatch on the first non-space byte ('{' selects JSON). Throws ParseError
// on malformed input and the cartan validation errors on non-GCM entries.
GcmFile parse_gcm(const std::string& text);
GcmFile read_gcm_file(const std::string& path);  // Error when unreadable

std::string to_json(const Gcm& g, const std::vector<std::string>& labels = {});
std::string to_text(const Gcm& g);

}  // namespace kmroot
