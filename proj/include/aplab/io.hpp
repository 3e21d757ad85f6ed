#pragma once

#include <string>
#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/group_function.hpp"
#include "aplab/zn_set.hpp"

namespace aplab {

// Set file: first line "N=<modulus>", then one decimal residue per line,
// ascending, no duplicates.
ZnSet read_set_file(const std::string& path);
void write_set_file(const ZnSet& s, const std::string& path);
ZnSet parse_set_text(const std::string& text);
std::string set_to_text(const ZnSet& s);

// GroupFunction dump: CSV "index,re,im".
std::string function_to_csv(const GroupFunction& f);
void write_function_csv(const GroupFunction& f, const std::string& path);

// Bohr descriptor: lines N=<int>, delta=<decimal>, gamma=<comma-separated>.
struct BohrDescriptor {
  u64 n = 0;
  double delta = 2.0;
  std::vector<u32> gamma;
};

BohrDescriptor parse_bohr_descriptor(const std::string& text);
BohrDescriptor read_bohr_descriptor(const std::string& path);
std::string bohr_descriptor_to_text(const BohrDescriptor& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace aplab
