#include "aplab/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace aplab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path);
  out << content;
}

ZnSet parse_set_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), "set file: empty");
  line = trim(line);
  require(line.rfind("N=", 0) == 0, "set file: first line must be N=<modulus>");
  u64 n = std::stoull(line.substr(2));
  ZnSet out(n);
  i64 prev = -1;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    u64 v = std::stoull(line);
    require(v < n, "set file: residue out of range");
    require(static_cast<i64>(v) > prev, "set file: residues must be ascending, no duplicates");
    prev = static_cast<i64>(v);
    out.insert(static_cast<u32>(v));
  }
  return out;
}

std::string set_to_text(const ZnSet& s) {
  std::ostringstream os;
  os << "N=" << s.modulus() << "\n";
  for (u32 x : s.elements()) os << x << "\n";
  return os.str();
}

ZnSet read_set_file(const std::string& path) { return parse_set_text(read_text_file(path)); }

void write_set_file(const ZnSet& s, const std::string& path) {
  write_text_file(path, set_to_text(s));
}

std::string function_to_csv(const GroupFunction& f) {
  std::ostringstream os;
  os << "index,re,im\n";
  char buf[64];
  for (u64 x = 0; x < f.modulus(); ++x) {
    std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%.17g,%.17g", x, f[x].real(), f[x].imag());
    os << buf << "\n";
  }
  return os.str();
}

void write_function_csv(const GroupFunction& f, const std::string& path) {
  write_text_file(path, function_to_csv(f));
}

BohrDescriptor parse_bohr_descriptor(const std::string& text) {
  BohrDescriptor d;
  bool saw_n = false, saw_delta = false, saw_gamma = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    require(eq != std::string::npos, "bohr descriptor: malformed line '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "N") {
      d.n = std::stoull(value);
      saw_n = true;
    } else if (key == "delta") {
      d.delta = std::stod(value);
      saw_delta = true;
    } else if (key == "gamma") {
      std::istringstream vs(value);
      std::string tok;
      while (std::getline(vs, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) d.gamma.push_back(static_cast<u32>(std::stoul(tok)));
      }
      saw_gamma = true;
    } else {
      throw std::invalid_argument("bohr descriptor: unknown key '" + key + "'");
    }
  }
  require(saw_n && saw_delta && saw_gamma, "bohr descriptor: needs N, delta and gamma");
  return d;
}

BohrDescriptor read_bohr_descriptor(const std::string& path) {
  return parse_bohr_descriptor(read_text_file(path));
}

std::string bohr_descriptor_to_text(const BohrDescriptor& d) {
  std::ostringstream os;
  os << "N=" << d.n << "\n";
  os << "delta=" << d.delta << "\n";
  os << "gamma=";
  for (size_t i = 0; i < d.gamma.size(); ++i) {
    if (i) os << ",";
    os << d.gamma[i];
  }
  os << "\n";
  return os.str();
}

}  // namespace aplab
