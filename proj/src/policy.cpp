#include "aplab/policy.hpp"

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

std::string Policy::serialize() const {
  std::ostringstream os;
  os << "rel_tol=" << rel_tol << "\n";
  os << "boundary_guard=" << boundary_guard << "\n";
  os << "c0=" << c0 << "\n";
  os << "regular_probe_count=" << regular_probe_count << "\n";
  os << "regular_kappa_grid=" << regular_kappa_grid << "\n";
  os << "c_impl_den=" << c_impl_den << "\n";
  os << "sigma_floor_const=" << sigma_floor_const << "\n";
  os << "lambda_min=" << lambda_min << "\n";
  os << "kk_cap_mult=" << kk_cap_mult << "\n";
  os << "l2_nu_den=" << l2_nu_den << "\n";
  os << "cls_max_halvings=" << cls_max_halvings << "\n";
  os << "max_theta_retries=" << max_theta_retries << "\n";
  os << "omega=" << omega << "\n";
  os << "epsilon=" << epsilon << "\n";
  return os.str();
}

Policy Policy::parse(const std::string& text) {
  Policy p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    require(eq != std::string::npos, "Policy: malformed line '" + t + "'");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "rel_tol") p.rel_tol = std::stod(value);
    else if (key == "boundary_guard") p.boundary_guard = std::stod(value);
    else if (key == "c0") p.c0 = std::stod(value);
    else if (key == "regular_probe_count") p.regular_probe_count = std::stoi(value);
    else if (key == "regular_kappa_grid") p.regular_kappa_grid = std::stoi(value);
    else if (key == "c_impl_den") p.c_impl_den = std::stoll(value);
    else if (key == "sigma_floor_const") p.sigma_floor_const = std::stod(value);
    else if (key == "lambda_min") p.lambda_min = std::stod(value);
    else if (key == "kk_cap_mult") p.kk_cap_mult = std::stod(value);
    else if (key == "l2_nu_den") p.l2_nu_den = std::stoll(value);
    else if (key == "cls_max_halvings") p.cls_max_halvings = std::stoi(value);
    else if (key == "max_theta_retries") p.max_theta_retries = std::stoi(value);
    else if (key == "omega") p.omega = std::stod(value);
    else if (key == "epsilon") p.epsilon = std::stod(value);
    else throw std::invalid_argument("Policy: unknown key '" + key + "'");
  }
  require(p.c_impl_den >= 2, "Policy: c_impl_den must be at least 2");
  require(p.l2_nu_den >= 1, "Policy: l2_nu_den must be at least 1");
  return p;
}

Policy Policy::load(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "Policy: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Policy::save(const std::string& path) const {
  std::ofstream out(path);
  require(out.good(), "Policy: cannot write " + path);
  out << serialize();
}

}  // namespace aplab
