// steinitz-check CERT [--instance FILE]
//
// Exit status: 0 all claims verified, 1 a claim failed, 2 usage or I/O error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "certcheck.hpp"

namespace {

bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cert_path, instance_path;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--instance" && i + 1 < argc) {
      instance_path = argv[++i];
    } else if (a == "-h" || a == "--help") {
      std::cout << "usage: steinitz-check CERT [--instance FILE]\n";
      return 0;
    } else if (cert_path.empty()) {
      cert_path = a;
    } else {
      std::cerr << "steinitz-check: unexpected argument '" << a << "'\n";
      return 2;
    }
  }
  if (cert_path.empty()) {
    std::cerr << "usage: steinitz-check CERT [--instance FILE]\n";
    return 2;
  }
  std::string cert, instance;
  if (!slurp(cert_path, cert)) {
    std::cerr << "steinitz-check: cannot read " << cert_path << "\n";
    return 2;
  }
  if (!instance_path.empty() && !slurp(instance_path, instance)) {
    std::cerr << "steinitz-check: cannot read " << instance_path << "\n";
    return 2;
  }
  auto r = instance_path.empty() ? certcheck::check(cert) : certcheck::check(cert, instance);
  if (!r.ok) {
    std::cout << "FAIL";
    if (r.line) std::cout << " line " << r.line;
    std::cout << ": " << r.message << "\n";
    return 1;
  }
  std::cout << "OK " << r.claims << " claim(s) verified\n";
  return 0;
}
