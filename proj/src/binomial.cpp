#include "toric/binomial.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

bool Binomial::normalized(int q) const {
  if (!homogeneous()) return false;
  for (int i = 0; i < s(); ++i) {
    if (a[i] > q - 2 || b[i] > q - 2) return false;
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

Binomial make_binomial(Exponents a, Exponents b) {
  if (a.size() != b.size())
    throw InputError("binomial exponent vectors must have equal length");
  for (int e : a)
    if (e < 0) throw InputError("negative exponent");
  for (int e : b)
    if (e < 0) throw InputError("negative exponent");
  return Binomial{std::move(a), std::move(b)};
}

const Exponents& leading_monomial(const Binomial& f) {
  return grevlex_compare(f.a, f.b) >= 0 ? f.a : f.b;
}

std::vector<Binomial> parse_binomials(std::string_view text) {
  std::vector<Binomial> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::size_t s = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t bar = line.find('|');
    if (bar == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": missing '|'");
    auto read = [&](const std::string& part) {
      Exponents v;
      std::istringstream ps(part);
      int e;
      while (ps >> e) {
        if (e < 0)
          throw ParseError("line " + std::to_string(lineno) + ": negative exponent");
        v.push_back(e);
      }
      if (!ps.eof())
        throw ParseError("line " + std::to_string(lineno) + ": expected integers");
      return v;
    };
    Exponents a = read(line.substr(0, bar));
    Exponents b = read(line.substr(bar + 1));
    if (a.size() != b.size() || a.empty())
      throw ParseError("line " + std::to_string(lineno) +
                       ": sides must list the same number of exponents");
    if (s == 0) s = a.size();
    if (a.size() != s)
      throw ParseError("line " + std::to_string(lineno) +
                       ": inconsistent variable count");
    out.push_back(Binomial{std::move(a), std::move(b)});
  }
  return out;
}

std::string format_binomial(const Binomial& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.a.size(); ++i) out << (i ? " " : "") << f.a[i];
  out << " | ";
  for (std::size_t i = 0; i < f.b.size(); ++i) out << (i ? " " : "") << f.b[i];
  return out.str();
}

std::string format_binomials(const std::vector<Binomial>& fs) {
  std::string out;
  for (const auto& f : fs) {
    out += format_binomial(f);
    out += '\n';
  }
  return out;
}

std::string pretty_binomial(const Binomial& f) {
  auto side = [](const Exponents& v) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (any) out << "*";
      out << "t" << i + 1;
      if (v[i] > 1) out << "^" << v[i];
      any = true;
    }
    return any ? out.str() : std::string("1");
  };
  return side(f.a) + " - " + side(f.b);
}

}  // namespace toric
