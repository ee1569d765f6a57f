#include "threefold/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "threefold/errors.hpp"

namespace threefold {

std::string format_ideal(const Ideal& I) {
  std::string out = "ring p=" + std::to_string(I.ring.p) +
                    " vars=" + std::to_string(I.ring.n) + "\n";
  for (const auto& g : I.gens()) out += to_string(g) + "\n";
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  int lineno;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw parse_error(lineno, "expected integer");
    return std::stoll(s.substr(start, i - start));
  }
};

}  // namespace

Poly parse_poly(const std::string& line, Ring r, int lineno) {
  Scanner sc{line, 0, lineno};
  std::vector<Term> terms;
  bool negate = false;
  if (sc.peek() == '-') { sc.take(); negate = true; }
  while (true) {
    // one term: factors joined by '*'
    uint64_t coeff = 1;
    Monomial m = Monomial::one();
    bool saw_factor = false;
    while (true) {
      char c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = coeff * static_cast<uint64_t>(sc.integer()) % r.p;
        saw_factor = true;
      } else if (c == 'x') {
        sc.take();
        long long vi = sc.integer();
        if (vi < 0 || vi >= r.n)
          throw parse_error(lineno, "variable x" + std::to_string(vi) + " out of range");
        long long e = 1;
        if (sc.peek() == '^') { sc.take(); e = sc.integer(); }
        if (e < 0 || e > 200) throw parse_error(lineno, "bad exponent");
        for (int q = 0; q < e; ++q) m = m * Monomial::var(static_cast<int>(vi));
        saw_factor = true;
      } else {
        break;
      }
      if (sc.peek() == '*') { sc.take(); continue; }
      break;
    }
    if (!saw_factor) throw parse_error(lineno, "expected term");
    uint32_t c32 = static_cast<uint32_t>(coeff % r.p);
    if (negate) c32 = fp_neg(c32, r.p);
    if (c32) terms.push_back({m, c32});
    if (sc.eof()) break;
    char op = sc.take();
    if (op == '+') negate = false;
    else if (op == '-') negate = true;
    else throw parse_error(lineno, std::string("unexpected character '") + op + "'");
  }
  return Poly::from_terms(r, std::move(terms), MonomialOrder::grevlex());
}

Ideal parse_ideal(std::istream& in) {
  std::string line;
  int lineno = 0;
  Ring r;
  bool have_header = false;
  std::vector<Poly> gens;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace-only lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
    if (blank) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string kw, ps, vs;
      hs >> kw >> ps >> vs;
      if (kw != "ring" || ps.rfind("p=", 0) != 0 || vs.rfind("vars=", 0) != 0)
        throw parse_error(lineno, "expected header 'ring p=<prime> vars=<n>'");
      r.p = static_cast<uint32_t>(std::stoul(ps.substr(2)));
      r.n = std::stoi(vs.substr(5));
      if (!is_prime_u32(r.p)) throw parse_error(lineno, "p is not prime");
      if (r.n < 1 || r.n > kMaxVars) throw parse_error(lineno, "vars out of range");
      have_header = true;
      continue;
    }
    gens.push_back(parse_poly(line, r, lineno));
  }
  if (!have_header) throw parse_error(0, "missing ring header");
  return Ideal(r, std::move(gens));
}

Ideal parse_ideal_string(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

void write_ideal_file(const Ideal& I, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_ideal(I);
}

Ideal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return parse_ideal(in);
}

}  // namespace threefold
