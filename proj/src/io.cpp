#include "cremona/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace cremona {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

long parse_header_long(const std::string& line, const std::string& key) {
  std::string t = trim(line);
  if (t.rfind(key + ":", 0) != 0)
    throw ParseError("expected '" + key + ":' in '" + line + "'");
  return std::stol(trim(t.substr(key.size() + 1)));
}

// [[e,e,e],[e,e,e],[e,e,e]] with cyclo expressions free of brackets/commas
Mat parse_matrix(const std::string& text, int dim, long conductor) {
  std::string t = trim(text);
  if (t.size() < 4 || t.front() != '[' || t.back() != ']')
    throw ParseError("matrix must be bracketed: " + text);
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<std::string> rows;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '[') {
      ++depth;
      if (depth == 1) {
        cur.clear();
        continue;
      }
    }
    if (c == ']') {
      --depth;
      if (depth == 0) {
        rows.push_back(cur);
        continue;
      }
    }
    if (depth >= 1) cur += c;
  }
  if (static_cast<int>(rows.size()) != dim)
    throw ParseError("expected " + std::to_string(dim) + " rows in " + text);
  Mat m(dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<std::string> entries;
    std::string e;
    for (char c : rows[i]) {
      if (c == ',') {
        entries.push_back(e);
        e.clear();
      } else {
        e += c;
      }
    }
    entries.push_back(e);
    if (static_cast<int>(entries.size()) != dim)
      throw ParseError("expected " + std::to_string(dim) + " entries per row");
    for (int j = 0; j < dim; ++j) m.at(i, j) = parse_cyclo(entries[j], conductor);
  }
  return m;
}

std::string read_whole_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroupAction parse_action_text(const std::string& text, long order_bound) {
  std::istringstream in(text);
  std::string line;
  long conductor = -1;
  int dim = -1;
  std::vector<std::string> names;
  std::vector<Transform> gens;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("conductor:", 0) == 0) {
      conductor = parse_header_long(t, "conductor");
    } else if (t.rfind("dim:", 0) == 0) {
      dim = static_cast<int>(parse_header_long(t, "dim"));
    } else if (t.rfind("gen ", 0) == 0) {
      if (conductor < 1 || dim < 2)
        throw ParseError("gen line before conductor/dim headers");
      std::size_t colon = t.find(':');
      if (colon == std::string::npos) throw ParseError("gen line needs ':'");
      names.push_back(trim(t.substr(4, colon - 4)));
      gens.emplace_back(parse_matrix(t.substr(colon + 1), dim, conductor));
    } else {
      throw ParseError("unrecognized line: " + t);
    }
  }
  if (conductor < 1) throw ParseError("missing conductor header");
  if (gens.empty()) throw ParseError("no generators");
  GroupAction a = make_action(std::move(names), std::move(gens), order_bound);
  a.conductor = std::lcm(conductor, a.group.conductor);
  return a;
}

GroupAction read_action_file(const std::string& path, long order_bound) {
  return parse_action_text(read_whole_file(path), order_bound);
}

std::string action_to_text(const GroupAction& a) {
  long n = a.conductor;
  for (const auto& g : a.gens) n = std::lcm(n, g.raw().entry_conductor_lcm());
  std::ostringstream os;
  os << "conductor: " << n << "\n";
  os << "dim: " << (a.gens.empty() ? 3 : a.gens[0].n()) << "\n";
  for (std::size_t k = 0; k < a.gens.size(); ++k) {
    const Mat& m = a.gens[k].raw();
    os << "gen " << a.gen_names[k] << ": [";
    for (int i = 0; i < m.n(); ++i) {
      os << "[";
      for (int j = 0; j < m.n(); ++j)
        os << m.at(i, j).embedded(n).str() << (j + 1 < m.n() ? "," : "");
      os << "]" << (i + 1 < m.n() ? "," : "");
    }
    os << "]\n";
  }
  return os.str();
}

void write_action_file(const std::string& path, const GroupAction& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << action_to_text(a);
}

std::string hompoly_to_text(const HomPoly& p, long conductor) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out += " + ";
    first = false;
    Cyclo ce = c.embedded(conductor);
    int nonzero = 0;
    for (const auto& cf : ce.coeffs())
      if (!(cf == 0)) ++nonzero;
    out += (nonzero <= 1) ? ce.str() : "(" + ce.str() + ")";
    if (e[0] + e[1] + e[2] > 0) out += " *";
    const char* names[3] = {" x1", " x2", " x3"};
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      out += names[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

HomPoly parse_hompoly(const std::string& text, long conductor) {
  HomPoly out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= n) break;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial");
    }
    first = false;
    skip();
    Cyclo coeff(1);
    if (i < n && text[i] == '(') {
      int depth = 1;
      std::size_t j = i + 1;
      while (j < n && depth > 0) {
        if (text[j] == '(') ++depth;
        if (text[j] == ')') --depth;
        ++j;
      }
      if (depth != 0) throw ParseError("unbalanced parentheses");
      coeff = parse_cyclo(text.substr(i + 1, j - i - 2), conductor);
      i = j;
      skip();
      if (i < n && text[i] == '*') ++i;
    } else if (i < n && text[i] != 'x') {
      std::size_t j = i;
      while (j < n && text[j] != '*' && text[j] != 'x' && text[j] != '+' &&
             text[j] != '-')
        ++j;
      // a trailing '-' inside z^-1 style exponents: keep scanning past '^-'
      while (j < n && text[j] == '-' && j > 0 && text[j - 1] == '^') {
        ++j;
        while (j < n && text[j] != '*' && text[j] != 'x' && text[j] != '+' &&
               text[j] != '-')
          ++j;
      }
      coeff = parse_cyclo(text.substr(i, j - i), conductor);
      i = j;
      skip();
      if (i < n && text[i] == '*') ++i;
    }
    int ex[3] = {0, 0, 0};
    while (true) {
      skip();
      if (i + 1 < n && text[i] == 'x' &&
          (text[i + 1] == '1' || text[i + 1] == '2' || text[i + 1] == '3')) {
        int var = text[i + 1] - '1';
        i += 2;
        int e = 1;
        if (i < n && text[i] == '^') {
          ++i;
          std::string num;
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            num += text[i++];
          if (num.empty()) throw ParseError("exponent expected after '^'");
          e = std::stoi(num);
        }
        ex[var] += e;
      } else {
        break;
      }
    }
    HomPoly term = HomPoly::monomial(neg ? -coeff : coeff, ex[0], ex[1], ex[2]);
    out += term;
  }
  return out;
}

RationalMap parse_map_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long conductor = -1, deg = -1;
  std::array<HomPoly, 3> comps;
  std::array<bool, 3> have = {false, false, false};
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("conductor:", 0) == 0) {
      conductor = parse_header_long(t, "conductor");
    } else if (t.rfind("deg:", 0) == 0) {
      deg = parse_header_long(t, "deg");
    } else if (t.rfind("comp_", 0) == 0) {
      std::size_t colon = t.find(':');
      int idx = t[5] - '1';
      if (idx < 0 || idx > 2 || colon == std::string::npos)
        throw ParseError("bad comp line: " + t);
      if (conductor < 1) throw ParseError("comp before conductor header");
      comps[idx] = parse_hompoly(t.substr(colon + 1), conductor);
      have[idx] = true;
    } else {
      throw ParseError("unrecognized line: " + t);
    }
  }
  if (!have[0] || !have[1] || !have[2]) throw ParseError("missing components");
  for (const auto& c : comps)
    if (!c.is_zero() && c.degree() != deg)
      throw ParseError("component degree disagrees with header");
  return RationalMap(comps[0], comps[1], comps[2]);
}

RationalMap read_map_file(const std::string& path) {
  return parse_map_text(read_whole_file(path));
}

std::string map_to_text(const RationalMap& f) {
  long n = 1;
  for (int i = 0; i < 3; ++i)
    for (const auto& [e, c] : f.comp(i).terms()) n = std::lcm(n, c.conductor());
  std::ostringstream os;
  os << "conductor: " << n << "\n";
  os << "deg: " << f.degree() << "\n";
  for (int i = 0; i < 3; ++i)
    os << "comp_" << (i + 1) << ": " << hompoly_to_text(f.comp(i), n) << "\n";
  return os.str();
}

void write_map_file(const std::string& path, const RationalMap& f) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << map_to_text(f);
}

}  // namespace cremona
