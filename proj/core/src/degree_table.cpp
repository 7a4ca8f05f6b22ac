#include "braidwalk/degree_table.hpp"

#include "degree_table_data.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace braidwalk {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidSpec("expected an integer in '" + std::string(context) + "'");
  return value;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterType

CoxeterType CoxeterType::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s.size() < 2) throw InvalidSpec("malformed Coxeter type '" + s + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (family == 'I') {
    // I2(m)
    if (s.size() < 5 || s[1] != '2' || s[2] != '(' || s.back() != ')')
      throw InvalidSpec("malformed dihedral type '" + s + "', expected I2(m)");
    const int m = parse_int(std::string_view(s).substr(3, s.size() - 4), s);
    if (m < 3) throw InvalidSpec("I2(m) needs m >= 3");
    return {'I', m};
  }
  if (std::string_view("ABCDEFGH").find(family) == std::string_view::npos)
    throw InvalidSpec("unknown Coxeter family in '" + s + "'");
  const int rank = parse_int(std::string_view(s).substr(1), s);
  CoxeterType t{family == 'C' ? 'B' : family, rank};
  // Range checks happen in the degree table; fail fast on obviously bad input.
  if (rank < 1) throw InvalidSpec("rank must be positive in '" + s + "'");
  return t;
}

std::string CoxeterType::name() const {
  if (family == 'I') return "I2(" + std::to_string(rank) + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::optional<GroupSpec> CoxeterType::group_spec() const {
  switch (family) {
    case 'A':
      return GroupSpec::coxeter_a(rank);
    case 'B':
      return GroupSpec::coxeter_b(rank);
    case 'D':
      return GroupSpec::coxeter_d(rank);
    case 'I':
      return GroupSpec::coxeter_i2(rank);
    case 'G':
      return GroupSpec::coxeter_i2(6);
    default:
      return std::nullopt;
  }
}

std::vector<CoxeterType> parse_coxeter_product(std::string_view text) {
  std::vector<CoxeterType> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == 'x' || c == '*')) {
      out.push_back(CoxeterType::parse(current));
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(CoxeterType::parse(current));
  return out;
}

// ---------------------------------------------------------------------------
// DegreeTable

DegreeTable DegreeTable::parse(std::string_view text) {
  DegreeTable table;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields(line);
    std::string key;
    std::string range;
    std::string degrees;
    if (!(fields >> key >> range)) throw InvalidSpec("degree table: malformed row '" + line + "'");
    std::getline(fields, degrees);
    degrees = trim(degrees);
    if (degrees.empty()) throw InvalidSpec("degree table: row '" + key + "' has no degrees");

    Row row;
    row.key = key;
    if (range != "-") {
      if (range.size() < 4 || range.substr(1, 2) != ">=")
        throw InvalidSpec("degree table: malformed range '" + range + "'");
      row.variable = range[0];
      row.minimum = parse_int(std::string_view(range).substr(3), range);
    }

    auto parse_term = [&](const std::string& token) {
      Term term;
      std::string s;
      for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
      const auto var = row.variable ? s.find(row.variable) : std::string::npos;
      if (var == std::string::npos) {
        term.constant = parse_int(s, token);
        return term;
      }
      term.coefficient = var == 0 ? 1 : parse_int(std::string_view(s).substr(0, var), token);
      const std::string rest = s.substr(var + 1);
      if (!rest.empty()) {
        if (rest[0] != '+' && rest[0] != '-') throw InvalidSpec("degree table: malformed term '" + token + "'");
        const int c = parse_int(std::string_view(rest).substr(1), token);
        term.constant = rest[0] == '+' ? c : -c;
      }
      return term;
    };

    for (const std::string& group_text : split(degrees, ';')) {
      Group group;
      const auto tokens = split(group_text, ',');
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "...") {
          if (group.run || i < 2 || i + 2 != tokens.size())
            throw InvalidSpec("degree table: '...' must follow two terms and precede the last one");
          group.run = true;
          continue;
        }
        group.terms.push_back(parse_term(tokens[i]));
      }
      row.groups.push_back(std::move(group));
    }
    table.rows_.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> DegreeTable::row_keys() const {
  std::vector<std::string> keys;
  for (const auto& r : rows_) keys.push_back(r.key);
  return keys;
}

std::vector<int> DegreeTable::degrees(const CoxeterType& type) const {
  const std::string exact = type.name();
  const std::string family_key = type.family == 'I' ? "I2" : std::string(1, type.family);
  const Row* row = nullptr;
  for (const auto& r : rows_) {
    if (!r.variable && r.key == exact) row = &r;
  }
  if (!row) {
    for (const auto& r : rows_) {
      if (r.variable && r.key == family_key) row = &r;
    }
  }
  if (!row) throw InvalidSpec("no degree table row for " + exact);
  if (row->variable && type.rank < row->minimum)
    throw InvalidSpec(exact + " is outside the range " + std::string(1, row->variable) + ">=" +
                      std::to_string(row->minimum));

  auto value = [&](const Term& t) { return t.coefficient * type.rank + t.constant; };
  std::vector<int> out;
  for (const Group& g : row->groups) {
    if (!g.run) {
      for (const Term& t : g.terms) out.push_back(static_cast<int>(value(t)));
      continue;
    }
    const long long first = value(g.terms[0]);
    const long long step = value(g.terms[1]) - first;
    const long long last = value(g.terms.back());
    if (step <= 0) throw InvalidSpec("degree table: non-increasing run in row " + row->key);
    for (std::size_t i = 1; i + 1 < g.terms.size(); ++i) {
      if (value(g.terms[i]) - value(g.terms[i - 1]) != step)
        throw InvalidSpec("degree table: run in row " + row->key + " is not arithmetic");
    }
    if ((last - first) % step != 0) throw InvalidSpec("degree table: run end off the progression in " + row->key);
    for (long long d = first; d <= last; d += step) out.push_back(static_cast<int>(d));
  }
  return out;
}

const DegreeTable& DegreeTable::builtin() {
  static const DegreeTable table = [] {
    DegreeTable t = DegreeTable::parse(detail::kDegreeTableText);
    std::vector<CoxeterType> probes = {{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}, {'H', 3}, {'H', 4}};
    for (int n = 1; n <= 12; ++n) probes.push_back({'A', n});
    for (int n = 2; n <= 12; ++n) probes.push_back({'B', n});
    for (int n = 4; n <= 12; ++n) probes.push_back({'D', n});
    for (int m = 3; m <= 24; ++m) probes.push_back({'I', m});
    for (const auto& type : probes) {
      BigInt product = 1;
      long long reflections = 0;
      for (int d : t.degrees(type)) {
        product *= d;
        reflections += d - 1;
      }
      if (product != known_order(type) || reflections != known_reflection_count(type))
        throw std::logic_error("shipped degree table disagrees with the known order of " + type.name());
    }
    return t;
  }();
  return table;
}

std::vector<int> degrees_of(const CoxeterType& type) { return DegreeTable::builtin().degrees(type); }

std::vector<int> degrees_of(std::span<const CoxeterType> product) {
  if (product.empty()) throw InvalidSpec("empty Coxeter product");
  std::vector<int> out;
  for (const auto& t : product) {
    const auto d = degrees_of(t);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

BigInt known_order(const CoxeterType& type) {
  const unsigned n = static_cast<unsigned>(type.rank);
  switch (type.family) {
    case 'A':
      return factorial(n + 1);
    case 'B':
      return factorial(n) << n;
    case 'D':
      return factorial(n) << (n - 1);
    case 'I':
      return 2 * BigInt(type.rank);
    case 'G':
      return 12;
    case 'F':
      return 1152;
    case 'H':
      return n == 3 ? BigInt(120) : BigInt(14400);
    case 'E':
      return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
  }
  throw InvalidSpec("unknown Coxeter type " + type.name());
}

long long known_reflection_count(const CoxeterType& type) {
  const long long n = type.rank;
  switch (type.family) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'I':
      return n;
    case 'G':
      return 6;
    case 'F':
      return 24;
    case 'H':
      return n == 3 ? 15 : 60;
    case 'E':
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  throw InvalidSpec("unknown Coxeter type " + type.name());
}

}  // namespace braidwalk
