// Parser and constructors for the group-spec mini-language. Element
// enumeration orders here are part of the complex file format and must not
// change.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "bredonite/error.hpp"
#include "bredonite/group.hpp"

namespace bredonite {

namespace {

using Perm = std::vector<int>;  // 0-based images

Perm compose_perm(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

std::string cycle_notation(const Perm& p) {
  std::vector<char> done(p.size(), 0);
  std::ostringstream os;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) os << ',';
      os << x + 1;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "e" : s;
}

FiniteGroup group_from_perms(const std::vector<Perm>& elems, std::string spec) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
  const int n = static_cast<int>(elems.size());
  std::vector<Element> table;
  table.reserve(elems.size() * elems.size());
  std::vector<std::string> names;
  for (const auto& p : elems) {
    names.push_back(cycle_notation(p));
    for (const auto& q : elems) table.push_back(index.at(compose_perm(p, q)));
  }
  return FiniteGroup::from_table_unchecked(n, std::move(table), std::move(names), std::move(spec));
}

int parse_size(std::string_view digits, std::string_view spec) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed group spec '" + std::string(spec) + "'");
  return std::stoi(std::string(digits));
}

FiniteGroup cyclic(int n, std::string spec) {
  if (n < 1 || n > kMaxGroupOrder) throw ParseError("cyclic group order out of supported range: " + spec);
  std::vector<Element> table;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) table.push_back((i + j) % n);
  }
  return FiniteGroup::from_table_unchecked(n, std::move(table), std::move(names), std::move(spec));
}

FiniteGroup dihedral(int n, std::string spec) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw ParseError("dihedral group out of supported range: " + spec);
  // index i < n is r^i, index n + i is r^i s; s r = r^{-1} s.
  auto decode = [n](int x) { return std::pair<int, int>{x % n, x / n}; };
  std::vector<Element> table;
  std::vector<std::string> names;
  for (int x = 0; x < 2 * n; ++x) {
    auto [a, e1] = decode(x);
    std::string r = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    names.push_back(e1 == 0 ? (a == 0 ? "e" : r) : r + "s");
    for (int y = 0; y < 2 * n; ++y) {
      auto [b, e2] = decode(y);
      int rot = ((e1 == 0 ? a + b : a - b) % n + n) % n;
      table.push_back(((e1 + e2) % 2) * n + rot);
    }
  }
  return FiniteGroup::from_table_unchecked(2 * n, std::move(table), std::move(names), std::move(spec));
}

FiniteGroup symmetric(int n, std::string spec) {
  if (n < 1 || n > 5) throw ParseError("symmetric group supported only for n <= 5: " + spec);
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> elems;
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(elems, std::move(spec));
}

FiniteGroup quaternion() {
  // unit u ∈ {1, i, j, k}; element index 2u + (negative ? 1 : 0).
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  std::vector<Element> table;
  std::vector<std::string> names;
  for (int x = 0; x < 8; ++x) {
    const int u = x / 2;
    const int su = x % 2 ? -1 : 1;
    names.push_back(std::string(su < 0 ? "-" : "") + unit_name[u]);
    for (int y = 0; y < 8; ++y) {
      const int v = y / 2;
      const int sv = y % 2 ? -1 : 1;
      const int sign = su * sv * unit_sign[u][v];
      table.push_back(2 * unit_product[u][v] + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::from_table_unchecked(8, std::move(table), std::move(names), "Q8");
}

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b, std::string spec) {
  const int na = a.order();
  const int nb = b.order();
  if (na * nb > kMaxGroupOrder) throw ParseError("product group too large: " + spec);
  std::vector<Element> table;
  std::vector<std::string> names;
  for (int x = 0; x < na * nb; ++x) {
    names.push_back("(" + a.element_name(x / nb) + "," + b.element_name(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y) table.push_back(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  }
  return FiniteGroup::from_table_unchecked(na * nb, std::move(table), std::move(names), std::move(spec));
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

Perm parse_generator(std::string_view text, int points, std::string_view spec) {
  Perm p(static_cast<std::size_t>(points));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("malformed permutation in '" + std::string(spec) + "'");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis in '" + std::string(spec) + "'");
    std::vector<int> pts;
    std::string_view body = text.substr(i + 1, close - i - 1);
    if (!body.empty())
      for (auto tok : split_top_level(body, ',')) pts.push_back(parse_size(tok, spec) - 1);
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated point in cycle in '" + std::string(spec) + "'");
    Perm c(static_cast<std::size_t>(points));
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < pts.size(); ++k)
      c[static_cast<std::size_t>(pts[k])] = pts[(k + 1) % pts.size()];
    cycles.push_back(std::move(c));
    i = close + 1;
  }
  for (const auto& c : cycles) p = compose_perm(p, c);
  return p;
}

FiniteGroup permutation_group(std::string_view body, std::string spec) {
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("perm spec must look like perm:[(1,2),(1,2,3)]: " + spec);
  body = body.substr(1, body.size() - 2);
  std::vector<std::string_view> gen_texts;
  if (!body.empty()) gen_texts = split_top_level(body, ',');

  int points = 1;
  for (char c : body)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ','))
      throw ParseError("unexpected character in perm spec: " + spec);
  {
    std::string digits;
    for (char c : std::string(body) + ",") {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
      } else if (!digits.empty()) {
        int v = parse_size(digits, spec);
        if (v < 1 || v > 16) throw ParseError("permutation points must be in 1..16: " + spec);
        points = std::max(points, v);
        digits.clear();
      }
    }
  }

  std::vector<Perm> gens;
  for (auto t : gen_texts) {
    if (t.empty()) throw ParseError("empty generator in perm spec: " + spec);
    gens.push_back(parse_generator(t, points, spec));
  }
  Perm id(static_cast<std::size_t>(points));
  std::iota(id.begin(), id.end(), 0);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), id), gens.end());

  std::vector<Perm> elems{id};
  std::map<Perm, int> seen{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm y = compose_perm(elems[i], g);
      if (seen.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (static_cast<int>(elems.size()) > kMaxGroupOrder)
          throw ParseError("permutation group exceeds the supported order: " + spec);
      }
    }
  return group_from_perms(elems, std::move(spec));
}

FiniteGroup atom(std::string_view s) {
  const std::string spec(s);
  if (s == "Q8") return quaternion();
  if (s.starts_with("perm:")) return permutation_group(s.substr(5), spec);
  if (s.size() >= 2) {
    const int n = parse_size(s.substr(1), s);
    switch (s[0]) {
      case 'C':
        return cyclic(n, spec);
      case 'D':
        return dihedral(n, spec);
      case 'S':
        return symmetric(n, spec);
      default:
        break;
    }
  }
  throw ParseError("malformed group spec '" + spec + "'");
}

}  // namespace

FiniteGroup construct_group(std::string_view spec) {
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError("empty group spec");
  auto parts = split_top_level(compact, 'x');
  for (auto p : parts)
    if (p.empty()) throw ParseError("malformed product in group spec '" + compact + "'");
  FiniteGroup g = atom(parts[0]);
  std::string label(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    label += "x" + std::string(parts[i]);
    g = product(g, atom(parts[i]), label);
  }
  return g;
}

}  // namespace bredonite
