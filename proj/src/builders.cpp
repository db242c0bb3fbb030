#include <algorithm>
#include <cctype>

#include "bredonite/complex.hpp"
#include "bredonite/error.hpp"

namespace bredonite {

GCWComplex build_orbit(const FiniteGroup& g, const Subgroup& h) {
  return GCWComplex(g, {{"v0", 0, make_subgroup(g, h.elems)}}, {});
}

// Cells n_k ("north") and s_k ("south") in each dimension k = 0..n, all with
// stabilizer G. d(n_k) = d(s_k) = n_{k-1} - s_{k-1}.
GCWComplex build_trivial_sphere(const FiniteGroup& g, int n) {
  if (n < 0) throw ParseError("trivial_sphere: dimension must be non-negative");
  const Subgroup all = whole_group(g);
  std::vector<Cell> cells;
  std::vector<BoundaryRecord> records;
  for (int k = 0; k <= n; ++k) {
    const std::string nk = "n" + std::to_string(k);
    const std::string sk = "s" + std::to_string(k);
    cells.push_back({nk, k, all});
    cells.push_back({sk, k, all});
    if (k == 0) continue;
    const std::string nb = "n" + std::to_string(k - 1);
    const std::string sb = "s" + std::to_string(k - 1);
    for (const auto& c : {nk, sk}) {
      records.push_back({c, nb, 0, 1});
      records.push_back({c, sb, 0, -1});
    }
  }
  return GCWComplex(g, std::move(cells), std::move(records));
}

// C_n rotating a circle: one free vertex orbit v and one free edge orbit e,
// the edge running from v to g·v, so d(e) = g·v - v.
GCWComplex build_free_circle(int n) {
  if (n < 1) throw ParseError("free_circle: n must be positive");
  FiniteGroup g = construct_group("C" + std::to_string(n));
  return GCWComplex(g, {{"v", 0, trivial_subgroup()}, {"e", 1, trivial_subgroup()}},
                    {{"e", "v", 0, -1}, {"e", "v", 1 % n, 1}});
}

// C2 reflecting a circle: fixed points p and q, one free edge orbit e running
// from p to q (its translate runs along the other half).
GCWComplex build_reflection_circle() {
  FiniteGroup g = construct_group("C2");
  const Subgroup all = whole_group(g);
  return GCWComplex(g, {{"p", 0, all}, {"q", 0, all}, {"e", 1, trivial_subgroup()}},
                    {{"e", "p", 0, -1}, {"e", "q", 0, 1}});
}

// The reflection circle with each half-arc split at a free midpoint orbit m:
// e1 runs from p to m, e2 from m to q.
GCWComplex build_subdivided_reflection_circle() {
  FiniteGroup g = construct_group("C2");
  const Subgroup all = whole_group(g);
  const Subgroup free = trivial_subgroup();
  return GCWComplex(g,
                    {{"p", 0, all}, {"q", 0, all}, {"m", 0, free}, {"e1", 1, free}, {"e2", 1, free}},
                    {{"e1", "p", 0, -1}, {"e1", "m", 0, 1}, {"e2", "m", 0, -1}, {"e2", "q", 0, 1}});
}

namespace {

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 6)
    throw ParseError("expected a non-negative integer in builder '" + std::string(context) + "'");
  return std::stoi(s);
}

Subgroup parse_subgroup_arg(const FiniteGroup& g, const std::string& arg, std::string_view context) {
  if (arg == "G") return whole_group(g);
  if (arg == "e") return trivial_subgroup();
  if (arg.size() >= 2 && arg.front() == '{' && arg.back() == '}') {
    std::vector<Element> elems;
    for (const auto& tok : split_args(arg.substr(1, arg.size() - 2))) elems.push_back(parse_int(tok, context));
    for (Element x : elems)
      if (!g.contains(x)) throw ParseError("subgroup element out of range in '" + std::string(context) + "'");
    try {
      return make_subgroup(g, std::move(elems));
    } catch (const ValidationError& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(context) + "'");
    }
  }
  // A structural name: the first class representative carrying it.
  const SubgroupClassTable classes = subgroup_classes(g);
  for (const auto& rep : classes.reps())
    if (describe_subgroup(g, rep) == arg) return rep;
  throw ParseError("no subgroup named '" + arg + "' in builder '" + std::string(context) + "'");
}

}  // namespace

GCWComplex build_example(std::string_view raw) {
  const std::string spec = trim(raw);
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') throw ParseError("malformed builder spec '" + spec + "'");
  const std::string name = spec.substr(0, open);
  const auto args = split_args(std::string_view(spec).substr(open + 1, spec.size() - open - 2));

  if (name == "orbit") {
    if (args.empty() || args.size() > 2) throw ParseError("orbit takes (group[,subgroup])");
    FiniteGroup g = construct_group(args[0]);
    return build_orbit(g, args.size() == 2 ? parse_subgroup_arg(g, args[1], spec) : whole_group(g));
  }
  if (name == "trivial_sphere") {
    if (args.size() != 2) throw ParseError("trivial_sphere takes (group,n)");
    return build_trivial_sphere(construct_group(args[0]), parse_int(args[1], spec));
  }
  if (name == "free_circle") {
    if (args.size() != 1) throw ParseError("free_circle takes (C<n>)");
    const std::string& a = args[0];
    return build_free_circle(parse_int(a.starts_with("C") ? a.substr(1) : a, spec));
  }
  if (name == "reflection_circle" || name == "subdivided_reflection_circle") {
    if (args.size() > 1 || (args.size() == 1 && args[0] != "C2"))
      throw ParseError(name + " is defined for C2 only");
    return name == "reflection_circle" ? build_reflection_circle() : build_subdivided_reflection_circle();
  }
  if (name == "disjoint_union") {
    if (args.empty()) throw ParseError("disjoint_union needs at least one operand");
    std::vector<GCWComplex> parts;
    for (const auto& a : args) parts.push_back(build_example(a));
    return disjoint_union(parts);
  }
  throw ParseError("unknown builder '" + name + "'");
}

}  // namespace bredonite
