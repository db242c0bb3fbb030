#include "bredonite/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bredonite/burnside.hpp"
#include "bredonite/coeff.hpp"
#include "bredonite/complex_io.hpp"
#include "bredonite/engine.hpp"
#include "bredonite/error.hpp"
#include "bredonite/verify/suites.hpp"

namespace bredonite::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Element> parse_elements(const std::string& text, const FiniteGroup& g) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("expected a comma-separated list of element indices, got '" + text + "'");
    const Element x = std::stoi(tok);
    if (!g.contains(x)) throw ParseError("element " + tok + " is out of range for " + g.spec());
    out.push_back(x);
  }
  return out;
}

std::string group_text(const HomologyGroup& h) { return h.to_string(); }

ordered_json group_json(int degree, const HomologyGroup& h) {
  ordered_json j;
  j["degree"] = degree;
  j["rank"] = h.free_rank;
  j["torsion"] = ordered_json::array();
  for (const auto& t : h.torsion) j["torsion"].push_back(t.convert_to<long long>());
  return j;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).convert_to<long long>());
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const IntMatrix& m, const std::vector<std::string>& row_labels,
                  const std::vector<std::string>& col_labels) {
  std::size_t lw = 0;
  for (const auto& l : row_labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c < col_labels.size()) cw[c] = std::max(cw[c], col_labels[c].size());
    for (std::size_t r = 0; r < m.rows(); ++r) cw[c] = std::max(cw[c], m(r, c).str().size());
  }
  if (!col_labels.empty()) {
    out << std::string(lw, ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) out << "  " << std::setw(static_cast<int>(cw[c])) << col_labels[c];
    out << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::left << std::setw(static_cast<int>(lw)) << (r < row_labels.size() ? row_labels[r] : "") << std::right;
    for (std::size_t c = 0; c < m.cols(); ++c) out << "  " << std::setw(static_cast<int>(cw[c])) << m(r, c).str();
    out << '\n';
  }
}

// ---------------------------------------------------------------------------

void group_info(const std::string& spec, bool json, std::ostream& out) {
  const FiniteGroup g = construct_group(spec);
  const SubgroupClassTable classes = subgroup_classes(g);
  const auto& subs = classes.subgroups();

  if (json) {
    ordered_json j;
    j["group"] = g.spec();
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    j["elements"] = g.element_names();
    j["subgroups"] = ordered_json::array();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      ordered_json s;
      s["elements"] = subs[i].elems;
      s["order"] = subs[i].order();
      s["name"] = describe_subgroup(g, subs[i]);
      s["class"] = classes.class_of_index(i);
      s["normalizer"] = normalizer(g, subs[i]).elems;
      j["subgroups"].push_back(s);
    }
    j["classes"] = ordered_json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      ordered_json c;
      c["rep"] = classes.rep(k).elems;
      c["name"] = describe_subgroup(g, classes.rep(k));
      c["size"] = classes.class_size(k);
      j["classes"].push_back(c);
    }
    out << j.dump(2) << '\n';
    return;
  }

  out << "group " << g.spec() << ", order " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian") << '\n';
  out << "elements:";
  for (Element x = 0; x < g.order(); ++x) out << ' ' << x << '=' << g.element_name(x);
  out << '\n';
  out << subs.size() << " subgroups, " << classes.size() << " classes\n\n";
  out << "  #  order  class  name    elements              normalizer\n";
  for (std::size_t i = 0; i < subs.size(); ++i) {
    out << std::setw(3) << i << "  " << std::setw(5) << subs[i].order() << "  " << std::setw(5)
        << classes.class_of_index(i) << "  " << std::left << std::setw(6) << describe_subgroup(g, subs[i]) << "  "
        << std::setw(20) << format_elements(subs[i]) << "  " << format_elements(normalizer(g, subs[i]))
        << std::right << '\n';
  }
}

void burnside_table(const std::string& spec, bool json, std::ostream& out) {
  const FiniteGroup g = construct_group(spec);
  const BurnsideRing ring(g);
  const IntMatrix& marks = ring.table().marks;
  if (json) {
    ordered_json j;
    j["basis"] = ring.basis_labels();
    j["marks"] = matrix_json(marks);
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::string> cols;
  for (std::size_t k = 0; k < ring.rank(); ++k) cols.push_back(describe_subgroup(g, ring.classes().rep(k)));
  out << "table of marks of " << g.spec() << " (entry [H/K] x L = |(H/K)^L|)\n";
  print_matrix(out, marks, ring.basis_labels(), cols);
}

void coeff(const std::string& theory_name, const std::string& spec, const std::string& subgroup, int degree,
           const std::string& to, bool json, std::ostream& out) {
  const Theory theory = parse_theory(theory_name);
  const FiniteGroup g = construct_group(spec);
  const Subgroup h = subgroup.empty() ? whole_group(g) : make_subgroup(g, parse_elements(subgroup, g));
  const CoefficientSystem system(theory, g);
  const CoeffGroup value = system.value(degree, h);

  std::optional<OrbitMorphism> f;
  std::optional<IntMatrix> matrix;
  CoeffGroup target;
  if (!to.empty()) {
    const auto semi = to.find(';');
    if (semi == std::string::npos) throw ParseError("--to expects 'i,j,...;a'");
    const Subgroup k = make_subgroup(g, parse_elements(to.substr(0, semi), g));
    const auto a = parse_elements(to.substr(semi + 1), g);
    if (a.size() != 1) throw ParseError("--to expects a single element after ';'");
    f = make_orbit_morphism(g, h, k, a.front());
    matrix = system.map(degree, *f);
    target = system.value(degree, k);
  }

  if (json) {
    ordered_json j;
    j["theory"] = std::string(to_string(theory));
    j["group"] = g.spec();
    j["subgroup"] = h.elems;
    j["degree"] = degree;
    j["ring"] = std::string(to_string(value.ring));
    j["rank"] = value.rank;
    j["basis"] = value.basis_labels;
    if (matrix) {
      ordered_json m;
      m["target"] = f->target.elems;
      m["a"] = f->a;
      m["target_basis"] = target.basis_labels;
      m["matrix"] = matrix_json(*matrix);
      j["map"] = m;
    }
    out << j.dump(2) << '\n';
    return;
  }

  auto basis_text = [](const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? "," : "") + labels[k];
    return s;
  };
  switch (theory) {
    case Theory::All:
      out << "M = 0\n";
      break;
    case Theory::Euler:
      out << "dim = 1 (Z/2 in degree " << degree << ")\n";
      break;
    case Theory::OrientedSingular:
      out << "rank A = " << value.rank;
      if (value.rank) out << ", basis " << basis_text(value.basis_labels);
      out << '\n';
      break;
    case Theory::UnorientedSingular:
      out << "dim V = " << value.rank;
      if (value.rank) out << ", basis " << basis_text(value.basis_labels);
      out << '\n';
      break;
  }
  if (matrix) {
    out << "map G/" << describe_subgroup(g, h) << " -> G/" << describe_subgroup(g, f->target) << ", a = " << f->a
        << " (" << g.element_name(f->a) << "):\n";
    if (matrix->rows() == 0 || matrix->cols() == 0)
      out << "  zero map\n";
    else
      print_matrix(out, *matrix, target.basis_labels, value.basis_labels);
  }
}

void homology(const std::string& theory_name, const std::string& input, bool json, bool emit, int euler_degrees,
              unsigned threads, std::ostream& out) {
  const Theory theory = parse_theory(theory_name);
  const GCWComplex x = input.starts_with("builder:") ? build_example(input.substr(8)) : load_complex(input);
  if (emit) {
    require_valid(x);
    out << dump_complex(x);
    return;
  }
  EngineOptions options;
  options.euler_degrees = euler_degrees;
  options.threads = threads;
  const TheoryResult r = equivariant_homology(x, theory, options);

  if (json) {
    ordered_json j;
    j["theory"] = std::string(to_string(theory));
    j["groups"] = ordered_json::array();
    for (std::size_t n = 0; n < r.groups.size(); ++n) j["groups"].push_back(group_json(static_cast<int>(n), r.groups[n]));
    if (r.e2_page) {
      j["e2_page"] = true;
      j["exact"] = r.exact;
      j["e2"] = ordered_json::array();
      for (std::size_t q = 0; q < r.e2.size(); ++q) {
        ordered_json row = ordered_json::array();
        for (std::size_t p = 0; p < r.e2[q].size(); ++p) {
          ordered_json e = group_json(static_cast<int>(p), r.e2[q][p]);
          e["q"] = q;
          row.push_back(e);
        }
        j["e2"].push_back(row);
      }
    }
    out << j.dump(2) << '\n';
    return;
  }

  out << to_string(theory) << " homology, group " << x.group().spec() << ", " << x.cells().size()
      << " cell orbits\n";
  if (r.e2_page) {
    out << "E2 page, H_p(X; Eh_q):\n";
    for (std::size_t q = 0; q < r.e2.size(); ++q) {
      out << "  q=" << q << ':';
      for (std::size_t p = 0; p < r.e2[q].size(); ++p) out << "  p=" << p << ' ' << group_text(r.e2[q][p]);
      out << '\n';
    }
    out << (r.exact ? "total degrees (exact: the E2 page has one column):\n"
                    : "total degrees of the E2 page (the final groups are subquotients of these):\n");
  }
  for (std::size_t n = 0; n < r.groups.size(); ++n) out << 'H' << n << " = " << group_text(r.groups[n]) << '\n';
}

int verify(const std::string& suite, std::uint64_t seed, unsigned threads, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify::suite_names();
  else
    names = {suite};
  verify::SuiteOptions options;
  options.seed = seed;
  options.threads = threads;
  options.cli = [](const std::vector<std::string>& args, std::ostream& o, std::ostream& e) { return run(args, o, e); };
  bool ok = true;
  for (const auto& name : names) {
    const verify::SuiteResult r = verify::run_suite(name, options);
    out << r.summary() << '\n';
    ok = ok && r.passed();
  }
  out << "seed " << seed << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant homology of finite G-CW complexes", "bredonite"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for independent degrees")->check(CLI::Range(1u, 64u));

  bool json = false;
  std::string spec;

  auto* group = app.add_subcommand("group", "finite group information");
  group->require_subcommand(1);
  auto* group_info_cmd = group->add_subcommand("info", "subgroups, classes and normalizers");
  group_info_cmd->add_option("spec", spec, "group spec, e.g. S3, D4, C2xC2")->required();
  group_info_cmd->add_flag("--json", json, "machine-readable output");

  auto* burnside = app.add_subcommand("burnside", "Burnside ring");
  burnside->require_subcommand(1);
  auto* table_cmd = burnside->add_subcommand("table", "table of marks");
  table_cmd->add_option("spec", spec)->required();
  table_cmd->add_flag("--json", json, "machine-readable output");

  std::string theory, subgroup, to;
  int degree = 0;
  auto* coeff_cmd = app.add_subcommand("coeff", "coefficient system values and maps");
  coeff_cmd->add_option("theory", theory, "all|euler|oriented|unoriented")->required();
  coeff_cmd->add_option("spec", spec)->required();
  coeff_cmd->add_option("--subgroup", subgroup, "element indices of H (default: whole group)");
  coeff_cmd->add_option("--degree", degree, "coefficient degree q")->check(CLI::NonNegativeNumber);
  coeff_cmd->add_option("--to", to, "target 'i,j,...;a' for the map G/H -> G/K, gH -> gaK");
  coeff_cmd->add_flag("--json", json, "machine-readable output");

  std::string input;
  bool emit = false;
  int euler_degrees = -1;
  auto* homology_cmd = app.add_subcommand("homology", "equivariant homology of a complex");
  homology_cmd->add_option("theory", theory, "all|euler|oriented|unoriented")->required();
  homology_cmd->add_option("input", input, "complex JSON file or builder:<spec>")->required();
  homology_cmd->add_flag("--json", json, "machine-readable output");
  homology_cmd->add_flag("--emit-complex", emit, "print the canonical complex JSON instead");
  homology_cmd->add_option("--euler-degrees", euler_degrees, "highest Euler coefficient degree (default dim X)")
      ->check(CLI::NonNegativeNumber);

  std::string suite;
  std::uint64_t seed = verify::default_seed();
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("suite", suite, "suite name or all")->required();
  verify_cmd->add_option("--seed", seed, "random seed (default: BREDONITE_SEED or fixed)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (group_info_cmd->parsed()) {
      group_info(spec, json, out);
    } else if (table_cmd->parsed()) {
      burnside_table(spec, json, out);
    } else if (coeff_cmd->parsed()) {
      coeff(theory, spec, subgroup, degree, to, json, out);
    } else if (homology_cmd->parsed()) {
      homology(theory, input, json, emit, euler_degrees, threads, out);
    } else if (verify_cmd->parsed()) {
      if (suite != "all") {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
          std::string list;
          for (const auto& n : names) list += " " + n;
          throw UsageError("unknown suite '" + suite + "' (available: all" + list + ")");
        }
      }
      return verify(suite, seed, threads, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bredonite::cli
