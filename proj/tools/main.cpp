// singequiv: command-line front end.
#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace singequiv;
using report::Json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string json_path;
  std::string field;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> window;
};

struct Loaded {
  std::string path;
  std::string text;
  QuiverAlgebra qa;
  AlgebraPtr a() const { return qa.algebra(); }
};

Field parse_field(std::string s) {
  if (s == "Q" || s == "q") return Field::rationals();
  for (const char* prefix : {"F_", "F", "GF"})
    if (s.rfind(prefix, 0) == 0) {
      s = s.substr(std::string(prefix).size());
      break;
    }
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(s)));
  } catch (const std::exception&) {
    throw InputError("bad --field value (expected Q or F<p>)");
  }
}

Loaded load(const std::string& path, const Globals& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Presentation p = parse_presentation(ss.str());
  if (!g.field.empty()) p = with_field(p, parse_field(g.field));
  return {path, ss.str(), build_algebra(p)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  std::erase_if(out, [](const std::string& x) { return x.empty(); });
  return out;
}

std::size_t vertex_index(const Algebra& a, const std::string& name) {
  auto v = a.find_vertex(name);
  if (!v) throw InputError("unknown vertex '" + name + "'");
  return *v;
}

// vertex:1,2  or  gens:x,alpha*beta  (words in the file's convention, '*'-separated)
Ideal parse_ideal(const Loaded& l, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("ideal spec must be vertex:<list> or gens:<list>");
  const std::string kind = spec.substr(0, colon);
  const auto items = split(spec.substr(colon + 1), ',');
  if (items.empty()) throw InputError("empty ideal spec");
  const AlgebraPtr a = l.a();
  Ideal j;
  if (kind == "vertex") {
    std::vector<std::size_t> vs;
    for (const auto& s : items) vs.push_back(vertex_index(*a, s));
    j = vertex_ideal(a, vs);
  } else if (kind == "gens") {
    std::vector<Vector> gens;
    for (const auto& s : items) {
      if (s.rfind("e_", 0) == 0) {
        gens.push_back(a->idempotent(vertex_index(*a, s.substr(2))));
        continue;
      }
      try {
        gens.push_back(l.qa.path_element(l.qa.parse_path(split(s, '*'))));
      } catch (const std::exception& e) {
        throw InputError("bad generator '" + s + "': " + e.what());
      }
    }
    j = ideal_generated(a, gens);
  } else {
    throw InputError("ideal spec must start with vertex: or gens:");
  }
  if (j.space.contains(a->unit())) throw InputError("the ideal is the whole algebra");
  return j;
}

Module parse_module(const Loaded& l, const std::string& spec, Side side) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon != 1) throw InputError("module spec must be S:<v>, P:<v> or I:<v>");
  const std::size_t v = vertex_index(*l.a(), spec.substr(2));
  switch (spec[0]) {
    case 'S': return simple(l.a(), v, side);
    case 'P': return projective(l.a(), v, side);
    case 'I': return injective(l.a(), v, side);
    default: throw InputError("module spec must be S:<v>, P:<v> or I:<v>");
  }
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  throw InputError("--side must be left or right");
}

std::vector<int> parse_shifts(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      std::vector<int> out;
      for (const auto& x : split(s, ',')) out.push_back(std::stoi(x));
      return out;
    }
    const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw InputError("empty shift range");
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad --shifts value (expected a..b or a comma list)");
  }
}

std::string names(const Algebra& a, const std::vector<std::size_t>& mult) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < mult.size(); ++v) {
    if (!mult[v]) continue;
    os << (first ? "" : " + ") << "P_" << a.vertex_names()[v];
    if (mult[v] > 1) os << "^" << mult[v];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string mult_list(const std::vector<Multiplicity>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i].get_str();
  return os.str();
}

struct Output {
  Json json;
  std::ostringstream text;
  int code = 0;
};

Json input_block(const Loaded& l) {
  return {{"file", l.path}, {"fnv1a64", report::digest(l.text)}, {"field", l.a()->field().name()}};
}

// --- commands --------------------------------------------------------------

void cmd_basis(const Loaded& l, Output& out) {
  const Algebra& a = *l.a();
  out.json["input"] = input_block(l);
  out.json["algebra"] = report::algebra_summary(a);
  out.json["nilpotency"] = l.qa.presentation().nilpotency;
  out.text << "dim " << a.dim() << " over " << a.field().name() << "\n";
  out.text << "vertices:";
  for (const auto& v : a.vertex_names()) out.text << ' ' << v;
  out.text << "\nbasis:";
  for (const auto& s : a.labels()) out.text << ' ' << s;
  out.text << "\nrad dim " << a.radical().dim() << ", rad^2 dim " << a.radical_square().dim() << "\n";
}

void cmd_resolve(const Loaded& l, const std::string& spec, const std::string& side, std::size_t degree, Output& out) {
  const Module m = parse_module(l, spec, parse_side(side));
  const Resolution r = min_resolution(m, degree);
  const ValidationReport check = check_resolution(r);
  const Algebra& acting = *m.acting();
  out.json["input"] = input_block(l);
  out.json["module"] = {{"spec", spec}, {"side", side}, {"dim", m.dim()}};
  Json terms = Json::array();
  out.text << "minimal resolution of " << spec << " (" << side << ", dim " << m.dim() << ")\n";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    Json mult;
    for (std::size_t v = 0; v < r.terms[k].size(); ++v)
      if (r.terms[k][v]) mult[acting.vertex_names()[v]] = r.terms[k][v];
    terms.push_back({{"degree", k}, {"dim", r.modules[k].dim()}, {"multiplicities", mult}});
    out.text << "  P_" << k << " = " << names(acting, r.terms[k]) << "  (dim " << r.modules[k].dim() << ")\n";
  }
  out.json["terms"] = terms;
  out.json["terminated"] = r.terminated;
  out.json["checks"] = report::to_json(check);
  out.text << (r.terminated ? "  resolution terminates\n" : "") << "  invariants (d^2 = 0, radical images, exactness): "
           << (check.ok() ? "ok" : check.summary()) << "\n";
  if (!check.ok()) out.code = 1;
}

void cmd_tor(const Loaded& l, const std::string& spec, std::size_t imax, Output& out) {
  const Ideal j = parse_ideal(l, spec);
  const Module jr = ideal_module(j, Side::Right);
  const Module bl = quotient_by_ideal(j, Side::Left), br = quotient_by_ideal(j, Side::Right);
  const auto t1 = tor_sequence(jr, bl, imax), t2 = tor_sequence(br, bl, imax);
  out.json["input"] = input_block(l);
  out.json["ideal"] = {{"spec", spec}, {"dim", j.space.dim()}};
  out.json["tor_ideal_quotient"] = report::to_json(t1);
  out.json["tor_quotient_quotient"] = report::to_json(t2);
  out.text << "ideal " << spec << " (dim " << j.space.dim() << ")\n";
  out.text << "  i   Tor_i(J, A/J)   Tor_i(A/J, A/J)\n";
  for (std::size_t i = 0; i <= imax; ++i)
    out.text << "  " << i << "   " << t1[i].get_str() << "   " << t2[i].get_str() << "\n";
}

void render_theorem(const TheoremReport& t, Output& out) {
  const auto& h = t.homological;
  out.text << "  idempotent (J^2 = J): " << (h.idempotent ? "yes" : "no") << "\n";
  out.text << "  hereditary: " << (t.hereditary.hereditary() ? "yes" : "no") << " (cover dim " << t.hereditary.cover_dim
           << ", kernel dim " << t.hereditary.kernel_dim << ")\n";
  out.text << "  homological: " << to_string(h.verdict) << " - " << h.reason << "\n";
  out.text << "    direct oracle: " << to_string(h.direct) << " (B(x)B dim " << h.tensor_dim << ", multiplication rank "
           << h.multiplication_rank << "), " << (h.oracles_agree ? "agrees" : "DISAGREES") << "\n";
  out.text << "  bimodule pd: " << t.bimodule_pd.str() << (t.bimodule_pd.size_limited ? " (size limit)" : "") << "\n";
  out.text << "  conclusion: " << to_string(t.conclusion) << "\n";
}

void cmd_check(const Loaded& l, const std::string& spec, std::size_t bound, Output& out) {
  const Ideal j = parse_ideal(l, spec);
  const TheoremReport t = theorem_hypothesis_check(j, bound);
  out.json["input"] = input_block(l);
  out.json["ideal"] = {{"spec", spec}, {"dim", j.space.dim()}};
  out.json["report"] = report::to_json(t, *l.a());
  out.text << "ideal " << spec << " (dim " << j.space.dim() << "), bound " << bound << "\n";
  render_theorem(t, out);
  if (!t.homological.oracles_agree) out.code = 1;
}

void cmd_peel(const Loaded& l, const std::string& at, Output& out) {
  out.json["input"] = input_block(l);
  out.json["at"] = split(at, ',');
  for (const auto& v : split(at, ',')) vertex_index(*l.a(), v);
  try {
    const PeelChain ch = peel_chain(l.a(), split(at, ','));
    Json steps = Json::array();
    for (const auto& s : ch.steps) {
      steps.push_back(report::to_json(s));
      out.text << "peel " << s.vertex_name << ": dim " << s.dim_gamma << " -> " << s.dim_quotient << " (A " << s.dim_a
               << ", M " << s.dim_m << ", N " << s.dim_n << "), Ge(x)eG -> GeG " << s.dim_gamma_e << "*" << s.dim_e_gamma
               << " -> " << s.dim_ideal << ", " << (s.certified() ? "certified" : "NOT certified") << "\n";
    }
    out.json["steps"] = steps;
    out.json["final"] = report::algebra_summary(*ch.final);
    out.text << "final dim " << ch.final->dim() << ":";
    for (const auto& s : ch.final->labels()) out.text << ' ' << s;
    out.text << "\n";
  } catch (const PeelError& e) {
    out.json["error"] = e.what();
    out.text << "inapplicable: " << e.what() << "\n";
    out.code = 1;
  }
}

void cmd_shadow(const Loaded& l, const std::string& at, const std::string& shifts, const DsgOptions& opt, Output& out) {
  std::vector<std::size_t> vs;
  for (const auto& s : split(at, ',')) vs.push_back(vertex_index(*l.a(), s));
  const Ideal j = vertex_ideal(l.a(), vs);
  const ShadowReport sh = equivalence_shadow(j, parse_shifts(shifts), opt);
  out.json["input"] = input_block(l);
  out.json["at"] = split(at, ',');
  out.json["theorem"] = to_string(sh.theorem.conclusion);
  out.json["shadow"] = report::to_json(sh);
  out.text << "J generated by e_{" << at << "}: " << to_string(sh.theorem.conclusion) << "\n";
  out.text << "quotient dim " << sh.quotient->dim() << ", " << sh.quotient_gorenstein.str() << "; algebra "
           << sh.algebra_gorenstein.str() << "\n";
  out.text << "  X  Y  t   quotient            algebra             result\n";
  auto cell = [](const DsgHomReport& d) {
    std::string s = (d.value ? std::to_string(*d.value) : "-") + " " + to_string(d.status);
    s.resize(std::max<std::size_t>(s.size(), 20), ' ');
    return s;
  };
  for (const auto& c : sh.cells)
    out.text << "  " << c.source << "  " << c.target << "  " << (c.shift >= 0 ? " " : "") << c.shift << "  "
             << cell(c.quotient_side) << cell(c.algebra_side) << (c.match() ? "MATCH" : "MISMATCH") << "\n";
  out.text << sh.matches() << "/" << sh.cells.size() << " MATCH"
           << (sh.certified ? "" : " (UNCERTIFIED: hypotheses not established)") << "\n";
  if (sh.certified && sh.matches() != sh.cells.size()) out.code = 1;
}

void cmd_verify(const std::string& id, int r, Output& out) {
  const ExampleReport e = verify_example(id, r);
  out.json["example"] = report::to_json(e);
  for (const auto& c : e.claims) {
    out.text << (c.passed ? "PASS" : "FAIL") << " [" << to_string(c.kind) << "] " << c.id << ": " << c.statement
             << " -> " << c.observed << "\n";
    if (!c.note.empty()) out.text << "     note: " << c.note << "\n";
  }
  out.text << (e.all_passed() ? "all claims pass" : "some claims FAIL") << "\n";
  if (!e.all_passed()) out.code = 1;
}

void cmd_harness(std::uint64_t seed, std::size_t count, std::size_t bound, Output& out) {
  const HarnessReport h = run_harness({seed, count, bound});
  out.json["harness"] = report::to_json(h);
  out.text << "seed " << seed << ", " << count << " instances\n";
  out.text << "  vertex ideals " << h.ideals << " (both oracles conclusive " << h.ideals_conclusive << ", homological "
           << h.ideals_yes << ")\n";
  out.text << "  resolutions checked " << h.resolutions << ", Tor checks " << h.tor_checks << "\n";
  out.text << "  extension data " << h.extensions << " (phi != 0: " << h.extensions_nontrivial << "), round trips "
           << h.round_trips << ", certified peels " << h.certified_peels << ", non-injective controls "
           << h.non_injective << "\n";
  for (const auto& v : h.violations)
    out.text << "  VIOLATION instance " << v.instance << " (replay seed " << v.replay_seed << ") " << v.check << ": "
             << v.detail << "\n";
  out.text << h.violations.size() << " violations\n";
  if (!h.violations.empty()) out.code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singequiv - homological invariants of finite-dimensional quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json_path, "write the JSON report to this path ('-' for stdout)");
  app.add_option("--field", g.field, "override the file's field (Q or F<p>)");
  app.add_option("--bound", g.bound, "search bound");
  app.add_option("--window", g.window, "heuristic stabilization window");

  std::string file, module_spec = "S:1", side = "left", ideal_spec, at, shifts = "-2..2", example;
  std::size_t degree = 5, imax = 5, count = 50;
  std::uint64_t seed = 42;
  int r = 2;

  auto* basis = app.add_subcommand("basis", "print the basis of a presented algebra");
  basis->add_option("file", file)->required();
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a module");
  resolve->add_option("file", file)->required();
  resolve->add_option("--module", module_spec, "S:<v>, P:<v> or I:<v>");
  resolve->add_option("--side", side, "left or right");
  resolve->add_option("--degree", degree, "resolution length");
  auto* tor = app.add_subcommand("tor", "Tor_i(J, A/J) and Tor_i(A/J, A/J)");
  tor->add_option("file", file)->required();
  tor->add_option("--ideal", ideal_spec, "vertex:<list> or gens:<list>")->required();
  tor->add_option("--max", imax, "largest i");
  auto* check = app.add_subcommand("check", "hypothesis check for an ideal");
  check->add_option("file", file)->required();
  check->add_option("--ideal", ideal_spec, "vertex:<list> or gens:<list>")->required();
  auto* peel = app.add_subcommand("peel", "peel vertices one after another");
  peel->add_option("file", file)->required();
  peel->add_option("--at", at, "comma-separated vertex names")->required();
  auto* shadow = app.add_subcommand("shadow", "compare singularity Homs across A -> A/J");
  shadow->add_option("file", file)->required();
  shadow->add_option("--at", at, "vertices generating J")->required();
  shadow->add_option("--shifts", shifts, "a..b or a comma list");
  auto* verify = app.add_subcommand("verify-example", "run the claim suite of a fixture");
  verify->add_option("id", example, "dual, a2, e31, e32 or e33")->required();
  verify->add_option("--r", r, "parameter r for e33 (>= 2)");
  auto* harness = app.add_subcommand("harness", "randomized property harness");
  harness->add_option("--seed", seed);
  harness->add_option("--count", count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.json["schema"] = report::kSchema;
  std::string echo;
  // the output path is not part of the request
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--json") {
      ++i;
      continue;
    }
    if (arg.rfind("--json=", 0) == 0) continue;
    echo += (echo.empty() ? "" : " ") + arg;
  }
  out.json["command"] = echo;
  try {
    if (*basis) cmd_basis(load(file, g), out);
    else if (*resolve) cmd_resolve(load(file, g), module_spec, side, degree, out);
    else if (*tor) cmd_tor(load(file, g), ideal_spec, imax, out);
    else if (*check) cmd_check(load(file, g), ideal_spec, g.bound.value_or(20), out);
    else if (*peel) cmd_peel(load(file, g), at, out);
    else if (*shadow) {
      DsgOptions opt;
      opt.bound = g.bound.value_or(12);
      opt.window = g.window.value_or(3);
      cmd_shadow(load(file, g), at, shifts, opt, out);
    } else if (*verify) {
      if (!g.field.empty()) throw InputError("verify-example runs the fixtures over Q; --field is not accepted");
      cmd_verify(example, r, out);
    } else if (*harness) cmd_harness(seed, count, g.bound.value_or(8), out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PresentationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  out.json["exit_code"] = out.code;
  if (g.json_path == "-") {
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
    if (!g.json_path.empty()) {
      std::ofstream f(g.json_path);
      if (!f) {
        std::cerr << "error: cannot write '" << g.json_path << "'\n";
        return 2;
      }
      f << out.json.dump(2) << "\n";
    }
  }
  return out.code;
}
