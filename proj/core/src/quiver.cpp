#include "singequiv/quiver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <regex>
#include <sstream>

namespace singequiv {

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

bool canonical_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  const auto wa = a.word(), wb = b.word();
  return wa < wb;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.length() == 0) return "e_" + q.vertices.at(p.source);
  std::string out;
  for (std::size_t a : p.word()) {
    if (!out.empty()) out += '*';
    out += q.arrows.at(a).name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

bool is_coefficient(const std::string& t) {
  static const std::regex re(R"(^-?[0-9]+(/[0-9]+)?$)");
  return std::regex_match(t, re);
}

bool valid_name(const std::string& t) {
  return !t.empty() && !is_coefficient(t) && t.find_first_of("+-:,#") == std::string::npos;
}

std::string describe(const Quiver& q, std::size_t a) {
  const Arrow& ar = q.arrows[a];
  return ar.name + ": " + q.vertices[ar.source] + "->" + q.vertices[ar.target];
}

// Written word -> traversal path under the given convention.
Path word_to_path(const Quiver& q, const std::vector<std::size_t>& written, Composition conv, std::size_t line,
                  const std::string& term_text) {
  auto composable = [&](std::size_t left, std::size_t right, Composition c) {
    return c == Composition::Function ? q.arrows[left].source == q.arrows[right].target
                                      : q.arrows[left].target == q.arrows[right].source;
  };
  for (std::size_t i = 0; i + 1 < written.size(); ++i) {
    const std::size_t l = written[i], r = written[i + 1];
    if (!composable(l, r, conv)) {
      const bool fn = composable(l, r, Composition::Function);
      const bool dg = composable(l, r, Composition::Diagram);
      throw PresentationError(line, "term '" + term_text + "' is not composable at pair (" + q.arrows[l].name + ", " +
                                        q.arrows[r].name + ") [" + describe(q, l) + ", " + describe(q, r) +
                                        "]; function order: " + (fn ? "composable" : "not composable") +
                                        ", diagram order: " + (dg ? "composable" : "not composable"));
    }
  }
  Path p;
  if (conv == Composition::Function)
    p.arrows.assign(written.rbegin(), written.rend());
  else
    p.arrows = written;
  p.source = q.arrows[p.arrows.front()].source;
  p.target = q.arrows[p.arrows.back()].target;
  return p;
}

struct PendingRelation {
  std::vector<std::string> tokens;
  std::size_t line;
  std::string text;
};

Relation parse_relation(const Quiver& q, Composition conv, const PendingRelation& pr) {
  Relation rel;
  rel.line = pr.line;
  rel.text = pr.text;
  const auto& tok = pr.tokens;
  std::size_t i = 0;
  bool first = true;
  while (i < tok.size()) {
    Scalar sign = 1;
    if (tok[i] == "+" || tok[i] == "-") {
      if (tok[i] == "-") sign = -1;
      ++i;
    } else if (!first) {
      throw PresentationError(pr.line, "expected '+' or '-' before '" + tok[i] + "'");
    }
    first = false;
    Scalar coeff = 1;
    if (i < tok.size() && is_coefficient(tok[i])) {
      coeff = Scalar(tok[i]);
      coeff.canonicalize();
      ++i;
    }
    std::vector<std::size_t> written;
    std::string term_text;
    while (i < tok.size() && tok[i] != "+" && tok[i] != "-") {
      auto a = q.find_arrow(tok[i]);
      if (!a) throw PresentationError(pr.line, "unknown arrow '" + tok[i] + "'");
      written.push_back(*a);
      term_text += (term_text.empty() ? "" : " ") + tok[i];
      ++i;
    }
    if (written.empty()) throw PresentationError(pr.line, "relation term without a path");
    if (written.size() < 2) throw PresentationError(pr.line, "relation term '" + term_text + "' has length < 2");
    rel.terms.push_back({sign * coeff, word_to_path(q, written, conv, pr.line, term_text)});
  }
  if (rel.terms.empty()) throw PresentationError(pr.line, "empty relation");
  const Path& p0 = rel.terms.front().path;
  for (const auto& t : rel.terms)
    if (t.path.source != p0.source || t.path.target != p0.target)
      throw PresentationError(pr.line, "relation is non-parallel: terms run " + q.vertices[p0.source] + "->" +
                                           q.vertices[p0.target] + " and " + q.vertices[t.path.source] + "->" +
                                           q.vertices[t.path.target]);
  return rel;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::vector<PendingRelation> pending;
  bool have_field = false, have_vertices = false, have_nilpotency = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  static const std::regex arrow_re(R"(^arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)$)");
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    const std::string& kw = tok[0];
    if (kw == "field") {
      if (tok.size() == 2 && tok[1] == "Q") {
        p.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "F") {
        try {
          p.field = Field::prime(static_cast<std::uint32_t>(std::stoul(tok[2])));
        } catch (const std::exception& e) {
          throw PresentationError(lineno, std::string("bad field characteristic: ") + e.what());
        }
      } else {
        throw PresentationError(lineno, "expected 'field Q' or 'field F <p>'");
      }
      have_field = true;
    } else if (kw == "composition") {
      if (tok.size() != 2 || (tok[1] != "function" && tok[1] != "diagram"))
        throw PresentationError(lineno, "expected 'composition function' or 'composition diagram'");
      p.composition = tok[1] == "function" ? Composition::Function : Composition::Diagram;
    } else if (kw == "vertices") {
      if (have_vertices) throw PresentationError(lineno, "vertices declared twice");
      std::string rest = line.substr(kw.size());
      std::stringstream ss(rest);
      for (std::string v; std::getline(ss, v, ',');) {
        v = trim(v);
        if (v.empty() || v.find_first_of(" \t:#") != std::string::npos || v.find("->") != std::string::npos) throw PresentationError(lineno, "bad vertex name '" + v + "'");
        if (p.quiver.find_vertex(v)) throw PresentationError(lineno, "duplicate vertex '" + v + "'");
        p.quiver.vertices.push_back(v);
      }
      if (p.quiver.vertices.empty()) throw PresentationError(lineno, "no vertices");
      have_vertices = true;
    } else if (kw == "arrow") {
      if (!have_vertices) throw PresentationError(lineno, "arrow declared before vertices");
      std::smatch m;
      if (!std::regex_match(line, m, arrow_re)) throw PresentationError(lineno, "expected 'arrow <name>: <src> -> <tgt>'");
      const std::string name = m[1];
      if (!valid_name(name)) throw PresentationError(lineno, "bad arrow name '" + name + "'");
      if (p.quiver.find_arrow(name)) throw PresentationError(lineno, "duplicate arrow '" + name + "'");
      if (p.quiver.find_vertex(name)) throw PresentationError(lineno, "arrow name '" + name + "' clashes with a vertex");
      auto s = p.quiver.find_vertex(std::string(m[2]));
      auto t = p.quiver.find_vertex(std::string(m[3]));
      if (!s || !t) throw PresentationError(lineno, "arrow endpoint is not a declared vertex");
      p.quiver.arrows.push_back({name, *s, *t});
    } else if (kw == "relation") {
      pending.push_back({std::vector<std::string>(tok.begin() + 1, tok.end()), lineno, trim(line.substr(kw.size()))});
    } else if (kw == "nilpotency") {
      if (tok.size() != 2 || !std::all_of(tok[1].begin(), tok[1].end(), ::isdigit))
        throw PresentationError(lineno, "expected 'nilpotency <N>'");
      p.nilpotency = std::stoul(tok[1]);
      if (p.nilpotency < 1) throw PresentationError(lineno, "nilpotency bound must be >= 1");
      have_nilpotency = true;
    } else {
      throw PresentationError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!have_field) throw PresentationError(0, "missing 'field' directive");
  if (!have_vertices) throw PresentationError(0, "missing 'vertices' directive");
  if (!have_nilpotency) throw PresentationError(0, "missing 'nilpotency' directive");
  for (const auto& pr : pending) p.relations.push_back(parse_relation(p.quiver, p.composition, pr));
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "field " << (p.field.is_rational() ? "Q" : "F " + std::to_string(p.field.characteristic())) << '\n';
  os << "composition " << (p.composition == Composition::Function ? "function" : "diagram") << '\n';
  os << "vertices ";
  for (std::size_t i = 0; i < p.quiver.vertices.size(); ++i) os << (i ? ", " : "") << p.quiver.vertices[i];
  os << '\n';
  for (const auto& a : p.quiver.arrows)
    os << "arrow " << a.name << ": " << p.quiver.vertices[a.source] << " -> " << p.quiver.vertices[a.target] << '\n';
  for (const auto& r : p.relations) {
    os << "relation";
    bool first = true;
    for (const auto& t : r.terms) {
      Scalar c = t.coeff;
      if (!first || sgn(c) < 0) os << (sgn(c) < 0 ? " -" : " +");
      if (sgn(c) < 0) c = -c;
      if (c != 1) os << ' ' << c.get_str();
      const auto order = p.composition == Composition::Function ? t.path.word() : t.path.arrows;
      for (std::size_t a : order) os << ' ' << p.quiver.arrows[a].name;
      first = false;
    }
    os << '\n';
  }
  os << "nilpotency " << p.nilpotency << '\n';
  return os.str();
}

Presentation with_field(const Presentation& p, Field field) {
  Presentation out = p;
  out.field = field;
  return out;
}

// ---------------------------------------------------------------------------
// Algebra construction

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;  // ascending index

void sparse_axpy(const Field& f, Sparse& y, const Scalar& a, const Sparse& x) {
  Sparse out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, f.mul(a, x[j].second));
      ++j;
    } else {
      Scalar s = y[i].second;
      f.fma(s, a, x[j].second);
      if (sgn(s) != 0) out.emplace_back(y[i].first, s);
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

}  // namespace

QuiverAlgebra build_algebra(const Presentation& pres) {
  QuiverAlgebra qa;
  qa.presentation_ = pres;
  const Quiver& q = pres.quiver;
  const Field& f = pres.field;
  const std::size_t N = pres.nilpotency;

  // Paths of length <= N.
  std::vector<Path> all;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) all.push_back({v, v, {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= N; ++len) {
    const std::size_t layer_end = all.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == all[i].target) {
          Path p = all[i];
          p.arrows.push_back(a);
          p.target = q.arrows[a].target;
          all.push_back(std::move(p));
        }
    layer_begin = layer_end;
    if (all.size() > 2'000'000) throw PresentationError(0, "too many paths below the nilpotency bound");
  }
  std::stable_sort(all.begin(), all.end(), canonical_less);
  for (std::size_t i = 0; i < all.size(); ++i) qa.path_index_[{all[i].source, all[i].arrows}] = i;
  qa.paths_ = all;

  auto index_of = [&](const Path& p) -> std::optional<std::size_t> {
    if (p.length() > N) return std::nullopt;
    return qa.path_index_.at({p.source, p.arrows});
  };
  auto left_arrow = [&](std::size_t a, const Sparse& w) {
    Sparse out;
    for (const auto& [idx, c] : w) {
      const Path& p = all[idx];
      if (q.arrows[a].source != p.target || p.length() + 1 > N) continue;
      Path np = p;
      np.arrows.push_back(a);
      np.target = q.arrows[a].target;
      out.emplace_back(*index_of(np), c);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
  };
  auto right_arrow = [&](std::size_t a, const Sparse& w) {
    Sparse out;
    for (const auto& [idx, c] : w) {
      const Path& p = all[idx];
      if (q.arrows[a].target != p.source || p.length() + 1 > N) continue;
      Path np = p;
      np.arrows.insert(np.arrows.begin(), a);
      np.source = q.arrows[a].source;
      out.emplace_back(*index_of(np), c);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
  };

  // Echelon basis of the relation ideal truncated above length N; the
  // leading term of each vector is its largest path index.
  auto& red = qa.reducers_;
  auto reduce = [&](Sparse v) {
    while (!v.empty()) {
      auto it = red.find(v.back().first);
      if (it == red.end()) break;
      const Scalar c = f.neg(v.back().second);
      sparse_axpy(f, v, c, it->second);
    }
    return v;
  };
  std::deque<Sparse> queue;
  auto insert = [&](Sparse v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const Scalar inv = f.inv(v.back().second);
    for (auto& [idx, c] : v) c = f.mul(c, inv);
    red.emplace(v.back().first, v);
    queue.push_back(std::move(v));
  };
  for (const auto& rel : pres.relations) {
    Sparse v;
    for (const auto& t : rel.terms) {
      auto idx = index_of(t.path);
      if (!idx) continue;
      Scalar c = t.coeff;
      f.reduce(c);
      if (sgn(c) != 0) sparse_axpy(f, v, c, Sparse{{*idx, Scalar(1)}});
    }
    insert(std::move(v));
  }
  while (!queue.empty()) {
    Sparse w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      insert(left_arrow(a, w));
      insert(right_arrow(a, w));
    }
  }
  // Back-substitute so every reducer is pivot + non-pivot tail.
  for (auto& [lead, v] : red) {
    Sparse tail(v.begin(), v.end() - 1);
    Sparse done;
    while (!tail.empty()) {
      auto [idx, c] = tail.back();
      tail.pop_back();
      auto it = red.find(idx);
      if (it != red.end() && it->first < lead) {
        Sparse sub(it->second.begin(), it->second.end() - 1);
        sparse_axpy(f, tail, f.neg(c), sub);
      } else {
        done.emplace_back(idx, c);
      }
      std::sort(tail.begin(), tail.end(), [](auto& x, auto& y) { return x.first < y.first; });
    }
    std::sort(done.begin(), done.end(), [](auto& x, auto& y) { return x.first < y.first; });
    // merge duplicates
    Sparse merged;
    for (auto& [idx, c] : done) {
      if (!merged.empty() && merged.back().first == idx) {
        merged.back().second = f.add(merged.back().second, c);
        if (sgn(merged.back().second) == 0) merged.pop_back();
      } else {
        merged.emplace_back(idx, c);
      }
    }
    merged.emplace_back(lead, Scalar(1));
    v = std::move(merged);
  }

  // Certificate: every path of length N lies in I + J^(N+1).
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].length() != N) continue;
    if (!red.count(i))
      throw PresentationError(0, "nilpotency bound not certified (path " + path_label(q, all[i]) +
                                     " of length " + std::to_string(N) + " survives), increase N");
  }

  qa.basis_position_.assign(all.size(), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].length() >= N || red.count(i)) continue;
    qa.basis_position_[i] = static_cast<std::ptrdiff_t>(qa.basis_.size());
    qa.basis_.push_back(all[i]);
  }
  const std::size_t d = qa.basis_.size();

  AlgebraData data;
  data.field = f;
  for (const auto& p : qa.basis_) data.labels.push_back(path_label(q, p));
  data.vertex_names = q.vertices;
  auto element_of_index = [&](std::size_t idx) {
    Vector v(d);
    if (qa.basis_position_[idx] >= 0) {
      v[static_cast<std::size_t>(qa.basis_position_[idx])] = 1;
      return v;
    }
    auto it = red.find(idx);
    if (it == red.end()) return v;  // length N
    for (std::size_t k = 0; k + 1 < it->second.size(); ++k) {
      const auto& [j, c] = it->second[k];
      if (qa.basis_position_[j] >= 0) v[static_cast<std::size_t>(qa.basis_position_[j])] = f.neg(c);
    }
    return v;
  };
  for (std::size_t i = 0; i < d; ++i) {
    Matrix m(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Path& left = qa.basis_[i];
      const Path& right = qa.basis_[j];
      if (right.target != left.source) continue;
      Path prod{right.source, left.target, right.arrows};
      prod.arrows.insert(prod.arrows.end(), left.arrows.begin(), left.arrows.end());
      auto idx = index_of(prod);
      if (!idx) continue;
      m.set_column(j, element_of_index(*idx));
    }
    data.left_mult.push_back(std::move(m));
  }
  data.unit = Vector(d);
  std::vector<Vector> rad;
  for (std::size_t i = 0; i < d; ++i) {
    if (qa.basis_[i].length() == 0) {
      data.unit[i] = 1;
      data.idempotents.push_back(unit_vector(d, i));
    } else {
      rad.push_back(unit_vector(d, i));
    }
  }
  data.radical = Subspace::span(f, d, rad);
  qa.algebra_ = Algebra::make(std::move(data));
  return qa;
}

Vector QuiverAlgebra::path_element(const Path& p) const {
  const std::size_t d = basis_.size();
  Vector v(d);
  if (p.length() >= presentation_.nilpotency) return v;
  const std::size_t idx = path_index_.at({p.source, p.arrows});
  if (basis_position_[idx] >= 0) {
    v[static_cast<std::size_t>(basis_position_[idx])] = 1;
    return v;
  }
  const Field& f = presentation_.field;
  const auto& r = reducers_.at(idx);
  for (std::size_t k = 0; k + 1 < r.size(); ++k)
    if (basis_position_[r[k].first] >= 0) v[static_cast<std::size_t>(basis_position_[r[k].first])] = f.neg(r[k].second);
  return v;
}

Path QuiverAlgebra::parse_path(const std::vector<std::string>& written) const {
  const Quiver& q = presentation_.quiver;
  if (written.size() == 1 && q.find_vertex(written[0])) {
    std::size_t v = *q.find_vertex(written[0]);
    return {v, v, {}};
  }
  std::vector<std::size_t> idx;
  std::string text;
  for (const auto& w : written) {
    auto a = q.find_arrow(w);
    if (!a) throw PresentationError(0, "unknown arrow '" + w + "'");
    idx.push_back(*a);
    text += (text.empty() ? "" : " ") + w;
  }
  if (idx.empty()) throw PresentationError(0, "empty path");
  return word_to_path(q, idx, presentation_.composition, 0, text);
}

// ---------------------------------------------------------------------------
// Presentation comparison

PresentationCheck quotient_presentation_check(const AlgebraPtr& target, const Presentation& expected,
                                              const GeneratorMap& generators) {
  PresentationCheck out;
  const Field& f = target->field();
  if (!(f == expected.field)) {
    out.violations.push_back("field mismatch");
    return out;
  }
  const Quiver& q = expected.quiver;
  const std::size_t td = target->dim();
  std::vector<Vector> vimg, aimg;
  for (const auto& v : q.vertices) {
    auto it = generators.find(v);
    if (it == generators.end() || it->second.size() != td) {
      out.violations.push_back("generator map lacks vertex " + v);
      return out;
    }
    vimg.push_back(it->second);
  }
  for (const auto& a : q.arrows) {
    auto it = generators.find(a.name);
    if (it == generators.end() || it->second.size() != td) {
      out.violations.push_back("generator map lacks arrow " + a.name);
      return out;
    }
    aimg.push_back(it->second);
  }
  auto image = [&](const Path& p) {
    Vector acc = vimg[p.source];
    for (std::size_t a : p.arrows) acc = target->multiply(aimg[a], acc);
    return target->multiply(vimg[p.target], acc);
  };

  for (const auto& rel : expected.relations) {
    Vector s(td);
    for (const auto& t : rel.terms) {
      Scalar c = t.coeff;
      f.reduce(c);
      axpy(f, s, c, image(t.path));
    }
    if (!is_zero(s)) out.violations.push_back("relation violated: " + rel.text);
  }

  Vector unit(td);
  for (const auto& v : vimg) unit = add(f, unit, v);
  if (!(unit == target->unit())) out.violations.push_back("vertex images do not sum to the unit");

  QuiverAlgebra qa = build_algebra(expected);
  const Algebra& src = *qa.algebra();
  std::vector<Vector> cols;
  for (const auto& p : qa.basis_paths()) cols.push_back(image(p));
  Matrix T = Matrix::from_columns(f, cols, td);
  if (src.dim() != td || rank(T) != td)
    out.violations.push_back("induced map is not bijective (dims " + std::to_string(src.dim()) + " -> " +
                             std::to_string(td) + ", rank " + std::to_string(rank(T)) + ")");
  for (std::size_t i = 0; i < src.dim() && out.violations.empty(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vector lhs = T * src.left_mult(i).column(j);
      Vector rhs = target->multiply(cols[i], cols[j]);
      if (!(lhs == rhs)) {
        out.violations.push_back("product " + src.label(i) + " * " + src.label(j) + " not preserved");
        break;
      }
    }
  out.ok = out.violations.empty();
  return out;
}

GeneratorMap generator_map_by_labels(const Algebra& target, const Presentation& expected) {
  GeneratorMap g;
  auto lookup = [&](const std::string& label) {
    auto i = target.find_label(label);
    if (!i) throw AlgebraError("target has no basis element labelled '" + label + "'");
    return target.basis_vector(*i);
  };
  for (const auto& v : expected.quiver.vertices) g[v] = lookup("e_" + v);
  for (const auto& a : expected.quiver.arrows) g[a.name] = lookup(a.name);
  return g;
}

}  // namespace singequiv
