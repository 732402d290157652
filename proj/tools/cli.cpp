#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "hos/hos.hpp"

namespace hos::cli {

namespace {

struct Config {
  std::string space = "Q4";
  std::size_t samples = 0;  // 0: the command's default
  std::uint64_t seed = 0;
  bool json = false;
  std::size_t depth_limit = kDefaultDepthLimit;
};

/// What a command works over: scalar kind, dimension, the current tower (which
/// parsing and hypot may extend) and the inputs registered so far.
struct Session {
  Config config;
  ScalarKind kind = ScalarKind::tower;
  std::size_t dimension = 4;
  Tower tower = Tower::rationals();
  std::map<std::string, std::string> inputs;

  void record(const std::string& name, const std::string& literal) {
    if (!inputs.emplace(name, literal).second) throw DomainError("input '" + name + "' given twice");
  }

  std::size_t samples(std::size_t fallback) const { return config.samples ? config.samples : fallback; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

/// Q<n>: rationals, R<n>: the standard Hilbert fragment, H<n>: rational quaternions,
/// or a JSON file {"kind": "tower" | "quaternion", "dimension": n, "tower": ...}.
Session open_session(const Config& cfg) {
  Session s;
  s.config = cfg;
  s.tower = Tower::rationals(cfg.depth_limit);
  static const std::regex named(R"(([QRH])([1-9][0-9]?))");
  std::smatch m;
  if (std::regex_match(cfg.space, m, named)) {
    s.dimension = std::stoul(m[2]);
    if (m[1] == "H") s.kind = ScalarKind::quaternion;
    if (m[1] == "R") s.tower = standard_fragment(cfg.depth_limit);
    return s;
  }
  Json j = read_json_file(cfg.space);
  try {
    std::string kind = j.value("kind", "tower");
    if (kind == "quaternion") {
      s.kind = ScalarKind::quaternion;
    } else if (kind != "tower") {
      throw ParseError("unknown scalar kind '" + kind + "'", 0);
    }
    s.dimension = j.at("dimension").get<std::size_t>();
    if (j.contains("tower")) s.tower = tower_from_json(j.at("tower"), cfg.depth_limit);
  } catch (const Json::exception& e) {
    throw ParseError(cfg.space + ": " + e.what(), 0);
  }
  if (s.dimension == 0) throw DomainError("dimension must be positive");
  return s;
}

template <StarField S>
S parse_scalar(Session& s, std::string_view text) {
  if constexpr (std::is_same_v<S, FieldElement>) {
    ParsedElement p = parse_element(text, s.tower);
    s.tower = p.tower;
    return p.value;
  } else {
    return parse_quaternion(text);
  }
}

/// "(x1, x2, ...)" with top-level commas separating the coordinates.
template <StarField S>
Vector<S> parse_vector(Session& s, const std::string& text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("vector must look like (x1, ..., xn)", 0);
  t = t.substr(1, t.size() - 2);
  std::vector<S> coords;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || (t[i] == ',' && depth == 0)) {
      coords.push_back(parse_scalar<S>(s, t.substr(start, i - start)));
      start = i + 1;
    } else if (t[i] == '(') {
      ++depth;
    } else if (t[i] == ')') {
      --depth;
    }
  }
  if (coords.size() != s.dimension)
    throw DomainError("vector " + text + " has " + std::to_string(coords.size()) + " coordinates, the space has " +
                      std::to_string(s.dimension));
  return Vector<S>(std::move(coords));
}

template <StarField S>
ProjectivePoint<S> parse_point(Session& s, const std::string& name, const std::string& text) {
  s.record(name, text);
  return ProjectivePoint<S>(parse_vector<S>(s, text));
}

template <StarField S>
Json vector_json(const Vector<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_traits<S>::to_string(x));
  return a;
}

template <StarField S>
Json subspace_json(const Subspace<S>& m) {
  Json a = Json::array();
  for (const auto& b : m.basis()) a.push_back(vector_json(b));
  return a;
}

template <StarField S>
Json matrix_json(const OrthogonalMap<S>& u) {
  Json a = Json::array();
  for (const auto& row : u.rows()) a.push_back(vector_json(Vector<S>(row)));
  return a;
}

template <StarField S>
ScalarSampler<S> sampler(const Session& s) {
  if constexpr (std::is_same_v<S, FieldElement>)
    return {s.tower};
  else
    return {};
}

/// Adds the session tower to a witness when it is not Q.
template <StarField S>
void note_tower(const Session& s, Json& w) {
  if constexpr (std::is_same_v<S, FieldElement>)
    if (s.tower.depth() > 0) w["tower"] = s.tower.id();
}

struct Outcome {
  Report report;
  std::string headline;  // printed before the checks in text mode
  bool show_checks = true;
};

template <class Fn>
Outcome dispatch(Session& s, Fn&& fn) {
  if (s.kind == ScalarKind::tower) return fn.template operator()<FieldElement>();
  return fn.template operator()<Quaternion>();
}

std::string fraction(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// ---- commands -------------------------------------------------------------

Outcome cmd_eval(Session& s, const std::string& expr) {
  s.record("expression", expr);
  ParsedElement p = parse_element(expr, s.tower);
  s.tower = p.tower;
  Outcome o;
  o.report.command = "eval";
  o.report.add("evaluate", true, p.value.to_string());
  Json w{{"expression", expr}, {"value", p.value.to_string()}, {"element", element_to_json(p.value)}};
  if (p.tower.depth() > 0) w["tower"] = tower_to_json(p.tower, true);
  o.report.witnesses.push_back(std::move(w));
  o.headline = p.value.to_string();
  if (p.tower.depth() > 0) o.headline += "\nin " + p.tower.id();
  o.show_checks = false;
  return o;
}

Outcome cmd_closure_points(Session& s, const std::vector<std::string>& texts, const std::vector<std::string>& members) {
  return dispatch(s, [&]<StarField S>() {
    if (texts.empty()) throw DomainError("closure needs at least one point");
    std::vector<ProjectivePoint<S>> pts;
    for (std::size_t i = 0; i < texts.size(); ++i) pts.push_back(parse_point<S>(s, "point " + std::to_string(i), texts[i]));
    Subspace<S> m = orthoclosure(pts);
    Outcome o;
    o.report.command = "closure";
    bool extensive = true;
    for (const auto& p : pts) extensive = extensive && contains(m, p);
    o.report.add("extensive", extensive, "every input point lies in the closure");
    o.report.add("perp-perp", orthocomplement(orthocomplement(m)) == m,
                 "span equals its double orthocomplement (dimension " + std::to_string(m.dimension()) + ")");
    Json w{{"closure", subspace_json(m)}, {"dimension", m.dimension()}};
    Json mem = Json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      ProjectivePoint<S> q = parse_point<S>(s, "member " + std::to_string(i), members[i]);
      bool in = contains(m, q);
      o.report.add("member " + std::to_string(i), in, q.to_string() + (in ? " lies" : " does not lie") + " in the closure");
      mem.push_back(Json{{"point", q.to_string()}, {"member", in}});
    }
    if (!members.empty()) w["members"] = mem;
    note_tower<S>(s, w);
    o.report.witnesses.push_back(std::move(w));
    o.headline = "closure of dimension " + std::to_string(m.dimension());
    return o;
  });
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad point index '" + item + "'", 0);
    }
  }
  return out;
}

Json index_json(PointSet a) { return Json(members(a)); }

Outcome cmd_closure_finite(Session& s, const std::string& file, const std::string& subset) {
  s.record("orthoset", file);
  FiniteOrthoset x = orthoset_from_json(read_json_file(file));
  PointSet a = point_set(parse_index_list(subset));
  PointSet c = finite_closure(x, a);
  Outcome o;
  o.report.command = "closure";
  o.report.add("extensive", (a & ~c) == 0, "A is contained in A-perp-perp");
  o.report.add("idempotent", finite_closure(x, c) == c, "closing twice changes nothing");
  o.report.witnesses.push_back(Json{{"size", x.size()}, {"subset", index_json(a)}, {"closure", index_json(c)}});
  o.headline = "closure: " + index_json(c).dump();
  return o;
}

Outcome cmd_line(Session& s, const std::string& et, const std::string& ft) {
  return dispatch(s, [&]<StarField S>() {
    ProjectivePoint<S> e = parse_point<S>(s, "e", et), f = parse_point<S>(s, "f", ft);
    LineHandle<S> l = line(e, f);
    ProjectivePoint<S> g = witness_L1(e, f), h = witness_L2(e, f);
    Outcome o;
    o.report.command = "line";
    o.report.add("dimension", l.subspace.dimension() == 2, "the span of e and f is two-dimensional");
    o.report.add("orthoclosed", orthocomplement(orthocomplement(l.subspace)) == l.subspace,
                 "the line equals {e, f}-perp-perp");
    ProjectivePoint<S> eg[] = {e, g};
    o.report.add("L1", perp(g, e) && orthoclosure<S>(eg) == l.subspace, g.to_string() + " is orthogonal to e and spans the line with e");
    o.report.add("L2", l.contains(h) && !(h == e) && !(h == f), h.to_string() + " is a third point of the line");
    Json w{{"basis", subspace_json(l.subspace)}, {"L1", g.to_string()}, {"L2", h.to_string()}};
    note_tower<S>(s, w);
    o.report.witnesses.push_back(std::move(w));
    return o;
  });
}

Outcome cmd_axioms(Session& s) {
  return dispatch(s, [&]<StarField S>() {
    Rng rng(s.config.seed);
    ScalarSampler<S> sample = sampler<S>(s);
    std::size_t n = s.samples(100), sym = 0, irr = 0, l1 = 0, l2 = 0;
    Json first;
    for (std::size_t k = 0; k < n; ++k) {
      auto [e, f] = random_point_pair(rng, sample, s.dimension);
      if (perp(e, f) == perp(f, e)) ++sym;
      if (!perp(e, e) && !perp(f, f)) ++irr;
      std::optional<ProjectivePoint<S>> g, h;
      try {
        g = witness_L1(e, f);
        ProjectivePoint<S> eg[] = {e, g.value()}, ef[] = {e, f};
        if (perp(*g, e) && orthoclosure<S>(eg) == orthoclosure<S>(ef)) ++l1;
      } catch (const Error&) {
      }
      try {
        h = witness_L2(e, f);
        ProjectivePoint<S> ef[] = {e, f};
        if (contains(orthoclosure<S>(ef), *h) && !(*h == e) && !(*h == f)) ++l2;
      } catch (const Error&) {
      }
      if (k == 0) {
        first = Json{{"e", e.to_string()}, {"f", f.to_string()}};
        if (g) first["L1"] = g->to_string();
        if (h) first["L2"] = h->to_string();
      }
    }
    Outcome o;
    o.report.command = "axioms";
    o.report.add("perp symmetric", sym == n, fraction(sym, n) + " random pairs");
    o.report.add("perp irreflexive", irr == n, fraction(irr, n) + " random pairs");
    o.report.add("L1", l1 == n, fraction(l1, n) + " pairs: g perp e with {e, f}-perp = {e, g}-perp");
    o.report.add("L2", l2 == n, fraction(l2, n) + " pairs: a third point on the line e * f");
    note_tower<S>(s, first);
    o.report.witnesses.push_back(std::move(first));
    return o;
  });
}

template <StarField S>
void transporter_checks(Report& r, const OrthogonalMap<S>& u, const Subspace<S>& m1, const Subspace<S>& m2) {
  r.add("orthogonal", verify_orthogonal(u), "Gram check and U^+ U = U U^+ = I");
  r.add("U(M1) = M2", apply_subspace(u, m1) == m2, "image of M1 equals M2");
  Subspace<S> meet = intersection(m1, m2);
  r.add("fixes M1 meet M2", fixes_pointwise(u, meet), "dimension " + std::to_string(meet.dimension()));
  Subspace<S> out = orthocomplement(sum(m1, m2));
  r.add("fixes (M1 + M2)-perp", fixes_pointwise(u, out), "dimension " + std::to_string(out.dimension()));
}

Outcome cmd_transport(Session& s, const std::vector<std::string>& from, const std::vector<std::string>& to) {
  return dispatch(s, [&]<StarField S>() {
    Outcome o;
    o.report.command = "transport";
    auto ctx = scalar_traits<S>::make_context();
    if constexpr (std::is_same_v<S, FieldElement>) ctx = s.tower;
    if (!from.empty() || !to.empty()) {
      std::vector<Vector<S>> a, b;
      for (std::size_t i = 0; i < from.size(); ++i) {
        s.record("from " + std::to_string(i), from[i]);
        a.push_back(parse_vector<S>(s, from[i]));
      }
      for (std::size_t i = 0; i < to.size(); ++i) {
        s.record("to " + std::to_string(i), to[i]);
        b.push_back(parse_vector<S>(s, to[i]));
      }
      Subspace<S> m1 = Subspace<S>::span(a, s.dimension), m2 = Subspace<S>::span(b, s.dimension);
      OrthogonalMap<S> u = transporter(m1, m2, ctx);
      transporter_checks(o.report, u, m1, m2);
      Json w{{"M1", subspace_json(m1)}, {"M2", subspace_json(m2)}, {"matrix", matrix_json(u)}};
      if constexpr (std::is_same_v<S, FieldElement>) {
        s.tower = ctx;
        note_tower<S>(s, w);
      }
      o.report.witnesses.push_back(std::move(w));
      o.headline = "U = " + u.to_string();
      return o;
    }
    // Random pairs of subspaces of dimension 1 or 2.
    Rng rng(s.config.seed);
    ScalarSampler<S> sample = sampler<S>(s);
    std::size_t n = s.samples(10);
    Report all;
    std::size_t ok = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t dim = 1 + rng.below(std::min<std::size_t>(2, s.dimension));
      Subspace<S> m1 = random_subspace(rng, sample, s.dimension, dim);
      Subspace<S> m2 = random_subspace(rng, sample, s.dimension, dim);
      auto c = ctx;
      OrthogonalMap<S> u = transporter(m1, m2, c);
      Report one;
      transporter_checks(one, u, m1, m2);
      if (one.passed()) ++ok;
      if (k == 0) o.report.witnesses.push_back(Json{{"M1", subspace_json(m1)}, {"M2", subspace_json(m2)},
                                                    {"matrix", matrix_json(u)}});
    }
    o.report.add("transporters", ok == n, fraction(ok, n) + " random subspace pairs pass all four checks");
    return o;
  });
}

Outcome cmd_rotate(Session& s, const std::vector<std::string>& line_pts, const std::string& et, const std::string& ft) {
  if (s.kind != ScalarKind::tower) throw DomainError("rotate needs a commutative scalar field; quaternion lines have no rotation form");
  using S = FieldElement;
  ProjectivePoint<S> e = parse_point<S>(s, "from", et), f = parse_point<S>(s, "to", ft);
  LineHandle<S> l = line_pts.empty() ? line(e, f)
                                     : line(parse_point<S>(s, "line 0", line_pts.at(0)), parse_point<S>(s, "line 1", line_pts.at(1)));
  Tower ctx = s.tower;
  Rotation<S> r = line_rotation_witness(l, e, f, ctx);
  s.tower = ctx;
  Outcome o;
  o.report.command = "rotate";
  o.report.add("alpha^2 + beta^2 = 1", r.alpha * r.alpha + r.beta * r.beta == S(1),
               "alpha = " + r.alpha.to_string() + ", beta = " + r.beta.to_string());
  o.report.add("orthogonal", verify_orthogonal(r.map), "Gram check and U^+ U = U U^+ = I");
  o.report.add("P(U)(e) = f", apply_point(r.map, e) == f, apply_point(r.map, e).to_string());
  o.report.add("fixes l-perp", fixes_pointwise(r.map, orthocomplement(l.subspace)), "identity on the orthocomplement");
  Json w{{"alpha", r.alpha.to_string()}, {"beta", r.beta.to_string()}, {"matrix", matrix_json(r.map)}};
  note_tower<S>(s, w);
  o.report.witnesses.push_back(std::move(w));
  o.headline = "U = " + r.map.to_string();
  return o;
}

Outcome cmd_flag(Session& s, const std::string& et, const std::vector<std::string>& lt, const std::string& ft,
                 const std::vector<std::string>& mt) {
  return dispatch(s, [&]<StarField S>() {
    ProjectivePoint<S> e = parse_point<S>(s, "point", et), f = parse_point<S>(s, "to-point", ft);
    LineHandle<S> l = line(parse_point<S>(s, "line 0", lt.at(0)), parse_point<S>(s, "line 1", lt.at(1)));
    LineHandle<S> m = line(parse_point<S>(s, "to-line 0", mt.at(0)), parse_point<S>(s, "to-line 1", mt.at(1)));
    auto ctx = scalar_traits<S>::make_context();
    if constexpr (std::is_same_v<S, FieldElement>) ctx = s.tower;
    OrthogonalMap<S> u = flag_transport(e, l, f, m, ctx);
    if constexpr (std::is_same_v<S, FieldElement>) s.tower = ctx;
    Outcome o;
    o.report.command = "flag";
    o.report.add("orthogonal", verify_orthogonal(u), "Gram check and U^+ U = U U^+ = I");
    o.report.add("P(U)(e) = f", apply_point(u, e) == f, apply_point(u, e).to_string());
    o.report.add("U(l) = m", apply_subspace(u, l.subspace) == m.subspace, "image of the first line is the second");
    Json w{{"matrix", matrix_json(u)}};
    note_tower<S>(s, w);
    o.report.witnesses.push_back(std::move(w));
    o.headline = "U = " + u.to_string();
    return o;
  });
}

Outcome cmd_so2(Session& s, const std::vector<std::string>& line_pts) {
  if (s.kind != ScalarKind::tower) throw DomainError("so2 needs a commutative scalar field");
  using S = FieldElement;
  Rng rng(s.config.seed);
  ScalarSampler<S> sample{s.tower};
  LineHandle<S> l = [&] {
    if (!line_pts.empty())
      return line(parse_point<S>(s, "line 0", line_pts.at(0)), parse_point<S>(s, "line 1", line_pts.at(1)));
    auto [e, f] = random_point_pair(rng, sample, s.dimension);
    return line(e, f);
  }();
  std::vector<std::pair<S, S>> params;
  for (std::size_t k = 0, n = s.samples(20); k < n; ++k) {
    auto [a, b] = random_circle_point(rng);
    params.emplace_back(S(a), S(b));
  }
  Tower ctx = s.tower;
  Outcome o;
  o.report = check_so2_abelian(l, params, ctx);
  s.tower = ctx;
  o.report.witnesses.insert(o.report.witnesses.begin(), Json{{"line", subspace_json(l.subspace)}});
  if (s.tower.depth() > 0) o.report.witnesses[0]["tower"] = s.tower.id();
  return o;
}

Tower fragment_tower(Session& s, const std::vector<std::string>& exprs, const std::string& file) {
  if (!file.empty()) {
    s.record("fragment", file);
    return tower_from_json(read_json_file(file), s.config.depth_limit);
  }
  Tower t = Tower::rationals(s.config.depth_limit);
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    s.record("fragment " + std::to_string(i), exprs[i]);
    t = parse_element(exprs[i], t).tower;
  }
  return t;
}

Outcome cmd_embed(Session& s, const std::vector<std::string>& exprs, const std::string& file, const std::string& target) {
  Tower frag = fragment_tower(s, exprs, file);
  s.record("target", target);
  Outcome o;
  o.report.command = "embed";
  Rng rng(s.config.seed);
  std::size_t n = s.samples(100);
  if (target == "H") {
    auto sigma = embed_hilbert_fragment_in_quaternions(frag);
    auto phi = induced_point_map<FieldElement, Quaternion>(sigma, s.dimension);
    std::vector<std::pair<ProjectivePoint<FieldElement>, ProjectivePoint<FieldElement>>> pairs;
    for (std::size_t k = 0; k < n; ++k) pairs.push_back(random_point_pair(rng, ScalarSampler<FieldElement>{frag}, s.dimension));
    o.report.append(check_embedding(phi, pairs));
    o.report.witnesses.push_back(Json{{"fragment", frag.id()}, {"target", "H"}});
    return o;
  }
  Tower tgt = target == "R" ? standard_fragment(s.config.depth_limit) : tower_from_json(read_json_file(target), s.config.depth_limit);
  FieldHom h = embed_hilbert_fragment(frag, tgt);
  o.report.append(check_fragment_embedding(h));
  auto phi = induced_orthoset_embedding(h, s.dimension);
  std::vector<std::pair<ProjectivePoint<FieldElement>, ProjectivePoint<FieldElement>>> pairs;
  for (std::size_t k = 0; k < n; ++k) {
    auto pr = random_point_pair(rng, ScalarSampler<FieldElement>{frag}, s.dimension);
    // Every fourth pair is made orthogonal so that preservation is exercised.
    if (k % 4 == 3) {
      ProjectivePoint<FieldElement> g = witness_L1(pr.first, pr.second);
      pr.second = g;
    }
    pairs.push_back(pr);
  }
  o.report.append(check_embedding(phi, pairs));
  o.report.witnesses.push_back(Json{{"fragment", frag.id()}, {"target", h.target().id()}, {"hom", hom_to_json(h)}});
  return o;
}

Outcome cmd_quat_hypot(Session& s, const std::string& at, const std::string& bt) {
  s.record("alpha", at);
  s.record("beta", bt);
  Quaternion a = parse_quaternion(at), b = parse_quaternion(bt);
  Quaternion g = quat_hypot(a, b);
  Rational lhs = g.norm(), rhs = a.norm() + b.norm();
  Outcome o;
  o.report.command = "quat hypot";
  o.report.add("gamma gamma* = alpha alpha* + beta beta*", lhs == rhs, to_string(lhs) + " = " + to_string(rhs));
  o.report.witnesses.push_back(Json{{"alpha", a.to_string()}, {"beta", b.to_string()}, {"gamma", g.to_string()},
                                    {"norm", to_string(lhs)}});
  o.headline = g.to_string();
  return o;
}

Outcome cmd_no_sqrt2() {
  Outcome o;
  o.report = verify_no_sqrt2();
  o.headline = "alpha^2 = 2 has no solution alpha = a + bi + cj + dk with rational a, b, c, d";
  return o;
}

Outcome cmd_classify(Session& s, const std::string& file) {
  s.record("orthoset", file);
  FiniteOrthoset x = orthoset_from_json(read_json_file(file));
  Classification c = classify(x);
  Outcome o;
  o.report.command = "classify";
  o.report.add("orthoset", true, std::to_string(x.size()) + " points, symmetric and irreflexive");
  o.report.add("classified", true, std::string(family_name(c.family)) + ", rank " + std::to_string(c.rank));
  o.report.witnesses.push_back(Json{{"size", x.size()}, {"family", family_name(c.family)}, {"rank", c.rank}});
  o.headline = std::string(family_name(c.family)) + ", rank " + std::to_string(c.rank);
  return o;
}

void emit(const Outcome& o, bool json, std::ostream& out) {
  if (json) {
    out << o.report.to_json().dump(2) << '\n';
    return;
  }
  if (!o.headline.empty()) out << o.headline << '\n';
  if (o.show_checks) out << o.report.to_text();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hermitian spaces, orthosets and their symmetries", "hos"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--space", cfg.space, "Q<n>, R<n>, H<n> or a JSON space file")->capture_default_str();
  app.add_option("--samples", cfg.samples, "number of random samples");
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_flag("--json", cfg.json, "print the report as JSON");
  app.add_option("--depth-limit", cfg.depth_limit, "maximum tower depth")->capture_default_str();

  std::string expr, e_text, f_text, file, subset, target;
  std::vector<std::string> points, members, from, to, line_pts, to_line, fragments;
  std::function<Outcome(Session&)> action;

  auto* eval = app.add_subcommand("eval", "evaluate a field expression");
  eval->add_option("expression", expr)->required();
  eval->callback([&] { action = [&](Session& s) { return cmd_eval(s, expr); }; });

  auto* closure = app.add_subcommand("closure", "orthoclosure of points, or of a subset of a finite orthoset");
  closure->add_option("points", points, "vector literals");
  closure->add_option("--member", members, "points expected in the closure; a non-member fails the report");
  closure->add_option("--orthoset", file, "finite orthoset JSON file");
  closure->add_option("--subset", subset, "comma-separated point indices");
  closure->callback([&] {
    action = [&](Session& s) {
      return file.empty() ? cmd_closure_points(s, points, members) : cmd_closure_finite(s, file, subset);
    };
  });

  auto* line_cmd = app.add_subcommand("line", "the line through two points, with L1/L2 witnesses");
  line_cmd->add_option("e", e_text)->required();
  line_cmd->add_option("f", f_text)->required();
  line_cmd->callback([&] { action = [&](Session& s) { return cmd_line(s, e_text, f_text); }; });

  auto* axioms = app.add_subcommand("axioms", "orthoset and linearity axioms on random pairs");
  axioms->callback([&] { action = [&](Session& s) { return cmd_axioms(s); }; });

  auto* transport = app.add_subcommand("transport", "orthogonal map taking one subspace onto another");
  transport->add_option("--from", from, "spanning vectors of M1");
  transport->add_option("--to", to, "spanning vectors of M2");
  transport->callback([&] { action = [&](Session& s) { return cmd_transport(s, from, to); }; });

  auto* rotate = app.add_subcommand("rotate", "rotation of a line taking one point to another");
  rotate->add_option("--line", line_pts, "two points spanning the line")->expected(2);
  rotate->add_option("--from", e_text)->required();
  rotate->add_option("--to", f_text)->required();
  rotate->callback([&] { action = [&](Session& s) { return cmd_rotate(s, line_pts, e_text, f_text); }; });

  auto* flag = app.add_subcommand("flag", "orthogonal map taking a point-line flag to another");
  flag->add_option("--point", e_text)->required();
  flag->add_option("--line", line_pts)->expected(2)->required();
  flag->add_option("--to-point", f_text)->required();
  flag->add_option("--to-line", to_line)->expected(2)->required();
  flag->callback([&] { action = [&](Session& s) { return cmd_flag(s, e_text, line_pts, f_text, to_line); }; });

  auto* so2 = app.add_subcommand("so2", "commutation and transitivity of the rotations of a line");
  so2->add_option("--line", line_pts, "two points spanning the line (default: random)")->expected(2);
  so2->callback([&] { action = [&](Session& s) { return cmd_so2(s, line_pts); }; });

  auto* embed = app.add_subcommand("embed", "embed a Hilbert-field fragment into a target tower");
  embed->add_option("--fragment", fragments, "hypot expressions generating the fragment");
  embed->add_option("--fragment-file", file, "fragment tower JSON with provenance");
  embed->add_option("--target", target, "target tower JSON file, R, or H")->required();
  embed->callback([&] { action = [&](Session& s) { return cmd_embed(s, fragments, file, target); }; });

  auto* quat = app.add_subcommand("quat", "rational quaternion checks");
  quat->require_subcommand(1);
  auto* qh = quat->add_subcommand("hypot", "gamma with gamma gamma* = alpha alpha* + beta beta*");
  qh->add_option("alpha", e_text)->required();
  qh->add_option("beta", f_text)->required();
  qh->callback([&] { action = [&](Session& s) { return cmd_quat_hypot(s, e_text, f_text); }; });
  auto* qn = quat->add_subcommand("no-sqrt2", "certify that x^2 = 2 has no quaternion solution");
  qn->callback([&] { action = [&](Session&) { return cmd_no_sqrt2(); }; });

  auto* cls = app.add_subcommand("classify", "family and rank of a finite orthoset");
  cls->add_option("file", file, "finite orthoset JSON file")->required();
  cls->callback([&] { action = [&](Session& s) { return cmd_classify(s, file); }; });

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
    Session s = open_session(cfg);
    Outcome o = action(s);
    emit(o, cfg.json, out);
    return o.report.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hos::cli
