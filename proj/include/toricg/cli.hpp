#pragma once

// Command implementations behind the toricg executable. Each command writes
// its report to `out` and returns the process exit code: 0 when every check
// passes, 1 when a check fails. Bad input throws InputError (exit code 2).

#include "toricg/catalog.hpp"
#include "toricg/io.hpp"
#include "toricg/localization.hpp"
#include "toricg/rigidity.hpp"
#include "toricg/shelling.hpp"
#include "toricg/toric.hpp"
#include "toricg/verma.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace toricg::cli {

inline constexpr int kPass = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string direction;  // "a,b,c"; empty means derived from the seed
  std::string faces = "all";
  std::string v;          // localization direction; empty means sampled
  bool all = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ds",      "reciprocity", "monotonicity",   "ubt",  "kalai-identity",
                                              "cascade", "cone-bipyramid", "verma", "truncated"};
  return names;
}

inline RationalVector parse_vector(const std::string& text, const std::string& what) {
  RationalVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rational(item));
    } catch (const InputError& e) {
      throw InputError(what + ": " + e.what());
    }
  }
  if (v.empty()) throw InputError(what + ": expected comma-separated rationals");
  return v;
}

/// --faces all | dim=k
inline std::vector<FaceId> select_faces(const FaceLattice& L, const std::string& sel) {
  std::vector<FaceId> out;
  if (sel == "all") {
    for (FaceId f = 0; f < L.size(); ++f) out.push_back(f);
    return out;
  }
  if (sel.rfind("dim=", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(sel.substr(4), &used);
      if (used != sel.size() - 4) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("--faces: cannot read a dimension from '" + sel + "'");
    }
    return L.faces_of_dim(k);
  }
  throw InputError("--faces must be 'all' or 'dim=k', got '" + sel + "'");
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

inline std::string coeff_list(const Polynomial& p, long min_len = 1) {
  std::vector<std::string> xs;
  const long n = std::max<long>(p.degree() + 1, min_len);
  for (long k = 0; k < n; ++k) xs.push_back(p[k].str());
  return "[" + join(xs, ",") + "]";
}

inline std::string vector_text(const RationalVector& v) {
  std::vector<std::string> xs;
  for (const auto& x : v) xs.push_back(to_string(x));
  return "(" + join(xs, ",") + ")";
}

inline Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline const GeometricPolytope& require_geometry(const CatalogEntry& e) {
  if (!e.geometry)
    throw InputError(e.name + ": coordinates required (this command needs a polytope/v1 file or a realizable catalog "
                              "expression, not a lattice)");
  return *e.geometry;
}

// ---------------------------------------------------------------- gh / flags

inline int cmd_gh(const std::string& input, const Options& opt, std::ostream& out) {
  const CatalogEntry e = load_input(input);
  const FaceLattice& L = e.lattice;
  require_eulerian(L);
  ToricTable T(L);
  const Polynomial h = T.h_polytope();
  const Polynomial g = T.g_polytope();
  const FlagVector fl = flag_vector(L);
  const bool ds = check_dehn_sommerville(h, L.dim());
  if (opt.json) {
    Json j;
    j["name"] = e.name;
    j["dim"] = L.dim();
    j["f"] = L.f_vector();
    j["h"] = to_json(h);
    j["g"] = to_json(g);
    Json flags = Json::object();
    for (std::uint32_t m = 0; m < fl.size(); ++m) flags[FlagVector::label(m)] = to_json(fl[m]);
    j["flags"] = std::move(flags);
    j["checks"] = {{"dehn_sommerville", ds}};
    out << j.dump(2) << "\n";
  } else {
    std::vector<std::string> f;
    for (auto x : L.f_vector()) f.push_back(std::to_string(x));
    out << "polytope  " << e.name << "\n";
    out << "dim       " << L.dim() << "\n";
    out << "f         [" << join(f, ",") << "]\n";
    out << "h         " << coeff_list(h) << "   " << h << "\n";
    out << "g         " << coeff_list(g) << "   " << g << "\n";
    out << "flags\n";
    for (std::uint32_t m = 1; m < fl.size(); ++m)
      if (fl[m] != 0) out << "  " << std::left << std::setw(16) << FlagVector::label(m) << fl[m] << "\n";
    out << "Dehn-Sommerville: " << (ds ? "pass" : "FAIL") << "\n";
  }
  return ds ? kPass : kCheckFailed;
}

inline int cmd_flags(const std::string& input, const Options& opt, std::ostream& out) {
  const CatalogEntry e = load_input(input);
  require_eulerian(e.lattice);
  const FlagVector fl = flag_vector(e.lattice);
  if (opt.json) {
    Json flags = Json::object();
    for (std::uint32_t m = 0; m < fl.size(); ++m) flags[FlagVector::label(m)] = to_json(fl[m]);
    out << Json{{"name", e.name}, {"dim", e.lattice.dim()}, {"flags", flags}}.dump(2) << "\n";
  } else {
    out << "flag vector of " << e.name << " (d = " << e.lattice.dim() << ")\n";
    for (std::uint32_t m = 0; m < fl.size(); ++m)
      out << "  " << std::left << std::setw(20) << FlagVector::label(m) << fl[m] << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------- verify

struct Verdict {
  bool pass = true;
  std::string detail;
};

inline Verdict verify_one(const std::string& suite, const CatalogEntry& e, const Options& opt) {
  const FaceLattice& L = e.lattice;
  require_eulerian(L);
  const int d = L.dim();
  Verdict v;
  if (suite == "ds") {
    auto h = toric_h(L);
    v.pass = check_dehn_sommerville(h, d);
    v.detail = "h = " + coeff_list(h);
  } else if (suite == "reciprocity") {
    if (d < 0) {
      v.detail = "skipped for the empty polytope";
      return v;
    }
    auto a = check_reciprocity(L);
    auto b = check_reciprocity(dual(L));
    v.pass = a.is_zero() && b.is_zero();
    v.detail = "sum = " + a.to_string() + ", dual sum = " + b.to_string();
  } else if (suite == "monotonicity") {
    ToricTable T(L);
    std::size_t checked = 0;
    for (FaceId f : select_faces(L, opt.faces)) {
      ++checked;
      if (!check_monotonicity(T, f)) {
        v.pass = false;
        v.detail = "fails at face " + L.describe(f) + ": g(P) = " + T.g_polytope().to_string() +
                   ", g(F) g(P/F) = " + (T.g_face(f) * T.g_quotient(f)).to_string();
        return v;
      }
    }
    v.detail = std::to_string(checked) + " faces";
  } else if (suite == "ubt") {
    v.pass = check_ubt(L);
    v.detail = "g = " + coeff_list(toric_g(L));
  } else if (suite == "kalai-identity") {
    std::vector<std::string> parts;
    bool simplicial = d >= 1;
    for (FaceId f : L.faces_of_dim(d - 1))
      if (L.face(f).vertices.count() != static_cast<std::size_t>(d)) simplicial = false;
    for (long k = 0; 2 * k <= d - 2; ++k) {
      auto r = check_kalai_identity(L, k);
      if (!r.ok()) v.pass = false;
      parts.push_back("k=" + std::to_string(k) + ": " + r.lhs.str() + (r.ok() ? " = " : " != ") + r.rhs.str());
      if (simplicial) {
        auto s = check_simplicial_kalai(L, k);
        if (!s.ok()) v.pass = false;
        parts.push_back("simplicial k=" + std::to_string(k) + ": " + s.lhs.str() + (s.ok() ? " = " : " != ") + s.rhs.str());
      }
    }
    v.detail = parts.empty() ? "no k in range" : join(parts, "; ");
  } else if (suite == "cascade") {
    auto g = toric_g(L);
    v.pass = check_g_cascade(g);
    v.detail = "g = " + coeff_list(g) + (d >= 4 ? std::string(", degree-two M-condition ") +
                                                      (check_m_sequence_degree_two(g) ? "holds" : "fails")
                                                : std::string());
  } else if (suite == "cone-bipyramid") {
    v.pass = check_cone_bipyramid(L);
    v.detail = v.pass ? "g(CQ) = g(Q), h(BQ) = (1+t) h(Q)" : "identity fails";
  } else if (suite == "verma") {
    if (d < 0) {
      v.detail = "skipped for the empty polytope";
      return v;
    }
    auto r = check_verma_vs_polar(L);
    auto m = verma_multiplicities(L);
    std::vector<std::string> xs;
    for (const auto& x : m.row(L.top())) xs.push_back(x.str());
    v.pass = r.ok;
    v.detail = "m(cP) = (" + join(xs, ",") + ") vs g(P*) = " + coeff_list(toric_g(dual(L)));
    if (!r.ok) v.detail += "; " + r.mismatches.front();
  } else if (suite == "truncated") {
    if (d < 0) {
      v.detail = "skipped for the empty polytope";
      return v;
    }
    PolarTables P(L);
    std::size_t count = 0;
    for (long k = 0; k <= d; ++k)
      for (long s = 0; s <= d + 1; ++s) {
        auto r = truncated_inequality(P, k, s);
        ++count;
        if (!r.ok()) {
          v.pass = false;
          v.detail = "negative at k=" + std::to_string(k) + ", s=" + std::to_string(s) + ": " + r.value.str();
          return v;
        }
      }
    v.detail = std::to_string(count) + " (k, s) pairs";
  } else {
    throw InputError("unknown suite '" + suite + "' (known: " + join(suite_names()) + ")");
  }
  return v;
}

inline int cmd_verify(const std::string& suite, const std::vector<std::string>& inputs, const Options& opt,
                      std::ostream& out) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw InputError("unknown suite '" + suite + "' (known: " + join(suite_names()) + ")");
  if (!opt.all && inputs.empty()) throw InputError("verify needs polytopes to check, or --all for the catalog");
  std::vector<std::string> names = inputs;
  if (opt.all)
    for (const auto& n : catalog_names()) names.push_back(n);
  std::size_t passed = 0, failed = 0;
  Json rows = Json::array();
  for (const auto& n : names) {
    // verify works on lattices only, so skip facet enumeration for catalog names
    std::ifstream probe(n);
    CatalogEntry e = probe.good() ? load_input(n) : parse_catalog_expression(n, false);
    Verdict v = verify_one(suite, e, opt);
    (v.pass ? passed : failed)++;
    if (opt.json)
      rows.push_back({{"suite", suite}, {"name", e.name}, {"pass", v.pass}, {"detail", v.detail}});
    else
      out << (v.pass ? "PASS " : "FAIL ") << suite << " " << e.name << ": " << v.detail << "\n";
  }
  if (opt.json)
    out << Json{{"suite", suite}, {"passed", passed}, {"failed", failed}, {"instances", rows}}.dump(2) << "\n";
  else
    out << suite << ": " << passed << " passed, " << failed << " failed\n";
  return failed ? kCheckFailed : kPass;
}

// ---------------------------------------------------------------- shell

inline int cmd_shell(const std::string& input, const Options& opt, std::ostream& out) {
  const CatalogEntry e = load_input(input);
  const GeometricPolytope& P = require_geometry(e);
  if (P.dim < 1) throw InputError(e.name + ": line shelling needs dimension >= 1");
  Shelling S = opt.direction.empty() ? line_shelling(P, opt.seed)
                                     : line_shelling(P, parse_vector(opt.direction, "--direction"), opt.seed);
  ShellingReport R = shelling_decomposition(P, S);
  const auto facet_ids = P.lattice.faces_of_dim(P.dim - 1);
  if (opt.json) {
    Json steps = Json::array();
    for (const auto& s : R.steps)
      steps.push_back({{"facet", s.facet},
                       {"vertices", P.lattice.face(facet_ids[s.facet]).vertices.members()},
                       {"local_h", to_json(s.local_h)},
                       {"running_sum", to_json(s.running_sum)}});
    out << Json{{"name", e.name},
                {"direction", vector_json(S.direction)},
                {"attempts", S.attempts},
                {"order", S.facet_order},
                {"steps", steps},
                {"h", to_json(R.toric_h)},
                {"checks", {{"sums_to_h", R.sums_to_h}, {"nonnegative", R.nonnegative}, {"partial_unions", R.partial_unions_ok}}},
                {"problems", R.problems}}
               .dump(2)
        << "\n";
  } else {
    out << "line shelling of " << e.name << " along " << vector_text(S.direction) << " (" << S.attempts
        << (S.attempts == 1 ? " direction tried)\n" : " directions tried)\n");
    out << std::left << std::setw(6) << "step" << std::setw(8) << "facet" << std::setw(22) << "vertices"
        << std::setw(22) << "local h" << "running sum\n";
    for (std::size_t j = 0; j < R.steps.size(); ++j) {
      const auto& s = R.steps[j];
      out << std::left << std::setw(6) << j + 1 << std::setw(8) << s.facet << std::setw(22)
          << P.lattice.describe(facet_ids[s.facet]) << std::setw(22) << coeff_list(s.local_h)
          << coeff_list(s.running_sum) << "\n";
    }
    out << "toric h:             " << coeff_list(R.toric_h) << "\n";
    out << "sum of local h = h:  " << (R.sums_to_h ? "yes" : "NO") << "\n";
    out << "nonnegative:         " << (R.nonnegative ? "yes" : "NO") << "\n";
    out << "partial unions:      " << (R.partial_unions_ok ? "ok" : "NOT ok") << "\n";
    for (const auto& p : R.problems) out << "problem: " << p << "\n";
  }
  return R.ok() ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- rigidity

inline int cmd_rigidity(const std::string& input, const Options& opt, std::ostream& out) {
  const CatalogEntry e = load_input(input);
  const GeometricPolytope& P = require_geometry(e);
  if (P.dim < 3) throw InputError(e.name + ": rigidity needs a polytope of dimension >= 3");
  const Framework fw = build_framework(P);
  const RigidityReport r = analyze_framework(fw);
  const Integer g2 = toric_g(P.lattice)[2];
  const bool match = Integer(r.stress) == g2;
  const bool euler = r.euler == g2;
  if (opt.json) {
    out << Json{{"name", e.name},
                {"dim", P.dim},
                {"edges", r.edges},
                {"rank", r.rank},
                {"kernel", r.kernel},
                {"stress", r.stress},
                {"g2", to_json(g2)},
                {"checks", {{"stress_equals_g2", match}, {"rigid", r.rigid()}, {"edge_count", euler}}}}
               .dump(2)
        << "\n";
  } else {
    out << "framework of " << e.name << ": edges plus triangulated 2-faces\n";
    out << "E          " << r.edges << "\n";
    out << "rank       " << r.rank << "\n";
    out << "kernel     " << r.kernel << " (trivial motions " << r.trivial_motions << ")\n";
    out << "stress     " << r.stress << "\n";
    out << "g2         " << g2 << "\n";
    out << "stress = g2:               " << (match ? "yes" : "NO") << "\n";
    out << "infinitesimally rigid:     " << (r.rigid() ? "yes" : "NO") << "\n";
    out << "C(d+1,2) - d f0 + E = g2:  " << (euler ? "yes" : "NO") << "\n";
  }
  return match && r.rigid() && euler ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- localize

/// Input is X or cone(X); either way sigma is the cone over X.
inline PolyhedralCone localization_cone(const std::string& input, std::string& name) {
  std::string inner = input;
  if (inner.rfind("cone(", 0) == 0 && inner.size() > 6 && inner.back() == ')') inner = inner.substr(5, inner.size() - 6);
  const CatalogEntry e = load_input(inner);
  name = "cone(" + e.name + ")";
  const GeometricPolytope& P = require_geometry(e);
  if (P.dim < 1) throw InputError(e.name + ": localization needs a polytope of dimension >= 1");
  return cone_over(P);
}

inline std::string cone_face_text(const FaceLattice& L, FaceId f) { return f == L.bottom() ? "o" : "c" + L.describe(f); }

inline int cmd_localize(const std::string& input, const Options& opt, std::ostream& out) {
  std::string name;
  const PolyhedralCone sigma = localization_cone(input, name);
  const auto& L = sigma.lattice;
  std::vector<RationalVector> dirs;
  if (!opt.v.empty()) {
    auto v = parse_vector(opt.v, "--v");
    if (v.size() != sigma.ambient_dim)
      throw InputError("--v has " + std::to_string(v.size()) + " coordinates, the cone lives in dimension " +
                       std::to_string(sigma.ambient_dim));
    dirs.push_back(std::move(v));
  } else {
    dirs = sample_directions(sigma, opt.seed);
  }
  ToricTable T(L);
  bool all_ok = true;
  Json rows = Json::array();
  for (const auto& v : dirs) {
    const auto D = classify_faces(sigma, v);
    const auto ineq = check_generalized_monotonicity(sigma, D, T);
    const auto props = check_front_and_back(sigma, D);
    const bool ok = ineq.ok() && props.all();
    all_ok = all_ok && ok;
    auto list = [&](const std::vector<bool>& cls) {
      std::vector<std::string> xs;
      for (FaceId f = 0; f < L.size(); ++f)
        if (cls[f]) xs.push_back(cone_face_text(L, f));
      return xs;
    };
    std::vector<std::string> mins;
    for (FaceId f : D.min_fixed) mins.push_back(cone_face_text(L, f));
    if (opt.json) {
      rows.push_back({{"v", vector_json(v)},
                      {"back", list(D.back)},
                      {"front", list(D.front)},
                      {"fixed", list(D.fixed)},
                      {"min_fixed", mins},
                      {"lhs", to_json(ineq.lhs)},
                      {"rhs", to_json(ineq.rhs)},
                      {"checks",
                       {{"inequality", ineq.ok()},
                        {"fixed_is_intersection", props.fixed_is_intersection},
                        {"coface_closed", props.coface_closed},
                        {"plus_v", props.plus_v_ok},
                        {"plus_closure", props.plus_closure_ok},
                        {"projection_injective", props.projection_injective},
                        {"symmetric", props.symmetric}}}});
    } else {
      out << name << ", v = " << vector_text(v) << "\n";
      out << "  back   (<=0): " << join(list(D.back), " ") << "\n";
      out << "  front  (>=0): " << join(list(D.front), " ") << "\n";
      out << "  fixed  (=0):  " << join(list(D.fixed), " ") << "\n";
      out << "  minimal fixed: " << (mins.empty() ? "(none)" : join(mins, " ")) << "\n";
      out << "  lhs " << ineq.lhs << ", rhs " << ineq.rhs << ": " << (ineq.ok() ? "ok" : "VIOLATED") << "\n";
      out << "  front/back properties: " << (props.all() ? "ok" : "FAIL") << "\n";
    }
  }
  if (opt.json) out << Json{{"cone", name}, {"directions", rows}, {"ok", all_ok}}.dump(2) << "\n";
  return all_ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- verma

inline int cmd_verma(const std::string& input, const Options& opt, std::ostream& out) {
  const CatalogEntry e = load_input(input);
  const FaceLattice& L = e.lattice;
  if (L.dim() < 0) throw InputError("verma multiplicities need a nonempty polytope");
  require_eulerian(L);
  PolarTables P(L);
  const auto m = verma_multiplicities(L, P.primal());
  bool all_ok = true;
  Json rows = Json::array();
  if (!opt.json) out << "Verma multiplicities for the cone over " << e.name << "\n";
  for (FaceId f : select_faces(L, opt.faces)) {
    if (f == L.bottom()) continue;
    const auto& g = P.g_polar_face(f);
    std::vector<std::string> ms;
    bool ok = true;
    for (long k = 0; k < static_cast<long>(m.row(f).size()) || k <= g.degree(); ++k) {
      if (k < static_cast<long>(m.row(f).size())) ms.push_back(m(f, k).str());
      if (m(f, k) != g[k]) ok = false;
    }
    all_ok = all_ok && ok;
    if (opt.json) {
      Json row = Json::array();
      for (const auto& x : m.row(f)) row.push_back(to_json(x));
      rows.push_back({{"face", cone_face_text(L, f)}, {"dim", L.face(f).dim + 1}, {"m", row}, {"g_polar", to_json(g)}, {"ok", ok}});
    } else {
      out << "  " << std::left << std::setw(28) << cone_face_text(L, f) << "m = (" << join(ms, ",") << ")  g(F*) = "
          << coeff_list(g) << "  " << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (opt.json)
    out << Json{{"name", e.name}, {"faces", rows}, {"ok", all_ok}}.dump(2) << "\n";
  else
    out << "m_k(cF) = g_k(F*): " << (all_ok ? "pass" : "FAIL") << "\n";
  return all_ok ? kPass : kCheckFailed;
}

}  // namespace toricg::cli
