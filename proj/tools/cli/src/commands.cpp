#include "commands.hpp"

#include <charconv>
#include <optional>

#include "qlc/error.hpp"
#include "qlc/klein.hpp"
#include "qlc/moduli.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"
#include "qlc/stability.hpp"
#include "qlc/surface.hpp"

namespace qlc::cli {

namespace {

const std::vector<std::string> kLambdaMu{"l", "m"};
const std::vector<std::string> kX{"X0", "X1", "X2", "X3"};

std::optional<std::string> opt(const Job& job, const std::string& name) {
  auto it = job.options.find(name);
  if (it == job.options.end()) return std::nullopt;
  return it->second;
}

bool flag(const Job& job, const std::string& name) { return opt(job, name).has_value(); }

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& where) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw_invalid("cli.integer", where + ": not an integer: " + s);
  return v;
}

std::vector<int> parse_ints(const std::string& s, const std::string& where) {
  std::vector<int> out;
  for (const auto& part : split(s)) out.push_back(parse_int(part, where));
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& s) {
  std::vector<Scalar> out;
  for (const auto& part : split(s)) out.push_back(Scalar::parse(part));
  return out;
}

json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

std::string form_str(const BinaryForm& f) { return f.to_mpoly().str(kLambdaMu); }

Pencil load_pencil(const Job& job, const std::string& file_key = "pencil", const std::string& case_key = "case") {
  auto file = opt(job, file_key);
  auto row = opt(job, case_key);
  if (file && row) throw_invalid("cli.usage", "--" + file_key + " and --" + case_key + " are exclusive");
  if (file) return pencil_from_json(read_json_file(*file));
  if (row) return normal_form::paper_case(parse_int(*row, "--" + case_key));
  throw_invalid("cli.usage", "a pencil is required: --" + file_key + " FILE or --" + case_key + " N");
}

json symbol_json(const SegreSymbol& s) {
  json j = to_json(s);
  json factors = json::array();
  for (const auto& f : s.factors()) factors.push_back({{"factor", form_str(f.factor)}, {"bracket", f.bracket}});
  j["factors"] = std::move(factors);
  return j;
}

json geometry_json(const SegreSymbol& s) {
  auto report = segre::classify_geometry(s);
  json sing = json::array();
  for (const auto& b : report.singularities) {
    json e{{"bracket", bracket_str(b.bracket)}, {"tabulated", b.tabulated}};
    if (b.tabulated) {
      e["vertex_dim"] = b.vertex_dim;
      e["vertex_meet_x"] = b.vertex_meet_x;
      e["singularity"] = b.singularity;
    }
    sing.push_back(std::move(e));
  }
  return {{"symbol", s.str()},
          {"geometry", segre::geometry_name(report.geometry)},
          {"singularities", std::move(sing)},
          {"semistable", stability::segre_semistable(s)}};
}

json cmd_segre(const Job& job) {
  Pencil p = load_pencil(job);
  std::string method = opt(job, "method").value_or("minors");
  json out;
  auto disc = segre::discriminant(p);
  out["discriminant"] = form_str(disc);
  if (method == "minors" || method == "snf" || method == "jordan") {
    SegreSymbol s = method == "minors" ? segre::segre_symbol(p)
                    : method == "snf"  ? segre::segre_symbol_snf(p)
                                       : segre::segre_symbol_jordan(p);
    out.update(symbol_json(s));
    out["method"] = method;
    return out;
  }
  if (method != "all") throw_invalid("cli.method", "--method must be minors, snf, jordan or all");
  SegreSymbol minors = segre::segre_symbol(p);
  SegreSymbol snf = segre::segre_symbol_snf(p);
  out.update(symbol_json(minors));
  out["method"] = "all";
  json routes{{"minors", minors.str()}, {"snf", snf.str()}};
  bool agree = minors == snf;
  try {
    SegreSymbol jordan = segre::segre_symbol_jordan(p);
    routes["jordan"] = jordan.str();
    agree = agree && jordan == minors;
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::kUnsupported) throw;
    routes["jordan"] = nullptr;
  }
  out["routes"] = std::move(routes);
  out["agree"] = agree;
  return out;
}

json cmd_classify(const Job& job) {
  if (auto sym = opt(job, "symbol")) {
    if (opt(job, "pencil") || opt(job, "case")) throw_invalid("cli.usage", "--symbol excludes a pencil input");
    return geometry_json(SegreSymbol::parse(*sym));
  }
  return geometry_json(segre::segre_symbol(load_pencil(job)));
}

json cmd_normal_form(const Job& job) {
  json out;
  Pencil p = [&] {
    if (auto row = opt(job, "case")) {
      if (opt(job, "symbol") || opt(job, "roots")) throw_invalid("cli.usage", "--case excludes --symbol/--roots");
      const auto& t = normal_form::table73_row(parse_int(*row, "--case"));
      out["case"] = t.n;
      return normal_form::paper_case(t.n);
    }
    auto sym = opt(job, "symbol");
    auto roots = opt(job, "roots");
    if (!sym || !roots) throw_invalid("cli.usage", "normal-form needs --case N or --symbol S --roots r1,...");
    normal_form::RootedSymbol rs{SegreSymbol::parse(*sym).brackets(), parse_scalars(*roots)};
    out["roots"] = scalars_json(rs.roots);
    return normal_form::build_normal_form(rs);
  }();
  out["pencil"] = to_json(p);
  out["symbol"] = segre::segre_symbol(p).str();
  return out;
}

std::vector<int> quadric_weights(const Job& job) {
  if (auto w = opt(job, "weights")) {
    auto r = parse_ints(*w, "--weights");
    if (r.size() != 3) throw_invalid("stability.weights", "--weights takes r1,r2,r3");
    std::vector<int> full{r[0], r[1], r[2], -r[0], -r[1], -r[2]};
    stability::validate_so6_weights(full);
    return full;
  }
  return {stability::kQuadricWitness.begin(), stability::kQuadricWitness.end()};
}

json cmd_stability_quadric(const Job& job) {
  auto weights = quadric_weights(job);
  json out;
  ScalarMatrix Q;
  std::optional<bool> semistable;
  if (auto file = opt(job, "quadric")) {
    if (opt(job, "pencil") || opt(job, "case")) throw_invalid("cli.usage", "--quadric excludes a pencil input");
    json j = read_json_file(*file);
    Q = matrix_from_json(j.is_object() && j.contains("Q") ? j["Q"] : j, "Q");
    if (Q.rows() != kDim || Q.cols() != kDim || !Q.is_symmetric())
      throw_invalid("stability.quadric_shape", "Q: expected a symmetric 6x6 matrix");
  } else {
    Pencil p = load_pencil(job);
    Q = surface::plucker_form(p);
    SegreSymbol s = segre::segre_symbol(p);
    out["symbol"] = s.str();
    semistable = stability::segre_semistable(s);
  }
  int mu = stability::mu_quadric(Q, weights);
  bool pattern = stability::unstable_pattern_quadric(Q);
  // A negative weight is a proof of instability; otherwise only the symbol decides.
  if (mu < 0) semistable = false;
  out["semistable"] = semistable ? json(*semistable) : json(nullptr);
  out["mu"] = mu;
  out["weights"] = weights;
  out["pattern"] = pattern;
  out["witness"] = pattern ? json(stability::kQuadricWitness) : json::array();
  out["quadric_plucker"] = to_json(Q);
  return out;
}

MPoly load_quartic(const Job& job) {
  if (auto file = opt(job, "quartic")) {
    if (opt(job, "pencil") || opt(job, "case")) throw_invalid("cli.usage", "--quartic excludes a pencil input");
    json j = read_json_file(*file);
    MPoly q = mpoly_from_json(j.is_object() && j.contains("terms") ? j["terms"] : j, 4, "quartic");
    stability::validate_quartic(q);
    return q;
  }
  return surface::singular_surface(load_pencil(job));
}

json cmd_stability_quartic(const Job& job) {
  std::vector<int> weights{stability::kQuarticWitness.begin(), stability::kQuarticWitness.end()};
  if (auto w = opt(job, "weights")) {
    weights = parse_ints(*w, "--weights");
    stability::validate_sl4_weights(weights);
  }
  MPoly q = load_quartic(job);
  int mu = stability::mu_quartic(q, weights);
  bool pattern = stability::unstable_pattern_quartic(q);
  json out;
  out["quartic"] = to_json(q);
  out["quartic_text"] = q.str(kX);
  out["mu"] = mu;
  out["weights"] = weights;
  out["pattern"] = pattern;
  out["witness"] = pattern ? json(stability::kQuarticWitness) : json::array();
  out["semistable"] = mu < 0 ? json(false) : json(nullptr);

  if (auto pt = opt(job, "point")) {
    auto p = parse_scalars(*pt);
    if (p.size() != 4) throw_invalid("stability.point", "--point takes four coordinates");
    std::optional<std::vector<Scalar>> r;
    if (auto c = opt(job, "cone-point")) {
      r = parse_scalars(*c);
      if (r->size() != 3) throw_invalid("stability.point", "--cone-point takes three coordinates");
    }
    auto rep = stability::triple_point_report(q, p, r);
    json pj{{"point", scalars_json(p)},
            {"on_surface", rep.on_surface},
            {"triple", rep.is_triple},
            {"tangent_cone", rep.tangent_cone.str(std::vector<std::string>{"u", "v", "w"})}};
    if (rep.r_singular) pj["cone_point_singular"] = *rep.r_singular;
    if (rep.hessian_rank) pj["cone_hessian_rank"] = *rep.hessian_rank;
    if (rep.cusp_at) pj["cusp"] = *rep.cusp_at;
    out["point_report"] = std::move(pj);
  } else if (opt(job, "cone-point")) {
    throw_invalid("cli.usage", "--cone-point requires --point");
  }

  if (flag(job, "search")) {
    auto found = stability::search_triple_points(q);
    json tp = json::array();
    for (const auto& p : found.triple_points) tp.push_back(scalars_json(p));
    json hits = json::array();
    for (const auto& h : found.singular_cone_points)
      hits.push_back({{"point", scalars_json(h.point)},
                      {"cone_point", scalars_json(h.cone_point)},
                      {"hessian_rank", h.hessian_rank}});
    out["search"] = {{"triple_points", std::move(tp)}, {"singular_cone_points", std::move(hits)}, {"cusp", found.has_cusp()}};
  }
  return out;
}

json structure_json(const surface::Structure& st) {
  json planes = json::array();
  for (const auto& [plane, mult] : st.planes) planes.push_back({{"plane", plane.str(kX)}, {"multiplicity", mult}});
  json out{{"kind", surface::structure_name(st.kind)}, {"planes", std::move(planes)}, {"plane_rank", st.plane_rank}};
  if (st.square_root) out["square_root"] = st.square_root->str(kX);
  if (st.kind == surface::StructureKind::kQuadricTimesPlanes || st.kind == surface::StructureKind::kPerfectSquare)
    out["quadric_rank"] = st.quadric_rank;
  if (st.kind == surface::StructureKind::kQuadricTimesPlanes) out["residual"] = st.residual.str(kX);
  return out;
}

json cmd_surface(const Job& job) {
  if (auto frame = opt(job, "klein-frame"); frame && *frame != "default")
    throw_invalid("cli.usage", "--klein-frame supports only 'default'");
  Pencil p = load_pencil(job);
  auto res = surface::singular_surface_full(p);
  return {{"symbol", segre::segre_symbol(p).str()},
          {"quartic", to_json(res.quartic)},
          {"quartic_text", res.quartic.str(kX)},
          {"pivot", {res.pivot.first, res.pivot.second}},
          {"certificate", res.certificate},
          {"structure", structure_json(surface::structural_class(res.quartic))}};
}

json cmd_sigma(const Job& job) {
  Pencil p = load_pencil(job);
  auto s = surface::sigma_surface(p);
  json out{{"G", to_json(s.G)}, {"F", to_json(s.F)}, {"H", to_json(s.H)}};
  if (auto n = opt(job, "points")) {
    int max = parse_int(*n, "--points");
    if (max < 0) throw_invalid("cli.integer", "--points must be nonnegative");
    json pts = json::array();
    for (const auto& x : surface::find_sigma_points(p, 12, 2, static_cast<std::size_t>(max))) {
      json e{{"x", scalars_json(x)}};
      try {
        e["image"] = scalars_json(surface::pi_map(p, x));
      } catch (const Error& err) {
        e["image"] = nullptr;
        e["reason"] = err.code();
      }
      pts.push_back(std::move(e));
    }
    out["points"] = std::move(pts);
  }
  return out;
}

json cmd_stabilizer(const Job& job) {
  Pencil p = load_pencil(job);
  SegreSymbol s = segre::segre_symbol(p);
  int dim = moduli::stabilizer_dim(p);
  int expected = moduli::expected_stabilizer_dim(s);
  return {{"symbol", s.str()}, {"dim", dim}, {"expected", expected}, {"agrees", dim == expected}};
}

json moduli_json(const moduli::ModuliReport& m) {
  json out{{"symbol", m.symbol.str()}, {"r", m.r}, {"r1", m.r1}, {"r2", m.r2}, {"r3", m.r3}, {"in_scope", m.in_scope}};
  if (!m.in_scope) {
    out["verdict"] = m.verdict;
    return out;
  }
  out["dim_stab"] = m.dim_stab;
  out["dim_R"] = m.dim_R;
  out["dim_Mqc"] = m.dim_Mqc;
  out["dim_Mss"] = m.dim_Mss ? json(*m.dim_Mss) : json(nullptr);
  out["dim_fiber"] = m.dim_fiber ? json(*m.dim_fiber) : json(nullptr);
  out["table_row"] = m.table_row ? json(*m.table_row) : json(nullptr);
  return out;
}

json cmd_moduli(const Job& job) {
  auto sym = opt(job, "symbol");
  if (!sym) throw_invalid("cli.usage", "moduli needs --symbol");
  return moduli_json(moduli::moduli_report(SegreSymbol::parse(*sym)));
}

json iso_json(const moduli::IsoResult& r) {
  json out{{"isomorphic", r.isomorphic}};
  if (r.witness)
    out["witness"] = {{"alpha", to_json(r.witness->alpha)},
                      {"beta", to_json(r.witness->beta)},
                      {"a", to_json(r.witness->a())},
                      {"c", to_json(r.witness->c())}};
  else
    out["witness"] = nullptr;
  return out;
}

json mobius_json(const moduli::MobiusResult& r) {
  json out{{"equivalent", r.equivalent}};
  out["witness"] = r.witness ? scalars_json({r.witness->begin(), r.witness->end()}) : json(nullptr);
  return out;
}

json cmd_isomorphic(const Job& job) {
  Pencil a = load_pencil(job, "a", "case-a");
  Pencil b = load_pencil(job, "b", "case-b");
  json out = iso_json(moduli::isomorphic(a, b));
  out["symbol_a"] = segre::segre_symbol(a).str();
  out["symbol_b"] = segre::segre_symbol(b).str();
  return out;
}

json cmd_cosingular(const Job& job) {
  auto lam = opt(job, "lambdas");
  auto rho = opt(job, "rho");
  if (!lam || !rho) throw_invalid("cli.usage", "cosingular needs --lambdas l1,...,l6 and --rho R");
  auto ls = parse_scalars(*lam);
  if (ls.size() != 6) throw_invalid("moduli.lambdas", "--lambdas takes six values");
  moduli::CosingularFamily c{{ls[0], ls[1], ls[2], ls[3], ls[4], ls[5]}, Scalar::parse(*rho)};
  moduli::validate(c);
  Pencil base = moduli::base_pencil(c);
  Pencil member = moduli::cosingular_member(c);
  json out;
  out["lambdas"] = scalars_json(ls);
  out["rho"] = to_json(c.rho);
  out["member"] = to_json(member);
  out["symbol"] = segre::segre_symbol(member).str();
  out["isomorphic_to_base"] = iso_json(moduli::isomorphic(base, member));
  out["mobius_to_base"] = mobius_json(moduli::mobius_equivalent(base, member));

  // The reference map t -> -1/(t - rho) sends the base eigenvalues to minus
  // the member's, which is the same complex after F -> -F.
  moduli::Mobius ref{Scalar(0), Scalar(-1), Scalar(1), -c.rho};
  auto image = moduli::apply_mobius(ref, moduli::diagonal_eigenvalues(base));
  bool ref_ok = false;
  if (image) {
    ScalarMatrix F(kDim, kDim);
    for (std::size_t i = 0; i < kDim; ++i) F(i, i) = -(*image)[i];
    ref_ok = moduli::isomorphic(Pencil(F, member.G()), member).isomorphic;
  }
  out["reference_witness"] = {{"matrix", scalars_json({ref.begin(), ref.end()})}, {"valid", ref_ok}};

  if (flag(job, "verify-phi") || opt(job, "rho-prime")) {
    std::optional<Scalar> subst;
    if (auto rp = opt(job, "rho-prime")) subst = Scalar::parse(*rp);
    out["phi"] = {{"rho_subst", to_json(subst.value_or(c.rho))}, {"valid", moduli::verify_phi(c, subst)}};
  }
  if (auto l = opt(job, "limit")) {
    Scalar rho0 = Scalar::parse(*l);
    Pencil lim = moduli::rho_limit(c, rho0);
    ScalarMatrix expect = base.F() + base.G() * rho0;
    out["limit"] = {{"rho0", to_json(rho0)}, {"pencil", to_json(lim)}, {"equals_F_plus_rho0_G", lim.F() == expect}};
  }
  return out;
}

json cmd_table73(const Job&) {
  json rows = json::array();
  bool all = true;
  for (const auto& t : normal_form::table73()) {
    Pencil p = normal_form::paper_case(t.n);
    SegreSymbol s = segre::segre_symbol(p);
    auto m = moduli::moduli_report(s);
    int stab = moduli::stabilizer_dim(p);
    bool ok = s.str() == t.symbol && m.dim_Mqc == t.dim_mqc && stab == m.dim_stab &&
              m.dim_R - 15 + stab == s.r() - 2;
    all = all && ok;
    rows.push_back({{"n", t.n},
                    {"symbol", t.symbol},
                    {"computed_symbol", s.str()},
                    {"dim_Mqc", t.dim_mqc},
                    {"computed_dim_Mqc", m.dim_Mqc},
                    {"dim_R", m.dim_R},
                    {"dim_stab", stab},
                    {"dim_Mss", t.dim_mss},
                    {"dim_fiber", t.dim_fiber},
                    {"remark", t.remark},
                    {"match", ok}});
  }
  return {{"rows", std::move(rows)}, {"all_match", all}};
}

json cmd_klein_frame(const Job& job) {
  const auto& f = klein::klein_frame();
  json out{{"order", {"p01", "p02", "p03", "p23", "p31", "p12"}},
           {"plucker_quadric", to_json(klein::plucker_quadric())},
           {"check", f.K.transpose() * f.K == klein::plucker_quadric()}};
  if (flag(job, "show")) {
    out["K"] = to_json(f.K);
    out["T"] = to_json(f.T);
  }
  return out;
}

}  // namespace

json dispatch(const Job& job) {
  const std::string& c = job.command;
  if (c == "segre") return cmd_segre(job);
  if (c == "classify") return cmd_classify(job);
  if (c == "normal-form") return cmd_normal_form(job);
  if (c == "stability") return job.subcommand == "quartic" ? cmd_stability_quartic(job) : cmd_stability_quadric(job);
  if (c == "surface") return cmd_surface(job);
  if (c == "sigma") return cmd_sigma(job);
  if (c == "stabilizer") return cmd_stabilizer(job);
  if (c == "moduli") return cmd_moduli(job);
  if (c == "isomorphic") return cmd_isomorphic(job);
  if (c == "cosingular") return cmd_cosingular(job);
  if (c == "table73") return cmd_table73(job);
  if (c == "klein-frame") return cmd_klein_frame(job);
  throw_invalid("cli.command", "unknown command: " + c);
}

}  // namespace qlc::cli
