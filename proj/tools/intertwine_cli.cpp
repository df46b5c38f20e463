// Batch front end: sweeps, verifications and single evaluations over the
// root-system / c-function / SL2 machinery. Output is deterministic JSON
// (sorted keys, 17 significant digits) or fixed-dialect CSV; the exit code
// is 0 exactly when every verdict in the run is PASS.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intertwine/cfun.hpp"
#include "intertwine/csv.hpp"
#include "intertwine/jsonw.hpp"
#include "intertwine/liegroup.hpp"
#include "intertwine/ratfun.hpp"
#include "intertwine/rootsys.hpp"
#include "intertwine/serialize.hpp"
#include "intertwine/sl2.hpp"

using namespace itw;

namespace {

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

// "re:im,re:im,..." (":im" optional)
std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto colon = tok.find(':');
    if (colon == std::string::npos)
      out.emplace_back(std::stod(tok), 0.0);
    else
      out.emplace_back(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
  }
  return out;
}

struct Range {
  double lo = 0, hi = 0, step = 1;
};

// "lo:hi:step"
Range parse_range(const std::string& s) {
  Range r;
  std::stringstream ss(s);
  std::string tok;
  std::getline(ss, tok, ':');
  r.lo = std::stod(tok);
  std::getline(ss, tok, ':');
  r.hi = std::stod(tok);
  std::getline(ss, tok, ':');
  r.step = std::stod(tok);
  if (r.step <= 0 || r.hi < r.lo) throw CLI::ValidationError("bad range " + s);
  return r;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream os(out_path, std::ios::binary);
    os << text;
  }
}

jsonw::Value complex_json(Complex z) {
  jsonw::Object o;
  o["re"] = z.real();
  o["im"] = z.imag();
  return o;
}

jsonw::Value sym_json(const SymValue& v) {
  jsonw::Object o;
  o["kind"] = sym_kind_name(v.kind);
  if (v.is_finite()) {
    o["re"] = v.value.real();
    o["im"] = v.value.imag();
  }
  return o;
}

jsonw::Value vector_json(const Eigen::VectorXd& v) {
  jsonw::Array a;
  for (Eigen::Index i = 0; i < v.size(); ++i) a.emplace_back(v[i]);
  return a;
}

SpectralParameter parse_parameter(const RootSystem& rs, const std::string& re_s,
                                  const std::string& im_s) {
  SpectralParameter nu = SpectralParameter::zero(rs.ambient_dim);
  auto fill = [&rs](Eigen::VectorXd& dst, const std::string& s) {
    if (s.empty()) return;
    const auto vals = parse_doubles(s);
    if (static_cast<int>(vals.size()) != rs.ambient_dim)
      throw CLI::ValidationError("expected " + std::to_string(rs.ambient_dim) + " coordinates");
    for (size_t i = 0; i < vals.size(); ++i) dst[static_cast<Eigen::Index>(i)] = vals[i];
  };
  fill(nu.re, re_s);
  fill(nu.im, im_s);
  return nu;
}

int g_failures = 0;

std::string verdict_of(bool pass) {
  if (!pass) ++g_failures;
  return pass ? "PASS" : "FAIL";
}

// ---------------------------------------------------------------------------

void cmd_roots(char type, int rank, const std::string& out) {
  const auto rs = build_root_system(type, rank);
  const auto group = weyl_group(rs);
  jsonw::Object o;
  o["root_system"] = root_system_json(rs);
  bool lengths_ok = true;
  jsonw::Array elems;
  for (const auto& w : group) {
    jsonw::Object e;
    jsonw::Array word;
    for (int s : w.word) word.emplace_back(s);
    e["word"] = std::move(word);
    e["length"] = w.length();
    const auto phi = phi_w(rs, w);
    jsonw::Array phis;
    for (int idx : phi) phis.emplace_back(idx);
    e["phi_w"] = std::move(phis);
    if (phi.size() != static_cast<size_t>(w.length())) lengths_ok = false;
    elems.push_back(std::move(e));
  }
  o["weyl_group"] = std::move(elems);
  o["order"] = static_cast<long long>(group.size());
  o["verdict"] = verdict_of(lengths_ok);
  emit(jsonw::Value(o).dump(), out);
}

void cmd_cfun(char type, int rank, const std::string& word_s, const std::string& re_s,
              const std::string& im_s, const std::string& out) {
  const auto rs = build_root_system(type, rank);
  const auto w = weyl_from_word(rs, parse_ints(word_s));
  const auto nu = parse_parameter(rs, re_s, im_s);
  const auto val = r_function(rs, w, nu);
  jsonw::Object o;
  jsonw::Array factors;
  for (const auto& f : val.factors) {
    jsonw::Object fo;
    fo["root_index"] = f.root_index;
    fo["p"] = f.p;
    fo["q"] = f.q;
    fo["nu_beta"] = complex_json(f.nu_b);
    fo["value"] = sym_json(f.value);
    factors.push_back(std::move(fo));
  }
  o["factors"] = std::move(factors);
  o["value"] = sym_json(val.value);
  o["flags"] = jsonw::Value(sym_kind_name(val.value.kind));
  o["verdict"] = verdict_of(val.value.is_finite() && std::abs(val.value.value) > 0.0);
  emit(jsonw::Value(o).dump(), out);
}

void cmd_sl2_verify(const Range& re_r, const Range& im_r, int m_max, const std::string& out,
                    const std::string& format) {
  std::vector<Complex> grid;
  for (double re = re_r.lo; re <= re_r.hi + 1e-12; re += re_r.step)
    for (double im = im_r.lo; im <= im_r.hi + 1e-12; im += im_r.step) grid.emplace_back(re, im);
  const auto rep = sl2::verify_bound(grid, m_max);

  // Quadrature-vs-closed-form spot checks.
  double quad_err = 0.0;
  for (Complex z : {Complex(0.5, 0), Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(1, 5),
                    Complex(2, 10)}) {
    for (int m = 0; m <= 8; ++m) {
      const auto cf = sl2::closed_form_eigenvalue(z, m);
      const Complex q = sl2::kernel_apply(z, m);
      if (cf.kind == SymKind::Zero)
        quad_err = std::max(quad_err, std::abs(q));
      else if (cf.is_finite())
        quad_err = std::max(quad_err, std::abs(q - cf.value) / std::abs(cf.value));
    }
  }

  const bool pass = rep.pass && quad_err <= 1e-8;
  if (format == "csv") {
    std::ostringstream os;
    csv::Writer w(os, {"m", "sup_abs_c", "flag"});
    for (int m = 0; m <= m_max; ++m)
      w.row()
          .field(m)
          .field(rep.sup_per_m[static_cast<size_t>(m)])
          .field(rep.sup_per_m[static_cast<size_t>(m)] <= 1.0 + 1e-12 ? std::string("ok")
                                                                      : std::string("exceeds"));
    emit(os.str(), out);
    if (!pass) ++g_failures;
  } else {
    jsonw::Object o;
    o["grid_points"] = rep.grid_points;
    o["m_max"] = m_max;
    jsonw::Array per_m;
    for (double s : rep.sup_per_m) per_m.emplace_back(s);
    o["sup_per_m"] = std::move(per_m);
    o["sup"] = rep.sup;
    o["argmax"] = complex_json(rep.argmax);
    o["argmax_m"] = rep.argmax_m;
    o["quad_max_rel_err"] = quad_err;
    o["verdict"] = verdict_of(pass);
    emit(jsonw::Value(o).dump(), out);
  }
}

void cmd_sl2_eval(double re, double im, int m, const std::string& out) {
  const Complex z(re, im);
  jsonw::Object o;
  o["z"] = complex_json(z);
  o["m"] = m;
  o["closed_form_eigenvalue"] = sym_json(sl2::closed_form_eigenvalue(z, m));
  o["r"] = sym_json(sl2::r_sl2(z));
  const Complex c = sl2::normalized_coeff(z, m);
  o["normalized_coeff"] = complex_json(sl2::sign_convention(m) * c);
  o["abs_coeff"] = std::abs(c);
  if (re >= 0.05) o["kernel_quadrature"] = complex_json(sl2::kernel_apply(z, m));
  o["verdict"] = verdict_of(true);
  emit(jsonw::Value(o).dump(), out);
}

void cmd_maxmod(int m, const std::string& num_s, const std::string& den_s, double t_max,
                const std::string& out) {
  RationalFunction f;
  if (m >= 0) {
    f = sl2::normalized_coeff_ratfun(m);
  } else {
    f.num = parse_complex_list(num_s);
    f.den = parse_complex_list(den_s);
    if (f.den.empty()) throw CLI::ValidationError("maxmod needs --m or --num/--den");
  }
  const auto rep = max_principle_check(f, -t_max, t_max);
  jsonw::Object o;
  jsonw::Array pole_arr;
  for (const auto& p : rep.pole_list) pole_arr.push_back(complex_json(p));
  o["poles"] = std::move(pole_arr);
  o["s_axis"] = rep.s_axis;
  o["s_half"] = rep.s_half;
  o["worst_point"] = complex_json(rep.worst_point);
  o["verdict_detail"] = verdict_name(rep.verdict);
  o["verdict"] = verdict_of(rep.verdict == MaxPrincipleVerdict::Consistent);
  emit(jsonw::Value(o).dump(), out);
}

void cmd_lift_geometry(char type, int rank, const std::string& im_s, const std::string& out) {
  const auto rs = build_root_system(type, rank);
  const auto nu = parse_parameter(rs, "", im_s);
  const auto st = stabilizer(rs, nu);
  const auto basis = fixed_subspace(rs, st.elements);

  jsonw::Object o;
  o["stabilizer_order"] = static_cast<long long>(st.elements.size());
  jsonw::Array gens;
  for (int idx : st.generator_roots) gens.push_back(rat_vec_json(rs.root(idx)));
  o["w1_generator_roots"] = std::move(gens);
  o["dim_fixed_subspace"] = static_cast<long long>(basis.cols());
  jsonw::Array bas;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) bas.push_back(vector_json(basis.col(c)));
  o["fixed_subspace_basis"] = std::move(bas);

  // Gradients of invariant power sums must land in the fixed subspace.
  bool pass = true;
  jsonw::Array resids;
  for (int degree : {2, 3, 4, 5, 6}) {
    const auto grad = invariant_poly_gradient(rs, degree, nu);
    Eigen::VectorXd proj = Eigen::VectorXd::Zero(rs.ambient_dim);
    if (basis.cols() > 0) proj = basis * (basis.transpose() * grad);
    const double resid = (grad - proj).norm() / std::max(1.0, grad.norm());
    jsonw::Object r;
    r["degree"] = degree;
    r["residual"] = resid;
    resids.push_back(std::move(r));
    if (resid > 1e-10) pass = false;
  }
  o["gradient_residuals"] = std::move(resids);
  o["verdict"] = verdict_of(pass);
  emit(jsonw::Value(o).dump(), out);
}

void cmd_iwasawa(int n, unsigned long long seed, const std::string& out) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  double det = 0;
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
    det = g.determinant();
  } while (std::abs(det) < 1e-3);
  if (det < 0) g.row(0) *= -1.0;
  g /= std::pow(std::abs(det), 1.0 / n);

  const auto f = lie::iwasawa_nak(g);
  const double resid = (f.reconstruct() - g).lpNorm<Eigen::Infinity>();
  jsonw::Object o;
  jsonw::Array gm;
  for (int i = 0; i < n; ++i) gm.push_back(vector_json(g.row(i)));
  o["g"] = std::move(gm);
  jsonw::Array nm;
  for (int i = 0; i < n; ++i) nm.push_back(vector_json(f.n.row(i)));
  o["n"] = std::move(nm);
  o["a_log"] = vector_json(f.a_log);
  jsonw::Array km;
  for (int i = 0; i < n; ++i) km.push_back(vector_json(f.k.row(i)));
  o["k"] = std::move(km);
  o["residual"] = resid;
  o["verdict"] = verdict_of(resid <= 1e-12 * std::max(1.0, g.lpNorm<Eigen::Infinity>()));
  emit(jsonw::Value(o).dump(), out);
}

void cmd_separation(int n, const std::string& im_s, int pairs, unsigned long long seed,
                    const std::string& out, const std::string& format) {
  const auto coords = parse_doubles(im_s);
  if (static_cast<int>(coords.size()) != n)
    throw CLI::ValidationError("separation: --im needs n coordinates");
  Eigen::VectorXd nu(n);
  for (int i = 0; i < n; ++i) nu[i] = coords[static_cast<size_t>(i)];
  const auto rep = lie::separation_sweep(n, nu, pairs, seed);
  if (format == "csv") {
    std::ostringstream os;
    csv::Writer w(os, {"pair", "best_gap"});
    for (const auto& [idx, gap] : rep.failures) w.row().field(idx).field(gap);
    emit(os.str(), out);
    if (!rep.pass()) ++g_failures;
  } else {
    jsonw::Object o;
    o["pairs_sampled"] = rep.pairs_sampled;
    o["pairs_tested"] = rep.pairs_tested;
    o["same_coset_skipped"] = rep.same_coset_skipped;
    o["failures"] = static_cast<long long>(rep.failures.size());
    o["verdict"] = verdict_of(rep.pass());
    emit(jsonw::Value(o).dump(), out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intertwining-operator calculus workbench"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file");

  std::string type_s = "A", word_s, re_s, im_s, out_path, format = "json";
  std::string grid_s = "0:5:0.1,-50:50:0.5";
  std::string num_s, den_s;
  int rank = 2, m_max = 64, m = -1, n = 3, pairs = 100;
  double re = 1.0, im = 0.0, t_max = 60.0;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* roots = app.add_subcommand("roots", "root system and Weyl group dump");
  roots->add_option("--type", type_s)->required();
  roots->add_option("--rank", rank)->required();
  add_common(roots);

  auto* cfun = app.add_subcommand("cfun", "c-function factors and value");
  cfun->add_option("--type", type_s)->required();
  cfun->add_option("--rank", rank)->required();
  cfun->add_option("--word", word_s, "comma-separated simple reflection indices");
  cfun->add_option("--re", re_s, "Re(nu) ambient coordinates");
  cfun->add_option("--im", im_s, "Im(nu) ambient coordinates");
  add_common(cfun);

  auto* sl2v = app.add_subcommand("sl2-verify", "operator-norm bound sweep");
  sl2v->add_option("--grid", grid_s, "re_lo:re_hi:re_step,im_lo:im_hi:im_step");
  sl2v->add_option("--m-max", m_max);
  add_common(sl2v);

  auto* sl2e = app.add_subcommand("sl2-eval", "single coefficient evaluation");
  sl2e->add_option("--re", re)->required();
  sl2e->add_option("--im", im);
  sl2e->add_option("--m", m_max)->default_val(0);
  add_common(sl2e);

  auto* maxmod = app.add_subcommand("maxmod", "max-principle check of a rational function");
  maxmod->add_option("--m", m, "SL2 mode index (uses c_2m)");
  maxmod->add_option("--num", num_s, "numerator coefficients re:im,...");
  maxmod->add_option("--den", den_s, "denominator coefficients re:im,...");
  maxmod->add_option("--t-max", t_max, "axis sample range [-t,t]");
  add_common(maxmod);

  auto* lift = app.add_subcommand("lift-geometry", "stabilizer, fixed subspace, gradients");
  lift->add_option("--type", type_s)->required();
  lift->add_option("--rank", rank)->required();
  lift->add_option("--im", im_s, "Im(nu~) ambient coordinates")->required();
  add_common(lift);

  auto* iwa = app.add_subcommand("iwasawa", "NAK factorization of a seeded SL_n sample");
  iwa->add_option("--n", n);
  iwa->add_option("--seed", seed);
  add_common(iwa);

  auto* sep = app.add_subcommand("separation", "p_X separation sweep on SO(n) pairs");
  sep->add_option("--n", n);
  sep->add_option("--im", im_s, "Im(nu~) diagonal coordinates (trace zero)")->required();
  sep->add_option("--pairs", pairs);
  sep->add_option("--seed", seed);
  add_common(sep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) cmd_roots(type_s.at(0), rank, out_path);
    if (cfun->parsed()) cmd_cfun(type_s.at(0), rank, word_s, re_s, im_s, out_path);
    if (sl2v->parsed()) {
      const auto comma = grid_s.find(',');
      if (comma == std::string::npos) throw CLI::ValidationError("bad --grid");
      cmd_sl2_verify(parse_range(grid_s.substr(0, comma)), parse_range(grid_s.substr(comma + 1)),
                     m_max, out_path, format);
    }
    if (sl2e->parsed()) cmd_sl2_eval(re, im, m_max, out_path);
    if (maxmod->parsed()) cmd_maxmod(m, num_s, den_s, t_max, out_path);
    if (lift->parsed()) cmd_lift_geometry(type_s.at(0), rank, im_s, out_path);
    if (iwa->parsed()) cmd_iwasawa(n, seed, out_path);
    if (sep->parsed()) cmd_separation(n, im_s, pairs, seed, out_path, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return g_failures == 0 ? 0 : 1;
}
