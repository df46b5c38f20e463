// Restricted root systems with multiplicities and Weyl-group combinatorics.
//
// Roots and Weyl matrices are kept in exact rational arithmetic (Bourbaki
// coordinates); spectral parameters and everything derived from them are
// floating point. Chambers, Phi_w, stabilizers, fixed subspaces and
// invariant-polynomial gradients live here.

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Dense>

namespace itw {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, square

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// ---------------------------------------------------------------------------
// Types

struct RootSystem {
  char type = 'A';
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RatVec> roots;
  std::vector<std::pair<int, int>> mult;  // (p, q) parallel to roots
  std::vector<int> simple;                // indices into roots
  std::vector<int> positive;              // indices of positive roots
  RatMat gram;                            // ambient pairing, SPD

  const RatVec& root(int i) const { return roots[static_cast<size_t>(i)]; }
  int p_of(int i) const { return mult[static_cast<size_t>(i)].first; }
  int q_of(int i) const { return mult[static_cast<size_t>(i)].second; }
};

struct WeylElement {
  RatMat matrix;          // ambient_dim x ambient_dim, orthogonal w.r.t. gram
  std::vector<int> word;  // reduced word in simple-reflection indices

  int length() const { return static_cast<int>(word.size()); }
};

// nu = re + i*im in a*_C, ambient coordinates.
struct SpectralParameter {
  Eigen::VectorXd re;
  Eigen::VectorXd im;

  static SpectralParameter zero(int dim) {
    SpectralParameter nu;
    nu.re = Eigen::VectorXd::Zero(dim);
    nu.im = Eigen::VectorXd::Zero(dim);
    return nu;
  }
  static SpectralParameter real(const Eigen::VectorXd& v) {
    SpectralParameter nu;
    nu.re = v;
    nu.im = Eigen::VectorXd::Zero(v.size());
    return nu;
  }
  static SpectralParameter imaginary(const Eigen::VectorXd& v) {
    SpectralParameter nu;
    nu.re = Eigen::VectorXd::Zero(v.size());
    nu.im = v;
    return nu;
  }
};

constexpr double kEpsChamber = 1e-9;
constexpr double kEpsFix = 1e-9;

// ---------------------------------------------------------------------------
// Exact helpers

inline Rat pair_rat(const RootSystem& rs, const RatVec& u, const RatVec& v) {
  Rat s(0);
  for (int i = 0; i < rs.ambient_dim; ++i)
    for (int j = 0; j < rs.ambient_dim; ++j)
      s += u[static_cast<size_t>(i)] * rs.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] *
           v[static_cast<size_t>(j)];
  return s;
}

inline RatVec rat_negate(const RatVec& v) {
  RatVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

inline RatVec rat_scale(const RatVec& v, const Rat& c) {
  RatVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

inline RatVec mat_apply(const RatMat& m, const RatVec& v) {
  const size_t n = v.size();
  RatVec out(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size();
  RatMat c(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == Rat(0)) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline RatMat rat_identity(int n) {
  RatMat m(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rat(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
  return m;
}

// s_alpha(v) = v - (2<v,alpha>/<alpha,alpha>) alpha
inline RatMat reflection_matrix(const RootSystem& rs, const RatVec& alpha) {
  const int n = rs.ambient_dim;
  const Rat aa = pair_rat(rs, alpha, alpha);
  RatMat m = rat_identity(n);
  for (int j = 0; j < n; ++j) {
    RatVec ej(static_cast<size_t>(n), Rat(0));
    ej[static_cast<size_t>(j)] = Rat(1);
    const Rat c = Rat(2) * pair_rat(rs, ej, alpha) / aa;
    for (int i = 0; i < n; ++i)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= c * alpha[static_cast<size_t>(i)];
  }
  return m;
}

inline int find_root(const RootSystem& rs, const RatVec& v) {
  for (size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.roots[i] == v) return static_cast<int>(i);
  return -1;
}

inline Eigen::VectorXd to_eigen(const RatVec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
  return out;
}

inline Eigen::MatrixXd to_eigen(const RatMat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(i, j) = to_double(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return out;
}

// ---------------------------------------------------------------------------
// Construction

using MultiplicityProfile = std::map<RatVec, std::pair<int, int>>;

namespace detail {

inline RatVec basis_vec(int dim, int i, long long c = 1) {
  RatVec v(static_cast<size_t>(dim), Rat(0));
  v[static_cast<size_t>(i)] = Rat(c);
  return v;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] - b[i];
  return v;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return v;
}

}  // namespace detail

// Standard root systems of type A, B, C, D, G in Bourbaki coordinates.
// All multiplicities default to p = 1, q = 0; a profile may override them,
// and any entry with q > 0 synthesizes the root 2*beta with p_{2beta} = q.
inline RootSystem build_root_system(char type, int rank,
                                    const MultiplicityProfile& profile = {}) {
  using detail::basis_vec;
  using detail::vec_add;
  using detail::vec_sub;

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  if (rank < 1) throw std::invalid_argument("rank must be positive");

  std::vector<RatVec> simple_vecs;
  switch (type) {
    case 'A': {
      rs.ambient_dim = rank + 1;
      for (int i = 0; i < rank + 1; ++i)
        for (int j = 0; j < rank + 1; ++j)
          if (i != j) rs.roots.push_back(vec_sub(basis_vec(rank + 1, i), basis_vec(rank + 1, j)));
      for (int i = 0; i < rank; ++i)
        simple_vecs.push_back(vec_sub(basis_vec(rank + 1, i), basis_vec(rank + 1, i + 1)));
      break;
    }
    case 'B': {
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      rs.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(static_cast<size_t>(rank), Rat(0));
              v[static_cast<size_t>(i)] = Rat(si);
              v[static_cast<size_t>(j)] = Rat(sj);
              rs.roots.push_back(v);
            }
      for (int i = 0; i < rank; ++i) {
        rs.roots.push_back(basis_vec(rank, i));
        rs.roots.push_back(basis_vec(rank, i, -1));
      }
      for (int i = 0; i + 1 < rank; ++i)
        simple_vecs.push_back(vec_sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
      simple_vecs.push_back(basis_vec(rank, rank - 1));
      break;
    }
    case 'C': {
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      rs.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(static_cast<size_t>(rank), Rat(0));
              v[static_cast<size_t>(i)] = Rat(si);
              v[static_cast<size_t>(j)] = Rat(sj);
              rs.roots.push_back(v);
            }
      for (int i = 0; i < rank; ++i) {
        rs.roots.push_back(basis_vec(rank, i, 2));
        rs.roots.push_back(basis_vec(rank, i, -2));
      }
      for (int i = 0; i + 1 < rank; ++i)
        simple_vecs.push_back(vec_sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
      simple_vecs.push_back(basis_vec(rank, rank - 1, 2));
      break;
    }
    case 'D': {
      if (rank < 2) throw std::invalid_argument("type D requires rank >= 2");
      rs.ambient_dim = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              RatVec v(static_cast<size_t>(rank), Rat(0));
              v[static_cast<size_t>(i)] = Rat(si);
              v[static_cast<size_t>(j)] = Rat(sj);
              rs.roots.push_back(v);
            }
      for (int i = 0; i + 1 < rank; ++i)
        simple_vecs.push_back(vec_sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
      simple_vecs.push_back(vec_add(basis_vec(rank, rank - 2), basis_vec(rank, rank - 1)));
      break;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("type G requires rank 2");
      rs.ambient_dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) rs.roots.push_back(vec_sub(basis_vec(3, i), basis_vec(3, j)));
      for (int i = 0; i < 3; ++i) {
        RatVec v(3, Rat(-1));
        v[static_cast<size_t>(i)] = Rat(2);
        rs.roots.push_back(v);
        rs.roots.push_back(rat_negate(v));
      }
      simple_vecs.push_back(vec_sub(basis_vec(3, 0), basis_vec(3, 1)));
      {
        RatVec a2(3, Rat(1));
        a2[0] = Rat(-2);
        rs.roots.push_back(a2);  // already present; dedupe below
        simple_vecs.push_back(a2);
      }
      break;
    }
    default:
      throw std::invalid_argument(std::string("unsupported Cartan type ") + type);
  }

  std::sort(rs.roots.begin(), rs.roots.end());
  rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
  rs.mult.assign(rs.roots.size(), {1, 0});
  rs.gram = rat_identity(rs.ambient_dim);

  for (const auto& sv : simple_vecs) {
    const int idx = find_root(rs, sv);
    if (idx < 0) throw std::logic_error("simple root missing from enumeration");
    rs.simple.push_back(idx);
  }

  // Multiplicity overrides; q > 0 synthesizes the non-reduced root 2*beta.
  std::vector<RatVec> synthesized;
  for (const auto& [v, pq] : profile) {
    const int idx = find_root(rs, v);
    if (idx < 0) throw std::invalid_argument("multiplicity_profile names a non-root");
    rs.mult[static_cast<size_t>(idx)] = pq;
    if (pq.second > 0) {
      synthesized.push_back(rat_scale(v, Rat(2)));
      synthesized.push_back(rat_scale(v, Rat(-2)));
    }
  }
  for (const auto& v : synthesized) {
    if (find_root(rs, v) >= 0) continue;
    const int half = find_root(rs, rat_scale(v, Rat(1, 2)));
    rs.roots.push_back(v);
    rs.mult.push_back({rs.mult[static_cast<size_t>(half)].second, 0});
  }
  // Re-locate simple roots after the append (indices unchanged by push_back).

  // Positivity from the simple system: expand in the simple basis and read the
  // sign. All coefficients of a root share one sign; recover them by exact
  // Gaussian elimination against the simple roots.
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    // Solve sum_k c_k alpha_k = root in the least-squares sense, exactly:
    // the Gram matrix of the simple system is invertible.
    const int r = rs.rank;
    RatMat A(static_cast<size_t>(r), RatVec(static_cast<size_t>(r), Rat(0)));
    RatVec b(static_cast<size_t>(r), Rat(0));
    for (int a = 0; a < r; ++a) {
      for (int c = 0; c < r; ++c)
        A[static_cast<size_t>(a)][static_cast<size_t>(c)] =
            pair_rat(rs, rs.root(rs.simple[static_cast<size_t>(a)]),
                     rs.root(rs.simple[static_cast<size_t>(c)]));
      b[static_cast<size_t>(a)] = pair_rat(rs, rs.root(rs.simple[static_cast<size_t>(a)]), rs.roots[i]);
    }
    // Gaussian elimination.
    for (int col = 0; col < r; ++col) {
      int piv = col;
      while (piv < r && A[static_cast<size_t>(piv)][static_cast<size_t>(col)] == Rat(0)) ++piv;
      if (piv == r) throw std::logic_error("degenerate simple system");
      std::swap(A[static_cast<size_t>(piv)], A[static_cast<size_t>(col)]);
      std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(col)]);
      for (int row = 0; row < r; ++row) {
        if (row == col) continue;
        const Rat f = A[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                      A[static_cast<size_t>(col)][static_cast<size_t>(col)];
        if (f == Rat(0)) continue;
        for (int c2 = 0; c2 < r; ++c2)
          A[static_cast<size_t>(row)][static_cast<size_t>(c2)] -=
              f * A[static_cast<size_t>(col)][static_cast<size_t>(c2)];
        b[static_cast<size_t>(row)] -= f * b[static_cast<size_t>(col)];
      }
    }
    bool pos = true;
    for (int k = 0; k < r; ++k) {
      const Rat c = b[static_cast<size_t>(k)] / A[static_cast<size_t>(k)][static_cast<size_t>(k)];
      if (c < Rat(0)) { pos = false; break; }
    }
    if (pos) rs.positive.push_back(static_cast<int>(i));
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Basic operations

inline bool is_positive_root(const RootSystem& rs, int idx) {
  return std::find(rs.positive.begin(), rs.positive.end(), idx) != rs.positive.end();
}

// Roots beta with beta/2 not a root.
inline std::vector<int> reduced_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (size_t i = 0; i < rs.roots.size(); ++i)
    if (find_root(rs, rat_scale(rs.roots[i], Rat(1, 2))) < 0) out.push_back(static_cast<int>(i));
  return out;
}

// rho = (1/2) sum_{alpha > 0} p_alpha alpha
inline RatVec rho(const RootSystem& rs) {
  RatVec r(static_cast<size_t>(rs.ambient_dim), Rat(0));
  for (int idx : rs.positive) {
    const Rat w(rs.p_of(idx), 2);
    for (int i = 0; i < rs.ambient_dim; ++i)
      r[static_cast<size_t>(i)] += w * rs.root(idx)[static_cast<size_t>(i)];
  }
  return r;
}

// nu_beta = 2<nu, beta> / <beta, beta>
inline std::complex<double> nu_beta(const RootSystem& rs, const SpectralParameter& nu,
                                    const RatVec& beta) {
  const Eigen::MatrixXd g = to_eigen(rs.gram);
  const Eigen::VectorXd b = to_eigen(beta);
  const double bb = b.dot(g * b);
  if (bb <= 0.0) throw std::invalid_argument("nu_beta: beta must be nonzero");
  const double re = 2.0 * nu.re.dot(g * b) / bb;
  const double im = 2.0 * nu.im.dot(g * b) / bb;
  return {re, im};
}

// Full Weyl group by breadth-first closure over simple reflections.
// BFS depth gives a reduced word for each element.
inline std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  if (rs.rank > 6) throw std::invalid_argument("weyl_group: enumeration guarded to rank <= 6");
  std::vector<RatMat> gens;
  for (int s : rs.simple) gens.push_back(reflection_matrix(rs, rs.root(s)));

  std::vector<WeylElement> group;
  std::map<RatMat, int> seen;
  WeylElement id{rat_identity(rs.ambient_dim), {}};
  group.push_back(id);
  seen[id.matrix] = 0;
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      WeylElement next;
      next.matrix = mat_mul(group[static_cast<size_t>(cur)].matrix, gens[gi]);
      if (seen.count(next.matrix)) continue;
      next.word = group[static_cast<size_t>(cur)].word;
      next.word.push_back(static_cast<int>(gi));
      seen[next.matrix] = static_cast<int>(group.size());
      group.push_back(next);
      frontier.push(static_cast<int>(group.size()) - 1);
    }
  }
  return group;
}

inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w{rat_identity(rs.ambient_dim), word};
  for (int s : word) {
    if (s < 0 || s >= rs.rank) throw std::invalid_argument("word index out of range");
    w.matrix = mat_mul(w.matrix, reflection_matrix(rs, rs.root(rs.simple[static_cast<size_t>(s)])));
  }
  return w;
}

// Phi_w = { beta reduced positive : w beta negative }
inline std::vector<int> phi_w(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int idx : reduced_roots(rs)) {
    if (!is_positive_root(rs, idx)) continue;
    const int img = find_root(rs, mat_apply(w.matrix, rs.root(idx)));
    if (img < 0) throw std::logic_error("Weyl matrix does not permute the roots");
    if (!is_positive_root(rs, img)) out.push_back(idx);
  }
  return out;
}

enum class Region { Interior, Closure, Outside };

// Classify Re(nu) against { nu_beta > 0 for beta in Phi_w }.
inline Region chamber_region(const RootSystem& rs, const WeylElement& w,
                             const SpectralParameter& nu) {
  bool interior = true;
  for (int idx : phi_w(rs, w)) {
    const double v = nu_beta(rs, nu, rs.root(idx)).real();
    if (v < -kEpsChamber) return Region::Outside;
    if (v <= kEpsChamber) interior = false;
  }
  return interior ? Region::Interior : Region::Closure;
}

struct Stabilizer {
  std::vector<WeylElement> elements;    // W_1 = Stab_W(im nu)
  std::vector<int> generator_roots;     // roots alpha with <alpha, im nu> = 0
};

// W_1 = { w : w . im(nu) = im(nu) }, with its generating root reflections.
inline Stabilizer stabilizer(const RootSystem& rs, const SpectralParameter& nu_tilde) {
  if (nu_tilde.re.lpNorm<Eigen::Infinity>() > kEpsChamber)
    throw std::invalid_argument("stabilizer: parameter must be purely imaginary");
  Stabilizer st;
  const Eigen::VectorXd v = nu_tilde.im;
  for (const auto& w : weyl_group(rs)) {
    const Eigen::MatrixXd m = to_eigen(w.matrix);
    if ((m * v - v).lpNorm<Eigen::Infinity>() <= kEpsFix) st.elements.push_back(w);
  }
  const Eigen::MatrixXd g = to_eigen(rs.gram);
  for (int idx : rs.positive) {
    const Eigen::VectorXd a = to_eigen(rs.root(idx));
    if (std::abs(a.dot(g * v)) <= kEpsFix) st.generator_roots.push_back(idx);
  }
  return st;
}

// Orthonormal basis of { H in span(roots) : wH = H for all w }.
inline Eigen::MatrixXd fixed_subspace(const RootSystem& rs,
                                      const std::vector<WeylElement>& subgroup) {
  const int n = rs.ambient_dim;
  // Orthonormal basis Q of the root span (the space a* itself).
  Eigen::MatrixXd span(n, static_cast<Eigen::Index>(rs.simple.size()));
  for (size_t k = 0; k < rs.simple.size(); ++k)
    span.col(static_cast<Eigen::Index>(k)) = to_eigen(rs.root(rs.simple[k]));
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
  const Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, static_cast<Eigen::Index>(rs.simple.size()));

  Eigen::MatrixXd stack(static_cast<Eigen::Index>(subgroup.size()) * n, Q.cols());
  for (size_t k = 0; k < subgroup.size(); ++k)
    stack.middleRows(static_cast<Eigen::Index>(k) * n, n) =
        (to_eigen(subgroup[k].matrix) - Eigen::MatrixXd::Identity(n, n)) * Q;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] <= kEpsFix) ++null_dim;
  if (subgroup.empty()) null_dim = static_cast<int>(Q.cols());
  Eigen::MatrixXd basis(n, null_dim);
  for (int k = 0; k < null_dim; ++k)
    basis.col(k) = Q * svd.matrixV().col(svd.matrixV().cols() - null_dim + k);
  return basis;
}

// Deterministic generic direction for the invariant power sums:
// e = rho + sum_k (k+1) * scale * alpha_k.
inline Eigen::VectorXd generic_direction(const RootSystem& rs, int attempt = 0) {
  const double scale = (attempt == 0) ? 1e-3 : 1e-2;
  Eigen::VectorXd e = to_eigen(rho(rs));
  for (size_t k = 0; k < rs.simple.size(); ++k)
    e += static_cast<double>(k + 1) * scale * to_eigen(rs.root(rs.simple[k]));
  return e;
}

// P(lambda) = sum_{w in W} <w lambda, e>^degree  (W-invariant by construction)
inline double invariant_power_sum(const RootSystem& rs, int degree, const Eigen::VectorXd& lambda,
                                  const Eigen::VectorXd& e) {
  const Eigen::MatrixXd g = to_eigen(rs.gram);
  double s = 0.0;
  for (const auto& w : weyl_group(rs)) {
    const double t = (to_eigen(w.matrix) * lambda).dot(g * e);
    s += std::pow(t, degree);
  }
  return s;
}

// Closed-form gradient of the invariant power sum at im(nu_tilde).
inline Eigen::VectorXd invariant_poly_gradient(const RootSystem& rs, int degree,
                                               const SpectralParameter& nu_tilde) {
  if (degree < 1) throw std::invalid_argument("invariant_poly_gradient: degree must be >= 1");
  if (nu_tilde.re.lpNorm<Eigen::Infinity>() > kEpsChamber)
    throw std::invalid_argument("invariant_poly_gradient: parameter must be purely imaginary");
  const Eigen::MatrixXd g = to_eigen(rs.gram);
  const Eigen::VectorXd lambda = nu_tilde.im;
  const auto group = weyl_group(rs);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Eigen::VectorXd e = generic_direction(rs, attempt);
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(rs.ambient_dim);
    for (const auto& w : group) {
      const Eigen::MatrixXd m = to_eigen(w.matrix);
      const double t = (m * lambda).dot(g * e);
      grad += degree * std::pow(t, degree - 1) * (m.transpose() * (g * e));
    }
    const double scale = std::pow(std::max(1.0, lambda.norm()), degree - 1);
    if (grad.norm() > 1e-13 * scale || lambda.norm() <= kEpsFix) return grad;
    // Degenerate at this direction; fall back to the coarser perturbation.
  }
  return Eigen::VectorXd::Zero(rs.ambient_dim);
}

}  // namespace itw
