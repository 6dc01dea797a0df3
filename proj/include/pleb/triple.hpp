#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "pleb/exact.hpp"
#include "pleb/tensor.hpp"

namespace pleb {

// A perfect triple of 2-forms on R^4 together with everything derived from
// it: the metric it determines, the inverse metric, the volume factor, the
// index-raised copies of the forms, and an orthonormal basis of the 9-dim
// space of symmetric g-tracefree (0,2) tensors (used as fiber coordinates
// by all the first-order operators).
//
// The scalar type is double for numerics and RootTwo for the exact paths;
// both share identical conventions so results can be compared entrywise.
template <typename T>
struct PerfectTripleT {
  std::array<Mat4<T>, 3> sigma;     // Sigma^i_{mu nu}, antisymmetric
  Mat4<T> g;                        // metric, lower indices
  Mat4<T> ginv;                     // inverse metric
  T vol;                            // volume factor: eps_{0123} = vol
  std::array<Mat4<T>, 3> sigma_ud;  // Sigma^i_mu{}^nu = Sigma^i_{mu a} g^{a nu}
  std::array<Mat4<T>, 3> sigma_uu;  // Sigma^{i mu nu}
  std::array<Mat4<T>, 9> hbasis;    // orthonormal basis of Sym^2_0, lower indices

  // eps_{mu nu rho si} = eps_lo() * sign(perm), eps^{...} = eps_up() * sign
  T eps_lo() const { return vol; }
  T eps_up() const { return T(1) / vol; }
};

using PerfectTriple = PerfectTripleT<double>;
using PerfectTripleQ = PerfectTripleT<RootTwo>;

enum class TripleError {
  Ok = 0,
  NotPerfect,     // wedge products fail Sigma^i ^ Sigma^j = 2 delta^{ij} v
  NotRiemannian,  // determined metric is not positive definite
  Degenerate,     // determined tensor has non-positive determinant
};

const char* triple_error_name(TripleError e);

struct TripleException : std::runtime_error {
  TripleError code;
  TripleException(TripleError c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

// Compute ginv, index-raised sigmas, and basic consistency from sigma/g/vol,
// which must already be set. Does not touch hbasis.
template <typename T>
void fill_derived(PerfectTripleT<T>& t) {
  t.ginv = mat4_inverse(t.g);
  for (int i = 0; i < 3; ++i) {
    t.sigma_ud[i] = mat4_mul(t.sigma[i], t.ginv);
    t.sigma_uu[i] = mat4_mul(t.ginv, t.sigma_ud[i]);
  }
}

// The reference triple on flat R^4 (identity metric, vol = 1):
//   Sigma^1 = e1^e2 + e3^e4, Sigma^2 = e1^e4 + e2^e3, Sigma^3 = e1^e3 + e4^e2.
// Its hbasis lives in Q(sqrt2), so the exact and numeric copies agree
// entry-for-entry.
PerfectTripleQ standard_triple_exact();
PerfectTriple standard_triple();

PerfectTriple to_numeric(const PerfectTripleQ& t);

// Pull back a triple along an invertible, orientation-preserving linear map:
// sigma' = M^T sigma M, g' = M^T g M, vol' = det(M) vol. The hbasis is
// re-orthonormalized numerically. Throws on det(M) <= 0.
PerfectTriple gl4_pullback(const PerfectTriple& t, const Mat4<double>& m);

// Rebuild hbasis for an arbitrary metric by Gram-Schmidt over projected
// seed tensors; the standard metric reproduces the exact basis.
void build_hbasis(PerfectTriple& t);

struct MetricResult {
  TripleError error = TripleError::Ok;
  PerfectTriple triple;     // valid iff error == Ok
  double wedge_residual = 0.0;  // max | Sigma^i^Sigma^j - 2 delta^{ij} v |
};

// Recover (g, vol) from three 2-forms via the triple-product formula
//   g_{mu nu} v = -(1/12) eps^{ijk} Sigma^i_{mu a} Sigma^j_{nu b}
//                 Sigma^k_{c d} tilde-eps^{a b c d}
// (weight fixed by the orientation conventions above; see triple.cpp),
// then validate perfectness and signature.
MetricResult metric_from_triple(const std::array<Mat4<double>, 3>& sigma,
                                double tol = 1e-9);

// Named residuals for the identity suite; each is a max-abs-difference
// over all free indices, so 0 means the identity holds exactly.
struct AlgebraResiduals {
  double wedge;            // Sigma^i ^ Sigma^j = 2 delta^{ij} v
  double urbantke;         // triple-product formula reproduces g * v
  double quaternion;       // Sigma^i Sigma^j = -delta^{ij} + eps^{ijk} Sigma^k
  double sigma_sigma;      // Sigma^i_{mu nu} Sigma^i_{rho si} = gg - gg + eps
  double sigma_sigma_eps_a;  // eps^{ijk} Sigma^j Sigma^k = 2 Sigma^i (matrix form)
  double sigma_sigma_eps_b;  // Sigma^i x Sigma^j antisym part = eps^{ijk} Sigma^k
  double contraction;      // Sigma^{i mu nu} Sigma^i_{nu beta} = -3 delta
  double self_dual;        // (1/2) eps_{mu nu}{}^{rho si} Sigma_{rho si} = Sigma
  double max() const;
};

AlgebraResiduals algebra_residuals(const PerfectTriple& t);

// JSON fixture I/O: {"sigma": [3][4][4], "metric": [4][4], "volume": v}.
// Loading validates perfectness and throws TripleException on failure.
PerfectTriple load_triple_json(const std::string& path);
void save_triple_json(const PerfectTriple& t, const std::string& path);

}  // namespace pleb
