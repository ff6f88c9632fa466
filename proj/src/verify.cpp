#include "core/verify.hpp"

#include <cmath>

#include <json.hpp>

#include "core/charpoly.hpp"
#include "core/matrep.hpp"
#include "core/rank.hpp"

namespace garank {

namespace {

void add(VerifyReport& rep, std::string name, bool ok, double err = 0.0) {
  rep.checks.push_back({std::move(name), ok, err});
  rep.ok = rep.ok && ok;
}

VerifyReport verify_float(const MvFloat& m, double tol) {
  VerifyReport rep;
  const Signature sig = m.signature();
  const int N = sig.rep_size();
  auto r = Representation<FloatComplex>::build(sig);
  const Matrix<FloatComplex> a = represent(r, m);

  // rank: coefficient cascade vs singular values of beta'(M)
  const RankResult cascaded = rank(m, tol);
  const int oracle_rank = m.norm_approx() <= kZeroNormTol ? 0 : matrix_rank(a);
  add(rep, "rank", cascaded.rank == oracle_rank,
      std::abs(double(cascaded.rank - oracle_rank)));

  // characteristic coefficients (both sides in the same sign convention)
  const CharPoly<FloatComplex> cp = faddeev_leverrier(m);
  const std::vector<FloatComplex> mc = matrix_charpoly(a);
  double scale = 1.0;
  for (const auto& c : mc) scale = std::max(scale, std::abs(c));
  double cerr = 0.0;
  for (int k = 0; k < N; ++k) cerr = std::max(cerr, std::abs(cp.coeffs[k] - mc[k]));
  add(rep, "charpoly", cerr <= 1e-9 * scale, cerr);

  // determinant against an independent elimination route
  const FloatComplex dga = cp.determinant();
  const FloatComplex dmat = matrix_det(a);
  const double derr = std::abs(dga - dmat);
  add(rep, "det", derr <= 1e-9 * std::max(1.0, std::abs(dmat)), derr);

  // Hermitian conjugation consistency beta'(M†) = beta'(M)†
  const double herr = represent(r, m.hermitian_conjugation()).max_abs_diff(a.conjugate_transpose());
  add(rep, "hermitian_bridge", herr <= 1e-12 * std::max(1.0, a.max_abs()), herr);

  // representation round trip
  const double rterr = (unrepresent(r, a) - m).norm_approx();
  add(rep, "unrepresent_round_trip", rterr <= 1e-9 * std::max(1.0, m.norm_approx()), rterr);

  // inverse contract when comfortably invertible
  const double nrm = m.norm_approx();
  if (nrm > kZeroNormTol) {
    const MvFloat unit = m.scaled(FloatComplex{1.0 / nrm, 0.0});
    if (std::abs(determinant(unit)) >= 10 * kSingularDetTol) {
      const MvFloat inv = inverse(m);
      const MvFloat id = MvFloat::scalar(sig, {1.0, 0.0});
      const double ierr =
          std::max((m * inv - id).norm_approx(), (inv * m - id).norm_approx());
      add(rep, "inverse", ierr <= 1e-9, ierr);
    }
  }

  // SVD reconstruction
  const GASvd<FloatComplex> f = svd_ga(r, m);
  const MvFloat recon = f.u * f.sigma * f.v.hermitian_conjugation();
  const double serr = (recon - m).norm_approx();
  add(rep, "svd_reconstruction", serr <= 1e-9 * std::max(1.0, nrm), serr);

  return rep;
}

VerifyReport verify_exact(const MvExact& m, double) {
  VerifyReport rep;
  const Signature sig = m.signature();
  const int N = sig.rep_size();
  auto r = Representation<GaussianRational>::build(sig);
  const Matrix<GaussianRational> a = represent(r, m);

  const RankResult cascaded = rank(m);
  const int oracle_rank = matrix_rank(a);
  add(rep, "rank", cascaded.rank == oracle_rank,
      std::abs(double(cascaded.rank - oracle_rank)));

  const CharPoly<GaussianRational> cp = faddeev_leverrier(m);
  const std::vector<GaussianRational> mc = matrix_charpoly(a);
  bool coeffs_ok = true;
  for (int k = 0; k < N; ++k) coeffs_ok = coeffs_ok && cp.coeffs[k] == mc[k];
  add(rep, "charpoly", coeffs_ok);

  add(rep, "det", cp.determinant() == matrix_det(a));

  add(rep, "hermitian_bridge",
      represent(r, m.hermitian_conjugation()) == a.conjugate_transpose());

  add(rep, "unrepresent_round_trip", unrepresent(r, a) == m);

  if (!scalar_traits<GaussianRational>::is_zero(cp.determinant())) {
    const MvExact inv = inverse(m);
    const MvExact id = MvExact::scalar(sig, scalar_traits<GaussianRational>::one());
    add(rep, "inverse", m * inv == id && inv * m == id);
  }
  return rep;
}

}  // namespace

VerifyReport verify_against_oracle(const AnyMultivector& m, double tol) {
  if (m.mode() == Mode::exact) return verify_exact(m.as_exact(), tol);
  return verify_float(m.as_float(), tol);
}

std::string verify_report_to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"error", c.error}});
  return nlohmann::json{{"ok", report.ok}, {"checks", std::move(checks)}}.dump();
}

}  // namespace garank
