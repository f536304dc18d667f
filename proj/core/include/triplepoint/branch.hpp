#pragma once

#include <array>
#include <complex>
#include <optional>

#include "triplepoint/qnum.hpp"

namespace triplepoint {

using Complex = std::complex<double>;

/// Sign of Im tau. The two choices are gauge-conjugate and give conjugate
/// rotational eigenvalues.
enum class ImSign : int { Positive = 1, Negative = -1 };

struct Phases {
  Complex sigma;
  Complex tau;
};

/// Solves 1 + sigma p + tau q = 0 for unit-modulus sigma, tau given p >= q > 0.
/// Re tau = (p^2 - q^2 - 1) / (2q) must lie in [-1, 1]; values within
/// ctx.tol() of +-1 are put on the boundary. Throws NoUnitaryPhase otherwise.
Phases solve_phases(const QuantumContext& ctx, int n, double p, double q,
                    ImSign im_sign = ImSign::Positive);

/// The 3x3 branch matrix at the initial triple point in diagrammatic gauge:
///
///   1/[n]                     sqrt([n-1] p)          sqrt([n-1] q)
///   sqrt([n-1]/([2][n]))      sigma sqrt(p/([2][n]))  tau sqrt(q/([2][n]))
///   sqrt([n-1][n+2]/([2][n]^2))   ?                      ?
///
/// Entries (3,2) and (3,3) are not determined by the dimension data and are
/// left empty.
class BranchMatrix {
 public:
  int n() const noexcept { return n_; }
  const QuantumContext& context() const noexcept { return ctx_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  Complex sigma() const noexcept { return phases_.sigma; }
  Complex tau() const noexcept { return phases_.tau; }
  ImSign im_sign() const noexcept { return im_sign_; }

  /// 1-based (row, col); empty for the two unknown entries.
  std::optional<Complex> entry(int row, int col) const;

  /// First row and column real and strictly positive: the characterisation
  /// of the diagrammatic representative within its gauge class.
  bool is_diagrammatic_gauge() const;

 private:
  friend BranchMatrix build_branch_matrix(const QuantumContext&, int, double, double, ImSign);
  BranchMatrix(const QuantumContext& ctx) : ctx_(ctx) {}

  int n_ = 0;
  QuantumContext ctx_;
  double p_ = 0.0;
  double q_ = 0.0;
  Phases phases_;
  ImSign im_sign_ = ImSign::Positive;
  std::array<std::optional<Complex>, 9> entries_;
};

BranchMatrix build_branch_matrix(const QuantumContext& ctx, int n, double p, double q,
                                 ImSign im_sign = ImSign::Positive);

/// Image of the perpendicular vector (0, sqrt q, -sqrt p). Only c1 and c2
/// are computable from the known entries.
struct PerpImage {
  Complex c1;
  Complex c2;
  std::optional<Complex> c3;
};

PerpImage apply_to_perp_vector(const BranchMatrix& u);

/// Rotational eigenvalue read off the middle coordinate of the perpendicular
/// image: c2 = sqrt(lambda) sqrt([n+2]/[2]). Requires p + q = [n+1]
/// (DimensionSumMismatch otherwise).
Complex extract_lambda(const BranchMatrix& u);

}  // namespace triplepoint
