#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wgcoe/coe.hpp"
#include "wgcoe/exact/rational.hpp"

namespace wgcoe::mc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

// Independent generator for batch `stream` of a run seeded with `seed`
// (both words mixed through SplitMix64).
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

enum class PhaseCorrection { on, off };

// Haar unitary: QR of a complex Ginibre matrix (entries with E|z|^2 = 1),
// then Q diag(r_kk / |r_kk|). PhaseCorrection::off returns the raw Q, which
// is not Haar distributed.
ComplexMatrix sample_haar_unitary(int N, Rng& rng, PhaseCorrection phase = PhaseCorrection::on);

// The first m columns of a Haar unitary of size N (thin QR of N x m Ginibre).
ComplexMatrix sample_haar_columns(int N, int m, Rng& rng);

// Haar orthogonal: QR of a real Ginibre matrix with sign correction.
RealMatrix sample_haar_orthogonal(int N, Rng& rng);
RealMatrix sample_orthogonal_columns(int N, int m, Rng& rng);

// V = U^T U for a Haar unitary U.
ComplexMatrix sample_coe(int N, Rng& rng);

// max |A^* A - I| over the columns present; max |v_ij - v_ji|.
double unitarity_residual(const ComplexMatrix& u);
double orthogonality_residual(const RealMatrix& o);
double symmetry_residual(const ComplexMatrix& v);

enum class Ensemble { cue, coe, orthogonal };

std::string to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& text);

struct Entry {
  int row = 1, col = 1;  // 1-based
  bool operator==(const Entry&) const = default;
};

/// A monomial prod plain * conj(prod conjugated) in matrix entries, or one
/// of the degree-2 COE trace moments.
struct MomentSpec {
  Ensemble ensemble = Ensemble::coe;
  std::vector<Entry> plain, conjugated;
  std::optional<coe::TraceMoment> trace;

  // "1:2,1:2|1:1,2:2" (factors before '|' plain, after it conjugated),
  // or "tr4" / "tr2sq" / "mixed" for the COE traces.
  static MomentSpec parse(Ensemble ensemble, const std::string& text);
  std::string to_string() const;
  int max_index() const;
};

// Exact expectation when the engine can supply it: CUE and COE monomials
// within the exact limits, COE traces, and powers of a single orthogonal
// entry. nullopt otherwise.
std::optional<exact::BigRational> exact_value(const MomentSpec& spec, long N);

struct EstimateReport {
  MomentSpec target;
  long N = 0;
  std::uint64_t samples = 0;
  Complex mean;
  double stderr_ = 0;  // sqrt(E|X - mean|^2 / samples)
  std::optional<exact::BigRational> exact;
  std::optional<double> z_score;  // |mean - exact| / stderr
  std::uint64_t seed = 0;
};

struct EstimateOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  bool check_residuals = false;  // throw if a sampled matrix fails the unitarity/symmetry gates
  unsigned threads = 0;          // 0: hardware concurrency
};

inline constexpr std::uint64_t kMinSamples = 1000;
inline constexpr std::uint64_t kBatchSize = 4096;
inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;

// All specs share one ensemble and are evaluated on the same matrices.
// Batches of kBatchSize samples use make_stream(seed, batch) and are merged
// in batch order, so reports are identical for any thread count.
std::vector<EstimateReport> estimate_moments(const std::vector<MomentSpec>& specs, long N,
                                             const EstimateOptions& options);
EstimateReport estimate_moment(const MomentSpec& spec, long N, const EstimateOptions& options);

struct GaussianLimitRow {
  long N = 0;
  exact::BigRational exact_rescaled;  // (N/2)^n E|v_11|^{2n} or N^n E|v_12|^{2n}
  double relative_gap = 0;            // |exact_rescaled - n!| / n!
  std::optional<EstimateReport> estimate;  // rescaled Monte Carlo, when samples > 0
};

// Rescaled moments approaching n!, the moment of a standard complex Gaussian.
std::vector<GaussianLimitRow> gaussian_limit_check(coe::Entry entry, int n, const std::vector<long>& Ns,
                                                   std::uint64_t samples, std::uint64_t seed);

}  // namespace wgcoe::mc
