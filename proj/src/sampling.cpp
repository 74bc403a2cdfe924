#include "wgcoe/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "wgcoe/errors.hpp"
#include "wgcoe/unitary.hpp"

namespace wgcoe::mc {

using exact::BigInt;
using exact::BigRational;

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix complex_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexMatrix z(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = g(rng);
      z(r, c) = Complex(re, g(rng));
    }
  }
  return z;
}

RealMatrix real_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  RealMatrix z(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) z(r, c) = g(rng);
  }
  return z;
}

template <class Matrix>
Matrix thin_q(const Matrix& a, bool correct) {
  using Scalar = typename Matrix::Scalar;
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
  if (!correct) return q;
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const Scalar r = qr.matrixQR()(k, k);
    const double mag = std::abs(r);
    if (mag > 0) q.col(k) *= r / mag;
  }
  return q;
}

void check_dimension(long N) {
  if (N < 1) throw DomainError("matrix dimension must be positive");
}

std::vector<Entry> parse_entries(const std::string& text) {
  std::vector<Entry> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("entry '" + item + "' is not of the form row:col");
    try {
      std::size_t used = 0;
      Entry e{std::stoi(item.substr(0, colon), &used), 0};
      if (used != colon) throw std::invalid_argument(item);
      const std::string col = item.substr(colon + 1);
      e.col = std::stoi(col, &used);
      if (used != col.size()) throw std::invalid_argument(item);
      if (e.row < 1 || e.col < 1) throw DomainError("entry indices must be positive");
      out.push_back(e);
    } catch (const std::invalid_argument&) {
      throw DomainError("entry '" + item + "' is not of the form row:col");
    } catch (const std::out_of_range&) {
      throw DomainError("entry '" + item + "' is out of range");
    }
  }
  return out;
}

struct Accumulator {
  std::uint64_t count = 0;
  Complex mean;
  double m2 = 0;

  void add(Complex x) {
    ++count;
    const Complex delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += std::real(std::conj(delta) * (x - mean));
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(count + o.count);
    const Complex delta = o.mean - mean;
    mean += delta * (static_cast<double>(o.count) / n);
    m2 += o.m2 + std::norm(delta) * static_cast<double>(count) * static_cast<double>(o.count) / n;
    count += o.count;
  }
};

// Views a sampled matrix; entries are 0-based.
struct Sample {
  ComplexMatrix c;
  RealMatrix r;
  bool real = false;
  Complex at(int i, int j) const { return real ? Complex(r(i, j), 0.0) : c(i, j); }
};

Complex trace_moment(const ComplexMatrix& v, coe::TraceMoment which) {
  const Complex t1 = v.trace();
  const Complex t2 = (v * v).trace();
  switch (which) {
    case coe::TraceMoment::tr4: return std::norm(t1) * std::norm(t1);
    case coe::TraceMoment::tr2sq: return std::norm(t2);
    case coe::TraceMoment::mixed: return t2 * std::conj(t1 * t1);
  }
  return 0;
}

Complex evaluate(const MomentSpec& spec, const Sample& s) {
  if (spec.trace) return trace_moment(s.c, *spec.trace);
  Complex x = 1;
  for (const auto& e : spec.plain) x *= s.at(e.row - 1, e.col - 1);
  for (const auto& e : spec.conjugated) x *= std::conj(s.at(e.row - 1, e.col - 1));
  return x;
}

}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state ^= stream * 0xD1B54A32D192ED03ULL;
  const std::uint64_t b = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

ComplexMatrix sample_haar_unitary(int N, Rng& rng, PhaseCorrection phase) {
  check_dimension(N);
  return thin_q(complex_ginibre(N, N, rng), phase == PhaseCorrection::on);
}

ComplexMatrix sample_haar_columns(int N, int m, Rng& rng) {
  check_dimension(N);
  if (m < 1 || m > N) throw DomainError("column count must lie in [1, N]");
  return thin_q(complex_ginibre(N, m, rng), true);
}

RealMatrix sample_haar_orthogonal(int N, Rng& rng) {
  check_dimension(N);
  return thin_q(real_ginibre(N, N, rng), true);
}

RealMatrix sample_orthogonal_columns(int N, int m, Rng& rng) {
  check_dimension(N);
  if (m < 1 || m > N) throw DomainError("column count must lie in [1, N]");
  return thin_q(real_ginibre(N, m, rng), true);
}

ComplexMatrix sample_coe(int N, Rng& rng) {
  const ComplexMatrix u = sample_haar_unitary(N, rng);
  return u.transpose() * u;
}

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

double orthogonality_residual(const RealMatrix& o) {
  return (o.transpose() * o - RealMatrix::Identity(o.cols(), o.cols())).cwiseAbs().maxCoeff();
}

double symmetry_residual(const ComplexMatrix& v) { return (v - v.transpose()).cwiseAbs().maxCoeff(); }

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::cue: return "cue";
    case Ensemble::coe: return "coe";
    case Ensemble::orthogonal: return "orthogonal";
  }
  return {};
}

Ensemble parse_ensemble(const std::string& text) {
  if (text == "cue") return Ensemble::cue;
  if (text == "coe") return Ensemble::coe;
  if (text == "orthogonal") return Ensemble::orthogonal;
  throw DomainError("unknown ensemble '" + text + "' (expected cue, coe or orthogonal)");
}

MomentSpec MomentSpec::parse(Ensemble ensemble, const std::string& text) {
  MomentSpec s;
  s.ensemble = ensemble;
  if (text == "tr4" || text == "tr2sq" || text == "mixed") {
    if (ensemble != Ensemble::coe) throw DomainError("trace moments are defined for the coe ensemble");
    s.trace = coe::parse_trace_moment(text);
    return s;
  }
  const auto bar = text.find('|');
  s.plain = parse_entries(text.substr(0, bar));
  if (bar != std::string::npos) s.conjugated = parse_entries(text.substr(bar + 1));
  if (s.plain.empty() && s.conjugated.empty()) throw DomainError("empty moment specification");
  return s;
}

std::string MomentSpec::to_string() const {
  if (trace) return coe::to_string(*trace);
  const auto list = [](const std::vector<Entry>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(v[k].row) + ':' + std::to_string(v[k].col);
    }
    return out;
  };
  return list(plain) + '|' + list(conjugated);
}

int MomentSpec::max_index() const {
  int m = 0;
  for (const auto* v : {&plain, &conjugated}) {
    for (const auto& e : *v) m = std::max({m, e.row, e.col});
  }
  return m;
}

std::optional<BigRational> exact_value(const MomentSpec& spec, long N) {
  if (spec.trace) return coe::coe_trace_moments_degree2(*spec.trace).eval(N);
  if (spec.max_index() > N) throw DomainError("entry index exceeds N");
  try {
    switch (spec.ensemble) {
      case Ensemble::cue: {
        std::vector<int> i, j, ip, jp;
        for (const auto& e : spec.plain) i.push_back(e.row), j.push_back(e.col);
        for (const auto& e : spec.conjugated) ip.push_back(e.row), jp.push_back(e.col);
        cue::CueMomentSpec s{comb::IndexSequence(i), comb::IndexSequence(j), comb::IndexSequence(ip),
                             comb::IndexSequence(jp), N};
        return cue::cue_joint_moment_at(s, N);
      }
      case Ensemble::coe: {
        std::vector<int> j, jp;
        for (const auto& e : spec.plain) j.insert(j.end(), {e.row, e.col});
        for (const auto& e : spec.conjugated) jp.insert(jp.end(), {e.row, e.col});
        if (j.size() != jp.size()) return BigRational(0);
        return coe::coe_joint_moment_at({comb::IndexSequence(j), comb::IndexSequence(jp), N}, N);
      }
      case Ensemble::orthogonal: {
        std::vector<Entry> all = spec.plain;
        all.insert(all.end(), spec.conjugated.begin(), spec.conjugated.end());
        if (!std::all_of(all.begin(), all.end(), [&](const Entry& e) { return e == all.front(); })) return std::nullopt;
        const auto k = static_cast<unsigned>(all.size());
        if (k % 2) return BigRational(0);
        // E[o^{2n}] = (2n-1)!! / (N (N+2) ... (N+2n-2))
        const BigRational den = exact::Polynomial::rising_product(k / 2, 2)(BigRational(N));
        return BigRational(exact::double_factorial_odd(k / 2)) / den;
      }
    }
  } catch (const ResourceError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<EstimateReport> estimate_moments(const std::vector<MomentSpec>& specs, long N,
                                             const EstimateOptions& options) {
  check_dimension(N);
  if (specs.empty()) return {};
  if (options.samples < kMinSamples) {
    throw DomainError("at least " + std::to_string(kMinSamples) + " samples are required");
  }
  const Ensemble ensemble = specs.front().ensemble;
  bool needs_full = false;
  int columns = 1;
  for (const auto& s : specs) {
    if (s.ensemble != ensemble) throw DomainError("moment specs must share one ensemble");
    if (s.trace) needs_full = true;
    if (s.max_index() > N) throw DomainError("entry index exceeds N");
    columns = std::max(columns, s.max_index());
  }
  if (needs_full) columns = static_cast<int>(N);
  const int n = static_cast<int>(N);

  const auto draw = [&](Rng& rng) {
    Sample s;
    if (ensemble == Ensemble::orthogonal) {
      s.real = true;
      s.r = sample_orthogonal_columns(n, columns, rng);
      if (options.check_residuals && orthogonality_residual(s.r) > kUnitarityTolerance) {
        throw std::runtime_error("orthogonality residual gate failed");
      }
      return s;
    }
    const ComplexMatrix u = sample_haar_columns(n, columns, rng);
    if (options.check_residuals && unitarity_residual(u) > kUnitarityTolerance) {
      throw std::runtime_error("unitarity residual gate failed");
    }
    if (ensemble == Ensemble::cue) {
      s.c = u;
      return s;
    }
    s.c = u.transpose() * u;
    if (options.check_residuals) {
      if (symmetry_residual(s.c) > kSymmetryTolerance) throw std::runtime_error("COE symmetry gate failed");
      if (needs_full && unitarity_residual(s.c) > kUnitarityTolerance) {
        throw std::runtime_error("COE unitarity gate failed");
      }
    }
    return s;
  };

  const std::uint64_t batches = (options.samples + kBatchSize - 1) / kBatchSize;
  std::vector<std::vector<Accumulator>> per_batch(batches, std::vector<Accumulator>(specs.size()));
  const auto run_batch = [&](std::uint64_t b) {
    Rng rng = make_stream(options.seed, b);
    const std::uint64_t begin = b * kBatchSize;
    const std::uint64_t end = std::min(options.samples, begin + kBatchSize);
    for (std::uint64_t k = begin; k < end; ++k) {
      const Sample s = draw(rng);
      for (std::size_t t = 0; t < specs.size(); ++t) per_batch[b][t].add(evaluate(specs[t], s));
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::uint64_t b = t; b < batches; b += threads) run_batch(b);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<EstimateReport> out;
  for (std::size_t t = 0; t < specs.size(); ++t) {
    Accumulator acc;
    for (const auto& b : per_batch) acc.merge(b[t]);
    EstimateReport r;
    r.target = specs[t];
    r.N = N;
    r.samples = acc.count;
    r.mean = acc.mean;
    r.stderr_ = std::sqrt(acc.m2 / static_cast<double>(acc.count - 1) / static_cast<double>(acc.count));
    r.seed = options.seed;
    r.exact = exact_value(specs[t], N);
    if (r.exact) {
      const double gap = std::abs(r.mean - Complex(r.exact->get_d(), 0.0));
      r.z_score = r.stderr_ > 0 ? gap / r.stderr_ : (gap == 0 ? 0.0 : std::numeric_limits<double>::infinity());
    }
    out.push_back(std::move(r));
  }
  return out;
}

EstimateReport estimate_moment(const MomentSpec& spec, long N, const EstimateOptions& options) {
  return estimate_moments({spec}, N, options).front();
}

std::vector<GaussianLimitRow> gaussian_limit_check(coe::Entry entry, int n, const std::vector<long>& Ns,
                                                   std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw DomainError("moment order must be positive");
  const BigRational limit(exact::factorial(static_cast<unsigned>(n)));
  const exact::RationalFunction moment =
      entry == coe::Entry::diagonal ? coe::coe_diag_moment_closed(n) : coe::coe_offdiag_moment(n);
  std::vector<GaussianLimitRow> rows;
  for (long N : Ns) {
    check_dimension(N);
    if (entry == coe::Entry::offdiagonal && N < 2) throw DomainError("off-diagonal entries need N >= 2");
    GaussianLimitRow row;
    row.N = N;
    const BigRational scale = entry == coe::Entry::diagonal ? exact::make_rational(N, 2) : BigRational(N);
    BigRational factor = 1;
    for (int k = 0; k < n; ++k) factor *= scale;
    MomentSpec spec;
    spec.ensemble = Ensemble::coe;
    const Entry e = entry == coe::Entry::diagonal ? Entry{1, 1} : Entry{1, 2};
    spec.plain.assign(static_cast<std::size_t>(n), e);
    spec.conjugated.assign(static_cast<std::size_t>(n), e);
    // The symbolic forms are valid for N >= 2n; smaller N go through the exact engine.
    const auto raw = N >= 2 * n ? std::optional<BigRational>(moment.eval(N)) : exact_value(spec, N);
    if (!raw) throw ResourceError("no exact reference for this moment order at N = " + std::to_string(N));
    row.exact_rescaled = factor * *raw;
    row.relative_gap = BigRational(abs((row.exact_rescaled - limit) / limit)).get_d();
    if (samples > 0) {
      EstimateReport r = estimate_moment(spec, N, {samples, seed});
      const double f = factor.get_d();
      r.mean *= f;
      r.stderr_ *= f;
      r.exact = row.exact_rescaled;
      r.z_score = std::abs(r.mean - Complex(r.exact->get_d(), 0.0)) / r.stderr_;
      row.estimate = std::move(r);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wgcoe::mc
