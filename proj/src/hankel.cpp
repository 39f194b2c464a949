#include "shiftcharge/hankel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

namespace {

constexpr std::size_t kExhaustiveSizeLimit = 16;
constexpr unsigned long kThresholdScanLimit = 1000000;

struct ScaledMatrix {
  std::vector<std::vector<Int>> entries;
  std::vector<Int> row_scales;  // positive; det(Q) = det(Z) / prod(scales)
};

ScaledMatrix scale_to_integers(const std::vector<std::vector<Rat>>& matrix) {
  std::size_t n = matrix.size();
  ScaledMatrix out;
  out.entries.assign(n, std::vector<Int>(n));
  out.row_scales.assign(n, Int(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("matrix must be square");
    Int lambda = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), matrix[i][j].get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = matrix[i][j] * Rat(lambda);
      out.entries[i][j] = scaled.get_num();  // denominator is 1 by choice of lambda
    }
    out.row_scales[i] = lambda;
  }
  return out;
}

// Bareiss elimination with row pivoting. Every intermediate entry is an exact
// integer: a[i][j] <- (a[i][j]*a[k][k] - a[i][k]*a[k][j]) / prev divides
// exactly at each step.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  Int t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == k) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

struct Cascade {
  std::vector<Int> minors;  // leading principal minors 1x1, 2x2, ...
  bool complete;            // false when a zero pivot stopped the sweep
};

// Pivot-free Bareiss sweep: after step k the (k+1)-th diagonal entry equals
// the (k+2) x (k+2) leading principal minor, giving the whole cascade in one
// elimination when no pivot vanishes.
Cascade bareiss_leading_minors(std::vector<std::vector<Int>> a) {
  std::size_t n = a.size();
  Cascade out{{}, true};
  if (n == 0) return out;
  Int prev = 1;
  Int t;
  for (std::size_t k = 0; k < n; ++k) {
    out.minors.push_back(a[k][k]);
    if (k + 1 == n) break;
    if (a[k][k] == 0) {
      out.complete = false;
      return out;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return out;
}

std::vector<std::vector<Int>> submatrix(const std::vector<std::vector<Int>>& z,
                                        const std::vector<std::size_t>& keep) {
  std::vector<std::vector<Int>> out(keep.size(), std::vector<Int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = z[keep[i]][keep[j]];
  }
  return out;
}

}  // namespace

HankelMatrix::HankelMatrix(std::size_t base, std::size_t size, std::vector<Rat> band)
    : base_(base), size_(size), band_(std::move(band)) {
  if (size_ == 0) throw std::invalid_argument("Hankel matrix size must be positive");
  if (band_.size() != 2 * size_ - 1) {
    throw std::invalid_argument("Hankel band length must be 2*size - 1");
  }
}

std::vector<std::vector<Rat>> HankelMatrix::rows() const {
  std::vector<std::vector<Rat>> out(size_, std::vector<Rat>(size_));
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) out[i][j] = entry(i, j);
  }
  return out;
}

HankelMatrix hankel_matrix(const MomentSeq& m, std::size_t base, std::size_t size) {
  if (size == 0) throw std::invalid_argument("Hankel matrix size must be positive");
  std::vector<Rat> band;
  band.reserve(2 * size - 1);
  for (std::size_t i = 0; i < 2 * size - 1; ++i) band.push_back(m.at(base + i));
  return HankelMatrix(base, size, std::move(band));
}

Rat fraction_free_det(const std::vector<std::vector<Rat>>& matrix) {
  if (matrix.empty()) return 1;
  ScaledMatrix scaled = scale_to_integers(matrix);
  Int det = bareiss_det(std::move(scaled.entries));
  Rat out(det);
  for (const Int& lambda : scaled.row_scales) out /= Rat(lambda);
  return out;
}

Rat cofactor_det(const std::vector<std::vector<Rat>>& matrix) {
  std::size_t n = matrix.size();
  if (n == 0) return 1;
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  }
  if (n == 1) return matrix[0][0];
  Rat det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (matrix[0][j] == 0) continue;
    std::vector<std::vector<Rat>> minor(n - 1, std::vector<Rat>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t col = 0;
      for (std::size_t jj = 0; jj < n; ++jj) {
        if (jj == j) continue;
        minor[i - 1][col++] = matrix[i][jj];
      }
    }
    Rat term = matrix[0][j] * cofactor_det(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Rat exact_det(const HankelMatrix& h) { return fraction_free_det(h.rows()); }

const char* psd_verdict_name(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::PD:
      return "PD";
    case PsdVerdict::PSDSingular:
      return "PSD_singular";
    default:
      return "NotPSD";
  }
}

PsdResult psd_test(const HankelMatrix& h) {
  std::size_t n = h.size();
  ScaledMatrix scaled = scale_to_integers(h.rows());

  Cascade cascade = bareiss_leading_minors(scaled.entries);
  if (cascade.complete) {
    bool all_positive = true;
    for (const Int& minor : cascade.minors) {
      if (minor <= 0) {
        all_positive = false;
        break;
      }
    }
    if (all_positive) return PsdResult{PsdVerdict::PD, std::nullopt};
  }

  if (n > kExhaustiveSizeLimit) {
    throw std::invalid_argument("matrix too large for the exhaustive principal-minor check");
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) keep.push_back(i);
    }
    Int det = bareiss_det(submatrix(scaled.entries, keep));
    if (det < 0) {
      Rat value(det);
      for (std::size_t i : keep) value /= Rat(scaled.row_scales[i]);
      return PsdResult{PsdVerdict::NotPSD, MinorWitness{std::move(keep), std::move(value)}};
    }
  }
  return PsdResult{PsdVerdict::PSDSingular, std::nullopt};
}

HankelReport k_hyponormality_test(const MomentSeq& m, std::size_t k, std::size_t m_range) {
  if (k == 0) throw std::invalid_argument("hyponormality level k must be at least 1");
  HankelReport report;
  report.k = k;
  report.m_range = m_range;
  report.overall = PsdVerdict::PD;
  for (std::size_t base = 0; base <= m_range; ++base) {
    PsdResult result = psd_test(hankel_matrix(m, base, k + 1));
    if (result.verdict == PsdVerdict::NotPSD) {
      if (!report.first_failure) report.first_failure = base;
      report.overall = PsdVerdict::NotPSD;
    } else if (result.verdict == PsdVerdict::PSDSingular &&
               report.overall == PsdVerdict::PD) {
      report.overall = PsdVerdict::PSDSingular;
    }
    report.per_m.push_back(std::move(result));
  }
  return report;
}

MomentSeq restriction_shift(const MomentSeq& m, std::size_t I) {
  Rat base = m.at(I);
  if (base == 0) throw ZeroMomentError(I);
  std::optional<std::size_t> len = m.known_length();
  if (len) len = *len > I ? *len - I : 0;
  return MomentSeq([m, I, base](std::size_t n) { return Rat(m.at(n + I) / base); }, len);
}

namespace {

// Atoms at strictly positive positions, in decreasing order. A zero-position
// atom contributes nothing to any moment of index >= 1, so the asymptotic
// machinery works on this view (with thresholds pushed to at least 1).
struct PositiveView {
  std::vector<Atom> atoms;
  bool dropped_zero_atom;
};

PositiveView positive_view(const Charge& c) {
  PositiveView view{c.atoms(), false};
  if (!view.atoms.empty() && view.atoms.back().position == 0) {
    view.atoms.pop_back();
    view.dropped_zero_atom = true;
  }
  return view;
}

}  // namespace

Sign asymptotic_k_det_sign(const Charge& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("determinant order k must be at least 1");
  PositiveView view = positive_view(c);
  if (view.atoms.size() < k) {
    if (c.tail()) {
      throw TooFewAtomsError("need at least " + std::to_string(k) +
                             " retained atoms to determine the asymptotic sign");
    }
    return Sign::Zero;
  }
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (view.atoms[i].density < 0) sign = -sign;
  }
  return sign > 0 ? Sign::Plus : Sign::Minus;
}

DominanceBound dominance_threshold(const Charge& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("determinant order k must be at least 1");
  PositiveView view = positive_view(c);
  const std::vector<Atom>& atoms = view.atoms;
  if (atoms.size() < k || (atoms.size() == k && !c.tail())) {
    throw TooFewAtomsError("dominance threshold needs more than " + std::to_string(k) +
                           " atoms (or a tail bound)");
  }

  Rat tail_mass = c.tail() ? c.tail()->mass : Rat(0);
  Rat tail_pos = c.tail() ? c.tail()->position : Rat(0);

  DominanceBound bound;
  bound.s = tail_mass;
  bound.B = tail_mass;
  for (const Atom& a : atoms) {
    Rat d = rat_abs(a.density);
    bound.s += d;
    bound.B = std::max(bound.B, d);
  }

  // Squared Vandermonde of the k leading positions: the exact n = 0 value of
  // the leading Cauchy-Binet term.
  bound.L = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Rat diff = atoms[i].position - atoms[j].position;
      bound.L *= diff * diff;
    }
  }

  Rat lead_coeff = bound.L;
  Rat lead_ratio = 1;  // (r_1 ... r_k)
  for (std::size_t i = 0; i < k; ++i) {
    lead_coeff *= rat_abs(atoms[i].density);
    lead_ratio *= atoms[i].position;
  }

  // Every squared position gap is at most max(1, r_1)^2, so any squared
  // Vandermonde that shows up in an off-leading term is at most this cap.
  Rat r1 = atoms[0].position;
  Rat vcap = rat_pow(std::max(Rat(1), r1), static_cast<unsigned long>(k) * (k - 1));

  // Off-leading terms with exactly one atom outside the leading block: at
  // most k choices for the dropped leading atom, each with density product
  // at most B^{k-1} times the outside density, and the outside densities sum
  // to at most s.
  Rat r_k1 = atoms.size() >= k + 1 ? atoms[k].position : tail_pos;
  Rat one_out_coeff = Rat(k) * rat_pow(bound.B, k - 1) * bound.s * vcap;
  Rat one_out_ratio = r_k1;
  for (std::size_t i = 0; i + 1 < k; ++i) one_out_ratio *= atoms[i].position;

  // Terms with at least two outside atoms: the two largest outside positions
  // bound the position product, the densities are bounded by
  // (sum of |a|)^2/2 * s^{k-2}/(k-2)!.
  Rat two_out_coeff = 0;
  Rat two_out_ratio = 0;
  bool has_two_out = k >= 2 && (atoms.size() >= k + 2 || c.tail());
  if (has_two_out) {
    Rat r_k2 = atoms.size() >= k + 2 ? atoms[k + 1].position : tail_pos;
    Rat km2_fact = 1;  // (k-2)!
    for (std::size_t i = 2; i + 2 <= k; ++i) km2_fact *= Rat(i);
    two_out_coeff = bound.s * bound.s / 2 * rat_pow(bound.s, k - 2) / km2_fact * vcap;
    two_out_ratio = r_k1 * r_k2;
    for (std::size_t i = 0; i + 2 < k; ++i) two_out_ratio *= atoms[i].position;
  }

  // The ratios of both bound classes to the leading term shrink by a fixed
  // factor < 1 per step of n, so the first n that wins stays won.
  unsigned long n = view.dropped_zero_atom ? 1 : 0;
  Rat lead = lead_coeff * rat_pow(lead_ratio, n);
  Rat one_out = one_out_coeff * rat_pow(one_out_ratio, n);
  Rat two_out = has_two_out ? Rat(two_out_coeff * rat_pow(two_out_ratio, n)) : Rat(0);
  while (lead <= one_out + two_out) {
    if (++n > kThresholdScanLimit) {
      throw Error("dominance threshold scan did not converge");
    }
    lead *= lead_ratio;
    one_out *= one_out_ratio;
    two_out *= two_out_ratio;
  }
  bound.n_star = n;
  return bound;
}

const char* certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::PositiveMeasure:
      return "positive_measure";
    case CertificateKind::AllBases:
      return "all_bases";
    case CertificateKind::HorizonOnly:
      return "horizon_only";
    case CertificateKind::AsymptoticFailure:
      return "asymptotic_failure";
    default:
      return "witness_failure";
  }
}

CertifiedKhypReport k_hyponormality_certified(const Charge& c, std::size_t k,
                                              std::size_t m_range,
                                              const MomentSeq* exact_moments) {
  MomentSeq scan_moments = exact_moments ? *exact_moments : moments_of_charge(c);
  CertifiedKhypReport out{k_hyponormality_test(scan_moments, k, m_range),
                          KhypCertificate{CertificateKind::HorizonOnly, std::nullopt,
                                          std::nullopt}};

  if (out.report.overall == PsdVerdict::NotPSD) {
    out.certificate.kind = CertificateKind::WitnessFailure;
    return out;
  }

  SignCensus census = sign_census(c);
  if (census.n_minus == 0 && !c.tail()) {
    out.certificate.kind = CertificateKind::PositiveMeasure;
    return out;
  }

  PositiveView view = positive_view(c);
  std::size_t minor_limit = std::min(k + 1, view.atoms.size());

  // First leading minor whose asymptotic sign is negative: the first negative
  // density decides it.
  for (std::size_t j = 1; j <= minor_limit; ++j) {
    if (view.atoms[j - 1].density < 0) {
      out.certificate.kind = CertificateKind::AsymptoticFailure;
      out.certificate.failing_size = j;
      if (view.atoms.size() > j || c.tail()) {
        out.certificate.threshold = dominance_threshold(c, j).n_star;
      } else {
        // The minor equals its leading term exactly; negative from the start.
        out.certificate.threshold = view.dropped_zero_atom ? 1 : 0;
      }
      return out;
    }
  }

  if (view.atoms.size() < k + 1) {
    // Not enough retained atoms to control all k+1 leading minors.
    return out;
  }

  unsigned long threshold = 0;
  for (std::size_t j = 1; j <= k + 1; ++j) {
    unsigned long nj;
    if (view.atoms.size() > j || c.tail()) {
      nj = dominance_threshold(c, j).n_star;
    } else {
      nj = view.dropped_zero_atom ? 1 : 0;
    }
    threshold = std::max(threshold, nj);
  }
  out.certificate.threshold = threshold;
  if (threshold == 0 || m_range + 1 >= threshold) {
    out.certificate.kind = CertificateKind::AllBases;
  }
  return out;
}

}  // namespace shiftcharge
