#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"

namespace shiftcharge {

// size x size moment matrix with entry(i, j) = gamma_{base+i+j}; stored as the
// anti-diagonal band, so it is Hankel and symmetric by construction.
class HankelMatrix {
 public:
  HankelMatrix(std::size_t base, std::size_t size, std::vector<Rat> band);

  std::size_t base() const { return base_; }
  std::size_t size() const { return size_; }
  const Rat& entry(std::size_t i, std::size_t j) const { return band_[i + j]; }
  std::vector<std::vector<Rat>> rows() const;

 private:
  std::size_t base_;
  std::size_t size_;
  std::vector<Rat> band_;  // gamma_{base}, ..., gamma_{base+2*size-2}
};

HankelMatrix hankel_matrix(const MomentSeq& m, std::size_t base, std::size_t size);

// Exact determinant by fraction-free elimination: rows are scaled to integers,
// then a Bareiss sweep with row pivoting keeps every intermediate value an
// integer (each division is exact).
Rat fraction_free_det(const std::vector<std::vector<Rat>>& matrix);

// Independent oracle: recursive cofactor expansion along the first row.
// Exponential; intended for matrices up to about 6x6.
Rat cofactor_det(const std::vector<std::vector<Rat>>& matrix);

Rat exact_det(const HankelMatrix& h);

enum class PsdVerdict { PD, PSDSingular, NotPSD };

const char* psd_verdict_name(PsdVerdict v);

// A strictly negative principal minor, indexed by the rows/columns it keeps.
struct MinorWitness {
  std::vector<std::size_t> index_set;
  Rat det;
};

struct PsdResult {
  PsdVerdict verdict;
  std::optional<MinorWitness> witness;  // present iff NotPSD
};

// PD fast path: all leading principal minors positive. On the semidefinite
// boundary the decision falls back to the exhaustive principal-minor
// criterion (every principal minor >= 0), which is sound for symmetric
// matrices of this size.
PsdResult psd_test(const HankelMatrix& h);

struct HankelReport {
  std::size_t k;        // test level; matrices are (k+1) x (k+1)
  std::size_t m_range;  // bases m = 0..m_range inclusive were tested
  std::vector<PsdResult> per_m;
  PsdVerdict overall;
  std::optional<std::size_t> first_failure;  // smallest base that is NotPSD
};

// Tests positive semidefiniteness of the (k+1) x (k+1) moment matrices at
// bases m = 0..m_range. A pass speaks only for that horizon.
HankelReport k_hyponormality_test(const MomentSeq& m, std::size_t k, std::size_t m_range);

// Moment sequence of the shift restricted to basis vectors e_I, e_{I+1}, ...:
// gamma'_n = gamma_{n+I}/gamma_I. Throws ZeroMomentError when gamma_I = 0.
MomentSeq restriction_shift(const MomentSeq& m, std::size_t I);

// Sign of det M_n^k for all large n: the sign of the product of the first k
// densities (decreasing-position order, zero-position atom excluded). Returns
// Sign::Zero when the charge has fewer than k contributing atoms and no tail,
// because those determinants vanish identically by rank. Throws
// TooFewAtomsError when a tail hides the answer.
Sign asymptotic_k_det_sign(const Charge& c, std::size_t k);

// Everything needed to certify determinant signs past a finite index.
struct DominanceBound {
  Rat B;                 // max |density|, tail mass included
  Rat s;                 // sum of |density|, tail mass included
  Rat L;                 // squared Vandermonde of the leading k positions
  unsigned long n_star;  // dominance holds for every n >= n_star
};

// Smallest n_star such that for all n >= n_star the leading term
// a_1..a_k (r_1..r_k)^n L of the Cauchy-Binet expansion of det M_n^k strictly
// dominates the sum of all other terms; the two bound classes (one
// off-leading atom, at least two off-leading atoms) decay geometrically
// against the leading term, so the first success is final. Throws
// TooFewAtomsError unless the charge has more than k contributing atoms or a
// tail bound.
DominanceBound dominance_threshold(const Charge& c, std::size_t k);

enum class CertificateKind {
  PositiveMeasure,     // all densities positive, no tail: PSD for every m, k
  AllBases,            // scan covered every base below the dominance threshold
  HorizonOnly,         // pass is only as strong as the scanned range
  AsymptoticFailure,   // a leading minor is eventually strictly negative
  WitnessFailure,      // a scanned base is already NotPSD
};

const char* certificate_kind_name(CertificateKind kind);

struct KhypCertificate {
  CertificateKind kind;
  std::optional<std::size_t> failing_size;  // minor size that goes negative
  std::optional<unsigned long> threshold;   // dominance index backing the claim
};

struct CertifiedKhypReport {
  HankelReport report;
  KhypCertificate certificate;
};

// Scan plus dominance analysis. The scan runs on `exact_moments` when given
// (e.g. closed-form moments of a shift whose charge was truncated), otherwise
// on the moments of the charge itself; the dominance bounds always account
// for the charge's tail.
CertifiedKhypReport k_hyponormality_certified(const Charge& c, std::size_t k,
                                              std::size_t m_range,
                                              const MomentSeq* exact_moments = nullptr);

}  // namespace shiftcharge
