#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfaut/rational.hpp"

namespace surfaut {

// Orbifold point of order m with rotation numbers 0 < m1, m2 < m.
class MarkedPoint {
 public:
  MarkedPoint(long m, long m1, long m2);

  long m() const { return m_; }
  long m1() const { return m1_; }
  long m2() const { return m2_; }
  // Isotropy acts through SL2(C): m1 + m2 = m.
  bool sl2() const { return m1_ + m2_ == m_; }

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;

 private:
  long m_;
  long m1_;
  long m2_;
};

struct OrbifoldData {
  Integer h_order = 1;       // |H|, >= 1
  long quotient_genus = 0;   // genus of the underlying surface of Sigma / H
  std::vector<MarkedPoint> marked;
  Integer degree = 0;        // c1(TM) . f_*[Sigma]

  long k() const { return static_cast<long>(marked.size()); }
};

class NonIntegralIndex : public std::domain_error {
 public:
  explicit NonIntegralIndex(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

// degree/|H| + 2 - 2g - sum (m1 + m2)/m, exactly.
Rational cr_index_exact(const OrbifoldData& d);
// As above; throws NonIntegralIndex when the value is not an integer.
Integer cr_index(const OrbifoldData& d);

// Complex dimension of the moduli of the marked quotient (g, k).
long moduli_dim(long quotient_genus, long k);

enum class IndexCase { kI, kIPrime, kII, kIII, kIIIPrime, kIV, kV };

std::string case_label(IndexCase c);

struct CaseReport {
  IndexCase governing;
  Rational governing_lhs;
  bool satisfied;
  // The unsharpened inequality when a primed one governs.
  std::optional<IndexCase> base;
  std::optional<Rational> base_lhs;
  std::optional<bool> base_satisfied;
};

// Which dimension inequality applies to (g, k) and whether it holds. Every
// marked point must satisfy the SL2 condition; throws InputError otherwise.
CaseReport case_classify(const OrbifoldData& d);

enum class Claim2Status {
  kHolds,                    // K.C >= 0
  kMinimalityContradiction,  // K.C < 0 forces an embedded (-1)-sphere
  kViolation,                // K.C < 0 with no consistent curve at all
  kNotApplicable,            // surface not minimal
};

struct Claim2Verdict {
  Claim2Status status;
  Integer c1_dot;  // c1(TM).C = -K.C
  std::optional<Integer> adjunction_genus;
  std::string explanation;
};

Claim2Verdict claim2_check(const Integer& square, const Integer& k_dot, bool minimal);

struct CurveDatum {
  Integer genus = 0;
  Integer square = 0;
  long multiplicity = 1;
  Integer stabilizer_order = 1;
  Integer k_dot = 0;

  friend bool operator==(const CurveDatum&, const CurveDatum&) = default;
};

enum class AuditStatus { kPass, kFail, kSkipped };

struct AuditCheck {
  std::string name;
  std::optional<std::size_t> curve;  // empty for global checks
  AuditStatus status;
  std::string detail;
};

struct AuditReport {
  bool pass;
  std::vector<AuditCheck> checks;

  std::vector<std::string> failed_checks() const;
};

// Numeric consequences of the canonical-curve decomposition for a group of
// the given order acting on a surface with the given c1^2.
AuditReport decomposition_audit(const Integer& c1sq, const Integer& group_order,
                                const std::vector<CurveDatum>& curves);

}  // namespace surfaut
