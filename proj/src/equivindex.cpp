#include "surfaut/equivindex.hpp"

#include <stdexcept>

#include "surfaut/error.hpp"

namespace surfaut {

namespace {

bool divides(const Integer& d, const Integer& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

void validate(const OrbifoldData& d) {
  if (d.h_order < 1) throw InputError("h_order must be >= 1");
  if (d.quotient_genus < 0) throw InputError("quotient_genus must be >= 0");
}

}  // namespace

MarkedPoint::MarkedPoint(long m, long m1, long m2) : m_(m), m1_(m1), m2_(m2) {
  if (m < 2) throw InputError("marked point order must be >= 2, got " + std::to_string(m));
  if (m1 <= 0 || m1 >= m || m2 <= 0 || m2 >= m) {
    throw InputError("rotation numbers must lie in (0, " + std::to_string(m) + "), got (" +
                     std::to_string(m1) + ", " + std::to_string(m2) + ")");
  }
}

NonIntegralIndex::NonIntegralIndex(Rational value)
    : std::domain_error("index " + value.str() + " is not an integer"), value_(std::move(value)) {}

Rational cr_index_exact(const OrbifoldData& d) {
  validate(d);
  Rational v = Rational(d.degree, d.h_order) + Rational(2 - 2 * d.quotient_genus);
  for (const auto& p : d.marked) v -= Rational(Integer(p.m1() + p.m2()), Integer(p.m()));
  return v;
}

Integer cr_index(const OrbifoldData& d) {
  Rational v = cr_index_exact(d);
  if (!v.is_integer()) throw NonIntegralIndex(std::move(v));
  return v.numerator();
}

long moduli_dim(long g, long k) {
  if (g < 0 || k < 0) throw InputError("moduli_dim needs g >= 0 and k >= 0");
  if (g == 0) return k <= 3 ? 0 : k - 3;
  if (g == 1) return k == 0 ? 1 : k - 1;
  return 3 * g - 3 + k;
}

std::string case_label(IndexCase c) {
  switch (c) {
    case IndexCase::kI: return "i";
    case IndexCase::kIPrime: return "i'";
    case IndexCase::kII: return "ii";
    case IndexCase::kIII: return "iii";
    case IndexCase::kIIIPrime: return "iii'";
    case IndexCase::kIV: return "iv";
    case IndexCase::kV: return "v";
  }
  throw std::logic_error("unknown index case");
}

CaseReport case_classify(const OrbifoldData& d) {
  validate(d);
  for (std::size_t i = 0; i < d.marked.size(); ++i) {
    const auto& p = d.marked[i];
    if (!p.sl2()) {
      throw InputError("marked point " + std::to_string(i) + " (m=" + std::to_string(p.m()) +
                       ", m1=" + std::to_string(p.m1()) + ", m2=" + std::to_string(p.m2()) +
                       ") violates m1 + m2 = m");
    }
  }
  const Rational x(d.degree, d.h_order);
  const long g = d.quotient_genus;
  const long k = d.k();
  auto make = [](IndexCase c, Rational lhs) {
    CaseReport r{c, lhs, lhs >= Rational(0), std::nullopt, std::nullopt, std::nullopt};
    return r;
  };
  auto sharpen = [](CaseReport base, IndexCase c, Rational lhs) {
    CaseReport r{c, lhs, lhs >= Rational(0), base.governing, base.governing_lhs, base.satisfied};
    return r;
  };
  if (g == 0 && k <= 3) {
    return sharpen(make(IndexCase::kI, x + Rational(2 - k)), IndexCase::kIPrime, x - Rational(1));
  }
  if (g == 0) return make(IndexCase::kII, x - Rational(1));
  if (g == 1 && k == 0) {
    return sharpen(make(IndexCase::kIII, x + Rational(1)), IndexCase::kIIIPrime, x);
  }
  if (g == 1) return make(IndexCase::kIV, x - Rational(1));
  return make(IndexCase::kV, x + Rational(g - 1));
}

Claim2Verdict claim2_check(const Integer& square, const Integer& k_dot, bool minimal) {
  Claim2Verdict v{Claim2Status::kHolds, Integer(-k_dot), std::nullopt, {}};
  const Integer twice = square + k_dot;  // 2(genus - 1) by adjunction
  if (mpz_even_p(twice.get_mpz_t()) != 0 && twice >= -2) v.adjunction_genus = twice / 2 + 1;

  if (k_dot >= 0) {
    v.explanation = "K.C = " + to_string(k_dot) + " >= 0, so c1(TM).C <= 0";
    return v;
  }
  if (!minimal) {
    v.status = Claim2Status::kNotApplicable;
    v.explanation = "K.C < 0 is allowed on a non-minimal surface";
    return v;
  }
  if (square == -1 && k_dot == -1) {
    v.status = Claim2Status::kMinimalityContradiction;
    v.explanation = "C^2 <= K.C < 0 and adjunction force C^2 = K.C = -1: an embedded "
                    "(-1)-sphere, impossible on a minimal surface";
    return v;
  }
  v.status = Claim2Status::kViolation;
  v.explanation = "K.C = " + to_string(k_dot) + " < 0 and (C^2, K.C) = (" + to_string(square) +
                  ", " + to_string(k_dot) + ") is not a (-1)-sphere";
  return v;
}

std::vector<std::string> AuditReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (c.status == AuditStatus::kFail) out.push_back(c.name);
  }
  return out;
}

AuditReport decomposition_audit(const Integer& c1sq, const Integer& group_order,
                                const std::vector<CurveDatum>& curves) {
  if (group_order < 1) throw InputError("group order must be >= 1");
  AuditReport report{true, {}};
  auto record = [&](std::string name, std::optional<std::size_t> curve, bool ok,
                    std::string detail) {
    if (!ok) report.pass = false;
    report.checks.push_back(
        {std::move(name), curve, ok ? AuditStatus::kPass : AuditStatus::kFail, std::move(detail)});
  };

  record("c1sq_positive", std::nullopt, c1sq >= 1, "c1^2 = " + to_string(c1sq));

  Integer weighted_square_sum = 0;
  Integer positive_square_sum = 0;
  Integer genus_sum = 0;
  bool all_nonnegative = true;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const CurveDatum& c = curves[i];
    if (c.genus < 0 || c.multiplicity < 1 || c.stabilizer_order < 1) {
      throw InputError("curve " + std::to_string(i) +
                       ": genus >= 0, multiplicity >= 1, stabilizer_order >= 1 required");
    }
    const bool positive = c.square > 0;
    const Integer adj_lhs = 2 * (c.genus - 1);
    const Integer adj_rhs = c.square + c.k_dot;
    record("adjunction", i, adj_lhs == adj_rhs,
           "2(g-1) = " + to_string(adj_lhs) + ", C^2 + K.C = " + to_string(adj_rhs));
    record("stabilizer_divides", i, divides(c.stabilizer_order, group_order),
           to_string(c.stabilizer_order) + " | " + to_string(group_order));
    if (positive) {
      record("multiplicity", i, c.multiplicity == 1,
             "n = " + std::to_string(c.multiplicity) + " on a curve with C^2 > 0");
      record("canonical_degree", i, c.k_dot == c.square,
             "K.C = " + to_string(c.k_dot) + ", C^2 = " + to_string(c.square));
      record("stabilizer_full", i, c.stabilizer_order == group_order,
             "stabilizer " + to_string(c.stabilizer_order) + " vs |G| = " + to_string(group_order));
      record("divisibility", i, divides(group_order, c.genus - 1),
             to_string(group_order) + " | g - 1 = " + to_string(c.genus - 1));
      positive_square_sum += c.square;
      genus_sum += c.genus - 1;
    }
    if (c.square < 0) all_nonnegative = false;
    weighted_square_sum += Integer(c.multiplicity) * c.multiplicity * c.square;
  }

  record("self_intersection_sum", std::nullopt, weighted_square_sum == c1sq,
         "sum n^2 C^2 = " + to_string(weighted_square_sum) + ", c1^2 = " + to_string(c1sq));
  if (all_nonnegative) {
    record("positive_square_sum", std::nullopt, positive_square_sum == c1sq,
           "sum_{C^2>0} C^2 = " + to_string(positive_square_sum));
    record("genus_sum", std::nullopt, genus_sum == c1sq,
           "sum_{C^2>0} (g-1) = " + to_string(genus_sum));
  } else {
    for (const char* name : {"positive_square_sum", "genus_sum"}) {
      report.checks.push_back(
          {name, std::nullopt, AuditStatus::kSkipped, "a curve has negative self-intersection"});
    }
  }
  return report;
}

}  // namespace surfaut
