#include <gtest/gtest.h>

#include <random>

#include "leafcert/certifier.hpp"
#include "leafcert/closure.hpp"
#include "leafcert/errors.hpp"
#include "leafcert/families.hpp"
#include "leafcert/indices.hpp"
#include "leafcert/oracle.hpp"
#include "leafcert/structure.hpp"
#include "test_support.hpp"

namespace leafcert {
namespace {

const CheckResult& find(const CertificateReport& r, CheckKind kind) {
  for (const auto& c : r.checks) {
    if (c.kind == kind) return c;
  }
  throw std::logic_error("missing check");
}

TEST(Threshold, PrintedFormulas) {
  EXPECT_EQ(threshold(CheckKind::M1Bound, 8, 2), 282);
  EXPECT_EQ(threshold(CheckKind::RDDBound, 8, 2), 302);
  EXPECT_EQ(threshold(CheckKind::ComplementM1, 20, 3), 680);
  EXPECT_EQ(threshold(CheckKind::EdgeCount, 20, 3), 150);
  EXPECT_EQ(threshold(CheckKind::Dirac, 6, 2), Rational(7, 2));
  // 1/2 [(7)(8)(15) + 3(31) + 9] = 471
  EXPECT_EQ(threshold(CheckKind::RDDBound, 9, 3), 471);
  EXPECT_EQ(threshold(CheckKind::RDDBound, 9, 2), 453);
  EXPECT_THROW(threshold(CheckKind::DegreeSequence, 8, 2), ArgumentError);
  EXPECT_THROW(threshold(CheckKind::ClosureComplete, 8, 2), ArgumentError);
}

TEST(Threshold, HyperZagrebBoundIsTheDegreeCubeBound) {
  // At i = k the bound 2[(i-k+1) i^3 + (n-2i+k-1)(n-i+k-2)^3 + i (n-1)^3]
  // collapses to 2[k^3 + (n-k-1)(n-2)^3 + k(n-1)^3].
  for (long k = 2; k <= 8; ++k) {
    for (long n = k + 5; n <= 40; ++n) {
      const long cubes = k * k * k + (n - k - 1) * (n - 2) * (n - 2) * (n - 2) +
                         k * (n - 1) * (n - 1) * (n - 1);
      EXPECT_EQ(threshold(CheckKind::HM1Bound, n, k), 2 * cubes);
      EXPECT_EQ(threshold(CheckKind::M2Bound, n, k), cubes);
      const long squares = k * k + (n - k - 1) * (n - 2) * (n - 2) + k * (n - 1) * (n - 1);
      EXPECT_EQ(threshold(CheckKind::M1Bound, n, k), squares);
    }
  }
}

TEST(Threshold, WeakFormsAreScaledEdgeThresholds) {
  for (long k = 2; k <= 6; ++k) {
    for (long n = k + 17; n <= 40; ++n) {
      const Rational e = threshold(CheckKind::EdgeCount, n, k);
      EXPECT_EQ(threshold(CheckKind::HM1Weak, n, k), 4 * e);
      EXPECT_EQ(threshold(CheckKind::HM2Weak, n, k), e);
      EXPECT_EQ(threshold(CheckKind::HM1WeakConservative, n, k), 4 * (n - 1) * (n - 1) * e);
      EXPECT_EQ(threshold(CheckKind::HM2WeakConservative, n, k),
                Rational((n - 1) * (n - 1) * (n - 1) * (n - 1)) * e);
    }
  }
}

TEST(Threshold, SecondZagrebBoundExceedsCompleteGraph) {
  // M2(K_n) = n(n-1)^3/2 is the largest M2 on n vertices, and it falls short
  // of the threshold everywhere in the window, so the check never certifies.
  for (std::size_t n = 7; n <= 120; ++n) {
    const Rational top(second_zagreb(complete_graph(n)));
    for (long k = 2; k + 5 <= static_cast<long>(n); ++k) {
      EXPECT_LT(top, threshold(CheckKind::M2Bound, static_cast<long>(n), k)) << n << " " << k;
    }
  }
}

TEST(Threshold, EventuallyIncreasingInN) {
  for (CheckKind kind : kAllChecks) {
    if (!has_threshold(kind)) continue;
    for (long k = 2; k <= 6; ++k) {
      for (long n = k + 17; n < 60; ++n) {
        EXPECT_LT(threshold(kind, n, k), threshold(kind, n + 1, k))
            << check_name(kind) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Applicability, HypothesisWindows) {
  EXPECT_TRUE(is_applicable(CheckKind::Dirac, 5, 4, 0));
  EXPECT_FALSE(is_applicable(CheckKind::Dirac, 5, 5, 4));
  EXPECT_TRUE(is_applicable(CheckKind::DegreeSequence, 5, 2, 0));
  EXPECT_FALSE(is_applicable(CheckKind::DegreeSequence, 5, 3, 4));
  EXPECT_TRUE(is_applicable(CheckKind::M1Bound, 6, 2, 3));
  EXPECT_FALSE(is_applicable(CheckKind::M1Bound, 6, 2, 2));
  EXPECT_FALSE(is_applicable(CheckKind::M1Bound, 5, 2, 4));
  EXPECT_TRUE(is_applicable(CheckKind::HM1Bound, 7, 2, 3));
  EXPECT_FALSE(is_applicable(CheckKind::HM1Bound, 6, 2, 5));
  EXPECT_FALSE(is_applicable(CheckKind::M2Bound, 7, 2, 2));
  EXPECT_TRUE(is_applicable(CheckKind::EdgeCount, 19, 2, 3));
  EXPECT_FALSE(is_applicable(CheckKind::EdgeCount, 18, 2, 17));
  EXPECT_FALSE(is_applicable(CheckKind::ComplementHM1, 30, 3, 3));
}

TEST(DegreeSequence, ObstructionWindow) {
  // Extremal graph (n=8, k=2): i = 2 has d_1 = 2 <= 2, d_6 = 6 <= 6.
  const auto d = degree_sequence(build({Family::ExtremalM1, 8, 2}));
  EXPECT_EQ(degree_sequence_obstruction(d, 2), 2);
  const auto k6 = degree_sequence(complete_graph(6));
  EXPECT_FALSE(degree_sequence_obstruction(k6, 2));
}

TEST(Check, Examples) {
  const CheckResult dirac = check(CheckKind::Dirac, complete_graph(6), 2);
  EXPECT_EQ(dirac.verdict, Verdict::Certified);
  EXPECT_EQ(*dirac.measured, 5);

  const Graph extremal = build({Family::ExtremalM1, 8, 2});
  const CheckResult m1 = check(CheckKind::M1Bound, extremal, 2);
  EXPECT_EQ(*m1.measured, 282);
  EXPECT_EQ(*m1.threshold, 282);
  EXPECT_NE(m1.verdict, Verdict::Certified);
  // Its minimum degree is k, below the k+1 the bound assumes.
  EXPECT_FALSE(m1.applicable);

  const CheckResult ds = check(CheckKind::DegreeSequence, extremal, 2);
  EXPECT_TRUE(ds.applicable);
  EXPECT_EQ(ds.verdict, Verdict::Inconclusive);

  const CheckResult closure = check(CheckKind::ClosureComplete, cycle_graph(4), 2);
  EXPECT_EQ(closure.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(closure.threshold);

  const CheckResult comp = check(CheckKind::ComplementM1, complete_graph(20), 3);
  EXPECT_EQ(comp.verdict, Verdict::Certified);
  EXPECT_EQ(*comp.measured, 0);
  EXPECT_EQ(*comp.threshold, 680);

  EXPECT_THROW(check(CheckKind::Dirac, empty_graph(4), 2), ArgumentError);
  EXPECT_THROW(check(CheckKind::Dirac, complete_graph(4), 4), ArgumentError);
}

TEST(Check, StrictnessAtTheExtremalValue) {
  // Adding one edge lifts M1 strictly above; the equality graph itself sits
  // exactly on the threshold for every (n, k).
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t n = k + 4; n <= 14; ++n) {
      const Graph g = build({Family::ExtremalM1, n, k});
      CheckContext ctx(g, k);
      EXPECT_EQ(*check(CheckKind::M1Bound, ctx).measured,
                threshold(CheckKind::M1Bound, static_cast<long>(n), static_cast<long>(k)));
      EXPECT_EQ(*check(CheckKind::RDDBound, ctx).measured,
                threshold(CheckKind::RDDBound, static_cast<long>(n), static_cast<long>(k)));
    }
  }
}

TEST(Certify, Examples) {
  const CertificateReport k6 = certify(complete_graph(6), 2);
  EXPECT_EQ(k6.overall, Verdict::Certified);
  EXPECT_EQ(find(k6, CheckKind::Dirac).verdict, Verdict::Certified);
  EXPECT_EQ(k6.checks.size(), kAllChecks.size());
  for (std::size_t i = 0; i < kAllChecks.size(); ++i) EXPECT_EQ(k6.checks[i].kind, kAllChecks[i]);

  const CertificateReport extremal = certify(build({Family::ExtremalM1, 8, 2}), 2);
  EXPECT_EQ(extremal.overall, Verdict::Inconclusive);
  EXPECT_FALSE(is_k_leaf_connected(build({Family::ExtremalM1, 8, 2}), 2).value);

  const CertificateReport petersen = certify(testing::petersen_graph(), 2);
  EXPECT_EQ(petersen.overall, Verdict::Inconclusive);
  EXPECT_FALSE(is_k_leaf_connected(testing::petersen_graph(), 2).value);
}

TEST(Certify, AdvisoryChecksDoNotCertify) {
  // C_20 plus chords: HM1 easily clears the literal weak bound while the
  // graph is far from k-leaf-connected.
  Graph g = cycle_graph(20);
  for (Vertex v = 0; v < 20; ++v) {
    g.add_edge(v, (v + 2) % 20);
    g.add_edge(v, (v + 5) % 20);
  }
  const CertificateReport r = certify(g, 2);
  const CheckResult& weak = find(r, CheckKind::HM1Weak);
  EXPECT_TRUE(weak.advisory);
  EXPECT_TRUE(weak.applicable);
  EXPECT_EQ(weak.verdict, Verdict::Certified);
  EXPECT_NE(r.overall, Verdict::Certified);
}

TEST(Certify, ExceptionalFamiliesAreRecognised) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t n = k + 17; n <= 24; ++n) {
      const Graph g = build({Family::EdgeException, n, k});
      const CertificateReport r = certify(g, k);
      const CheckResult& edge = find(r, CheckKind::EdgeCount);
      EXPECT_TRUE(edge.applicable);
      EXPECT_EQ(edge.verdict, Verdict::Exceptional);
      EXPECT_EQ(edge.family, Family::EdgeException);
      EXPECT_NE(r.overall, Verdict::Certified);
      EXPECT_EQ(r.overall, Verdict::Exceptional);
      // Hiding the labels does not matter.
      std::mt19937_64 rng(n * 10 + k);
      const Graph shuffled = relabel(g, testing::random_permutation(n, rng));
      EXPECT_EQ(find(certify(shuffled, k), CheckKind::EdgeCount).verdict,
                Verdict::Exceptional);
    }
  }
}

TEST(Certify, ThreeFiveFamilyIsNeverCertified) {
  // {x, y} inside the K_3 admits no Hamilton path: the two degree-3 vertices
  // use up every edge into the K_3 and the large clique is cut off.
  EXPECT_FALSE(is_k_leaf_connected(build({Family::ThreeFiveException, 9}), 2).value);
  for (std::size_t n = 19; n <= 26; ++n) {
    const Graph g = build({Family::ThreeFiveException, n});
    const CertificateReport r = certify(g, 2);
    const CheckResult& m1 = find(r, CheckKind::ComplementM1);
    ASSERT_TRUE(m1.applicable);
    EXPECT_EQ(m1.verdict, Verdict::Exceptional);
    EXPECT_EQ(m1.family, Family::ThreeFiveException);
    // The complement's HM1 sits below the bound, so only family recognition
    // keeps this check from certifying.
    const CheckResult& hm1 = find(r, CheckKind::ComplementHM1);
    ASSERT_TRUE(hm1.applicable);
    EXPECT_LE(*hm1.measured, *hm1.threshold);
    EXPECT_EQ(hm1.verdict, Verdict::Exceptional);
    EXPECT_EQ(hm1.family, Family::ThreeFiveException);
    EXPECT_EQ(r.overall, Verdict::Exceptional);
  }
}

TEST(Certify, DiracImpliesDegreeSequence) {
  for (std::size_t n = 5; n <= 8; ++n) {
    for (const Graph& g : testing::connected_corpus(n)) {
      for (std::size_t k = 2; k + 3 <= n; ++k) {
        CheckContext ctx(g, k);
        if (check(CheckKind::Dirac, ctx).verdict == Verdict::Certified) {
          EXPECT_EQ(check(CheckKind::DegreeSequence, ctx).verdict, Verdict::Certified)
              << to_graph6(g);
        }
      }
    }
  }
}

TEST(Audit, ComplementProofValues) {
  for (long n = 20; n <= 30; ++n) {
    for (long k = 2; k <= 4; ++k) {
      for (const AuditEntry& a : complement_value_audit(n, k)) {
        if (a.index == IndexKind::M1) {
          EXPECT_TRUE(a.matches) << family_name(a.family) << " n=" << n;
        } else {
          EXPECT_FALSE(a.matches) << family_name(a.family) << " n=" << n;
        }
      }
    }
  }
  const auto entries = complement_value_audit(10, 2);
  ASSERT_EQ(entries.size(), 5u);
  EXPECT_EQ(entries[3].family, Family::ThreeFiveException);
  EXPECT_EQ(entries[3].printed, 1584);
  EXPECT_EQ(entries[3].computed, 784);
}

}  // namespace
}  // namespace leafcert
