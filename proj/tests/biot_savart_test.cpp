#include "microcoil/biot_savart.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "microcoil/analytic_field.hpp"
#include "microcoil/errors.hpp"

namespace microcoil {
namespace {

constexpr double kPi = std::numbers::pi;

Vec3 Cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Biot-Savart line integral by composite 8-point Gauss-Legendre quadrature;
// independent of the closed-form segment expression.
Vec3 QuadratureSegmentField(Vec3 a, Vec3 b, double current, Vec3 p,
                            int panels) {
  static constexpr double kNodes[8] = {
      -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
      -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
      0.7966664774136267,  0.9602898564975363};
  static constexpr double kWeights[8] = {
      0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
      0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
      0.2223810344533745, 0.1012285362903763};
  const Vec3 dl = b - a;
  Vec3 h;
  for (int k = 0; k < panels; ++k) {
    for (int q = 0; q < 8; ++q) {
      const double t = (k + 0.5 * (kNodes[q] + 1.0)) / panels;
      const Vec3 r = p - (a + t * dl);
      const double rn = Norm(r);
      const double wgt = kWeights[q] * 0.5 / panels;
      h = h + (wgt * current / (4.0 * kPi * rn * rn * rn)) * Cross(dl, r);
    }
  }
  return h;
}

TEST(SegmentFieldTest, MatchesQuadrature) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 a{pos(rng), pos(rng), pos(rng)};
    const Vec3 b{pos(rng), pos(rng), pos(rng)};
    const Vec3 p{pos(rng), pos(rng), pos(rng) + 3.0};
    const Vec3 exact = SegmentField(a, b, Amperes(0.7), p);
    const Vec3 quad = QuadratureSegmentField(a, b, 0.7, p, 64);
    EXPECT_LT(Norm(exact - quad), 1e-10 * Norm(quad));
  }
}

TEST(SegmentFieldTest, InfiniteLineLimit) {
  const double rho = 1e-4;
  const double half = 1e4 * rho;
  const int n = 200;
  Vec3 h;
  for (int i = 0; i < n; ++i) {
    const double z0 = -half + 2.0 * half * i / n;
    const double z1 = -half + 2.0 * half * (i + 1) / n;
    h = h + SegmentField({0, 0, z0}, {0, 0, z1}, Amperes(1), {rho, 0, 0});
  }
  const double expected = 1.0 / (2.0 * kPi * rho);
  EXPECT_NEAR(h.y, expected, 1e-6 * expected);
  EXPECT_NEAR(h.x, 0.0, 1e-12 * expected);
  EXPECT_NEAR(h.z, 0.0, 1e-12 * expected);
}

TEST(SegmentFieldTest, SquareLoopCenter) {
  const double a = 500e-6;
  const Vec3 c[4] = {{a, -a, 0}, {a, a, 0}, {-a, a, 0}, {-a, -a, 0}};
  Vec3 h;
  for (int i = 0; i < 4; ++i) {
    h = h + SegmentField(c[i], c[(i + 1) % 4], Amperes(1), {0, 0, 0});
  }
  const double expected = std::sqrt(2.0) / (kPi * a);
  EXPECT_NEAR(h.z, expected, 1e-13 * expected);
}

TEST(SegmentFieldTest, ReversalNegates) {
  const Vec3 a{0.1, 0.2, 0.3};
  const Vec3 b{-0.4, 0.5, 0.0};
  const Vec3 p{1.0, -1.0, 2.0};
  const Vec3 fwd = SegmentField(a, b, Amperes(1), p);
  const Vec3 rev = SegmentField(b, a, Amperes(1), p);
  EXPECT_NEAR(fwd.x, -rev.x, 1e-15 * Norm(fwd));
  EXPECT_NEAR(fwd.y, -rev.y, 1e-15 * Norm(fwd));
  EXPECT_NEAR(fwd.z, -rev.z, 1e-15 * Norm(fwd));
}

TEST(SegmentFieldTest, SingularAndDegenerateInputs) {
  const Vec3 a{0, 0, 0};
  const Vec3 b{1e-3, 0, 0};
  EXPECT_THROW(SegmentField(a, b, Amperes(1), {5e-4, 0, 0}), SingularityError);
  EXPECT_THROW(SegmentField(a, b, Amperes(1), {5e-4, 5e-13, 0}),
               SingularityError);
  EXPECT_THROW(SegmentField(a, b, Amperes(1), a), SingularityError);
  EXPECT_THROW(SegmentField(a, a, Amperes(1), {1, 1, 1}), ArgumentError);
  // Beyond the end of the segment, on its line: zero field, no error.
  const Vec3 beyond = SegmentField(a, b, Amperes(1), {2e-3, 0, 0});
  EXPECT_EQ(Norm(beyond), 0.0);
  EXPECT_NO_THROW(SegmentField(a, b, Amperes(1), {5e-4, 1e-9, 0}));
}

TEST(SpiralToFilamentsTest, Counts) {
  const CoilGeometry square = ReferenceCoil(CoilShape::kSquare);
  const CoilGeometry round = ReferenceCoil();
  for (int f : {1, 3}) {
    const DiscretizationSpec spec{64, f};
    EXPECT_EQ(DiscretizeCoil(square, Amperes(1), spec).size(),
              static_cast<std::size_t>(4 * 40 * f));
    EXPECT_EQ(DiscretizeCoil(round, Amperes(1), spec).size(),
              static_cast<std::size_t>(64 * 40 * f));
    const auto paths = SpiralToFilaments(round, Amperes(0.3), spec);
    ASSERT_EQ(paths.size(), static_cast<std::size_t>(40 * f));
    for (const auto& path : paths) {
      EXPECT_NEAR(path.current.si(), 0.3 / f, 1e-15);
      EXPECT_TRUE(path.closed);
    }
  }
}

TEST(SpiralToFilamentsTest, SingleFilamentSitsOnCenterline) {
  const CoilGeometry coil = ReferenceCoil();
  const auto paths = SpiralToFilaments(coil, Amperes(1), {16, 1});
  const auto annuli = TurnAnnuli(coil);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (const Vec3& v : paths[i].points) {
      EXPECT_NEAR(std::hypot(v.x, v.y), annuli[i].centerline_radius.si(),
                  1e-15);
    }
  }
}

TEST(SpiralToFilamentsTest, RejectsBadSpec) {
  EXPECT_THROW(SpiralToFilaments(ReferenceCoil(), Amperes(1), {7, 1}),
               ArgumentError);
  EXPECT_THROW(SpiralToFilaments(ReferenceCoil(), Amperes(1), {8, 0}),
               ArgumentError);
}

TEST(FieldAtTest, SquareOnAxisMatchesClosedForm) {
  const CoilGeometry coil = ReferenceCoil(CoilShape::kSquare);
  const SegmentSet segs = DiscretizeCoil(coil, Amperes(1), {8, 1});
  for (double d : {0.0, 10e-6, 100e-6, 280e-6, 1e-3, 3e-3}) {
    const double expected = OnAxisField(coil, Amperes(1), Meters(d)).si();
    EXPECT_NEAR(segs.FieldAt({0, 0, d}).z, expected, 1e-9 * expected);
  }
}

TEST(FieldAtTest, RoundOnAxisConvergesToClosedForm) {
  const CoilGeometry coil = ReferenceCoil();
  const SegmentSet segs = DiscretizeCoil(coil, Amperes(1), {4096, 1});
  for (double d : {0.0, 25e-6, 280e-6, 2e-3}) {
    const double expected = OnAxisField(coil, Amperes(1), Meters(d)).si();
    const Vec3 h = segs.FieldAt({0, 0, d});
    EXPECT_NEAR(h.z, expected, 1e-5 * expected);
    EXPECT_NEAR(h.x, 0.0, 1e-9 * expected);
    EXPECT_NEAR(h.y, 0.0, 1e-9 * expected);
  }
}

TEST(FieldAtTest, SecondOrderPolygonConvergence) {
  const CoilGeometry coil = ReferenceCoil();
  const double d = 280e-6;
  const double exact = OnAxisField(coil, Amperes(1), Meters(d)).si();
  double previous = 0.0;
  for (int m : {64, 128, 256, 512}) {
    const double err =
        std::abs(FieldAt(coil, Amperes(1), {0, 0, d}, {m, 1}).z - exact);
    if (previous > 0.0) EXPECT_NEAR(previous / err, 4.0, 0.1) << m;
    previous = err;
  }
}

TEST(FieldAtTest, AnnulusRefinementApproachesSheetModel) {
  const CoilGeometry turn(CoilShape::kRound, 1, Micrometers(105),
                          Micrometers(5), Micrometers(0), Micrometers(10));
  const double sheet =
      CenterFieldPerTurn(TurnAnnuli(turn).front(), Amperes(1)).si();
  const double h = FieldAt(turn, Amperes(1), {0, 0, 0}, {256, 1000}).z;
  EXPECT_NEAR(h, sheet, 1e-3 * sheet);
}

TEST(FieldAtTest, MirrorSymmetryInLateralOffset) {
  for (CoilShape shape : {CoilShape::kRound, CoilShape::kSquare}) {
    const SegmentSet segs =
        DiscretizeCoil(ReferenceCoil(shape), Amperes(1), {256, 1});
    for (double x : {50e-6, 333e-6, 1.2e-3}) {
      const double plus = segs.FieldAt({x, 0, 400e-6}).z;
      const double minus = segs.FieldAt({-x, 0, 400e-6}).z;
      EXPECT_NEAR(plus, minus, 1e-12 * std::abs(plus));
    }
  }
}

TEST(FieldAtTest, Superposition) {
  const CoilGeometry a = ReferenceCoil();
  const CoilGeometry b(CoilShape::kSquare, 10, Micrometers(800),
                       Micrometers(20), Micrometers(10), Micrometers(10));
  const SegmentSet sa = DiscretizeCoil(a, Amperes(0.3), {128, 1});
  const SegmentSet sb = DiscretizeCoil(b, Amperes(-0.1), {128, 1});
  SegmentSet both = sa;
  both.Append(sb);
  const Vec3 p{1e-4, -2e-4, 3e-4};
  const Vec3 sum = sa.FieldAt(p) + sb.FieldAt(p);
  const Vec3 joint = both.FieldAt(p);
  EXPECT_LT(Norm(joint - sum), 1e-12 * Norm(sum));
}

TEST(FieldAtTest, ChunkedEvaluationMatchesMaterialized) {
  const CoilGeometry coil = ReferenceCoil();
  const DiscretizationSpec spec{1024, 40};  // > one streaming chunk
  const Vec3 p{1e-4, 0, 2e-4};
  const Vec3 streamed = FieldAt(coil, Amperes(1), p, spec);
  const Vec3 whole = DiscretizeCoil(coil, Amperes(1), spec).FieldAt(p);
  EXPECT_LT(Norm(streamed - whole), 1e-12 * Norm(whole));
}

TEST(FieldAtTest, PointOnConductorThrows) {
  const CoilGeometry coil = ReferenceCoil(CoilShape::kSquare);
  const double a = TurnAnnuli(coil).back().centerline_radius.si();
  EXPECT_THROW(FieldAt(coil, Amperes(1), {a, 0, 0}, {8, 1}), SingularityError);
}

TEST(FieldAtTest, IsaVariantsAgree) {
  const SegmentSet segs = DiscretizeCoil(ReferenceCoil(), Amperes(1), {512, 1});
  const Vec3 p{2e-4, 1e-4, 3e-4};
  const Vec3 ref = segs.FieldAt(p, simd::Isa::kScalar);
  const Vec3 best = segs.FieldAt(p, simd::BestIsa());
  EXPECT_LT(Norm(best - ref), 1e-12 * Norm(ref));
}

TEST(LateralProfileTest, ShapeAtTwoHeights) {
  const CoilGeometry coil = ReferenceCoil();
  const DiscretizationSpec spec{256, 1};
  const FieldProfile p2 = LateralProfile(coil, Milliamperes(300), Millimeters(2),
                                         Millimeters(-1), Millimeters(1), 41, spec);
  const FieldProfile p3 = LateralProfile(coil, Milliamperes(300), Millimeters(3),
                                         Millimeters(-1), Millimeters(1), 41, spec);
  ASSERT_TRUE(p2.normalized.has_value());
  ASSERT_TRUE(p3.normalized.has_value());
  EXPECT_EQ(p2.model, kOracleModel);
  const auto& n2 = *p2.normalized;
  const auto& n3 = *p3.normalized;
  const int mid = 20;
  EXPECT_DOUBLE_EQ(n2[mid], 1.0);
  for (int k = 1; k <= mid; ++k) {
    EXPECT_NEAR(n2[mid + k], n2[mid - k], 1e-12);
    EXPECT_LT(n2[mid + k], n2[mid + k - 1]);
    EXPECT_GT(n3[mid + k], n2[mid + k]);
  }
  // Offset 0.5 mm is sample mid + 10.
  EXPECT_NEAR(InMillimeters(p2.samples[mid + 10].lateral_offset), 0.5, 1e-12);
  EXPECT_GE(n2[mid + 10], 0.75);
}

TEST(LateralProfileTest, RejectsBadInput) {
  const CoilGeometry coil = ReferenceCoil();
  EXPECT_THROW(LateralProfile(coil, Amperes(1), Meters(0), Millimeters(-1),
                              Millimeters(1), 5, {}),
               ArgumentError);
  EXPECT_THROW(LateralProfile(coil, Amperes(1), Millimeters(1), Millimeters(1),
                              Millimeters(-1), 5, {}),
               ArgumentError);
  EXPECT_THROW(LateralProfile(coil, Amperes(1), Millimeters(1), Millimeters(-1),
                              Millimeters(1), 1, {}),
               ArgumentError);
}

TEST(SensorAveragedFieldTest, VanishingWindowIsPointValue) {
  const CoilGeometry coil = ReferenceCoil();
  const SensorWindow window{Micrometers(0.01), 64, false};
  const double avg =
      SensorAveragedField(coil, Amperes(1), Micrometers(280), window, {4096, 1})
          .si();
  const double point = OnAxisField(coil, Amperes(1), Micrometers(280)).si();
  EXPECT_NEAR(avg, point, 1e-3 * point);
}

TEST(SensorAveragedFieldTest, LiesBetweenWindowEndpoints) {
  const CoilGeometry coil = ReferenceCoil();
  const DiscretizationSpec spec{1024, 1};
  const SegmentSet segs = DiscretizeCoil(coil, Milliamperes(300), spec);
  for (double d : {0.0, 0.5e-3, 2e-3}) {
    const SensorWindow window{Millimeters(2), 64, false};
    const double avg =
        SensorAveragedField(coil, Milliamperes(300), Meters(d), window, spec).si();
    EXPECT_LT(avg, segs.FieldAt({0, 0, d}).z);
    EXPECT_GT(avg, segs.FieldAt({0, 0, d + 2e-3}).z);
  }
  const double at2mm = OnAxisField(coil, Milliamperes(300), Millimeters(2)).si();
  EXPECT_LT(SensorAveragedField(coil, Milliamperes(300), Millimeters(2),
                                SensorWindow{}, spec)
                .si(),
            at2mm);
}

TEST(SensorAveragedFieldTest, CenteredWindow) {
  const CoilGeometry coil = ReferenceCoil();
  const DiscretizationSpec spec{512, 1};
  const SensorWindow leading{Millimeters(1), 64, false};
  const SensorWindow centered{Millimeters(1), 64, true};
  const double a =
      SensorAveragedField(coil, Amperes(1), Millimeters(1.5), centered, spec).si();
  const double b =
      SensorAveragedField(coil, Amperes(1), Millimeters(1), leading, spec).si();
  EXPECT_NEAR(a, b, 1e-12 * b);
}

TEST(SensorAveragedFieldTest, RejectsBadInput) {
  const CoilGeometry coil = ReferenceCoil();
  EXPECT_THROW(SensorAveragedField(coil, Amperes(1), Millimeters(-1),
                                   SensorWindow{}, {}),
               ArgumentError);
  EXPECT_THROW(SensorAveragedField(coil, Amperes(1), Millimeters(1),
                                   SensorWindow{Meters(0), 64, false}, {}),
               ArgumentError);
  EXPECT_THROW(SensorAveragedField(coil, Amperes(1), Millimeters(1),
                                   SensorWindow{Millimeters(1), 63, false}, {}),
               ArgumentError);
}

TEST(OracleAxisProfileTest, TracksAnalyticProfile) {
  const CoilGeometry coil = ReferenceCoil(CoilShape::kSquare);
  const FieldProfile oracle =
      OracleAxisProfile(coil, Amperes(1), Meters(0), Millimeters(1), 11, {8, 1});
  const FieldProfile analytic =
      OnAxisProfile(coil, Amperes(1), Meters(0), Millimeters(1), 11);
  for (std::size_t i = 0; i < oracle.samples.size(); ++i) {
    EXPECT_NEAR(oracle.samples[i].h.si(), analytic.samples[i].h.si(),
                1e-9 * analytic.samples[i].h.si());
  }
}

}  // namespace
}  // namespace microcoil
