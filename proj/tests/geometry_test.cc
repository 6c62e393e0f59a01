/*
 * Copyright 2026 The Gapnav Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gapnav/geometry.h"

#include <cmath>

#include "gtest/gtest.h"

namespace gapnav {
namespace {

TEST(GeometryTest, NormalizeDegreesMapsIntoHalfOpenRange) {
  EXPECT_EQ(NormalizeDegrees(0.0), 0.0);
  EXPECT_EQ(NormalizeDegrees(360.0), 0.0);
  EXPECT_EQ(NormalizeDegrees(-90.0), 270.0);
  EXPECT_EQ(NormalizeDegrees(725.0), 5.0);
  EXPECT_EQ(NormalizeDegrees(-1e-20), 0.0);
}

TEST(GeometryTest, NormalizeDegreesKeepsInRangeValuesBitExact) {
  for (const double deg : {0.1, 12.345678901234, 179.99999999, 359.9999}) {
    EXPECT_EQ(NormalizeDegrees(deg), deg);
  }
}

TEST(GeometryTest, WrapDegreesIsSignedAndHalfOpen) {
  EXPECT_EQ(WrapDegrees(180.0), 180.0);
  EXPECT_EQ(WrapDegrees(-180.0), 180.0);
  EXPECT_EQ(WrapDegrees(190.0), -170.0);
  EXPECT_EQ(WrapDegrees(-10.0), -10.0);
  EXPECT_EQ(WrapDegrees(360.0), 0.0);
}

TEST(GeometryTest, AngularDistanceIsSymmetric) {
  EXPECT_EQ(AngularDistanceDegrees(350.0, 10.0), 20.0);
  EXPECT_EQ(AngularDistanceDegrees(10.0, 350.0), 20.0);
  EXPECT_EQ(AngularDistanceDegrees(0.0, 180.0), 180.0);
}

TEST(GeometryTest, MakePoseNormalizesHeading) {
  EXPECT_EQ(MakePose(1.0, 2.0, -90.0), (Pose{1.0, 2.0, 270.0}));
}

TEST(GeometryTest, DistanceToBoxIsZeroInsideAndEuclideanOutside) {
  const Box box{{0.0, 0.0}, {1.0, 1.0}};
  EXPECT_EQ(DistanceToBox({0.5, 0.5}, box), 0.0);
  EXPECT_EQ(DistanceToBox({1.0, 1.0}, box), 0.0);
  EXPECT_DOUBLE_EQ(DistanceToBox({2.0, 0.5}, box), 1.0);
  EXPECT_DOUBLE_EQ(DistanceToBox({4.0, 5.0}, box), 5.0);
}

}  // namespace
}  // namespace gapnav
