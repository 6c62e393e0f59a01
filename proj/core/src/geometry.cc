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

namespace gapnav {

double NormalizeDegrees(double deg) {
  if (deg >= 0.0 && deg < 360.0) return deg;
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  // A tiny negative remainder can round up to exactly 360.
  if (r >= 360.0) r -= 360.0;
  return r;
}

double WrapDegrees(double deg) {
  const double r = NormalizeDegrees(deg);
  return r > 180.0 ? r - 360.0 : r;
}

double AngularDistanceDegrees(double a, double b) {
  return std::abs(WrapDegrees(a - b));
}

}  // namespace gapnav
