#pragma once

#include <vector>

namespace crr {

// Reference fixtures, v1: published tabulated extreme zeros and bounds for
// this polynomial family, printed to 5 decimals.  The rry columns come from
// the discriminant bound formula implemented in extreme_bounds(); the jt and
// mrv columns come from two external bounding methods and are carried for
// display only, never recomputed here.
struct BoundsFixtureRow {
  double param;    // lambda (table 1) or eta (table 2)
  double x_min, rry_min, mrv_min, jt_min;
  double x_max, rry_max, mrv_max, jt_max;
  bool suspect;    // excluded from comparisons, see README
};

// eta = 2, n = 30, by lambda.
inline const std::vector<BoundsFixtureRow>& table1_fixture() {
  static const std::vector<BoundsFixtureRow> rows = {
      {0.75, -3.60366, -6.23369, -6.40957, -4.97174, 51.93148, 64.38003, 133.35633, 62.30239, false},
      {1.75, -3.56614, -5.49264, -5.12489, -5.13691, 18.22559, 24.05906, 19.87006, 24.48929, false},
      {5.0,  -2.94731, -3.83491, -4.12943, -4.05698, 5.99823, 7.61473, 8.41346, 8.05698, false},
      {10.0, -2.24406, -2.69331, -2.96588, -2.87276, 3.31253, 3.95257, 4.44314, 4.20609, false},
      {15.0, -1.84833, -2.14342, -2.34765, -2.28402, 2.43428, 2.81256, 3.11345, 2.98990, false},
      {20.0, -1.59757, -1.81694, -1.97708, -1.93278, 1.98455, 2.24960, 2.46186, 2.38732, false},
      {25.0, -1.42313, -1.59827, -1.72983, -1.69740, 1.70595, 1.90970, 2.07325, 2.02333, false},
      {70.0, -0.83027, -0.89890, -0.95410, -0.94747, 0.90430, 0.97623, 1.03484, 1.02684, false},
  };
  return rows;
}

// lambda = 1.5, n = 4, by eta.  The eta = 5 row duplicates the eta = 2,
// n = 30, lambda = 15 row of table 1 and contradicts the bound formula at
// these parameters; it is flagged suspect and excluded from comparisons.
inline const std::vector<BoundsFixtureRow>& table2_fixture() {
  static const std::vector<BoundsFixtureRow> rows = {
      {0.0,  -1.18804, -1.41421, -1.28644, -1.61803, 1.18804, 1.41421, 1.28644, 1.61803, false},
      {0.5,  -0.81060, -1.00000, -0.97680, -1.13951, 1.68062, 1.9333, 1.69224, 2.18714, false},
      {1.5,  -0.31265, -0.43303, -0.50471, -0.41745, 2.94807, 3.23303, 3.31012, 3.56030, false},
      {5.0,  -1.84833, -2.14342, -2.34765, -2.28402, 2.43428, 2.81256, 3.11345, 2.98990, true},
      {7.0,  0.96538, 0.91036, 0.76104, 0.85254, 11.54147, 12.15630, 13.75984, 12.96786, false},
      {15.0, 2.33259, 2.25266, 1.98870, 2.07881, 24.51550, 25.74734, 29.32890, 27.39236, false},
      {35.0, 5.58634, 5.41883, 4.83529, 4.99376, 57.08690, 59.91450, 68.35048, 63.70115, false},
      {90.0, 14.43584, 14.01430, 12.52994, 12.91264, 146.73775, 153.98571, 175.71725, 163.69722, false},
  };
  return rows;
}

}  // namespace crr
