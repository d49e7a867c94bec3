#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "odflow/classify.hpp"
#include "odflow/style.hpp"

using namespace odflow;

namespace {

std::vector<double> iota_values(int lo, int hi) {
  std::vector<double> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

double group_ssd(const std::vector<double>& x, std::size_t b, std::size_t e) {
  double mean = 0;
  for (std::size_t i = b; i < e; ++i) mean += x[i];
  mean /= static_cast<double>(e - b);
  double s = 0;
  for (std::size_t i = b; i < e; ++i) s += (x[i] - mean) * (x[i] - mean);
  return s;
}

// Exhaustive oracle: every split of the sorted list into k nonempty runs.
double brute_force_min_sdcm(const std::vector<double>& sorted, int k) {
  const std::size_t n = sorted.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> cuts;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 1) {
      double total = 0;
      std::size_t b = 0;
      for (auto c : cuts) {
        total += group_ssd(sorted, b, c);
        b = c;
      }
      total += group_ssd(sorted, b, n);
      best = std::min(best, total);
      return;
    }
    for (std::size_t c = start + 1; c + static_cast<std::size_t>(remaining - 1) <= n; ++c) {
      cuts.push_back(c);
      rec(c, remaining - 1);
      cuts.pop_back();
    }
  };
  rec(0, k);
  return best;
}

}  // namespace

TEST(Classify, EqualInterval) {
  const std::vector<double> v = {0, 13, 100, 42};
  const auto r = classify(v, ClassMethod::equal_interval, 4);
  EXPECT_EQ(r.breaks, (std::vector<double>{25, 50, 75}));
  EXPECT_EQ(r.assign(0), 0);
  EXPECT_EQ(r.assign(25), 0);
  EXPECT_EQ(r.assign(25.0001), 1);
  EXPECT_EQ(r.assign(100), 3);
}

TEST(Classify, QuantilePositions) {
  const auto v = iota_values(1, 10);
  const auto r = classify(v, ClassMethod::quantile, 5);
  std::vector<double> oracle;
  for (int i = 1; i < 5; ++i) {
    const int pos = (i * 10 + 4) / 5;  // ceil(i n / k), 1-indexed
    oracle.push_back(v[static_cast<std::size_t>(pos - 1)]);
  }
  EXPECT_EQ(oracle, (std::vector<double>{2, 4, 6, 8}));
  EXPECT_EQ(r.breaks, oracle);
  std::vector<int> counts(5, 0);
  for (double x : v) ++counts[static_cast<std::size_t>(r.assign(x))];
  EXPECT_EQ(counts, (std::vector<int>{2, 2, 2, 2, 2}));
}

TEST(Classify, QuantileTiesAreRejected) {
  const std::vector<double> v = {1, 1, 1, 1, 1, 1, 2, 3};
  try {
    classify(v, ClassMethod::quantile, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_few_distinct_values);
  }
  EXPECT_THROW(classify(std::vector<double>{5, 5, 5}, ClassMethod::jenks, 2), Error);
}

TEST(Classify, JenksTwoClusters) {
  const std::vector<double> v = {10, 1, 12, 2, 11, 3};
  const auto r = classify(v, ClassMethod::jenks, 2);
  EXPECT_EQ(r.breaks, std::vector<double>{3});
  EXPECT_EQ(r.assign(3), 0);
  EXPECT_EQ(r.assign(10), 1);
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_NEAR(sdcm(v, r), brute_force_min_sdcm(sorted, 2), 1e-12);
}

TEST(Classify, JenksMatchesBruteForce) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nd(2, 12), kd(2, 4), vd(0, 40);
  std::uniform_real_distribution<double> ud(-50, 50);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = nd(rng);
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(trial % 2 ? static_cast<double>(vd(rng)) : ud(rng));
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = std::set<double>(v.begin(), v.end()).size();
    const int k = std::min<int>(kd(rng), static_cast<int>(distinct));
    if (k < 2) continue;
    const auto r = classify(v, ClassMethod::jenks, k);
    const double oracle = brute_force_min_sdcm(sorted, k);
    EXPECT_NEAR(sdcm(v, r), oracle, 1e-9 * std::max(1.0, oracle)) << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 90);
}

TEST(Classify, ManualBreaks) {
  const auto v = iota_values(0, 10);
  const std::vector<double> b = {2.5, 7};
  const auto r = classify(v, ClassMethod::manual, 3, b);
  EXPECT_EQ(r.breaks, b);
  try {
    classify(v, ClassMethod::manual, 3, std::vector<double>{2, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::breaks_out_of_range);
  }
  EXPECT_THROW(classify(v, ClassMethod::manual, 3, std::vector<double>{5, 2}), Error);
  EXPECT_THROW(classify(v, ClassMethod::manual, 3, std::vector<double>{5}), Error);
}

TEST(Classify, ArgumentErrors) {
  EXPECT_THROW(classify(std::vector<double>{}, ClassMethod::quantile, 3), Error);
  EXPECT_THROW(classify(iota_values(1, 20), ClassMethod::quantile, 1), Error);
  EXPECT_THROW(classify(iota_values(1, 20), ClassMethod::quantile, 10), Error);
}

TEST(Classify, PropertiesAcrossMethods) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1000);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> v(30);
    for (auto& x : v) x = u(rng);
    for (auto m : {ClassMethod::equal_interval, ClassMethod::quantile, ClassMethod::jenks}) {
      const int k = 2 + trial % 8;
      const auto r = classify(v, m, k);
      ASSERT_EQ(r.breaks.size(), static_cast<std::size_t>(k - 1));
      for (std::size_t i = 1; i < r.breaks.size(); ++i) EXPECT_LT(r.breaks[i - 1], r.breaks[i]);
      EXPECT_EQ(r.assign(r.min), 0);
      EXPECT_EQ(r.assign(r.max), k - 1);
      std::vector<double> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      int prev = 0;
      for (double x : sorted) {
        EXPECT_GE(r.assign(x), prev);
        prev = r.assign(x);
      }
      auto shuffled = v;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(classify(shuffled, m, k).breaks, r.breaks);
    }
    // Equal interval is equivariant under positive affine maps.
    std::vector<double> w;
    for (double x : v) w.push_back(3.0 * x + 7.0);
    const auto a = classify(v, ClassMethod::equal_interval, 5);
    const auto b = classify(w, ClassMethod::equal_interval, 5);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(b.breaks[i], 3.0 * a.breaks[i] + 7.0, 1e-9);
  }
}

TEST(Width, ProportionalScale) {
  EXPECT_EQ(proportional_width(0, 0, 10, 1, 12), 1.0);
  EXPECT_EQ(proportional_width(10, 0, 10, 1, 12), 12.0);
  EXPECT_EQ(proportional_width(5, 0, 10, 1, 12), 6.5);
  EXPECT_EQ(proportional_width(3, 3, 3, 1, 12), 6.5);
  EXPECT_EQ(proportional_width(242800, 0, 242800, 1, 12), 12.0);
  EXPECT_EQ(class_width(0, 4, 2, 8), 2.0);
  EXPECT_EQ(class_width(3, 4, 2, 8), 8.0);
}

TEST(Color, Interpolation) {
  const ColorRamp wb{ColorRamp::Mode::continuous, {255, 255, 255}, {0, 0, 255}, {}};
  EXPECT_EQ(interpolate_color(0, 0, 1, wb), (Rgb{255, 255, 255}));
  EXPECT_EQ(interpolate_color(1, 0, 1, wb), (Rgb{0, 0, 255}));
  EXPECT_EQ(interpolate_color(0.5, 0, 1, wb), (Rgb{128, 128, 255}));
  const ColorRamp wk{ColorRamp::Mode::continuous, {255, 255, 255}, {0, 0, 0}, {}};
  // Oracle: 255 * (1 - 0.25) = 191.25 -> 191.
  EXPECT_EQ(interpolate_color(25, 0, 100, wk), (Rgb{191, 191, 191}));
  const ColorRamp up{ColorRamp::Mode::continuous, {10, 20, 30}, {200, 220, 240}, {}};
  Rgb prev = up.from;
  for (int i = 0; i <= 100; ++i) {
    const auto c = interpolate_color(i, 0, 100, up);
    EXPECT_GE(c.r, prev.r);
    EXPECT_GE(c.g, prev.g);
    EXPECT_GE(c.b, prev.b);
    prev = c;
  }
}

TEST(Color, SchemesAndHex) {
  const auto blues = scheme_colors("Blues", 5);
  ASSERT_TRUE(blues);
  EXPECT_EQ(blues->size(), 5u);
  EXPECT_EQ(blues->front().hex(), "#eff3ff");
  EXPECT_EQ(blues->back().hex(), "#08519c");
  const auto two = scheme_colors("RdBu", 2);
  const auto three = scheme_colors("RdBu", 3);
  ASSERT_TRUE(two && three);
  EXPECT_EQ(two->front(), three->front());
  EXPECT_EQ(two->back(), three->back());
  for (auto name : scheme_names()) {
    for (int k = 2; k <= 9; ++k) {
      const auto s = scheme_colors(name, k);
      if (s) {
        EXPECT_EQ(s->size(), static_cast<std::size_t>(k));
      }
    }
  }
  EXPECT_FALSE(scheme_colors("NoSuchScheme", 5));
  EXPECT_EQ(parse_hex_color("#A0b1C2"), (Rgb{0xa0, 0xb1, 0xc2}));
  EXPECT_FALSE(parse_hex_color("a0b1c2"));
}

TEST(Legend, ProportionalAnchors) {
  const std::vector<double> v = {10, 20, 60};
  const auto a = proportional_legend_values(v, 0);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0].value, 10.0);
  EXPECT_EQ(a[1].value, 30.0);
  EXPECT_EQ(a[2].value, 60.0);
  const auto single = proportional_legend_values(std::vector<double>{4, 4}, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].label, "4.0");
  EXPECT_EQ(proportional_legend_values(std::vector<double>{0.999, 5}, 0)[0].label, "1");
}

TEST(Legend, ClassifiedRows) {
  const auto v = iota_values(1, 10);
  ScalingSpec s;
  s.kind = ScalingSpec::Kind::classified;
  s.method = ClassMethod::quantile;
  s.k = 5;
  const auto a = legend_values(v, s, 1);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a[0].label, "1.0 – 2.0");
  EXPECT_EQ(a[4].label, "8.0 – 10.0");
}
