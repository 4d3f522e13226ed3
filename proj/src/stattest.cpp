// Copyright 2026 The filament-prng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "filament_prng/stattest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <set>
#include <string>

#include "filament_prng/error.hpp"
#include "filament_prng/modular.hpp"
#include "filament_prng/parallel.hpp"

namespace fprng {
namespace {

// Upper chi-square quantiles, dof = 1..100.
constexpr std::array<double, 100> kChi2Q95 = {
    3.841458820694124, 5.991464547107979, 7.814727903251179, 9.487729036781154,
    11.070497693516351, 12.591587243743977, 14.067140449340169, 15.50731305586545,
    16.918977604620448, 18.307038053275146, 19.67513757268249, 21.02606981748307,
    22.362032494826934, 23.684791304840576, 24.995790139728616, 26.29622760486423,
    27.58711163827534, 28.869299430392623, 30.14352720564616, 31.410432844230918,
    32.670573340917315, 33.92443847144381, 35.17246162690806, 36.41502850180731,
    37.65248413348277, 38.885138659830055, 40.113272069413625, 41.33713815142739,
    42.55696780429269, 43.77297182574219, 44.98534328036513, 46.19425952027847,
    47.39988391908093, 48.602367367294164, 49.80184956820181, 50.99846016571065,
    52.192319730102895, 53.383540622969356, 54.572227758941736, 55.75847927888702,
    56.94238714682408, 58.12403768086803, 59.30351202689981, 60.480886582336446,
    61.65623337627955, 62.829620411408165, 64.00111197221803, 65.17076890356982,
    66.3386488629688, 67.5048065495412, 68.66929391228578, 69.83216033984813,
    70.99345283378227, 72.15321616702309, 73.31149302908324, 74.46832415930936,
    75.62374846937608, 76.7778031560615, 77.93052380523042, 79.08194448784874,
    80.23209784876272, 81.3810151888991, 82.5287265414718, 83.67526074272097,
    84.82064549765667, 85.96490744123096, 87.10807219532191, 88.25016442187412,
    89.39120787250796, 90.53122543488065, 91.67023917605484, 92.80827038310771,
    93.94533960119225, 95.08146666924324, 96.21667075350383, 97.35097037903296,
    98.48438345934042, 99.61692732428385, 100.74861874635032, 101.87947396543588,
    103.00950871222618, 104.13873823027387, 105.26717729686034, 106.39484024272251,
    107.52174097071946, 108.6478929735076, 109.77330935028795, 110.89800282268448,
    112.02198574980785, 113.1452701425554, 114.26786767719355, 115.38978970826685,
    116.51104728087356, 117.63165114234555, 118.75161175336736, 119.87093929856714,
    120.98964369660958, 122.10773460981942, 123.2252214533618, 124.34211340400407,
};

constexpr std::array<double, 100> kChi2Q99 = {
    6.6348966010212145, 9.21034037197618, 11.344866730144373, 13.276704135987622,
    15.08627246938899, 16.811893829770927, 18.475306906582357, 20.090235029663233,
    21.665994333461924, 23.209251158954356, 24.724970311318277, 26.216967305535853,
    27.68824961045705, 29.141237740672796, 30.57791416689249, 31.999926908815176,
    33.40866360500461, 34.805305734705065, 36.19086912927004, 37.56623478662507,
    38.93217268351607, 40.289360437593864, 41.638398118858476, 42.97982013935165,
    44.31410489621915, 45.64168266628317, 46.962942124751436, 48.27823577031548,
    49.58788447289881, 50.89218131151707, 52.19139483319193, 53.48577183623535,
    54.77553976011035, 56.06090874778906, 57.3420734338592, 58.61921450168706,
    59.89250004508689, 61.1620867636897, 62.4281210161849, 63.690739751564465,
    64.9500713352112, 66.20623628399322, 67.45934792232582, 68.7095129693454,
    69.95683206583814, 71.20140024831149, 72.44330737654823, 73.68263852010573,
    74.91947430847816, 76.1538912490127, 77.38596201613736, 78.6157557150025,
    79.84333812225145, 81.0687719062971, 82.29211682919967, 83.51342993198946,
    84.73276570506393, 85.95017624510335, 87.16571139978757, 88.37941890144937,
    89.59134449068712, 90.80153203083871, 92.01002361413214, 93.21685966023843,
    94.42207900788506, 95.62571900011294, 96.82781556371239, 98.02840328331405,
    99.22751547056947, 100.42518422881135, 101.62144051355205, 102.81631418914067,
    104.00983408187484, 105.20202802983307, 106.3929229296718, 107.58254478061242,
    108.77091872581823, 109.95806909135288, 111.14401942288376, 112.32879252029748,
    113.51241047036046, 114.69489467756802, 115.87626589329334, 117.0565442433582,
    118.23574925412316, 119.413899877195, 120.59101451284052, 121.76711103218736,
    122.9422067982886, 124.11631868612129, 125.28946310158369, 126.46165599955252,
    127.63291290105586, 128.80324890961418, 129.97267872679876, 131.141216667052,
    132.30887667181258, 133.47567232298493, 134.64161685578915, 135.80672317102676,
};

constexpr std::array<double, 100> kChi2Q999 = {
    10.827566170662733, 13.815510557964274, 16.26623619623813, 18.46682695290317,
    20.515005652432873, 22.457744484825323, 24.321886347856854, 26.12448155837614,
    27.877164871256568, 29.58829844507442, 31.264133620239985, 32.90949040736021,
    34.52817897487089, 36.12327368039813, 37.69729821835383, 39.252354790768464,
    40.79021670690253, 42.31239633167996, 43.82019596451753, 45.31474661812586,
    46.797038041561315, 48.26794229083518, 49.7282324664315, 51.17859777737739,
    52.619655776172834, 54.05196238857664, 55.47602020574521, 56.892285393353625,
    58.301173489794905, 59.70306430442994, 61.098306081058126, 62.487219057088474,
    63.870098522344946, 65.24721746094244, 66.61882884370104, 67.98516762602424,
    69.3464524962412, 70.70288741150503, 72.0546629519878, 73.40195751899103,
    74.74493839842374, 76.08376270770002, 77.41857824131394, 78.74952422804303,
    80.07673201081901, 81.40032565870999, 82.72042251912399, 84.03713371722348,
    85.35056460859305, 86.66081519040317, 87.96798047562868, 89.27215083430448,
    90.5734123052986, 91.8718468816601, 93.16753277222854, 94.46054464187807,
    95.75095383248956, 97.03882856650883, 98.32423413474163, 99.60723306984946,
    100.8878853068583, 102.16624833184879, 103.44237731987324, 104.71632526304057,
    105.98814308961282, 107.25787977487072, 108.52558244443486, 109.79129647066172,
    111.05506556267146, 112.31693185051572, 113.57693596394476, 114.83511710619328,
    116.09151312316095, 117.34616056833929, 118.59909476379528, 119.85034985750531,
    121.09995887729859, 122.34795378165676, 123.59436550758484, 124.83922401576478,
    126.08255833316952, 127.32439659331791, 128.56476607432293, 129.80369323488026,
    131.04120374833502, 132.27732253494605, 133.51207379246583, 134.7454810251423,
    135.97756707124026, 137.20835412917324, 138.437863782331, 139.66611702268335,
    140.8931342732306, 142.11893540936777, 143.34353977923126, 144.56696622308277,
    145.7892330917839, 147.01035826441762, 148.23035916510173, 149.44925277903886,
};

// Sorted distinct coordinates of one dimension with 1 appended, and the rank
// of every point's coordinate in that list.
struct AxisGrid {
  std::vector<double> values;
  std::vector<int> rank;
};

AxisGrid make_axis(const TupleCloud& cloud, int d) {
  AxisGrid axis;
  axis.values.reserve(static_cast<std::size_t>(cloud.N) + 1);
  for (std::int64_t i = 0; i < cloud.N; ++i) axis.values.push_back(cloud.point(i)[d]);
  std::sort(axis.values.begin(), axis.values.end());
  axis.values.erase(std::unique(axis.values.begin(), axis.values.end()),
                    axis.values.end());
  axis.values.push_back(1.0);
  axis.rank.reserve(static_cast<std::size_t>(cloud.N));
  for (std::int64_t i = 0; i < cloud.N; ++i) {
    const auto it = std::lower_bound(axis.values.begin(), axis.values.end(),
                                     cloud.point(i)[d]);
    axis.rank.push_back(static_cast<int>(it - axis.values.begin()));
  }
  return axis;
}

// Local discrepancy at a grid corner: the open box under-counts, the closed
// box over-counts.
inline double local_gap(double volume, double open, double closed, double n) {
  return std::max(volume - open / n, closed / n - volume);
}

double star_1d(const TupleCloud& cloud) {
  const AxisGrid x = make_axis(cloud, 0);
  const auto m = x.values.size();
  std::vector<std::int64_t> hist(m, 0);
  for (int r : x.rank) ++hist[static_cast<std::size_t>(r)];
  const auto n = static_cast<double>(cloud.N);
  double best = 0.0;
  std::int64_t below = 0;
  for (std::size_t a = 0; a < m; ++a) {
    const std::int64_t upto = below + hist[a];
    best = std::max(best, local_gap(x.values[a], static_cast<double>(below),
                                    static_cast<double>(upto), n));
    below = upto;
  }
  return best;
}

// Points bucketed by their x rank.
std::vector<std::vector<std::int64_t>> bucket_by_rank(const AxisGrid& axis) {
  std::vector<std::vector<std::int64_t>> buckets(axis.values.size());
  for (std::size_t i = 0; i < axis.rank.size(); ++i) {
    buckets[static_cast<std::size_t>(axis.rank[i])].push_back(
        static_cast<std::int64_t>(i));
  }
  return buckets;
}

// Max over a of a per-x-slab sweep, split into contiguous slabs per worker.
template <typename Sweep>
double reduce_over_x(std::size_t mx, Sweep sweep) {
  std::mutex mu;
  double best = 0.0;
  parallel_chunks(static_cast<std::int64_t>(mx), [&](std::int64_t begin, std::int64_t end) {
    const double local = sweep(static_cast<std::size_t>(begin), static_cast<std::size_t>(end));
    std::lock_guard<std::mutex> lock(mu);
    best = std::max(best, local);
  });
  return best;
}

double star_2d(const TupleCloud& cloud) {
  const AxisGrid x = make_axis(cloud, 0);
  const AxisGrid y = make_axis(cloud, 1);
  const auto buckets = bucket_by_rank(x);
  const std::size_t my = y.values.size();
  const auto n = static_cast<double>(cloud.N);

  return reduce_over_x(x.values.size(), [&](std::size_t a0, std::size_t a1) {
    std::vector<std::int64_t> hist(my, 0);
    for (std::size_t i = 0; i < x.rank.size(); ++i) {
      if (static_cast<std::size_t>(x.rank[i]) < a0) ++hist[static_cast<std::size_t>(y.rank[i])];
    }
    std::vector<std::int64_t> open(my);
    double best = 0.0;
    for (std::size_t a = a0; a < a1; ++a) {
      std::int64_t run = 0;
      for (std::size_t b = 0; b < my; ++b) {
        open[b] = run;
        run += hist[b];
      }
      for (std::int64_t i : buckets[a]) ++hist[static_cast<std::size_t>(y.rank[static_cast<std::size_t>(i)])];
      run = 0;
      for (std::size_t b = 0; b < my; ++b) {
        run += hist[b];
        const double volume = x.values[a] * y.values[b];
        best = std::max(best, local_gap(volume, static_cast<double>(open[b]),
                                        static_cast<double>(run), n));
      }
    }
    return best;
  });
}

double star_3d(const TupleCloud& cloud) {
  const AxisGrid x = make_axis(cloud, 0);
  const AxisGrid y = make_axis(cloud, 1);
  const AxisGrid z = make_axis(cloud, 2);
  const auto buckets = bucket_by_rank(x);
  const std::size_t my = y.values.size();
  const std::size_t mz = z.values.size();
  const std::size_t stride = mz + 1;
  const auto n = static_cast<double>(cloud.N);

  return reduce_over_x(x.values.size(), [&](std::size_t a0, std::size_t a1) {
    // table[b * stride + c] = #added points with y rank < b and z rank < c.
    std::vector<std::int32_t> table((my + 1) * stride, 0);
    for (std::size_t i = 0; i < x.rank.size(); ++i) {
      if (static_cast<std::size_t>(x.rank[i]) < a0) {
        ++table[(static_cast<std::size_t>(y.rank[i]) + 1) * stride +
                static_cast<std::size_t>(z.rank[i]) + 1];
      }
    }
    for (std::size_t b = 1; b <= my; ++b) {
      for (std::size_t c = 1; c <= mz; ++c) {
        table[b * stride + c] += table[(b - 1) * stride + c] +
                                 table[b * stride + c - 1] -
                                 table[(b - 1) * stride + c - 1];
      }
    }
    double best = 0.0;
    for (std::size_t a = a0; a < a1; ++a) {
      for (std::size_t b = 0; b < my; ++b) {
        const double xy = x.values[a] * y.values[b];
        const std::int32_t* row = &table[b * stride];
        for (std::size_t c = 0; c < mz; ++c) {
          best = std::max(best, xy * z.values[c] - static_cast<double>(row[c]) / n);
        }
      }
      for (std::int64_t i : buckets[a]) {
        const auto ry = static_cast<std::size_t>(y.rank[static_cast<std::size_t>(i)]);
        const auto rz = static_cast<std::size_t>(z.rank[static_cast<std::size_t>(i)]);
        for (std::size_t b = ry + 1; b <= my; ++b) {
          std::int32_t* row = &table[b * stride];
          for (std::size_t c = rz + 1; c <= mz; ++c) ++row[c];
        }
      }
      for (std::size_t b = 0; b < my; ++b) {
        const double xy = x.values[a] * y.values[b];
        const std::int32_t* row = &table[(b + 1) * stride];
        for (std::size_t c = 0; c < mz; ++c) {
          best = std::max(best, static_cast<double>(row[c + 1]) / n - xy * z.values[c]);
        }
      }
    }
    return best;
  });
}

void check_lags(const std::vector<std::int64_t>& lags, int k, std::int64_t n) {
  if (static_cast<int>(lags.size()) != k || lags.front() != 0) {
    throw Error(ErrorCode::kBadLags, "need k lags starting at 0");
  }
  for (std::size_t i = 1; i < lags.size(); ++i) {
    if (lags[i] <= lags[i - 1]) {
      throw Error(ErrorCode::kBadLags, "lags must be strictly increasing");
    }
  }
  if (lags.back() >= n) {
    throw Error(ErrorCode::kBadLags, "largest lag must be below the period");
  }
}

}  // namespace

TupleCloud make_tuples(std::span<const double> samples, int k,
                       const std::vector<std::int64_t>& lags) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");
  if (k < 1) throw Error(ErrorCode::kBadDimension, "dimension must be >= 1");
  const auto n = static_cast<std::int64_t>(samples.size());
  check_lags(lags, k, n);
  for (double u : samples) {
    if (!(u >= 0.0 && u < 1.0)) {
      throw Error(ErrorCode::kBadParameters, "sample outside [0, 1)");
    }
  }
  TupleCloud cloud;
  cloud.k = k;
  cloud.lags = lags;
  cloud.N = n;
  cloud.coords.reserve(static_cast<std::size_t>(n * k));
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t lag : lags) {
      cloud.coords.push_back(samples[static_cast<std::size_t>((i + lag) % n)]);
    }
  }
  return cloud;
}

TupleCloud make_tuples(std::span<const UnitSample> samples, int k,
                       const std::vector<std::int64_t>& lags) {
  std::vector<double> u;
  u.reserve(samples.size());
  for (const UnitSample& s : samples) u.push_back(s.u);
  return make_tuples(std::span<const double>(u), k, lags);
}

TupleCloud make_cloud(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "no points");
  TupleCloud cloud;
  cloud.k = static_cast<int>(points.front().size());
  if (cloud.k < 1) throw Error(ErrorCode::kBadDimension, "dimension must be >= 1");
  cloud.N = static_cast<std::int64_t>(points.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != cloud.k) {
      throw Error(ErrorCode::kBadDimension, "points of mixed dimension");
    }
    for (double c : p) {
      if (!(c >= 0.0 && c < 1.0)) {
        throw Error(ErrorCode::kBadParameters, "coordinate outside [0, 1)");
      }
      cloud.coords.push_back(c);
    }
  }
  return cloud;
}

double star_discrepancy(const TupleCloud& cloud) {
  if (cloud.N < 1) throw Error(ErrorCode::kEmptyInput, "empty point set");
  if (cloud.k < 1) throw Error(ErrorCode::kBadDimension, "dimension must be >= 1");
  if (cloud.k > kMaxExactDimension ||
      (cloud.k > 1 && cloud.N > kMaxExactPoints)) {
    throw Error(ErrorCode::kTooLarge,
                "exact star discrepancy limited to k <= 3 and N <= 4096 for k > 1");
  }
  switch (cloud.k) {
    case 1: return star_1d(cloud);
    case 2: return star_2d(cloud);
    default: return star_3d(cloud);
  }
}

DiscrepancyReport serial_test(std::span<const double> samples, int k,
                              const std::vector<std::int64_t>& lags) {
  const TupleCloud cloud = make_tuples(samples, k, lags);
  DiscrepancyReport report;
  report.star = star_discrepancy(cloud);
  report.extreme_lower = report.star;
  report.extreme_upper = std::ldexp(report.star, k);
  report.k = k;
  report.N = cloud.N;
  report.lags = lags;
  const std::int64_t p = cloud.N;
  if (is_prime(p) && k >= 2 && k < p) {
    report.theorem2_upper = theorem2_upper(p, k);
    report.theorem_lower_scale = theorem3_lower(p, 1.0).threshold;
  }
  if (p >= 3) {
    const double pd = static_cast<double>(p);
    report.random_reference = std::sqrt(std::log(std::log(pd)) / pd);
  }
  return report;
}

double theorem2_upper(std::int64_t p, int k) {
  if (k < 2 || k >= p) {
    throw Error(ErrorCode::kBadDimension, "needs 2 <= k < p");
  }
  const double pd = static_cast<double>(p);
  const double base = 2.0 / std::numbers::pi * std::log(pd) + 7.0 / 5.0;
  return 2.0 / std::sqrt(pd) * ((k - 1) * std::pow(base, k) + 1.0) + k / pd;
}

Theorem3Values theorem3_lower(std::int64_t p, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::kBadT, "needs 0 < t <= 1");
  if (p < 2) throw Error(ErrorCode::kRange, "needs p >= 2");
  const double pd = static_cast<double>(p);
  const double root = std::sqrt(pd);
  return {t / (2.0 * (std::numbers::pi + 2.0)) / root,
          (1.0 - t * t) * pd / ((4.0 - t * t) * pd + 12.0 * root + 9.0)};
}

BoundReport bound_report(std::int64_t p, int k, double t) {
  const Theorem3Values lower = theorem3_lower(p, t);
  return {p, k, theorem2_upper(p, k), t, lower.threshold, lower.A};
}

Theorem3Fraction theorem3_fraction(std::int64_t p, int k, double t,
                                   std::int64_t samples) {
  Theorem3Fraction out;
  out.values = theorem3_lower(p, t);
  std::vector<std::int64_t> lags(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) lags[static_cast<std::size_t>(i)] = i;
  const std::int64_t available = p - 1;
  const std::int64_t take = (samples <= 0 || samples >= available) ? available : samples;
  for (std::int64_t j = 0; j < take; ++j) {
    StreamSpec spec;
    spec.kind = StreamKind::kEicg;
    spec.modulus = p;
    spec.a = 1 + j * available / take;
    spec.b = 0;
    const auto stream = eicg_stream(spec, p);
    const double star = star_discrepancy(make_tuples(std::span<const UnitSample>(stream), k, lags));
    ++out.tested;
    if (star >= out.values.threshold) ++out.above;
  }
  out.fraction = out.tested == 0 ? 0.0
                                 : static_cast<double>(out.above) /
                                       static_cast<double>(out.tested);
  return out;
}

std::int64_t randu_plane_count(std::int64_t sample_count) {
  if (sample_count < 3) {
    throw Error(ErrorCode::kBadParameters, "need at least 3 samples");
  }
  constexpr std::uint64_t kMask = (std::uint64_t{1} << 31) - 1;
  std::uint64_t x0 = 1;
  std::uint64_t x1 = (65539 * x0) & kMask;
  std::set<std::int64_t> planes;
  for (std::int64_t n = 0; n + 2 < sample_count; ++n) {
    const std::uint64_t x2 = (65539 * x1) & kMask;
    const std::int64_t combo = static_cast<std::int64_t>(x2) -
                               6 * static_cast<std::int64_t>(x1) +
                               9 * static_cast<std::int64_t>(x0);
    // combo is an exact multiple of 2^31, so the shift is an exact division.
    planes.insert(combo >> 31);
    x0 = x1;
    x1 = x2;
  }
  return static_cast<std::int64_t>(planes.size());
}

bool randu_recurrence_holds(std::int64_t sample_count) {
  constexpr std::uint64_t kMask = (std::uint64_t{1} << 31) - 1;
  std::uint64_t x0 = 1;
  std::uint64_t x1 = (65539 * x0) & kMask;
  for (std::int64_t n = 0; n + 2 < sample_count; ++n) {
    const std::uint64_t x2 = (65539 * x1) & kMask;
    if (((9 * x0 - 6 * x1 + x2) & kMask) != 0) return false;
    x0 = x1;
    x1 = x2;
  }
  return true;
}

ChiSquare chi_square_uniformity(std::span<const double> samples, int bins) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");
  if (bins < 2) throw Error(ErrorCode::kBadParameters, "need at least 2 bins");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
  const auto edge = [bins](int j) { return static_cast<double>(j) / bins; };
  for (double u : samples) {
    if (!(u >= 0.0 && u < 1.0)) {
      throw Error(ErrorCode::kBadParameters, "sample outside [0, 1)");
    }
    // Bin edges are the correctly rounded j / bins, so u = j / q lands in
    // bin j when bins = q.
    int j = std::clamp(static_cast<int>(u * bins), 0, bins - 1);
    while (j + 1 < bins && u >= edge(j + 1)) ++j;
    while (j > 0 && u < edge(j)) --j;
    ++counts[static_cast<std::size_t>(j)];
  }
  const double expected = static_cast<double>(samples.size()) / bins;
  double statistic = 0.0;
  for (std::int64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  return {statistic, bins};
}

double chi_square_quantile(int dof, double level) {
  if (dof < 1 || dof > 100) throw Error(ErrorCode::kRange, "dof outside [1, 100]");
  const auto i = static_cast<std::size_t>(dof - 1);
  if (level == 0.95) return kChi2Q95[i];
  if (level == 0.99) return kChi2Q99[i];
  if (level == 0.999) return kChi2Q999[i];
  throw Error(ErrorCode::kBadParameters, "level must be 0.95, 0.99 or 0.999");
}

}  // namespace fprng
