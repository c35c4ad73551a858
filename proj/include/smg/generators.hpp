#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "smg/cyclic3d.hpp"
#include "smg/smg_core.hpp"
#include "smg/smti.hpp"

namespace smg {

/// Seeded pseudorandom stream with a fixed, portable algorithm: std::mt19937_64
/// (whose output sequence the standard pins down) with integers drawn by
/// rejection sampling and doubles from the top 53 bits. Standard library
/// distributions are avoided because their output varies across vendors.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

template <class T>
std::vector<T> random_order(std::size_t n, Rng& rng) {
  auto ids = all_ids<typename T::tag_type>(n);
  rng.shuffle(ids);
  return ids;
}

struct SmgGenOptions {
  /// Per unordered pair of men, pick one of {(b,b'), (b',b), neither} uniformly.
  bool asymmetric = false;
  /// Otherwise each ordered pair is included independently with this probability.
  double relation_density = 0.5;
};

SmgInstance generate_smg(std::size_t n, Rng& rng, const SmgGenOptions& opts = {});

struct SmtiGenOptions {
  /// Probability that a man-woman pair is mutually acceptable.
  double list_density = 0.7;
  /// Probability that adjacent entries of a woman's shuffled list are merged into one tie.
  double tie_density = 0.3;
};

SmtiInstance generate_smti(std::size_t n, Rng& rng, const SmtiGenOptions& opts = {});

CyclicInstance generate_cyclic(std::size_t n, Rng& rng);

/// Random cyclic instance with a uniformly random fixed matching.
SeInstance generate_se(std::size_t n, Rng& rng);

/// Every SMTI instance on n men and n women (strict men's lists, women's lists
/// with ties, symmetric acceptability), optionally limited to instances whose
/// women's lists have at most max_total_positions positions in total.
std::vector<SmtiInstance> all_smti_instances(std::size_t n, std::size_t max_total_positions = SIZE_MAX);

}  // namespace smg
