#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gerne/matrix.hpp"

namespace gerne {

// A partition of the samples into groups (y, a). The dataset carries its
// own grouping built from true attributes; the unknown-attribute pipeline
// swaps in a pseudo grouping with A = 2.
struct Grouping {
  int num_classes = 0;
  int num_attributes = 0;
  std::vector<int> attribute_of;              // per sample, 1..A
  std::vector<std::vector<int>> group_index;  // (y-1)*A + (a-1) -> indices
  std::vector<std::vector<int>> class_index;  // y-1 -> indices

  const std::vector<int>& group(int y, int a) const {
    return group_index[static_cast<std::size_t>(y - 1) * num_attributes +
                       (a - 1)];
  }
};

struct GroupedDataset {
  Matrix features;              // N x d
  std::vector<int> labels;      // 1..K
  std::vector<int> attributes;  // 1..A, or -1 when unknown
  bool attributes_hidden = false;
  int num_classes = 0;
  int num_attributes = 0;  // 0 when no attribute information exists

  Grouping grouping;                          // empty when attributes_hidden
  std::vector<std::vector<int>> class_index;  // always available

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return features.cols(); }
};

// alpha[y][a] = |X_{y,a}| / |X_y|, the within-class attribute frequencies.
struct GroupStats {
  Matrix alpha;        // K x A
  Matrix group_sizes;  // K x A, integral values
  std::vector<double> class_sizes;

  int num_classes() const { return static_cast<int>(alpha.rows()); }
  int num_attributes() const { return static_cast<int>(alpha.cols()); }
};

struct SyntheticSpec {
  int num_classes = 2;
  int num_attributes = 2;
  int dim = 6;
  Matrix alpha_target;  // K x A, row-stochastic, strictly positive
  int n_per_class = 2000;
  double core_separation = 2.0;
  double spurious_separation = 4.0;
  double noise_std = 1.0;
  std::uint64_t seed = 0;
};

// Class means sit on axes 0..K-1, attribute means on axes K..K+A-1, and any
// remaining axes carry pure noise. Group counts per class come from
// largest-remainder apportionment of alpha_target, so class sizes are exact.
// Throws ConfigError if any corrected group count would be zero.
GroupedDataset generate_synthetic(const SyntheticSpec& spec);

// CSV schema: header "f0,...,f{d-1},label,attribute"; label and attribute
// are 1-based; attribute may be -1 meaning unknown. With has_attributes
// false the attribute column is optional and the values, if present, are
// kept but flagged hidden.
GroupedDataset load_csv(const std::string& path, bool has_attributes);
void save_csv(const GroupedDataset& ds, const std::string& path);

GroupStats compute_group_stats(const Grouping& grouping);
// Throws ConfigError when attributes are hidden (use a pseudo grouping).
GroupStats compute_group_stats(const GroupedDataset& ds);

struct SplitResult {
  GroupedDataset train;
  GroupedDataset val;
  GroupedDataset test;
};

// Stratified per group; every non-empty group keeps at least one training
// sample; per-split proportions hold within one sample per group.
SplitResult split(const GroupedDataset& ds, const std::array<double, 3>& fractions,
                  std::uint64_t seed);

// Rebuilds index structures from features/labels/attributes. Used by the
// loaders and by split(); validates the non-empty-group invariant when
// attributes are visible.
void rebuild_index(GroupedDataset& ds);

}  // namespace gerne
