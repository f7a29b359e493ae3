#ifndef WSMIL_DATASET_HPP
#define WSMIL_DATASET_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wsmil {

// One web image stand-in: a feature vector plus the subcategory whose
// query retrieved it and its position in that query's result ranking.
struct Instance {
  std::int64_t id = 0;
  int subcategory = 0;  // in [0, S)
  int rank = 0;         // >= 0, retrieval order within the bag
  std::vector<double> features;

  bool operator==(const Instance&) const = default;
};

// A group of instances sharing one weak category label.
struct Bag {
  std::int64_t id = 0;
  int category = 0;  // in [0, C)
  std::vector<std::int64_t> instance_ids;  // nonempty, rank ascending

  bool operator==(const Bag&) const = default;
};

class Dataset {
 public:
  int num_categories = 0;     // C
  int num_subcategories = 0;  // S
  int feature_dim = 0;        // F
  std::vector<Instance> instances;
  std::vector<Bag> bags;

  // Rebuilds the id -> position index and checks every invariant:
  // unique ids, feature dimensions, subcategory ranges, nonempty bags
  // ordered by rank, each instance in exactly one bag, every category
  // used. Throws ValidationError.
  void finalize();

  std::size_t index_of(std::int64_t instance_id) const;
  const Instance& instance_by_id(std::int64_t instance_id) const;
  std::size_t num_instances() const { return instances.size(); }
  std::size_t num_bags() const { return bags.size(); }

  bool operator==(const Dataset& o) const {
    return num_categories == o.num_categories && num_subcategories == o.num_subcategories &&
           feature_dim == o.feature_dim && instances == o.instances && bags == o.bags;
  }

 private:
  std::unordered_map<std::int64_t, std::size_t> index_;
};

// Row i: probability that instance i came from each subcategory,
// P[i][s] = (z[i][s]/N_s) / sum_s'(z[i][s']/N_s'). Rows sum to 1.
struct ProbabilityMatrix {
  Eigen::MatrixXd entries;  // N x S
};

ProbabilityMatrix subcategory_probabilities(const Dataset& data);

// General multi-membership form of the row formula, for a single instance.
// z_row[s] marks membership, subcat_sizes[s] is N_s (>= 1 where z_row[s]).
std::vector<double> membership_probabilities(const std::vector<std::uint8_t>& z_row,
                                             const std::vector<std::int64_t>& subcat_sizes);

// --- file format -----------------------------------------------------------
//
// UTF-8 text, line oriented, '#' comments.
//   DATASET C=<int> S=<int> F=<int>
//   I <id> <subcat> <rank> <f_1> ... <f_F>
//   B <id> <category> <id_1> ... <id_k>

Dataset load_dataset(const std::string& path);
void save_dataset(const Dataset& data, const std::string& path);

// Noise-mask sidecar: "<instance_id> <0|1>" per line, dataset order.
void save_noise_mask(const Dataset& data, const std::vector<std::uint8_t>& mask,
                     const std::string& path);
std::vector<std::uint8_t> load_noise_mask(const Dataset& data, const std::string& path);

// --- synthetic generation ---------------------------------------------------

// Gaussian cluster synthesis, one cluster per subcategory. Subcategories
// are numbered category-major: category c owns [c*K, (c+1)*K) for
// K = subcats_per_category. One bag per (subcategory, repeat).
struct SynthSpec {
  int categories = 2;
  int subcats_per_category = 2;
  int bags_per_subcategory = 1;
  int bag_size = 10;
  int feature_dim = 4;
  double noise_fraction = 0.0;  // rho in [0, 1)
  double separation = 6.0;      // distance scale between category anchors
  double subcat_spread = 2.0;   // offset of subcategory means within a category
  double scale = 1.0;           // gaussian standard deviation

  // Optional explicit overrides, indexed by global subcategory.
  std::vector<std::vector<double>> means;
  std::vector<double> scales;

  int total_subcategories() const { return categories * subcats_per_category; }
};

// Key=value text format plus optional "MEAN <s> <f_1>..." / "SCALE <s> <v>" lines.
SynthSpec load_synth_spec(const std::string& path);

struct SyntheticDataset {
  Dataset data;
  // Parallel to data.instances. True entries were drawn from another
  // category's cluster. Kept outside Dataset so training code cannot see it.
  std::vector<std::uint8_t> noise_mask;
};

// Deterministic for a fixed (spec, seed). Each bag gets exactly
// floor(noise_fraction * bag_size) noise instances at seeded positions,
// drawn from a uniformly chosen cluster of a different category.
SyntheticDataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed);

}  // namespace wsmil

#endif  // WSMIL_DATASET_HPP
