#include "wsmil/dataset.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wsmil/error.hpp"
#include "wsmil/random.hpp"
#include "wsmil/textio.hpp"

namespace wsmil {

void Dataset::finalize() {
  if (num_categories < 1) throw ValidationError("num_categories must be >= 1");
  if (num_subcategories < 1) throw ValidationError("num_subcategories must be >= 1");
  if (feature_dim < 1) throw ValidationError("feature_dim must be >= 1");

  index_.clear();
  index_.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    if (!index_.emplace(inst.id, i).second)
      throw ValidationError("duplicate instance id " + std::to_string(inst.id));
    if (inst.subcategory < 0 || inst.subcategory >= num_subcategories)
      throw ValidationError("instance " + std::to_string(inst.id) + ": subcategory " +
                            std::to_string(inst.subcategory) + " out of range [0, " +
                            std::to_string(num_subcategories) + ")");
    if (inst.rank < 0)
      throw ValidationError("instance " + std::to_string(inst.id) + ": negative rank");
    if (static_cast<int>(inst.features.size()) != feature_dim)
      throw ValidationError("instance " + std::to_string(inst.id) + ": feature dimension " +
                            std::to_string(inst.features.size()) + ", expected " +
                            std::to_string(feature_dim));
    for (double f : inst.features)
      if (!std::isfinite(f))
        throw ValidationError("instance " + std::to_string(inst.id) + ": non-finite feature");
  }

  std::set<std::int64_t> bag_ids;
  std::unordered_map<std::int64_t, std::int64_t> owner;  // instance -> bag
  std::vector<bool> category_seen(num_categories, false);
  for (const Bag& bag : bags) {
    if (!bag_ids.insert(bag.id).second)
      throw ValidationError("duplicate bag id " + std::to_string(bag.id));
    if (bag.category < 0 || bag.category >= num_categories)
      throw ValidationError("bag " + std::to_string(bag.id) + ": category out of range");
    category_seen[bag.category] = true;
    if (bag.instance_ids.empty())
      throw ValidationError("bag " + std::to_string(bag.id) + " is empty");
    int prev_rank = -1;
    for (std::int64_t iid : bag.instance_ids) {
      auto it = index_.find(iid);
      if (it == index_.end())
        throw ValidationError("bag " + std::to_string(bag.id) + " references unknown instance " +
                              std::to_string(iid));
      if (!owner.emplace(iid, bag.id).second)
        throw ValidationError("instance " + std::to_string(iid) + " appears in more than one bag");
      int r = instances[it->second].rank;
      if (r < prev_rank)
        throw ValidationError("bag " + std::to_string(bag.id) + ": instances not in rank order");
      prev_rank = r;
    }
  }
  if (owner.size() != instances.size())
    throw ValidationError("dataset has instances that belong to no bag");
  for (int c = 0; c < num_categories; ++c)
    if (!category_seen[c])
      throw ValidationError("category " + std::to_string(c) + " has no bag");
}

std::size_t Dataset::index_of(std::int64_t instance_id) const {
  auto it = index_.find(instance_id);
  if (it == index_.end())
    throw ValidationError("unknown instance id " + std::to_string(instance_id));
  return it->second;
}

const Instance& Dataset::instance_by_id(std::int64_t instance_id) const {
  return instances[index_of(instance_id)];
}

std::vector<double> membership_probabilities(const std::vector<std::uint8_t>& z_row,
                                             const std::vector<std::int64_t>& subcat_sizes) {
  if (z_row.size() != subcat_sizes.size())
    throw ValidationError("membership row and size vector disagree in length");
  std::vector<double> p(z_row.size(), 0.0);
  double denom = 0.0;
  for (std::size_t s = 0; s < z_row.size(); ++s) {
    if (!z_row[s]) continue;
    if (subcat_sizes[s] < 1)
      throw ValidationError("subcategory " + std::to_string(s) + " has no members");
    p[s] = 1.0 / static_cast<double>(subcat_sizes[s]);
    denom += p[s];
  }
  if (denom <= 0.0) throw ValidationError("membership row has no support");
  for (double& v : p) v /= denom;
  return p;
}

ProbabilityMatrix subcategory_probabilities(const Dataset& data) {
  const int S = data.num_subcategories;
  std::vector<std::int64_t> sizes(S, 0);
  for (const Instance& inst : data.instances) ++sizes[inst.subcategory];

  ProbabilityMatrix pm;
  pm.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(data.num_instances()), S);
  for (std::size_t i = 0; i < data.num_instances(); ++i) {
    std::vector<std::uint8_t> z(S, 0);
    z[data.instances[i].subcategory] = 1;
    std::vector<double> row = membership_probabilities(z, sizes);
    for (int s = 0; s < S; ++s) pm.entries(static_cast<Eigen::Index>(i), s) = row[s];
  }
  return pm;
}

// --- file format -------------------------------------------------------------

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset file: " + path);
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("empty dataset file: " + path);

  Dataset ds;
  {
    auto toks = split_ws(line);
    if (toks.size() != 4 || toks[0] != "DATASET")
      throw ParseError("expected 'DATASET C=<int> S=<int> F=<int>' header", reader.line());
    for (int k = 1; k <= 3; ++k) {
      const std::string& t = toks[k];
      auto eq = t.find('=');
      if (eq == std::string::npos || eq + 1 >= t.size())
        throw ParseError("malformed header field '" + t + "'", reader.line());
      std::string key = t.substr(0, eq);
      long long v = parse_int(t.substr(eq + 1), reader.line());
      if (key == "C")
        ds.num_categories = static_cast<int>(v);
      else if (key == "S")
        ds.num_subcategories = static_cast<int>(v);
      else if (key == "F")
        ds.feature_dim = static_cast<int>(v);
      else
        throw ParseError("unknown header field '" + key + "'", reader.line());
    }
  }

  while (reader.next(line)) {
    auto toks = split_ws(line);
    if (toks[0] == "I") {
      if (toks.size() != static_cast<std::size_t>(4 + ds.feature_dim))
        throw ParseError("instance line has " + std::to_string(toks.size() - 4) +
                             " feature values, expected " + std::to_string(ds.feature_dim),
                         reader.line());
      Instance inst;
      inst.id = parse_int(toks[1], reader.line());
      inst.subcategory = static_cast<int>(parse_int(toks[2], reader.line()));
      inst.rank = static_cast<int>(parse_int(toks[3], reader.line()));
      inst.features.reserve(ds.feature_dim);
      for (int f = 0; f < ds.feature_dim; ++f)
        inst.features.push_back(parse_double(toks[4 + f], reader.line()));
      ds.instances.push_back(std::move(inst));
    } else if (toks[0] == "B") {
      if (toks.size() < 4) throw ParseError("bag line needs id, category, instances", reader.line());
      Bag bag;
      bag.id = parse_int(toks[1], reader.line());
      bag.category = static_cast<int>(parse_int(toks[2], reader.line()));
      for (std::size_t k = 3; k < toks.size(); ++k)
        bag.instance_ids.push_back(parse_int(toks[k], reader.line()));
      ds.bags.push_back(std::move(bag));
    } else {
      throw ParseError("unknown record type '" + toks[0] + "'", reader.line());
    }
  }

  ds.finalize();
  return ds;
}

void save_dataset(const Dataset& data, const std::string& path) {
  std::ostringstream out;
  out << "DATASET C=" << data.num_categories << " S=" << data.num_subcategories
      << " F=" << data.feature_dim << "\n";
  for (const Instance& inst : data.instances) {
    out << "I " << inst.id << ' ' << inst.subcategory << ' ' << inst.rank;
    for (double f : inst.features) out << ' ' << format_double(f);
    out << "\n";
  }
  for (const Bag& bag : data.bags) {
    out << "B " << bag.id << ' ' << bag.category;
    for (std::int64_t iid : bag.instance_ids) out << ' ' << iid;
    out << "\n";
  }
  write_text_file(path, out.str());
}

void save_noise_mask(const Dataset& data, const std::vector<std::uint8_t>& mask,
                     const std::string& path) {
  if (mask.size() != data.num_instances())
    throw ValidationError("noise mask length does not match dataset");
  std::ostringstream out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    out << data.instances[i].id << ' ' << (mask[i] ? 1 : 0) << "\n";
  write_text_file(path, out.str());
}

std::vector<std::uint8_t> load_noise_mask(const Dataset& data, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open noise mask: " + path);
  LineReader reader(in);
  std::string line;
  std::vector<std::uint8_t> mask(data.num_instances(), 0);
  std::vector<bool> seen(data.num_instances(), false);
  while (reader.next(line)) {
    auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError("expected '<instance_id> <0|1>'", reader.line());
    std::size_t idx = data.index_of(parse_int(toks[0], reader.line()));
    long long flag = parse_int(toks[1], reader.line());
    if (flag != 0 && flag != 1) throw ParseError("mask flag must be 0 or 1", reader.line());
    mask[idx] = static_cast<std::uint8_t>(flag);
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ParseError("noise mask is missing instance " + std::to_string(data.instances[i].id));
  return mask;
}

// --- synthetic generation -----------------------------------------------------

SynthSpec load_synth_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open synthesis spec: " + path);
  LineReader reader(in);
  std::string line;
  SynthSpec spec;
  std::vector<std::pair<int, std::vector<double>>> means;
  std::vector<std::pair<int, double>> scales;
  while (reader.next(line)) {
    auto toks = split_ws(line);
    if (toks[0] == "MEAN") {
      if (toks.size() < 3) throw ParseError("MEAN needs '<subcat> <f_1> ...'", reader.line());
      int s = static_cast<int>(parse_int(toks[1], reader.line()));
      std::vector<double> m;
      for (std::size_t k = 2; k < toks.size(); ++k) m.push_back(parse_double(toks[k], reader.line()));
      means.emplace_back(s, std::move(m));
      continue;
    }
    if (toks[0] == "SCALE") {
      if (toks.size() != 3) throw ParseError("SCALE needs '<subcat> <value>'", reader.line());
      scales.emplace_back(static_cast<int>(parse_int(toks[1], reader.line())),
                          parse_double(toks[2], reader.line()));
      continue;
    }
    if (toks.size() != 3 || toks[1] != "=")
      throw ParseError("expected 'key = value'", reader.line());
    const std::string& key = toks[0];
    const std::string& val = toks[2];
    if (key == "categories")
      spec.categories = static_cast<int>(parse_int(val, reader.line()));
    else if (key == "subcats_per_category")
      spec.subcats_per_category = static_cast<int>(parse_int(val, reader.line()));
    else if (key == "bags_per_subcategory")
      spec.bags_per_subcategory = static_cast<int>(parse_int(val, reader.line()));
    else if (key == "bag_size")
      spec.bag_size = static_cast<int>(parse_int(val, reader.line()));
    else if (key == "feature_dim")
      spec.feature_dim = static_cast<int>(parse_int(val, reader.line()));
    else if (key == "noise_fraction")
      spec.noise_fraction = parse_double(val, reader.line());
    else if (key == "separation")
      spec.separation = parse_double(val, reader.line());
    else if (key == "subcat_spread")
      spec.subcat_spread = parse_double(val, reader.line());
    else if (key == "scale")
      spec.scale = parse_double(val, reader.line());
    else
      throw ParseError("unknown synthesis key '" + key + "'", reader.line());
  }
  if (!means.empty()) {
    spec.means.assign(spec.total_subcategories(), {});
    for (auto& [s, m] : means) {
      if (s < 0 || s >= spec.total_subcategories())
        throw ParseError("MEAN subcategory " + std::to_string(s) + " out of range");
      spec.means[s] = std::move(m);
    }
  }
  if (!scales.empty()) {
    spec.scales.assign(spec.total_subcategories(), spec.scale);
    for (auto& [s, v] : scales) {
      if (s < 0 || s >= spec.total_subcategories())
        throw ParseError("SCALE subcategory " + std::to_string(s) + " out of range");
      spec.scales[s] = v;
    }
  }
  return spec;
}

namespace {

void check_spec(const SynthSpec& spec) {
  if (spec.categories < 1) throw ValidationError("categories must be >= 1");
  if (spec.subcats_per_category < 1) throw ValidationError("subcats_per_category must be >= 1");
  if (spec.bags_per_subcategory < 1) throw ValidationError("bags_per_subcategory must be >= 1");
  if (spec.bag_size < 1) throw ValidationError("bag_size must be >= 1 (empty bags)");
  if (spec.feature_dim < 1) throw ValidationError("feature_dim must be >= 1");
  if (spec.noise_fraction < 0.0 || spec.noise_fraction >= 1.0)
    throw ValidationError("noise_fraction must lie in [0, 1)");
  if (spec.categories == 1 && std::floor(spec.noise_fraction * spec.bag_size) >= 1.0)
    throw ValidationError("noise requires at least two categories to draw from");
  if (!spec.means.empty()) {
    if (static_cast<int>(spec.means.size()) != spec.total_subcategories())
      throw ValidationError("means must cover every subcategory");
    for (const auto& m : spec.means)
      if (static_cast<int>(m.size()) != spec.feature_dim)
        throw ValidationError("explicit mean has wrong dimension");
  }
  if (!spec.scales.empty() && static_cast<int>(spec.scales.size()) != spec.total_subcategories())
    throw ValidationError("scales must cover every subcategory");
}

// Category anchors sit on distinct axes; subcategory means are seeded
// unit directions around the anchor. Drawn before any instance sampling
// so instance streams do not disturb mean placement.
std::vector<std::vector<double>> place_means(const SynthSpec& spec, Rng& rng) {
  if (!spec.means.empty()) return spec.means;
  const int S = spec.total_subcategories();
  const int F = spec.feature_dim;
  std::vector<std::vector<double>> means(S, std::vector<double>(F, 0.0));
  for (int c = 0; c < spec.categories; ++c) {
    std::vector<double> anchor(F, 0.0);
    anchor[c % F] += spec.separation * (1.0 + c / F);
    for (int j = 0; j < spec.subcats_per_category; ++j) {
      int s = c * spec.subcats_per_category + j;
      std::vector<double> dir(F);
      double norm = 0.0;
      for (int f = 0; f < F; ++f) {
        dir[f] = rng.normal();
        norm += dir[f] * dir[f];
      }
      norm = std::sqrt(norm);
      for (int f = 0; f < F; ++f)
        means[s][f] = anchor[f] + (norm > 0 ? spec.subcat_spread * dir[f] / norm : 0.0);
    }
  }
  return means;
}

}  // namespace

SyntheticDataset generate_synthetic(const SynthSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  Rng rng(seed);

  const int S = spec.total_subcategories();
  const auto means = place_means(spec, rng);
  std::vector<double> scales =
      spec.scales.empty() ? std::vector<double>(S, spec.scale) : spec.scales;

  SyntheticDataset out;
  Dataset& ds = out.data;
  ds.num_categories = spec.categories;
  ds.num_subcategories = S;
  ds.feature_dim = spec.feature_dim;

  const int noise_per_bag =
      static_cast<int>(std::floor(spec.noise_fraction * spec.bag_size));
  std::int64_t next_instance = 0;
  std::int64_t next_bag = 0;
  for (int c = 0; c < spec.categories; ++c) {
    for (int j = 0; j < spec.subcats_per_category; ++j) {
      int s = c * spec.subcats_per_category + j;
      for (int rep = 0; rep < spec.bags_per_subcategory; ++rep) {
        Bag bag;
        bag.id = next_bag++;
        bag.category = c;
        auto noise_at = rng.sample_indices(spec.bag_size, noise_per_bag);
        std::size_t noise_cursor = 0;
        for (int pos = 0; pos < spec.bag_size; ++pos) {
          bool is_noise = noise_cursor < noise_at.size() &&
                          noise_at[noise_cursor] == static_cast<std::size_t>(pos);
          if (is_noise) ++noise_cursor;

          int src = s;
          if (is_noise) {
            int other = static_cast<int>(rng.below(spec.categories - 1));
            if (other >= c) ++other;
            src = other * spec.subcats_per_category +
                  static_cast<int>(rng.below(spec.subcats_per_category));
          }
          Instance inst;
          inst.id = next_instance++;
          inst.subcategory = s;
          inst.rank = pos;
          inst.features.resize(spec.feature_dim);
          for (int f = 0; f < spec.feature_dim; ++f)
            inst.features[f] = means[src][f] + scales[src] * rng.normal();
          bag.instance_ids.push_back(inst.id);
          ds.instances.push_back(std::move(inst));
          out.noise_mask.push_back(is_noise ? 1 : 0);
        }
        ds.bags.push_back(std::move(bag));
      }
    }
  }
  ds.finalize();
  return out;
}

}  // namespace wsmil
