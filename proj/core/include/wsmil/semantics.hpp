#ifndef WSMIL_SEMANTICS_HPP
#define WSMIL_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace wsmil {

// Joint counts with zero pages get this finite sentinel instead of the
// infinity the distance formula would produce; callers see `capped` set.
inline constexpr double kNgdZeroJointCap = 1e6;

// Page-count table standing in for live search-engine hit counts.
// Pairs are stored unordered (canonicalized lexicographically).
class CountTable {
 public:
  void set_total(std::uint64_t n);
  void set_unary(const std::string& term, std::uint64_t count);
  void set_pair(const std::string& a, const std::string& b, std::uint64_t count);

  std::uint64_t total() const { return total_; }
  bool has_term(const std::string& term) const { return unary_.count(term) > 0; }
  std::uint64_t unary(const std::string& term) const;           // throws on missing term
  std::uint64_t pair(const std::string& a, const std::string& b) const;  // 0 when absent

  // Checks pair <= min(unary) and total >= max(unary). Throws ValidationError.
  void validate() const;

 private:
  std::uint64_t total_ = 0;
  std::map<std::string, std::uint64_t> unary_;  // ordered, so saves are canonical
  std::map<std::pair<std::string, std::string>, std::uint64_t> pairs_;
};

struct NgdValue {
  double value = 0.0;
  bool capped = false;  // joint count was zero, value is the sentinel
};

// Normalized Google Distance:
//   (max{log f(x), log f(y)} - log f(x,y)) / (log N - min{log f(x), log f(y)})
// Natural logs; the ratio is base-invariant. Symmetric in x, y.
NgdValue ngd(const std::string& x, const std::string& y, const CountTable& table);

// Format: "N <total>" header, then "U <term> <count>" and
// "P <term_a> <term_b> <count>" lines. '#' comments.
CountTable load_counts(const std::string& path);
void save_counts(const CountTable& table, const std::string& path);

}  // namespace wsmil

#endif  // WSMIL_SEMANTICS_HPP
