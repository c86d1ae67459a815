#pragma once

// Bell-type inequalities over correlation tables, Bell valuations and the
// subset-sum / alternating-sum transform pair that generates them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numevent/event.hpp"
#include "numevent/set_function.hpp"

namespace numevent {

/// Correlations p_I for non-empty I of {1..n}; p_{i} is the base event p_i.
///
/// Entries may be sparse. Construction enforces monotonicity: whenever J is a
/// proper subset of I and both are present, p_I <= p_J within eps.
class CorrelationTable {
 public:
  CorrelationTable(int n, std::vector<std::pair<SubsetIndex, Event>> entries);

  /// p_I as the pointwise minimum of the selected family members.
  static CorrelationTable from_pointwise_minima(const EventFamily& family);

  int n() const noexcept { return n_; }
  const StateSpacePtr& space() const noexcept { return space_; }
  bool has(const SubsetIndex& i) const { return entries_.at(i.bits()).has_value(); }
  const Event& at(const SubsetIndex& i) const;
  /// Present subsets in increasing bitmask order.
  std::vector<SubsetIndex> subsets() const;
  /// Absent subsets among the support of f (non-zero coefficients).
  std::vector<SubsetIndex> missing_for(const SetFunction& f) const;
  /// Every absent non-empty subset.
  std::vector<SubsetIndex> missing() const;

 private:
  int n_;
  StateSpacePtr space_;
  std::vector<std::optional<Event>> entries_;
};

struct InequalityResult {
  std::string label;
  SetFunction coefficients;
  std::vector<double> per_state_value;
  double min_value = 0.0;
  double max_value = 0.0;
  bool violated = false;
  /// First state (in state order) whose value leaves [-eps, 1+eps].
  std::optional<std::string> violating_state;
};

/// f_I(J) = (-1)^|J \ I| for J containing I, 0 otherwise.
SetFunction elementary_valuation(const SubsetIndex& i);

/// g_h(I) = sum of h(J) over non-empty J subset of I.
SetFunction g_transform(const SetFunction& h);
/// f_h(I) = sum of h(J) f_J(I); the inverse of g_transform.
SetFunction f_transform(const SetFunction& h);

/// Every cumulative subset sum of f lies in [-eps, 1+eps].
bool is_bell_valuation(const SetFunction& f);

/// Options for the 0/1 valuation enumeration.
struct EnumerationOptions {
  /// Lifts the default n <= 4 cap (hard limit n <= 5).
  bool override_cap = false;
};

/// Number of non-zero integer Bell valuations on 2^N: 2^(2^n - 1) - 1.
std::uint64_t count_01_valuations(int n);

/// f_g for every non-zero g in {0,1}^(2^N \ {}), ordered by the code whose
/// bit (I-1) is g(I).
std::vector<SetFunction> enumerate_01_valuations(int n, EnumerationOptions opts = {});

/// Streams the same sequence in bounded memory; the visitor returns false to stop.
void for_each_01_valuation(int n, EnumerationOptions opts,
                           const std::function<bool(const SetFunction&)>& visit);

/// f_1: (-1)^(|I|+1), the sum of all elementary valuations.
SetFunction sum_all_elementary(int n);
/// f_h for h = 1 - delta_{I,N}: (-1)^(|J|+1) off N and -1 - (-1)^n at N.
SetFunction complement_of_full(int n);

/// +1 at I and J, -1 at I u J. Throws when I and J are nested.
SetFunction pair_inequality(const SubsetIndex& i, const SubsetIndex& j);

/// "p{1} + p{2} - p{1,2}"
std::string format_inequality(const SetFunction& f);

InequalityResult evaluate_inequality(const SetFunction& f, const CorrelationTable& table);
/// Batched form; rows come back in the order of fs.
std::vector<InequalityResult> evaluate_inequalities(const std::vector<SetFunction>& fs,
                                                    const CorrelationTable& table);

/// One row of the Bell-like inequality list for n in {2,3,4}:
/// p_I + p_J - p_{I u J} <= 1, witnessed by a = p_I - p_{I u J} in p_I C(a) p_J.
struct BellLikeRow {
  SubsetIndex first;
  SubsetIndex second;
  std::string witness;
};

/// The displayed rows for n = 2 (1 row), 3 (5 rows) and 4 (23 rows).
const std::vector<BellLikeRow>& bell_like_rows(int n);

/// Evaluates every row of bell_like_rows(table.n()).
std::vector<InequalityResult> check_bell_like(const CorrelationTable& table);

bool any_violated(const std::vector<InequalityResult>& results);

struct CommuteRelation {
  std::string witness;
  SubsetIndex f;
  SubsetIndex g;
};

struct WitnessSet {
  /// Named witnesses in first-use order (a_12, a_13, ...).
  std::vector<std::pair<std::string, Event>> witnesses;
  /// One relation p_f C(witness) p_g per Bell-like row.
  std::vector<CommuteRelation> relations;

  const Event& at(std::string_view name) const;
};

/// Witnesses a = p_I - p_{I u J} for every row. Throws when any Bell-like
/// inequality of the table is violated.
WitnessSet witnesses_from_correlations(const CorrelationTable& table);

}  // namespace numevent
