#include "numevent/bell.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "numevent/error.hpp"
#include "numevent/format.hpp"
#include "numevent/kernels.hpp"
#include "numevent/tolerance.hpp"

namespace numevent {
namespace {

constexpr int kMaxTableN = 16;
constexpr int kDefaultEnumerationCap = 4;
constexpr int kHardEnumerationCap = 5;

std::string list_subsets(const std::vector<SubsetIndex>& subsets) {
  std::string s;
  for (const auto& i : subsets) {
    if (!s.empty()) s += ", ";
    s += i.to_string();
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// CorrelationTable

CorrelationTable::CorrelationTable(int n, std::vector<std::pair<SubsetIndex, Event>> entries)
    : n_(n) {
  if (n < 1 || n > kMaxTableN) {
    throw Error("correlation tables support 1 <= n <= " + std::to_string(kMaxTableN));
  }
  if (entries.empty()) throw Error("correlation table has no entries");
  entries_.resize(std::size_t{1} << n);
  space_ = entries.front().second.space();
  for (auto& [index, event] : entries) {
    if (index.n() != n) throw Error("subset " + index.to_string() + " declared over a different n");
    if (event.space() != space_ && *event.space() != *space_) {
      throw Error("events reference different state spaces");
    }
    auto& slot = entries_[index.bits()];
    if (slot) throw Error("duplicate correlation entry " + index.to_string());
    slot.emplace(std::move(event));
  }

  // p_I <= p_J for every present J strictly inside I.
  const double e = eps();
  for (std::uint32_t big = 1; big < entries_.size(); ++big) {
    if (!entries_[big]) continue;
    const Event& pi = *entries_[big];
    for (std::uint32_t sub = (big - 1) & big; sub != 0; sub = (sub - 1) & big) {
      if (!entries_[sub]) continue;
      const Event& pj = *entries_[sub];
      for (std::size_t s = 0; s < pi.size(); ++s) {
        if (pi[s] > pj[s] + e) {
          throw Error("correlation p" + SubsetIndex(big, n).to_string() + " = " + format_real(pi[s]) +
                      " exceeds p" + SubsetIndex(sub, n).to_string() + " = " + format_real(pj[s]) +
                      " at state '" + space_->label(s) + "'");
        }
      }
    }
  }
}

CorrelationTable CorrelationTable::from_pointwise_minima(const EventFamily& family) {
  const int n = static_cast<int>(family.size());
  if (n < 1 || n > kMaxTableN) {
    throw Error("correlation tables support 1 <= n <= " + std::to_string(kMaxTableN));
  }
  std::vector<std::pair<SubsetIndex, Event>> entries;
  entries.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
    std::vector<Event> chosen;
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) chosen.push_back(family[static_cast<std::size_t>(i)]);
    }
    entries.emplace_back(SubsetIndex(bits, n), pointwise_min(chosen));
  }
  return CorrelationTable(n, std::move(entries));
}

const Event& CorrelationTable::at(const SubsetIndex& i) const {
  if (i.n() != n_) throw Error("subset " + i.to_string() + " declared over a different n");
  const auto& slot = entries_.at(i.bits());
  if (!slot) throw Error("missing correlation entry " + i.to_string());
  return *slot;
}

std::vector<SubsetIndex> CorrelationTable::subsets() const {
  std::vector<SubsetIndex> out;
  for (std::uint32_t b = 1; b < entries_.size(); ++b) {
    if (entries_[b]) out.emplace_back(b, n_);
  }
  return out;
}

std::vector<SubsetIndex> CorrelationTable::missing_for(const SetFunction& f) const {
  if (f.n() != n_) {
    throw Error("valuation over n=" + std::to_string(f.n()) + " applied to a table with n=" +
                std::to_string(n_));
  }
  std::vector<SubsetIndex> out;
  for (std::uint32_t b = 1; b < entries_.size(); ++b) {
    if (f.at(b) != 0.0 && !entries_[b]) out.emplace_back(b, n_);
  }
  return out;
}

std::vector<SubsetIndex> CorrelationTable::missing() const {
  std::vector<SubsetIndex> out;
  for (std::uint32_t b = 1; b < entries_.size(); ++b) {
    if (!entries_[b]) out.emplace_back(b, n_);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Valuations and transforms

SetFunction elementary_valuation(const SubsetIndex& i) {
  SetFunction f(i.n());
  const std::uint32_t size = std::uint32_t{1} << i.n();
  for (std::uint32_t j = 1; j < size; ++j) {
    if ((j & i.bits()) != i.bits()) continue;
    f.set(j, (std::popcount(j & ~i.bits()) % 2 == 0) ? 1.0 : -1.0);
  }
  return f;
}

SetFunction g_transform(const SetFunction& h) {
  std::vector<double> dense(h.dense().begin(), h.dense().end());
  kernels::zeta_parallel(dense, h.n());
  return SetFunction::from_dense(h.n(), std::move(dense));
}

SetFunction f_transform(const SetFunction& h) {
  std::vector<double> dense(h.dense().begin(), h.dense().end());
  kernels::mobius_parallel(dense, h.n());
  return SetFunction::from_dense(h.n(), std::move(dense));
}

bool is_bell_valuation(const SetFunction& f) {
  const SetFunction g = g_transform(f);
  const double e = eps();
  const auto d = g.dense();
  return std::all_of(d.begin() + 1, d.end(), [e](double v) { return v >= -e && v <= 1.0 + e; });
}

std::uint64_t count_01_valuations(int n) {
  if (n < 1 || n > 6) throw Error("valuation count defined here for 1 <= n <= 6");
  return (std::uint64_t{1} << ((1u << n) - 1)) - 1;
}

namespace {

void check_enumeration(int n, const EnumerationOptions& opts) {
  const int cap = opts.override_cap ? kHardEnumerationCap : kDefaultEnumerationCap;
  if (n < 1 || n > cap) {
    std::string msg = "enumeration supports 1 <= n <= " + std::to_string(cap);
    if (!opts.override_cap && n <= kHardEnumerationCap && n > cap) {
      msg += " (pass the override flag to go up to " + std::to_string(kHardEnumerationCap) + ")";
    }
    throw Error(msg);
  }
}

}  // namespace

std::vector<SetFunction> enumerate_01_valuations(int n, EnumerationOptions opts) {
  check_enumeration(n, opts);
  const std::uint64_t count = count_01_valuations(n);
  std::vector<std::uint64_t> codes(count);
  for (std::uint64_t c = 0; c < count; ++c) codes[c] = c + 1;
  const std::size_t width = std::size_t{1} << n;
  std::vector<double> dense(count * width);
  kernels::expand_01_codes_parallel(codes, n, dense);

  std::vector<SetFunction> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    auto first = dense.begin() + static_cast<std::ptrdiff_t>(c * width);
    out.push_back(SetFunction::from_dense(n, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(width))));
  }
  return out;
}

void for_each_01_valuation(int n, EnumerationOptions opts,
                           const std::function<bool(const SetFunction&)>& visit) {
  check_enumeration(n, opts);
  const std::uint64_t count = count_01_valuations(n);
  const std::size_t width = std::size_t{1} << n;
  constexpr std::uint64_t kChunk = 4096;
  std::vector<std::uint64_t> codes;
  std::vector<double> dense;
  for (std::uint64_t start = 1; start <= count; start += kChunk) {
    const std::uint64_t stop = std::min(count + 1, start + kChunk);
    codes.resize(stop - start);
    for (std::uint64_t c = start; c < stop; ++c) codes[c - start] = c;
    dense.resize(codes.size() * width);
    kernels::expand_01_codes_parallel(codes, n, dense);
    for (std::size_t r = 0; r < codes.size(); ++r) {
      auto first = dense.begin() + static_cast<std::ptrdiff_t>(r * width);
      if (!visit(SetFunction::from_dense(n, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(width))))) {
        return;
      }
    }
  }
}

SetFunction sum_all_elementary(int n) {
  SetFunction f(n);
  for (std::uint32_t i = 1; i < (std::uint32_t{1} << n); ++i) {
    f.set(i, std::popcount(i) % 2 == 1 ? 1.0 : -1.0);
  }
  return f;
}

SetFunction complement_of_full(int n) {
  SetFunction f = sum_all_elementary(n);
  f.set(SubsetIndex::full(n), -1.0 - (n % 2 == 0 ? 1.0 : -1.0));
  return f;
}

SetFunction pair_inequality(const SubsetIndex& i, const SubsetIndex& j) {
  if (i.n() != j.n()) throw Error("subset indices over different ground sets");
  if (i.subset_of(j) || j.subset_of(i)) {
    throw Error("pair inequality needs non-nested subsets, got " + i.to_string() + " and " + j.to_string());
  }
  SetFunction f(i.n());
  f.set(i, 1.0);
  f.set(j, 1.0);
  f.set(i | j, -1.0);
  return f;
}

std::string format_inequality(const SetFunction& f) {
  std::vector<std::uint32_t> order;
  for (std::uint32_t b = 1; b < f.dense().size(); ++b) {
    if (f.at(b) != 0.0) order.push_back(b);
  }
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  if (order.empty()) return "0";
  std::string out;
  for (auto b : order) {
    const double c = f.at(b);
    const double mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1.0) out += format_real(mag) + " ";
    out += "p" + SubsetIndex(b, f.n()).to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

std::vector<InequalityResult> evaluate_inequalities(const std::vector<SetFunction>& fs,
                                                    const CorrelationTable& table) {
  const int n = table.n();
  std::vector<SubsetIndex> absent;
  for (const auto& f : fs) {
    for (const auto& m : table.missing_for(f)) {
      if (std::find(absent.begin(), absent.end(), m) == absent.end()) absent.push_back(m);
    }
  }
  if (!absent.empty()) {
    std::sort(absent.begin(), absent.end(),
              [](const SubsetIndex& a, const SubsetIndex& b) { return a.bits() < b.bits(); });
    throw Error("missing correlation entries: " + list_subsets(absent));
  }

  const std::size_t width = std::size_t{1} << n;
  const std::size_t states = table.space()->size();
  std::vector<double> dense_table(width * states, 0.0);
  for (const auto& i : table.subsets()) {
    const auto v = table.at(i).values();
    std::copy(v.begin(), v.end(), dense_table.begin() + static_cast<std::ptrdiff_t>(i.bits() * states));
  }
  std::vector<double> coeffs(fs.size() * width);
  for (std::size_t r = 0; r < fs.size(); ++r) {
    std::copy(fs[r].dense().begin(), fs[r].dense().end(),
              coeffs.begin() + static_cast<std::ptrdiff_t>(r * width));
  }
  std::vector<double> values(fs.size() * states);
  kernels::weighted_sums_parallel(coeffs, dense_table, states, values);

  const double e = eps();
  std::vector<InequalityResult> out;
  out.reserve(fs.size());
  for (std::size_t r = 0; r < fs.size(); ++r) {
    InequalityResult res{format_inequality(fs[r]), fs[r], {}, 0.0, 0.0, false, std::nullopt};
    auto first = values.begin() + static_cast<std::ptrdiff_t>(r * states);
    res.per_state_value.assign(first, first + static_cast<std::ptrdiff_t>(states));
    res.min_value = *std::min_element(res.per_state_value.begin(), res.per_state_value.end());
    res.max_value = *std::max_element(res.per_state_value.begin(), res.per_state_value.end());
    for (std::size_t s = 0; s < states; ++s) {
      const double v = res.per_state_value[s];
      if (v > 1.0 + e || v < -e) {
        res.violated = true;
        res.violating_state = table.space()->label(s);
        break;
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

InequalityResult evaluate_inequality(const SetFunction& f, const CorrelationTable& table) {
  return std::move(evaluate_inequalities({f}, table).front());
}

// ---------------------------------------------------------------------------
// Bell-like rows

namespace {

BellLikeRow row(std::initializer_list<int> first, std::initializer_list<int> second, int n,
                std::string witness) {
  return {SubsetIndex::of(first, n), SubsetIndex::of(second, n), std::move(witness)};
}

std::vector<BellLikeRow> make_rows(int n) {
  std::vector<BellLikeRow> rows;
  if (n == 2) {
    rows.push_back(row({1}, {2}, 2, "a_12"));
  } else if (n == 3) {
    rows.push_back(row({1}, {2}, 3, "a_12"));
    rows.push_back(row({1}, {3}, 3, "a_13"));
    rows.push_back(row({2}, {3}, 3, "a_23"));
    rows.push_back(row({1, 2}, {1, 3}, 3, "a_1213"));
    rows.push_back(row({1, 2}, {2, 3}, 3, "a_1213"));
  } else if (n == 4) {
    // p_i + p_j - p_ij
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        rows.push_back({SubsetIndex::of({i}, 4), SubsetIndex::of({j}, 4),
                        "a_" + std::to_string(i) + std::to_string(j)});
      }
    }
    const auto ijik_name = [](int i, int j, int k) {
      return "a_" + std::to_string(i) + std::to_string(j) + std::to_string(i) + std::to_string(k);
    };
    // p_ij + p_ik - p_ijk
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k)
          rows.push_back({SubsetIndex::of({i, j}, 4), SubsetIndex::of({i, k}, 4), ijik_name(i, j, k)});
    // p_ij + p_jk - p_ijk
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k)
          rows.push_back({SubsetIndex::of({i, j}, 4), SubsetIndex::of({j, k}, 4), ijik_name(i, j, k)});
    rows.push_back(row({1, 2}, {3, 4}, 4, "a_1234"));
    rows.push_back(row({1, 3}, {2, 4}, 4, "a_1324"));
    rows.push_back(row({1, 4}, {2, 3}, 4, "a_1423"));
    rows.push_back(row({1, 2, 3}, {1, 2, 4}, 4, "a_123124"));
    rows.push_back(row({1, 2, 3}, {1, 3, 4}, 4, "a_123124"));
    rows.push_back(row({1, 2, 3}, {2, 3, 4}, 4, "a_123124"));
    rows.push_back(row({1, 2, 4}, {1, 3, 4}, 4, "a_124134"));
    rows.push_back(row({1, 2, 4}, {2, 3, 4}, 4, "a_124134"));
    rows.push_back(row({1, 3, 4}, {2, 3, 4}, 4, "a_134234"));
  } else {
    throw Error("Bell-like inequality lists exist for n in {2,3,4}, got n=" + std::to_string(n));
  }
  return rows;
}

}  // namespace

const std::vector<BellLikeRow>& bell_like_rows(int n) {
  static const std::vector<BellLikeRow> rows2 = make_rows(2);
  static const std::vector<BellLikeRow> rows3 = make_rows(3);
  static const std::vector<BellLikeRow> rows4 = make_rows(4);
  switch (n) {
    case 2: return rows2;
    case 3: return rows3;
    case 4: return rows4;
    default: make_rows(n);  // throws
  }
  throw Error("unreachable");
}

std::vector<InequalityResult> check_bell_like(const CorrelationTable& table) {
  const auto& rows = bell_like_rows(table.n());
  std::vector<SetFunction> fs;
  fs.reserve(rows.size());
  for (const auto& r : rows) {
    SetFunction f = pair_inequality(r.first, r.second);
    if (!is_bell_valuation(f)) {
      throw std::logic_error("Bell-like row " + format_inequality(f) + " is not a Bell valuation");
    }
    fs.push_back(std::move(f));
  }
  return evaluate_inequalities(fs, table);
}

bool any_violated(const std::vector<InequalityResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const auto& r) { return r.violated; });
}

const Event& WitnessSet::at(std::string_view name) const {
  for (const auto& [k, v] : witnesses) {
    if (k == name) return v;
  }
  throw Error("no witness named '" + std::string(name) + "'");
}

WitnessSet witnesses_from_correlations(const CorrelationTable& table) {
  const auto results = check_bell_like(table);
  for (const auto& r : results) {
    if (r.violated) {
      throw Error("no witnesses: inequality " + r.label + " <= 1 is violated at state '" +
                  *r.violating_state + "'");
    }
  }
  WitnessSet out;
  for (const auto& r : bell_like_rows(table.n())) {
    out.relations.push_back({r.witness, r.first, r.second});
    const bool known = std::any_of(out.witnesses.begin(), out.witnesses.end(),
                                   [&](const auto& w) { return w.first == r.witness; });
    if (known) continue;
    out.witnesses.emplace_back(r.witness, difference(table.at(r.first), table.at(r.first | r.second)));
  }
  return out;
}

}  // namespace numevent
