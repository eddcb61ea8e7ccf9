#include "pretzel/pretzel_core.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pretzel/error.hpp"

namespace pretzel {

PretzelTuple::PretzelTuple(std::vector<int> params) : params_(std::move(params)) {
  if (params_.empty())
    throw PretzelError(ErrorCode::InvalidTuple, "a pretzel tuple needs at least one strand");
  if (std::find(params_.begin(), params_.end(), 0) != params_.end())
    throw PretzelError(ErrorCode::InvalidTuple, "twist parameters must be nonzero");
}

PretzelTuple PretzelTuple::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size())
      throw PretzelError(ErrorCode::InvalidTuple,
                         "cannot parse twist parameter '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return PretzelTuple(std::move(out));
}

std::string PretzelTuple::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PretzelTuple& t) {
  os << "P(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os << ")";
}

const char* to_string(KnotClass c) {
  switch (c) {
    case KnotClass::OddKnot: return "odd_knot";
    case KnotClass::EvenKnot: return "even_knot";
    case KnotClass::Link: return "link";
  }
  return "unknown";
}

KnotClass classify(const PretzelTuple& t) {
  auto evens = std::count_if(t.begin(), t.end(), [](int p) { return p % 2 == 0; });
  if (evens == 1) return KnotClass::EvenKnot;
  if (evens == 0 && t.size() % 2 == 1) return KnotClass::OddKnot;
  return KnotClass::Link;
}

PretzelTuple mirror(const PretzelTuple& t) {
  std::vector<int> out(t.begin(), t.end());
  for (int& p : out) p = -p;
  return PretzelTuple(std::move(out));
}

std::vector<int> mutation_key(const PretzelTuple& t) {
  std::vector<int> key(t.begin(), t.end());
  std::sort(key.begin(), key.end());
  return key;
}

namespace {

std::vector<int> rotated(const std::vector<int>& v, std::size_t shift) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + shift) % v.size()];
  return out;
}

// All rotations and reversals.
std::vector<std::vector<int>> dihedral_images(const std::vector<int>& v) {
  std::vector<std::vector<int>> out;
  std::vector<int> rev(v.rbegin(), v.rend());
  for (std::size_t s = 0; s < v.size(); ++s) {
    out.push_back(rotated(v, s));
    out.push_back(rotated(rev, s));
  }
  return out;
}

void require_knot(const PretzelTuple& t) {
  if (classify(t) == KnotClass::Link)
    throw PretzelError(ErrorCode::NotAKnot, t.str() + " is a link");
}

std::set<std::vector<int>> orbit_of(const std::vector<int>& start) {
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  auto visit = [&](std::vector<int> next) {
    if (seen.insert(next).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t k = cur.size();
    if (k > 1) {
      visit(rotated(cur, 1));
      visit(std::vector<int>(cur.rbegin(), cur.rend()));
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (std::abs(cur[i]) == 1 || std::abs(cur[i + 1]) == 1) {
        std::vector<int> next = cur;
        std::swap(next[i], next[i + 1]);
        visit(std::move(next));
      }
    }
  }
  return seen;
}

bool is_ribbon_target(const std::vector<int>& v, bool odd) {
  if (odd) return v.size() == 1;
  return v.size() == 2 && (v[0] == -v[1] - 1 || v[1] == -v[0] - 1);
}

class RibbonSearch {
 public:
  explicit RibbonSearch(bool odd) : odd_(odd) {}

  bool run(const std::vector<int>& state, std::vector<RibbonMove>& moves,
           std::vector<int>& reduced) {
    if (is_ribbon_target(state, odd_)) {
      reduced = state;
      return true;
    }
    const std::size_t min_len = odd_ ? 1 : 2;
    if (state.size() < min_len + 2) return false;
    auto orbit = orbit_of(state);
    const std::vector<int>& key = *orbit.begin();
    if (dead_.count(key)) return false;
    for (const auto& arrangement : orbit) {
      const std::size_t k = arrangement.size();
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (i + 1) % k;
        if (arrangement[i] != -arrangement[j]) continue;
        std::vector<int> next;
        for (std::size_t m = 0; m < k; ++m)
          if (m != i && m != j) next.push_back(arrangement[m]);
        moves.push_back({PretzelTuple(arrangement), i});
        if (run(next, moves, reduced)) return true;
        moves.pop_back();
      }
    }
    dead_.insert(key);
    return false;
  }

 private:
  bool odd_;
  std::set<std::vector<int>> dead_;
};

}  // namespace

PretzelTuple canonical_form(const PretzelTuple& t) {
  auto images = dihedral_images(t.params());
  return PretzelTuple(*std::min_element(images.begin(), images.end()));
}

std::vector<PretzelTuple> isotopy_orbit(const PretzelTuple& t) {
  require_knot(t);
  std::vector<PretzelTuple> out;
  for (const auto& v : orbit_of(t.params())) out.emplace_back(v);
  return out;
}

bool isotopy_equivalent(const PretzelTuple& t1, const PretzelTuple& t2) {
  require_knot(t1);
  require_knot(t2);
  if (t1.size() != t2.size()) return false;
  if (mutation_key(t1) != mutation_key(t2)) return false;
  return orbit_of(t1.params()).count(t2.params()) > 0;
}

PairProfile pair_profile(const PretzelTuple& t) {
  std::map<int, int> counts;
  for (int p : t) ++counts[p];
  PairProfile out;
  for (const auto& [value, count] : counts) {
    if (value <= 0) continue;
    auto neg = counts.find(-value);
    int matched = neg == counts.end() ? 0 : std::min(count, neg->second);
    for (int i = 0; i < matched; ++i) out.removable_pairs.emplace_back(value, -value);
    out.t += matched;
    if (value == 1 && matched > 0) out.contains_unit_pair = true;
  }
  out.has_single_twists = std::any_of(t.begin(), t.end(), [](int p) { return std::abs(p) == 1; });
  return out;
}

std::optional<RibbonReduction> simple_ribbon_reduction(const PretzelTuple& t) {
  require_knot(t);
  RibbonSearch search(classify(t) == KnotClass::OddKnot);
  std::vector<RibbonMove> moves;
  std::vector<int> reduced;
  if (!search.run(t.params(), moves, reduced)) return std::nullopt;
  return RibbonReduction{std::move(moves), PretzelTuple(std::move(reduced))};
}

std::optional<PretzelTuple> simple_ribbon_mutant(const PretzelTuple& t) {
  require_knot(t);
  std::vector<int> perm = mutation_key(t);
  std::set<std::vector<int>> tried;
  do {
    if (!tried.insert(canonical_form(PretzelTuple(perm)).params()).second) continue;
    if (is_simple_ribbon(PretzelTuple(perm))) return PretzelTuple(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<PretzelTuple> unit_pair_reduction(const PretzelTuple& t) {
  auto pos = std::find(t.begin(), t.end(), 1);
  auto neg = std::find(t.begin(), t.end(), -1);
  if (pos == t.end() || neg == t.end() || t.size() < 3) return std::nullopt;
  std::vector<int> rest;
  for (auto it = t.begin(); it != t.end(); ++it)
    if (it != pos && it != neg) rest.push_back(*it);
  return PretzelTuple(std::move(rest));
}

}  // namespace pretzel
