#include "robsense/setcover.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <set>

namespace robsense {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

void CoverInstance::add_set(long long id, std::vector<int> elems, Rational cost) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  sets[id] = std::move(elems);
  costs[id] = cost;
}

std::size_t CoverInstance::max_set_size() const {
  std::size_t m = 0;
  for (const auto& [id, s] : sets) m = std::max(m, s.size());
  return m;
}

namespace {

struct Indexed {
  std::vector<int> elems;                 // position -> element id
  std::map<int, int> pos;                 // element id -> position
  std::vector<long long> ids;             // set index -> set id
  std::vector<std::uint64_t> masks;       // set index -> covered positions
  std::vector<std::vector<int>> covering; // position -> set indices

  Indexed(const CoverInstance& inst, int limit) {
    if (static_cast<int>(inst.universe.size()) > limit || inst.universe.size() > 64)
      throw std::length_error("cover universe of " + std::to_string(inst.universe.size()) +
                              " elements exceeds exact-solver limit");
    elems = inst.universe;
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    covering.resize(elems.size());
    for (const auto& [id, s] : inst.sets) {
      std::uint64_t m = 0;
      for (int e : s) {
        auto it = pos.find(e);
        if (it != pos.end()) m |= std::uint64_t{1} << it->second;
      }
      if (m == 0) continue;
      int k = static_cast<int>(ids.size());
      ids.push_back(id);
      masks.push_back(m);
      for (std::size_t p = 0; p < elems.size(); ++p)
        if (m >> p & 1) covering[p].push_back(k);
    }
    for (std::size_t p = 0; p < elems.size(); ++p)
      if (covering[p].empty()) throw Uncoverable(elems[p]);
  }

  std::uint64_t full() const {
    return elems.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << elems.size()) - 1;
  }

  // Uncovered position with the fewest covering sets.
  int branch_position(std::uint64_t covered) const {
    int best = -1;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t p = 0; p < elems.size(); ++p) {
      if (covered >> p & 1) continue;
      if (covering[p].size() < fewest) {
        fewest = covering[p].size();
        best = static_cast<int>(p);
      }
    }
    return best;
  }
};

}  // namespace

CoverSolution greedy_cover(const CoverInstance& inst) {
  CoverSolution sol;
  std::map<int, std::vector<long long>> covering;
  for (const auto& [id, s] : inst.sets)
    for (int e : s) covering[e].push_back(id);
  for (int e : inst.universe)
    if (!covering.count(e)) throw Uncoverable(e);

  std::map<long long, int> fresh;  // uncovered elements per set
  std::set<int> uncovered(inst.universe.begin(), inst.universe.end());
  for (const auto& [id, s] : inst.sets) {
    int c = 0;
    for (int e : s)
      if (uncovered.count(e)) ++c;
    fresh[id] = c;
  }
  while (!uncovered.empty()) {
    std::optional<long long> pick;
    Rational best_ratio;
    for (const auto& [id, c] : fresh) {
      if (c == 0) continue;
      Rational ratio = inst.costs.at(id) / Rational(c);
      if (!pick || ratio < best_ratio) {
        pick = id;
        best_ratio = ratio;
      }
    }
    long long id = *pick;
    sol.chosen.push_back(id);
    sol.total_cost += inst.costs.at(id);
    for (int e : inst.sets.at(id)) {
      if (!uncovered.erase(e)) continue;
      for (long long other : covering[e]) --fresh[other];
    }
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.covered = true;
  return sol;
}

CoverSolution exact_cover(const CoverInstance& inst, int limit) {
  Indexed ix(inst, limit);
  std::vector<Rational> cost;
  for (long long id : ix.ids) cost.push_back(inst.costs.at(id));

  std::optional<Rational> best;
  std::vector<int> best_pick, pick;
  auto rec = [&](auto&& self, std::uint64_t covered, Rational spent) -> void {
    if (best && spent >= *best) return;
    if (covered == ix.full()) {
      best = spent;
      best_pick = pick;
      return;
    }
    int p = ix.branch_position(covered);
    for (int k : ix.covering[p]) {
      pick.push_back(k);
      self(self, covered | ix.masks[k], spent + cost[k]);
      pick.pop_back();
    }
  };
  rec(rec, 0, Rational(0));

  CoverSolution sol;
  for (int k : best_pick) sol.chosen.push_back(ix.ids[k]);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.total_cost = best ? *best : Rational(0);
  sol.covered = true;
  return sol;
}

CoverSolution exact_union_cover(const CoverInstance& inst,
                                const std::map<long long, std::vector<int>>& payload, int limit) {
  Indexed ix(inst, limit);
  int maxv = 0;
  for (long long id : ix.ids)
    for (int v : payload.at(id)) maxv = std::max(maxv, v);
  using Bits = boost::dynamic_bitset<>;
  std::vector<Bits> pay;
  for (long long id : ix.ids) {
    Bits b(maxv + 1);
    for (int v : payload.at(id)) b.set(v);
    pay.push_back(b);
  }

  std::optional<std::size_t> best;
  std::vector<int> best_pick;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::uint64_t covered, const Bits& used) -> void {
    std::size_t spent = used.count();
    if (best && spent >= *best) return;
    // Sets already paid for by the union come for free.
    std::vector<int> free_taken;
    for (std::size_t k = 0; k < pay.size(); ++k) {
      if ((covered | ix.masks[k]) != covered && pay[k].is_subset_of(used)) {
        covered |= ix.masks[k];
        free_taken.push_back(static_cast<int>(k));
      }
    }
    for (int k : free_taken) pick.push_back(k);
    if (covered == ix.full()) {
      best = spent;
      best_pick = pick;
    } else {
      int p = ix.branch_position(covered);
      for (int k : ix.covering[p]) {
        pick.push_back(k);
        self(self, covered | ix.masks[k], used | pay[k]);
        pick.pop_back();
      }
    }
    pick.resize(pick.size() - free_taken.size());
  };
  rec(rec, 0, Bits(maxv + 1));

  CoverSolution sol;
  for (int k : best_pick) sol.chosen.push_back(ix.ids[k]);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.chosen.erase(std::unique(sol.chosen.begin(), sol.chosen.end()), sol.chosen.end());
  sol.total_cost = Rational(static_cast<long long>(best.value_or(0)));
  sol.covered = true;
  return sol;
}

Rational harmonic(int d) {
  Rational h(0);
  for (int k = 1; k <= d; ++k) h += Rational(1, k);
  return h;
}

}  // namespace robsense
