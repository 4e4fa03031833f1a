#pragma once

#include <boost/rational.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace robsense {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);        // "num/den"
Rational rational_from_string(const std::string& s);

class Uncoverable : public std::runtime_error {
 public:
  explicit Uncoverable(int element, const std::string& what = "")
      : std::runtime_error(what.empty() ? "element " + std::to_string(element) + " cannot be covered"
                                        : what),
        element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

struct CoverInstance {
  std::vector<int> universe;                       // sorted element ids
  std::map<long long, std::vector<int>> sets;      // id -> sorted elements
  std::map<long long, Rational> costs;

  void add_set(long long id, std::vector<int> elems, Rational cost);
  std::size_t max_set_size() const;
};

struct CoverSolution {
  std::vector<long long> chosen;  // ascending ids
  Rational total_cost{0};
  bool covered = false;
};

// Repeatedly take the set with least cost per newly covered element; ties go to the lowest id.
CoverSolution greedy_cover(const CoverInstance& inst);

// Minimum total cost by branch and bound. Throws std::length_error above `limit` elements.
CoverSolution exact_cover(const CoverInstance& inst, int limit = 20);

// Minimum size of the union of the chosen sets' payloads (vertex sets). Used when
// overlapping back-ups make the summed cost overstate the number of sensors.
CoverSolution exact_union_cover(const CoverInstance& inst,
                                const std::map<long long, std::vector<int>>& payload,
                                int limit = 64);

Rational harmonic(int d);

}  // namespace robsense
