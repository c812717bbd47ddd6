#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/linalg.hpp"

namespace hurwitz {

/// sigma_index or its inverse; index is 1-based.
struct BraidMove {
  std::size_t index = 1;
  bool inverse = false;
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

/// A braid word acts on tuples as a composition of maps: the rightmost
/// letter is applied first, so {s1, s2} sends t to s1(s2(t)).
using BraidWord = std::vector<BraidMove>;

/// "2 -1 3" for sigma_2 sigma_1^-1 sigma_3.
std::string to_string(const BraidWord& w);

struct TupleState {
  std::vector<Matrix> entries;

  /// Entry keys joined by '|'.
  [[nodiscard]] std::string key() const;
  [[nodiscard]] std::size_t hash() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
  friend bool operator==(const TupleState& a, const TupleState& b) {
    return a.entries == b.entries;
  }
};

struct TupleStateHash {
  std::size_t operator()(const TupleState& t) const noexcept { return t.hash(); }
};

/// sigma_i: (.., s_i, s_i+1, ..) -> (.., s_i+1, s_i+1^-1 s_i s_i+1, ..)
/// and its inverse (.., s_i s_i+1 s_i^-1, s_i, ..). Throws IndexOutOfRange.
TupleState sigma_apply(const BraidMove& m, const TupleState& t);
TupleState apply_word(const BraidWord& w, const TupleState& t);

/// sigma_1 ... sigma_n-1.
TupleState gamma_apply(const TupleState& t);
/// gamma^n(t) equals t conjugated entrywise by s_1 ... s_n.
bool gamma_power_check(const TupleState& t);

struct OrbitResult {
  enum class Status { Complete, CapExceeded };
  Status status = Status::Complete;
  std::size_t size = 0;
  std::size_t cap = 0;
  /// Discovery order; the first state is the start.
  std::vector<TupleState> states;
};

std::string to_string(OrbitResult::Status s);

/// Breadth-first closure under sigma_1, sigma_1^-1, sigma_2, ... in that
/// order. Stops with CapExceeded once `cap` distinct states are known, so
/// Complete implies size < cap.
OrbitResult orbit(const TupleState& t, std::size_t cap);

/// Smallest p in 1..limit with (s_1...s_n)^p commuting with every s_i, or 0.
std::size_t central_power(const TupleState& t, std::size_t limit);

/// Braid word w with w(t) starting with the original entries at `indices`
/// (1-based, strictly increasing). Throws BadSubsequence.
std::pair<BraidWord, TupleState> prefix_realize(const TupleState& t,
                                                const std::vector<std::size_t>& indices);

}  // namespace hurwitz
