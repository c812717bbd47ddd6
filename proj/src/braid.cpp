#include "hurwitz/braid.hpp"

#include <deque>
#include <unordered_set>

#include "hurwitz/error.hpp"
#include "hurwitz/reflection.hpp"

namespace hurwitz {

namespace {

Matrix inverse_of(const Matrix& b) {
  if ((b * b).is_identity()) return b;
  return mat_inv(b);
}

}  // namespace

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& m : w) {
    if (!out.empty()) out += ' ';
    if (m.inverse) out += '-';
    out += std::to_string(m.index);
  }
  return out;
}

std::string TupleState::key() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += '|';
    out += entries[i].key();
  }
  return out;
}

std::size_t TupleState::hash() const noexcept {
  std::size_t h = entries.size();
  for (const auto& m : entries) h = h * 0x9e3779b97f4a7c15ull ^ m.hash();
  return h;
}

TupleState sigma_apply(const BraidMove& m, const TupleState& t) {
  const std::size_t n = t.size();
  if (m.index < 1 || m.index + 1 > n)
    throw Error(ErrorCode::IndexOutOfRange, "sigma_" + std::to_string(m.index) +
                                                " on a tuple of length " + std::to_string(n));
  TupleState out = t;
  const std::size_t i = m.index - 1;
  const Matrix& a = t.entries[i];
  const Matrix& b = t.entries[i + 1];
  if (!m.inverse) {
    out.entries[i] = b;
    out.entries[i + 1] = inverse_of(b) * a * b;
  } else {
    out.entries[i] = a * b * inverse_of(a);
    out.entries[i + 1] = a;
  }
  return out;
}

TupleState apply_word(const BraidWord& w, const TupleState& t) {
  TupleState out = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = sigma_apply(*it, out);
  return out;
}

TupleState gamma_apply(const TupleState& t) {
  if (t.size() < 2) throw Error(ErrorCode::IndexOutOfRange, "gamma needs two entries");
  BraidWord w;
  for (std::size_t i = 1; i < t.size(); ++i) w.push_back({i, false});
  return apply_word(w, t);
}

bool gamma_power_check(const TupleState& t) {
  TupleState g = t;
  for (std::size_t k = 0; k < t.size(); ++k) g = gamma_apply(g);
  const Matrix c = product(t.entries);
  const Matrix cinv = mat_inv(c);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!(g.entries[i] == cinv * t.entries[i] * c)) return false;
  return true;
}

std::string to_string(OrbitResult::Status s) {
  return s == OrbitResult::Status::Complete ? "Complete" : "CapExceeded";
}

OrbitResult orbit(const TupleState& t, std::size_t cap) {
  OrbitResult r;
  r.cap = cap;
  std::vector<TupleState>& states = r.states;
  auto hash = [&](std::size_t i) { return states[i].hash(); };
  auto eq = [&](std::size_t i, std::size_t j) { return states[i] == states[j]; };
  std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(64, hash, eq);

  states.push_back(t);
  seen.insert(0);
  if (states.size() >= cap) {
    r.status = OrbitResult::Status::CapExceeded;
    r.size = states.size();
    return r;
  }
  const std::size_t n = t.size();
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (std::size_t i = 1; i < n; ++i)
      for (bool inv : {false, true}) {
        states.push_back(sigma_apply({i, inv}, states[head]));
        if (!seen.insert(states.size() - 1).second) {
          states.pop_back();
          continue;
        }
        if (states.size() >= cap) {
          r.status = OrbitResult::Status::CapExceeded;
          r.size = states.size();
          return r;
        }
      }
  }
  r.status = OrbitResult::Status::Complete;
  r.size = states.size();
  return r;
}

std::size_t central_power(const TupleState& t, std::size_t limit) {
  const Matrix c = product(t.entries);
  Matrix p = c;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool central = true;
    for (const auto& s : t.entries)
      if (!(p * s == s * p)) {
        central = false;
        break;
      }
    if (central) return k;
    p = p * c;
  }
  return 0;
}

std::pair<BraidWord, TupleState> prefix_realize(const TupleState& t,
                                                const std::vector<std::size_t>& indices) {
  const std::size_t n = t.size();
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 1 || indices[k] > n)
      throw Error(ErrorCode::BadSubsequence, "index " + std::to_string(indices[k]) +
                                                 " outside 1.." + std::to_string(n));
    if (k && indices[k] <= indices[k - 1])
      throw Error(ErrorCode::BadSubsequence, "indices must be strictly increasing");
  }
  // Step p moves the untouched entry at position i_p to position p with
  // sigma_p ... sigma_{i_p - 1}; positions after i_p are not disturbed, so
  // later targets are still where they started.
  BraidWord word;
  TupleState u = t;
  for (std::size_t p = 1; p <= indices.size(); ++p) {
    BraidWord step;
    for (std::size_t i = p; i < indices[p - 1]; ++i) step.push_back({i, false});
    u = apply_word(step, u);
    word.insert(word.begin(), step.begin(), step.end());
  }
  for (std::size_t p = 0; p < indices.size(); ++p)
    if (!(u.entries[p] == t.entries[indices[p] - 1]))
      throw Error(ErrorCode::InternalMismatch, "prefix realization missed entry " +
                                                   std::to_string(indices[p]));
  return {std::move(word), std::move(u)};
}

}  // namespace hurwitz
