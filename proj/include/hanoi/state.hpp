#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanoi {

// Raised when m^n does not fit the 64-bit state code space. Closed-form
// counting is unaffected; only enumeration needs materialized codes.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using StateCode = std::uint64_t;

// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    result *= base;
  }
  return result;
}

// m^n with the capacity check applied.
inline std::uint64_t state_space_size(int disc_count, int peg_count) {
  if (disc_count < 0) throw std::invalid_argument("disc count must be >= 0");
  const auto size = checked_pow(static_cast<std::uint64_t>(peg_count), disc_count);
  if (!size) throw capacity_error("state space m^n exceeds 64-bit code capacity");
  return *size;
}

class StateRange;

// Placement of n discs on pegs 1..m. Disc 1 is the smallest; disc d
// sits on peg disc_pegs()[d-1]. n = 0 (the empty state) is allowed.
// Value type, immutable through the public API.
class State {
 public:
  State(std::vector<int> disc_pegs, int peg_count)
      : pegs_(std::move(disc_pegs)), peg_count_(peg_count) {
    if (peg_count_ < 3) throw std::invalid_argument("state needs at least 3 pegs");
    for (int p : pegs_)
      if (p < 1 || p > peg_count_)
        throw std::invalid_argument("disc placed on peg outside 1..m");
  }

  int disc_count() const { return static_cast<int>(pegs_.size()); }
  int peg_count() const { return peg_count_; }
  const std::vector<int>& disc_pegs() const { return pegs_; }

  int peg_of(int disc) const { return pegs_[static_cast<std::size_t>(disc) - 1]; }

  // Copy with one disc reassigned.
  State with_disc_on(int disc, int peg) const {
    if (disc < 1 || disc > disc_count()) throw std::invalid_argument("no such disc");
    if (peg < 1 || peg > peg_count_) throw std::invalid_argument("no such peg");
    State moved(*this);
    moved.pegs_[static_cast<std::size_t>(disc) - 1] = peg;
    return moved;
  }

  bool operator==(const State&) const = default;

 private:
  friend class StateRange;
  std::vector<int> pegs_;
  int peg_count_;
};

// Dense code: disc 1 is the least significant mixed-radix digit, so
// encode(u) = sum over d of (u_d - 1) * m^(d-1). Bijective with decode
// over [0, m^n).
inline StateCode encode(const State& s) {
  state_space_size(s.disc_count(), s.peg_count());
  StateCode code = 0;
  StateCode weight = 1;
  for (int d = 1; d <= s.disc_count(); ++d) {
    code += static_cast<StateCode>(s.peg_of(d) - 1) * weight;
    weight *= static_cast<StateCode>(s.peg_count());
  }
  return code;
}

inline State decode(StateCode code, int disc_count, int peg_count) {
  if (code >= state_space_size(disc_count, peg_count))
    throw std::out_of_range("state code out of range");
  std::vector<int> pegs(static_cast<std::size_t>(disc_count));
  for (int d = 0; d < disc_count; ++d) {
    pegs[static_cast<std::size_t>(d)] =
        static_cast<int>(code % static_cast<StateCode>(peg_count)) + 1;
    code /= static_cast<StateCode>(peg_count);
  }
  return State(std::move(pegs), peg_count);
}

// Peg of one disc, read straight off a code without a full decode.
inline int peg_digit(StateCode code, int disc, int peg_count) {
  for (int d = 1; d < disc; ++d) code /= static_cast<StateCode>(peg_count);
  return static_cast<int>(code % static_cast<StateCode>(peg_count)) + 1;
}

// Discs lying on one peg, ascending (so the front is the topmost disc).
inline std::vector<int> peg_content(const State& s, int peg) {
  if (peg < 1 || peg > s.peg_count()) throw std::invalid_argument("no such peg");
  std::vector<int> discs;
  for (int d = 1; d <= s.disc_count(); ++d)
    if (s.peg_of(d) == peg) discs.push_back(d);
  return discs;
}

namespace detail {

// top[p] = smallest (topmost) disc on peg p, 0 when the peg is empty.
inline std::vector<int> top_discs(const State& u) {
  std::vector<int> top(static_cast<std::size_t>(u.peg_count()) + 1, 0);
  for (int disc = u.disc_count(); disc >= 1; --disc) top[static_cast<std::size_t>(u.peg_of(disc))] = disc;
  return top;
}

}  // namespace detail

// Text form lists pegs for discs n down to 1 (largest disc first):
// a plain digit string when m <= 9, comma separated otherwise.
inline std::string format_state(const State& s) {
  std::string out;
  if (s.peg_count() <= 9) {
    for (int d = s.disc_count(); d >= 1; --d)
      out.push_back(static_cast<char>('0' + s.peg_of(d)));
  } else {
    for (int d = s.disc_count(); d >= 1; --d) {
      if (d != s.disc_count()) out.push_back(',');
      out += std::to_string(s.peg_of(d));
    }
  }
  return out;
}

inline State parse_state(const std::string& text, int disc_count, int peg_count) {
  if (disc_count < 0) throw std::invalid_argument("disc count must be >= 0");
  if (disc_count == 0) {
    if (!text.empty())
      throw std::invalid_argument("state text for 0 discs must be empty");
    return State({}, peg_count);
  }
  const auto parse_label = [peg_count](const std::string& token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad peg label: '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("bad peg label: '" + token + "'");
    if (value < 1 || value > peg_count)
      throw std::invalid_argument("peg label out of range: '" + token + "'");
    return value;
  };

  std::vector<int> pegs(static_cast<std::size_t>(disc_count));
  if (text.find(',') != std::string::npos) {
    int disc = disc_count;  // first token names the peg of the largest disc
    std::size_t start = 0;
    while (true) {
      const std::size_t stop = text.find(',', start);
      const std::string token =
          text.substr(start, stop == std::string::npos ? stop : stop - start);
      if (disc < 1) throw std::invalid_argument("too many pegs in state text");
      pegs[static_cast<std::size_t>(disc) - 1] = parse_label(token);
      --disc;
      if (stop == std::string::npos) break;
      start = stop + 1;
    }
    if (disc != 0) throw std::invalid_argument("too few pegs in state text");
  } else if (disc_count == 1) {
    pegs[0] = parse_label(text);
  } else {
    if (peg_count > 9)
      throw std::invalid_argument("digit state form requires at most 9 pegs");
    if (static_cast<int>(text.size()) != disc_count)
      throw std::invalid_argument("state text has wrong number of digits");
    for (int i = 0; i < disc_count; ++i) {
      const char c = text[static_cast<std::size_t>(i)];
      const int value = c - '0';
      if (value < 1 || value > peg_count)
        throw std::invalid_argument(std::string("peg digit out of range: '") + c + "'");
      pegs[static_cast<std::size_t>(disc_count - 1 - i)] = value;
    }
  }
  return State(std::move(pegs), peg_count);
}

// All m^n states in ascending code order. Increment is the usual
// mixed-radix carry over the disc digits.
class StateRange {
 public:
  class iterator {
   public:
    using value_type = State;
    using reference = const State&;
    using pointer = const State*;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const State& operator*() const { return state_; }
    const State* operator->() const { return &state_; }
    StateCode code() const { return code_; }

    iterator& operator++() {
      ++code_;
      for (int& peg : state_.pegs_) {
        if (++peg <= state_.peg_count_) break;
        peg = 1;
      }
      return *this;
    }
    iterator operator++(int) {
      iterator before = *this;
      ++*this;
      return before;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.code_ == b.code_;
    }

   private:
    friend class StateRange;
    iterator(State s, StateCode c) : state_(std::move(s)), code_(c) {}
    State state_;
    StateCode code_;
  };

  StateRange(int disc_count, int peg_count)
      : disc_count_(disc_count),
        peg_count_(peg_count),
        size_(state_space_size(disc_count, peg_count)) {}

  std::uint64_t size() const { return size_; }

  iterator begin() const {
    return iterator(State(std::vector<int>(static_cast<std::size_t>(disc_count_), 1),
                          peg_count_),
                    0);
  }
  iterator end() const {
    return iterator(State(std::vector<int>(static_cast<std::size_t>(disc_count_), 1),
                          peg_count_),
                    size_);
  }

 private:
  int disc_count_;
  int peg_count_;
  std::uint64_t size_;
};

inline StateRange all_states(int disc_count, int peg_count) {
  return StateRange(disc_count, peg_count);
}

}  // namespace hanoi
