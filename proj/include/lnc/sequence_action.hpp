#ifndef LNC_SEQUENCE_ACTION_HPP
#define LNC_SEQUENCE_ACTION_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnc/permutation.hpp"

namespace lnc {

/// A sequence of opaque symbols, positions 1-based. Symbols compare by
/// equality only; no ordering is assumed by the theory.
using SymbolSequence = std::vector<std::string>;

/// Left action on positions: result(i) = values(sigma^{-1}(i)). Works for
/// any element type so other modules can reorder their own sequences the
/// same way.
template <typename T>
std::vector<T> act(const Permutation& sigma, const std::vector<T>& values) {
  if (static_cast<int>(values.size()) != sigma.degree()) {
    throw std::invalid_argument("sequence length does not match the degree");
  }
  const Permutation inverse = sigma.inverse();
  std::vector<T> result;
  result.reserve(values.size());
  for (int i = 1; i <= sigma.degree(); ++i) {
    result.push_back(values[static_cast<size_t>(inverse(i)) - 1]);
  }
  return result;
}

SymbolSequence reversed(const SymbolSequence& s);

/// Mirrored test straight from the definition: both T_m orbit-matching
/// conditions, checked by exhaustive search. Degrees above max_degree are
/// rejected to bound the 2^(m-1) sweep.
bool mirrored_bruteforce(const SymbolSequence& s, const SymbolSequence& s2,
                         int max_degree = 16);

/// Mirrored test via the classification theorem: s == s2 or s == rev s2.
bool mirrored_fast(const SymbolSequence& s, const SymbolSequence& s2);

/// A matched constant prefix/suffix in the leading symbol A = s(1), with
/// non-A entries at both inner boundaries in both sequences.
struct Coincidence {
  int prefix_len = 0; // m1 >= 1
  int suffix_len = 0; // m2 >= 0
  bool operator==(const Coincidence&) const = default;
};

/// The unique coincidence of (s, s2) when one exists.
std::optional<Coincidence> find_coincidence(const SymbolSequence& s,
                                            const SymbolSequence& s2);

/// The middle segment, positions m1+1 .. m-m2. May be empty.
SymbolSequence restrict_middle(const SymbolSequence& s, const Coincidence& c);

/// Position index that may be infinite; infinity compares greater than
/// every finite value.
class OccurrenceIndex {
public:
  static OccurrenceIndex at(int position) { return OccurrenceIndex(position); }
  static OccurrenceIndex infinity() { return OccurrenceIndex(); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const;

  bool operator==(const OccurrenceIndex&) const = default;
  std::strong_ordering operator<=>(const OccurrenceIndex& other) const;

private:
  OccurrenceIndex() = default;
  explicit OccurrenceIndex(int position) : value_(position) {}
  std::optional<int> value_;
};

/// o_w(s): the least position at which some T_m image of s contains w as a
/// factor; infinite when no image does.
OccurrenceIndex occurrence_index(const SymbolSequence& s, const SymbolSequence& w,
                                 int max_degree = 16);

/// Alternating run lengths of a two-symbol sequence, the run of the
/// reference symbol first. The leading and trailing entries may be zero;
/// interior entries are positive and the length is even.
struct SpectrumSequence {
  std::vector<int> runs;
  std::string run_symbol;   // owns the odd positions
  std::string other_symbol; // owns the even positions
};

SpectrumSequence spectrum(const SymbolSequence& s, const std::string& a,
                          const std::string& b);

/// Zero-extended spectrum read: runs(i) for j = 0, else runs(i+j)+runs(i-j).
int e_term(const SpectrumSequence& sigma, int i, int j);

/// One level of the max/argmax refinement tower.
struct SpectrumLevel {
  int value = 0;
  std::vector<int> indices; // 1-based positions into the spectrum
};

/// The full tower for the given reference symbol, ending with the single
/// trailing zero level.
std::vector<SpectrumLevel> m_levels(const SymbolSequence& s,
                                    const std::string& reference,
                                    const std::string& other);

/// Keep the symbols of the given set, replace everything else by the
/// replacement symbol. Commutes with the action.
SymbolSequence project(const SymbolSequence& s, const std::set<std::string>& keep,
                       const std::string& replacement);

enum class SymbolRole { direct, reverse, both, neither };

std::string to_string(SymbolRole role);

/// Whether the positions of symbol a in s carry a also in s2 (direct), in
/// rev s2 (reverse), in both, or in neither. a must occur in s.
SymbolRole classify_symbol(const SymbolSequence& s, const SymbolSequence& s2,
                           const std::string& a);

/// Every symbol occurring in s is direct or reverse for (s, s2).
bool is_special_pair(const SymbolSequence& s, const SymbolSequence& s2);

std::string format_sequence(const SymbolSequence& s);
SymbolSequence parse_sequence(std::string_view text);

} // namespace lnc

#endif
