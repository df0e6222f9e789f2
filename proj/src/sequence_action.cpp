#include "lnc/sequence_action.hpp"

#include <algorithm>
#include <stdexcept>

#include "lnc/tm_set.hpp"

namespace lnc {

namespace {

std::set<SymbolSequence> orbit_under_tm(const SymbolSequence& s) {
  std::set<SymbolSequence> images;
  for (const Permutation& sigma : enumerate_tm(static_cast<int>(s.size()))) {
    images.insert(act(sigma, s));
  }
  return images;
}

} // namespace

SymbolSequence reversed(const SymbolSequence& s) {
  return {s.rbegin(), s.rend()};
}

bool mirrored_bruteforce(const SymbolSequence& s, const SymbolSequence& s2,
                         int max_degree) {
  if (s.size() != s2.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  const int m = static_cast<int>(s.size());
  if (m > max_degree) {
    throw std::invalid_argument("degree " + std::to_string(m) +
                                " above brute-force cap " +
                                std::to_string(max_degree));
  }
  if (m == 0) {
    return true;
  }
  const std::set<SymbolSequence> images2 = orbit_under_tm(s2);
  for (const Permutation& sigma : enumerate_tm(m)) {
    if (!images2.contains(act(sigma, s))) {
      return false;
    }
  }
  const std::set<SymbolSequence> images1 = orbit_under_tm(s);
  for (const Permutation& tau : enumerate_tm(m)) {
    if (!images1.contains(act(tau, s2))) {
      return false;
    }
  }
  return true;
}

bool mirrored_fast(const SymbolSequence& s, const SymbolSequence& s2) {
  if (s.size() != s2.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  return s == s2 || s == reversed(s2);
}

std::optional<Coincidence> find_coincidence(const SymbolSequence& s,
                                            const SymbolSequence& s2) {
  if (s.size() != s2.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  const int m = static_cast<int>(s.size());
  if (m == 0) {
    return std::nullopt;
  }
  const std::string& a = s.front();
  int m1 = 0;
  while (m1 < m && s[static_cast<size_t>(m1)] == a && s2[static_cast<size_t>(m1)] == a) {
    ++m1;
  }
  if (m1 == 0 || m1 == m) {
    return std::nullopt;
  }
  int m2 = 0;
  while (m2 < m - m1 && s[static_cast<size_t>(m - m2 - 1)] == a &&
         s2[static_cast<size_t>(m - m2 - 1)] == a) {
    ++m2;
  }
  // Both inner boundaries must leave the leading symbol in both sequences.
  const size_t after_prefix = static_cast<size_t>(m1);
  const size_t before_suffix = static_cast<size_t>(m - m2 - 1);
  if (s[after_prefix] == a || s2[after_prefix] == a) {
    return std::nullopt;
  }
  if (s[before_suffix] == a || s2[before_suffix] == a) {
    return std::nullopt;
  }
  return Coincidence{m1, m2};
}

SymbolSequence restrict_middle(const SymbolSequence& s, const Coincidence& c) {
  const int m = static_cast<int>(s.size());
  if (c.prefix_len < 1 || c.suffix_len < 0 || c.prefix_len + c.suffix_len > m) {
    throw std::invalid_argument("coincidence does not fit the sequence");
  }
  return {s.begin() + c.prefix_len, s.end() - c.suffix_len};
}

int OccurrenceIndex::value() const {
  if (!value_.has_value()) {
    throw std::logic_error("occurrence index is infinite");
  }
  return *value_;
}

std::strong_ordering OccurrenceIndex::operator<=>(const OccurrenceIndex& other) const {
  if (is_infinite() && other.is_infinite()) {
    return std::strong_ordering::equal;
  }
  if (is_infinite()) {
    return std::strong_ordering::greater;
  }
  if (other.is_infinite()) {
    return std::strong_ordering::less;
  }
  return *value_ <=> *other.value_;
}

OccurrenceIndex occurrence_index(const SymbolSequence& s, const SymbolSequence& w,
                                 int max_degree) {
  const int m = static_cast<int>(s.size());
  const int d = static_cast<int>(w.size());
  if (d > m) {
    throw std::invalid_argument("pattern longer than the sequence");
  }
  if (m > max_degree) {
    throw std::invalid_argument("degree " + std::to_string(m) +
                                " above brute-force cap " +
                                std::to_string(max_degree));
  }
  OccurrenceIndex best = OccurrenceIndex::infinity();
  for (const Permutation& sigma : enumerate_tm(m)) {
    const SymbolSequence image = act(sigma, s);
    for (int i = 1; i + d - 1 <= m; ++i) {
      if (std::equal(w.begin(), w.end(), image.begin() + (i - 1))) {
        best = std::min(best, OccurrenceIndex::at(i));
        break;
      }
    }
  }
  return best;
}

SpectrumSequence spectrum(const SymbolSequence& s, const std::string& a,
                          const std::string& b) {
  if (a == b) {
    throw std::invalid_argument("the two reference symbols must differ");
  }
  for (const std::string& symbol : s) {
    if (symbol != a && symbol != b) {
      throw std::invalid_argument("symbol '" + symbol +
                                  "' outside the two-symbol alphabet");
    }
  }
  SpectrumSequence result;
  result.run_symbol = a;
  result.other_symbol = b;
  size_t pos = 0;
  std::string expected = a;
  while (pos < s.size()) {
    int run = 0;
    while (pos < s.size() && s[pos] == expected) {
      ++run;
      ++pos;
    }
    result.runs.push_back(run);
    expected = expected == a ? b : a;
  }
  if (result.runs.size() % 2 != 0) {
    result.runs.push_back(0); // trailing run of the other symbol
  }
  return result;
}

int e_term(const SpectrumSequence& sigma, int i, int j) {
  const int len = static_cast<int>(sigma.runs.size());
  if (i < 1 || i > len) {
    throw std::invalid_argument("spectrum index " + std::to_string(i) +
                                " outside 1.." + std::to_string(len));
  }
  const auto read = [&](int l) {
    return l >= 1 && l <= len ? sigma.runs[static_cast<size_t>(l) - 1] : 0;
  };
  return j == 0 ? read(i) : read(i + j) + read(i - j);
}

std::vector<SpectrumLevel> m_levels(const SymbolSequence& s,
                                    const std::string& reference,
                                    const std::string& other) {
  const SpectrumSequence sp = spectrum(s, reference, other);
  std::vector<SpectrumLevel> levels;

  SpectrumLevel first;
  for (int l = 1; l <= static_cast<int>(sp.runs.size()); l += 2) {
    first.value = std::max(first.value, sp.runs[static_cast<size_t>(l) - 1]);
  }
  if (first.value > 0) {
    for (int l = 1; l <= static_cast<int>(sp.runs.size()); l += 2) {
      if (sp.runs[static_cast<size_t>(l) - 1] == first.value) {
        first.indices.push_back(l);
      }
    }
  }
  levels.push_back(std::move(first));

  while (!levels.back().indices.empty()) {
    const SpectrumLevel& prev = levels.back();
    const int offset = static_cast<int>(levels.size()); // j = i - 1
    SpectrumLevel next;
    for (int l : prev.indices) {
      next.value = std::max(next.value, e_term(sp, l, offset));
    }
    if (next.value > 0) {
      for (int l : prev.indices) {
        if (e_term(sp, l, offset) == next.value) {
          next.indices.push_back(l);
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

SymbolSequence project(const SymbolSequence& s, const std::set<std::string>& keep,
                       const std::string& replacement) {
  SymbolSequence result;
  result.reserve(s.size());
  for (const std::string& symbol : s) {
    result.push_back(keep.contains(symbol) ? symbol : replacement);
  }
  return result;
}

std::string to_string(SymbolRole role) {
  switch (role) {
    case SymbolRole::direct: return "direct";
    case SymbolRole::reverse: return "reverse";
    case SymbolRole::both: return "both";
    case SymbolRole::neither: return "neither";
  }
  return "?";
}

SymbolRole classify_symbol(const SymbolSequence& s, const SymbolSequence& s2,
                           const std::string& a) {
  if (s.size() != s2.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  if (std::find(s.begin(), s.end(), a) == s.end()) {
    throw std::invalid_argument("symbol '" + a + "' does not occur");
  }
  const size_t m = s.size();
  bool direct = true;
  bool reverse = true;
  for (size_t i = 0; i < m; ++i) {
    if (s[i] != a) {
      continue;
    }
    direct = direct && s2[i] == a;
    reverse = reverse && s2[m - i - 1] == a;
  }
  if (direct && reverse) {
    return SymbolRole::both;
  }
  if (direct) {
    return SymbolRole::direct;
  }
  if (reverse) {
    return SymbolRole::reverse;
  }
  return SymbolRole::neither;
}

bool is_special_pair(const SymbolSequence& s, const SymbolSequence& s2) {
  if (s.size() != s2.size()) {
    throw std::invalid_argument("sequence lengths differ");
  }
  std::set<std::string> seen;
  for (const std::string& symbol : s) {
    if (!seen.insert(symbol).second) {
      continue;
    }
    if (classify_symbol(s, s2, symbol) == SymbolRole::neither) {
      return false;
    }
  }
  return true;
}

std::string format_sequence(const SymbolSequence& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += s[i];
  }
  return out;
}

SymbolSequence parse_sequence(std::string_view text) {
  SymbolSequence out;
  if (text.empty()) {
    return out;
  }
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw std::invalid_argument("empty symbol in sequence text");
    }
    out.emplace_back(token);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

} // namespace lnc
