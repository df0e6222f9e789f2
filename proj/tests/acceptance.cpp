// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Everything is exact integer arithmetic; the checks are
// the property sweeps at full advertised scale.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lnc/group_algebra.hpp"
#include "lnc/matrix_oracle.hpp"
#include "lnc/nc_polynomial.hpp"
#include "lnc/permutation.hpp"
#include "lnc/sequence_action.hpp"
#include "lnc/tm_set.hpp"

using namespace lnc;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, double seconds) {
  std::printf("%s  criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), seconds);
  if (!ok) {
    ++failures;
  }
}

template <typename F>
void criterion(int number, const std::string& label, F check) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  report(number, label, ok, elapsed.count());
}

std::vector<SymbolSequence> all_sequences(int length, int alphabet) {
  static const std::vector<std::string> symbols = {"A", "B", "C", "D"};
  std::vector<SymbolSequence> out{{}};
  for (int pos = 0; pos < length; ++pos) {
    std::vector<SymbolSequence> next;
    for (const SymbolSequence& prefix : out) {
      for (int a = 0; a < alphabet; ++a) {
        SymbolSequence extended = prefix;
        extended.push_back(symbols[static_cast<size_t>(a)]);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<SymbolSequence> all_factors(const SymbolSequence& s) {
  std::vector<SymbolSequence> out;
  for (size_t start = 0; start < s.size(); ++start) {
    for (size_t len = 1; start + len <= s.size(); ++len) {
      out.emplace_back(s.begin() + static_cast<long>(start),
                       s.begin() + static_cast<long>(start + len));
    }
  }
  return out;
}

bool levels_equal(const SymbolSequence& s, const SymbolSequence& s2,
                  const std::string& ref, const std::string& other) {
  const auto left = m_levels(s, ref, other);
  const auto right = m_levels(s2, ref, other);
  if (left.size() != right.size()) {
    return false;
  }
  for (size_t i = 0; i < left.size(); ++i) {
    if (left[i].value != right[i].value) {
      return false;
    }
  }
  return true;
}

bool check_cardinality() {
  for (int m = 1; m <= 12; ++m) {
    if (enumerate_tm(m).size() != count_tm(m)) {
      return false;
    }
    std::uint64_t slice_sum = 0;
    for (int t = 1; t <= m; ++t) {
      if (enumerate_tm_t(m, t).size() != count_tm_t(m, t)) {
        return false;
      }
      slice_sum += count_tm_t(m, t);
    }
    if (slice_sum != count_tm(m)) {
      return false;
    }
  }
  return true;
}

bool check_characterizations() {
  for (int m = 1; m <= 7; ++m) {
    for (const Permutation& sigma : all_permutations(m)) {
      const bool descent = is_member_descent(sigma);
      if (descent != is_member_block(sigma) || descent != is_member_tau(sigma) ||
          descent != witness(sigma).has_value()) {
        return false;
      }
    }
  }
  return true;
}

bool check_expansion() {
  for (int m = 2; m <= 9; ++m) {
    if (!(commutator_recursive(m) == commutator_via_tm(m))) {
      return false;
    }
  }
  return true;
}

bool check_group_algebra() {
  for (int m = 2; m <= 8; ++m) {
    const GroupAlgebraElement reference = vm_definition(m);
    if (!(vm_cycles(m) == reference) || !(vm_tau(m) == reference)) {
      return false;
    }
  }
  return true;
}

bool check_matrix_oracle() {
  for (int m = 2; m <= 7; ++m) {
    const auto chain = unit_chain(m);
    std::set<Permutation> nonzero;
    for (const Permutation& sigma : all_permutations(m)) {
      if (!permuted_commutator(chain, sigma).is_zero()) {
        nonzero.insert(sigma);
      }
    }
    const auto members = enumerate_tm(m);
    if (nonzero != std::set<Permutation>(members.begin(), members.end())) {
      return false;
    }
  }
  for (int m = 2; m <= 6; ++m) {
    const auto chain = unit_chain(m);
    for (const Permutation& sigma : all_permutations(m)) {
      if (permuted_product_is_nonzero(chain, sigma) != sigma.is_identity()) {
        return false;
      }
    }
  }
  return true;
}

bool check_mirrored_theorem() {
  for (int m = 1; m <= 6; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 2)) {
      for (const SymbolSequence& s2 : all_sequences(m, 2)) {
        if (mirrored_bruteforce(s, s2) != mirrored_fast(s, s2)) {
          return false;
        }
      }
    }
  }
  for (int m = 1; m <= 5; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 3)) {
      for (const SymbolSequence& s2 : all_sequences(m, 3)) {
        if (mirrored_bruteforce(s, s2) != mirrored_fast(s, s2)) {
          return false;
        }
      }
    }
  }
  std::mt19937 rng(173529);
  const std::vector<std::string> symbols = {"A", "B", "C"};
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 9);
    SymbolSequence s;
    for (int i = 0; i < m; ++i) {
      s.push_back(symbols[rng() % 3]);
    }
    SymbolSequence s2;
    switch (rng() % 3) {
      case 0: s2 = s; break;
      case 1: s2 = reversed(s); break;
      default:
        for (int i = 0; i < m; ++i) {
          s2.push_back(symbols[rng() % 3]);
        }
    }
    if (mirrored_bruteforce(s, s2) != mirrored_fast(s, s2)) {
      return false;
    }
  }
  return true;
}

bool check_lemma_suite() {
  // Restriction of a mirrored pair with a coincidence is mirrored.
  for (int m = 2; m <= 6; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 2)) {
      for (const SymbolSequence& s2 : all_sequences(m, 2)) {
        if (!mirrored_bruteforce(s, s2)) {
          continue;
        }
        const auto c = find_coincidence(s, s2);
        if (c.has_value() &&
            !mirrored_bruteforce(restrict_middle(s, *c), restrict_middle(s2, *c))) {
          return false;
        }
      }
    }
  }
  // Mirrored pairs share every occurrence index.
  for (int m = 2; m <= 5; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 2)) {
      for (const SymbolSequence& s2 : all_sequences(m, 2)) {
        if (!mirrored_bruteforce(s, s2)) {
          continue;
        }
        for (const SymbolSequence& w : all_factors(s)) {
          if (occurrence_index(s, w) != occurrence_index(s2, w)) {
            return false;
          }
        }
      }
    }
  }
  // Mirrored pairs share both level towers.
  for (int m = 2; m <= 6; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 2)) {
      for (const SymbolSequence& s2 : all_sequences(m, 2)) {
        if (mirrored_bruteforce(s, s2) &&
            (!levels_equal(s, s2, "A", "B") || !levels_equal(s, s2, "B", "A"))) {
          return false;
        }
      }
    }
  }
  // Mirrored implies special.
  for (int m = 2; m <= 5; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 3)) {
      for (const SymbolSequence& s2 : all_sequences(m, 3)) {
        if (mirrored_bruteforce(s, s2) && !is_special_pair(s, s2)) {
          return false;
        }
      }
    }
  }
  // Special against the tau_{m-1} image forces equality with it.
  for (int m = 3; m <= 7; ++m) {
    const Permutation tau = Permutation::reverse(m, m - 1);
    const int alphabet = m <= 5 ? 3 : 2;
    for (const SymbolSequence& s : all_sequences(m, alphabet)) {
      const SymbolSequence image = act(tau, s);
      if (is_special_pair(s, image) && s != image) {
        return false;
      }
    }
  }
  // Two-symbol mirrored pairs with a non-constant first sequence admit a
  // coincidence in (s, s2) or (s, rev s2).
  for (int m = 2; m <= 6; ++m) {
    for (const SymbolSequence& s : all_sequences(m, 2)) {
      const bool constant =
          std::set<std::string>(s.begin(), s.end()).size() == 1;
      if (constant) {
        continue;
      }
      for (const SymbolSequence& s2 : all_sequences(m, 2)) {
        if (mirrored_bruteforce(s, s2) && !find_coincidence(s, s2).has_value() &&
            !find_coincidence(s, reversed(s2)).has_value()) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_worked_examples() {
  const Permutation composed = Permutation({3, 1, 2}).compose(Permutation({2, 1, 3}));
  if (composed != Permutation({1, 3, 2}) || is_member_descent(composed)) {
    return false;
  }

  const auto taus = tau_decomposition(Permutation({4, 3, 1, 2, 5, 6}));
  if (!taus.has_value() || *taus != std::vector<int>{2, 4}) {
    return false;
  }

  const SymbolSequence s = {"A", "A", "B", "C", "D"};
  const SymbolSequence s2 = {"A", "B", "C", "D", "A"};
  const SymbolSequence w = {"A", "A"};
  if (occurrence_index(s, w) != OccurrenceIndex::at(1) ||
      occurrence_index(s2, w) != OccurrenceIndex::at(4)) {
    return false;
  }

  const SymbolSequence t = {"A", "A", "A", "B", "B", "B", "A", "A", "A", "B"};
  const auto tower = m_levels(t, "A", "B");
  if (tower.size() != 4 || tower[0].value != 3 || tower[1].value != 4 ||
      tower[2].value != 3 || tower[3].value != 0) {
    return false;
  }
  const SymbolSequence t2 = {"A", "A", "A", "B", "A", "A", "A", "B", "B", "B"};
  const auto b_tower = m_levels(t, "B", "A");
  const auto b_tower2 = m_levels(t2, "B", "A");
  if (b_tower.size() < 2 || b_tower2.size() < 2 || b_tower[1].value != 6 ||
      b_tower2[1].value != 3) {
    return false;
  }

  const SymbolSequence p = {"A", "B", "C", "D", "C"};
  const SymbolSequence p2 = {"A", "D", "C", "B", "C"};
  return is_special_pair(p, p2) && !mirrored_bruteforce(p, p2);
}

} // namespace

int main() {
  criterion(1, "cardinality and slice counts, m <= 12", check_cardinality);
  criterion(2, "four membership characterizations agree on S_m, m <= 7",
            check_characterizations);
  criterion(3, "recursive and set-based expansions agree, m = 2..9",
            check_expansion);
  criterion(4, "v_m definition, cycle and tau factorizations agree, m = 2..8",
            check_group_algebra);
  criterion(5, "matrix oracle reproduces the set, m <= 7", check_matrix_oracle);
  criterion(6, "mirrored brute force agrees with the theorem", check_mirrored_theorem);
  criterion(7, "lemma suite: restriction, o_w, towers, special pairs, coincidences",
            check_lemma_suite);
  criterion(8, "worked examples reproduce bit-exactly", check_worked_examples);
  return failures == 0 ? 0 : 1;
}
