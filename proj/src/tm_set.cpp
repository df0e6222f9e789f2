#include "lnc/tm_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace lnc {

bool is_member_descent(const Permutation& sigma) {
  const int m = sigma.degree();
  int r = 0;
  while (r + 1 < m && sigma(r + 1) > sigma(r + 2)) {
    ++r;
  }
  // Descents must stop for good after position r.
  for (int j = r + 1; j < m; ++j) {
    if (sigma(j) > sigma(j + 1)) {
      return false;
    }
  }
  return true;
}

bool is_member_block(const Permutation& sigma) {
  const int m = sigma.degree();
  const int t = sigma.preimage(1);
  for (int k1 = 0; k1 < t; ++k1) {
    for (int k2 = 0; t + k2 <= m; ++k2) {
      const int block = k1 + k2 + 1;
      if (block >= m) {
        continue;
      }
      // The window t-k1 .. t+k2 holds {1..block} iff its maximum is block.
      int max_value = 0;
      for (int p = t - k1; p <= t + k2; ++p) {
        max_value = std::max(max_value, sigma(p));
      }
      if (max_value != block) {
        continue;
      }
      const bool left = t - k1 - 1 >= 1 && sigma(t - k1 - 1) == block + 1;
      const bool right = t + k2 + 1 <= m && sigma(t + k2 + 1) == block + 1;
      if (!left && !right) {
        return false;
      }
    }
  }
  return true;
}

bool is_member_tau(const Permutation& sigma) {
  return tau_decomposition(sigma).has_value();
}

std::optional<MembershipWitness> witness(const Permutation& sigma) {
  MembershipWitness w;
  w.one_position = sigma.preimage(1);
  w.descent_count = w.one_position - 1;
  for (int i = 1; i <= w.descent_count; ++i) {
    w.cycle_indices.push_back(sigma(i));
  }
  for (size_t i = 0; i < w.cycle_indices.size(); ++i) {
    if (w.cycle_indices[i] <= 1 ||
        (i > 0 && w.cycle_indices[i - 1] <= w.cycle_indices[i])) {
      return std::nullopt;
    }
  }
  if (recompose_witness(sigma.degree(), w) != sigma) {
    return std::nullopt;
  }
  return w;
}

Permutation recompose_witness(int degree, const MembershipWitness& w) {
  // (j_r ... 1) o ... o (j_1 ... 1): the j_1 cycle is innermost, each later
  // cycle wraps around the product built so far.
  Permutation result = Permutation::identity(degree);
  for (int j : w.cycle_indices) {
    result = Permutation::descending_cycle(degree, j).compose(result);
  }
  return result;
}

int sign(const Permutation& sigma) {
  return sigma.preimage(1) % 2 == 1 ? 1 : -1;
}

std::vector<Permutation> enumerate_tm(int m) {
  if (m < 1) {
    throw std::invalid_argument("invalid degree " + std::to_string(m));
  }
  // A member is determined by the set of values placed in the descending
  // prefix: prefix = subset of {2..m} descending, then 1, then the rest
  // ascending.
  std::vector<Permutation> out;
  const std::uint64_t subsets = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> img;
    for (int v = m; v >= 2; --v) {
      if (mask & (std::uint64_t{1} << (v - 2))) {
        img.push_back(v);
      }
    }
    img.push_back(1);
    for (int v = 2; v <= m; ++v) {
      if (!(mask & (std::uint64_t{1} << (v - 2)))) {
        img.push_back(v);
      }
    }
    out.emplace_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_tm_t(int m, int t) {
  if (t < 1 || t > m) {
    throw std::invalid_argument("slice index " + std::to_string(t) +
                                " outside 1.." + std::to_string(m));
  }
  std::vector<Permutation> out;
  for (const Permutation& sigma : enumerate_tm(m)) {
    if (sigma(t) == 1) {
      out.push_back(sigma);
    }
  }
  return out;
}

std::uint64_t count_tm(int m) {
  if (m < 1) {
    throw std::invalid_argument("invalid degree " + std::to_string(m));
  }
  return std::uint64_t{1} << (m - 1);
}

std::uint64_t count_tm_t(int m, int t) {
  if (t < 1 || t > m) {
    throw std::invalid_argument("slice index " + std::to_string(t) +
                                " outside 1.." + std::to_string(m));
  }
  // binomial(m-1, t-1)
  std::uint64_t result = 1;
  for (int k = 1; k <= t - 1; ++k) {
    result = result * static_cast<std::uint64_t>(m - t + k) /
             static_cast<std::uint64_t>(k);
  }
  return result;
}

std::optional<std::vector<int>> tau_decomposition(const Permutation& sigma) {
  std::vector<int> indices;
  Permutation current = sigma;
  int previous = sigma.degree() + 1;
  while (!current.is_identity()) {
    const int d = current(1);
    if (d <= 1 || d >= previous) {
      return std::nullopt;
    }
    indices.push_back(d);
    current = current.compose(Permutation::reverse(sigma.degree(), d));
    previous = d;
  }
  std::sort(indices.begin(), indices.end());
  return indices;
}

Permutation recompose_tau(int m, const std::vector<int>& indices) {
  std::vector<int> sorted(indices);
  std::sort(sorted.begin(), sorted.end());
  for (int d : sorted) {
    if (d < 2 || d > m) {
      throw std::invalid_argument("tau index " + std::to_string(d) +
                                  " outside 2.." + std::to_string(m));
    }
  }
  // Smallest index outermost: tau_{d1} o tau_{d2} o ... for d1 < d2 < ...
  Permutation result = Permutation::identity(m);
  for (int d : sorted) {
    result = result.compose(Permutation::reverse(m, d));
  }
  return result;
}

std::vector<Permutation> fixed_block_subset(int m, int m1, int m2) {
  if (m1 < 0 || m2 < 0 || m1 + m2 > m) {
    throw std::invalid_argument("block sizes exceed the degree");
  }
  std::vector<Permutation> out;
  for (const Permutation& sigma : enumerate_tm(m)) {
    bool ok = true;
    for (int i = 1; i <= m2 && ok; ++i) {
      ok = sigma(m - i + 1) == m - i + 1;
    }
    for (int i = 1; i <= m1 && ok; ++i) {
      ok = sigma(i) == m - m2 - i + 1;
    }
    if (ok) {
      out.push_back(sigma);
    }
  }
  return out;
}

} // namespace lnc
