#include "lnc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lnc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = degree();
  if (m < 1) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int v : images_) {
    if (v < 1 || v > m) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(m));
    }
    if (seen[static_cast<size_t>(v) - 1]) {
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("invalid degree " + std::to_string(degree));
  }
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::reverse(int degree, int i) {
  if (i < 1 || i > degree) {
    throw std::invalid_argument("reverse index " + std::to_string(i) +
                                " outside 1.." + std::to_string(degree));
  }
  std::vector<int> img(static_cast<size_t>(degree));
  for (int k = 1; k <= degree; ++k) {
    img[static_cast<size_t>(k) - 1] = k <= i ? i - k + 1 : k;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::descending_cycle(int degree, int j) {
  if (j < 1 || j > degree) {
    throw std::invalid_argument("cycle index " + std::to_string(j) +
                                " outside 1.." + std::to_string(degree));
  }
  std::vector<int> img(static_cast<size_t>(degree));
  img[0] = j;
  for (int k = 2; k <= degree; ++k) {
    img[static_cast<size_t>(k) - 1] = k <= j ? k - 1 : k;
  }
  return Permutation(std::move(img));
}

int Permutation::preimage(int v) const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) == v) {
      return i;
    }
  }
  throw std::invalid_argument("value " + std::to_string(v) + " out of range");
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (degree() != inner.degree()) {
    throw std::invalid_argument("degree mismatch in composition");
  }
  std::vector<int> img(images_.size());
  for (int i = 1; i <= degree(); ++i) {
    img[static_cast<size_t>(i) - 1] = (*this)(inner(i));
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= degree(); ++i) {
    img[static_cast<size_t>((*this)(i)) - 1] = i;
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::embed(int degree) const {
  if (degree < this->degree()) {
    throw std::invalid_argument("cannot embed into a smaller degree");
  }
  std::vector<int> img(images_);
  for (int k = this->degree() + 1; k <= degree; ++k) {
    img.push_back(k);
  }
  return Permutation(std::move(img));
}

std::string Permutation::one_line() const {
  std::string out;
  for (int i = 1; i <= degree(); ++i) {
    if (i > 1) {
      out += ',';
    }
    out += std::to_string((*this)(i));
  }
  return out;
}

std::string Permutation::two_row() const {
  std::ostringstream top, bottom;
  for (int i = 1; i <= degree(); ++i) {
    if (i > 1) {
      top << ' ';
      bottom << ' ';
    }
    top << i;
    bottom << (*this)(i);
  }
  return "( " + top.str() + " )\n( " + bottom.str() + " )";
}

Permutation Permutation::parse_one_line(std::string_view text) {
  std::vector<int> img;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed token '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) {
      ++pos;
    }
    if (pos != token.size()) {
      throw std::invalid_argument("malformed token '" + token + "'");
    }
    img.push_back(value);
  }
  if (img.empty()) {
    throw std::invalid_argument("empty permutation text");
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> img(static_cast<size_t>(m));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

} // namespace lnc
