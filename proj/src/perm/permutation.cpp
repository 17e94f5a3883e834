#include "displace/perm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "displace/core/errors.hpp"

namespace displace {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidArgument("image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree) {
        throw InvalidArgument("cycle point out of range 1.." + std::to_string(degree));
      }
      if (used[from - 1]) {
        throw InvalidArgument("point " + std::to_string(from) + " repeated in cycle notation");
      }
      used[from - 1] = true;
      result.images_[from - 1] = to - 1;
    }
  }
  return result;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) {
    throw ParseError("empty permutation literal");
  }
  while (i < text.size()) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') {
      throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle in permutation '" + std::string(text) + "'");
      }
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 1'000'000) throw ParseError("permutation point too large");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw InvalidArgument("composing permutations of different degrees");
  }
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    result.images_[x] = images_[rhs.images_[x]];
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    result.images_[images_[x]] = static_cast<Point>(x);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::extended(std::size_t new_degree) const {
  if (new_degree < degree()) {
    throw InvalidArgument("cannot shrink a permutation");
  }
  Permutation result = identity(new_degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace displace
