#include "displace/hnn/free_group.hpp"

#include <cctype>

namespace displace {

namespace {

std::vector<int> freely_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

FreeGroup::FreeGroup(std::size_t rank) : Group("F" + std::to_string(rank)), rank_(rank) {
  if (rank > 26) throw InvalidArgument("free group rank above 26 is not supported");
}

std::shared_ptr<const FreeGroup> FreeGroup::make(std::size_t rank) { return std::make_shared<const FreeGroup>(rank); }

Element FreeGroup::generator(std::size_t i) const {
  if (i >= rank_) throw InvalidArgument("free generator index out of range");
  return wrap(FreeWord{{static_cast<int>(i) + 1}});
}

Element FreeGroup::word(std::vector<int> letters) const {
  for (int x : letters) {
    if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > rank_) {
      throw InvalidArgument("free letter out of range");
    }
  }
  return wrap(FreeWord{freely_reduce(letters)});
}

Element FreeGroup::parse(std::string_view text) const {
  std::vector<int> letters;
  for (char c : text) {
    if (c == '1' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c >= 'a' && c <= 'z') {
      letters.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back(-(c - 'A' + 1));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in free word");
    }
  }
  return word(std::move(letters));
}

Element FreeGroup::identity() const { return wrap(FreeWord{}); }

Element FreeGroup::multiply(const Element& a, const Element& b) const {
  std::vector<int> letters = a.as<FreeWord>().letters;
  const auto& rhs = b.as<FreeWord>().letters;
  letters.insert(letters.end(), rhs.begin(), rhs.end());
  return wrap(FreeWord{freely_reduce(letters)});
}

Element FreeGroup::invert(const Element& a) const {
  const auto& w = a.as<FreeWord>().letters;
  std::vector<int> letters(w.rbegin(), w.rend());
  for (int& x : letters) x = -x;
  return wrap(FreeWord{std::move(letters)});
}

std::string FreeGroup::format(const Element& a) const {
  const auto& w = a.as<FreeWord>().letters;
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) out += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
  return out;
}

}  // namespace displace
