#include "displace/cli/json_io.hpp"

#include <cctype>
#include <cstring>

#include "displace/hnn/free_group.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/hnn/product_group.hpp"
#include "displace/linalg/gl.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/wreath/wreath.hpp"

namespace displace {

Json element_to_json(const Element& x) {
  return std::visit(
      [&](const auto& payload) -> Json {
        using P = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<P, Permutation> || std::is_same_v<P, FreeWord>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<P, RationalMatrix>) {
          Json rows = Json::array();
          for (std::size_t r = 0; r < payload.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < payload.cols(); ++c) row.push_back(to_string(payload.at(r, c)));
            rows.push_back(std::move(row));
          }
          return rows;
        } else if constexpr (std::is_same_v<P, WreathElement>) {
          Json lamps = Json::array();
          for (const auto& lamp : payload.lamps) {
            lamps.push_back(Json{{"index", lamp.index}, {"value", element_to_json(lamp.value)}});
          }
          return Json{{"shift", payload.shift}, {"lamps", std::move(lamps)}};
        } else if constexpr (std::is_same_v<P, PLHomeo>) {
          Json points = Json::array();
          for (const auto& b : payload.breakpoints()) points.push_back(Json::array({to_string(b.x), to_string(b.y)}));
          return points;
        } else if constexpr (std::is_same_v<P, BrittonWord>) {
          const auto& g = static_cast<const HnnGroup&>(x.group());
          Json tokens = Json::array();
          for (std::size_t i = 0; i < payload.bases.size(); ++i) {
            if (!payload.bases[i].is_identity() || payload.letters.empty()) {
              tokens.push_back(element_to_json(payload.bases[i]));
            }
            if (i < payload.letters.size()) tokens.push_back(g.letter_name(payload.letters[i]));
          }
          return tokens;
        } else {
          Json parts = Json::array();
          for (const auto& c : payload.components) parts.push_back(element_to_json(c));
          return parts;
        }
      },
      x.payload());
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw InvalidArgument("expected a rational as \"n/d\" or an integer, got " + value.dump());
}

namespace {

const Json& expect_array(const Json& value, const char* what) {
  if (!value.is_array()) throw InvalidArgument(std::string("expected an array for ") + what + ", got " + value.dump());
  return value;
}

}  // namespace

Element element_from_json(const Group& group, const Json& value) {
  if (const auto* g = dynamic_cast<const PermGroup*>(&group)) {
    if (!value.is_string()) throw InvalidArgument("permutation must be a cycle string such as \"(1 2 3)\"");
    return g->parse(value.get<std::string>());
  }
  if (const auto* g = dynamic_cast<const FreeGroup*>(&group)) {
    if (!value.is_string()) throw InvalidArgument("free group word must be a string such as \"abA\"");
    return g->parse(value.get<std::string>());
  }
  if (const auto* g = dynamic_cast<const GeneralLinearGroup*>(&group)) {
    std::vector<RationalVector> rows;
    for (const auto& row : expect_array(value, "matrix rows")) {
      RationalVector r;
      for (const auto& entry : expect_array(row, "matrix row")) r.push_back(rational_from_json(entry));
      rows.push_back(std::move(r));
    }
    return rows.empty() ? g->identity() : g->element(RationalMatrix::from_rows(rows));
  }
  if (const auto* g = dynamic_cast<const PLGroup*>(&group)) {
    std::vector<Breakpoint> points;
    for (const auto& p : expect_array(value, "breakpoints")) {
      if (!p.is_array() || p.size() != 2) throw InvalidArgument("breakpoint must be a pair [x, y]");
      points.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return g->element(PLHomeo::from_breakpoints(std::move(points)));
  }
  if (const auto* g = dynamic_cast<const WreathGroup*>(&group)) {
    if (!value.is_object()) throw InvalidArgument("wreath element must be an object {shift, lamps}");
    std::vector<Lamp> lamps;
    for (const auto& lamp : value.value("lamps", Json::array())) {
      lamps.push_back(Lamp{lamp.at("index").get<std::int64_t>(), element_from_json(*g->base(), lamp.at("value"))});
    }
    return g->element(std::move(lamps), value.value("shift", std::int64_t{0}));
  }
  if (const auto* g = dynamic_cast<const HnnGroup*>(&group)) {
    BrittonWord w;
    w.bases.push_back(g->base()->identity());
    for (const auto& token : expect_array(value, "HNN word")) {
      if (token.is_string()) {
        std::string name = token.get<std::string>();
        int sign = 1;
        if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
          name.resize(name.size() - 3);
          sign = -1;
        }
        w.letters.push_back(StableLetter{static_cast<std::uint8_t>(g->letter_index(name)), static_cast<std::int8_t>(sign)});
        w.bases.push_back(g->base()->identity());
      } else {
        w.bases.back() = mul(w.bases.back(), element_from_json(*g->base(), token));
      }
    }
    return g->word(w);
  }
  if (const auto* g = dynamic_cast<const ProductGroup*>(&group)) {
    const auto& parts = expect_array(value, "product components");
    if (parts.size() != g->factors().size()) throw InvalidArgument("wrong number of product components");
    std::vector<Element> components;
    for (std::size_t i = 0; i < parts.size(); ++i) components.push_back(element_from_json(*g->factors()[i], parts[i]));
    return g->element(std::move(components));
  }
  throw InvalidArgument("no JSON form for elements of " + group.descriptor());
}

Json report_to_json(const PropertyReport& report) {
  Json out;
  out["property"] = report.property;
  out["subject"] = report.subject;
  out["verdict"] = to_string(report.verdict);
  if (report.failed()) out["failed_condition"] = report.failed_condition;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = Json{{"kind", c.kind == Counterexample::Kind::Commutator ? "commutator" : "equality"},
                                 {"first", element_to_json(c.first)},
                                 {"second", element_to_json(c.second)}};
  }
  out["checks"] = report.checks;
  out["notes"] = report.notes;
  Json facts = Json::object();
  for (const auto& [key, value] : report.facts) facts[key] = value;
  out["facts"] = std::move(facts);
  return out;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

namespace {

class PositionScanner {
 public:
  explicit PositionScanner(const std::string& text) : text_(text) {}

  std::map<std::string, std::pair<std::size_t, std::size_t>> run() {
    skip_space();
    value("");
    return std::move(positions_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string string_token() {
    std::string out;
    advance();  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        advance();
        out += text_[pos_] == '/' ? '/' : text_[pos_];
      } else {
        out += text_[pos_];
      }
      advance();
    }
    advance();  // closing quote
    return out;
  }

  static std::string escape_pointer(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') {
        out += "~0";
      } else if (c == '/') {
        out += "~1";
      } else {
        out += c;
      }
    }
    return out;
  }

  void value(const std::string& pointer) {
    positions_[pointer] = {line_, column_};
    const char c = text_[pos_];
    if (c == '{') {
      advance();
      skip_space();
      while (text_[pos_] != '}') {
        const std::string key = string_token();
        skip_space();
        advance();  // ':'
        skip_space();
        value(pointer + "/" + escape_pointer(key));
        skip_space();
        if (text_[pos_] == ',') {
          advance();
          skip_space();
        }
      }
      advance();
    } else if (c == '[') {
      advance();
      skip_space();
      for (std::size_t i = 0; text_[pos_] != ']'; ++i) {
        value(pointer + "/" + std::to_string(i));
        skip_space();
        if (text_[pos_] == ',') {
          advance();
          skip_space();
        }
      }
      advance();
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && !std::strchr(",]} \t\r\n", text_[pos_])) advance();
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions_;
};

}  // namespace

std::map<std::string, std::pair<std::size_t, std::size_t>> json_value_positions(const std::string& text) {
  return PositionScanner(text).run();
}

}  // namespace displace
