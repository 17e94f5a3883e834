#include "displace/cli/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "displace/checkers/checkers.hpp"
#include "displace/cli/json_io.hpp"
#include "displace/core/errors.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/linalg/gl.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/pl/pl_tower.hpp"
#include "displace/wreath/wreath.hpp"

namespace displace {

namespace {

constexpr std::int64_t kMaxPMax = 10'000;
constexpr std::size_t kMaxDegree = 12;
constexpr std::size_t kMaxTowerDepth = 6;

/// A JSON value together with its pointer, for error locations.
struct Node {
  const Json& value;
  std::string pointer;

  Node operator[](const std::string& key) const { return {value.at(key), pointer + "/" + key}; }
  Node operator[](std::size_t i) const { return {value.at(i), pointer + "/" + std::to_string(i)}; }
  bool has(const std::string& key) const { return value.is_object() && value.contains(key); }
};

/// Group built from a construction, with the elements and subgroups it names.
struct Context {
  GroupPtr group;
  std::shared_ptr<const HnnGroup> hnn;
  std::map<std::string, Element> elements;
  std::map<std::string, FgSubgroup> subgroups;
  std::map<std::string, MembershipOracle> oracles;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : positions_(json_value_positions(text)) {}

  [[noreturn]] void fail(const Node& node, const std::string& message) const {
    auto it = positions_.find(node.pointer);
    if (it == positions_.end()) throw ParseError(message);
    throw ParseError(message + " (at " + (node.pointer.empty() ? "/" : node.pointer) + ")", it->second.first,
                     it->second.second);
  }

  Node require(const Node& node, const std::string& key) const {
    if (!node.value.is_object()) fail(node, "expected an object");
    if (!node.has(key)) fail(node, "missing field \"" + key + "\"");
    return node[key];
  }

  std::string string(const Node& node) const {
    if (!node.value.is_string()) fail(node, "expected a string");
    return node.value.get<std::string>();
  }

  std::int64_t integer(const Node& node, std::int64_t lo, std::int64_t hi) const {
    if (!node.value.is_number_integer()) fail(node, "expected an integer");
    const auto v = node.value.get<std::int64_t>();
    if (v < lo || v > hi) {
      fail(node, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  std::vector<std::int64_t> integers(const Node& node, std::int64_t lo, std::int64_t hi) const {
    if (!node.value.is_array()) fail(node, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < node.value.size(); ++i) out.push_back(integer(node[i], lo, hi));
    return out;
  }

  /// Runs `body`, relocating library errors to `node`.
  template <class F>
  auto at(const Node& node, F&& body) const -> decltype(body()) {
    try {
      return body();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(node, e.what());
    }
  }

  std::shared_ptr<const PermGroup> perm_group(const Node& node) const {
    const std::string type = string(require(node, "type"));
    const auto degree = static_cast<std::size_t>(integer(require(node, "degree"), 1, kMaxDegree));
    if (type == "sym") return PermGroup::symmetric(degree);
    if (type != "perm") fail(node["type"], "expected a permutation group (\"sym\" or \"perm\")");
    const Node gens = require(node, "generators");
    if (!gens.value.is_array()) fail(gens, "expected an array of cycle strings");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.value.size(); ++i) {
      perms.push_back(at(gens[i], [&] { return Permutation::parse(degree, string(gens[i])); }));
    }
    const std::string label = node.has("label") ? string(node["label"]) : "H";
    return at(node, [&] { return PermGroup::generated(degree, std::move(perms), label); });
  }

  Context construction(const Node& node) const {
    const std::string type = string(require(node, "type"));
    Context ctx;
    if (type == "sym" || type == "perm") {
      auto g = perm_group(node);
      ctx.group = g;
      ctx.subgroups.emplace("G", g->as_subgroup());
    } else if (type == "wreath") {
      auto base = perm_group(require(node, "base"));
      const auto n = integer(require(node, "n"), 0, 64);
      auto w = at(node, [&] { return WreathGroup::make(base, n); });
      ctx.group = w;
      ctx.elements.emplace("shift", w->shift_generator());
      std::vector<Element> gens;
      for (const auto& g : base->generators()) gens.push_back(w->embed(g));
      ctx.subgroups.emplace("base", FgSubgroup("base", w, gens));
    } else if (type == "tower") {
      TowerSpec spec;
      spec.base = perm_group(require(node, "base"));
      spec.rule = at(node, [&] { return parse_tower_rule(node.has("rule") ? string(node["rule"]) : "explicit"); });
      if (node.has("prefix")) spec.prefix = integers(node["prefix"], 2, 64);
      if (node.has("constant")) spec.constant = integer(node["constant"], 2, 64);
      if (node.has("primes")) spec.primes = integers(node["primes"], 2, 1000);
      const auto depth = static_cast<std::size_t>(integer(require(node, "depth"), 0, kMaxTowerDepth));
      auto tower = std::make_shared<Tower>(at(node, [&] { return Tower(spec, depth); }));
      ctx.group = tower->level(depth);
      for (std::size_t i = 0; i <= depth; ++i) {
        const std::string name = "Gamma_" + std::to_string(i);
        ctx.subgroups.emplace(name, tower->embed(tower->level_generators(i), i, depth));
        ctx.oracles.emplace(name, tower->level_membership(i, depth));
        if (i >= 1) ctx.elements.emplace("shift_" + std::to_string(i), tower->embed(tower->shift_generator(i), i, depth));
      }
    } else if (type == "pl" || type == "pl-tower") {
      const auto depth =
          type == "pl" ? 1 : static_cast<std::size_t>(integer(require(node, "depth"), 1, kMaxPLTowerDepth));
      const PLTower tower = tower_gamma(depth);
      auto pl = PLGroup::instance();
      ctx.group = pl;
      ctx.elements.emplace("x0", pl->element(tower.base_generators[0]));
      ctx.elements.emplace("x1", pl->element(tower.base_generators[1]));
      ctx.elements.emplace("h", pl->element(unique_fixed_point_element()));
      for (std::size_t i = 2; i <= depth; ++i) {
        ctx.elements.emplace("t" + std::to_string(i), pl->element(tower.dissipator(i)));
      }
      for (std::size_t i = 1; i <= depth; ++i) ctx.subgroups.emplace("Gamma_" + std::to_string(i), tower.subgroup(i));
      ctx.subgroups.emplace("F", tower.subgroup(1));
      ctx.oracles.emplace("F", f_copy_membership());
      ctx.oracles.emplace("Gamma_1", f_copy_membership());
    } else if (type == "hnn-b" || type == "mitosis") {
      auto base = perm_group(require(node, "base"));
      auto g = type == "hnn-b" ? HnnGroup::make_binate(base->as_subgroup()) : HnnGroup::make_mitosis(base->as_subgroup());
      ctx.group = g;
      ctx.hnn = g;
      for (std::size_t i = 0; i < g->letters().size(); ++i) ctx.elements.emplace(g->letters()[i].name, g->letter(i));
      ctx.subgroups.emplace("Gamma-", g->gamma_minus());
    } else if (type == "gl") {
      ctx.group = GeneralLinearGroup::instance();
    } else {
      fail(node["type"], "unknown construction type \"" + type + "\"");
    }
    return ctx;
  }

  Element element(const Context& ctx, const Node& node) const {
    const Json& v = node.value;
    if (v.is_string()) {
      if (auto it = ctx.elements.find(v.get<std::string>()); it != ctx.elements.end()) return it->second;
      return at(node, [&] { return element_from_json(*ctx.group, v); });
    }
    if (v.is_array()) return at(node, [&] { return element_from_json(*ctx.group, v); });
    if (!v.is_object() || v.size() != 1) fail(node, "expected an element: name, literal or one-key expression");
    const std::string op = v.begin().key();
    const Node arg = node[op];
    const auto args = [&](std::size_t n) {
      if (!arg.value.is_array() || (n && arg.value.size() != n)) {
        fail(arg, "\"" + op + "\" expects " + (n ? std::to_string(n) + " arguments" : std::string("a list")));
      }
    };
    if (op == "literal") return at(arg, [&] { return element_from_json(*ctx.group, arg.value); });
    if (op == "inverse") return inv(element(ctx, arg));
    if (op == "product") {
      args(0);
      Element out = ctx.group->identity();
      for (std::size_t i = 0; i < arg.value.size(); ++i) out = out * element(ctx, arg[i]);
      return out;
    }
    if (op == "power") {
      args(2);
      return power(element(ctx, arg[0]), integer(arg[1], -1'000'000, 1'000'000));
    }
    if (op == "conj") {
      args(2);
      return conj(element(ctx, arg[0]), element(ctx, arg[1]));
    }
    if (op == "commutator") {
      args(2);
      return commutator(element(ctx, arg[0]), element(ctx, arg[1]));
    }
    if (op == "pair") {
      if (!ctx.hnn) fail(node, "\"pair\" needs an hnn-b or mitosis construction");
      args(2);
      const Group& gamma = *ctx.hnn->gamma().group();
      const Element a = at(arg[0], [&] { return element_from_json(gamma, arg[0].value); });
      const Element b = at(arg[1], [&] { return element_from_json(gamma, arg[1].value); });
      return ctx.hnn->from_base(ctx.hnn->pair(a, b));
    }
    fail(node, "unknown element operation \"" + op + "\"");
  }

  std::vector<Element> elements(const Context& ctx, const Node& node) const {
    if (!node.value.is_array()) fail(node, "expected an array of elements");
    std::vector<Element> out;
    for (std::size_t i = 0; i < node.value.size(); ++i) out.push_back(element(ctx, node[i]));
    return out;
  }

  FgSubgroup subgroup(const Context& ctx, const Node& node) const {
    if (node.value.is_string()) {
      auto it = ctx.subgroups.find(node.value.get<std::string>());
      if (it == ctx.subgroups.end()) fail(node, "unknown subgroup \"" + node.value.get<std::string>() + "\"");
      return it->second;
    }
    const std::string label = node.has("label") ? string(node["label"]) : "H";
    return FgSubgroup(label, ctx.group, elements(ctx, require(node, "generators")));
  }

  std::optional<MembershipOracle> oracle(const Context& ctx, const Node& node, const FgSubgroup& lambda) const {
    if (node.value.is_string()) {
      if (auto it = ctx.oracles.find(node.value.get<std::string>()); it != ctx.oracles.end()) return it->second;
    }
    if (ctx.group->order()) return finite_membership(lambda);
    return std::nullopt;
  }

  CheckSpec check(const Context& ctx, const Node& node, std::optional<std::int64_t> default_p_max) const {
    CheckSpec spec;
    spec.id = string(require(node, "id"));
    spec.description = node.has("description") ? string(node["description"]) : spec.id;
    spec.expected = at(require(node, "expect"), [&] { return parse_verdict(string(node["expect"])); });
    const Node prop = require(node, "property");
    const Property property = at(prop, [&] { return parse_property(string(prop)); });
    const Node subject_node = require(node, "subject");
    FgSubgroup subject = subgroup(ctx, subject_node);
    const Node w = require(node, "witness");
    const auto p_max = [&]() -> std::optional<std::int64_t> {
      if (w.has("p_max")) return integer(w["p_max"], 1, kMaxPMax);
      return default_p_max;
    }();
    const auto t = [&] { return element(ctx, require(w, "t")); };

    // The payload builder takes the run-time p_max for fields the file leaves open.
    std::function<WitnessPayload(std::int64_t)> payload;
    switch (property) {
      case Property::CC: {
        auto x = t();
        payload = [x](std::int64_t) { return CcWitness{x}; };
        break;
      }
      case Property::CZNC: {
        auto x = t();
        auto n = integer(require(w, "n"), 2, 1'000'000);
        payload = [x, n](std::int64_t) { return CznWitness{x, n}; };
        break;
      }
      case Property::CZC: {
        auto x = t();
        payload = [x, p_max](std::int64_t p) { return CzWitness{x, p_max.value_or(p)}; };
        break;
      }
      case Property::CCC: {
        auto x = t();
        const Node n_node = require(w, "n");
        std::optional<std::int64_t> n;
        if (n_node.value.is_string()) {
          if (n_node.value != "inf") fail(n_node, "n must be an integer >= 2 or \"inf\"");
        } else {
          n = integer(n_node, 2, 1'000'000);
        }
        payload = [x, n, p_max](std::int64_t p) { return CccWitness{x, n, p_max.value_or(p)}; };
        break;
      }
      case Property::M: {
        const Node lambda_node = require(w, "lambda");
        FgSubgroup lambda = subgroup(ctx, lambda_node);
        auto orc = oracle(ctx, lambda_node, lambda);
        auto x = t();
        auto subset = elements(ctx, require(w, "subset"));
        Element s = w.has("s") ? element(ctx, w["s"]) : ctx.group->identity();
        payload = [=](std::int64_t p) { return MWitness{lambda, x, subset, s, p_max.value_or(p), orc}; };
        break;
      }
      case Property::Binate: {
        GeneratorMap f{elements(ctx, require(w, "f"))};
        if (f.images.size() != subject.generators().size()) {
          fail(w["f"], "f lists " + std::to_string(f.images.size()) + " images for " +
                           std::to_string(subject.generators().size()) + " generators");
        }
        auto x = t();
        payload = [f, x](std::int64_t) { return BinateWitness{f, x, {}}; };
        break;
      }
      case Property::Mitotic: {
        auto t1 = element(ctx, require(w, "t1"));
        auto t2 = element(ctx, require(w, "t2"));
        payload = [t1, t2](std::int64_t) { return MitoticWitness{t1, t2}; };
        break;
      }
      case Property::Dissipator: {
        const Node region_node = require(w, "region");
        if (!region_node.value.is_array()) fail(region_node, "region must be an array of [lo, hi] pairs");
        std::vector<OpenInterval> parts;
        for (std::size_t i = 0; i < region_node.value.size(); ++i) {
          const Node part = region_node[i];
          if (!part.value.is_array() || part.value.size() != 2) fail(part, "expected [lo, hi]");
          parts.push_back(at(part, [&] {
            return OpenInterval{rational_from_json(part.value[0]), rational_from_json(part.value[1])};
          }));
        }
        IntervalSet region = at(region_node, [&] { return IntervalSet(parts); });
        auto x = t();
        payload = [region, x, p_max](std::int64_t p) { return DissipatorWitness{region, x, p_max.value_or(p)}; };
        break;
      }
    }
    spec.run = [subject, payload](const RunOptions& options) {
      return verify(WitnessCertificate{subject, payload(options.p_max)});
    };
    return spec;
  }

  Scenario scenario(const Json& root) const {
    const Node top{root, ""};
    if (!root.is_object()) fail(top, "scenario must be an object");
    Scenario out;
    out.suite.name = string(require(top, "name"));
    out.suite.description = top.has("description") ? string(top["description"]) : out.suite.name;
    if (top.has("seed")) out.seed = static_cast<std::uint64_t>(integer(top["seed"], 0, INT64_MAX));
    std::optional<std::int64_t> p_max;
    if (top.has("bounds")) {
      const Node bounds = top["bounds"];
      if (bounds.has("p_max")) p_max = integer(bounds["p_max"], 1, kMaxPMax);
    }
    Context ctx = construction(require(top, "construction"));
    if (top.has("elements")) {
      const Node els = top["elements"];
      if (!els.value.is_object()) fail(els, "elements must be an object of named expressions");
      for (const auto& [name, _] : els.value.items()) ctx.elements.insert_or_assign(name, element(ctx, els[name]));
    }
    if (top.has("subgroups")) {
      const Node subs = top["subgroups"];
      if (!subs.value.is_object()) fail(subs, "subgroups must be an object");
      for (const auto& [name, _] : subs.value.items()) {
        FgSubgroup h = subgroup(ctx, subs[name]);
        ctx.subgroups.insert_or_assign(name, FgSubgroup(name, h.group(), h.generators()));
      }
    }
    const Node checks = require(top, "checks");
    if (!checks.value.is_array() || checks.value.empty()) fail(checks, "checks must be a nonempty array");
    for (std::size_t i = 0; i < checks.value.size(); ++i) {
      CheckSpec c = check(ctx, checks[i], p_max);
      for (const auto& existing : out.suite.checks) {
        if (existing.id == c.id) fail(checks[i]["id"], "duplicate check id \"" + c.id + "\"");
      }
      out.suite.checks.push_back(std::move(c));
    }
    return out;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions_;
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
  }
  return Parser(text).scenario(root);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open scenario file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace displace
