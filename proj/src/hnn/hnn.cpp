#include "displace/hnn/hnn.hpp"

#include <mutex>

#include "displace/checkers/checkers.hpp"
#include "displace/core/parallel.hpp"

namespace displace {

std::string to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Plus: return "Gamma+";
    case SubgroupKind::Minus: return "Gamma-";
    case SubgroupKind::Diagonal: return "Delta";
  }
  return "?";
}

namespace {

// Cached enumeration of Γ for the transversals, keyed by the group object.
const std::vector<Element>& gamma_elements(const Group& gamma) {
  static std::mutex mutex;
  static std::vector<std::pair<const Group*, std::vector<Element>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  for (const auto& [group, elements] : cache) {
    if (group == &gamma) return elements;
  }
  cache.emplace_back(&gamma, enumerate_group(gamma));
  return cache.back().second;
}

}  // namespace

HnnGroup::HnnGroup(std::string prefix, FgSubgroup gamma, std::vector<StableLetterSpec> letters)
    : Group(prefix + "(" + gamma.group()->descriptor() + ")"),
      gamma_(std::move(gamma)),
      base_(ProductGroup::make({gamma_.group(), gamma_.group()})),
      letters_(std::move(letters)) {}

std::shared_ptr<const HnnGroup> HnnGroup::make_binate(const FgSubgroup& gamma) {
  return std::make_shared<const HnnGroup>(
      "b", gamma, std::vector<StableLetterSpec>{{"d", SubgroupKind::Plus, SubgroupKind::Diagonal}});
}

std::shared_ptr<const HnnGroup> HnnGroup::make_mitosis(const FgSubgroup& gamma) {
  return std::make_shared<const HnnGroup>(
      "m", gamma,
      std::vector<StableLetterSpec>{{"d", SubgroupKind::Plus, SubgroupKind::Diagonal},
                                    {"s", SubgroupKind::Minus, SubgroupKind::Plus}});
}

Element HnnGroup::pair(const Element& a, const Element& b) const { return base_->element({a, b}); }
Element HnnGroup::minus(const Element& g) const { return pair(g, gamma_.group()->identity()); }
Element HnnGroup::plus(const Element& g) const { return pair(gamma_.group()->identity(), g); }
Element HnnGroup::diagonal(const Element& g) const { return pair(g, g); }

Element HnnGroup::from_base(const Element& b) const {
  if (!b.group().same_as(*base_)) throw ContextMismatch("not an element of " + base_->descriptor());
  return wrap(BrittonWord{{b}, {}});
}

Element HnnGroup::letter(std::size_t index, int sign) const {
  if (index >= letters_.size()) throw InvalidArgument("no stable letter " + std::to_string(index));
  if (sign != 1 && sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  const Element one = base_->identity();
  return wrap(BrittonWord{{one, one}, {StableLetter{static_cast<std::uint8_t>(index), static_cast<std::int8_t>(sign)}}});
}

std::size_t HnnGroup::letter_index(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].name == name) return i;
  }
  throw InvalidArgument("no stable letter named '" + name + "' in " + descriptor());
}

FgSubgroup HnnGroup::gamma_minus() const {
  std::vector<Element> gens;
  for (const auto& g : gamma_.generators()) gens.push_back(from_base(minus(g)));
  return FgSubgroup(gamma_.label() + "-", shared_from_this(), std::move(gens));
}

bool HnnGroup::in_subgroup(SubgroupKind kind, const Element& b) const {
  const Element& x = base_->component(b, 0);
  const Element& y = base_->component(b, 1);
  switch (kind) {
    case SubgroupKind::Plus: return x.is_identity();
    case SubgroupKind::Minus: return y.is_identity();
    case SubgroupKind::Diagonal: return x == y;
  }
  return false;
}

std::pair<Element, Element> HnnGroup::split(SubgroupKind kind, const Element& b) const {
  const Element& x = base_->component(b, 0);
  const Element& y = base_->component(b, 1);
  switch (kind) {
    case SubgroupKind::Plus: return {minus(x), plus(y)};
    case SubgroupKind::Minus: return {plus(y), minus(x)};
    case SubgroupKind::Diagonal: return {minus(mul(x, inv(y))), diagonal(y)};
  }
  throw InvalidArgument("unknown subgroup kind");
}

SubgroupKind HnnGroup::passing_subgroup(const StableLetter& sigma) const {
  const auto& spec = letters_.at(sigma.letter);
  return sigma.sign > 0 ? spec.codomain : spec.domain;
}

SubgroupKind HnnGroup::pinch_subgroup(const StableLetter& outer) const {
  const auto& spec = letters_.at(outer.letter);
  return outer.sign > 0 ? spec.domain : spec.codomain;
}

Element HnnGroup::pinch_image(const StableLetter& outer, const Element& b) const {
  const auto& spec = letters_.at(outer.letter);
  const SubgroupKind from = outer.sign > 0 ? spec.domain : spec.codomain;
  const SubgroupKind to = outer.sign > 0 ? spec.codomain : spec.domain;
  const Element& g = base_->component(b, from == SubgroupKind::Plus ? 1 : 0);
  switch (to) {
    case SubgroupKind::Plus: return plus(g);
    case SubgroupKind::Minus: return minus(g);
    case SubgroupKind::Diagonal: return diagonal(g);
  }
  throw InvalidArgument("unknown subgroup kind");
}

void HnnGroup::validate(const BrittonWord& w) const {
  if (w.bases.size() != w.letters.size() + 1) throw InvalidArgument("malformed word: base and letter counts differ");
  for (const auto& b : w.bases) {
    if (!b.group().same_as(*base_)) throw ContextMismatch("base letter not in " + base_->descriptor());
  }
  for (const auto& sigma : w.letters) {
    if (sigma.letter >= letters_.size() || (sigma.sign != 1 && sigma.sign != -1)) {
      throw InvalidArgument("malformed word: bad stable letter");
    }
  }
}

std::vector<std::size_t> HnnGroup::pinch_sites(const BrittonWord& w) const {
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (w.letters[i + 1] == w.letters[i].inverse() && in_subgroup(pinch_subgroup(w.letters[i]), w.bases[i + 1])) {
      sites.push_back(i);
    }
  }
  return sites;
}

BrittonWord HnnGroup::apply_pinch(const BrittonWord& w, std::size_t site) const {
  if (site + 1 >= w.letters.size() || w.letters[site + 1] != w.letters[site].inverse() ||
      !in_subgroup(pinch_subgroup(w.letters[site]), w.bases[site + 1])) {
    throw InvalidArgument("no pinch at position " + std::to_string(site));
  }
  BrittonWord out;
  out.bases.assign(w.bases.begin(), w.bases.begin() + static_cast<std::ptrdiff_t>(site));
  out.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(site));
  out.bases.push_back(mul(mul(w.bases[site], pinch_image(w.letters[site], w.bases[site + 1])), w.bases[site + 2]));
  out.bases.insert(out.bases.end(), w.bases.begin() + static_cast<std::ptrdiff_t>(site + 3), w.bases.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(site + 2), w.letters.end());
  return out;
}

BrittonWord HnnGroup::britton_reduce(const BrittonWord& w) const {
  validate(w);
  BrittonWord out;
  out.bases.push_back(w.bases.front());
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const StableLetter& sigma = w.letters[i];
    const Element& next = w.bases[i + 1];
    if (!out.letters.empty() && out.letters.back() == sigma.inverse() &&
        in_subgroup(pinch_subgroup(out.letters.back()), out.bases.back())) {
      Element image = pinch_image(out.letters.back(), out.bases.back());
      out.letters.pop_back();
      out.bases.pop_back();
      out.bases.back() = mul(mul(out.bases.back(), image), next);
    } else {
      out.letters.push_back(sigma);
      out.bases.push_back(next);
    }
  }
  return out;
}

BrittonWord HnnGroup::normal_form(const BrittonWord& reduced) const {
  BrittonWord out = reduced;
  for (std::size_t i = 0; i < out.letters.size(); ++i) {
    const StableLetter& sigma = out.letters[i];
    auto [rep, sub] = split(passing_subgroup(sigma), out.bases[i]);
    out.bases[i] = std::move(rep);
    out.bases[i + 1] = mul(pinch_image(sigma.inverse(), sub), out.bases[i + 1]);
  }
  return out;
}

Element HnnGroup::word(const BrittonWord& w) const { return wrap(normal_form(britton_reduce(w))); }

std::vector<Element> HnnGroup::transversal(SubgroupKind kind) const {
  std::vector<Element> reps;
  for (const auto& g : gamma_elements(*gamma_.group())) {
    reps.push_back(kind == SubgroupKind::Minus ? plus(g) : minus(g));
  }
  return reps;
}

std::string HnnGroup::letter_name(const StableLetter& sigma) const {
  return letters_.at(sigma.letter).name + (sigma.sign < 0 ? "^-1" : "");
}

Element HnnGroup::identity() const { return wrap(BrittonWord{{base_->identity()}, {}}); }

Element HnnGroup::multiply(const Element& a, const Element& b) const {
  const auto& u = a.as<BrittonWord>();
  const auto& v = b.as<BrittonWord>();
  BrittonWord joined;
  joined.bases.assign(u.bases.begin(), u.bases.end() - 1);
  joined.bases.push_back(mul(u.bases.back(), v.bases.front()));
  joined.bases.insert(joined.bases.end(), v.bases.begin() + 1, v.bases.end());
  joined.letters = u.letters;
  joined.letters.insert(joined.letters.end(), v.letters.begin(), v.letters.end());
  return word(joined);
}

Element HnnGroup::invert(const Element& a) const {
  const auto& u = a.as<BrittonWord>();
  BrittonWord out;
  for (auto it = u.bases.rbegin(); it != u.bases.rend(); ++it) out.bases.push_back(inv(*it));
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return wrap(normal_form(out));
}

std::string HnnGroup::format(const Element& a) const {
  const auto& u = a.as<BrittonWord>();
  std::string out;
  auto append = [&out](const std::string& token) { out += (out.empty() ? "" : " ") + token; };
  for (std::size_t i = 0; i < u.bases.size(); ++i) {
    if (!u.bases[i].is_identity()) append(u.bases[i].to_string());
    if (i < u.letters.size()) append(letter_name(u.letters[i]));
  }
  return out.empty() ? "1" : out;
}

BrittonWord britton_reduce_randomized(const HnnGroup& g, const BrittonWord& w, Rng& rng) {
  BrittonWord current = w;
  for (auto sites = g.pinch_sites(current); !sites.empty(); sites = g.pinch_sites(current)) {
    current = g.apply_pinch(current, sites[uniform_index(rng, sites.size())]);
  }
  return current;
}

bool is_identity(const HnnGroup& g, const BrittonWord& w) {
  BrittonWord reduced = g.britton_reduce(w);
  return reduced.letters.empty() && reduced.bases.front().is_identity();
}

Element vertex_element(const HnnGroup& g, const Vertex& v) { return g.word(v); }

namespace {

const HnnGroup& hnn_of(const Element& x) {
  const auto* g = dynamic_cast<const HnnGroup*>(&x.group());
  if (!g) throw RealizationMismatch(x.group().descriptor() + " is not an HNN extension");
  return *g;
}

struct BallEntry {
  Vertex vertex;
  std::size_t parent;
};

std::vector<BallEntry> ball_with_parents(const HnnGroup& g, std::size_t radius, std::uint64_t budget) {
  std::vector<BallEntry> ball;
  ball.push_back({BrittonWord{{g.base()->identity()}, {}}, 0});
  std::size_t level_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t level_end = ball.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto& child : children(g, ball[i].vertex)) {
        if (ball.size() >= budget) {
          throw BudgetExceeded("Bass-Serre ball exceeds " + std::to_string(budget) + " vertices");
        }
        ball.push_back({std::move(child), i});
      }
    }
    level_begin = level_end;
  }
  return ball;
}

}  // namespace

bool fixes_vertex(const Element& x, const Vertex& v) {
  const Element w = vertex_element(hnn_of(x), v);
  return mul(mul(inv(w), x), w).as<BrittonWord>().letters.empty();
}

std::vector<Vertex> children(const HnnGroup& g, const Vertex& v) {
  std::vector<Vertex> out;
  for (std::size_t index = 0; index < g.letters().size(); ++index) {
    for (int sign : {1, -1}) {
      const StableLetter sigma{static_cast<std::uint8_t>(index), static_cast<std::int8_t>(sign)};
      const bool backtrack_possible = !v.letters.empty() && v.letters.back() == sigma.inverse();
      for (const auto& c : g.transversal(g.passing_subgroup(sigma))) {
        if (backtrack_possible && c.is_identity()) continue;
        Vertex child = v;
        child.bases.back() = c;
        child.letters.push_back(sigma);
        child.bases.push_back(g.base()->identity());
        out.push_back(std::move(child));
      }
    }
  }
  return out;
}

std::vector<Vertex> bass_serre_ball(const HnnGroup& g, std::size_t radius, std::uint64_t budget) {
  std::vector<Vertex> out;
  for (auto& entry : ball_with_parents(g, radius, budget)) out.push_back(std::move(entry.vertex));
  return out;
}

std::vector<Vertex> bass_serre_fixed_vertices(const Element& x, std::size_t radius) {
  if (radius > kMaxTreeRadius) {
    throw BudgetExceeded("tree radius " + std::to_string(radius) + " exceeds " + std::to_string(kMaxTreeRadius));
  }
  std::vector<Vertex> fixed;
  for (auto& v : bass_serre_ball(hnn_of(x), radius)) {
    if (fixes_vertex(x, v)) fixed.push_back(std::move(v));
  }
  return fixed;
}

std::size_t fixed_edge_count(const FgSubgroup& h, std::size_t radius) {
  if (radius > kMaxTreeRadius) {
    throw BudgetExceeded("tree radius " + std::to_string(radius) + " exceeds " + std::to_string(kMaxTreeRadius));
  }
  const auto* g = dynamic_cast<const HnnGroup*>(h.group().get());
  if (!g) throw RealizationMismatch(h.group()->descriptor() + " is not an HNN extension");
  const auto ball = ball_with_parents(*g, radius, 1'000'000);
  std::vector<bool> fixed(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    fixed[i] = true;
    for (const auto& x : h.generators()) {
      if (!fixes_vertex(x, ball[i].vertex)) {
        fixed[i] = false;
        break;
      }
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 1; i < ball.size(); ++i) count += (fixed[i] && fixed[ball[i].parent]) ? 1 : 0;
  return count;
}

std::string to_string(const HnnGroup& g, const Vertex& v) {
  return v.letters.empty() ? "K" : g.word(v).to_string() + " K";
}

std::uint64_t cc_search_space(const HnnGroup& b, std::size_t max_letters) {
  const std::uint64_t k = *b.base()->order();
  const std::uint64_t step = 2 * b.letters().size() * k;
  std::uint64_t total = 0;
  std::uint64_t block = k;
  for (std::size_t m = 0; m <= max_letters; ++m) {
    total += block;
    block *= step;
  }
  return total;
}

std::optional<Element> cc_witness_search_b1(const FgSubgroup& gamma, std::size_t max_letters, unsigned jobs,
                                            std::uint64_t budget) {
  auto b = HnnGroup::make_binate(gamma);
  const auto k_order = b->base()->order();
  if (!k_order) throw InvalidArgument("cc_witness_search_b1 needs a finite group");
  const std::uint64_t total = cc_search_space(*b, max_letters);
  if (total > budget) {
    throw BudgetExceeded("search space " + std::to_string(total) + " exceeds budget " + std::to_string(budget));
  }
  const std::uint64_t k = *k_order;
  const std::uint64_t letter_choices = 2 * b->letters().size();
  const std::vector<Element> base = enumerate_group(*b->base());
  const FgSubgroup h = b->gamma_minus();

  auto decode = [&](std::uint64_t index) {
    std::size_t m = 0;
    std::uint64_t block = k;
    while (index >= block) {
      index -= block;
      block *= letter_choices * k;
      ++m;
    }
    // Digits, least significant last: c_0, (σ_1, c_1), ..., (σ_m, c_m).
    BrittonWord w;
    w.bases.resize(m + 1, b->base()->identity());
    w.letters.resize(m);
    for (std::size_t j = m; j >= 1; --j) {
      w.bases[j] = base[index % k];
      index /= k;
      const std::uint64_t letter = index % letter_choices;
      index /= letter_choices;
      w.letters[j - 1] = StableLetter{static_cast<std::uint8_t>(letter / 2), static_cast<std::int8_t>(letter % 2 ? -1 : 1)};
    }
    w.bases[0] = base[index];
    return w;
  };

  auto hit = parallel_first_index(total, jobs, [&](std::uint64_t index) {
    BrittonWord w = decode(index);
    if (!b->pinch_sites(w).empty()) return false;
    return check_cc(h, b->word(w)).passed();
  });
  if (!hit) return std::nullopt;
  return b->word(decode(*hit));
}

PropertyReport mitosis_check(const FgSubgroup& gamma) {
  auto m = HnnGroup::make_mitosis(gamma);
  const Element d = m->letter(m->letter_index("d"));
  const Element s = m->letter(m->letter_index("s"));
  const Element t2 = mul(d, s);
  const FgSubgroup h = m->gamma_minus();

  PropertyReport report;
  report.property = "MITOSIS";
  report.subject = h.label() + " in " + m->descriptor();
  report.facts.emplace_back("t1", s.to_string());
  report.facts.emplace_back("t2", t2.to_string());
  report.facts.emplace_back("binate t", d.to_string());

  report.checks.push_back("s (g, 1) s^-1 = (1, g) and d (1, g) d^-1 = (g, g) for every generator");
  for (const auto& g : gamma.generators()) {
    Element lhs = conj(s, m->from_base(m->minus(g)));
    Element rhs = m->from_base(m->plus(g));
    if (!(lhs == rhs)) {
      report.fail("s (g, 1) s^-1 != (1, g)", Counterexample{Counterexample::Kind::Equality, lhs, rhs});
      return report;
    }
    lhs = conj(d, m->from_base(m->plus(g)));
    rhs = m->from_base(m->diagonal(g));
    if (!(lhs == rhs)) {
      report.fail("d (1, g) d^-1 != (g, g)", Counterexample{Counterexample::Kind::Equality, lhs, rhs});
      return report;
    }
  }

  for (const PropertyReport& part :
       {check_mitotic(h, s, t2), [&] {
          GeneratorMap f;
          for (const auto& x : h.generators()) f.images.push_back(conj(s, x));
          // With f = conjugation by t1 the binate witness is t2 t1^-1 = d.
          return check_binate(h, f, d);
        }()}) {
    for (const auto& c : part.checks) report.checks.push_back(part.property + ": " + c);
    for (const auto& n : part.notes) report.notes.push_back(part.property + ": " + n);
    if (part.failed()) {
      report.fail(part.property + ": " + part.failed_condition, part.counterexample);
      return report;
    }
  }
  return report;
}

BinateTower::BinateTower(const FgSubgroup& gamma, std::size_t stages) {
  if (stages > kMaxStages) {
    throw BudgetExceeded("binate tower limited to " + std::to_string(kMaxStages) + " stages");
  }
  generators_.push_back(gamma);
  for (std::size_t i = 0; i < stages; ++i) {
    auto ext = HnnGroup::make_binate(generators_.back());
    std::vector<Element> gens;
    for (const auto& g : generators_.back().generators()) {
      gens.push_back(ext->from_base(ext->minus(g)));
      gens.push_back(ext->from_base(ext->plus(g)));
    }
    gens.push_back(ext->letter(0));
    generators_.emplace_back("b^" + std::to_string(i + 1) + "(" + gamma.label() + ")", ext, std::move(gens));
    extensions_.push_back(std::move(ext));
  }
}

const FgSubgroup& BinateTower::stage(std::size_t i) const {
  if (i >= generators_.size()) throw InvalidArgument("stage " + std::to_string(i) + " not materialized");
  return generators_[i];
}

const HnnGroup& BinateTower::extension(std::size_t i) const {
  if (i >= extensions_.size()) throw InvalidArgument("stage " + std::to_string(i + 1) + " not materialized");
  return *extensions_[i];
}

Element BinateTower::embed(const Element& x, std::size_t i) const {
  const HnnGroup& ext = extension(i);
  return ext.from_base(ext.minus(x));
}

}  // namespace displace
