#include "displace/checkers/checkers.hpp"

#include <algorithm>

#include "displace/hnn/product_group.hpp"
#include "displace/pl/pl_group.hpp"

namespace displace {

namespace {

PropertyReport start(const std::string& property, const FgSubgroup& h) {
  PropertyReport report;
  report.property = property;
  report.subject = h.label();
  return report;
}

void require_context(const FgSubgroup& h, const Element& x, const std::string& role) {
  if (!x.group().same_as(*h.group())) {
    throw ContextMismatch(role + " lies in " + x.group().descriptor() + " but " + h.label() + " lies in " +
                          h.group()->descriptor());
  }
}

// [H, t^p H t^-p] = 1 for p in [first, last]. Returns false (and records the
// failure) at the first bad exponent.
bool conjugates_commute(PropertyReport& report, const FgSubgroup& h, const Element& t, std::int64_t first,
                        std::int64_t last) {
  if (last < first) return true;
  report.checks.push_back("[H, t^p H t^-p] = 1 for " + std::to_string(first) + " <= p <= " + std::to_string(last));
  Element tp = power(t, first);
  for (std::int64_t p = first; p <= last; ++p) {
    PropertyReport pair = subgroups_commute(h, h.conjugated_by(tp));
    if (pair.failed()) {
      report.fail("[H, t^" + std::to_string(p) + " H t^-" + std::to_string(p) + "] != 1", pair.counterexample);
      return false;
    }
    tp = mul(tp, t);
  }
  return true;
}

Element evaluate_relator(const Relator& r, const std::vector<Element>& images, const GroupPtr& group) {
  Element x = group->identity();
  for (int letter : r.letters) {
    std::size_t i = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    if (letter == 0 || i >= images.size()) throw InvalidArgument("relator letter out of range");
    x = mul(x, letter > 0 ? images[i] : inv(images[i]));
  }
  return x;
}

// t(X) ∪ ... ∪ t^q(X); the translates are pairwise disjoint once t displaces X.
IntervalSet translates(const PLHomeo& t, const IntervalSet& region, std::int64_t q) {
  std::vector<OpenInterval> pieces;
  IntervalSet image = region;
  for (std::int64_t p = 1; p <= q; ++p) {
    image = t.image(image);
    pieces.insert(pieces.end(), image.intervals().begin(), image.intervals().end());
  }
  std::sort(pieces.begin(), pieces.end(), [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
  return IntervalSet(std::move(pieces));
}

}  // namespace

PropertyReport check_cc(const FgSubgroup& h, const Element& t) {
  require_context(h, t, "witness t");
  PropertyReport report = start("CC", h);
  conjugates_commute(report, h, t, 1, 1);
  return report;
}

PropertyReport check_cznc(const FgSubgroup& h, const Element& t, std::int64_t n) {
  require_context(h, t, "witness t");
  if (n < 2) throw InvalidArgument("commuting Z/n-conjugates needs n >= 2");
  PropertyReport report = start("CZNC", h);
  report.facts.emplace_back("n", std::to_string(n));
  if (!conjugates_commute(report, h, t, 1, n - 1)) return report;
  report.checks.push_back("[H, t^n] = 1");
  Element tn = power(t, n);
  for (const auto& g : h.generators()) {
    if (!commute(g, tn)) {
      report.fail("[H, t^" + std::to_string(n) + "] != 1", Counterexample{Counterexample::Kind::Commutator, g, tn});
      return report;
    }
  }
  return report;
}

PropertyReport check_czc(const FgSubgroup& h, const Element& t, std::int64_t p_max) {
  require_context(h, t, "witness t");
  if (p_max < 1) throw InvalidArgument("p_max must be at least 1");
  PropertyReport report = start("CZC", h);
  report.facts.emplace_back("p_max", std::to_string(p_max));
  if (conjugates_commute(report, h, t, 1, p_max)) report.verdict = Verdict::BoundedPass;
  return report;
}

PropertyReport check_ccc(const FgSubgroup& h, const Element& t, std::optional<std::int64_t> n, std::int64_t p_max) {
  PropertyReport report = n ? check_cznc(h, t, *n) : check_czc(h, t, p_max);
  report.notes.push_back(n ? "finite n: checked as commuting Z/n-conjugates"
                           : "n = infinity: checked as commuting Z-conjugates");
  report.property = "CCC";
  return report;
}

PropertyReport check_binate(const FgSubgroup& h, const GeneratorMap& f, const Element& t,
                            const std::vector<Relator>& relators) {
  require_context(h, t, "witness t");
  const auto& gens = h.generators();
  if (f.images.size() != gens.size()) throw InvalidArgument("generator map length differs from generator count");
  for (const auto& x : f.images) require_context(h, x, "image under f");
  PropertyReport report = start("BINATE", h);

  if (relators.empty()) {
    report.notes.push_back("no presentation supplied; f is assumed to be a homomorphism");
  } else {
    report.checks.push_back("f maps " + std::to_string(relators.size()) + " relators to 1");
    for (const auto& r : relators) {
      if (!evaluate_relator(r, gens, h.group()).is_identity()) {
        throw InvalidArgument("supplied relator does not hold in H");
      }
      if (!evaluate_relator(r, f.images, h.group()).is_identity()) {
        report.fail("f does not respect a relator of H");
        return report;
      }
    }
  }

  report.checks.push_back("[h_i, f(h_j)] = 1 for all generator pairs");
  for (const auto& a : gens) {
    for (const auto& b : f.images) {
      if (!commute(a, b)) {
        report.fail("[H, f(H)] != 1", Counterexample{Counterexample::Kind::Commutator, a, b});
        return report;
      }
    }
  }
  report.checks.push_back("t f(h) t^-1 = h f(h) for every generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Element lhs = conj(t, f.images[i]);
    Element rhs = mul(gens[i], f.images[i]);
    if (!(lhs == rhs)) {
      report.fail("t f(h) t^-1 != h f(h) for h = " + gens[i].to_string(),
                  Counterexample{Counterexample::Kind::Equality, lhs, rhs});
      return report;
    }
  }
  return report;
}

PropertyReport check_mitotic(const FgSubgroup& h, const Element& t1, const Element& t2) {
  require_context(h, t1, "witness t1");
  require_context(h, t2, "witness t2");
  PropertyReport report = start("MITOTIC", h);
  if (!conjugates_commute(report, h, t1, 1, 1)) return report;
  report.checks.push_back("t2 h t2^-1 = h t1 h t1^-1 for every generator");
  for (const auto& g : h.generators()) {
    Element lhs = conj(t2, g);
    Element rhs = mul(g, conj(t1, g));
    if (!(lhs == rhs)) {
      report.fail("t2 h t2^-1 != h t1 h t1^-1 for h = " + g.to_string(),
                  Counterexample{Counterexample::Kind::Equality, lhs, rhs});
      return report;
    }
  }
  return report;
}

PropertyReport check_dissipator(const IntervalSet& region, const Element& t, const FgSubgroup& sample,
                                std::int64_t p_max) {
  require_context(sample, t, "dissipator t");
  const PLHomeo& shift = t.as<PLHomeo>();
  for (const auto& g : sample.generators()) {
    if (!g.as<PLHomeo>().support().subset_of(region)) {
      throw InvalidArgument("sample generator " + g.to_string() + " is not supported in " + region.to_string());
    }
  }
  PropertyReport report = start("DISSIPATOR", sample);
  report.facts.emplace_back("region", region.to_string());
  report.facts.emplace_back("p_max", std::to_string(p_max));

  PropertyReport moved = displaces(shift, region, p_max);
  report.checks.insert(report.checks.end(), moved.checks.begin(), moved.checks.end());
  if (moved.failed()) {
    report.fail(moved.failed_condition);
    return report;
  }

  report.checks.push_back("truncated diagonals d_q commute with the sample and satisfy t^-1 d_q t = g d_{q-1}, q <= " +
                          std::to_string(p_max));
  const Element t_inv = inv(t);
  for (const auto& g : sample.generators()) {
    Element previous = t.group().identity();  // d_0
    Element tp = t;
    for (std::int64_t q = 1; q <= p_max; ++q) {
      Element current = mul(previous, conj(tp, g));
      const PLHomeo& diag = current.as<PLHomeo>();
      if (!diag.support().subset_of(translates(shift, region, q))) {
        report.fail("d_" + std::to_string(q) + " is not supported on the first " + std::to_string(q) +
                    " translates of X");
        return report;
      }
      for (const auto& h : sample.generators()) {
        if (!commute(h, current)) {
          report.fail("d_" + std::to_string(q) + " does not commute with the sample",
                      Counterexample{Counterexample::Kind::Commutator, h, current});
          return report;
        }
      }
      Element lhs = conj(t_inv, current);
      Element rhs = mul(g, previous);
      if (!(lhs == rhs)) {
        report.fail("t^-1 d_q t != g d_{q-1} at q = " + std::to_string(q),
                    Counterexample{Counterexample::Kind::Equality, lhs, rhs});
        return report;
      }
      previous = std::move(current);
      tp = mul(tp, t);
    }
  }
  report.verdict = Verdict::BoundedPass;
  return report;
}

PropertyReport check_M(const FgSubgroup& lambda, const Element& t, const std::vector<Element>& subset,
                       const Element& s, std::int64_t p_max, const std::optional<MembershipOracle>& oracle) {
  require_context(lambda, t, "witness t");
  require_context(lambda, s, "conjugator s");
  for (const auto& x : subset) require_context(lambda, x, "subset element");
  if (!oracle) {
    throw OracleUnavailable("no membership oracle for <" + lambda.label() + "> in " + lambda.group()->descriptor());
  }
  PropertyReport report = start("M", lambda);
  report.facts.emplace_back("oracle", oracle->name);
  report.facts.emplace_back("p_max", std::to_string(p_max));
  if (!conjugates_commute(report, lambda, t, 1, p_max)) return report;
  report.checks.push_back("S ⊆ s<Λ>s^-1 for " + std::to_string(subset.size()) + " elements (oracle: " + oracle->name +
                          ")");
  const Element s_inv = inv(s);
  for (const auto& x : subset) {
    if (!oracle->contains(conj(s_inv, x))) {
      report.fail(x.to_string() + " is not in s<Λ>s^-1");
      return report;
    }
  }
  report.verdict = Verdict::BoundedPass;
  return report;
}

PropertyReport verify(const WitnessCertificate& c) {
  const FgSubgroup& h = c.subject;
  return std::visit(
      [&](const auto& w) -> PropertyReport {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, CcWitness>) {
          return check_cc(h, w.t);
        } else if constexpr (std::is_same_v<W, CccWitness>) {
          return check_ccc(h, w.t, w.n, w.p_max);
        } else if constexpr (std::is_same_v<W, CzWitness>) {
          return check_czc(h, w.t, w.p_max);
        } else if constexpr (std::is_same_v<W, CznWitness>) {
          return check_cznc(h, w.t, w.n);
        } else if constexpr (std::is_same_v<W, MWitness>) {
          return check_M(w.lambda, w.t, w.subset, w.s, w.p_max, w.oracle);
        } else if constexpr (std::is_same_v<W, BinateWitness>) {
          return check_binate(h, w.f, w.t, w.relators);
        } else if constexpr (std::is_same_v<W, MitoticWitness>) {
          return check_mitotic(h, w.t1, w.t2);
        } else {
          return check_dissipator(w.region, w.t, h, w.p_max);
        }
      },
      c.witness);
}

CertifiedWitness derive_czc_from_M(const WitnessCertificate& m_certificate, const FgSubgroup& h, const Element& s) {
  const auto* m = std::get_if<MWitness>(&m_certificate.witness);
  if (!m) throw InvalidArgument("derive_czc_from_M expects an M certificate");
  if (!m->oracle) throw OracleUnavailable("M certificate carries no membership oracle");
  require_context(h, s, "conjugator s");
  const Element s_inv = inv(s);
  for (const auto& g : h.generators()) {
    if (!m->oracle->contains(conj(s_inv, g))) {
      throw InvalidArgument("generator " + g.to_string() + " of " + h.label() + " is not in s<Λ>s^-1");
    }
  }
  WitnessCertificate derived{h, CzWitness{conj(s, m->t), m->p_max}};
  PropertyReport report = verify(derived);
  report.notes.push_back("witness t = s t0 s^-1 derived from an M certificate");
  return {std::move(derived), std::move(report)};
}

CertifiedWitness product_cc_witness(const WitnessCertificate& first, const WitnessCertificate& second) {
  const auto* a = std::get_if<CcWitness>(&first.witness);
  const auto* b = std::get_if<CcWitness>(&second.witness);
  if (!a || !b) throw InvalidArgument("product_cc_witness expects two CC certificates");
  if (!verify(first).passed()) throw InvalidArgument("first CC certificate does not verify");
  if (!verify(second).passed()) throw InvalidArgument("second CC certificate does not verify");

  auto product = ProductGroup::make({first.subject.group(), second.subject.group()});
  std::vector<Element> gens;
  for (const auto& g : first.subject.generators()) gens.push_back(product->inject(0, g));
  for (const auto& g : second.subject.generators()) gens.push_back(product->inject(1, g));
  FgSubgroup subject(first.subject.label() + " x " + second.subject.label(), product, std::move(gens));
  WitnessCertificate combined{subject, CcWitness{product->element({a->t, b->t})}};
  PropertyReport report = verify(combined);
  report.notes.push_back("witness (t1, t2) assembled from componentwise certificates");
  return {std::move(combined), std::move(report)};
}

MembershipOracle finite_membership(const FgSubgroup& lambda, std::uint64_t budget) {
  auto members = std::make_shared<std::vector<Element>>(closure(lambda, budget));
  return MembershipOracle{"finite enumeration of <" + lambda.label() + "> (" + std::to_string(members->size()) +
                              " elements)",
                          [members](const Element& x) {
                            return std::find(members->begin(), members->end(), x) != members->end();
                          }};
}

}  // namespace displace
