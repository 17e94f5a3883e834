#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "displace/core/group_ops.hpp"
#include "displace/core/report.hpp"
#include "displace/pl/interval_set.hpp"

namespace displace {

enum class Property { CC, CCC, CZC, CZNC, M, Binate, Mitotic, Dissipator };

std::string to_string(Property p);
Property parse_property(const std::string& text);

/// Images of the generators of H under a homomorphism f, in generator order.
struct GeneratorMap {
  std::vector<Element> images;
};

/// Relator of a finite presentation of H over its generator list; letter
/// +(i+1) is generator i and -(i+1) its inverse.
struct Relator {
  std::vector<int> letters;
};

/// Decides membership in a (possibly infinite) subgroup.
struct MembershipOracle {
  std::string name;
  std::function<bool(const Element&)> contains;
};

struct CcWitness {
  Element t;
};

struct CznWitness {
  Element t;
  std::int64_t n;
};

struct CzWitness {
  Element t;
  std::int64_t p_max;
};

/// `n == nullopt` reads as n = infinity (t^infinity = 1).
struct CccWitness {
  Element t;
  std::optional<std::int64_t> n;
  std::int64_t p_max;
};

struct MWitness {
  FgSubgroup lambda;
  Element t;
  std::vector<Element> subset;
  Element s;
  std::int64_t p_max;
  std::optional<MembershipOracle> oracle;
};

struct BinateWitness {
  GeneratorMap f;
  Element t;
  std::vector<Relator> relators;
};

struct MitoticWitness {
  Element t1;
  Element t2;
};

struct DissipatorWitness {
  IntervalSet region;
  Element t;
  std::int64_t p_max;
};

using WitnessPayload = std::variant<CcWitness, CccWitness, CzWitness, CznWitness, MWitness, BinateWitness,
                                    MitoticWitness, DissipatorWitness>;

/// A claimed instance of a displacement property for a subject subgroup,
/// together with the witness data the definition quantifies over.
struct WitnessCertificate {
  FgSubgroup subject;
  WitnessPayload witness;

  Property property() const;
};

/// A certificate together with the report of its verification.
struct CertifiedWitness {
  WitnessCertificate certificate;
  PropertyReport report;
};

}  // namespace displace
