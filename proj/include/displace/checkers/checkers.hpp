#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "displace/checkers/certificate.hpp"

namespace displace {

/// [H, tHt^-1] = 1.
PropertyReport check_cc(const FgSubgroup& h, const Element& t);

/// [H, t^p H t^-p] = 1 for 1 <= p < n, and [H, t^n] = 1.
PropertyReport check_cznc(const FgSubgroup& h, const Element& t, std::int64_t n);

/// [H, t^p H t^-p] = 1 for 1 <= p <= p_max. Verdict is bounded-pass at best.
PropertyReport check_czc(const FgSubgroup& h, const Element& t, std::int64_t p_max);

/// Finite n dispatches to check_cznc, n = nullopt (infinity) to check_czc.
PropertyReport check_ccc(const FgSubgroup& h, const Element& t, std::optional<std::int64_t> n,
                         std::int64_t p_max);

/// (a) [h_i, f(h_j)] = 1 for all generator pairs and (b) t f(h_i) t^-1 =
/// h_i f(h_i) for every generator. When relators are supplied their images
/// under f are checked too; otherwise f is assumed to be a homomorphism and
/// the report notes it.
PropertyReport check_binate(const FgSubgroup& h, const GeneratorMap& f, const Element& t,
                            const std::vector<Relator>& relators = {});

/// [h_i, t1 h_j t1^-1] = 1 and t2 h_i t2^-1 = h_i t1 h_i t1^-1.
PropertyReport check_mitotic(const FgSubgroup& h, const Element& t1, const Element& t2);

/// Dissipator check for a PL element t and a bounded region X:
/// t^p(X) ∩ X = ∅ for p <= p_max, and for each sample generator g the
/// truncated diagonal products d_q = prod_{p=1..q} t^p g t^-p are well-formed,
/// commute with the sample and satisfy t^-1 d_q t = g d_{q-1}.
PropertyReport check_dissipator(const IntervalSet& region, const Element& t, const FgSubgroup& sample,
                                std::int64_t p_max);

/// Condition (1) [Λ, t^p Λ t^-p] = 1 for p <= p_max, and condition (2) for
/// the given finite subset S: every x in S lies in s<Λ>s^-1 according to the
/// membership oracle for <Λ>. Throws OracleUnavailable without an oracle.
PropertyReport check_M(const FgSubgroup& lambda, const Element& t, const std::vector<Element>& subset,
                       const Element& s, std::int64_t p_max, const std::optional<MembershipOracle>& oracle);

/// Re-runs the checker matching the certificate's property.
PropertyReport verify(const WitnessCertificate& certificate);

/// Turns an M certificate into a CZC certificate for H ≤ s<Λ>s^-1, with
/// witness t = s t0 s^-1, and verifies it.
CertifiedWitness derive_czc_from_M(const WitnessCertificate& m_certificate, const FgSubgroup& h,
                                   const Element& s);

/// Combines CC certificates for H1 ≤ G1 and H2 ≤ G2 into one for H1 × H2 in
/// G1 × G2 with witness (t1, t2).
CertifiedWitness product_cc_witness(const WitnessCertificate& first, const WitnessCertificate& second);

/// Membership in the closure of a subgroup of a finite group.
MembershipOracle finite_membership(const FgSubgroup& lambda, std::uint64_t budget = kSearchBudget);

}  // namespace displace
