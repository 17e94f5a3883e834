#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "displace/core/element.hpp"
#include "displace/core/group_ops.hpp"
#include "displace/core/report.hpp"
#include "displace/hnn/product_group.hpp"

namespace displace {

/// The three subgroups of Γ × Γ used as associated subgroups.
enum class SubgroupKind {
  Plus,      ///< Γ₊ = {(1, g)}
  Minus,     ///< Γ₋ = {(g, 1)}
  Diagonal,  ///< Δ = {(g, g)}
};

std::string to_string(SubgroupKind kind);

/// Stable letter t with t a t^-1 = φ(a) for a in `domain`, φ onto `codomain`.
/// All maps used here send the coordinate g of one subgroup to the same g in
/// the other.
struct StableLetterSpec {
  std::string name;
  SubgroupKind domain;
  SubgroupKind codomain;
};

/// HNN extension of Γ × Γ. Elements are stored in normal form
/// c_0 σ_1 c_1 ... σ_m c_m: the word is reduced (no pinch) and every c_i with
/// i < m is the fixed coset representative of c_i S(σ_{i+1}), where S(t) is
/// the codomain and S(t^-1) the domain of t.
///
/// Coset representatives are algebraic: (x, y) = (x, 1)(1, y) for Γ₊,
/// (x, y) = (x y^-1, 1)(y, y) for Δ and (x, y) = (1, y)(x, 1) for Γ₋.
class HnnGroup final : public Group {
 public:
  /// b(Γ) = <Γ × Γ, d | d (1, g) d^-1 = (g, g)>.
  static std::shared_ptr<const HnnGroup> make_binate(const FgSubgroup& gamma);

  /// m(Γ): b(Γ) with a second letter s, s (g, 1) s^-1 = (1, g).
  static std::shared_ptr<const HnnGroup> make_mitosis(const FgSubgroup& gamma);

  const FgSubgroup& gamma() const { return gamma_; }
  const std::shared_ptr<const ProductGroup>& base() const { return base_; }
  const std::vector<StableLetterSpec>& letters() const { return letters_; }

  /// (a, b) in the base.
  Element pair(const Element& a, const Element& b) const;
  Element minus(const Element& g) const;     ///< (g, 1)
  Element plus(const Element& g) const;      ///< (1, g)
  Element diagonal(const Element& g) const;  ///< (g, g)

  /// The base element as an element of the extension.
  Element from_base(const Element& b) const;
  /// Stable letter number `index` raised to `sign`.
  Element letter(std::size_t index, int sign = 1) const;
  /// Looks a letter up by name ("d" or "s").
  std::size_t letter_index(const std::string& name) const;

  /// Γ₋ generated by (g, 1) for the generators g of Γ.
  FgSubgroup gamma_minus() const;

  bool in_subgroup(SubgroupKind kind, const Element& b) const;

  /// b = rep · sub with sub in the subgroup and rep the fixed representative.
  std::pair<Element, Element> split(SubgroupKind kind, const Element& b) const;

  /// Subgroup a base element may be moved through σ from left to right.
  SubgroupKind passing_subgroup(const StableLetter& sigma) const;
  /// The subgroup an element between σ^-1 ... σ must lie in to pinch.
  SubgroupKind pinch_subgroup(const StableLetter& outer) const;
  /// σ b σ^-1 for b in pinch_subgroup(σ).
  Element pinch_image(const StableLetter& outer, const Element& b) const;

  /// Positions i where letters i and i+1 enclose a pinch.
  std::vector<std::size_t> pinch_sites(const BrittonWord& w) const;
  BrittonWord apply_pinch(const BrittonWord& w, std::size_t site) const;

  /// Removes every pinch in one left-to-right pass.
  BrittonWord britton_reduce(const BrittonWord& w) const;

  /// Normal form of a reduced word.
  BrittonWord normal_form(const BrittonWord& reduced) const;

  /// The element represented by an arbitrary well-formed word.
  Element word(const BrittonWord& w) const;

  /// Fixed representatives of (Γ × Γ) / subgroup, identity first. Needs Γ
  /// finite.
  std::vector<Element> transversal(SubgroupKind kind) const;

  std::string letter_name(const StableLetter& sigma) const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;

  HnnGroup(std::string prefix, FgSubgroup gamma, std::vector<StableLetterSpec> letters);

 private:
  void validate(const BrittonWord& w) const;

  FgSubgroup gamma_;
  std::shared_ptr<const ProductGroup> base_;
  std::vector<StableLetterSpec> letters_;
};

/// Reduces by pinching at uniformly random sites until none remain.
BrittonWord britton_reduce_randomized(const HnnGroup& g, const BrittonWord& w, Rng& rng);

/// True iff w represents 1 (its reduced form has no stable letter and a
/// trivial base part).
bool is_identity(const HnnGroup& g, const BrittonWord& w);

/// A vertex wK of the Bass–Serre tree, K the base. The path is the normal
/// form of w with its final base dropped (set to the identity); its letter
/// count is the distance from the base vertex.
using Vertex = BrittonWord;

Element vertex_element(const HnnGroup& g, const Vertex& v);
bool fixes_vertex(const Element& x, const Vertex& v);

/// Neighbours of v away from the base vertex, ordered by (letter, sign with
/// + first, transversal index).
std::vector<Vertex> children(const HnnGroup& g, const Vertex& v);

/// Breadth-first ball around the base vertex. Throws BudgetExceeded past
/// `budget` vertices.
std::vector<Vertex> bass_serre_ball(const HnnGroup& g, std::size_t radius, std::uint64_t budget = 1'000'000);

inline constexpr std::size_t kMaxTreeRadius = 4;

/// Vertices within `radius` of the base vertex fixed by x. radius <= 4.
std::vector<Vertex> bass_serre_fixed_vertices(const Element& x, std::size_t radius);

/// Edges of the radius ball (vertex to parent) fixed by every generator of h.
std::size_t fixed_edge_count(const FgSubgroup& h, std::size_t radius);

std::string to_string(const HnnGroup& g, const Vertex& v);

/// Size of the raw word space searched by cc_witness_search_b1.
std::uint64_t cc_search_space(const HnnGroup& b, std::size_t max_letters);

/// Searches every reduced word c_0 σ_1 c_1 ... σ_m c_m of b(Γ) with m <=
/// max_letters and c_i in Γ × Γ (ordered by m, then lexicographically) for
/// t with [Γ₋, t Γ₋ t^-1] = 1 on generators. Returns the first hit.
std::optional<Element> cc_witness_search_b1(const FgSubgroup& gamma, std::size_t max_letters, unsigned jobs = 1,
                                            std::uint64_t budget = kSearchBudget);

/// Mitotic data in m(Γ): H = Γ₋, t1 = s, t2 = d s, checked with
/// check_mitotic, and the induced binate data f = conjugation by s with
/// t = t2 t1^-1 = d checked with check_binate.
PropertyReport mitosis_check(const FgSubgroup& gamma);

/// Γ_0 = Γ, Γ_{i+1} = b(Γ_i) with Γ_i embedded as Γ₋.
class BinateTower {
 public:
  static constexpr std::size_t kMaxStages = 3;

  BinateTower(const FgSubgroup& gamma, std::size_t stages);

  std::size_t stages() const { return generators_.size() - 1; }
  const FgSubgroup& stage(std::size_t i) const;
  const HnnGroup& extension(std::size_t i) const;

  /// x ↦ (x, 1) from stage i into the base of stage i + 1.
  Element embed(const Element& x, std::size_t i) const;

 private:
  std::vector<FgSubgroup> generators_;
  std::vector<std::shared_ptr<const HnnGroup>> extensions_;
};

}  // namespace displace
