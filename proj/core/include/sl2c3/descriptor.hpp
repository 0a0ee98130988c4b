#pragma once

// Decomposition trees.
//
//   Leaf(class)              an irreducible module
//   Sum(children)            direct sum
//   Semi(quo, sub)           non-split extension with sub a submodule and
//                            quo the quotient, written quo ⊂+ sub
//   Glue(nodes, edges)       a module built from irreducible nodes, where an
//                            edge (i, j, X) says that X applied to node i has
//                            a nonzero component in node j (j lies lower)

#include <string>
#include <vector>

#include "sl2c3/canon.hpp"

namespace sl2c3 {

enum class Action { XMinus, XPlus };

struct GlueEdge {
  int from;
  int to;
  Action action;

  bool operator==(const GlueEdge& o) const { return from == o.from && to == o.to && action == o.action; }
  bool operator<(const GlueEdge& o) const;
};

class Descriptor {
 public:
  enum class Kind { Leaf, Sum, Semi, Glue };

  Descriptor() = default;
  static Descriptor leaf(const CanonicalClass& c);
  static Descriptor sum(std::vector<Descriptor> children);
  static Descriptor semi(const Descriptor& quo, const Descriptor& sub);
  static Descriptor glue(std::vector<CanonicalClass> nodes, std::vector<GlueEdge> edges);

  Kind kind() const { return kind_; }
  const CanonicalClass& leaf_class() const { return leaf_; }
  const std::vector<Descriptor>& children() const { return children_; }
  const Descriptor& quo() const { return children_.at(0); }
  const Descriptor& sub() const { return children_.at(1); }
  const std::vector<CanonicalClass>& nodes() const { return nodes_; }
  const std::vector<GlueEdge>& edges() const { return edges_; }

  int dim() const;
  /// Every irreducible constituent, sorted.
  std::vector<CanonicalClass> leaves() const;

  /// Flattened, sorted, single-child sums removed, glue nodes relabeled to
  /// the lexicographically smallest form.
  Descriptor normalized() const;

  /// Every leaf mapped into an extension field, then normalized.
  Descriptor lifted(const Field& target) const;

  /// Compact JSON; deterministic for equal normalized descriptors.
  std::string json() const;
  /// Arrow notation, e.g. "3 ⊕ (2 → 1)".
  std::string pretty() const;

  /// Total order used for sorting; compares the trees as stored.
  static int compare(const Descriptor& a, const Descriptor& b);

 private:
  Kind kind_ = Kind::Leaf;
  CanonicalClass leaf_;
  std::vector<Descriptor> children_;
  std::vector<CanonicalClass> nodes_;
  std::vector<GlueEdge> edges_;
};

/// Structural equality of the normalized forms.
bool descriptor_equal(const Descriptor& a, const Descriptor& b);

/// JSON of a single class: "One", "Two", {"T":[b,c,d]}, {"Tt":[b]}.
std::string class_json(const CanonicalClass& c);
/// "1", "2", "3" for T(0,0,0), otherwise CanonicalClass::str().
std::string class_pretty(const CanonicalClass& c);

/// The six-dimensional module with a 2 on top, two 1s in the middle and a 2
/// at the bottom, as produced by the engine.
Descriptor m1_descriptor();

/// The six-dimensional module with a 1 on top, two 2s in the middle and a 1
/// at the bottom: the head reaches one 2 by X- and the other by X+, which in
/// turn reach the bottom by X+ and X- respectively.
Descriptor p0_descriptor();

}  // namespace sl2c3
