#pragma once

// Exact label algebra for multi-party thermofield kets. Distinct label tuples
// are orthonormal by definition, including labels that differ only in their
// temperature tag. realize() maps the same kets onto truncated Fock vectors.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tfd/hilbert.hpp"

namespace tfd {

enum class Party { A, B, C };

enum class LabelKind {
  Thermo,  ///< |j(β)⟩: thermal vacuum (j = 0) or its first physical excitation (j = 1)
  Pair,    ///< |j, j̃′⟩: zero-temperature doubled Fock state
};

struct ModeLabel {
  Party party = Party::A;
  LabelKind kind = LabelKind::Thermo;
  int j = 0;
  int tilde = 0;     ///< Pair only
  double beta = 0;   ///< Thermo only; kZeroTemperature allowed

  static ModeLabel thermo(Party party, int j, double beta);
  static ModeLabel pair(Party party, int j, int tilde);

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
  friend bool operator<(const ModeLabel& a, const ModeLabel& b);

  std::string to_string() const;
};

using LabelTuple = std::vector<ModeLabel>;

class AbstractKet {
 public:
  static constexpr double kPruneBelow = 1e-15;

  AbstractKet() = default;
  /// Single term; labels are sorted by party.
  AbstractKet(LabelTuple labels, Complex amplitude);

  const std::map<LabelTuple, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(LabelTuple labels, Complex amplitude);

  AbstractKet& operator+=(const AbstractKet& other);
  friend AbstractKet operator+(AbstractKet a, const AbstractKet& b) { return a += b; }
  friend AbstractKet operator*(Complex s, const AbstractKet& k);

  /// ⟨this|other⟩
  Complex inner(const AbstractKet& other) const;
  double norm() const;
  AbstractKet normalized() const;

  /// Tensor product; the two kets must live on disjoint parties.
  AbstractKet tensor(const AbstractKet& other) const;

  /// ⟨bra|_P |this⟩ where P is the set of parties the bra lives on.
  AbstractKet contract(const AbstractKet& bra) const;

  /// Amplitude of a single-party ket on `label` (0 if absent).
  Complex amplitude(const LabelTuple& labels) const;

  std::string to_string() const;

 private:
  std::map<LabelTuple, Complex> terms_;
};

/// Truncated-Fock image of a ket: each party is a doubled mode of dimension
/// (cutoff+1)², parties in tensor order. Thermo labels become |0(β)⟩ and
/// |1(β)⟩ (mod 2), Pair labels become basis kets |j, j̃′⟩.
/// Temperature tags are inverse temperatures at mode frequency `omega`.
StateVector realize(const AbstractKet& ket, int cutoff, double omega = 1.0,
                    Index max_dim = kDefaultMaxDim);

/// Realization of a single mode label on dimension (cutoff+1)².
StateVector realize_mode(const ModeLabel& label, int cutoff, double omega = 1.0);

}  // namespace tfd
