#pragma once

// Teleportation of a thermofield qubit from Alice (parties A, C) to Bob (B).
//
// Two source/channel families are supported:
//   * thermofield: Alice holds a0|0(β_A)⟩ + a1|1(β_A)⟩, the channel is
//     Σ_j (−1)^j |j(β_B)⟩_B |(j+1)(β_C)⟩_C / √2. β_A, β_B, β_C may differ.
//   * zero temperature, variant xy ∈ {00, 11, 01, 10}: Alice holds
//     Σ_j a_j |j, t_xy(j)~⟩ with t_00 = 0, t_11 = 1, t_01 = j+1, t_10 = j, and
//     the channel is Σ_j (−1)^j |j(β_B)⟩_B |j+1, (j+1)~⟩_C / √2.
// Excitation indices are taken mod 2. Alice's Bell bases carry 1/√2 so the
// four branches each occur with probability 1/4.

#include <optional>
#include <string>
#include <vector>

#include "tfd/abstract_ket.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

enum class ZeroTempVariant { V00, V11, V01, V10 };

/// Tilde index attached to excitation j by a zero-temperature variant.
int variant_tilde(ZeroTempVariant xy, int j);
std::string to_string(ZeroTempVariant xy);
ZeroTempVariant parse_zero_temp_variant(const std::string& s);

struct SourceSpec {
  enum class Kind { Thermofield, ZeroTemperature };
  Kind kind = Kind::Thermofield;
  double beta = kZeroTemperature;
  ZeroTempVariant variant = ZeroTempVariant::V00;

  static SourceSpec thermofield(double beta_a);
  static SourceSpec zero_temperature(ZeroTempVariant xy);
};

struct ChannelSpec {
  enum class Kind { Thermofield, ZeroTemperature };
  Kind kind = Kind::Thermofield;
  double beta_b = kZeroTemperature;
  double beta_c = kZeroTemperature;
  ZeroTempVariant variant = ZeroTempVariant::V00;

  static ChannelSpec thermofield(double beta_b, double beta_c);
  static ChannelSpec zero_temperature(ZeroTempVariant xy, double beta_b);
};

/// Throws ConfigError unless the source and channel belong to the same
/// family (and, for zero temperature, the same xy variant).
void validate_protocol(const SourceSpec& source, const ChannelSpec& channel);

/// Psi pairs A's excitation j with C's j+1 (b⁽¹⁾ in the zero-temperature
/// variants); Phi pairs j with j (b⁽²⁾).
enum class BellFamily { Psi, Phi };

/// Two classical bits: Bell family and sign.
struct ClassicalMessage {
  BellFamily family = BellFamily::Psi;
  int sign = 1;

  unsigned bits() const;
  friend bool operator==(const ClassicalMessage&, const ClassicalMessage&) = default;
};

std::string to_string(const ClassicalMessage& m);

struct BellBasisElement {
  BellFamily family = BellFamily::Psi;
  int sign = 1;
  SourceSpec source;    ///< determines A's labels
  ChannelSpec channel;  ///< determines C's labels
};

/// All four (family, sign) branches in a fixed order: Psi+, Psi−, Phi+, Phi−.
std::vector<ClassicalMessage> all_messages();

AbstractKet source_ket(Complex a0, Complex a1, const SourceSpec& source);
AbstractKet build_channel(const ChannelSpec& channel);
BellBasisElement bell_basis(BellFamily family, int sign, const SourceSpec& source,
                            const ChannelSpec& channel);
AbstractKet bell_ket(const BellBasisElement& element);

/// Bob's intended state Σ_j a_j |j(β_B)⟩.
AbstractKet bob_target(Complex a0, Complex a1, const ChannelSpec& channel);

template <typename Ket>
struct Projection {
  Ket bob_ket;  ///< unnormalized; empty/zero when probability is 0
  double probability = 0.0;
};

Projection<AbstractKet> alice_measure(const AbstractKet& state_abc, const BellBasisElement& bell);
/// Numeric engine: state on A ⊗ B ⊗ C with each party of dim (cutoff+1)².
Projection<StateVector> alice_measure(const StateVector& state_abc, const BellBasisElement& bell,
                                      int cutoff, double omega = 1.0);
/// Numeric engine on a product-form state: every mode is realized at the
/// cutoff and the A, C contraction is done term by term, so the three-party
/// vector is never formed. Agrees with the dense overload.
Projection<StateVector> alice_measure_factored(const AbstractKet& state_abc,
                                               const BellBasisElement& bell, int cutoff,
                                               double omega = 1.0);

/// Bob's operator for message m at tag β_B:
///   Psi_s: Σ_j (−1)^j s^j |j⟩⟨j|,   Phi_s: Σ_j (−1)^j s^{j+1} |j+1⟩⟨j|.
AbstractKet bob_apply(const AbstractKet& bob_ket, const ClassicalMessage& m, double beta_b);
/// Matrix of the same operator on Bob's truncated doubled mode.
ComplexMatrix bob_operator(const ClassicalMessage& m, double beta_b, int cutoff, double omega = 1.0);

/// Applies Bob's operator, then normalizes (empty input stays empty).
AbstractKet bob_correct(const AbstractKet& bob_ket, const ClassicalMessage& m, double beta_b);
StateVector bob_correct(const StateVector& bob_ket, const ClassicalMessage& m, double beta_b,
                        int cutoff, double omega = 1.0);

struct TeleportOutcome {
  ClassicalMessage branch;   ///< Bell element Alice obtained
  ClassicalMessage message;  ///< what Bob was told
  double probability = 0.0;
  double fidelity = 0.0;  ///< against Σ a_j |j(β_B)⟩
  Engine engine = Engine::Abstract;
  AbstractKet bob_abstract;
  StateVector bob_numeric;
  /// Numeric engine only: fidelity against the source state at Alice's
  /// temperature, Σ a_j |j(β_A)⟩; differs from 1 when β_A ≠ β_B.
  std::optional<double> source_temperature_fidelity;
  /// Numeric engine only: tail mass of the hottest party at the cutoff.
  double tail_mass = 0.0;
};

struct TeleportOptions {
  Engine engine = Engine::Abstract;
  int cutoff = 24;  ///< numeric engine; each party has dim (N+1)² ≤ max_dim
  double omega = 1.0;
  Index max_dim = kDefaultMaxDim;
  /// Restrict to one branch; all four otherwise.
  std::optional<ClassicalMessage> branch;
  /// Send Bob a different message than the measured one (diagnostic).
  std::optional<ClassicalMessage> override_message;
};

std::vector<TeleportOutcome> run_teleport(Complex a0, Complex a1, const SourceSpec& source,
                                          const ChannelSpec& channel,
                                          const TeleportOptions& options = {});

}  // namespace tfd
