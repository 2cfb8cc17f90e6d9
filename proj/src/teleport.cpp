#include "tfd/teleport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int mod2(int j) { return ((j % 2) + 2) % 2; }

double sign_power(int sign, int exponent) { return mod2(exponent) == 0 ? 1.0 : sign; }

void require_sign(int s) {
  if (s != 1 && s != -1) throw ConfigError("Bell sign must be +1 or -1");
}

ModeLabel alice_label(const SourceSpec& source, int j) {
  if (source.kind == SourceSpec::Kind::Thermofield) {
    return ModeLabel::thermo(Party::A, j, source.beta);
  }
  return ModeLabel::pair(Party::A, j, variant_tilde(source.variant, j));
}

ModeLabel channel_c_label(const ChannelSpec& channel, int j) {
  if (channel.kind == ChannelSpec::Kind::Thermofield) {
    return ModeLabel::thermo(Party::C, j, channel.beta_c);
  }
  return ModeLabel::pair(Party::C, j, j);
}

// Bob's operator as (input j, output label index, coefficient) triples.
struct BobTerm {
  int in;
  int out;
  double coef;
};

std::array<BobTerm, 2> bob_terms(const ClassicalMessage& m) {
  require_sign(m.sign);
  std::array<BobTerm, 2> terms{};
  for (int j = 0; j < 2; ++j) {
    const double parity = (j == 0) ? 1.0 : -1.0;
    if (m.family == BellFamily::Psi) {
      terms[j] = {j, j, parity * sign_power(m.sign, j)};
    } else {
      terms[j] = {j, mod2(j + 1), parity * sign_power(m.sign, j + 1)};
    }
  }
  return terms;
}

double tail_for_beta(double beta, double omega, int cutoff) {
  return thermal_tail_mass(bogoliubov_params(beta, omega), cutoff);
}

}  // namespace

int variant_tilde(ZeroTempVariant xy, int j) {
  switch (xy) {
    case ZeroTempVariant::V00: return 0;
    case ZeroTempVariant::V11: return 1;
    case ZeroTempVariant::V01: return mod2(j + 1);
    case ZeroTempVariant::V10: return mod2(j);
  }
  return 0;
}

std::string to_string(ZeroTempVariant xy) {
  switch (xy) {
    case ZeroTempVariant::V00: return "00";
    case ZeroTempVariant::V11: return "11";
    case ZeroTempVariant::V01: return "01";
    case ZeroTempVariant::V10: return "10";
  }
  return "?";
}

ZeroTempVariant parse_zero_temp_variant(const std::string& s) {
  if (s == "00") return ZeroTempVariant::V00;
  if (s == "11") return ZeroTempVariant::V11;
  if (s == "01") return ZeroTempVariant::V01;
  if (s == "10") return ZeroTempVariant::V10;
  throw ConfigError("unknown zero-temperature variant '" + s + "'");
}

SourceSpec SourceSpec::thermofield(double beta_a) {
  SourceSpec s;
  s.kind = Kind::Thermofield;
  s.beta = beta_a;
  return s;
}

SourceSpec SourceSpec::zero_temperature(ZeroTempVariant xy) {
  SourceSpec s;
  s.kind = Kind::ZeroTemperature;
  s.variant = xy;
  return s;
}

ChannelSpec ChannelSpec::thermofield(double beta_b, double beta_c) {
  ChannelSpec c;
  c.kind = Kind::Thermofield;
  c.beta_b = beta_b;
  c.beta_c = beta_c;
  return c;
}

ChannelSpec ChannelSpec::zero_temperature(ZeroTempVariant xy, double beta_b) {
  ChannelSpec c;
  c.kind = Kind::ZeroTemperature;
  c.beta_b = beta_b;
  c.variant = xy;
  return c;
}

void validate_protocol(const SourceSpec& source, const ChannelSpec& channel) {
  const bool thermo_source = source.kind == SourceSpec::Kind::Thermofield;
  const bool thermo_channel = channel.kind == ChannelSpec::Kind::Thermofield;
  if (thermo_source != thermo_channel) {
    throw ConfigError("source and channel must both be thermofield or both zero-temperature");
  }
  if (!thermo_source && source.variant != channel.variant) {
    throw ConfigError("zero-temperature source variant " + to_string(source.variant) +
                      " does not match channel variant " + to_string(channel.variant));
  }
  auto check_beta = [](double b) {
    if (std::isnan(b) || b <= 0.0) throw ConfigError("temperature tags must be positive");
  };
  if (thermo_source) {
    check_beta(source.beta);
    check_beta(channel.beta_c);
  }
  check_beta(channel.beta_b);
}

unsigned ClassicalMessage::bits() const {
  return (family == BellFamily::Phi ? 2u : 0u) | (sign < 0 ? 1u : 0u);
}

std::string to_string(const ClassicalMessage& m) {
  return std::string(m.family == BellFamily::Psi ? "Psi" : "Phi") + (m.sign > 0 ? "+" : "-");
}

std::vector<ClassicalMessage> all_messages() {
  return {{BellFamily::Psi, 1}, {BellFamily::Psi, -1}, {BellFamily::Phi, 1}, {BellFamily::Phi, -1}};
}

AbstractKet source_ket(Complex a0, Complex a1, const SourceSpec& source) {
  AbstractKet out;
  out.add({alice_label(source, 0)}, a0);
  out.add({alice_label(source, 1)}, a1);
  return out;
}

AbstractKet build_channel(const ChannelSpec& channel) {
  AbstractKet out;
  for (int j = 0; j < 2; ++j) {
    const double parity = (j == 0) ? 1.0 : -1.0;
    out.add({ModeLabel::thermo(Party::B, j, channel.beta_b), channel_c_label(channel, j + 1)},
            parity * kInvSqrt2);
  }
  return out;
}

BellBasisElement bell_basis(BellFamily family, int sign, const SourceSpec& source,
                            const ChannelSpec& channel) {
  require_sign(sign);
  validate_protocol(source, channel);
  return BellBasisElement{family, sign, source, channel};
}

AbstractKet bell_ket(const BellBasisElement& e) {
  require_sign(e.sign);
  AbstractKet out;
  for (int j = 0; j < 2; ++j) {
    const int c_index = e.family == BellFamily::Psi ? j + 1 : j;
    out.add({alice_label(e.source, j), channel_c_label(e.channel, c_index)},
            sign_power(e.sign, j) * kInvSqrt2);
  }
  return out;
}

AbstractKet bob_target(Complex a0, Complex a1, const ChannelSpec& channel) {
  AbstractKet out;
  out.add({ModeLabel::thermo(Party::B, 0, channel.beta_b)}, a0);
  out.add({ModeLabel::thermo(Party::B, 1, channel.beta_b)}, a1);
  return out;
}

Projection<AbstractKet> alice_measure(const AbstractKet& state_abc, const BellBasisElement& bell) {
  Projection<AbstractKet> out;
  out.bob_ket = state_abc.contract(bell_ket(bell));
  const double n = out.bob_ket.norm();
  out.probability = n * n;
  return out;
}

Projection<StateVector> alice_measure(const StateVector& state_abc, const BellBasisElement& bell,
                                      int cutoff, double omega) {
  const Index d = static_cast<Index>(cutoff + 1) * (cutoff + 1);
  const StateVector bell_vec = realize(bell_ket(bell), cutoff, omega);
  const std::array<Index, 3> dims{d, d, d};
  const std::array<std::size_t, 2> over{0, 2};
  Projection<StateVector> out;
  out.bob_ket = partial_inner(bell_vec, state_abc, dims, over);
  out.probability = out.bob_ket.squaredNorm();
  return out;
}

Projection<StateVector> alice_measure_factored(const AbstractKet& state_abc,
                                               const BellBasisElement& bell, int cutoff,
                                               double omega) {
  std::map<ModeLabel, StateVector> cache;
  auto mode = [&](const ModeLabel& l) -> const StateVector& {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, realize_mode(l, cutoff, omega)).first;
    return it->second;
  };
  const AbstractKet bell_abstract = bell_ket(bell);
  const Index d = static_cast<Index>(cutoff + 1) * (cutoff + 1);
  Projection<StateVector> out;
  out.bob_ket = StateVector::Zero(d);
  for (const auto& [labels, amp] : state_abc.terms()) {
    if (labels.size() != 3 || labels[0].party != Party::A || labels[1].party != Party::B ||
        labels[2].party != Party::C) {
      throw DimensionError("alice_measure_factored: state must be laid out A, B, C");
    }
    Complex weight = 0.0;
    for (const auto& [bl, bamp] : bell_abstract.terms()) {
      weight += std::conj(bamp) * mode(bl[0]).dot(mode(labels[0])) * mode(bl[1]).dot(mode(labels[2]));
    }
    out.bob_ket += amp * weight * mode(labels[1]);
  }
  out.probability = out.bob_ket.squaredNorm();
  return out;
}

AbstractKet bob_apply(const AbstractKet& bob_ket, const ClassicalMessage& m, double beta_b) {
  AbstractKet out;
  for (const auto& t : bob_terms(m)) {
    AbstractKet bra({ModeLabel::thermo(Party::B, t.in, beta_b)}, 1.0);
    const Complex amp = bra.inner(bob_ket);
    out.add({ModeLabel::thermo(Party::B, t.out, beta_b)}, t.coef * amp);
  }
  return out;
}

ComplexMatrix bob_operator(const ClassicalMessage& m, double beta_b, int cutoff, double omega) {
  const Index d = static_cast<Index>(cutoff + 1) * (cutoff + 1);
  ComplexMatrix op = ComplexMatrix::Zero(d, d);
  for (const auto& t : bob_terms(m)) {
    const StateVector in = realize_mode(ModeLabel::thermo(Party::B, t.in, beta_b), cutoff, omega);
    const StateVector out = realize_mode(ModeLabel::thermo(Party::B, t.out, beta_b), cutoff, omega);
    op += t.coef * out * in.adjoint();
  }
  return op;
}

AbstractKet bob_correct(const AbstractKet& bob_ket, const ClassicalMessage& m, double beta_b) {
  return bob_apply(bob_ket, m, beta_b).normalized();
}

StateVector bob_correct(const StateVector& bob_ket, const ClassicalMessage& m, double beta_b,
                        int cutoff, double omega) {
  StateVector out = bob_operator(m, beta_b, cutoff, omega) * bob_ket;
  const double n = out.norm();
  if (n > 0.0) out /= n;
  return out;
}

std::vector<TeleportOutcome> run_teleport(Complex a0, Complex a1, const SourceSpec& source,
                                          const ChannelSpec& channel,
                                          const TeleportOptions& options) {
  validate_protocol(source, channel);
  if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > 1e-10) {
    throw ContractError("run_teleport: |a0|^2 + |a1|^2 must equal 1");
  }

  std::vector<ClassicalMessage> branches = all_messages();
  if (options.branch) branches = {*options.branch};

  const AbstractKet state = source_ket(a0, a1, source).tensor(build_channel(channel));
  const AbstractKet target = bob_target(a0, a1, channel);
  std::vector<TeleportOutcome> outcomes;

  if (options.engine == Engine::Abstract) {
    for (const auto& branch : branches) {
      TeleportOutcome o;
      o.engine = Engine::Abstract;
      o.branch = branch;
      o.message = options.override_message.value_or(branch);
      const auto proj = alice_measure(state, bell_basis(branch.family, branch.sign, source, channel));
      o.probability = proj.probability;
      o.bob_abstract = bob_correct(proj.bob_ket, o.message, channel.beta_b);
      o.fidelity = o.bob_abstract.empty() ? 0.0 : std::norm(target.inner(o.bob_abstract));
      outcomes.push_back(std::move(o));
    }
    return outcomes;
  }

  const int n = options.cutoff;
  if (static_cast<Index>(n + 1) * (n + 1) > options.max_dim) {
    throw DimensionError("run_teleport: cutoff exceeds the per-party dimension limit");
  }
  const StateVector target_vec = realize(target, n, options.omega);
  std::optional<StateVector> source_temp_target;
  double tail = tail_for_beta(channel.beta_b, options.omega, n);
  if (source.kind == SourceSpec::Kind::Thermofield) {
    AbstractKet at_source;
    at_source.add({ModeLabel::thermo(Party::B, 0, source.beta)}, a0);
    at_source.add({ModeLabel::thermo(Party::B, 1, source.beta)}, a1);
    source_temp_target = realize(at_source, n, options.omega);
    tail = std::max({tail, tail_for_beta(source.beta, options.omega, n),
                     tail_for_beta(channel.beta_c, options.omega, n)});
  }

  for (const auto& branch : branches) {
    TeleportOutcome o;
    o.engine = Engine::Numeric;
    o.branch = branch;
    o.message = options.override_message.value_or(branch);
    o.tail_mass = tail;
    const auto proj = alice_measure_factored(
        state, bell_basis(branch.family, branch.sign, source, channel), n, options.omega);
    o.probability = proj.probability;
    o.bob_numeric = bob_correct(proj.bob_ket, o.message, channel.beta_b, n, options.omega);
    const bool empty = o.bob_numeric.norm() == 0.0;
    o.fidelity = empty ? 0.0 : std::norm(target_vec.dot(o.bob_numeric));
    if (source_temp_target && !empty) {
      o.source_temperature_fidelity = std::norm(source_temp_target->dot(o.bob_numeric));
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace tfd
