#include "tfd/abstract_ket.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "tfd/errors.hpp"
#include "tfd/thermo.hpp"

namespace tfd {

namespace {

int mod2(int j) { return ((j % 2) + 2) % 2; }

char party_char(Party p) {
  switch (p) {
    case Party::A: return 'A';
    case Party::B: return 'B';
    case Party::C: return 'C';
  }
  return '?';
}

void sort_by_party(LabelTuple& labels) {
  std::stable_sort(labels.begin(), labels.end(),
                   [](const ModeLabel& a, const ModeLabel& b) { return a.party < b.party; });
  for (std::size_t k = 1; k < labels.size(); ++k) {
    if (labels[k].party == labels[k - 1].party) {
      throw DimensionError("AbstractKet: party appears twice in a label tuple");
    }
  }
}

}  // namespace

ModeLabel ModeLabel::thermo(Party party, int j, double beta) {
  return ModeLabel{party, LabelKind::Thermo, mod2(j), 0, beta};
}

ModeLabel ModeLabel::pair(Party party, int j, int tilde) {
  return ModeLabel{party, LabelKind::Pair, mod2(j), mod2(tilde), 0.0};
}

bool operator<(const ModeLabel& a, const ModeLabel& b) {
  return std::tie(a.party, a.kind, a.j, a.tilde, a.beta) <
         std::tie(b.party, b.kind, b.j, b.tilde, b.beta);
}

std::string ModeLabel::to_string() const {
  std::ostringstream os;
  if (kind == LabelKind::Thermo) {
    os << '|' << j << "(b=" << beta << ")>_" << party_char(party);
  } else {
    os << '|' << j << ',' << tilde << "~>_" << party_char(party);
  }
  return os.str();
}

AbstractKet::AbstractKet(LabelTuple labels, Complex amplitude) {
  add(std::move(labels), amplitude);
}

void AbstractKet::add(LabelTuple labels, Complex amplitude) {
  sort_by_party(labels);
  auto [it, inserted] = terms_.try_emplace(std::move(labels), amplitude);
  if (!inserted) it->second += amplitude;
  if (std::abs(it->second) < kPruneBelow) terms_.erase(it);
}

AbstractKet& AbstractKet::operator+=(const AbstractKet& other) {
  for (const auto& [labels, amp] : other.terms_) add(labels, amp);
  return *this;
}

AbstractKet operator*(Complex s, const AbstractKet& k) {
  AbstractKet out;
  for (const auto& [labels, amp] : k.terms_) out.add(labels, s * amp);
  return out;
}

Complex AbstractKet::inner(const AbstractKet& other) const {
  Complex acc{0.0, 0.0};
  for (const auto& [labels, amp] : terms_) {
    if (auto it = other.terms_.find(labels); it != other.terms_.end()) {
      acc += std::conj(amp) * it->second;
    }
  }
  return acc;
}

double AbstractKet::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

AbstractKet AbstractKet::normalized() const {
  const double n = norm();
  if (n == 0.0) return {};
  return Complex(1.0 / n, 0.0) * *this;
}

AbstractKet AbstractKet::tensor(const AbstractKet& other) const {
  AbstractKet out;
  for (const auto& [la, aa] : terms_) {
    for (const auto& [lb, ab] : other.terms_) {
      LabelTuple joined = la;
      joined.insert(joined.end(), lb.begin(), lb.end());
      sort_by_party(joined);
      for (std::size_t k = 1; k < joined.size(); ++k) {
        if (joined[k].party == joined[k - 1].party) {
          throw DimensionError("AbstractKet::tensor: operands share a party");
        }
      }
      out.add(std::move(joined), aa * ab);
    }
  }
  return out;
}

AbstractKet AbstractKet::contract(const AbstractKet& bra) const {
  AbstractKet out;
  for (const auto& [bl, ba] : bra.terms_) {
    for (const auto& [kl, ka] : terms_) {
      LabelTuple rest;
      std::size_t matched = 0;
      bool ok = true;
      for (const auto& label : kl) {
        auto hit = std::find_if(bl.begin(), bl.end(),
                                [&](const ModeLabel& b) { return b.party == label.party; });
        if (hit == bl.end()) {
          rest.push_back(label);
        } else if (*hit == label) {
          ++matched;
        } else {
          ok = false;
          break;
        }
      }
      if (ok && matched == bl.size()) out.add(std::move(rest), std::conj(ba) * ka);
    }
  }
  return out;
}

Complex AbstractKet::amplitude(const LabelTuple& labels) const {
  LabelTuple key = labels;
  sort_by_party(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

std::string AbstractKet::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [labels, amp] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)";
    for (const auto& l : labels) os << l.to_string();
  }
  return first ? "0" : os.str();
}

StateVector realize_mode(const ModeLabel& label, int cutoff, double omega) {
  const Index side = cutoff + 1;
  if (label.kind == LabelKind::Pair) {
    return basis_ket(side * side, label.j * side + label.tilde);
  }
  const ThermalParams params = bogoliubov_params(label.beta, omega);
  return label.j == 0 ? thermal_vacuum(params, cutoff).state
                      : excited_thermofield(params, cutoff);
}

StateVector realize(const AbstractKet& ket, int cutoff, double omega, Index max_dim) {
  if (ket.empty()) throw DimensionError("realize: empty ket has no fixed party layout");
  std::map<ModeLabel, StateVector> cache;
  auto mode = [&](const ModeLabel& l) -> const StateVector& {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, realize_mode(l, cutoff, omega)).first;
    return it->second;
  };

  std::vector<Party> layout;
  for (const auto& l : ket.terms().begin()->first) layout.push_back(l.party);

  StateVector out;
  for (const auto& [labels, amp] : ket.terms()) {
    if (labels.size() != layout.size() ||
        !std::equal(labels.begin(), labels.end(), layout.begin(),
                    [](const ModeLabel& l, Party p) { return l.party == p; })) {
      throw DimensionError("realize: terms live on different parties");
    }
    StateVector term = mode(labels.front());
    for (std::size_t k = 1; k < labels.size(); ++k) {
      term = tensor_product(term, mode(labels[k]), max_dim);
    }
    if (out.size() == 0) out = StateVector::Zero(term.size());
    out += amp * term;
  }
  return out;
}

}  // namespace tfd
