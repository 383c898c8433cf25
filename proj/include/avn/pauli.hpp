#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "avn/errors.hpp"
#include "avn/gf2.hpp"

namespace avn {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

inline char letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
    default: return 'I';
  }
}

inline PauliLetter letter_from_bits(bool x, bool z) {
  if (x) return z ? PauliLetter::Y : PauliLetter::X;
  return z ? PauliLetter::Z : PauliLetter::I;
}

/// n-qubit Pauli operator i^phase * P_1 (x) ... (x) P_n in symplectic form.
///
/// A qubit with both bits set carries the Hermitian Y, so the phase only
/// tracks the bookkeeping of products (Y = iXZ).
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t num_qubits) : x_(num_qubits), z_(num_qubits) {}
  PauliOperator(Bitvec x, Bitvec z, int phase = 0) : x_(x), z_(z), phase_(normalize(phase)) {
    if (x_.size() != z_.size()) throw ContractViolation("PauliOperator: x/z length mismatch");
  }

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }

  // Parses "-X1 X2 X3 Z4" style strings (1-based qubits; optional sign or
  // i prefix; omitted qubits are identity).
  static PauliOperator parse(std::size_t n, std::string_view text);

  std::size_t num_qubits() const noexcept { return x_.size(); }
  const Bitvec& x() const noexcept { return x_; }
  const Bitvec& z() const noexcept { return z_; }
  int phase() const noexcept { return phase_; }

  PauliLetter letter(std::size_t q) const { return letter_from_bits(x_.test(q), z_.test(q)); }

  bool is_identity_on(const Bitvec& qubits) const { return (x_ & qubits).none() && (z_ & qubits).none(); }

  PauliOperator negated() const { return PauliOperator(x_, z_, phase_ + 2); }

  // Pauli parts equal, phase ignored.
  bool same_support(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  // "-X1 X2 X3 Z4"; identity letters are omitted, the identity itself is "I".
  std::string to_string() const;

 private:
  static int normalize(int phase) { return ((phase % 4) + 4) % 4; }

  Bitvec x_;
  Bitvec z_;
  int phase_ = 0;
};

// Exponent of i picked up by the single-qubit product P1 * P2 (Hermitian Y).
inline int product_phase(bool x1, bool z1, bool x2, bool z2) {
  if (x1 && z1) return int(z2) - int(x2);             // Y * .
  if (x1) return int(z2) * (2 * int(x2) - 1);         // X * .
  if (z1) return int(x2) * (1 - 2 * int(z2));         // Z * .
  return 0;
}

inline PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw ContractViolation("pauli_multiply: operators act on " + std::to_string(p.num_qubits()) + " and " +
                            std::to_string(q.num_qubits()) + " qubits");
  }
  int phase = p.phase() + q.phase();
  const std::uint64_t active = (p.x().word() | p.z().word()) & (q.x().word() | q.z().word());
  for (std::uint64_t w = active; w != 0; w &= w - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(w));
    phase += product_phase(p.x().test(i), p.z().test(i), q.x().test(i), q.z().test(i));
  }
  return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z(), phase);
}

/// Overall sign of an operator with real phase: +1 or -1.
inline int sign_of(const PauliOperator& p) {
  switch (p.phase()) {
    case 0: return +1;
    case 2: return -1;
    default:
      throw ContractViolation("sign_of: non-Hermitian-sign operator (phase i^" + std::to_string(p.phase()) + ") " +
                              p.to_string());
  }
}

inline std::string PauliOperator::to_string() const {
  std::string out;
  switch (phase_) {
    case 1: out = "i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
    default: break;
  }
  bool first = true;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    const auto l = letter(q);
    if (l == PauliLetter::I) continue;
    if (!first) out += ' ';
    out += letter_char(l);
    out += std::to_string(q + 1);
    first = false;
  }
  if (first) out += 'I';
  return out;
}

inline PauliOperator PauliOperator::parse(std::size_t n, std::string_view text) {
  PauliOperator p(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  int phase = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  skip_ws();
  if (pos < text.size() && text[pos] == 'I' && (pos + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing text in Pauli string", pos);
    return PauliOperator(p.x_, p.z_, phase);
  }
  while (pos < text.size()) {
    const char c = text[pos];
    if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') throw ParseError("expected a Pauli letter", pos);
    const std::size_t at = pos++;
    std::size_t q = 0;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a qubit index after Pauli letter", pos);
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) q = q * 10 + std::size_t(text[pos++] - '0');
    if (q < 1 || q > n) throw ParseError("qubit index out of range", at + 1);
    --q;
    if (p.x_.test(q) || p.z_.test(q)) throw ParseError("qubit listed twice", at);
    if (c == 'X' || c == 'Y') p.x_.set(q);
    if (c == 'Z' || c == 'Y') p.z_.set(q);
    skip_ws();
  }
  return PauliOperator(p.x_, p.z_, phase);
}

}  // namespace avn
