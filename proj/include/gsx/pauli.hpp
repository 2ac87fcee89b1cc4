#ifndef GSX_PAULI_HPP
#define GSX_PAULI_HPP

#include <cstdint>
#include <string>

#include "gsx/graph.hpp"

namespace gsx {

/// n-qubit Pauli operator i^phase * P_1 ... P_n in symplectic form.
///
/// Qubit q carries X if only xmask bit q is set, Z if only zmask bit q is set,
/// and Y if both are. The phase counts factors of i relative to that letter
/// string, so Y itself has phase 0.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n, std::uint32_t xmask, std::uint32_t zmask, int phase = 0)
      : n_(n), x_(xmask), z_(zmask), phase_(phase & 3) {}

  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  /// Parses "+XZIY", "-ZYIIIY", "XX", or "+iXY" (leftmost letter is qubit 1).
  static PauliString parse(const std::string& text);

  int n() const { return n_; }
  std::uint32_t xmask() const { return x_; }
  std::uint32_t zmask() const { return z_; }
  int phase() const { return phase_; }
  NodeSet support() const { return NodeSet(x_ | z_); }
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_hermitian() const { return (phase_ & 1) == 0; }

  /// +1 or -1; throws if the phase is imaginary.
  int sign() const;
  /// One of 'I', 'X', 'Y', 'Z'.
  char letter(int q) const;

  PauliString operator*(const PauliString& o) const;
  PauliString& operator*=(const PauliString& o) { return *this = *this * o; }
  PauliString negated() const { return PauliString(n_, x_, z_, phase_ + 2); }

  bool commutes_with(const PauliString& o) const;

  bool operator==(const PauliString&) const = default;
  bool operator<(const PauliString& o) const;

  /// "+XZIY"-style rendering, letters in qubit order 1..n.
  std::string str() const;
  /// Letters only; the phase is not part of the key.
  std::uint64_t letters_key() const { return std::uint64_t{x_} << 32 | z_; }

 private:
  int n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  int phase_ = 0;
};

}  // namespace gsx

#endif  // GSX_PAULI_HPP
