#include "gsx/pauli.hpp"

#include <bit>
#include <tuple>

namespace gsx {

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const int n = static_cast<int>(text.size() - pos);
  if (n > kMaxNodes) throw Error("Pauli string longer than 32 qubits");
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint32_t bit = std::uint32_t{1} << q;
    switch (text[pos + static_cast<std::size_t>(q)]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw Error("bad Pauli letter in '" + text + "'");
    }
  }
  return PauliString(n, x, z, phase);
}

int PauliString::sign() const {
  if (!is_hermitian()) throw Error("Pauli string " + str() + " has an imaginary phase");
  return phase_ == 0 ? 1 : -1;
}

char PauliString::letter(int q) const {
  const bool x = (x_ >> q) & 1u;
  const bool z = (z_ >> q) & 1u;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

PauliString PauliString::operator*(const PauliString& o) const {
  // With P(x,z) = i^{xz} X^x Z^z per qubit, moving Z^{z1} past X^{x2} costs
  // (-1)^{z1 x2}; the remaining powers of i re-normalize the Y factors.
  const std::uint32_t x3 = x_ ^ o.x_;
  const std::uint32_t z3 = z_ ^ o.z_;
  int e = std::popcount(x_ & z_) + std::popcount(o.x_ & o.z_) + 2 * std::popcount(z_ & o.x_) -
          std::popcount(x3 & z3);
  e = ((e % 4) + 4) % 4;
  return PauliString(n_ > o.n_ ? n_ : o.n_, x3, z3, phase_ + o.phase_ + e);
}

bool PauliString::commutes_with(const PauliString& o) const {
  return ((std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) & 1) == 0;
}

bool PauliString::operator<(const PauliString& o) const {
  return std::tie(n_, x_, z_, phase_) < std::tie(o.n_, o.x_, o.z_, o.phase_);
}

std::string PauliString::str() const {
  std::string out;
  out += (phase_ & 2) ? '-' : '+';
  if (phase_ & 1) out += 'i';
  for (int q = 0; q < n_; ++q) out += letter(q);
  return out;
}

}  // namespace gsx
