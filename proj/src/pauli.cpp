// Copyright 2026 The cwsmod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cwsmod/pauli.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "cwsmod/errors.hpp"

namespace cwsmod {

PauliOperator::PauliOperator(Residue phase_exponent, ZdVector z, ZdVector x)
    : phase_(z.modulus().reduce(phase_exponent)), z_(std::move(z)), x_(std::move(x)) {
  if (!(z_.modulus() == x_.modulus())) throw DimensionMismatch("z and x use different moduli");
  if (z_.size() != x_.size()) throw DimensionMismatch("z and x have different lengths");
  if (z_.size() == 0) throw std::invalid_argument("a Pauli operator needs at least one qudit");
}

PauliOperator PauliOperator::identity(Modulus modulus, std::size_t num_qudits) {
  return PauliOperator(0, ZdVector(modulus, num_qudits), ZdVector(modulus, num_qudits));
}

PauliOperator PauliOperator::from_symplectic(const ZdVector& zx, Residue phase_exponent) {
  if (zx.size() % 2 != 0) throw DimensionMismatch("symplectic vector has odd length");
  const std::size_t n = zx.size() / 2;
  return PauliOperator(phase_exponent, slice(zx, 0, n), slice(zx, n, n));
}

std::size_t PauliOperator::weight() const noexcept {
  std::size_t w = 0;
  for (std::size_t i = 0; i < num_qudits(); ++i) w += (z_[i] != 0 || x_[i] != 0);
  return w;
}

PauliOperator PauliOperator::with_phase(Residue phase_exponent) const {
  return PauliOperator(phase_exponent, z_, x_);
}

std::strong_ordering operator<=>(const PauliOperator& a, const PauliOperator& b) {
  if (auto c = a.z_ <=> b.z_; c != 0) return c;
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.phase_ <=> b.phase_;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (!(p.modulus() == q.modulus()) || p.num_qudits() != q.num_qudits()) {
    throw DimensionMismatch("Pauli operators act on different spaces");
  }
  const Modulus& m = p.modulus();
  const Residue phase = m.sub(m.add(p.phase_exponent(), q.phase_exponent()), dot(p.x(), q.z()));
  return PauliOperator(phase, p.z() + q.z(), p.x() + q.x());
}

PauliOperator adjoint(const PauliOperator& p) {
  const Modulus& m = p.modulus();
  // (q^k Z^z X^x)^dag = q^{-k} X^{-x} Z^{-z} = q^{-k - <z,x>} Z^{-z} X^{-x}.
  return PauliOperator(m.sub(m.neg(p.phase_exponent()), dot(p.z(), p.x())), -p.z(), -p.x());
}

PauliOperator power(const PauliOperator& p, std::uint64_t k) {
  PauliOperator result = PauliOperator::identity(p.modulus(), p.num_qudits());
  PauliOperator base = p;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

PauliOrder order(const PauliOperator& p) {
  const std::int64_t d = p.modulus().value();
  std::int64_t g = d;
  for (Residue r : p.z().entries()) g = std::gcd(g, r);
  for (Residue r : p.x().entries()) g = std::gcd(g, r);
  const auto o = static_cast<std::uint64_t>(d / g);
  return {o, power(p, o).phase_exponent()};
}

ZdVector r_map(const PauliOperator& p) { return concat(p.z(), p.x()); }

Residue symplectic_product(const ZdVector& u, const ZdVector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("symplectic vectors of unequal length");
  if (u.size() % 2 != 0) throw DimensionMismatch("symplectic vector has odd length");
  if (!(u.modulus() == v.modulus())) throw DimensionMismatch("symplectic vectors use different moduli");
  const Modulus& m = u.modulus();
  const std::size_t n = u.size() / 2;
  Residue acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = m.add(acc, m.mul(u[i], v[n + i]));
    acc = m.sub(acc, m.mul(u[n + i], v[i]));
  }
  return acc;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (!(p.modulus() == q.modulus()) || p.num_qudits() != q.num_qudits()) {
    throw DimensionMismatch("Pauli operators act on different spaces");
  }
  return symplectic_product(r_map(p), r_map(q)) == 0;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class PauliParser {
 public:
  PauliParser(std::string_view text, Modulus modulus, bool strict)
      : text_(text), modulus_(modulus), strict_(strict) {}

  PauliOperator parse() {
    Residue phase = 0;
    if (peek() == 'w') {
      ++pos_;
      phase = exponent(/*required=*/true, "phase");
      expect(':');
    }
    std::vector<std::int64_t> z, x;
    for (;;) {
      token(z, x, phase);
      if (at_end()) break;
      expect('.');
    }
    return PauliOperator(phase, ZdVector(modulus_, std::span<const std::int64_t>(z)),
                         ZdVector(modulus_, std::span<const std::int64_t>(x)));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " but reached end of input" : std::string(" but found '") + peek() + "'"));
    }
    ++pos_;
  }

  std::int64_t exponent(bool required, const char* what) {
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      if (value > (std::int64_t{1} << 40)) fail(std::string(what) + " exponent too large");
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) {
      if (required) fail(std::string("expected digits for ") + what);
      return 1;
    }
    if (strict_ && value >= modulus_.value()) {
      pos_ = start;
      fail(std::string(what) + " exponent " + std::to_string(value) + " is not below d = " +
           std::to_string(modulus_.value()));
    }
    return value;
  }

  void token(std::vector<std::int64_t>& z, std::vector<std::int64_t>& x, Residue& phase) {
    std::int64_t zexp = 0, xexp = 0;
    switch (peek()) {
      case 'I':
        ++pos_;
        break;
      case 'Z':
        ++pos_;
        zexp = exponent(false, "Z");
        if (peek() == 'X') {
          ++pos_;
          xexp = exponent(false, "X");
        }
        break;
      case 'X':
        ++pos_;
        xexp = exponent(false, "X");
        if (peek() == 'Z') {
          ++pos_;
          zexp = exponent(false, "Z");
          // X^x Z^z = q^{-xz} Z^z X^x
          phase = modulus_.sub(phase, modulus_.mul(modulus_.reduce(xexp), modulus_.reduce(zexp)));
        }
        break;
      default:
        fail(at_end() ? "expected a qudit token but reached end of input"
                      : std::string("unexpected character '") + peek() + "'");
    }
    z.push_back(zexp);
    x.push_back(xexp);
  }

  std::string_view text_;
  Modulus modulus_;
  bool strict_;
  std::size_t pos_ = 0;
};

}  // namespace

PauliOperator parse_pauli(std::string_view text, Modulus modulus, bool strict) {
  return PauliParser(text, modulus, strict).parse();
}

std::string format_pauli(const PauliOperator& p) {
  std::ostringstream os;
  if (p.phase_exponent() != 0) os << 'w' << p.phase_exponent() << ':';
  for (std::size_t i = 0; i < p.num_qudits(); ++i) {
    if (i) os << '.';
    if (p.z()[i] == 0 && p.x()[i] == 0) {
      os << 'I';
      continue;
    }
    if (p.z()[i] != 0) os << 'Z' << p.z()[i];
    if (p.x()[i] != 0) os << 'X' << p.x()[i];
  }
  return os.str();
}

}  // namespace cwsmod
