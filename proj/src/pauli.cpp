// Copyright 2026 The symqite authors
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

#include "symqite/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace symqite {

namespace {

constexpr uint32_t kMaxQubits = 16;

// i-power exponent of the single-letter product a*b (row a, column b).
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},  // I*
    {0, 0, 1, 3},  // X*: XY=+iZ, XZ=-iY
    {0, 3, 0, 1},  // Y*: YX=-iZ, YZ=+iX
    {0, 1, 3, 0},  // Z*: ZX=+iY, ZY=-iX
};

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::string format_coeff(cplx c) {
  char buf[64];
  if (std::abs(c.imag()) < 1e-14) {
    std::snprintf(buf, sizeof buf, "%.12g", c.real());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", c.real(), c.imag());
  return buf;
}

}  // namespace

char letter_char(Letter l) { return "IXYZ"[static_cast<int>(l)]; }

PauliString::PauliString(uint32_t n) : n_(n), code_(0) {
  if (n > kMaxQubits) throw std::invalid_argument("PauliString: too many qubits");
}

PauliString PauliString::from_code(uint32_t n, uint64_t code) {
  PauliString p(n);
  if (n < 32 && code >> (2 * n))
    throw std::invalid_argument("PauliString: code out of range");
  p.code_ = code;
  return p;
}

PauliString PauliString::from_text(std::string_view text) {
  PauliString p(static_cast<uint32_t>(text.size()));
  for (uint32_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': p.code_ |= uint64_t{1} << p.shift(q); break;
      case 'Y': p.code_ |= uint64_t{2} << p.shift(q); break;
      case 'Z': p.code_ |= uint64_t{3} << p.shift(q); break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" +
                                    std::string(1, text[q]) + "'");
    }
  }
  return p;
}

Letter PauliString::letter(uint32_t q) const {
  if (q >= n_) throw std::out_of_range("PauliString: qubit index");
  return static_cast<Letter>((code_ >> shift(q)) & 3u);
}

PauliString PauliString::with_letter(uint32_t q, Letter l) const {
  if (q >= n_) throw std::out_of_range("PauliString: qubit index");
  PauliString p = *this;
  p.code_ &= ~(uint64_t{3} << shift(q));
  p.code_ |= uint64_t{static_cast<uint8_t>(l)} << shift(q);
  return p;
}

uint32_t PauliString::weight() const {
  uint32_t w = 0;
  for (uint32_t q = 0; q < n_; ++q)
    if (letter(q) != Letter::I) ++w;
  return w;
}

uint32_t PauliString::y_count() const {
  uint32_t c = 0;
  for (uint32_t q = 0; q < n_; ++q)
    if (letter(q) == Letter::Y) ++c;
  return c;
}

std::string PauliString::text() const {
  std::string s(n_, 'I');
  for (uint32_t q = 0; q < n_; ++q) s[q] = letter_char(letter(q));
  return s;
}

uint64_t PauliString::x_mask() const {
  uint64_t m = 0;
  for (uint32_t q = 0; q < n_; ++q) {
    Letter l = letter(q);
    if (l == Letter::X || l == Letter::Y) m |= uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

uint64_t PauliString::yz_mask() const {
  uint64_t m = 0;
  for (uint32_t q = 0; q < n_; ++q) {
    Letter l = letter(q);
    if (l == Letter::Y || l == Letter::Z) m |= uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

cplx PauliString::basis_phase(uint64_t s) const {
  // X|b> = |1-b>, Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
  int k = static_cast<int>(y_count() & 3u);
  int sign = std::popcount(s & yz_mask()) & 1 ? 2 : 0;
  return kIPow[(k + sign) & 3];
}

std::pair<cplx, PauliString> multiply(const PauliString& p,
                                      const PauliString& q) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument("multiply: length mismatch");
  uint32_t n = p.n_qubits();
  PauliString r = PauliString::from_code(n, p.code() ^ q.code());
  int exp = 0;
  for (uint32_t i = 0; i < n; ++i)
    exp += kPhaseExp[static_cast<int>(p.letter(i))][static_cast<int>(q.letter(i))];
  return {kIPow[exp & 3], r};
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument("commutes: length mismatch");
  uint32_t anti = 0;
  for (uint32_t i = 0; i < p.n_qubits(); ++i) {
    Letter a = p.letter(i), b = q.letter(i);
    if (a != Letter::I && b != Letter::I && a != b) ++anti;
  }
  return (anti & 1u) == 0;
}

std::vector<PauliString> full_basis(uint32_t n) {
  if (n > 8) throw std::invalid_argument("full_basis: too many qubits");
  std::vector<PauliString> out;
  uint64_t count = uint64_t{1} << (2 * n);
  out.reserve(count);
  for (uint64_t code = 0; code < count; ++code)
    out.push_back(PauliString::from_code(n, code));
  return out;
}

PauliSum PauliSum::zero(uint32_t n) {
  PauliSum s;
  s.n_ = n;
  return s;
}

PauliSum::PauliSum(uint32_t n, std::vector<Term> terms)
    : n_(n), terms_(std::move(terms)) {
  for (const auto& [c, s] : terms_)
    if (s.n_qubits() != n_)
      throw std::invalid_argument("PauliSum: string length mismatch");
  canonicalize();
}

PauliSum::PauliSum(const PauliString& s, cplx coeff)
    : n_(s.n_qubits()), terms_{{coeff, s}} {
  canonicalize();
}

void PauliSum::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.second < b.second; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().second == t.second)
      merged.back().first += t.first;
    else
      merged.push_back(t);
  }
  std::erase_if(merged,
                [](const Term& t) { return std::abs(t.first) < kCoeffPruneTol; });
  terms_ = std::move(merged);
}

cplx PauliSum::coefficient(const PauliString& s) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), s,
      [](const Term& t, const PauliString& key) { return t.second < key; });
  if (it != terms_.end() && it->second == s) return it->first;
  return 0.0;
}

bool PauliSum::is_real(double tol) const {
  for (const auto& [c, s] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (terms_.empty() && n_ == 0) n_ = other.n_;
  if (n_ != other.n_ && !other.terms_.empty())
    throw std::invalid_argument("PauliSum: qubit count mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  PauliSum neg = other;
  neg *= -1.0;
  return *this += neg;
}

PauliSum& PauliSum::operator*=(cplx scale) {
  for (auto& t : terms_) t.first *= scale;
  canonicalize();
  return *this;
}

std::string PauliSum::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, s] : terms_) {
    bool negative_real = std::abs(c.imag()) < 1e-14 && c.real() < 0;
    cplx mag = negative_real ? -c : c;
    std::string coeff;
    if (std::abs(mag - cplx{1.0, 0.0}) > 1e-12) coeff = format_coeff(mag) + "*";
    if (first) {
      out += (negative_real ? "-" : "") + coeff + s.text();
      first = false;
    } else {
      out += (negative_real ? " - " : " + ") + coeff + s.text();
    }
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::vector<Term> terms;
  uint32_t n = 0;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  double sign = 1.0;
  skip_ws();
  while (i < text.size()) {
    if (text[i] == '+') { sign = 1.0; ++i; skip_ws(); continue; }
    if (text[i] == '-') { sign = -1.0; ++i; skip_ws(); continue; }
    // optional numeric coefficient followed by '*'
    cplx coeff = 1.0;
    size_t j = i;
    while (j < text.size() && text[j] != '*' && text[j] != ' ' &&
           text[j] != '+' && text[j] != '-')
      ++j;
    if (j < text.size() && text[j] == '*') {
      coeff = std::stod(std::string(text.substr(i, j - i)));
      i = j + 1;
    }
    size_t k = i;
    while (k < text.size() && (text[k] == 'I' || text[k] == 'X' ||
                               text[k] == 'Y' || text[k] == 'Z'))
      ++k;
    if (k == i) throw std::invalid_argument("PauliSum: expected Pauli string");
    PauliString s = PauliString::from_text(text.substr(i, k - i));
    if (terms.empty())
      n = s.n_qubits();
    terms.emplace_back(sign * coeff, s);
    sign = 1.0;
    i = k;
    skip_ws();
  }
  if (terms.empty()) throw std::invalid_argument("PauliSum: empty text");
  return PauliSum(n, std::move(terms));
}

Eigen::MatrixXcd dense_matrix(const PauliString& s, uint32_t cap) {
  if (s.n_qubits() > cap)
    throw std::invalid_argument("dense_matrix: qubit cap exceeded");
  const uint64_t dim = uint64_t{1} << s.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const uint64_t xm = s.x_mask();
  for (uint64_t col = 0; col < dim; ++col)
    m(col ^ xm, col) = s.basis_phase(col);
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& s, uint32_t cap) {
  if (s.n_qubits() > cap)
    throw std::invalid_argument("dense_matrix: qubit cap exceeded");
  const uint64_t dim = uint64_t{1} << s.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [c, str] : s.terms()) {
    const uint64_t xm = str.x_mask();
    for (uint64_t col = 0; col < dim; ++col)
      m(col ^ xm, col) += c * str.basis_phase(col);
  }
  return m;
}

PauliSum decompose(const Eigen::MatrixXcd& op, uint32_t cap, double prune) {
  const uint64_t dim = static_cast<uint64_t>(op.rows());
  if (dim == 0 || op.cols() != op.rows() || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("decompose: dimension not a power of two");
  uint32_t n = static_cast<uint32_t>(std::countr_zero(dim));
  if (n > cap) throw std::invalid_argument("decompose: qubit cap exceeded");
  if (!op.allFinite()) throw std::invalid_argument("decompose: non-finite input");

  std::vector<PauliSum::Term> terms;
  for (const PauliString& s : full_basis(n)) {
    // tr(sigma * op) via the single nonzero of sigma per column.
    const uint64_t xm = s.x_mask();
    cplx tr = 0.0;
    for (uint64_t col = 0; col < dim; ++col)
      tr += s.basis_phase(col) * op(col, col ^ xm);
    cplx c = tr / static_cast<double>(dim);
    if (std::abs(c) >= prune) terms.emplace_back(c, s);
  }
  return PauliSum(n, std::move(terms));
}

}  // namespace symqite
