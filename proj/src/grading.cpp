// grading.cpp
#include "bu2cc/grading.hpp"

#include <algorithm>
#include <sstream>

namespace bu2cc {

Grading::Grading(int n_omegas) : m_(static_cast<size_t>(n_omegas), 0) {
  if (n_omegas < 1) throw Error("Grading: need at least one O-generator");
}

Grading::Grading(int a, int b, std::vector<int> m)
    : a_(a), b_(b), m_(std::move(m)) {
  if (m_.empty()) throw Error("Grading: need at least one O-generator");
  canonicalize();
}

Grading Grading::ro2(RO2 v, int n_omegas) {
  Grading r(n_omegas);
  r.a_ = v.a;
  r.b_ = v.b;
  return r;
}

Grading Grading::omega(int i, int n_omegas) {
  Grading r(n_omegas);
  if (i < 0 || i >= n_omegas) throw Error("Grading::omega: index out of range");
  r.m_[static_cast<size_t>(i)] = 1;
  r.canonicalize();
  return r;
}

// Adding k * (O_0 + ... + O_last - (2 sigma - 2)) = k * (2, -2, -1, ..., -1)
// to the coordinate vector is the identity; pick k = m_last to zero the last
// O-coordinate.
void Grading::canonicalize() {
  int k = m_.back();
  if (k == 0) return;
  for (int& v : m_) v -= k;
  a_ -= 2 * k;
  b_ += 2 * k;
}

Grading& Grading::operator+=(const Grading& o) {
  if (o.m_.size() != m_.size()) throw Error("Grading: mixed grading groups");
  a_ += o.a_;
  b_ += o.b_;
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  canonicalize();
  return *this;
}

Grading& Grading::operator-=(const Grading& o) {
  if (o.m_.size() != m_.size()) throw Error("Grading: mixed grading groups");
  a_ -= o.a_;
  b_ -= o.b_;
  for (size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  canonicalize();
  return *this;
}

Grading Grading::operator-() const {
  Grading r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  for (int& v : r.m_) v = -v;
  r.canonicalize();
  return r;
}

Grading Grading::operator*(int k) const {
  Grading r(*this);
  r.a_ *= k;
  r.b_ *= k;
  for (int& v : r.m_) v *= k;
  r.canonicalize();
  return r;
}

Grading& Grading::operator+=(RO2 v) {
  a_ += v.a;
  b_ += v.b;
  return *this;
}

std::vector<int> Grading::phi_degree() const {
  std::vector<int> r;
  r.reserve(m_.size());
  for (int mi : m_) r.push_back(a_ - 2 * mi);
  return r;
}

bool Grading::is_ro2() const {
  return std::all_of(m_.begin(), m_.end(), [](int v) { return v == 0; });
}

RO2 Grading::ro2_part() const {
  if (!is_ro2()) throw Error("Grading: not an RO(C2) class: " + str());
  return {a_, b_};
}

std::string Grading::str() const {
  // Display representative: O-coefficients >= 0 with min 0.
  int k = *std::min_element(m_.begin(), m_.end());
  int da = a_ - 2 * k;
  int db = b_ + 2 * k;
  std::ostringstream os;
  bool first = true;
  auto piece = [&](int v, const std::string& sym) {
    if (v == 0) return;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    int av = std::abs(v);
    if (sym.empty()) {
      os << av;
    } else {
      if (av != 1) os << av << "*";
      os << sym;
    }
  };
  piece(da, "");
  piece(db, "s");
  for (size_t i = 0; i < m_.size(); ++i)
    piece(m_[i] - k, "O" + std::to_string(i));
  if (first) return "0";
  return os.str();
}

}  // namespace bu2cc
