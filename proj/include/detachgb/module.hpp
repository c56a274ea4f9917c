#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detachgb/polynomial.hpp"

namespace detachgb {

/// Element (p_1, ..., p_m) of R^m.
template <FieldElement C>
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(RingPtr<C> ring, std::size_t rank) : comps_(rank, Polynomial<C>(ring)), ring_(ring) {}
  ModuleVector(RingPtr<C> ring, std::vector<Polynomial<C>> comps)
      : comps_(std::move(comps)), ring_(std::move(ring)) {}

  /// c * t * e_position
  static ModuleVector unit(RingPtr<C> ring, std::size_t rank, const ModuleMonomial& s, C c) {
    ModuleVector v(ring, rank);
    v.comps_.at(s.position) = Polynomial<C>::term(ring, std::move(c), s.mono);
    return v;
  }
  static ModuleVector unit(RingPtr<C> ring, std::size_t rank, std::size_t position) {
    auto one = ring->one();
    return unit(ring, rank, {ring->one_monomial(), position}, one);
  }

  std::size_t rank() const { return comps_.size(); }
  const RingPtr<C>& ring() const { return ring_; }
  const Polynomial<C>& operator[](std::size_t j) const { return comps_.at(j); }
  Polynomial<C>& operator[](std::size_t j) { return comps_.at(j); }
  const std::vector<Polynomial<C>>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& p : comps_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// Under POT the leading term lives in the first nonzero component.
  std::optional<std::size_t> leading_position() const {
    for (std::size_t j = 0; j < comps_.size(); ++j)
      if (!comps_[j].is_zero()) return j;
    return std::nullopt;
  }

  ModuleMonomial lpp() const {
    auto j = leading_position();
    if (!j) throw std::domain_error("lpp of the zero module vector");
    return {comps_[*j].lpp(), *j};
  }
  const C& lc() const {
    auto j = leading_position();
    if (!j) throw std::domain_error("lc of the zero module vector");
    return comps_[*j].lc();
  }
  std::pair<C, ModuleMonomial> lm() const { return {lc(), lpp()}; }

  /// this - c * t * v
  ModuleVector sub_scaled(const C& c, const Monomial& t, const ModuleVector& v) const {
    check_rank(v);
    ModuleVector r = *this;
    for (std::size_t j = 0; j < comps_.size(); ++j)
      if (!v.comps_[j].is_zero()) r.comps_[j] = comps_[j].sub_scaled(c, t, v.comps_[j]);
    return r;
  }
  ModuleVector scale_term(const C& c, const Monomial& t) const {
    ModuleVector r = *this;
    for (auto& p : r.comps_) p = p.scale_term(c, t);
    return r;
  }
  /// this + q * v for a polynomial multiplier q.
  ModuleVector add_mul(const Polynomial<C>& q, const ModuleVector& v) const {
    check_rank(v);
    ModuleVector r = *this;
    for (std::size_t j = 0; j < comps_.size(); ++j)
      if (!v.comps_[j].is_zero()) r.comps_[j] += q * v.comps_[j];
    return r;
  }

  friend ModuleVector operator+(const ModuleVector& u, const ModuleVector& v) {
    u.check_rank(v);
    ModuleVector r = u;
    for (std::size_t j = 0; j < r.comps_.size(); ++j) r.comps_[j] += v.comps_[j];
    return r;
  }
  friend ModuleVector operator-(const ModuleVector& u, const ModuleVector& v) {
    u.check_rank(v);
    ModuleVector r = u;
    for (std::size_t j = 0; j < r.comps_.size(); ++j) r.comps_[j] -= v.comps_[j];
    return r;
  }
  friend bool operator==(const ModuleVector& u, const ModuleVector& v) { return u.comps_ == v.comps_; }

 private:
  void check_rank(const ModuleVector& v) const {
    if (v.rank() != rank())
      throw ContextError("module vectors of rank " + std::to_string(rank()) + " and " +
                         std::to_string(v.rank()));
  }

  std::vector<Polynomial<C>> comps_;
  RingPtr<C> ring_;
};

/// u . F = sum_j u_j f_j
template <FieldElement C>
Polynomial<C> modvec_dot(const ModuleVector<C>& u, std::span<const Polynomial<C>> gens) {
  if (u.rank() != gens.size())
    throw ContextError("vector of rank " + std::to_string(u.rank()) + " dotted with " +
                       std::to_string(gens.size()) + " generators");
  Polynomial<C> r(gens.empty() ? u.ring() : gens.front().ring());
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (!u[j].is_zero()) r += u[j] * gens[j];
  return r;
}

template <FieldElement C>
Polynomial<C> modvec_dot(const ModuleVector<C>& u, const std::vector<Polynomial<C>>& gens) {
  return modvec_dot(u, std::span<const Polynomial<C>>(gens));
}

}  // namespace detachgb
