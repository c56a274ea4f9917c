#pragma once

// Signature-based Groebner basis engine with the Syzygy and Rewritten
// criteria. Pairs are processed in increasing signature order; every
// S-polynomial that survives the criteria is F5-reduced and appended to the
// basis (zero results included, they serve as rewriters). On return every
// critical pair of the basis is F5-divisible or F5-rewritable, and the inputs
// f_i^(e_i) carry the m smallest stamps: the two finite conditions that make
// the output a signature-labeled Groebner basis.

#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "detachgb/labeled.hpp"

namespace detachgb {

/// Thrown when an operation needs shadow vectors on an uninstrumented engine.
class UnsupportedMode : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Regularity { non_regular, super_regular, regular };

inline std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::non_regular: return "non-regular";
    case Regularity::super_regular: return "super-regular";
    case Regularity::regular: return "regular";
  }
  return "?";
}

/// (tf, f, tg, g) with tf lpp(f) = tg lpp(g) = lcm, oriented so that
/// tf sig(f) > tg sig(g), or the two are equal and g is the later element.
struct CriticalPair {
  Monomial tf;
  std::size_t f = 0;
  Monomial tg;
  std::size_t g = 0;
  ModuleMonomial pair_sig;
  /// Known without shadows only when the signatures differ (then regular).
  std::optional<Regularity> regularity;
};

enum class PairVerdict { syzygy_skip, rewrite_skip, reduced_to_zero, new_element };

inline std::string_view to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::syzygy_skip: return "syzygy-skip";
    case PairVerdict::rewrite_skip: return "rewrite-skip";
    case PairVerdict::reduced_to_zero: return "reduced-to-zero";
    case PairVerdict::new_element: return "new-element";
  }
  return "?";
}

struct TraceEntry {
  ModuleMonomial pair_sig;
  std::size_t f = 0;
  std::size_t g = 0;
  PairVerdict verdict{};
};

struct EngineOptions {
  /// Carry a cofactor vector alongside every element and check admissibility
  /// (poly = shadow . F, lpp(shadow) = sig) after every reduction step.
  bool instrumented = false;
  /// Stop with an exception after this many pairs; 0 means unlimited.
  std::size_t max_pairs = 0;
  std::function<void(const TraceEntry&)> on_pair;
};

struct EngineStats {
  std::size_t pairs_created = 0;
  std::size_t syzygy_skips = 0;
  std::size_t rewrite_skips = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  std::size_t admissibility_checks = 0;
};

template <FieldElement C>
class SignatureEngine {
 public:
  struct Element {
    Polynomial<C> poly;
    ModuleMonomial sig;
    std::size_t stamp = 0;
    std::optional<ModuleVector<C>> shadow;
  };

  struct Reduced {
    Polynomial<C> poly;
    std::optional<ModuleVector<C>> shadow;
  };

  explicit SignatureEngine(std::vector<Polynomial<C>> gens, EngineOptions options = {})
      : gens_(std::move(gens)), options_(std::move(options)) {
    if (gens_.empty()) throw std::invalid_argument("empty generator list");
    ring_ = gens_.front().ring();
    if (!ring_) throw ContextError("generator without a ring");
    order_ = ring_->order();
    queue_ = PairQueue(PairLater{order_});
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (gens_[i].is_zero())
        throw std::invalid_argument("generator f" + std::to_string(i + 1) + " is zero");
      if (gens_[i].ring() != ring_ && !(*gens_[i].ring() == *ring_))
        throw ContextError("generators from different rings");
      std::optional<ModuleVector<C>> shadow;
      if (options_.instrumented) shadow = ModuleVector<C>::unit(ring_, gens_.size(), i);
      append(gens_[i], {ring_->one_monomial(), i}, std::move(shadow));
    }
  }

  const std::vector<Polynomial<C>>& generators() const { return gens_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  const std::vector<ModuleMonomial>& processed_signatures() const { return popped_; }
  const EngineStats& stats() const { return stats_; }
  bool instrumented() const { return options_.instrumented; }

  /// Syzygy criterion: t * el is F5-divisible iff some nonzero g in the basis
  /// with a strictly smaller unit vector has lpp(g) | t * sigmono(el).
  bool f5_divisible(const Monomial& t, std::size_t el) const {
    const auto& e = elements_.at(el);
    Monomial m = mono_mul(t, e.sig.mono);
    for (const auto& g : elements_)
      if (!g.poly.is_zero() && g.sig.position > e.sig.position && mono_divides(g.poly.lpp(), m))
        return true;
    return false;
  }

  /// Rewritten criterion: t * el is F5-rewritable iff an element added later
  /// than el has the same unit vector and a signature dividing t * sig(el).
  bool f5_rewritable(const Monomial& t, std::size_t el) const {
    return rewriter(t, el).has_value();
  }

  /// The latest element that rewrites t * el, if any.
  std::optional<std::size_t> rewriter(const Monomial& t, std::size_t el) const {
    const auto& e = elements_.at(el);
    ModuleMonomial s = mono_mul(t, e.sig);
    for (std::size_t k = elements_.size(); k-- > el + 1;)
      if (mono_divides(elements_[k].sig, s)) return k;
    return std::nullopt;
  }

  CriticalPair make_pair(std::size_t a, std::size_t b) const {
    const auto& ea = elements_.at(a);
    const auto& eb = elements_.at(b);
    if (ea.poly.is_zero() || eb.poly.is_zero())
      throw std::invalid_argument("critical pairs need two nonzero elements");
    Monomial l = mono_lcm(ea.poly.lpp(), eb.poly.lpp());
    Monomial ta = mono_div(l, ea.poly.lpp());
    Monomial tb = mono_div(l, eb.poly.lpp());
    ModuleMonomial sa = mono_mul(ta, ea.sig);
    ModuleMonomial sb = mono_mul(tb, eb.sig);
    auto o = module_cmp(sa, sb, order_);
    bool a_first = o > 0 || (o == 0 && ea.stamp < eb.stamp);
    CriticalPair p = a_first ? CriticalPair{ta, a, tb, b, sa, {}} : CriticalPair{tb, b, ta, a, sb, {}};
    if (o != 0) {
      p.regularity = Regularity::regular;
    } else if (options_.instrumented) {
      p.regularity = classify_pair(p);
    }
    return p;
  }

  /// Three-way classification from the shadow vectors u, v:
  /// lpp(tf u - c tg v) != lpp(tf u) is non-regular; otherwise equal
  /// signatures are super regular and distinct ones regular.
  Regularity classify_pair(const CriticalPair& p) const {
    if (!options_.instrumented)
      throw UnsupportedMode("pair classification needs an instrumented engine");
    const auto& f = elements_.at(p.f);
    const auto& g = elements_.at(p.g);
    C c = f.poly.lc() / g.poly.lc();
    auto tu = f.shadow->scale_term(ring_->one(), p.tf);
    auto w = tu.sub_scaled(c, p.tg, *g.shadow);
    if (w.is_zero() || !(w.lpp() == tu.lpp())) return Regularity::non_regular;
    if (mono_mul(p.tg, g.sig) == p.pair_sig) return Regularity::super_regular;
    return Regularity::regular;
  }

  /// F5-reduction of h with signature s by the current basis. Only top terms
  /// are reduced, by nonzero g with lpp(g) | lpp(h), t = lpp(h)/lpp(g),
  /// t sig(g) < s and t*g neither F5-divisible nor F5-rewritable.
  Reduced f5_reduce(Polynomial<C> h, const ModuleMonomial& s,
                    std::optional<ModuleVector<C>> shadow = std::nullopt) {
    check_admissible(h, s, shadow);
    while (!h.is_zero()) {
      auto r = find_reducer(h, s);
      if (!r) break;
      const auto& g = elements_[r->first];
      C c = h.lc() / g.poly.lc();
      h = h.sub_scaled(c, r->second, g.poly);
      if (shadow && g.shadow) shadow = shadow->sub_scaled(c, r->second, *g.shadow);
      ++stats_.reduction_steps;
      check_admissible(h, s, shadow);
    }
    return {std::move(h), std::move(shadow)};
  }

  /// Runs the main loop to completion.
  void run() {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j) push_pair(i, j);
    std::size_t processed = 0;
    while (!queue_.empty()) {
      CriticalPair p = queue_.top();
      queue_.pop();
      if (options_.max_pairs && ++processed > options_.max_pairs)
        throw std::runtime_error("pair limit of " + std::to_string(options_.max_pairs) + " exceeded");
      popped_.push_back(p.pair_sig);
      PairVerdict verdict;
      if (f5_divisible(p.tf, p.f) || f5_divisible(p.tg, p.g)) {
        verdict = PairVerdict::syzygy_skip;
        ++stats_.syzygy_skips;
      } else if (f5_rewritable(p.tf, p.f) || f5_rewritable(p.tg, p.g)) {
        verdict = PairVerdict::rewrite_skip;
        ++stats_.rewrite_skips;
      } else {
        verdict = process(p);
      }
      TraceEntry entry{p.pair_sig, p.f, p.g, verdict};
      if (options_.on_pair) options_.on_pair(entry);
      trace_.push_back(std::move(entry));
    }
  }

  /// Every critical pair of the current basis, over nonzero elements.
  std::vector<CriticalPair> critical_pairs() const {
    std::vector<CriticalPair> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (!elements_[i].poly.is_zero() && !elements_[j].poly.is_zero())
          out.push_back(make_pair(i, j));
    return out;
  }

  /// The pair is F5-divisible or F5-rewritable by the current basis.
  bool pair_is_covered(const CriticalPair& p) const {
    return f5_divisible(p.tf, p.f) || f5_divisible(p.tg, p.g) || f5_rewritable(p.tf, p.f) ||
           f5_rewritable(p.tg, p.g);
  }

  /// Both finite conditions on the current basis: inputs first, and every
  /// critical pair F5-divisible or F5-rewritable.
  bool certify() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const auto& e = elements_.at(i);
      if (!(e.poly == gens_[i]) || e.sig.position != i || !e.sig.mono.is_one()) return false;
    }
    for (const auto& p : critical_pairs())
      if (!pair_is_covered(p)) return false;
    return true;
  }

  SigBasis<C> result() const {
    SigBasis<C> out{gens_, {}};
    out.elements.reserve(elements_.size());
    for (const auto& e : elements_) out.elements.push_back({e.poly, e.sig, e.stamp});
    return out;
  }

 private:
  struct PairLater {
    TermOrder order;
    // priority_queue pops the largest: "larger" means processed later
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
      auto o = module_cmp(a.pair_sig, b.pair_sig, order);
      if (o != 0) return o > 0;
      if (a.f != b.f) return a.f < b.f;
      return a.g < b.g;
    }
  };

  void append(Polynomial<C> poly, ModuleMonomial sig, std::optional<ModuleVector<C>> shadow) {
    elements_.push_back({std::move(poly), std::move(sig), elements_.size(), std::move(shadow)});
  }

  void push_pair(std::size_t a, std::size_t b) {
    if (elements_[a].poly.is_zero() || elements_[b].poly.is_zero()) return;
    queue_.push(make_pair(a, b));
    ++stats_.pairs_created;
  }

  std::optional<std::pair<std::size_t, Monomial>> find_reducer(const Polynomial<C>& h,
                                                               const ModuleMonomial& s) const {
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const auto& g = elements_[k];
      if (g.poly.is_zero() || !mono_divides(g.poly.lpp(), h.lpp())) continue;
      Monomial t = mono_div(h.lpp(), g.poly.lpp());
      if (module_cmp(s, mono_mul(t, g.sig), order_) <= 0) continue;
      if (f5_divisible(t, k) || f5_rewritable(t, k)) continue;
      return std::pair{k, std::move(t)};
    }
    return std::nullopt;
  }

  PairVerdict process(const CriticalPair& p) {
    const auto& f = elements_[p.f];
    const auto& g = elements_[p.g];
    C c = f.poly.lc() / g.poly.lc();
    Polynomial<C> spoly = f.poly.scale_term(ring_->one(), p.tf).sub_scaled(c, p.tg, g.poly);
    std::optional<ModuleVector<C>> shadow;
    if (options_.instrumented)
      shadow = f.shadow->scale_term(ring_->one(), p.tf).sub_scaled(c, p.tg, *g.shadow);
    auto [h, hs] = f5_reduce(std::move(spoly), p.pair_sig, std::move(shadow));
    if (h.is_zero()) {
      append(std::move(h), p.pair_sig, std::move(hs));
      ++stats_.zero_reductions;
      return PairVerdict::reduced_to_zero;
    }
    if (hs) hs = hs->scale_term(C(ring_->one() / h.lc()), ring_->one_monomial());
    append(h.monic(), p.pair_sig, std::move(hs));
    const std::size_t k = elements_.size() - 1;
    for (std::size_t i = 0; i < k; ++i) push_pair(i, k);
    return PairVerdict::new_element;
  }

  void check_admissible(const Polynomial<C>& h, const ModuleMonomial& s,
                        const std::optional<ModuleVector<C>>& shadow) {
    if (!shadow) return;
    ++stats_.admissibility_checks;
    if (shadow->is_zero() || !(shadow->lpp() == s))
      throw std::logic_error("admissibility violated: shadow vector lost its signature");
    if (!(modvec_dot(*shadow, gens_) == h))
      throw std::logic_error("admissibility violated: polynomial differs from shadow . F");
  }

  std::vector<Polynomial<C>> gens_;
  EngineOptions options_;
  RingPtr<C> ring_;
  TermOrder order_ = TermOrder::grevlex;
  std::vector<Element> elements_;
  using PairQueue = std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairLater>;
  PairQueue queue_{PairLater{TermOrder::grevlex}};
  std::vector<TraceEntry> trace_;
  std::vector<ModuleMonomial> popped_;
  EngineStats stats_;
};

/// Signature-labeled Groebner basis of <F>.
template <FieldElement C>
SigBasis<C> f5_run(std::vector<Polynomial<C>> gens, EngineOptions options = {}) {
  SignatureEngine<C> engine(std::move(gens), std::move(options));
  engine.run();
  return engine.result();
}

}  // namespace detachgb
