#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "birotary/perm.hpp"

namespace birotary {

// Materialization cap: covers every desk-scale target (largest fully
// materialized group is Z25 x D168 of order 4200, largest 2-group 2^14)
// while failing fast on paper-scale parameters.
inline constexpr std::uint64_t kDefaultCap = 20000;

// A finite permutation group given by generators on a fixed point set.
//
// Copies share state; a group is immutable apart from lazy materialization,
// which is single-threaded per object. Element order is the breadth-first
// closure order (identity first, generator index ascending), so every
// downstream iteration and report is reproducible.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::string name = "", std::optional<std::uint64_t> analytic_order = {})
      : s_(std::make_shared<State>()) {
    require(!generators.empty(), Errc::invalid_argument, "generator list must be nonempty");
    for (const auto& g : generators)
      require(g.degree() == degree, Errc::degree_mismatch, "generator degree mismatch");
    s_->degree = degree;
    s_->generators = std::move(generators);
    s_->name = std::move(name);
    s_->analytic_order = analytic_order;
  }

  static PermutationGroup trivial(std::size_t degree, std::string name = "1") {
    PermutationGroup T(degree, {Permutation::identity(degree)}, std::move(name), 1);
    T.materialize();
    return T;
  }

  std::size_t degree() const { return s_->degree; }
  const std::vector<Permutation>& generators() const { return s_->generators; }
  const std::string& name() const { return s_->name; }
  void set_name(std::string name) { s_->name = std::move(name); }

  std::optional<std::uint64_t> analytic_order() const { return s_->analytic_order; }
  bool is_materialized() const { return !s_->elements.empty(); }

  // Breadth-first closure of the generators. Idempotent.
  const std::vector<Permutation>& materialize(std::uint64_t cap = kDefaultCap) const {
    if (!s_->elements.empty()) return s_->elements;
    auto& els = s_->elements;
    auto& idx = s_->index;
    Permutation id = Permutation::identity(s_->degree);
    els.push_back(id);
    idx.emplace(id, 0);
    s_->parent.push_back(0);
    s_->via_gen.push_back(kNoGen);
    for (std::size_t head = 0; head < els.size(); ++head) {
      Permutation cur = els[head];  // copy: els may reallocate
      for (std::size_t gi = 0; gi < s_->generators.size(); ++gi) {
        Permutation next = cur * s_->generators[gi];
        auto [it, inserted] = idx.emplace(next, static_cast<std::uint32_t>(els.size()));
        if (inserted) {
          els.push_back(std::move(next));
          s_->parent.push_back(static_cast<std::uint32_t>(head));
          s_->via_gen.push_back(static_cast<std::uint16_t>(gi));
          if (els.size() > cap) {
            els.clear();
            idx.clear();
            s_->parent.clear();
            s_->via_gen.clear();
            fail(Errc::cap_exceeded,
                 "closure of " + (s_->name.empty() ? std::string("group") : s_->name) +
                     " exceeds cap " + std::to_string(cap));
          }
        }
      }
    }
    if (s_->analytic_order)
      require(*s_->analytic_order == els.size(), Errc::structure_violation,
              "materialized order disagrees with analytic order of " + s_->name);
    return els;
  }

  const std::vector<Permutation>& elements() const {
    require(is_materialized(), Errc::precondition_failed, "group not materialized");
    return s_->elements;
  }

  std::uint64_t order(std::uint64_t cap = kDefaultCap) const {
    if (s_->analytic_order) return *s_->analytic_order;
    return materialize(cap).size();
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != s_->degree) return false;
    materialize();
    return s_->index.count(p) > 0;
  }

  std::optional<std::uint32_t> index_of(const Permutation& p) const {
    materialize();
    auto it = s_->index.find(p);
    if (it == s_->index.end()) return std::nullopt;
    return it->second;
  }

  // Expresses element #i through the BFS tree: i = parent(i) * gen(via(i)).
  std::uint32_t bfs_parent(std::uint32_t i) const { return s_->parent[i]; }
  std::uint16_t bfs_gen(std::uint32_t i) const { return s_->via_gen[i]; }
  static constexpr std::uint16_t kNoGen = 0xffff;

  bool is_abelian() const {
    const auto& gens = s_->generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
    return true;
  }

  bool same_element_set(const PermutationGroup& other) const {
    if (degree() != other.degree()) return false;
    materialize();
    other.materialize();
    if (elements().size() != other.elements().size()) return false;
    for (const auto& e : other.elements())
      if (!s_->index.count(e)) return false;
    return true;
  }

  bool is_subgroup_of(const PermutationGroup& other) const {
    if (degree() != other.degree()) return false;
    other.materialize();
    for (const auto& g : generators())
      if (!other.contains(g)) return false;
    return true;
  }

 private:
  struct State {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::string name;
    std::optional<std::uint64_t> analytic_order;
    mutable std::vector<Permutation> elements;
    mutable std::unordered_map<Permutation, std::uint32_t, PermHash> index;
    mutable std::vector<std::uint32_t> parent;
    mutable std::vector<std::uint16_t> via_gen;
  };
  std::shared_ptr<State> s_;
};

inline PermutationGroup subgroup_generated(const PermutationGroup& G,
                                           std::vector<Permutation> seeds,
                                           std::uint64_t cap = kDefaultCap,
                                           std::string name = "") {
  if (G.is_materialized())
    for (const auto& s : seeds)
      require(G.contains(s), Errc::precondition_failed, "seed not in ambient group");
  if (seeds.empty()) seeds.push_back(Permutation::identity(G.degree()));
  PermutationGroup H(G.degree(), std::move(seeds), std::move(name));
  H.materialize(cap);
  return H;
}

// Smallest normal subgroup of G containing the seeds.
inline PermutationGroup normal_closure(const PermutationGroup& G,
                                       std::vector<Permutation> seeds,
                                       std::uint64_t cap = kDefaultCap,
                                       std::string name = "") {
  G.materialize(cap);
  for (const auto& s : seeds)
    require(G.contains(s), Errc::precondition_failed, "seed not in ambient group");
  if (seeds.empty()) seeds.push_back(Permutation::identity(G.degree()));
  for (;;) {
    PermutationGroup N(G.degree(), seeds, name);
    N.materialize(cap);
    bool grew = false;
    for (const auto& n : N.elements()) {
      for (const auto& g : G.generators()) {
        Permutation c = conjugate(n, g);
        if (!N.contains(c)) {
          seeds.push_back(std::move(c));
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
    if (!grew) return N;
  }
}

inline PermutationGroup centralizer(const PermutationGroup& G,
                                    std::span<const Permutation> S, std::string name = "") {
  G.materialize();
  std::vector<Permutation> members;
  for (const auto& g : G.elements()) {
    bool central = true;
    for (const auto& s : S)
      if (!(g * s == s * g)) {
        central = false;
        break;
      }
    if (central) members.push_back(g);
  }
  PermutationGroup C(G.degree(), std::move(members), std::move(name));
  C.materialize();
  return C;
}

inline PermutationGroup normalizer(const PermutationGroup& G, const PermutationGroup& H,
                                   std::string name = "") {
  G.materialize();
  H.materialize();
  std::vector<Permutation> members;
  for (const auto& g : G.elements()) {
    bool normalizes = true;
    for (const auto& h : H.generators())
      if (!H.contains(conjugate(h, g))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(g);
  }
  PermutationGroup N(G.degree(), std::move(members), std::move(name));
  N.materialize();
  return N;
}

inline bool is_normal_in(const PermutationGroup& N, const PermutationGroup& G) {
  N.materialize();
  for (const auto& g : G.generators())
    for (const auto& n : N.generators())
      if (!N.contains(conjugate(n, g))) return false;
  return true;
}

inline PermutationGroup conjugate_subgroup(const PermutationGroup& H, const Permutation& g,
                                           std::string name = "") {
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(conjugate(h, g));
  PermutationGroup K(H.degree(), std::move(gens), std::move(name));
  K.materialize();
  return K;
}

// A homomorphism recorded by generator images; the full element map extends
// along the source's BFS tree and is checked conflict-free over the whole
// Cayley graph (sigma(h*g) = sigma(h)*sigma(g) for every element h, gen g).
class Homomorphism {
 public:
  Homomorphism(PermutationGroup source, PermutationGroup target,
               std::vector<Permutation> generator_images)
      : source_(std::move(source)),
        target_(std::move(target)),
        gen_images_(std::move(generator_images)) {
    require(gen_images_.size() == source_.generators().size(), Errc::invalid_argument,
            "one image per source generator required");
  }

  const PermutationGroup& source() const { return source_; }
  const PermutationGroup& target() const { return target_; }
  const std::vector<Permutation>& generator_images() const { return gen_images_; }

  // Extends over the BFS tree; returns false on a Cayley-graph conflict.
  bool extend_and_check() const {
    if (attempted_) return checked_ok_;
    attempted_ = true;
    const auto& els = source_.materialize();
    images_.reserve(els.size());
    images_.push_back(Permutation::identity(target_.degree()));
    for (std::uint32_t i = 1; i < els.size(); ++i)
      images_.push_back(images_[source_.bfs_parent(i)] * gen_images_[source_.bfs_gen(i)]);
    checked_ok_ = true;
    for (std::uint32_t i = 0; i < els.size() && checked_ok_; ++i) {
      for (std::size_t gi = 0; gi < source_.generators().size(); ++gi) {
        auto j = source_.index_of(els[i] * source_.generators()[gi]);
        if (!(images_[*j] == images_[i] * gen_images_[gi])) {
          checked_ok_ = false;
          break;
        }
      }
    }
    if (!checked_ok_) images_.clear();
    return checked_ok_;
  }

  // The image of an arbitrary element of the source.
  Permutation apply(const Permutation& g) const {
    require(extend_and_check(), Errc::structure_violation, "not a homomorphism");
    auto i = source_.index_of(g);
    require(i.has_value(), Errc::precondition_failed, "element outside source group");
    return images_[*i];
  }

  const std::vector<Permutation>& element_images() const {
    require(extend_and_check(), Errc::structure_violation, "not a homomorphism");
    return images_;
  }

  bool is_bijective_onto_target() const {
    if (!extend_and_check()) return false;
    target_.materialize();
    if (source_.elements().size() != target_.elements().size()) return false;
    std::unordered_map<Permutation, int, PermHash> seen;
    for (const auto& im : images_) {
      if (!target_.contains(im)) return false;
      if (!seen.emplace(im, 1).second) return false;
    }
    return true;
  }

  PermutationGroup kernel(std::string name = "ker") const {
    require(extend_and_check(), Errc::structure_violation, "not a homomorphism");
    std::vector<Permutation> ker;
    for (std::uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i].is_identity()) ker.push_back(source_.elements()[i]);
    PermutationGroup K(source_.degree(), std::move(ker), std::move(name));
    K.materialize();
    return K;
  }

 private:
  PermutationGroup source_;
  PermutationGroup target_;
  std::vector<Permutation> gen_images_;
  mutable std::vector<Permutation> images_;
  mutable bool attempted_ = false;
  mutable bool checked_ok_ = false;
};

// G acting on the right cosets of a normal subgroup N, together with the
// projection. The action is faithful for G/N.
inline std::pair<PermutationGroup, Homomorphism> quotient(const PermutationGroup& G,
                                                          const PermutationGroup& N,
                                                          std::uint64_t cap = kDefaultCap) {
  G.materialize(cap);
  N.materialize(cap);
  require(N.is_subgroup_of(G), Errc::precondition_failed, "N is not a subgroup of G");
  require(is_normal_in(N, G), Errc::not_normal, "subgroup is not normal");

  const auto& els = G.elements();
  std::vector<std::int32_t> coset(els.size(), -1);
  std::vector<std::uint32_t> rep;  // first (BFS-least) element of each coset
  for (std::uint32_t i = 0; i < els.size(); ++i) {
    if (coset[i] >= 0) continue;
    auto cid = static_cast<std::int32_t>(rep.size());
    rep.push_back(i);
    for (const auto& n : N.elements()) {
      auto j = G.index_of(n * els[i]);
      coset[*j] = cid;
    }
  }

  std::size_t q_degree = rep.size();
  auto induced = [&](const Permutation& g) {
    std::vector<Point> img(q_degree);
    for (std::size_t c = 0; c < q_degree; ++c)
      img[c] = static_cast<Point>(coset[*G.index_of(els[rep[c]] * g)]);
    return Permutation(std::move(img));
  };

  std::vector<Permutation> gen_images;
  gen_images.reserve(G.generators().size());
  for (const auto& g : G.generators()) gen_images.push_back(induced(g));

  std::string qname = (G.name().empty() ? "G" : G.name()) + "/" +
                      (N.name().empty() ? "N" : N.name());
  PermutationGroup Q(q_degree, gen_images, qname,
                     static_cast<std::uint64_t>(els.size() / N.elements().size()));
  Q.materialize(cap);
  return {Q, Homomorphism(G, Q, gen_images)};
}

}  // namespace birotary
