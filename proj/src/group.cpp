#include "ng/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ng/errors.hpp"

namespace ng {

ClosureResult closure(int degree, const std::vector<Perm>& gens,
                      const std::function<bool(const Perm&)>& visitor,
                      std::size_t max_order) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("closure: generator degree mismatch");

  // Multiplying on the left by generators and their inverses reaches the
  // whole subgroup from the identity.
  std::vector<Perm> mults = gens;
  for (const auto& g : gens) {
    Perm gi = g.inverse();
    if (std::find(mults.begin(), mults.end(), gi) == mults.end())
      mults.push_back(gi);
  }

  ClosureResult result;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  Perm id(degree);
  seen.insert(id);
  frontier.push_back(id);
  if (visitor && !visitor(id)) {
    result.aborted = true;
  } else {
    while (!frontier.empty()) {
      Perm w = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& m : mults) {
        Perm next = compose(m, w);
        if (!seen.insert(next).second) continue;
        if (max_order && seen.size() > max_order)
          throw budget_error("closure exceeds enumeration budget of " +
                             std::to_string(max_order));
        if (visitor && !visitor(next)) {
          result.aborted = true;
          frontier.clear();
          break;
        }
        frontier.push_back(std::move(next));
      }
    }
  }

  result.elements.assign(seen.begin(), seen.end());
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

PermGroup PermGroup::generated(int degree, std::vector<Perm> gens,
                               std::size_t max_order) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = closure(degree, gens, nullptr, max_order).elements;
  g.generators_ = std::move(gens);
  g.finalize();
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> gens,
                                   std::vector<Perm> elements) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  std::sort(g.elements_.begin(), g.elements_.end());
  g.elements_.erase(std::unique(g.elements_.begin(), g.elements_.end()),
                    g.elements_.end());
  g.generators_ = std::move(gens);
  g.finalize();
  return g;
}

void PermGroup::finalize() {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<int>(i));

  inverse_.resize(elements_.size());
  order_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverse_[i] = index_of(elements_[i].inverse());
    order_[i] = elements_[i].order();
  }
  // The identity is lexicographically least, hence index 0.
  identity_ = index_of(Perm(degree_));
  for (const auto& g : generators_) index_of(g);
}

std::optional<int> PermGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw membership_error("permutation " + p.cycle_string() +
                           " is not a group element");
  return it->second;
}

int PermGroup::mul(int a, int b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

bool PermGroup::commute(int a, int b) const {
  return compose(elements_[a], elements_[b]) ==
         compose(elements_[b], elements_[a]);
}

int PermGroup::conj(int s, int g) const { return mul(mul(g, s), inverse_[g]); }

ElementSet subgroup_closure(const PermGroup& g, const ElementSet& seed) {
  std::vector<bool> in(g.size(), false);
  std::deque<int> frontier;
  auto add = [&](int i) {
    if (!in[i]) {
      in[i] = true;
      frontier.push_back(i);
    }
  };
  add(g.identity_index());
  std::vector<int> mults;
  for (int s : seed) {
    mults.push_back(s);
    mults.push_back(g.inv(s));
  }
  while (!frontier.empty()) {
    int w = frontier.front();
    frontier.pop_front();
    for (int m : mults) add(g.mul(m, w));
  }
  ElementSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool is_subgroup(const PermGroup& g, const ElementSet& s) {
  if (s.empty()) return false;
  std::vector<bool> in(g.size(), false);
  for (int i : s) in[i] = true;
  if (!in[g.identity_index()]) return false;
  for (int a : s)
    for (int b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const PermGroup& g, const ElementSet& s) {
  std::vector<bool> in(g.size(), false);
  for (int i : s) in[i] = true;
  for (const auto& gen : g.generators()) {
    int gi = g.index_of(gen);
    for (int x : s)
      if (!in[g.conj(x, gi)]) return false;
  }
  return true;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian_set(const PermGroup& g, const ElementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.commute(s[i], s[j])) return false;
  return true;
}

ElementSet centralizer(const PermGroup& g, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= g.size())
    throw membership_error("centralizer: element index out of range");
  ElementSet out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.commute(static_cast<int>(i), x)) out.push_back(static_cast<int>(i));
  return out;
}

ElementSet center(const PermGroup& g) {
  ElementSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool central = true;
    for (const auto& gen : g.generators())
      if (compose(g.element(static_cast<int>(i)), gen) !=
          compose(gen, g.element(static_cast<int>(i)))) {
        central = false;
        break;
      }
    if (central) out.push_back(static_cast<int>(i));
  }
  return out;
}

ElementSet normalizer(const PermGroup& g, const ElementSet& s) {
  std::vector<bool> in(g.size(), false);
  for (int i : s) {
    if (i < 0 || static_cast<std::size_t>(i) >= g.size())
      throw membership_error("normalizer: set element out of range");
    in[i] = true;
  }
  ElementSet out;
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    bool keeps = true;
    for (int x : s)
      if (!in[g.conj(x, static_cast<int>(gi))]) {
        keeps = false;
        break;
      }
    if (keeps) out.push_back(static_cast<int>(gi));
  }
  return out;
}

ElementSet conjugate_set(const PermGroup& g, const ElementSet& s,
                         int conjugator) {
  if (conjugator < 0 || static_cast<std::size_t>(conjugator) >= g.size())
    throw membership_error("conjugate_set: conjugator out of range");
  ElementSet out;
  out.reserve(s.size());
  for (int x : s) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.size())
      throw membership_error("conjugate_set: set element out of range");
    out.push_back(g.conj(x, conjugator));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup coset_action(const PermGroup& g, const ElementSet& n) {
  if (!is_subgroup(g, n))
    throw membership_error("coset_action: not a subgroup");
  if (!is_normal(g, n))
    throw membership_error("coset_action: subgroup is not normal");

  // Label each element with its left coset; cosets keyed by least member.
  std::vector<int> coset_of(g.size(), -1);
  std::vector<int> coset_min;  // least element per coset, in discovery order
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (coset_of[i] != -1) continue;
    int id = static_cast<int>(coset_min.size());
    coset_min.push_back(static_cast<int>(i));  // ascending scan: i is least
    for (int x : n) coset_of[g.mul(static_cast<int>(i), x)] = id;
  }
  // The identity (index 0) lands in coset 0 and the remaining cosets are
  // already ordered by least element because the scan is ascending.

  int points = static_cast<int>(coset_min.size());
  std::vector<Perm> images;
  images.reserve(g.size());
  for (std::size_t gi = 0; gi < g.size(); ++gi) {
    std::vector<int> img(points);
    for (int c = 0; c < points; ++c)
      img[c] = coset_of[g.mul(static_cast<int>(gi), coset_min[c])];
    images.emplace_back(std::move(img));
  }

  std::vector<Perm> gens;
  for (const auto& gen : g.generators()) {
    int gi = g.index_of(gen);
    std::vector<int> img(points);
    for (int c = 0; c < points; ++c)
      img[c] = coset_of[g.mul(gi, coset_min[c])];
    Perm p(std::move(img));
    if (std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(std::move(p));
  }

  return PermGroup::from_elements(points, std::move(gens), std::move(images));
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  int degree = g.degree() + h.degree();
  std::vector<Perm> elements;
  elements.reserve(g.size() * h.size());
  for (const auto& a : g.elements())
    for (const auto& b : h.elements()) {
      std::vector<int> img(degree);
      for (int i = 0; i < g.degree(); ++i) img[i] = a(i);
      for (int i = 0; i < h.degree(); ++i) img[g.degree() + i] = g.degree() + b(i);
      elements.emplace_back(std::move(img));
    }

  std::vector<Perm> gens;
  for (const auto& a : g.generators()) {
    std::vector<int> img(degree);
    for (int i = 0; i < g.degree(); ++i) img[i] = a(i);
    for (int i = 0; i < h.degree(); ++i) img[g.degree() + i] = g.degree() + i;
    gens.emplace_back(std::move(img));
  }
  for (const auto& b : h.generators()) {
    std::vector<int> img(degree);
    for (int i = 0; i < g.degree(); ++i) img[i] = i;
    for (int i = 0; i < h.degree(); ++i) img[g.degree() + i] = g.degree() + b(i);
    gens.emplace_back(std::move(img));
  }

  return PermGroup::from_elements(degree, std::move(gens), std::move(elements));
}

PermGroup regular_representation(const PermGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s))
    throw membership_error("regular_representation: not a subgroup");
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);

  int points = static_cast<int>(s.size());
  std::vector<Perm> elements;
  elements.reserve(s.size());
  for (int z : s) {
    std::vector<int> img(points);
    for (int i = 0; i < points; ++i) img[i] = pos[g.mul(z, s[i])];
    elements.emplace_back(std::move(img));
  }
  std::vector<Perm> gens = elements;  // the whole subgroup generates itself
  if (gens.empty()) gens.emplace_back(points);
  return PermGroup::from_elements(points, std::move(gens),
                                  std::move(elements));
}

}  // namespace ng
