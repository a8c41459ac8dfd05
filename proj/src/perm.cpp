#include "ng/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ng {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("empty image sequence");
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("image sequence is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

int Perm::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

CycleStructure Perm::cycle_structure() const {
  CycleStructure cs;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    if (cycle.size() > 1) {
      cs.cycle_type.push_back(static_cast<int>(cycle.size()));
      for (int x : cycle) cs.support.push_back(x);
      cs.cycles.push_back(std::move(cycle));
    } else {
      cs.fixed.push_back(i);
    }
  }
  std::sort(cs.support.begin(), cs.support.end());
  std::sort(cs.cycle_type.begin(), cs.cycle_type.end());
  return cs;
}

std::string Perm::cycle_string() const {
  auto cs = cycle_structure();
  if (cs.cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = p(q(x));
  return Perm(std::move(img));
}

}  // namespace ng
