#include "prymlab/s3group.hpp"

#include <algorithm>
#include <bit>

#include "prymlab/errors.hpp"

namespace prymlab {

namespace {

using Perm = std::array<int, 3>;

Perm compose(const Perm& g, const Perm& h) {  // (gh)(x) = g(h(x))
  return {g[static_cast<std::size_t>(h[0])], g[static_cast<std::size_t>(h[1])], g[static_cast<std::size_t>(h[2])]};
}

const std::array<Perm, 6>& perm_table() {
  static const std::array<Perm, 6> table = [] {
    const Perm id{0, 1, 2}, s{1, 2, 0}, t{1, 0, 2};
    std::array<Perm, 6> out{};
    for (int j = 0; j < 2; ++j) {
      Perm tj = j ? t : id;
      Perm si = id;
      for (int i = 0; i < 3; ++i) {
        out[static_cast<std::size_t>(i + 3 * j)] = compose(si, tj);
        si = compose(s, si);
      }
    }
    return out;
  }();
  return table;
}

const std::array<std::array<int, 6>, 6>& mult_table() {
  static const std::array<std::array<int, 6>, 6> table = [] {
    std::array<std::array<int, 6>, 6> out{};
    const auto& p = perm_table();
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        Perm c = compose(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
        int idx = static_cast<int>(std::find(p.begin(), p.end(), c) - p.begin());
        out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = idx;
      }
    return out;
  }();
  return table;
}

}  // namespace

std::array<int, 3> GroupElement::permutation() const { return perm_table()[static_cast<std::size_t>(index_)]; }

int GroupElement::order() const {
  if (index_ == 0) return 1;
  return is_involution() ? 2 : 3;
}

GroupElement GroupElement::inverse() const {
  for (const auto& g : s3_elements())
    if (*this * g == identity()) return g;
  return identity();
}

std::string GroupElement::name() const {
  static const char* names[6] = {"1", "sigma", "sigma^2", "tau", "sigma*tau", "sigma^2*tau"};
  return names[index_];
}

GroupElement operator*(GroupElement a, GroupElement b) {
  return GroupElement(mult_table()[static_cast<std::size_t>(a.index_)][static_cast<std::size_t>(b.index_)]);
}

const std::array<GroupElement, 6>& s3_elements() {
  static const std::array<GroupElement, 6> e{GroupElement(0), GroupElement(1), GroupElement(2),
                                             GroupElement(3), GroupElement(4), GroupElement(5)};
  return e;
}

const std::vector<Subgroup>& all_subgroups() {
  static const std::vector<Subgroup> s{subgroups::trivial,   subgroups::tau,      subgroups::sigma_tau,
                                       subgroups::sigma2_tau, subgroups::rotations, subgroups::full};
  return s;
}

int subgroup_order(Subgroup h) { return std::popcount(static_cast<unsigned>(h)); }

bool contains(Subgroup h, GroupElement g) { return (h >> g.index()) & 1U; }

bool is_subgroup(Subgroup mask) {
  return std::find(all_subgroups().begin(), all_subgroups().end(), mask) != all_subgroups().end();
}

bool is_subgroup_of(Subgroup k, Subgroup h) { return (k & h) == k; }

bool is_normal_in(Subgroup k, Subgroup h) {
  if (!is_subgroup_of(k, h)) return false;
  for (const auto& g : s3_elements())
    if (contains(h, g) && conjugate(k, g) != k) return false;
  return true;
}

Subgroup conjugate(Subgroup h, GroupElement g) {
  Subgroup out = 0;
  GroupElement gi = g.inverse();
  for (const auto& x : s3_elements())
    if (contains(h, x)) out |= static_cast<Subgroup>(1U << (g * x * gi).index());
  return out;
}

Subgroup generated_by(const std::vector<GroupElement>& gens) {
  Subgroup h = subgroups::trivial;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : s3_elements()) {
      if (!contains(h, x)) continue;
      for (const auto& g : gens) {
        Subgroup next = h | static_cast<Subgroup>(1U << (x * g).index());
        if (next != h) {
          h = next;
          grew = true;
        }
      }
    }
  }
  return h;
}

std::string subgroup_name(Subgroup h) {
  switch (h) {
    case subgroups::trivial: return "1";
    case subgroups::rotations: return "<sigma>";
    case subgroups::tau: return "<tau>";
    case subgroups::sigma_tau: return "<sigma*tau>";
    case subgroups::sigma2_tau: return "<sigma^2*tau>";
    case subgroups::full: return "S3";
    default: return "?";
  }
}

Subgroup subgroup_from_name(const std::string& name) {
  for (Subgroup h : all_subgroups())
    if (subgroup_name(h) == name) return h;
  throw InvalidDataError("unknown subgroup '" + name + "'");
}

std::vector<Subgroup> left_cosets(Subgroup h) {
  std::vector<Subgroup> out;
  Subgroup covered = 0;
  for (const auto& g : s3_elements()) {
    if (contains(covered, g)) continue;
    Subgroup c = 0;
    for (const auto& x : s3_elements())
      if (contains(h, x)) c |= static_cast<Subgroup>(1U << (g * x).index());
    out.push_back(c);
    covered |= c;
  }
  return out;
}

}  // namespace prymlab
