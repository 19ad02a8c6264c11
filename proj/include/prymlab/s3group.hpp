#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace prymlab {

/// Element sigma^i tau^j of S3 = <sigma, tau | sigma^3 = tau^2 = tau sigma tau sigma = 1>,
/// stored as index i + 3j. sigma = (123), tau = (12).
class GroupElement {
 public:
  constexpr GroupElement() = default;
  constexpr explicit GroupElement(int index) : index_(index) {}
  static constexpr GroupElement from_powers(int i, int j) {
    return GroupElement(((i % 3) + 3) % 3 + 3 * (((j % 2) + 2) % 2));
  }

  static constexpr GroupElement identity() { return GroupElement(0); }
  static constexpr GroupElement sigma() { return GroupElement(1); }
  static constexpr GroupElement tau() { return GroupElement(3); }

  constexpr int index() const { return index_; }
  constexpr int sigma_power() const { return index_ % 3; }
  constexpr int tau_power() const { return index_ / 3; }

  /// Action on {0,1,2}.
  std::array<int, 3> permutation() const;
  int order() const;
  GroupElement inverse() const;
  bool is_involution() const { return tau_power() == 1; }
  std::string name() const;

  friend GroupElement operator*(GroupElement a, GroupElement b);
  friend constexpr bool operator==(GroupElement a, GroupElement b) { return a.index_ == b.index_; }
  friend constexpr auto operator<=>(GroupElement a, GroupElement b) { return a.index_ <=> b.index_; }

 private:
  int index_ = 0;
};

/// All six elements in index order.
const std::array<GroupElement, 6>& s3_elements();

/// Subgroups of S3 as 6-bit masks over element indices.
using Subgroup = std::uint8_t;

namespace subgroups {
inline constexpr Subgroup trivial = 0b000001;
inline constexpr Subgroup rotations = 0b000111;  // <sigma>
inline constexpr Subgroup tau = 0b001001;        // <tau>
inline constexpr Subgroup sigma_tau = 0b010001;  // <sigma tau>
inline constexpr Subgroup sigma2_tau = 0b100001; // <sigma^2 tau>
inline constexpr Subgroup full = 0b111111;
}  // namespace subgroups

/// The six subgroups, ordered by size then mask.
const std::vector<Subgroup>& all_subgroups();
int subgroup_order(Subgroup h);
bool contains(Subgroup h, GroupElement g);
bool is_subgroup(Subgroup mask);
bool is_subgroup_of(Subgroup k, Subgroup h);
/// k normal in h (k must be a subgroup of h).
bool is_normal_in(Subgroup k, Subgroup h);
Subgroup conjugate(Subgroup h, GroupElement g);
/// Subgroup generated by a set of elements.
Subgroup generated_by(const std::vector<GroupElement>& gens);
std::string subgroup_name(Subgroup h);
/// Inverse of subgroup_name; throws InvalidDataError.
Subgroup subgroup_from_name(const std::string& name);

/// Left cosets gH as masks, ordered by smallest element.
std::vector<Subgroup> left_cosets(Subgroup h);

}  // namespace prymlab
