#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilzeta/group.hpp"

namespace nilzeta {

inline constexpr std::size_t kDefaultOrderCap = 10000;

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of the given order (2n elements: rotations r^k and reflections r^k s).
FiniteGroup dihedral(std::size_t order);
FiniteGroup quaternion8();
FiniteGroup symmetric(unsigned degree, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup alternating(unsigned degree, std::size_t order_cap = kDefaultOrderCap);

/// SL(2, F_q) and PSL(2, F_q). q must be a prime or one of 4, 8, 9, 16; the
/// extension fields use the Conway polynomials
///   F_4 : w^2 + w + 1        F_8 : w^3 + w + 1
///   F_9 : w^2 + 2w + 2       F_16: w^4 + w + 1
/// and element labels encode a field element c_0 + c_1 w + ... as the integer
/// sum c_i p^i.
FiniteGroup special_linear2(unsigned q, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup projective_special_linear2(unsigned q, std::size_t order_cap = kDefaultOrderCap);

/// M_11 on 11 points from (1,...,11) and (3,7,11,8)(4,10,5,6).
FiniteGroup mathieu11(std::size_t order_cap = kDefaultOrderCap);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t order_cap = kDefaultOrderCap);

/// (G x H) / {(z, phi(z)^-1)} where `identification` lists every pair
/// (z, phi(z)) of an isomorphism from a central subgroup of G onto a central
/// subgroup of H. Throws BadIdentification otherwise.
FiniteGroup central_product(const FiniteGroup& g, const FiniteGroup& h,
                            std::span<const std::pair<Elem, Elem>> identification,
                            std::size_t order_cap = kDefaultOrderCap);

/// Central product identifying two cyclic centers of equal order through
/// their least-index generators.
FiniteGroup central_product_of_centers(const FiniteGroup& g, const FiniteGroup& h,
                                       std::size_t order_cap = kDefaultOrderCap);

/// Q8 o Q8, the extraspecial group of order 32 of minus type.
FiniteGroup extraspecial32();

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;
};
/// G/N for a normal subgroup N; throws NotNormal.
Quotient quotient(const FiniteGroup& g, const ElementMask& n);

struct Embedded {
  FiniteGroup group;
  std::vector<Elem> embedding;  // subgroup element -> element of the ambient group
};
/// The subgroup H as a standalone group; identity stays at index 0.
Embedded induced_subgroup(const FiniteGroup& g, const ElementMask& h, std::string name = {});

/// Builds a group from the textual grammar
///   C<n> | D<order> | Q8 | S<n> | A<n> | SL(2,<q>) | PSL(2,<q>) | M11 | ES32
///   | central(<spec>,<spec>) | <spec>x<spec>
/// Throws UnknownFamily, BadInput or OrderCapExceeded.
FiniteGroup make_group(std::string_view spec, std::size_t order_cap = kDefaultOrderCap);

}  // namespace nilzeta
