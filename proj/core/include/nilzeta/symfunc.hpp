#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nilzeta {

/// 1^{a_1} 2^{a_2} ... n^{a_n}; multiplicities[i-1] = a_i.
struct Partition {
  std::vector<unsigned> multiplicities;

  unsigned size() const;
  /// Parts in decreasing order.
  std::vector<unsigned> parts() const;
  /// e.g. "1^2 2^1"
  std::string to_string() const;
  bool operator==(const Partition&) const = default;
};

/// All partitions of n, largest part first in reverse lexicographic order of
/// the part lists ([n] first, [1^n] last).
std::vector<Partition> partitions(unsigned n);
/// p(n) by the pentagonal recurrence.
mpz_class partition_count(unsigned n);

/// Subgroups of index r in Z^s: Σ_{r_1...r_s = r} r_2 r_3^2 ... r_s^{s-1}.
mpz_class j_count(std::uint64_t r, unsigned s);

/// |Hom(Z^s, Σ_n)| = Σ_λ n!/(Π i^{a_i} a_i!) Π j_i(Z^s)^{a_i}.
mpz_class hom_count_symmetric(unsigned n, unsigned s);

}  // namespace nilzeta
