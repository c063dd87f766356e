#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsq/loops.hpp"
#include "lsq/scheme.hpp"

namespace lsq {

// The permutation pi of I(L) - {c_p} attached to a base point, with its
// disjoint-cycle decomposition (1-cycles included).  Cycles start at their
// smallest element and are ordered by smallest element.
struct SubPermutation {
  int order = 0;            // n of the underlying square
  int excluded_column = 0;  // c_p
  std::vector<int> image;   // [c-1] = pi(c); image[c_p-1] = 0 (not in domain)
  std::vector<std::vector<int>> cycles;

  int apply(int c) const;
  bool is_identity() const;
  bool is_involution() const;  // pi(pi(c)) == c on the whole domain
  int fixed_point_count() const;
  std::string cycle_notation() const;  // e.g. "(2 4)(3 5)(6 7)(8)"

  friend bool operator==(const SubPermutation& a, const SubPermutation& b) {
    return a.excluded_column == b.excluded_column && a.image == b.image;
  }
};

// Multiset of cycle lengths, rendered like the column annotations: "1^3 2^2".
struct CycleStructure {
  std::map<int, int> count_by_length;

  int weighted_sum() const;
  int cycle_count() const;  // k
  std::string to_string() const;

  friend bool operator==(const CycleStructure& a, const CycleStructure& b) {
    return a.count_by_length == b.count_by_length;
  }
  friend bool operator!=(const CycleStructure& a, const CycleStructure& b) {
    return !(a == b);
  }
  friend bool operator<(const CycleStructure& a, const CycleStructure& b) {
    return a.count_by_length < b.count_by_length;
  }
};

CycleStructure cycle_structure(const SubPermutation& perm);

// pi by the three-step auxiliary-point walk: x in the base row at column c,
// y in the base column with the entry of x, z in the row of y with the base
// entry; pi(c) is the column of z.
SubPermutation pi_of(const LatinSquare& square, const Point& p);

// The same permutation by quasigroup division: r with r*c_p = r_p*c, then
// pi(c) with r*pi(c) = r_p*c_p.  Agrees with pi_of on every input.
SubPermutation pi_via_division(const LatinSquare& square, const Point& p);

// For right Bol loop tables only: pi(c) = (c_p * c^-1) * c_p, an involution.
SubPermutation bol_pi_formula(const LatinSquare& square, const Point& p);

// A root of unity e^{2*pi*i*num/den} as an exact reduced fraction.
struct RootOfUnity {
  int num = 0;
  int den = 1;  // 0 <= num < den, gcd(num, den) = 1

  static RootOfUnity of(int j, int m);
  bool is_one() const { return num == 0; }
  std::string to_string() const;

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
    return a.den != b.den ? a.den < b.den : a.num < b.num;
  }
};

enum class module_label { primary, one_dim, eigenvalue, class_iv };

struct ModuleEntry {
  int dimension = 0;
  long long multiplicity = 0;
  module_label label = module_label::primary;
  RootOfUnity eigenvalue;  // meaningful only when label == eigenvalue
};

// Dimensions and multiplicities of the irreducible modules predicted from
// the cycle structure at a base point.
struct ModuleTable {
  int order = 0;        // n
  int cycle_count = 0;  // k
  std::vector<RootOfUnity> roots;  // U, sorted
  std::vector<ModuleEntry> entries;

  long long balance() const;  // sum of dimension * multiplicity; equals n^2
};

// Requires order >= 5: at order 4 the one-dimensional multiplicity formula
// turns negative, so the order is refused instead.
ModuleTable module_table(int order, const CycleStructure& cycles);

// The direct-sum shape {5, 6 x N, 1} with N = |U| - 1 when k = 1 and
// N = |U| otherwise.
struct WedderburnSignature {
  int six_count = 0;  // N

  std::vector<int> summands() const;
  long long algebra_dimension() const { return 26 + 36LL * six_count; }

  friend bool operator==(const WedderburnSignature& a, const WedderburnSignature& b) {
    return a.six_count == b.six_count;
  }
};

WedderburnSignature wedderburn_signature(const ModuleTable& table, int cycle_count,
                                         int u_size);

// Fixed-point counts and cycle structures of pi over every base point.
struct FixedPointProfile {
  int order = 0;
  std::vector<std::vector<int>> fixed_counts;             // [r-1][c-1]
  std::vector<std::vector<CycleStructure>> structures;    // [r-1][c-1]
  std::vector<bool> column_constant;  // cycle structure identical down the column
  bool row_constant = false;          // every column is constant
};

// The per-base-point sweep may run on several threads; the merged output is
// deterministic regardless of scheduling.
FixedPointProfile fixed_point_profile(const LatinSquare& square, int jobs = 1);

// s - 1 for a Moufang loop: the fixed count shared by every base point.
int moufang_fixed_prediction(const LatinSquare& square);

// Per-element view of pi at the identity base point (i, i, i).
struct IdentityCycleEntry {
  int element = 0;
  int cycle_length = 0;         // length of the pi-cycle through the element
  int rho_iteration_count = 0;  // least k with the (k-1)-fold right inverse = left inverse
  bool two_sided = false;
  bool pi_square_fixed = false;  // pi(pi(c)) == c
  int pi_value = 0;              // pi(c); the two-sided inverse when it exists
};

struct IdentityBaseReport {
  int identity = 0;
  std::vector<IdentityCycleEntry> entries;  // one per element != identity
};

IdentityBaseReport identity_base_cycles(const LatinSquare& square);

// Both sides of ((r_p c) c_p^-1) pi(c) = ((r_p pi(c)) c_p^-1) c, and
// whether pi^2 fixes c; the booleans agree for every RIP loop.
struct PiSquareCheck {
  bool identity_holds = false;
  bool pi_square_fixed = false;
};

PiSquareCheck pi_square_criterion(const LatinSquare& square, const Point& p, int c);

// Sufficient-condition check: a loop with RIP whose pi at every base point
// is the involution c -> (c_p c^-1) c_p is a right Bol loop.
enum class bol_failure {
  none,
  not_a_loop,
  no_rip,
  pi_square_broken,
  pi_formula_broken,
};

struct BolCertificate {
  bool certified = false;
  bol_failure failure = bol_failure::none;
  std::string detail;  // witness, empty when certified

  explicit operator bool() const { return certified; }
};

const char* bol_failure_name(bol_failure failure);

BolCertificate right_bol_certificate(const LatinSquare& square);

}  // namespace lsq
