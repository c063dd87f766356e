#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsq/latin_square.hpp"

namespace lsq {

// Identity and inverse data of a loop table.
struct LoopStructure {
  int identity = 0;                     // the two-sided identity
  std::vector<int> left_inverse;       // [c-1] = c^lambda, c^lambda * c = identity
  std::vector<int> right_inverse;      // [c-1] = c^rho, c * c^rho = identity
  std::vector<int> two_sided;          // [c-1] = c^-1 when lambda = rho, else 0
  int self_inverse_count = 0;          // s: elements with c^-1 = c, identity included

  bool has_two_sided(int c) const { return two_sided[static_cast<size_t>(c - 1)] != 0; }
  int inverse(int c) const { return two_sided[static_cast<size_t>(c - 1)]; }
  bool all_two_sided() const;
};

// Returns the loop structure when a two-sided identity exists; absent otherwise.
std::optional<LoopStructure> loop_structure(const LatinSquare& square);

// Why a property flag could not be decided by its defining identity.
enum class flag_reason {
  checked,                // the exhaustive check ran; value is its outcome
  no_identity,            // not a loop
  no_two_sided_inverse,   // some element lacks a two-sided inverse
};

struct PropertyFlag {
  bool value = false;
  flag_reason reason = flag_reason::checked;

  explicit operator bool() const { return value; }
};

const char* flag_reason_name(flag_reason reason);

struct PropertyRecord {
  bool is_quasigroup = true;   // guaranteed by the LatinSquare invariant
  bool is_loop = false;
  bool is_group = false;
  bool is_commutative = false;
  PropertyFlag is_right_bol;   // ((ca)b)a = c((ab)a)
  PropertyFlag is_left_bol;    // a(b(ac)) = (a(ba))c
  PropertyFlag is_moufang;     // right Bol and left Bol
  PropertyFlag has_rip;        // (ab)b^-1 = a
  PropertyFlag has_lip;        // b^-1(ba) = a
  PropertyFlag has_aaip;       // (ab)^-1 = b^-1 a^-1
};

// Decides every flag by exhaustive check over all required tuples.  Flags
// whose identity needs inverses are reported false with a reason code when
// the loop structure is missing; generic quasigroups never error here.
PropertyRecord loop_properties(const LatinSquare& square);

// The right-inverse-property identity (a*b)*b^-1 = a at one pair.
// Requires a loop in which b has a two-sided inverse.
bool rip_holds_at(const LatinSquare& square, const LoopStructure& loop, int a, int b);

}  // namespace lsq
