#include "lsq/loops.hpp"

namespace lsq {

bool LoopStructure::all_two_sided() const {
  for (int v : two_sided)
    if (v == 0) return false;
  return true;
}

const char* flag_reason_name(flag_reason reason) {
  switch (reason) {
    case flag_reason::checked: return "Checked";
    case flag_reason::no_identity: return "NoIdentity";
    case flag_reason::no_two_sided_inverse: return "NoTwoSidedInverse";
  }
  return "Unknown";
}

std::optional<LoopStructure> loop_structure(const LatinSquare& square) {
  const int n = square.order();
  int identity = 0;
  for (int e = 1; e <= n; ++e) {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a)
      ok = square.product(e, a) == a && square.product(a, e) == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity == 0) return std::nullopt;

  LoopStructure loop;
  loop.identity = identity;
  loop.left_inverse.resize(static_cast<size_t>(n));
  loop.right_inverse.resize(static_cast<size_t>(n));
  loop.two_sided.assign(static_cast<size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    int lambda = square.right_divide(c, identity);  // lambda * c = identity
    int rho = square.left_divide(c, identity);      // c * rho = identity
    loop.left_inverse[static_cast<size_t>(c - 1)] = lambda;
    loop.right_inverse[static_cast<size_t>(c - 1)] = rho;
    if (lambda == rho) {
      loop.two_sided[static_cast<size_t>(c - 1)] = lambda;
      if (lambda == c) ++loop.self_inverse_count;
    }
  }
  return loop;
}

bool rip_holds_at(const LatinSquare& square, const LoopStructure& loop, int a, int b) {
  int binv = loop.inverse(b);
  return square.product(square.product(a, b), binv) == a;
}

PropertyRecord loop_properties(const LatinSquare& square) {
  const int n = square.order();
  PropertyRecord rec;

  rec.is_commutative = true;
  for (int a = 1; a <= n && rec.is_commutative; ++a)
    for (int b = a + 1; b <= n && rec.is_commutative; ++b)
      rec.is_commutative = square.product(a, b) == square.product(b, a);

  auto loop = loop_structure(square);
  rec.is_loop = loop.has_value();

  bool associative = true;
  for (int a = 1; a <= n && associative; ++a)
    for (int b = 1; b <= n && associative; ++b)
      for (int c = 1; c <= n && associative; ++c)
        associative = square.product(square.product(a, b), c) ==
                      square.product(a, square.product(b, c));
  rec.is_group = rec.is_loop && associative;

  if (!loop) {
    rec.is_right_bol = {false, flag_reason::no_identity};
    rec.is_left_bol = {false, flag_reason::no_identity};
    rec.is_moufang = {false, flag_reason::no_identity};
    rec.has_rip = {false, flag_reason::no_identity};
    rec.has_lip = {false, flag_reason::no_identity};
    rec.has_aaip = {false, flag_reason::no_identity};
    return rec;
  }

  bool right_bol = true;
  for (int a = 1; a <= n && right_bol; ++a)
    for (int b = 1; b <= n && right_bol; ++b)
      for (int c = 1; c <= n && right_bol; ++c)
        right_bol = square.product(square.product(square.product(c, a), b), a) ==
                    square.product(c, square.product(square.product(a, b), a));
  rec.is_right_bol = {right_bol, flag_reason::checked};

  bool left_bol = true;
  for (int a = 1; a <= n && left_bol; ++a)
    for (int b = 1; b <= n && left_bol; ++b)
      for (int c = 1; c <= n && left_bol; ++c)
        left_bol = square.product(a, square.product(b, square.product(a, c))) ==
                   square.product(square.product(a, square.product(b, a)), c);
  rec.is_left_bol = {left_bol, flag_reason::checked};

  rec.is_moufang = {right_bol && left_bol, flag_reason::checked};

  if (!loop->all_two_sided()) {
    rec.has_rip = {false, flag_reason::no_two_sided_inverse};
    rec.has_lip = {false, flag_reason::no_two_sided_inverse};
    rec.has_aaip = {false, flag_reason::no_two_sided_inverse};
    return rec;
  }

  bool rip = true;
  for (int a = 1; a <= n && rip; ++a)
    for (int b = 1; b <= n && rip; ++b)
      rip = rip_holds_at(square, *loop, a, b);
  rec.has_rip = {rip, flag_reason::checked};

  bool lip = true;
  for (int a = 1; a <= n && lip; ++a)
    for (int b = 1; b <= n && lip; ++b)
      lip = square.product(loop->inverse(b), square.product(b, a)) == a;
  rec.has_lip = {lip, flag_reason::checked};

  bool aaip = true;
  for (int a = 1; a <= n && aaip; ++a)
    for (int b = 1; b <= n && aaip; ++b)
      aaip = loop->inverse(square.product(a, b)) ==
             square.product(loop->inverse(b), loop->inverse(a));
  rec.has_aaip = {aaip, flag_reason::checked};

  return rec;
}

}  // namespace lsq
