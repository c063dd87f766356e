#include "lsq/span.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "lsq/error.hpp"

namespace lsq {

namespace {

unsigned long long abs_ull(long long v) {
  return v < 0 ? ~static_cast<unsigned long long>(v) + 1 : static_cast<unsigned long long>(v);
}

// A vector over the integers in machine words while they fit, BigInt after.
// lead/tail bracket the nonzero entries: lead is the first nonzero index
// (npos for the zero vector), tail is one past the last possible nonzero.
struct Vec {
  static constexpr size_t npos = static_cast<size_t>(-1);

  std::vector<long long> small;
  std::vector<BigInt> big;
  bool is_big = false;
  size_t lead = npos;
  size_t tail = 0;

  size_t size() const { return is_big ? big.size() : small.size(); }

  bool zero_at(size_t i) const { return is_big ? big[i].is_zero() : small[i] == 0; }

  void recompute_lead(size_t from = 0) {
    lead = npos;
    for (size_t i = from; i < tail; ++i) {
      if (!zero_at(i)) {
        lead = i;
        return;
      }
    }
  }

  void shrink_tail() {
    while (tail > 0 && zero_at(tail - 1)) --tail;
  }

  void promote() {
    if (is_big) return;
    big.reserve(small.size());
    for (long long v : small) big.emplace_back(v);
    small.clear();
    small.shrink_to_fit();
    is_big = true;
  }

  void try_demote() {
    if (!is_big) return;
    for (const BigInt& v : big)
      if (!v.fits_int64() || v.to_int64() == LLONG_MIN) return;
    small.reserve(big.size());
    for (const BigInt& v : big) small.push_back(v.to_int64());
    big.clear();
    big.shrink_to_fit();
    is_big = false;
  }
};

Vec flatten(const ExactMatrix& m) {
  Vec v;
  if (const auto* data = m.small_data()) {
    v.small = *data;
  } else {
    v.big = *m.big_data();
    v.is_big = true;
  }
  v.tail = v.size();
  v.shrink_tail();
  v.recompute_lead();
  return v;
}

ExactMatrix unflatten(int size, const Vec& v) {
  if (!v.is_big) return ExactMatrix::from_flat_small(size, v.small);
  return ExactMatrix::from_flat_big(size, v.big);
}

void remove_content(Vec& v) {
  if (v.lead == Vec::npos) return;
  if (!v.is_big) {
    unsigned long long g = 0;
    for (size_t i = v.lead; i < v.tail; ++i) {
      g = std::gcd(g, abs_ull(v.small[i]));
      if (g == 1) return;
    }
    if (g <= 1) return;
    long long gs = static_cast<long long>(g);
    for (size_t i = v.lead; i < v.tail; ++i) v.small[i] /= gs;
    return;
  }
  BigInt g;
  for (size_t i = v.lead; i < v.tail; ++i) {
    g = BigInt::gcd(g, v.big[i]);
    if (g == BigInt(1)) return;
  }
  if (g.is_zero() || g == BigInt(1)) return;
  for (size_t i = v.lead; i < v.tail; ++i)
    if (!v.big[i].is_zero()) v.big[i] = v.big[i].exact_div(g);
  v.try_demote();
}

void normalize_sign(Vec& v) {
  if (v.lead == Vec::npos) return;
  if (!v.is_big) {
    if (v.small[v.lead] > 0) return;
    bool has_min = false;
    for (size_t i = v.lead; i < v.tail; ++i) has_min |= v.small[i] == LLONG_MIN;
    if (!has_min) {
      for (size_t i = v.lead; i < v.tail; ++i) v.small[i] = -v.small[i];
      return;
    }
    v.promote();
  }
  if (v.big[v.lead].sign() > 0) return;
  for (size_t i = v.lead; i < v.tail; ++i) v.big[i] = -v.big[i];
}

// v <- lead(row)*v - v[row.lead]*row, which zeroes v at row.lead.
// scratch avoids reallocating the machine-word buffer on every call.
void eliminate(Vec& v, const Vec& row, std::vector<long long>& scratch) {
  const size_t pivot = row.lead;
  const size_t start = std::min(v.lead, pivot);
  const size_t stop = std::max(v.tail, row.tail);

  if (!v.is_big && !row.is_big) {
    const long long lead = row.small[pivot];
    const long long coef = v.small[pivot];
    scratch.resize(v.small.size());
    bool overflow = false;
    if (lead == 1) {
      for (size_t i = start; i < pivot; ++i) scratch[i] = v.small[i];
      for (size_t i = pivot; i < stop; ++i) {
        long long t, r;
        long long ri = i < row.tail ? row.small[i] : 0;
        if (__builtin_mul_overflow(coef, ri, &t) ||
            __builtin_sub_overflow(i < v.tail ? v.small[i] : 0, t, &r) || r == LLONG_MIN) {
          overflow = true;
          break;
        }
        scratch[i] = r;
      }
    } else {
      for (size_t i = start; i < stop; ++i) {
        long long t1, t2, r;
        long long vi = i < v.tail ? v.small[i] : 0;
        long long ri = (i >= pivot && i < row.tail) ? row.small[i] : 0;
        if (__builtin_mul_overflow(lead, vi, &t1) || __builtin_mul_overflow(coef, ri, &t2) ||
            __builtin_sub_overflow(t1, t2, &r) || r == LLONG_MIN) {
          overflow = true;
          break;
        }
        scratch[i] = r;
      }
    }
    if (!overflow) {
      std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(start),
                scratch.begin() + static_cast<std::ptrdiff_t>(stop),
                v.small.begin() + static_cast<std::ptrdiff_t>(start));
      v.tail = stop;
      v.shrink_tail();
      if (v.lead == pivot)
        v.recompute_lead(pivot + 1);
      else if (v.lead >= v.tail)
        v.lead = Vec::npos;
      if (lead != 1) remove_content(v);
      return;
    }
    v.promote();
  }
  if (!v.is_big) v.promote();

  const BigInt lead = row.is_big ? row.big[pivot] : BigInt(row.small[pivot]);
  const BigInt coef = v.big[pivot];
  for (size_t i = start; i < stop; ++i) {
    BigInt term = v.big[i];
    term *= lead;
    if (i >= pivot && i < row.tail) {
      BigInt sub = row.is_big ? row.big[i] : BigInt(row.small[i]);
      sub *= coef;
      term -= sub;
    }
    v.big[i] = std::move(term);
  }
  v.tail = stop;
  v.shrink_tail();
  if (v.lead == pivot)
    v.recompute_lead(pivot + 1);
  else if (v.lead >= v.tail)
    v.lead = Vec::npos;
  remove_content(v);
}

// Row-reduces v against the pivot-sorted rows; returns true when a nonzero
// residue remains (v is independent of the rows).
bool reduce(Vec& v, const std::vector<Vec>& rows, std::vector<long long>& scratch) {
  for (const Vec& row : rows) {
    if (v.lead == Vec::npos) return false;
    if (row.lead < v.lead) continue;
    if (row.lead >= v.tail) break;  // rows are pivot-sorted; nothing left to hit
    if (v.zero_at(row.lead)) continue;
    eliminate(v, row, scratch);
  }
  if (v.lead == Vec::npos) return false;
  remove_content(v);
  normalize_sign(v);
  v.try_demote();
  return true;
}

void insert_sorted(std::vector<Vec>& rows, Vec v) {
  auto it = std::lower_bound(rows.begin(), rows.end(), v.lead,
                             [](const Vec& row, size_t lead) { return row.lead < lead; });
  rows.insert(it, std::move(v));
}

// Index lists of the nonzero rows and columns of a basis element; products
// run over these lists only, which keeps block-supported elements cheap.
struct IndexedMat {
  ExactMatrix mat;
  std::vector<int> rows, cols;
  std::vector<uint64_t> row_mask, col_mask;
};

IndexedMat index_matrix(ExactMatrix m) {
  const int n = m.size();
  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  IndexedMat out;
  out.row_mask.assign(words, 0);
  out.col_mask.assign(words, 0);
  std::vector<char> row_nz(static_cast<size_t>(n), 0), col_nz(static_cast<size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      bool nz = m.small_data() ? (*m.small_data())[static_cast<size_t>(r) * n + c] != 0
                               : !(*m.big_data())[static_cast<size_t>(r) * n + c].is_zero();
      if (nz) {
        row_nz[static_cast<size_t>(r)] = 1;
        col_nz[static_cast<size_t>(c)] = 1;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (row_nz[static_cast<size_t>(i)]) {
      out.rows.push_back(i);
      out.row_mask[static_cast<size_t>(i) / 64] |= uint64_t{1} << (i % 64);
    }
    if (col_nz[static_cast<size_t>(i)]) {
      out.cols.push_back(i);
      out.col_mask[static_cast<size_t>(i) / 64] |= uint64_t{1} << (i % 64);
    }
  }
  out.mat = std::move(m);
  return out;
}

bool can_connect(const IndexedMat& left, const IndexedMat& right) {
  for (size_t w = 0; w < left.col_mask.size(); ++w)
    if (left.col_mask[w] & right.row_mask[w]) return true;
  return false;
}

// a * b over the nonzero index lists; falls back to the generic product when
// entries leave the machine-word bound.
ExactMatrix indexed_product(const IndexedMat& a, const IndexedMat& b) {
  const auto* da = a.mat.small_data();
  const auto* db = b.mat.small_data();
  const int n = a.mat.size();
  if (da && db) {
    unsigned long long ma = 0, mb = 0;
    for (long long v : *da) ma = std::max(ma, abs_ull(v));
    for (long long v : *db) mb = std::max(mb, abs_ull(v));
    bool safe = ma == 0 || mb == 0 ||
                (unsigned __int128)ma * mb <=
                    static_cast<unsigned __int128>(LLONG_MAX) / static_cast<unsigned>(n);
    if (safe) {
      std::vector<long long> out(static_cast<size_t>(n) * n, 0);
      for (int i : a.rows) {
        const long long* arow = &(*da)[static_cast<size_t>(i) * n];
        long long* orow = &out[static_cast<size_t>(i) * n];
        for (int k : a.cols) {
          long long aik = arow[k];
          if (aik == 0) continue;
          if (!(b.row_mask[static_cast<size_t>(k) / 64] >> (k % 64) & 1)) continue;
          const long long* brow = &(*db)[static_cast<size_t>(k) * n];
          for (int j : b.cols) orow[j] += aik * brow[j];
        }
      }
      return ExactMatrix::from_flat_small(n, std::move(out));
    }
  }
  return a.mat * b.mat;
}

}  // namespace

MatrixSpan MatrixSpan::from_basis(std::vector<ExactMatrix> matrices) {
  MatrixSpan span;
  if (matrices.empty()) return span;
  span.matrix_size_ = matrices.front().size();
  std::vector<Vec> rows;
  std::vector<long long> scratch;
  for (const ExactMatrix& m : matrices) {
    if (m.size() != span.matrix_size_)
      throw Error(errc::size_mismatch, "matrices of unequal size");
    Vec v = flatten(m);
    if (reduce(v, rows, scratch)) insert_sorted(rows, std::move(v));
  }
  for (const Vec& row : rows) span.basis_.push_back(unflatten(span.matrix_size_, row));
  span.closed_ = false;
  return span;
}

MatrixSpan span_closure(std::vector<ExactMatrix> generators,
                        const std::vector<ExactMatrix>& seed_hints) {
  if (generators.empty())
    throw Error(errc::size_mismatch, "span closure needs at least one generator");
  const int size = generators.front().size();
  for (const ExactMatrix& g : generators)
    if (g.size() != size) throw Error(errc::size_mismatch, "generators of unequal size");
  for (const ExactMatrix& h : seed_hints)
    if (h.size() != size) throw Error(errc::size_mismatch, "seed hints of unequal size");

  std::vector<Vec> rows;              // echelon, pivot-sorted
  std::vector<IndexedMat> mats;       // reduced basis elements in adjoin order
  std::vector<long long> scratch;

  auto adjoin = [&](const ExactMatrix& candidate) {
    Vec v = flatten(candidate);
    if (!reduce(v, rows, scratch)) return;
    ExactMatrix reduced = unflatten(size, v);
    insert_sorted(rows, std::move(v));
    mats.push_back(index_matrix(std::move(reduced)));
  };

  // Hints are elements of the generated algebra supplied by the caller; they
  // go in first so that the echelon localizes early.  The generators then
  // reduce against them, so the final span is unchanged.
  for (const ExactMatrix& h : seed_hints) adjoin(h);
  for (const ExactMatrix& g : generators) adjoin(g);

  // Worklist: when element i is processed, its products with every element
  // adjoined before it (and itself) are tried on both sides; later arrivals
  // pick up the remaining pairs when their own turn comes.
  for (size_t i = 0; i < mats.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      if (can_connect(mats[i], mats[j])) {
        ExactMatrix prod = indexed_product(mats[i], mats[j]);
        if (!prod.is_zero()) adjoin(prod);
      }
      if (j != i && can_connect(mats[j], mats[i])) {
        ExactMatrix prod = indexed_product(mats[j], mats[i]);
        if (!prod.is_zero()) adjoin(prod);
      }
    }
  }

  MatrixSpan span;
  span.matrix_size_ = size;
  span.closed_ = true;
  span.generators_ = std::move(generators);
  for (const Vec& row : rows) span.basis_.push_back(unflatten(size, row));
  return span;
}

int span_closure_dimension(const std::vector<ExactMatrix>& generators) {
  return span_closure(generators).dimension();
}

namespace {

// B*G - G*B for a 0/1 generator via its incidence lists; false when the
// entries are too large for the machine-word bound.
bool commutator_sparse01(const ExactMatrix& basis_elem, const ExactMatrix& gen,
                         std::vector<long long>& out) {
  const auto* b = basis_elem.small_data();
  const auto* g = gen.small_data();
  if (!b || !g) return false;
  const int n = basis_elem.size();
  unsigned long long mb = 0;
  for (long long v : *b) mb = std::max(mb, abs_ull(v));
  // entries of BG and GB are sums of at most n basis entries
  if (mb != 0 &&
      (unsigned __int128)mb * (2 * static_cast<unsigned>(n)) >
          static_cast<unsigned __int128>(LLONG_MAX))
    return false;

  std::vector<std::vector<int>> ones(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if ((*g)[static_cast<size_t>(r) * n + c] != 0) ones[static_cast<size_t>(r)].push_back(c);

  out.assign(static_cast<size_t>(n) * n, 0);
  // BG: out[i][j] += B[i][k] for each k and j with G[k][j] = 1
  for (int i = 0; i < n; ++i) {
    const long long* brow = &(*b)[static_cast<size_t>(i) * n];
    long long* orow = &out[static_cast<size_t>(i) * n];
    for (int k = 0; k < n; ++k) {
      long long bik = brow[k];
      if (bik == 0) continue;
      for (int j : ones[static_cast<size_t>(k)]) orow[j] += bik;
    }
  }
  // GB: out[i][j] -= B[k][j] for each k with G[i][k] = 1
  for (int i = 0; i < n; ++i) {
    long long* orow = &out[static_cast<size_t>(i) * n];
    for (int k : ones[static_cast<size_t>(i)]) {
      const long long* brow = &(*b)[static_cast<size_t>(k) * n];
      for (int j = 0; j < n; ++j) orow[j] -= brow[j];
    }
  }
  return true;
}

}  // namespace

int center_dimension(const MatrixSpan& span) {
  if (!span.closed())
    throw Error(errc::not_closed, "center needs a multiplication-closed span");
  const int d = span.dimension();
  if (d == 0) return 0;
  const int n = span.matrix_size();
  const size_t positions = static_cast<size_t>(n) * n;

  // Commuting with a generating set is commuting with the whole algebra;
  // fall back to the basis itself when the span carries no generator list.
  const auto& testers = span.generators().empty() ? span.basis() : span.generators();

  std::vector<Vec> rows;  // echelon over the coefficient space Q^d
  std::vector<long long> scratch;
  std::vector<std::vector<long long>> comm_small(static_cast<size_t>(d));
  std::vector<ExactMatrix> comm_big(static_cast<size_t>(d));
  std::vector<bool> comm_is_small(static_cast<size_t>(d));

  for (const ExactMatrix& gen : testers) {
    const bool sparse = gen.is_zero_one();
    for (int i = 0; i < d; ++i) {
      comm_is_small[static_cast<size_t>(i)] =
          sparse && commutator_sparse01(span.basis()[static_cast<size_t>(i)], gen,
                                        comm_small[static_cast<size_t>(i)]);
      if (!comm_is_small[static_cast<size_t>(i)])
        comm_big[static_cast<size_t>(i)] =
            span.basis()[static_cast<size_t>(i)] * gen - gen * span.basis()[static_cast<size_t>(i)];
    }
    bool any_big = false;
    for (int i = 0; i < d && !any_big; ++i)
      if (!comm_is_small[static_cast<size_t>(i)] && comm_big[static_cast<size_t>(i)].uses_bigint())
        any_big = true;
    for (size_t t = 0; t < positions; ++t) {
      Vec row;
      if (!any_big) {
        row.small.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
          row.small[static_cast<size_t>(i)] =
              comm_is_small[static_cast<size_t>(i)]
                  ? comm_small[static_cast<size_t>(i)][t]
                  : (*comm_big[static_cast<size_t>(i)].small_data())[t];
      } else {
        row.is_big = true;
        row.big.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
          row.big[static_cast<size_t>(i)] =
              comm_is_small[static_cast<size_t>(i)]
                  ? BigInt(comm_small[static_cast<size_t>(i)][t])
                  : comm_big[static_cast<size_t>(i)].at(static_cast<int>(t) / n,
                                                        static_cast<int>(t) % n);
      }
      row.tail = row.size();
      row.shrink_tail();
      row.recompute_lead();
      if (row.lead == Vec::npos) continue;
      if (reduce(row, rows, scratch)) insert_sorted(rows, std::move(row));
      if (static_cast<int>(rows.size()) == d) return 0;
    }
  }
  return d - static_cast<int>(rows.size());
}

WedderburnReport verify_wedderburn(const LatinSquare& square, const Point& p,
                                   bool with_center) {
  check_point(square, p);
  WedderburnReport report;
  report.order = square.order();
  report.base = p;

  auto relations = relation_matrices(square);
  auto idempotents = dual_idempotent_matrices(square, p);

  // E*_a A_i E*_b localizations: products of the generators, fed to the
  // closure first so the working basis stays supported on single blocks of
  // the subconstituent partition.
  std::vector<ExactMatrix> hints;
  hints.reserve(80);
  for (const ExactMatrix& relation : relations) {
    for (const ExactMatrix& left : idempotents) {
      ExactMatrix piece = left * relation;
      for (const ExactMatrix& right : idempotents) {
        ExactMatrix sandwich = piece * right;
        if (!sandwich.is_zero()) hints.push_back(std::move(sandwich));
      }
    }
  }

  std::vector<ExactMatrix> generators;
  generators.reserve(10);
  for (auto& m : relations) generators.push_back(std::move(m));
  for (auto& m : idempotents) generators.push_back(std::move(m));

  MatrixSpan span = span_closure(std::move(generators), hints);
  report.oracle_dimension = span.dimension();

  if (square.order() >= 5) {
    auto table = module_table(square.order(), cycle_structure(pi_of(square, p)));
    auto signature =
        wedderburn_signature(table, table.cycle_count, static_cast<int>(table.roots.size()));
    report.predicted_n = signature.six_count;
    report.predicted_dimension = signature.algebra_dimension();
    report.dimension_match = report.oracle_dimension == *report.predicted_dimension;
  }
  if (with_center) {
    report.center_dim = center_dimension(span);
    if (report.predicted_n) {
      report.predicted_center = *report.predicted_n + 2;
      report.center_match = *report.center_dim == *report.predicted_center;
    }
  }
  return report;
}

}  // namespace lsq
