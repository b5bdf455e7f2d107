#include "orelab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace orelab {

void Mat::append_row(const Vec& v) {
  if (v.size() != cols) fail(ErrorCode::dimension_mismatch, "row length");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Vec zero_vec(BaseRing ring, std::size_t n) { return Vec(n, zero_of(ring)); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(ErrorCode::dimension_mismatch, "vec_add");
  Vec out(u);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

Vec vec_sub(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(ErrorCode::dimension_mismatch, "vec_sub");
  Vec out(u);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= c;
  return out;
}

RowSpan::RowSpan(BaseRing ring, std::size_t dim) : ring_(ring), dim_(dim) {
  if (!ring.is_field())
    fail(ErrorCode::unsupported_base, "RowSpan requires a field base");
}

Vec RowSpan::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];  // by value: the loop writes v[pivot]
    if (!c.is_zero()) {
      for (std::size_t j = pivots_[i]; j < dim_; ++j)
        v[j] -= c * rows_[i][j];
    }
  }
  return v;
}

bool RowSpan::contains(Vec v) const { return vec_is_zero(reduce(std::move(v))); }

bool RowSpan::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
  // Back-substitute into existing rows to keep the form fully reduced.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = rows_[i][p];
    if (!c.is_zero())
      for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= c * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  if (!m.ring.is_field())
    fail(ErrorCode::unsupported_base, "kernel_basis requires a field base");
  // Row-reduce a working copy, tracking pivot columns.
  Mat w = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t sel = r;
    while (sel < w.rows && w.at(sel, c).is_zero()) ++sel;
    if (sel == w.rows) continue;
    for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(sel, j));
    Scalar inv = w.at(r, c).inverse();
    for (std::size_t j = c; j < w.cols; ++j) w.at(r, j) *= inv;
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == r) continue;
      Scalar f = w.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(w.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < w.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(w.ring, w.cols);
    v[c] = one_of(w.ring);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = -w.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (!m.ring.is_field())
    fail(ErrorCode::unsupported_base, "solve requires a field base");
  if (b.size() != m.rows) fail(ErrorCode::dimension_mismatch, "solve rhs");
  Mat w(m.ring, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < w.rows; ++c) {
    std::size_t sel = r;
    while (sel < w.rows && w.at(sel, c).is_zero()) ++sel;
    if (sel == w.rows) continue;
    for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(sel, j));
    Scalar inv = w.at(r, c).inverse();
    for (std::size_t j = c; j < w.cols; ++j) w.at(r, j) *= inv;
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == r) continue;
      Scalar f = w.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < w.rows; ++i)
    if (!w.at(i, m.cols).is_zero()) return std::nullopt;
  Vec x = zero_vec(m.ring, m.cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = w.at(i, m.cols);
  return x;
}

namespace {

struct ZnRow {
  std::vector<std::int64_t> u;  // image part (length m)
  std::vector<std::int64_t> w;  // coordinate part (length d)
};

std::int64_t zmod(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

std::int64_t zmul(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

void row_scale(ZnRow& r, std::int64_t c, std::int64_t n) {
  for (auto& x : r.u) x = zmul(x, c, n);
  for (auto& x : r.w) x = zmul(x, c, n);
}

ZnRow row_comb(const ZnRow& x, std::int64_t a, const ZnRow& y, std::int64_t b,
               std::int64_t n) {
  ZnRow out = x;
  for (std::size_t i = 0; i < out.u.size(); ++i)
    out.u[i] = zmod(zmul(x.u[i], a, n) + zmul(y.u[i], b, n), n);
  for (std::size_t i = 0; i < out.w.size(); ++i)
    out.w[i] = zmod(zmul(x.w[i], a, n) + zmul(y.w[i], b, n), n);
  return out;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
  while (r != 0) {
    std::int64_t q = old_r / r, tmp;
    tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * ss; old_s = ss; ss = tmp;
    tmp = old_t - q * tt; old_t = tt; tt = tmp;
  }
  s = old_s; t = old_t;
  return old_r;
}

// Unit e of Z_n with e*v = gcd(v, n) mod n.
std::int64_t unit_to_gcd(std::int64_t v, std::int64_t n) {
  std::int64_t g = std::gcd(v, n);
  std::int64_t a = v / g, b = n / g;
  for (std::int64_t t = 0;; ++t) {
    std::int64_t cand = zmod(a + b * t, n);
    if (std::gcd(cand == 0 ? n : cand, n) == 1) {
      std::int64_t s, u;
      egcd(cand, n, s, u);
      return zmod(s, n);
    }
  }
}

}  // namespace

std::vector<Vec> zn_kernel_generators(const Mat& m) {
  if (m.ring.kind != BaseKind::zn)
    fail(ErrorCode::unsupported_base, "zn_kernel_generators requires Zn");
  const std::int64_t n = m.ring.modulus;
  const std::size_t rows = m.rows, d = m.cols;

  std::vector<ZnRow> queue;
  for (std::size_t j = 0; j < d; ++j) {
    ZnRow r;
    r.u.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) r.u[i] = m.at(i, j).residue();
    r.w.assign(d, 0);
    r.w[j] = 1;
    queue.push_back(std::move(r));
  }

  std::vector<std::optional<ZnRow>> slot(rows);       // echelon over the u-part
  std::vector<std::optional<ZnRow>> kslot(d);         // echelon over deposited kernel rows
  std::vector<ZnRow> work(queue.rbegin(), queue.rend());

  auto lead = [](const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return v.size();
  };

  while (!work.empty()) {
    ZnRow row = std::move(work.back());
    work.pop_back();
    for (;;) {
      std::size_t p = lead(row.u);
      if (p == row.u.size()) {
        // Pure kernel row: echelonize into the collector.
        for (;;) {
          std::size_t q = lead(row.w);
          if (q == row.w.size()) break;
          if (!kslot[q]) {
            std::int64_t e = unit_to_gcd(row.w[q], n);
            row_scale(row, e, n);
            std::int64_t g = row.w[q];
            std::int64_t ann = n / std::gcd(g, n);
            kslot[q] = row;
            if (ann % n != 0) {
              ZnRow extra = row;
              row_scale(extra, zmod(ann, n), n);
              work.push_back(std::move(extra));
            }
            break;
          }
          ZnRow& ex = *kslot[q];
          std::int64_t g = ex.w[q], v = row.w[q];
          if (v % g == 0) {
            row = row_comb(row, 1, ex, zmod(-(v / g), n), n);
            continue;
          }
          std::int64_t s, t;
          std::int64_t dgcd = egcd(g, v, s, t);
          ZnRow z = row_comb(ex, zmod(s, n), row, zmod(t, n), n);
          ZnRow wrow = row_comb(ex, zmod(v / dgcd, n), row, zmod(-(g / dgcd), n), n);
          std::int64_t e = unit_to_gcd(z.w[q], n);
          row_scale(z, e, n);
          std::int64_t ann = n / std::gcd(z.w[q], n);
          kslot[q] = z;
          if (ann % n != 0) {
            ZnRow extra = *kslot[q];
            row_scale(extra, zmod(ann, n), n);
            work.push_back(std::move(extra));
          }
          row = std::move(wrow);
        }
        break;
      }
      if (!slot[p]) {
        std::int64_t e = unit_to_gcd(row.u[p], n);
        row_scale(row, e, n);
        std::int64_t g = row.u[p];
        std::int64_t ann = n / std::gcd(g, n);
        slot[p] = row;
        if (ann % n != 0) {
          ZnRow extra = row;
          row_scale(extra, zmod(ann, n), n);
          work.push_back(std::move(extra));
        }
        break;
      }
      ZnRow& ex = *slot[p];
      std::int64_t g = ex.u[p], v = row.u[p];
      if (v % g == 0) {
        row = row_comb(row, 1, ex, zmod(-(v / g), n), n);
        continue;
      }
      std::int64_t s, t;
      std::int64_t dgcd = egcd(g, v, s, t);
      ZnRow z = row_comb(ex, zmod(s, n), row, zmod(t, n), n);
      ZnRow wrow = row_comb(ex, zmod(v / dgcd, n), row, zmod(-(g / dgcd), n), n);
      std::int64_t e = unit_to_gcd(z.u[p], n);
      row_scale(z, e, n);
      std::int64_t ann = n / std::gcd(z.u[p], n);
      slot[p] = z;
      if (ann % n != 0) {
        ZnRow extra = *slot[p];
        row_scale(extra, zmod(ann, n), n);
        work.push_back(std::move(extra));
      }
      row = std::move(wrow);
    }
  }

  std::vector<Vec> gens;
  for (std::size_t q = 0; q < d; ++q) {
    if (!kslot[q]) continue;
    Vec v = zero_vec(m.ring, d);
    for (std::size_t j = 0; j < d; ++j)
      v[j] = Scalar::from_int(m.ring, kslot[q]->w[j]);
    gens.push_back(std::move(v));
  }
  return gens;
}

std::vector<Vec> solution_space(const Mat& m) {
  return m.ring.is_field() ? kernel_basis(m) : zn_kernel_generators(m);
}

}  // namespace orelab
