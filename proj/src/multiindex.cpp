#include "orelab/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace orelab {

MultiIndex MultiIndex::unit(std::size_t k, std::size_t i) {
  if (i >= k) fail(ErrorCode::out_of_range, "unit multi-index");
  MultiIndex f = zeros(k);
  f.exps[i] = 1;
  return f;
}

std::uint64_t MultiIndex::weight() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool MultiIndex::is_zero() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

std::vector<std::size_t> MultiIndex::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) s.push_back(i);
  return s;
}

std::string MultiIndex::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps[i]);
  }
  return out + "]";
}

MultiIndex MultiIndex::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    fail(ErrorCode::parse_error, "bad multi-index '" + std::string(text) + "'");
  std::vector<std::uint32_t> exps;
  std::string_view body = text.substr(1, text.size() - 2);
  if (!body.empty()) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string_view item = body.substr(
          pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc{} || p != item.data() + item.size())
        fail(ErrorCode::parse_error, "bad multi-index entry '" + std::string(item) + "'");
      exps.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MultiIndex(std::move(exps));
}

namespace {
void check_arity(const MultiIndex& f, const MultiIndex& g) {
  if (f.arity() != g.arity())
    fail(ErrorCode::arity_mismatch,
         f.str() + " vs " + g.str());
}
}  // namespace

MultiIndex mi_add(const MultiIndex& f, const MultiIndex& g) {
  check_arity(f, g);
  MultiIndex out = f;
  for (std::size_t i = 0; i < g.exps.size(); ++i) out.exps[i] += g.exps[i];
  return out;
}

bool mi_le(const MultiIndex& f, const MultiIndex& g) {
  check_arity(f, g);
  for (std::size_t i = 0; i < f.exps.size(); ++i)
    if (f.exps[i] > g.exps[i]) return false;
  return true;
}

MultiIndex mi_sub(const MultiIndex& f, const MultiIndex& g) {
  check_arity(f, g);
  MultiIndex out = f;
  for (std::size_t i = 0; i < g.exps.size(); ++i) {
    if (g.exps[i] > f.exps[i])
      fail(ErrorCode::subtraction_underflow, f.str() + " - " + g.str());
    out.exps[i] -= g.exps[i];
  }
  return out;
}

int graded_lex_cmp(const MultiIndex& f, const MultiIndex& g) {
  check_arity(f, g);
  std::uint64_t wf = f.weight(), wg = g.weight();
  if (wf != wg) return wf < wg ? -1 : 1;
  // Equal weights: decide at the largest differing index.
  for (std::size_t i = f.arity(); i-- > 0;) {
    if (f.exps[i] != g.exps[i]) return f.exps[i] < g.exps[i] ? -1 : 1;
  }
  return 0;
}

mpz_class multi_binom_z(const MultiIndex& f, const MultiIndex& g) {
  check_arity(f, g);
  mpz_class out = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (g.exps[i] > f.exps[i]) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), f.exps[i], g.exps[i]);
    out *= b;
  }
  return out;
}

Scalar multi_binom(const MultiIndex& f, const MultiIndex& g, BaseRing ring) {
  return Scalar::from_mpz(ring, multi_binom_z(f, g));
}

Scalar parity_sign(const MultiIndex& f, BaseRing ring) {
  return Scalar::from_int(ring, f.weight() % 2 == 0 ? 1 : -1);
}

std::int64_t lucas_binom_mod_p(std::uint64_t m, std::uint64_t n, std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::not_prime, std::to_string(p));
  auto up = static_cast<std::uint64_t>(p);
  std::int64_t out = 1;
  while (m > 0 || n > 0) {
    std::uint64_t md = m % up, nd = n % up;
    if (nd > md) return 0;
    // C(md, nd) with md, nd < p; values stay small.
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < nd; ++i) c = c * (md - i) / (i + 1);
    out = static_cast<std::int64_t>(
        (static_cast<std::uint64_t>(out) * (c % up)) % up);
    m /= up;
    n /= up;
  }
  return out;
}

MultiIndex p_power_index(const std::vector<ExtNat>& t, std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::not_prime, std::to_string(p));
  MultiIndex out = MultiIndex::zeros(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].neg_inf) {
      out.exps[i] = 0;
    } else {
      std::uint64_t v = 1;
      for (std::uint32_t j = 0; j < t[i].value; ++j) v *= static_cast<std::uint64_t>(p);
      if (v > 0xffffffffULL) fail(ErrorCode::too_large, "p^t overflows");
      out.exps[i] = static_cast<std::uint32_t>(v);
    }
  }
  return out;
}

namespace {
void enumerate(std::size_t arity, std::uint64_t budget, MultiIndex& cur,
               std::size_t pos, std::vector<MultiIndex>& out) {
  if (pos == arity) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t e = 0; e <= budget; ++e) {
    cur.exps[pos] = static_cast<std::uint32_t>(e);
    enumerate(arity, budget - e, cur, pos + 1, out);
  }
  cur.exps[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> multi_indices_up_to(std::size_t arity,
                                            std::uint64_t max_weight) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zeros(arity);
  if (arity == 0) {
    out.push_back(cur);
    return out;
  }
  enumerate(arity, max_weight, cur, 0, out);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return graded_lex_cmp(a, b) < 0;
  });
  return out;
}

}  // namespace orelab
