#include "orelab/monoid.hpp"

#include <algorithm>
#include <charconv>

#include "orelab/errors.hpp"

namespace orelab {

bool is_finite(const MonoidSpec& spec) {
  return std::holds_alternative<FiniteMonoid>(spec);
}

std::size_t free_arity(const MonoidSpec& spec) {
  return std::get<FreeCommutative>(spec).arity;
}

namespace {

const FiniteMonoid& fin(const MonoidSpec& spec) {
  return std::get<FiniteMonoid>(spec);
}

std::size_t idx_of(const MonoidSpec& spec, const MonoidElem& a) {
  if (!std::holds_alternative<std::size_t>(a))
    fail(ErrorCode::out_of_range, "element kind does not match monoid");
  std::size_t i = std::get<std::size_t>(a);
  if (i >= fin(spec).size) fail(ErrorCode::out_of_range, "monoid element index");
  return i;
}

const MultiIndex& mi_of(const MonoidSpec& spec, const MonoidElem& a) {
  if (!std::holds_alternative<MultiIndex>(a))
    fail(ErrorCode::out_of_range, "element kind does not match monoid");
  const MultiIndex& f = std::get<MultiIndex>(a);
  if (f.arity() != free_arity(spec))
    fail(ErrorCode::arity_mismatch, "monoid element arity");
  return f;
}

}  // namespace

MonoidElem identity_elem(const MonoidSpec& spec) {
  if (is_finite(spec)) return MonoidElem{fin(spec).identity};
  return MonoidElem{MultiIndex::zeros(free_arity(spec))};
}

bool is_identity(const MonoidSpec& spec, const MonoidElem& a) {
  if (is_finite(spec)) return idx_of(spec, a) == fin(spec).identity;
  return mi_of(spec, a).is_zero();
}

MonoidElem m_op(const MonoidSpec& spec, const MonoidElem& a, const MonoidElem& b) {
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    return MonoidElem{fm.cayley[idx_of(spec, a)][idx_of(spec, b)]};
  }
  return MonoidElem{mi_add(mi_of(spec, a), mi_of(spec, b))};
}

int m_cmp(const MonoidSpec& spec, const MonoidElem& a, const MonoidElem& b) {
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    std::size_t ia = idx_of(spec, a), ib = idx_of(spec, b);
    std::size_t ra = 0, rb = 0;
    for (std::size_t r = 0; r < fm.order.size(); ++r) {
      if (fm.order[r] == ia) ra = r;
      if (fm.order[r] == ib) rb = r;
    }
    return ra < rb ? -1 : ra > rb ? 1 : 0;
  }
  return graded_lex_cmp(mi_of(spec, a), mi_of(spec, b));
}

std::vector<std::pair<MonoidElem, MonoidElem>> factorizations(
    const MonoidSpec& spec, const MonoidElem& c) {
  std::vector<std::pair<MonoidElem, MonoidElem>> out;
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    std::size_t ic = idx_of(spec, c);
    for (std::size_t d = 0; d < fm.size; ++d)
      for (std::size_t e = 0; e < fm.size; ++e)
        if (fm.cayley[d][e] == ic) out.emplace_back(MonoidElem{d}, MonoidElem{e});
    return out;
  }
  const MultiIndex& f = mi_of(spec, c);
  std::vector<MultiIndex> ds = multi_indices_up_to(f.arity(), f.weight());
  for (const auto& d : ds) {
    if (!mi_le(d, f)) continue;
    out.emplace_back(MonoidElem{d}, MonoidElem{mi_sub(f, d)});
  }
  return out;
}

MonoidReport validate(const MonoidSpec& spec) {
  MonoidReport rep;
  if (!is_finite(spec)) return rep;
  const auto& fm = fin(spec);
  auto flag = [&](std::string v) {
    rep.valid = false;
    rep.violations.push_back(std::move(v));
  };
  if (fm.size == 0) {
    flag("empty monoid");
    return rep;
  }
  if (fm.identity >= fm.size) {
    flag("identity index out of range");
    return rep;
  }
  if (fm.cayley.size() != fm.size) {
    flag("cayley table row count");
    return rep;
  }
  for (std::size_t i = 0; i < fm.size; ++i) {
    if (fm.cayley[i].size() != fm.size) {
      flag("cayley table column count in row " + std::to_string(i));
      return rep;
    }
    for (std::size_t j = 0; j < fm.size; ++j)
      if (fm.cayley[i][j] >= fm.size)
        flag("closure violation at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
  }
  if (!rep.valid) return rep;
  for (std::size_t i = 0; i < fm.size; ++i) {
    if (fm.cayley[fm.identity][i] != i || fm.cayley[i][fm.identity] != i)
      flag("identity law fails at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < fm.size; ++i)
    for (std::size_t j = i + 1; j < fm.size; ++j)
      if (fm.cayley[i][j] != fm.cayley[j][i])
        flag("commutativity fails at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
  for (std::size_t i = 0; i < fm.size; ++i)
    for (std::size_t j = 0; j < fm.size; ++j)
      for (std::size_t k = 0; k < fm.size; ++k)
        if (fm.cayley[fm.cayley[i][j]][k] != fm.cayley[i][fm.cayley[j][k]])
          flag("associativity fails at (" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) + ")");
  if (fm.order.size() != fm.size) {
    flag("order is not a permutation (size)");
  } else {
    std::vector<bool> seen(fm.size, false);
    for (auto v : fm.order) {
      if (v >= fm.size || seen[v]) {
        flag("order is not a permutation");
        break;
      }
      seen[v] = true;
    }
    if (rep.valid && fm.order[0] != fm.identity)
      flag("order must list the identity first");
  }
  if (!fm.names.empty() && fm.names.size() != fm.size)
    flag("name count");
  return rep;
}

std::vector<MonoidElem> monoid_elements(const MonoidSpec& spec, std::uint64_t cap) {
  std::vector<MonoidElem> out;
  if (is_finite(spec)) {
    for (auto v : fin(spec).order) out.emplace_back(v);
    return out;
  }
  for (auto& f : multi_indices_up_to(free_arity(spec), cap))
    out.emplace_back(std::move(f));
  return out;
}

std::vector<MonoidElem> monoid_generators(const MonoidSpec& spec) {
  std::vector<MonoidElem> out;
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    for (auto v : fm.order)
      if (v != fm.identity) out.emplace_back(v);
    return out;
  }
  std::size_t k = free_arity(spec);
  for (std::size_t i = 0; i < k; ++i)
    out.emplace_back(MultiIndex::unit(k, i));
  return out;
}

std::string elem_str(const MonoidSpec& spec, const MonoidElem& a) {
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    std::size_t i = idx_of(spec, a);
    return fm.names.empty() ? std::to_string(i) : fm.names[i];
  }
  return mi_of(spec, a).str();
}

MonoidElem parse_monoid_elem(const MonoidSpec& spec, std::string_view text) {
  if (is_finite(spec)) {
    const auto& fm = fin(spec);
    for (std::size_t i = 0; i < fm.names.size(); ++i)
      if (fm.names[i] == text) return MonoidElem{i};
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size() || v >= fm.size)
      fail(ErrorCode::parse_error, "bad monoid element '" + std::string(text) + "'");
    return MonoidElem{v};
  }
  MultiIndex f = MultiIndex::parse(text);
  if (f.arity() != free_arity(spec))
    fail(ErrorCode::arity_mismatch, "monoid element arity in '" + std::string(text) + "'");
  return MonoidElem{f};
}

bool MonoidElemLess::operator()(const MonoidElem& a, const MonoidElem& b) const {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<std::size_t>(a))
    return std::get<std::size_t>(a) < std::get<std::size_t>(b);
  const auto& fa = std::get<MultiIndex>(a).exps;
  const auto& fb = std::get<MultiIndex>(b).exps;
  return fa < fb;
}

}  // namespace orelab
