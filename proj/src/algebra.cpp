#include "orelab/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace orelab {

Algebra::Algebra(BaseRing base, std::size_t dim,
                 std::vector<Scalar> structure_constants, AlgElem unit,
                 std::vector<std::string> basis_names)
    : base_(base), dim_(dim), sc_(std::move(structure_constants)),
      unit_(std::move(unit)), names_(std::move(basis_names)) {
  if (dim_ == 0) fail(ErrorCode::dimension_mismatch, "dim must be positive");
  if (sc_.size() != dim_ * dim_ * dim_)
    fail(ErrorCode::dimension_mismatch, "structure constant count");
  if (unit_.size() != dim_) fail(ErrorCode::dimension_mismatch, "unit length");
  for (const auto& s : sc_)
    if (!(s.ring() == base_)) fail(ErrorCode::base_mismatch, "structure constants");
  for (const auto& s : unit_)
    if (!(s.ring() == base_)) fail(ErrorCode::base_mismatch, "unit");
  if (!names_.empty() && names_.size() != dim_)
    fail(ErrorCode::dimension_mismatch, "basis name count");
  for (std::size_t i = 0; i < dim_; ++i) {
    AlgElem e = basis_elem(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e)
      fail(ErrorCode::unit_axiom_violation,
           "unit fails on basis vector " + std::to_string(i));
  }
}

AlgElem Algebra::basis_elem(std::size_t i) const {
  if (i >= dim_) fail(ErrorCode::out_of_range, "basis index");
  AlgElem e = zero();
  e[i] = one_of(base_);
  return e;
}

void Algebra::check_elem(const AlgElem& a) const {
  if (a.size() != dim_) fail(ErrorCode::dimension_mismatch, "element length");
}

AlgElem Algebra::add(const AlgElem& a, const AlgElem& b) const {
  check_elem(a);
  check_elem(b);
  return vec_add(a, b);
}

AlgElem Algebra::sub(const AlgElem& a, const AlgElem& b) const {
  check_elem(a);
  check_elem(b);
  return vec_sub(a, b);
}

AlgElem Algebra::neg(const AlgElem& a) const {
  check_elem(a);
  AlgElem out(a);
  for (auto& x : out) x = -x;
  return out;
}

AlgElem Algebra::scale(const Scalar& c, const AlgElem& a) const {
  check_elem(a);
  return vec_scale(c, a);
}

AlgElem Algebra::mul(const AlgElem& a, const AlgElem& b) const {
  check_elem(a);
  check_elem(b);
  AlgElem out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar cij = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = sc(i, j, k);
        if (!c.is_zero()) out[k] += cij * c;
      }
    }
  }
  return out;
}

AlgElem Algebra::commutator(const AlgElem& a, const AlgElem& b) const {
  return sub(mul(a, b), mul(b, a));
}

AlgElem Algebra::associator(const AlgElem& a, const AlgElem& b,
                            const AlgElem& c) const {
  return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

std::optional<Scalar> Algebra::as_scalar_multiple_of_unit(const AlgElem& a) const {
  check_elem(a);
  // Find lambda from the first nonzero unit coordinate, then verify.
  Scalar lambda = zero_of(base_);
  bool found = false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!unit_[i].is_zero()) {
      if (!unit_[i].is_invertible()) break;
      lambda = a[i] * unit_[i].inverse();
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;
  if (scale(lambda, unit_) == a) return lambda;
  return std::nullopt;
}

bool Algebra::is_associative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(associator(basis_elem(i), basis_elem(j), basis_elem(k))))
          return false;
  return true;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!is_zero(commutator(basis_elem(i), basis_elem(j)))) return false;
  return true;
}

Mat Algebra::left_mul_matrix(const AlgElem& a) const {
  check_elem(a);
  Mat m(base_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgElem col = mul(a, basis_elem(j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Mat Algebra::right_mul_matrix(const AlgElem& a) const {
  check_elem(a);
  Mat m(base_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgElem col = mul(basis_elem(j), a);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::string Algebra::elem_str(const AlgElem& a) const {
  check_elem(a);
  if (auto lambda = as_scalar_multiple_of_unit(a)) return lambda->str();
  if (!names_.empty()) {
    // Single named basis vector with coefficient 1.
    std::size_t nz = dim_, count = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!a[i].is_zero()) { nz = i; ++count; }
    if (count == 1 && a[nz].is_one()) return names_[nz];
  }
  std::string out = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ",";
    out += a[i].str();
  }
  return out + ")";
}

AlgElem Algebra::parse_elem(std::string_view text) const {
  std::string t(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') fail(ErrorCode::parse_error, "unterminated tuple '" + t + "'");
    std::string body = t.substr(1, t.size() - 2);
    AlgElem out = zero();
    std::size_t pos = 0, idx = 0;
    while (pos <= body.size() && idx < dim_) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(
          pos, comma == std::string::npos ? body.size() - pos : comma - pos);
      out[idx++] = Scalar::parse(base_, item);
      if (comma == std::string::npos) { pos = body.size() + 1; break; }
      pos = comma + 1;
    }
    if (idx != dim_ || pos <= body.size())
      fail(ErrorCode::parse_error, "tuple arity in '" + t + "'");
    return out;
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == t) return basis_elem(i);
  // Fallback: a bare scalar, meaning lambda * 1.
  return scale(Scalar::parse(base_, t), unit_);
}

AddMap AddMap::identity(BaseRing r, std::size_t d) {
  AddMap m(r, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = one_of(r);
  return m;
}

bool AddMap::is_zero() const {
  return std::all_of(m.begin(), m.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool AddMap::is_identity() const { return *this == identity(ring, dim); }

AlgElem map_apply(const AddMap& m, const AlgElem& r) {
  if (r.size() != m.dim) fail(ErrorCode::dimension_mismatch, "apply");
  AlgElem out = zero_vec(m.ring, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    if (r[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.dim; ++i) {
      const Scalar& c = m.at(i, j);
      if (!c.is_zero()) out[i] += c * r[j];
    }
  }
  return out;
}

AddMap compose(const AddMap& f, const AddMap& g) {
  if (f.dim != g.dim) fail(ErrorCode::dimension_mismatch, "compose");
  AddMap out(f.ring, f.dim);
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t k = 0; k < f.dim; ++k) {
      const Scalar& fik = f.at(i, k);
      if (fik.is_zero()) continue;
      for (std::size_t j = 0; j < f.dim; ++j)
        if (!g.at(k, j).is_zero()) out.at(i, j) += fik * g.at(k, j);
    }
  return out;
}

AddMap map_add(const AddMap& f, const AddMap& g) {
  if (f.dim != g.dim) fail(ErrorCode::dimension_mismatch, "map_add");
  AddMap out = f;
  for (std::size_t i = 0; i < out.m.size(); ++i) out.m[i] += g.m[i];
  return out;
}

AddMap map_sub(const AddMap& f, const AddMap& g) {
  if (f.dim != g.dim) fail(ErrorCode::dimension_mismatch, "map_sub");
  AddMap out = f;
  for (std::size_t i = 0; i < out.m.size(); ++i) out.m[i] -= g.m[i];
  return out;
}

AddMap map_scale(const Scalar& c, const AddMap& f) {
  AddMap out = f;
  for (auto& x : out.m) x *= c;
  return out;
}

AddMap map_power(const AddMap& f, std::uint64_t n) {
  AddMap out = AddMap::identity(f.ring, f.dim);
  for (std::uint64_t i = 0; i < n; ++i) out = compose(out, f);
  return out;
}

std::vector<AddMap> map_power_orbit(const AddMap& m, std::size_t bound) {
  std::vector<AddMap> orbit;
  AddMap cur = AddMap::identity(m.ring, m.dim);
  for (;;) {
    if (std::find(orbit.begin(), orbit.end(), cur) != orbit.end()) return orbit;
    if (m.ring.kind == BaseKind::rational && orbit.size() >= bound)
      fail(ErrorCode::orbit_bound_exceeded,
           "no repetition within " + std::to_string(bound) + " powers");
    orbit.push_back(cur);
    cur = compose(cur, m);
  }
}

bool is_derivation(const Algebra& alg, const AddMap& m) {
  if (m.dim != alg.dim()) fail(ErrorCode::dimension_mismatch, "is_derivation");
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    AlgElem ei = alg.basis_elem(i);
    AlgElem di = map_apply(m, ei);
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      AlgElem ej = alg.basis_elem(j);
      AlgElem lhs = map_apply(m, alg.mul(ei, ej));
      AlgElem rhs = alg.add(alg.mul(di, ej), alg.mul(ei, map_apply(m, ej)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// Appends the rows of "condition(r) = 0" for the linear map given by its
// values on basis vectors.
void append_linear_condition(Mat& sys, const Algebra& alg,
                             const std::vector<AlgElem>& images) {
  const std::size_t d = alg.dim();
  for (std::size_t k = 0; k < d; ++k) {
    Vec row = zero_vec(alg.base(), d);
    for (std::size_t i = 0; i < d; ++i) row[i] = images[i][k];
    sys.append_row(row);
  }
}

std::vector<AlgElem> run_solution(const Mat& sys) { return solution_space(sys); }

}  // namespace

std::vector<AlgElem> nucleus(const Algebra& alg, NucleusKind which) {
  const std::size_t d = alg.dim();
  Mat sys(alg.base(), 0, d);
  auto add_conditions = [&](NucleusKind kind) {
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        std::vector<AlgElem> images;
        images.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
          AlgElem r = alg.basis_elem(i), es = alg.basis_elem(s), et = alg.basis_elem(t);
          switch (kind) {
            case NucleusKind::left:
              images.push_back(alg.associator(r, es, et));
              break;
            case NucleusKind::middle:
              images.push_back(alg.associator(es, r, et));
              break;
            case NucleusKind::right:
              images.push_back(alg.associator(es, et, r));
              break;
            case NucleusKind::full:
              break;
          }
        }
        if (!images.empty()) append_linear_condition(sys, alg, images);
      }
    }
  };
  if (which == NucleusKind::full) {
    add_conditions(NucleusKind::left);
    add_conditions(NucleusKind::middle);
    add_conditions(NucleusKind::right);
  } else {
    add_conditions(which);
  }
  return run_solution(sys);
}

std::vector<AlgElem> commuter(const Algebra& alg) {
  const std::size_t d = alg.dim();
  Mat sys(alg.base(), 0, d);
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<AlgElem> images;
    images.reserve(d);
    for (std::size_t i = 0; i < d; ++i)
      images.push_back(alg.commutator(alg.basis_elem(i), alg.basis_elem(s)));
    append_linear_condition(sys, alg, images);
  }
  return run_solution(sys);
}

void append_center_conditions(const Algebra& alg, Mat& sys) {
  const std::size_t d = alg.dim();
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<AlgElem> images;
    for (std::size_t i = 0; i < d; ++i)
      images.push_back(alg.commutator(alg.basis_elem(i), alg.basis_elem(s)));
    append_linear_condition(sys, alg, images);
    for (std::size_t t = 0; t < d; ++t) {
      for (int slot = 0; slot < 3; ++slot) {
        std::vector<AlgElem> im;
        for (std::size_t i = 0; i < d; ++i) {
          AlgElem r = alg.basis_elem(i), es = alg.basis_elem(s), et = alg.basis_elem(t);
          im.push_back(slot == 0 ? alg.associator(r, es, et)
                                 : slot == 1 ? alg.associator(es, r, et)
                                             : alg.associator(es, et, r));
        }
        append_linear_condition(sys, alg, im);
      }
    }
  }
}

void append_kernel_conditions(const Algebra& alg, const std::vector<AddMap>& maps,
                              Mat& sys) {
  const std::size_t d = alg.dim();
  for (const auto& m : maps) {
    if (m.dim != d) fail(ErrorCode::dimension_mismatch, "kernel condition");
    for (std::size_t i = 0; i < d; ++i) {
      Vec row = zero_vec(alg.base(), d);
      for (std::size_t j = 0; j < d; ++j) row[j] = m.at(i, j);
      sys.append_row(row);
    }
  }
}

std::vector<AlgElem> center(const Algebra& alg) {
  Mat sys(alg.base(), 0, alg.dim());
  append_center_conditions(alg, sys);
  return run_solution(sys);
}

std::vector<AlgElem> joint_kernel(const Algebra& alg,
                                  const std::vector<AddMap>& maps) {
  Mat sys(alg.base(), 0, alg.dim());
  append_kernel_conditions(alg, maps, sys);
  return run_solution(sys);
}

}  // namespace orelab
