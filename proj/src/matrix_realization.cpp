#include "mwb/matrix_realization.hpp"

#include <algorithm>
#include <numeric>

namespace mwb {

SymMatrix::SymMatrix(int rows, int cols, std::size_t arity, std::optional<Truncation> trunc)
    : rows_(rows), cols_(cols), arity_(arity), trunc_(trunc),
      e_(static_cast<std::size_t>(rows * cols), LaurentPoly(arity)) {
  if (rows < 0 || cols < 0) throw InvalidInput("matrix dimensions must be nonnegative");
  if (trunc && trunc->var >= arity) throw IndexOutOfRange("truncation variable out of range");
}

SymMatrix SymMatrix::identity(int n, std::size_t arity, std::optional<Truncation> trunc) {
  SymMatrix m(n, n, arity, trunc);
  for (int i = 1; i <= n; ++i) m.set(i, i, LaurentPoly::constant(arity, 1));
  return m;
}

const LaurentPoly& SymMatrix::operator()(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexOutOfRange("matrix index out of range");
  return e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

void SymMatrix::set(int i, int j, LaurentPoly v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexOutOfRange("matrix index out of range");
  if (v.arity() != arity_) throw ArityMismatch("matrix entry arity mismatch");
  e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))] = clip(std::move(v));
}

LaurentPoly SymMatrix::clip(LaurentPoly p) const {
  if (!trunc_) return p;
  return truncate(p, trunc_->var, trunc_->degree);
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shapes do not compose");
  if (a.arity_ != b.arity_) throw ArityMismatch("matrix arity mismatch");
  auto trunc = a.trunc_ ? a.trunc_ : b.trunc_;
  SymMatrix out(a.rows_, b.cols_, a.arity_, trunc);
  for (int i = 1; i <= a.rows_; ++i)
    for (int j = 1; j <= b.cols_; ++j) {
      LaurentPoly s(a.arity_);
      for (int k = 1; k <= a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      out.set(i, j, std::move(s));
    }
  return out;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m,
                        std::optional<SymMatrix::Truncation> trunc) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant needs a square matrix");
  const std::size_t arity = m[0][0].arity();
  auto clip = [&](LaurentPoly p) {
    return trunc ? truncate(p, trunc->var, trunc->degree) : p;
  };
  if (n == 1) return clip(m[0][0]);
  LaurentPoly total(arity);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    LaurentPoly term = clip(m[0][c] * determinant(sub, trunc));
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

LaurentPoly minor(const SymMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw InvalidInput("minor needs equally many rows and columns");
  if (rows.empty()) return LaurentPoly::constant(m.arity(), 1);
  std::vector<std::vector<LaurentPoly>> sub;
  for (int r : rows) {
    std::vector<LaurentPoly> row;
    for (int c : cols) row.push_back(m(r, c));
    sub.push_back(std::move(row));
  }
  return determinant(sub, m.truncation());
}

SymMatrix one_param(const Model& model, int i, const LaurentPoly& t, std::size_t z_var) {
  const std::size_t arity = t.arity();
  if (i < 1 || i > model.n) throw IndexOutOfRange("one-parameter subgroup index out of range");
  if (model.kind == Model::Kind::TypeA) {
    auto m = SymMatrix::identity(model.n + 1, arity);
    m.set(i, i + 1, t);
    return m;
  }
  SymMatrix::Truncation tr{z_var, model.truncation};
  auto m = SymMatrix::identity(2, arity, tr);
  if (i == 1)
    m.set(1, 2, t);
  else
    m.set(2, 1, t * LaurentPoly::variable(arity, z_var));
  return m;
}

Realization product_word(const Model& model, const WeylWord& w) {
  const int r = w.length();
  const bool affine = model.kind == Model::Kind::AffineSl2;
  Ring ring = Ring::indexed("t", static_cast<std::size_t>(r));
  if (affine) ring.names.push_back("z");
  const std::size_t arity = ring.arity();
  const std::size_t z = static_cast<std::size_t>(r);
  std::optional<SymMatrix::Truncation> tr;
  if (affine) tr = SymMatrix::Truncation{z, model.truncation};
  SymMatrix m = SymMatrix::identity(model.size(), arity, tr);
  for (int k = r; k >= 1; --k)
    m = m * one_param(model, w[k], LaurentPoly::variable(arity, static_cast<std::size_t>(k - 1)), z);
  return {std::move(ring), std::move(m)};
}

std::map<std::string, LaurentPoly> coordinate_functions(const Realization& r) {
  const auto& tr = r.matrix.truncation();
  if (!tr || r.matrix.rows() != 2) throw InvalidInput("coordinates need the affine sl2 model");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r.ring.arity(); ++i)
    if (i != tr->var) keep.push_back(i);
  std::map<std::string, LaurentPoly> out;
  const char* names = "abcd";
  for (int e = 0; e < 4; ++e) {
    const auto& entry = r.matrix(e / 2 + 1, e % 2 + 1);
    for (int k = (e == 1 ? 0 : 1); k <= tr->degree; ++k)
      out.emplace(std::string(1, names[e]) + std::to_string(k),
                  project(coefficient_of(entry, tr->var, k), keep));
  }
  return out;
}

Realization generic_unitriangular(int n) {
  Ring ring;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      ring.names.push_back(n < 10 ? "u" + std::to_string(i) + std::to_string(j)
                                  : "u" + std::to_string(i) + "_" + std::to_string(j));
  SymMatrix m = SymMatrix::identity(n, ring.arity());
  std::size_t idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, LaurentPoly::variable(ring.arity(), idx++));
  return {std::move(ring), std::move(m)};
}

std::string minor_name(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::string s = "D_{";
  for (int r : rows) s += std::to_string(r);
  s += ",";
  for (int c : cols) s += std::to_string(c);
  return s + "}";
}

std::pair<std::vector<int>, std::vector<int>> flag_minor_sets(const WeylWord& w, int k) {
  if (k < 1 || k > w.length()) throw IndexOutOfRange("word position out of range");
  const int i = w[k];
  std::vector<int> rows(static_cast<std::size_t>(i));
  std::iota(rows.begin(), rows.end(), 1);
  std::vector<int> cols = rows;
  for (int s = k; s >= 1; --s) {
    const int j = w[s];
    for (int& c : cols) {
      if (c == j) c = j + 1;
      else if (c == j + 1) c = j;
    }
  }
  std::sort(cols.begin(), cols.end());
  return {rows, cols};
}

}  // namespace mwb
