#include "exgeo/matrix.hpp"

#include <atomic>
#include <stdexcept>

namespace exgeo {

namespace {
std::atomic<bool> g_self_check{true};
}

void set_linalg_self_check(bool on) { g_self_check.store(on); }
bool linalg_self_check() { return g_self_check.load(); }

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

FvVec Mat::row(std::size_t i) const {
  return FvVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

FvVec Mat::col(std::size_t j) const {
  FvVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

FvVec Mat::apply(const Field& f, const FvVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  FvVec out(rows_, f.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Fv acc = f.zero();
    for (std::size_t j = 0; j < cols_; ++j) acc = f.addmul(acc, at(i, j), v[j]);
    out[i] = acc;
  }
  return out;
}

Mat Mat::multiply(const Field& f, const Mat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("multiply: dimension mismatch");
  Mat out(f, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fv& v = at(i, k);
      if (f.is_zero(v)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = f.addmul(out.at(i, j), v, other.at(k, j));
    }
  return out;
}

Mat Mat::transposed() const {
  Mat out;
  out.rows_ = cols_;
  out.cols_ = rows_;
  out.a_.resize(a_.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = at(i, j);
  return out;
}

Mat rref(const Field& f, Mat m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    // first nonzero entry in row-major order
    std::size_t sel = m.rows();
    for (std::size_t i = pivot_row; i < m.rows(); ++i)
      if (!f.is_zero(m.at(i, col))) {
        sel = i;
        break;
      }
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    Fv inv = f.inv(m.at(pivot_row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) = f.mul(m.at(pivot_row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      Fv c = m.at(i, col);
      if (f.is_zero(c)) continue;
      Fv nc = f.neg(c);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = f.addmul(m.at(i, j), nc, m.at(pivot_row, j));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t rank(const Field& f, const Mat& m) {
  std::vector<std::size_t> piv;
  rref(f, m, &piv);
  return piv.size();
}

Mat kernel(const Field& f, const Mat& m) {
  std::vector<std::size_t> piv;
  Mat r = rref(f, m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::size_t nfree = m.cols() - piv.size();
  Mat k(f, m.cols(), nfree);
  std::size_t kcol = 0;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    k.at(free_col, kcol) = f.one();
    for (std::size_t pr = 0; pr < piv.size(); ++pr)
      k.at(piv[pr], kcol) = f.neg(r.at(pr, free_col));
    ++kcol;
  }
  if (linalg_self_check()) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      FvVec prod = m.apply(f, k.col(j));
      if (!is_zero_vec(f, prod)) throw std::logic_error("kernel self-check failed");
    }
  }
  return k;
}

SolveResult solve(const Field& f, const Mat& m, const FvVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Mat aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  Mat r = rref(f, aug, &piv);
  SolveResult res;
  if (!piv.empty() && piv.back() == m.cols()) {
    res.consistent = false;
    return res;
  }
  res.consistent = true;
  res.unique = piv.size() == m.cols();
  res.x.assign(m.cols(), f.zero());
  for (std::size_t pr = 0; pr < piv.size(); ++pr) res.x[piv[pr]] = r.at(pr, m.cols());
  if (linalg_self_check()) {
    FvVec prod = m.apply(f, res.x);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (prod[i] != b[i]) throw std::logic_error("solve self-check failed");
  }
  return res;
}

FvVec Subspace::reduce(FvVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Fv& c = v[pivots_[r]];
    if (f_.is_zero(c)) continue;
    Fv nc = f_.neg(c);
    add_scaled_inplace(f_, v, rows_[r], nc);
  }
  return v;
}

bool Subspace::contains(const FvVec& v) const { return is_zero_vec(f_, reduce(v)); }

bool Subspace::insert(FvVec v) {
  v = reduce(std::move(v));
  std::size_t lead = n_;
  for (std::size_t j = 0; j < n_; ++j)
    if (!f_.is_zero(v[j])) {
      lead = j;
      break;
    }
  if (lead == n_) return false;
  Fv inv = f_.inv(v[lead]);
  for (auto& c : v) c = f_.mul(c, inv);
  // back-substitute into existing rows, then insert keeping pivot order
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Fv c = rows_[r][lead];
    if (f_.is_zero(c)) continue;
    add_scaled_inplace(f_, rows_[r], v, f_.neg(c));
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

FvVec scaled(const Field& f, const FvVec& v, const Fv& c) {
  FvVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(v[i], c);
  return out;
}

void add_scaled_inplace(const Field& f, FvVec& v, const FvVec& w, const Fv& c) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.addmul(v[i], c, w[i]);
}

bool is_zero_vec(const Field& f, const FvVec& v) {
  for (const auto& c : v)
    if (!f.is_zero(c)) return false;
  return true;
}

}  // namespace exgeo
