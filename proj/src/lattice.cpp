#include "linrel/lattice.hpp"

#include <utility>

namespace linrel {

namespace {

// Row echelon form pivoting on the first pivot_cols coordinates. Trailing
// coordinates ride along (used for coefficient tracking). With modulus n the
// rows n*e_i (i < pivot_cols) are implicitly present.
class Echelon {
 public:
  Echelon(std::size_t width, std::size_t pivot_cols, Int modulus)
      : width_(width), pcols_(pivot_cols), n_(modulus), rows_(pivot_cols) {
    if (n_ != 0)
      for (std::size_t i = 0; i < pcols_; ++i) {
        Vec r(width_, 0);
        r[i] = n_;
        rows_[i] = std::move(r);
      }
  }

  void insert(Vec v) {
    require(v.size() == width_, ErrorKind::ShapeMismatch, "generator length mismatch");
    vec_mod(v, n_);
    for (std::size_t i = 0; i < pcols_; ++i) {
      if (v[i] == 0) continue;
      if (!rows_[i]) {
        if (v[i] < 0) v = vec_scale(-1, v);
        rows_[i] = std::move(v);
        return;
      }
      Vec& b = *rows_[i];
      Int a0 = b[i], b0 = v[i];
      Xgcd e = xgcd(a0, b0);
      Vec nb = vec_scale(e.x, b);
      vec_axpy(nb, e.y, v);
      Vec nv = vec_scale(b0 / e.g, b);
      vec_axpy(nv, -(a0 / e.g), v);
      vec_mod(nb, n_);
      vec_mod(nv, n_);
      b = std::move(nb);
      v = std::move(nv);
    }
  }

  // Reduce entries above pivots into [0, pivot).
  void normalize() {
    for (std::size_t j = 0; j < pcols_; ++j) {
      if (!rows_[j]) continue;
      const Vec& pj = *rows_[j];
      for (std::size_t i = 0; i < j; ++i) {
        if (!rows_[i]) continue;
        Vec& ri = *rows_[i];
        Int q = floor_div(ri[j], pj[j]);
        if (q == 0) continue;
        vec_axpy(ri, -q, pj);
        vec_mod(ri, n_);
      }
    }
  }

  // Subtract pivot rows from t; on return the pivot coordinates of t are
  // reduced. Coefficients of the subtracted rows are accumulated in coeffs.
  void reduce(Vec& t, Vec* coeffs) const {
    vec_mod(t, n_);
    for (std::size_t i = 0; i < pcols_; ++i) {
      if (!rows_[i]) continue;
      const Vec& r = *rows_[i];
      Int q = floor_div(t[i], r[i]);
      if (q == 0) continue;
      vec_axpy(t, -q, r);
      vec_mod(t, n_);
      if (coeffs) {
        (*coeffs)[i] = add((*coeffs)[i], q);
        if (n_ != 0) (*coeffs)[i] = mod_floor((*coeffs)[i], n_);
      }
    }
  }

  const std::vector<std::optional<Vec>>& rows() const { return rows_; }

 private:
  std::size_t width_;
  std::size_t pcols_;
  Int n_;
  std::vector<std::optional<Vec>> rows_;
};

}  // namespace

Lattice::Lattice(std::size_t dim, Int modulus, const std::vector<Vec>& gens)
    : dim_(dim), modulus_(modulus) {
  require(modulus >= 0, ErrorKind::InvalidInput, "negative modulus");
  Echelon e(dim, dim, modulus);
  for (const Vec& g : gens) e.insert(g);
  e.normalize();
  for (std::size_t i = 0; i < dim; ++i)
    if (e.rows()[i]) {
      rows_.push_back(*e.rows()[i]);
      pivots_.push_back(i);
    }
}

Lattice Lattice::full(std::size_t dim, Int modulus) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Lattice(dim, modulus, gens);
}

Vec Lattice::diagonal() const {
  Vec d(dim_, 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) d[pivots_[k]] = rows_[k][pivots_[k]];
  return d;
}

Int Lattice::index() const {
  if (!is_full_rank()) return 0;
  Int r = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) r = mul(r, rows_[k][pivots_[k]]);
  return r;
}

Vec Lattice::reduce(const Vec& v) const {
  Vec c(rows_.size(), 0);
  return reduce(v, c);
}

Vec Lattice::reduce(const Vec& v, Vec& coeffs) const {
  require(v.size() == dim_, ErrorKind::ShapeMismatch, "vector length does not match lattice dimension");
  coeffs.assign(rows_.size(), 0);
  Vec t = v;
  vec_mod(t, modulus_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t i = pivots_[k];
    Int q = floor_div(t[i], rows_[k][i]);
    if (q == 0) continue;
    vec_axpy(t, -q, rows_[k]);
    vec_mod(t, modulus_);
    coeffs[k] = q;
    if (modulus_ != 0) coeffs[k] = mod_floor(q, modulus_);
  }
  return t;
}

bool Lattice::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::optional<Vec> Lattice::coefficients(const Vec& v) const {
  Vec c;
  Vec r = reduce(v, c);
  if (!vec_is_zero(r)) return std::nullopt;
  return c;
}

Lattice Lattice::operator+(const Lattice& o) const {
  require(dim_ == o.dim_ && modulus_ == o.modulus_, ErrorKind::ParentMismatch, "lattice sum of different ambients");
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), o.rows_.begin(), o.rows_.end());
  return Lattice(dim_, modulus_, gens);
}

Lattice Lattice::intersect(const Lattice& o) const {
  require(dim_ == o.dim_ && modulus_ == o.modulus_, ErrorKind::ParentMismatch, "lattice intersection of different ambients");
  std::vector<Vec> gens;
  for (const Vec& b : rows_) gens.push_back(vec_concat(b, b));
  for (const Vec& c : o.rows_) gens.push_back(vec_concat(c, Vec(dim_, 0)));
  Lattice big(2 * dim_, modulus_, gens);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < big.rows_.size(); ++k)
    if (big.pivots_[k] >= dim_) out.push_back(vec_slice(big.rows_[k], dim_, dim_));
  return Lattice(dim_, modulus_, out);
}

bool Lattice::subset_of(const Lattice& o) const {
  for (const Vec& r : rows_)
    if (!o.contains(r)) return false;
  return true;
}

Lattice preimage(const Matrix& a, const Lattice& target) {
  require(a.rows() == target.dim(), ErrorKind::ShapeMismatch, "preimage: matrix rows do not match target dimension");
  std::size_t rc = a.rows(), rd = a.cols();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < rd; ++i) {
    Vec e(rd, 0);
    e[i] = 1;
    gens.push_back(vec_concat(a.col(i), e));
  }
  for (const Vec& v : target.basis()) gens.push_back(vec_concat(v, Vec(rd, 0)));
  Lattice big(rc + rd, target.modulus(), gens);
  std::vector<Vec> out;
  for (std::size_t k = 0; k < big.basis().size(); ++k)
    if (big.pivot_columns()[k] >= rc) out.push_back(vec_slice(big.basis()[k], rc, rd));
  return Lattice(rd, target.modulus(), out);
}

Lattice image(const Matrix& a, const Lattice& source) {
  require(a.cols() == source.dim(), ErrorKind::ShapeMismatch, "image: matrix columns do not match source dimension");
  std::vector<Vec> gens;
  for (const Vec& u : source.basis()) gens.push_back(a.apply(u));
  return Lattice(a.rows(), source.modulus(), gens);
}

Lattice project(const Lattice& l, std::size_t begin, std::size_t len) {
  std::vector<Vec> gens;
  for (const Vec& u : l.basis()) gens.push_back(vec_slice(u, begin, len));
  return Lattice(len, l.modulus(), gens);
}

Lattice embed(const Lattice& l, std::size_t total, std::size_t offset, bool free_rest) {
  require(offset + l.dim() <= total, ErrorKind::ShapeMismatch, "embed out of range");
  std::vector<Vec> gens;
  for (const Vec& u : l.basis()) {
    Vec v(total, 0);
    for (std::size_t i = 0; i < u.size(); ++i) v[offset + i] = u[i];
    gens.push_back(std::move(v));
  }
  if (free_rest)
    for (std::size_t i = 0; i < total; ++i) {
      if (i >= offset && i < offset + l.dim()) continue;
      Vec e(total, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  return Lattice(total, l.modulus(), gens);
}

std::optional<Vec> solve_combination(const std::vector<Vec>& gens, std::size_t dim,
                                     Int modulus, const Vec& target) {
  require(target.size() == dim, ErrorKind::ShapeMismatch, "solve_combination: target length");
  std::size_t k = gens.size();
  Echelon e(dim + k, dim, modulus);
  for (std::size_t i = 0; i < k; ++i) {
    require(gens[i].size() == dim, ErrorKind::ShapeMismatch, "solve_combination: generator length");
    Vec coeff(k, 0);
    coeff[i] = 1;
    e.insert(vec_concat(gens[i], coeff));
  }
  Vec t = vec_concat(target, Vec(k, 0));
  e.reduce(t, nullptr);
  for (std::size_t i = 0; i < dim; ++i)
    if (t[i] != 0) return std::nullopt;
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = -t[dim + i];
    if (modulus != 0) x[i] = mod_floor(x[i], modulus);
  }
  return x;
}

namespace {

struct SmithWork {
  std::vector<Vec> w;
  Matrix v, vinv;
  Int n;

  void fix(Int& x) const {
    if (n != 0) x = mod_floor(x, n);
  }
  // Size used for pivot choice; smaller means a larger ideal.
  Int weight(Int x) const { return n != 0 ? gcd(x, n) : abs_int(x); }
  bool divides(Int a, Int b) const {
    if (n != 0) return b % gcd(a, n) == 0;
    return a != 0 && b % a == 0;
  }

  void swap_rows(std::size_t i, std::size_t j) { std::swap(w[i], w[j]); }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (Vec& r : w) std::swap(r[i], r[j]);
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
    for (std::size_t k = 0; k < vinv.cols(); ++k) std::swap(vinv(i, k), vinv(j, k));
  }

  // Clear w[r][t] against pivot w[t][t].
  void row_op(std::size_t t, std::size_t r) {
    Int a = w[t][t], b = w[r][t];
    Xgcd e = xgcd(a, b);
    Vec nt = vec_scale(e.x, w[t]);
    vec_axpy(nt, e.y, w[r]);
    Vec nr = vec_scale(-(b / e.g), w[t]);
    vec_axpy(nr, a / e.g, w[r]);
    vec_mod(nt, n);
    vec_mod(nr, n);
    w[t] = std::move(nt);
    w[r] = std::move(nr);
  }

  // Clear w[t][j] against pivot w[t][t].
  void col_op(std::size_t t, std::size_t j) {
    Int a = w[t][t], b = w[t][j];
    Xgcd e = xgcd(a, b);
    Int p = e.x, q = e.y, r = -(b / e.g), s = a / e.g;
    // new col_t = p col_t + q col_j ; new col_j = r col_t + s col_j
    for (Vec& row : w) {
      Int ct = row[t], cj = row[j];
      row[t] = add(mul(p, ct), mul(q, cj));
      row[j] = add(mul(r, ct), mul(s, cj));
      fix(row[t]);
      fix(row[j]);
    }
    for (std::size_t k = 0; k < v.rows(); ++k) {
      Int ct = v(k, t), cj = v(k, j);
      v(k, t) = add(mul(p, ct), mul(q, cj));
      v(k, j) = add(mul(r, ct), mul(s, cj));
      fix(v(k, t));
      fix(v(k, j));
    }
    // Inverse of [[p, r], [q, s]] (det 1) is [[s, -r], [-q, p]] acting on rows t, j.
    for (std::size_t k = 0; k < vinv.cols(); ++k) {
      Int rt = vinv(t, k), rj = vinv(j, k);
      vinv(t, k) = sub(mul(s, rt), mul(r, rj));
      vinv(j, k) = sub(mul(p, rj), mul(q, rt));
      fix(vinv(t, k));
      fix(vinv(j, k));
    }
  }
};

}  // namespace

Smith smith_form(const std::vector<Vec>& rows, std::size_t cols, Int modulus) {
  SmithWork s{rows, Matrix::identity(cols), Matrix::identity(cols), modulus};
  for (Vec& r : s.w) {
    require(r.size() == cols, ErrorKind::ShapeMismatch, "smith_form: ragged rows");
    vec_mod(r, modulus);
  }
  std::size_t k = s.w.size();
  std::size_t t = 0;
  for (; t < cols && t < k; ++t) {
    std::size_t br = k, bc = cols;
    Int best = 0;
    for (std::size_t r = t; r < k; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        Int x = s.w[r][c];
        if (x == 0) continue;
        Int wgt = s.weight(x);
        if (br == k || wgt < best) {
          best = wgt;
          br = r;
          bc = c;
        }
      }
    if (br == k) break;
    s.swap_rows(t, br);
    s.swap_cols(t, bc);
    for (;;) {
      for (std::size_t r = t + 1; r < k; ++r)
        if (s.w[r][t] != 0) s.row_op(t, r);
      bool dirty = false;
      for (std::size_t c = t + 1; c < cols; ++c)
        if (s.w[t][c] != 0) {
          s.col_op(t, c);
          dirty = true;
        }
      if (dirty) continue;
      bool added = false;
      for (std::size_t r = t + 1; r < k && !added; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!s.divides(s.w[t][t], s.w[r][c])) {
            s.w[t] = vec_add(s.w[t], s.w[r]);
            vec_mod(s.w[t], modulus);
            added = true;
            break;
          }
      if (!added) break;
    }
  }
  Smith out;
  out.diag.assign(cols, modulus);
  for (std::size_t i = 0; i < t; ++i) {
    Int x = s.w[i][i];
    out.diag[i] = modulus != 0 ? gcd(x, modulus) : abs_int(x);
    if (modulus != 0 && out.diag[i] == 0) out.diag[i] = modulus;
  }
  out.v = std::move(s.v);
  out.v_inv = std::move(s.vinv);
  return out;
}

}  // namespace linrel
