#include "linrel/module.hpp"

#include <string>

namespace linrel {

FgModule::FgModule(Ring ring, std::size_t rank, const std::vector<Vec>& relations)
    : ring_(ring), pres_(rank, ring.modulus(), relations) {}

FgModule::FgModule(Ring ring, Lattice presentation) : ring_(ring), pres_(std::move(presentation)) {
  require(pres_.modulus() == ring_.modulus(), ErrorKind::ShapeMismatch,
          "presentation modulus does not match ring");
}

std::vector<Vec> FgModule::relations() const {
  std::vector<Vec> out;
  Int n = ring_.modulus();
  for (std::size_t k = 0; k < pres_.basis().size(); ++k) {
    const Vec& r = pres_.basis()[k];
    std::size_t p = pres_.pivot_columns()[k];
    bool trivial = n != 0 && r[p] == n;
    for (std::size_t j = 0; j < r.size() && trivial; ++j)
      if (j != p && r[j] != 0) trivial = false;
    if (!trivial) out.push_back(r);
  }
  return out;
}

Vec FgModule::reduce(const Vec& v) const {
  require(v.size() == rank(), ErrorKind::ShapeMismatch,
          "element has length " + std::to_string(v.size()) + ", module rank is " + std::to_string(rank()));
  return pres_.reduce(v);
}

Vec FgModule::basis_vector(std::size_t i) const {
  Vec e(rank(), 0);
  e.at(i) = 1;
  return reduce(e);
}

Int FgModule::order() const {
  require(is_finite(), ErrorKind::InfiniteModule, "module is infinite");
  return pres_.index();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  require(a.modulus() == b.modulus(), ErrorKind::ParentMismatch, "lattice moduli differ");
  std::size_t total = a.dim() + b.dim();
  std::vector<Vec> gens;
  for (const Vec& u : a.basis()) gens.push_back(vec_concat(u, Vec(b.dim(), 0)));
  for (const Vec& u : b.basis()) gens.push_back(vec_concat(Vec(a.dim(), 0), u));
  return Lattice(total, a.modulus(), gens);
}

Lattice lattice_power(const Lattice& l, std::size_t copies) {
  Lattice out(0, l.modulus());
  for (std::size_t i = 0; i < copies; ++i) out = lattice_sum(out, l);
  return out;
}

FgModule direct_sum(const FgModule& a, const FgModule& b) {
  require(a.ring() == b.ring(), ErrorKind::ParentMismatch, "direct sum over different rings");
  return FgModule(a.ring(), lattice_sum(a.presentation(), b.presentation()));
}

Submodule::Submodule(FgModule parent, Lattice lattice) : parent_(std::move(parent)), lat_(std::move(lattice)) {
  require(lat_.dim() == parent_.rank() && lat_.modulus() == parent_.ring().modulus(), ErrorKind::ShapeMismatch,
          "submodule lattice does not match parent");
  require(parent_.presentation().subset_of(lat_), ErrorKind::Internal,
          "submodule lattice must contain the parent presentation");
}

Submodule Submodule::generated(const FgModule& parent, const std::vector<Vec>& gens) {
  std::vector<Vec> all = parent.presentation().basis();
  for (const Vec& g : gens) {
    require(g.size() == parent.rank(), ErrorKind::ShapeMismatch, "generator length does not match module rank");
    all.push_back(g);
  }
  return Submodule(parent, Lattice(parent.rank(), parent.ring().modulus(), all));
}

Submodule Submodule::zero(const FgModule& parent) { return Submodule(parent, parent.presentation()); }

Submodule Submodule::whole(const FgModule& parent) {
  return Submodule(parent, Lattice::full(parent.rank(), parent.ring().modulus()));
}

std::vector<Vec> Submodule::generators() const {
  std::vector<Vec> out;
  for (const Vec& r : lat_.basis()) {
    Vec c = parent_.reduce(r);
    if (!vec_is_zero(c)) out.push_back(c);
  }
  return out;
}

Int Submodule::order() const {
  Int top = parent_.order();
  require(lat_.is_full_rank(), ErrorKind::InfiniteModule, "submodule is infinite");
  return top / lat_.index();
}

bool Submodule::subset_of(const Submodule& o) const {
  require_same_parent(*this, o, "subset test");
  return lat_.subset_of(o.lat_);
}

void require_same_parent(const Submodule& a, const Submodule& b, const char* op) {
  require(a.parent() == b.parent(), ErrorKind::ParentMismatch, std::string(op) + ": submodules of different modules");
}

Submodule operator+(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b, "sum");
  return Submodule(a.parent(), a.lattice() + b.lattice());
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  require_same_parent(a, b, "intersection");
  return Submodule(a.parent(), a.lattice().intersect(b.lattice()));
}

Submodule scale(Int c, const Submodule& s) {
  std::vector<Vec> gens;
  for (const Vec& g : s.lattice().basis()) gens.push_back(vec_scale(c, g));
  return Submodule::generated(s.parent(), gens);
}

Submodule direct_sum(const Submodule& a, const Submodule& b) {
  return Submodule(direct_sum(a.parent(), b.parent()), lattice_sum(a.lattice(), b.lattice()));
}

ModHom::ModHom(FgModule domain, FgModule codomain, Matrix matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(matrix)) {
  require(dom_.ring() == cod_.ring(), ErrorKind::ParentMismatch, "homomorphism between modules over different rings");
  require(mat_.rows() == cod_.rank() && mat_.cols() == dom_.rank(), ErrorKind::ShapeMismatch,
          "matrix is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) + ", expected " +
              std::to_string(cod_.rank()) + "x" + std::to_string(dom_.rank()));
  for (const Vec& rel : dom_.presentation().basis())
    require(cod_.is_zero(mat_.apply(rel)), ErrorKind::NotAMorphism,
            "matrix does not respect the domain relations");
  for (std::size_t j = 0; j < mat_.cols(); ++j) mat_.set_col(j, cod_.reduce(mat_.col(j)));
}

ModHom ModHom::identity(const FgModule& m) { return ModHom(m, m, Matrix::identity(m.rank())); }

ModHom ModHom::zero(const FgModule& dom, const FgModule& cod) {
  return ModHom(dom, cod, Matrix(cod.rank(), dom.rank()));
}

Vec ModHom::apply(const Vec& x) const { return cod_.reduce(mat_.apply(x)); }

ModHom compose(const ModHom& g, const ModHom& f) {
  require(f.codomain() == g.domain(), ErrorKind::DomainMismatch, "composition of non-composable homomorphisms");
  return ModHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

ModHom hom_sum(const ModHom& f, const ModHom& g) {
  require(f.domain() == g.domain() && f.codomain() == g.codomain(), ErrorKind::DomainMismatch,
          "sum of homomorphisms with different ends");
  Matrix m = f.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = add(m(i, j), g.matrix()(i, j));
  return ModHom(f.domain(), f.codomain(), m);
}

ModHom hom_direct_sum(const ModHom& f, const ModHom& g) {
  return ModHom(direct_sum(f.domain(), g.domain()), direct_sum(f.codomain(), g.codomain()),
                block_diag(f.matrix(), g.matrix()));
}

Submodule image(const ModHom& f, const Submodule& s) {
  require(s.parent() == f.domain(), ErrorKind::DomainMismatch, "image of a submodule of another module");
  return Submodule(f.codomain(), image(f.matrix(), s.lattice()) + f.codomain().presentation());
}

Submodule image(const ModHom& f) { return image(f, Submodule::whole(f.domain())); }

Submodule preimage(const ModHom& f, const Submodule& s) {
  require(s.parent() == f.codomain(), ErrorKind::DomainMismatch, "preimage of a submodule of another module");
  return Submodule(f.domain(), preimage(f.matrix(), s.lattice()));
}

Submodule kernel(const ModHom& f) { return preimage(f, Submodule::zero(f.codomain())); }

FgModule cokernel(const ModHom& f) { return FgModule(f.codomain().ring(), image(f).lattice()); }

bool is_injective(const ModHom& f) { return kernel(f).is_zero(); }

bool is_surjective(const ModHom& f) { return image(f) == Submodule::whole(f.codomain()); }

ModHom inverse(const ModHom& f) {
  require(is_injective(f) && is_surjective(f), ErrorKind::NotAMorphism, "homomorphism is not invertible");
  const FgModule& cod = f.codomain();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j) gens.push_back(f.matrix().col(j));
  for (const Vec& r : cod.presentation().basis()) gens.push_back(r);
  Matrix inv(f.domain().rank(), cod.rank());
  for (std::size_t j = 0; j < cod.rank(); ++j) {
    auto x = solve_combination(gens, cod.rank(), cod.ring().modulus(), cod.basis_vector(j));
    require(x.has_value(), ErrorKind::Internal, "surjective map without preimage");
    inv.set_col(j, vec_slice(*x, 0, f.domain().rank()));
  }
  return ModHom(cod, f.domain(), inv);
}

std::optional<std::pair<Vec, Vec>> decompose_over(const Submodule& u, const Submodule& v, const Vec& m) {
  require_same_parent(u, v, "decompose_over");
  const FgModule& par = u.parent();
  std::vector<Vec> gens = u.lattice().basis();
  std::size_t ku = gens.size();
  gens.insert(gens.end(), v.lattice().basis().begin(), v.lattice().basis().end());
  auto x = solve_combination(gens, par.rank(), par.ring().modulus(), m);
  if (!x) return std::nullopt;
  Vec uu(par.rank(), 0);
  for (std::size_t i = 0; i < ku; ++i) vec_axpy(uu, (*x)[i], gens[i]);
  uu = par.reduce(uu);
  Vec vv = par.reduce(vec_sub(m, uu));
  return std::make_pair(uu, vv);
}

namespace {

Vec strides_of(const FgModule& m, Vec& diag) {
  require(m.is_finite(), ErrorKind::InfiniteModule, "cannot enumerate an infinite module");
  diag = m.presentation().diagonal();
  Vec stride(m.rank(), 1);
  for (std::size_t i = m.rank(); i-- > 1;) stride[i - 1] = mul(stride[i], diag[i]);
  return stride;
}

}  // namespace

std::vector<Vec> enumerate_elements(const FgModule& m, Int cap) {
  Int total = m.order();
  if (cap > 0 && total > cap)
    fail(ErrorKind::ModuleTooLarge, "module has " + std::to_string(total) + " elements, cap is " + std::to_string(cap));
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(total));
  for (Int i = 0; i < total; ++i) out.push_back(element_at(m, static_cast<std::size_t>(i)));
  return out;
}

std::vector<Vec> enumerate_elements(const Submodule& s, Int cap) {
  std::vector<Vec> out;
  for (Vec& v : enumerate_elements(s.parent(), cap))
    if (s.contains(v)) out.push_back(std::move(v));
  return out;
}

std::size_t element_index(const FgModule& m, const Vec& v) {
  Vec diag;
  Vec stride = strides_of(m, diag);
  Vec c = m.reduce(v);
  Int idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) idx += c[i] * stride[i];
  return static_cast<std::size_t>(idx);
}

Vec element_at(const FgModule& m, std::size_t index) {
  Vec diag;
  Vec stride = strides_of(m, diag);
  Vec v(m.rank(), 0);
  Int rest = static_cast<Int>(index);
  for (std::size_t i = 0; i < m.rank(); ++i) {
    v[i] = rest / stride[i];
    rest %= stride[i];
  }
  return v;
}

Subquotient::Subquotient(const Submodule& top, const Submodule& bottom) : top_(top), bottom_(bottom) {
  require_same_parent(top, bottom, "subquotient");
  require(bottom.subset_of(top), ErrorKind::NotAMember, "subquotient: bottom is not contained in top");
  const FgModule& par = top.parent();
  Int n = par.ring().modulus();
  const std::vector<Vec>& g = top.lattice().basis();
  std::size_t k = g.size();
  Matrix gt = Matrix::from_columns(g, par.rank());
  Lattice rel = linrel::preimage(gt, bottom.lattice());
  Smith s = smith_form(rel.basis(), k, n);
  std::vector<Vec> pres;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.diag[i] == 1) continue;
    kept_.push_back(i);
    inv_.push_back(s.diag[i]);
  }
  std::size_t q = kept_.size();
  for (std::size_t a = 0; a < q; ++a) {
    Vec r(q, 0);
    r[a] = inv_[a];
    pres.push_back(std::move(r));
  }
  q_ = FgModule(par.ring(), q, pres);
  for (std::size_t idx : kept_) {
    Vec lift(par.rank(), 0);
    for (std::size_t j = 0; j < k; ++j) vec_axpy(lift, s.v_inv(idx, j), g[j]);
    lifts_.push_back(par.reduce(lift));
  }
  coord_map_ = std::move(s.v);
}

Vec Subquotient::to_coords(const Vec& m) const {
  auto c = top_.lattice().coefficients(m);
  require(c.has_value(), ErrorKind::NotAMember, "element is not in the top of the subquotient");
  Int n = q_.ring().modulus();
  Vec y(kept_.size(), 0);
  for (std::size_t a = 0; a < kept_.size(); ++a) {
    Int acc = 0;
    for (std::size_t i = 0; i < c->size(); ++i) {
      acc = add(acc, mul((*c)[i], coord_map_(i, kept_[a])));
      if (n != 0) acc = mod_floor(acc, n);
    }
    y[a] = acc;
  }
  return q_.reduce(y);
}

Vec Subquotient::from_coords(const Vec& q) const {
  require(q.size() == lifts_.size(), ErrorKind::ShapeMismatch, "subquotient coordinate length");
  const FgModule& par = top_.parent();
  Vec m(par.rank(), 0);
  for (std::size_t a = 0; a < q.size(); ++a) {
    vec_axpy(m, q[a], lifts_[a]);
    vec_mod(m, par.ring().modulus());
  }
  return par.reduce(m);
}

Matrix Subquotient::lift_matrix() const { return Matrix::from_columns(lifts_, top_.parent().rank()); }

Vec invariant_factors(const FgModule& m) {
  Smith s = smith_form(m.presentation().basis(), m.rank(), m.ring().modulus());
  Vec out;
  for (Int d : s.diag)
    if (d != 1) out.push_back(d);
  return out;
}

Vec invariant_factors(const Submodule& s) { return Subquotient(s, Submodule::zero(s.parent())).invariants(); }

bool is_free(const FgModule& m) {
  Int n = m.ring().modulus();
  for (Int d : invariant_factors(m))
    if (d != n) return false;
  return true;
}

bool is_projective(const FgModule& m) {
  Int n = m.ring().modulus();
  if (n == 0) return is_free(m);
  for (Int d : invariant_factors(m))
    if (gcd(d, n / d) != 1) return false;
  return true;
}

bool is_flat(const FgModule& m) { return is_projective(m); }

bool is_injective_module(const FgModule& m) {
  if (m.ring().is_integers()) return m.is_zero_module();
  return is_projective(m);
}

Int annihilator(const FgModule& m) {
  Int a = 1;
  for (Int d : invariant_factors(m)) a = lcm(a, d);
  return a;
}

EmbeddedModule as_module(const Submodule& s) {
  Subquotient q(s, Submodule::zero(s.parent()));
  return {q.module(), ModHom(q.module(), s.parent(), q.lift_matrix())};
}

Lattice hom_lattice(const FgModule& a, const FgModule& b) {
  require(a.ring() == b.ring(), ErrorKind::ParentMismatch, "hom between modules over different rings");
  std::size_t ra = a.rank(), rb = b.rank();
  const std::vector<Vec>& rels = a.presentation().basis();
  std::size_t k = rels.size();
  Matrix phi(rb * k, ra * rb);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t s = 0; s < rb; ++s) phi(i * rb + s, j * rb + s) = rels[i][j];
  return preimage(phi, lattice_power(b.presentation(), k));
}

Matrix unvec(const Vec& x, std::size_t rows, std::size_t cols) {
  require(x.size() == rows * cols, ErrorKind::ShapeMismatch, "unvec size");
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = x[j * rows + i];
  return m;
}

Vec vec_of(const Matrix& m) {
  Vec x(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) x[j * m.rows() + i] = m(i, j);
  return x;
}

}  // namespace linrel
