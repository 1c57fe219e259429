#include "linrel/kronecker.hpp"

namespace linrel {

namespace {

Matrix neg_mod(const Matrix& m, const Ring& r) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r.reduce(-m(i, j));
  return out;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

Matrix side_by_side(const Matrix& left, const Matrix& right) {
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Matrix row_block(const Matrix& m, std::size_t begin, std::size_t len) {
  Matrix out(len, m.cols());
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(begin + i, j);
  return out;
}

bool same_hom(const ModHom& f, const ModHom& g) {
  return f.domain() == g.domain() && f.codomain() == g.codomain() && f.matrix() == g.matrix();
}

void require_finite_ring(const Ring& r, const char* what) {
  require(r.is_finite(), ErrorKind::UnsupportedRing, std::string(what) + " needs a ring Z/n");
}

}  // namespace

Rep::Rep(ModHom mu_a, ModHom mu_b) : a_(std::move(mu_a)), b_(std::move(mu_b)) {
  require(a_.domain() == b_.domain() && a_.codomain() == b_.codomain(), ErrorKind::DomainMismatch,
          "the two arrows of a representation must share domain and codomain");
}

Rep::Rep(const FgModule& mt, const FgModule& mh, const Matrix& a, const Matrix& b)
    : Rep(ModHom(mt, mh, a), ModHom(mt, mh, b)) {}

bool is_rep_morphism(const RepMorphism& f, const Rep& x, const Rep& y) {
  if (!(f.t.domain() == x.mt() && f.t.codomain() == y.mt() && f.h.domain() == x.mh() && f.h.codomain() == y.mh()))
    return false;
  return same_hom(compose(f.h, x.mu_a()), compose(y.mu_a(), f.t)) &&
         same_hom(compose(f.h, x.mu_b()), compose(y.mu_b(), f.t));
}

RepMorphism make_rep_morphism(const Rep& x, const Rep& y, const Matrix& t, const Matrix& h) {
  RepMorphism f{ModHom(x.mt(), y.mt(), t), ModHom(x.mh(), y.mh(), h)};
  require(is_rep_morphism(f, x, y), ErrorKind::NotAMorphism, "pair does not intertwine the arrows");
  return f;
}

RepMorphism rep_identity(const Rep& x) { return {ModHom::identity(x.mt()), ModHom::identity(x.mh())}; }

RepMorphism rep_zero(const Rep& x, const Rep& y) {
  return {ModHom::zero(x.mt(), y.mt()), ModHom::zero(x.mh(), y.mh())};
}

RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f) {
  return {compose(g.t, f.t), compose(g.h, f.h)};
}

RepMorphism rep_sum(const RepMorphism& f, const RepMorphism& g) { return {hom_sum(f.t, g.t), hom_sum(f.h, g.h)}; }

Rep rep_direct_sum(const Rep& x, const Rep& y) {
  return Rep(hom_direct_sum(x.mu_a(), y.mu_a()), hom_direct_sum(x.mu_b(), y.mu_b()));
}

Rep rep_direct_sum(const std::vector<Rep>& xs) {
  require(!xs.empty(), ErrorKind::InvalidInput, "direct sum of no representations");
  Rep out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = rep_direct_sum(out, xs[i]);
  return out;
}

ModHom stacked_map(const Rep& x) {
  return ModHom(x.mt(), direct_sum(x.mh(), x.mh()), stack_rows(x.mu_a().matrix(), x.mu_b().matrix()));
}

ModHom row_map(const Rep& x) {
  return ModHom(direct_sum(x.mt(), x.mt()), x.mh(), side_by_side(x.mu_a().matrix(), x.mu_b().matrix()));
}

bool is_relation_object(const Rep& x) { return is_injective(stacked_map(x)); }
bool is_torsion(const Rep& x) { return x.mh().is_zero_module(); }
bool is_torsion_free(const Rep& x) { return is_relation_object(x); }

Rep rel_to_rep(const LinearRelation& c) {
  require(c.is_endo(), ErrorKind::DomainMismatch, "relation objects are relations on one module");
  const FgModule& m = c.domain();
  EmbeddedModule e = as_module(c.submodule());
  const Matrix& inc = e.inclusion.matrix();
  return Rep(e.module, m, row_block(inc, 0, m.rank()), row_block(inc, m.rank(), m.rank()));
}

LinearRelation rep_to_rel(const Rep& x) {
  require(is_relation_object(x), ErrorKind::NotInSubcategory, "ker(mu_a) and ker(mu_b) intersect nontrivially");
  return LinearRelation(x.mh(), x.mh(), image(stacked_map(x)));
}

std::optional<Vec> solve_preimage(const ModHom& f, const Vec& w) {
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < f.matrix().cols(); ++j) gens.push_back(f.matrix().col(j));
  for (const Vec& r : f.codomain().presentation().basis()) gens.push_back(r);
  auto x = solve_combination(gens, f.codomain().rank(), f.codomain().ring().modulus(), f.codomain().reduce(w));
  if (!x) return std::nullopt;
  return f.domain().reduce(vec_slice(*x, 0, f.domain().rank()));
}

RepMorphism morphism_to_rep(const ModHom& f, const LinearRelation& c, const LinearRelation& d) {
  require(c.is_endo() && d.is_endo() && f.domain() == c.domain() && f.codomain() == d.domain(),
          ErrorKind::DomainMismatch, "morphism does not match the relations");
  ModHom ff = hom_direct_sum(f, f);
  require(image(ff, c.submodule()).subset_of(d.submodule()), ErrorKind::NotAMorphism,
          "(f + f) C is not contained in D");
  Rep x = rel_to_rep(c), y = rel_to_rep(d);
  EmbeddedModule ec = as_module(c.submodule()), ed = as_module(d.submodule());
  Matrix t(y.mt().rank(), x.mt().rank());
  for (std::size_t i = 0; i < x.mt().rank(); ++i) {
    auto pre = solve_preimage(ed.inclusion, ff.apply(ec.inclusion.apply(x.mt().basis_vector(i))));
    require(pre.has_value(), ErrorKind::Internal, "transported element is not in the target relation");
    t.set_col(i, *pre);
  }
  return make_rep_morphism(x, y, t, f.matrix());
}

Vec HomSpace::pack(const RepMorphism& f) const {
  return vec_concat(vec_of(f.t.matrix()), vec_of(f.h.matrix()));
}

RepMorphism HomSpace::unpack(const Vec& v) const {
  std::size_t split = source.mt().rank() * target.mt().rank();
  std::size_t rest = source.mh().rank() * target.mh().rank();
  require(v.size() == split + rest, ErrorKind::ShapeMismatch, "packed morphism has the wrong size");
  return {ModHom(source.mt(), target.mt(), unvec(vec_slice(v, 0, split), target.mt().rank(), source.mt().rank())),
          ModHom(source.mh(), target.mh(), unvec(vec_slice(v, split, rest), target.mh().rank(), source.mh().rank()))};
}

HomSpace hom_space(const Rep& x, const Rep& y) {
  require(x.ring() == y.ring(), ErrorKind::ParentMismatch, "representations over different rings");
  const Ring& ring = x.ring();
  std::size_t xt = x.mt().rank(), xh = x.mh().rank(), yt = y.mt().rank(), yh = y.mh().rank();
  std::size_t split = yt * xt, total = split + yh * xh;
  Lattice wd = lattice_sum(hom_lattice(x.mt(), y.mt()), hom_lattice(x.mh(), y.mh()));
  // Rows ((c * xt + j) * yh + r): entry r of ν_c f_t e_j - f_h μ_c e_j.
  Matrix phi(2 * xt * yh, total);
  for (std::size_t c = 0; c < 2; ++c) {
    const Matrix& ny = (c == 0 ? y.mu_a() : y.mu_b()).matrix();
    Matrix mx = neg_mod((c == 0 ? x.mu_a() : x.mu_b()).matrix(), ring);
    for (std::size_t j = 0; j < xt; ++j)
      for (std::size_t r = 0; r < yh; ++r) {
        std::size_t row = (c * xt + j) * yh + r;
        for (std::size_t q = 0; q < yt; ++q) phi(row, j * yt + q) = ny(r, q);
        for (std::size_t s = 0; s < xh; ++s) phi(row, split + s * yh + r) = mx(s, j);
      }
  }
  Lattice inter = preimage(phi, lattice_power(y.mh().presentation(), 2 * xt));
  Lattice zero = lattice_sum(lattice_power(y.mt().presentation(), xt), lattice_power(y.mh().presentation(), xh));
  Lattice sol = wd.intersect(inter);
  FgModule ambient = FgModule::free(ring, total);
  HomSpace h{x, y, sol, zero, Subquotient(Submodule(ambient, sol), Submodule(ambient, zero)), {}};
  for (const Vec& l : h.quotient.lifts()) h.basis.push_back(h.unpack(l));
  return h;
}

std::optional<RepMorphism> solve_hom(const HomSpace& unknown,
                                     const std::function<RepMorphism(const RepMorphism&)>& psi,
                                     const HomSpace& target_space, const RepMorphism& target) {
  const std::vector<Vec>& rows = unknown.solutions.basis();
  std::vector<Vec> gens;
  for (const Vec& r : rows) gens.push_back(target_space.pack(psi(unknown.unpack(r))));
  for (const Vec& z : target_space.zero.basis()) gens.push_back(z);
  Int n = unknown.source.ring().modulus();
  auto x = solve_combination(gens, target_space.packed_size(), n, target_space.pack(target));
  if (!x) return std::nullopt;
  Vec k(unknown.packed_size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) vec_axpy(k, (*x)[i], rows[i]);
  if (n != 0) vec_mod(k, n);
  return unknown.unpack(k);
}

Envelope envelope(const Rep& x) {
  Submodule k = intersect(kernel(x.mu_a()), kernel(x.mu_b()));
  FgModule lt(x.ring(), k.lattice());
  Rep l(lt, x.mh(), x.mu_a().matrix(), x.mu_b().matrix());
  return {{ModHom(x.mt(), lt, Matrix::identity(x.mt().rank())), ModHom::identity(x.mh())}, l};
}

std::optional<RepMorphism> factor_through_envelope(const Envelope& e, const Rep& x, const Rep& y,
                                                   const RepMorphism& g) {
  HomSpace unknown = hom_space(e.codomain, y);
  HomSpace target = hom_space(x, y);
  return solve_hom(unknown, [&](const RepMorphism& k) { return rep_compose(k, e.unit); }, target, g);
}

TorsionSequence torsion_sequence(const Rep& x) {
  Submodule k = intersect(kernel(x.mu_a()), kernel(x.mu_b()));
  EmbeddedModule em = as_module(k);
  FgModule none = FgModule::free(x.ring(), 0);
  Rep t(ModHom::zero(em.module, none), ModHom::zero(em.module, none));
  RepMorphism inc{em.inclusion, ModHom::zero(none, x.mh())};
  Envelope e = envelope(x);
  return {t, inc, x, e.unit, e.codomain};
}

bool is_short_exact(const RepMorphism& f, const RepMorphism& g) {
  for (int c = 0; c < 2; ++c) {
    const ModHom& a = c == 0 ? f.t : f.h;
    const ModHom& b = c == 0 ? g.t : g.h;
    if (!(a.codomain() == b.domain())) return false;
    if (!is_injective(a) || !is_surjective(b)) return false;
    if (!(image(a) == kernel(b))) return false;
  }
  return true;
}

std::optional<RepMorphism> splits(const Rep& x) {
  TorsionSequence ts = torsion_sequence(x);
  HomSpace unknown = hom_space(x, ts.torsion);
  HomSpace target = hom_space(ts.torsion, ts.torsion);
  return solve_hom(unknown, [&](const RepMorphism& r) { return rep_compose(r, ts.inclusion); }, target,
                   rep_identity(ts.torsion));
}

bool ring_split_criterion(const Ring& ring) { return ring.is_semisimple(); }

bool rep_flat(const Rep& x) {
  ModHom rm = row_map(x);
  return is_flat(x.mt()) && is_flat(cokernel(rm)) && is_injective(rm);
}

bool rep_projective(const Rep& x) {
  ModHom rm = row_map(x);
  return is_projective(x.mt()) && is_projective(cokernel(rm)) && is_injective(rm);
}

bool rep_injective(const Rep& x) {
  ModHom st = stacked_map(x);
  return is_injective_module(x.mh()) && is_injective_module(as_module(kernel(st)).module) && is_surjective(st);
}

bool rep_projective_direct(const Rep& x) {
  require_finite_ring(x.ring(), "the direct projectivity check");
  const Ring& r = x.ring();
  std::size_t a = x.mt().rank(), b = x.mh().rank();
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < a; ++i) parts.push_back(proj_t(r));
  for (std::size_t j = 0; j < b; ++j) parts.push_back(proj_h(r));
  if (parts.empty()) return true;
  Rep p = rep_direct_sum(parts);
  Matrix ph(b, 2 * a + b);
  for (std::size_t i = 0; i < a; ++i) {
    ph.set_col(2 * i, x.mu_a().matrix().col(i));
    ph.set_col(2 * i + 1, x.mu_b().matrix().col(i));
  }
  for (std::size_t j = 0; j < b; ++j) ph(j, 2 * a + j) = 1;
  RepMorphism cover = make_rep_morphism(p, x, Matrix::identity(a), ph);
  HomSpace unknown = hom_space(x, p);
  HomSpace target = hom_space(x, x);
  return solve_hom(unknown, [&](const RepMorphism& s) { return rep_compose(cover, s); }, target, rep_identity(x))
      .has_value();
}

bool rep_flat_direct(const Rep& x) { return rep_projective_direct(x); }

namespace {

// Nonzero generators of Hom_R(M, R) as row vectors.
std::vector<Vec> functionals(const FgModule& m) {
  FgModule r = FgModule::free(m.ring(), 1);
  std::vector<Vec> out;
  Lattice h = hom_lattice(m, r);
  for (const Vec& row : h.basis()) {
    Vec v = row;
    vec_mod(v, m.ring().modulus());
    if (!vec_is_zero(v)) out.push_back(v);
  }
  return out;
}

Vec row_times(const Vec& row, const Matrix& m) {
  Vec out(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j] = add(out[j], mul(row[i], m(i, j)));
  return out;
}

}  // namespace

bool rep_injective_direct(const Rep& x) {
  require_finite_ring(x.ring(), "the direct injectivity check");
  const Ring& r = x.ring();
  std::vector<Vec> ft = functionals(x.mt()), fh = functionals(x.mh());
  std::vector<Rep> parts;
  for (std::size_t i = 0; i < ft.size(); ++i) parts.push_back(inj_t(r));
  for (std::size_t j = 0; j < fh.size(); ++j) parts.push_back(inj_h(r));
  if (parts.empty()) return x.mt().is_zero_module() && x.mh().is_zero_module();
  Rep inj = rep_direct_sum(parts);
  std::vector<Vec> trows, hrows;
  for (const Vec& f : ft) trows.push_back(f);
  for (const Vec& g : fh) {
    trows.push_back(row_times(g, x.mu_a().matrix()));
    trows.push_back(row_times(g, x.mu_b().matrix()));
    hrows.push_back(g);
  }
  RepMorphism emb = make_rep_morphism(x, inj, Matrix::from_rows(trows, x.mt().rank()),
                                      Matrix::from_rows(hrows, x.mh().rank()));
  require(is_injective(emb.t) && is_injective(emb.h), ErrorKind::Internal, "embedding into injectives is not mono");
  HomSpace unknown = hom_space(inj, x);
  HomSpace target = hom_space(x, x);
  return solve_hom(unknown, [&](const RepMorphism& q) { return rep_compose(q, emb); }, target, rep_identity(x))
      .has_value();
}

Rep proj_t(const Ring& r) {
  return Rep(FgModule::free(r, 1), FgModule::free(r, 2), Matrix::from_rows({{1}, {0}}, 1),
             Matrix::from_rows({{0}, {1}}, 1));
}

Rep proj_h(const Ring& r) { return Rep(FgModule::free(r, 0), FgModule::free(r, 1), Matrix(1, 0), Matrix(1, 0)); }

Rep inj_t(const Ring& r) { return Rep(FgModule::free(r, 1), FgModule::free(r, 0), Matrix(0, 1), Matrix(0, 1)); }

Rep inj_h(const Ring& r) {
  return Rep(FgModule::free(r, 2), FgModule::free(r, 1), Matrix::from_rows({{1, 0}}, 2),
             Matrix::from_rows({{0, 1}}, 2));
}

Rep regular_rep(const Ring& r) { return rep_direct_sum(proj_t(r), proj_h(r)); }

RepSequence non_closed_quotient(const Ring& r) {
  Rep l = proj_h(r);
  FgModule one = FgModule::free(r, 1);
  Rep m(one, one, Matrix::identity(1), Matrix::identity(1));
  Rep n = inj_t(r);
  RepMorphism f = make_rep_morphism(l, m, Matrix(1, 0), Matrix::identity(1));
  RepMorphism g = make_rep_morphism(m, n, Matrix::identity(1), Matrix(0, 1));
  return {l, m, n, f, g};
}

Rep example_e() {
  FgModule z4 = FgModule::free(Ring::mod(4), 1);
  return Rep(z4, z4, Matrix::from_rows({{2}}, 1), Matrix::from_rows({{2}}, 1));
}

Rep split_witness_z4() {
  Ring r = Ring::mod(4);
  return Rep(FgModule::free(r, 1), FgModule(r, 1, {{2}}), Matrix::identity(1), Matrix::identity(1));
}

}  // namespace linrel
