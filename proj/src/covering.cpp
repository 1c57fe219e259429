#include "linrel/covering.hpp"

#include <random>

namespace linrel {

std::string plus_child(const std::string& sigma) { return sigma + "1"; }
std::string minus_child(const std::string& sigma) { return sigma + "0"; }

std::string vertex_of(const std::string& signs) {
  std::string v;
  for (char c : signs) {
    require(c == '+' || c == '-', ErrorKind::InvalidInput, std::string("ray sign must be + or -, got ") + c);
    v += c == '+' ? '1' : '0';
  }
  return v;
}

BDiagram::BDiagram(Ring ring, Provider provider, DiagramInfo info)
    : ring_(ring), provider_(std::move(provider)), info_(std::move(info)), state_(std::make_shared<State>()) {}

const NodeData& BDiagram::raw(const std::string& sigma) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mu);
  auto it = state_->memo.find(sigma);
  if (it != state_->memo.end()) return it->second;
  if (info_.max_depth && sigma.size() > *info_.max_depth)
    fail(ErrorKind::ProviderViolation, "vertex '" + sigma + "' is beyond the diagram depth " +
                                           std::to_string(*info_.max_depth));
  NodeData nd = provider_(sigma);
  require(nd.module.ring() == ring_, ErrorKind::ProviderViolation, "vertex '" + sigma + "' has a module over another ring");
  return state_->memo.emplace(sigma, std::move(nd)).first->second;
}

const NodeData& BDiagram::node(const std::string& sigma) const {
  std::lock_guard<std::recursive_mutex> lock(state_->mu);
  const NodeData& nd = raw(sigma);
  if (state_->validated[sigma]) return nd;
  const std::string where = "vertex '" + sigma + "': ";
  if (nd.omega) {
    require(nd.omega->domain() == nd.module, ErrorKind::ProviderViolation, where + "Ω domain is not M(σ)");
    require(nd.omega->codomain() == raw(plus_child(sigma)).module, ErrorKind::ProviderViolation,
            where + "Ω codomain is not M(σ+)");
  }
  if (nd.mho) {
    require(nd.mho->codomain() == nd.module, ErrorKind::ProviderViolation, where + "℧ codomain is not M(σ)");
    require(nd.mho->domain() == raw(minus_child(sigma)).module, ErrorKind::ProviderViolation,
            where + "℧ domain is not M(σ-)");
  }
  if (nd.omega && nd.mho)
    require(image(*nd.mho).subset_of(kernel(*nd.omega)), ErrorKind::ProviderViolation,
            where + "im ℧ is not contained in ker Ω");
  state_->validated[sigma] = true;
  return nd;
}

const FgModule& BDiagram::module(const std::string& sigma) const { return node(sigma).module; }

bool BDiagram::has_maps(const std::string& sigma) const {
  if (info_.max_depth && sigma.size() >= *info_.max_depth) return false;
  const NodeData& nd = node(sigma);
  return nd.omega.has_value() && nd.mho.has_value();
}

const ModHom& BDiagram::omega(const std::string& sigma) const {
  const NodeData& nd = node(sigma);
  require(nd.omega.has_value(), ErrorKind::ProviderViolation, "vertex '" + sigma + "' has no Ω");
  return *nd.omega;
}

const ModHom& BDiagram::mho(const std::string& sigma) const {
  const NodeData& nd = node(sigma);
  require(nd.mho.has_value(), ErrorKind::ProviderViolation, "vertex '" + sigma + "' has no ℧");
  return *nd.mho;
}

LinearRelation mu_tilde(const BDiagram& d, const std::string& signs, std::size_t i) {
  require(i >= 1 && i <= signs.size(), ErrorKind::RayMismatch, "mu_tilde index outside the ray prefix");
  std::string tau = vertex_of(signs.substr(0, i - 1));
  if (signs[i - 1] == '-') return graph(d.mho(tau));
  return inverse(graph(d.omega(tau)));
}

Submodule mu_leq(const BDiagram& d, const std::string& signs, std::size_t n, const Submodule& s) {
  require(n <= signs.size(), ErrorKind::RayMismatch, "mu_leq depth exceeds the ray prefix");
  require(s.parent() == d.module(vertex_of(signs.substr(0, n))), ErrorKind::RayMismatch,
          "mu_leq: submodule does not live in M[n]");
  Submodule cur = s;
  for (std::size_t i = n; i >= 1; --i) cur = apply_sub(mu_tilde(d, signs, i), cur);
  return cur;
}

namespace {

// Chain m = c[0], ..., c[k] ∈ top with c[i-1] ∈ μ̃_i c[i].
std::vector<Vec> chain_to(const BDiagram& d, const std::string& signs, const Vec& m, std::size_t k,
                          const Submodule& top) {
  std::vector<Submodule> levels(k + 1);
  levels[k] = top;
  std::vector<LinearRelation> inv(k + 1);
  for (std::size_t i = k; i >= 1; --i) {
    LinearRelation mu = mu_tilde(d, signs, i);
    levels[i - 1] = apply_sub(mu, levels[i]);
    inv[i] = inverse(mu);
  }
  require(levels[0].contains(m), ErrorKind::EmptyWitness, "element is not reachable from the requested level");
  std::vector<Vec> chain{levels[0].parent().reduce(m)};
  for (std::size_t i = 1; i <= k; ++i) {
    Coset next = apply_elem(inv[i], chain.back()).meet(levels[i]);
    require(!next.is_empty(), ErrorKind::EmptyWitness, "empty witness layer at depth " + std::to_string(i));
    chain.push_back(next.representative());
  }
  return chain;
}

}  // namespace

std::vector<Vec> extend_witness(const BDiagram& d, const std::string& signs, const Vec& m, std::size_t depth) {
  require(depth <= signs.size(), ErrorKind::RayMismatch, "witness depth exceeds the ray prefix");
  return chain_to(d, signs, m, depth, Submodule::whole(d.module(vertex_of(signs.substr(0, depth)))));
}

bool chain_is_valid(const BDiagram& d, const std::string& signs, const std::vector<Vec>& chain) {
  if (chain.empty() || chain.size() - 1 > signs.size()) return false;
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!mu_tilde(d, signs, i).contains(chain[i], chain[i - 1])) return false;
  return true;
}

RayResult ray_search(const BDiagram& d, const Vec& m, std::size_t depth) {
  const FgModule& m0 = d.module("");
  Vec mm = m0.reduce(m);
  require(!vec_is_zero(mm), ErrorKind::ZeroElement, "ray search needs a nonzero element");
  RayResult r;
  LinearRelation comp = graph(ModHom::identity(m0));
  std::vector<std::pair<std::size_t, LinearRelation>> seen;
  std::optional<std::pair<std::size_t, std::size_t>> period;
  std::string note;
  std::size_t reached = 0;
  for (std::size_t j = 0;; ++j) {
    reached = j;
    std::string tau = vertex_of(r.signs);
    if (!d.has_maps(tau)) {
      note = "diagram exhausted at depth " + std::to_string(j);
      break;
    }
    Submodule ker = kernel(d.omega(tau));
    Submodule img = image(d.mho(tau));
    bool in_a = apply_sub(comp, ker).contains(mm);
    Submodule b = apply_sub(comp, img);
    bool in_b = b.contains(mm);
    if (in_a && !in_b) {
      Case1 c;
      c.j = j;
      c.chain = chain_to(d, r.signs, mm, j, ker);
      c.image_generators = b.generators();
      for (std::size_t i = 0; i <= r.signs.size(); ++i) r.vertices.push_back(vertex_of(r.signs.substr(0, i)));
      r.outcome = std::move(c);
      return r;
    }
    if (j == depth) break;
    if (!period && d.info().stationary_from && j >= *d.info().stationary_from) {
      for (const auto& [j1, earlier] : seen)
        if (earlier == comp) {
          period = std::make_pair(j1, j);
          break;
        }
      if (!period) seen.emplace_back(j, comp);
    }
    r.signs += in_a ? '-' : '+';
    comp = compose(comp, mu_tilde(d, r.signs, j + 1));
  }
  Case2 c;
  c.depth = reached;
  c.chain = extend_witness(d, r.signs, mm, reached);
  c.certified = period.has_value();
  c.period = period;
  c.note = note;
  for (std::size_t i = 0; i <= r.signs.size(); ++i) r.vertices.push_back(vertex_of(r.signs.substr(0, i)));
  r.outcome = std::move(c);
  return r;
}

bool verify_exclusivity(const BDiagram& d, const Vec& m, const RayResult& r) {
  const FgModule& m0 = d.module("");
  Vec mm = m0.reduce(m);
  if (const Case1* c = std::get_if<Case1>(&r.outcome)) {
    if (r.signs.size() != c->j) return false;
    std::string tau = vertex_of(r.signs);
    Submodule ker = kernel(d.omega(tau));
    Submodule img = image(d.mho(tau));
    if (!mu_leq(d, r.signs, c->j, ker).contains(mm)) return false;
    if (mu_leq(d, r.signs, c->j, img).contains(mm)) return false;
    if (!chain_is_valid(d, r.signs, c->chain) || c->chain.size() != c->j + 1) return false;
    if (c->chain.front() != mm || !ker.contains(c->chain.back())) return false;
    // Continuing with a plus step puts m into μ̃_{≤j+1} 0, so the second case fails.
    std::string ext = r.signs + '+';
    return mu_leq(d, ext, c->j + 1, Submodule::zero(d.module(vertex_of(ext)))).contains(mm);
  }
  const Case2& c = std::get<Case2>(r.outcome);
  if (r.signs.size() != c.depth) return false;
  for (std::size_t i = 0; i <= c.depth; ++i) {
    std::string prefix = r.signs.substr(0, i);
    std::string tau = vertex_of(prefix);
    const FgModule& mi = d.module(tau);
    if (mu_leq(d, prefix, i, Submodule::zero(mi)).contains(mm)) return false;
    if (!mu_leq(d, prefix, i, Submodule::whole(mi)).contains(mm)) return false;
    if (!d.has_maps(tau)) continue;
    bool in_a = mu_leq(d, prefix, i, kernel(d.omega(tau))).contains(mm);
    bool in_b = mu_leq(d, prefix, i, image(d.mho(tau))).contains(mm);
    if (in_a && !in_b) return false;
    if (i < c.depth && r.signs[i] != (in_a ? '-' : '+')) return false;
  }
  return chain_is_valid(d, r.signs, c.chain) && c.chain.size() == c.depth + 1 && c.chain.front() == mm;
}

Shortcut finite_case_shortcuts(const BDiagram& d, const std::string& prefix, char tail) {
  require(tail == '+' || tail == '-', ErrorKind::InvalidInput, "tail sign must be + or -");
  Shortcut s;
  char other = tail == '+' ? '-' : '+';
  for (std::size_t j = 1; j <= prefix.size(); ++j)
    if (prefix[j - 1] == other) s.k = j;
  const FgModule& mk = d.module(vertex_of(prefix.substr(0, s.k)));
  if (tail == '+')
    s.intersection = mu_leq(d, prefix, s.k, Submodule::whole(mk));
  else
    s.union_part = mu_leq(d, prefix, s.k, Submodule::zero(mk));
  return s;
}

MonotonicityReport check_monotonicity(const BDiagram& d, const std::string& signs) {
  MonotonicityReport rep;
  std::optional<Submodule> prev_zero, prev_full;
  for (std::size_t i = 0; i <= signs.size(); ++i) {
    const FgModule& mi = d.module(vertex_of(signs.substr(0, i)));
    Submodule z = mu_leq(d, signs, i, Submodule::zero(mi));
    Submodule f = mu_leq(d, signs, i, Submodule::whole(mi));
    if (prev_zero && !prev_zero->subset_of(z)) rep.ascending_zero = false;
    if (prev_full && !f.subset_of(*prev_full)) rep.descending_full = false;
    prev_zero = z;
    prev_full = f;
  }
  return rep;
}

namespace {

BDiagram sum_diagram(const std::vector<BDiagram>& factors, const std::string& kind) {
  require(!factors.empty(), ErrorKind::InvalidInput, kind + " of no diagrams");
  Ring ring = factors.front().ring();
  DiagramInfo info;
  info.name = kind + "(";
  bool all_stationary = true;
  std::size_t stationary = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const BDiagram& f = factors[i];
    require(f.ring() == ring, ErrorKind::ParentMismatch, kind + " of diagrams over different rings");
    info.name += (i ? "," : "") + f.info().name;
    if (f.info().max_depth) info.max_depth = std::min(info.max_depth.value_or(*f.info().max_depth), *f.info().max_depth);
    if (f.info().stationary_from)
      stationary = std::max(stationary, *f.info().stationary_from);
    else
      all_stationary = false;
  }
  info.name += ")";
  if (all_stationary) info.stationary_from = stationary;
  auto shared = std::make_shared<std::vector<BDiagram>>(factors);
  Provider p = [shared](const std::string& sigma) {
    const auto& fs = *shared;
    NodeData nd{fs.front().module(sigma), std::nullopt, std::nullopt};
    bool maps = fs.front().has_maps(sigma);
    for (std::size_t i = 1; i < fs.size(); ++i) {
      nd.module = direct_sum(nd.module, fs[i].module(sigma));
      maps = maps && fs[i].has_maps(sigma);
    }
    if (maps) {
      ModHom om = fs.front().omega(sigma), mh = fs.front().mho(sigma);
      for (std::size_t i = 1; i < fs.size(); ++i) {
        om = hom_direct_sum(om, fs[i].omega(sigma));
        mh = hom_direct_sum(mh, fs[i].mho(sigma));
      }
      nd.omega = om;
      nd.mho = mh;
    }
    return nd;
  };
  return BDiagram(ring, p, info);
}

bool compat(const BDiagram& whole_diagram, const std::vector<BDiagram>& factors, const std::string& signs,
            std::size_t n) {
  std::string tau = vertex_of(signs.substr(0, n));
  Submodule lhs = mu_leq(whole_diagram, signs, n, Submodule::whole(whole_diagram.module(tau)));
  Submodule rhs = mu_leq(factors.front(), signs, n, Submodule::whole(factors.front().module(tau)));
  for (std::size_t i = 1; i < factors.size(); ++i)
    rhs = direct_sum(rhs, mu_leq(factors[i], signs, n, Submodule::whole(factors[i].module(tau))));
  return lhs == rhs;
}

}  // namespace

BDiagram product_diagram(const std::vector<BDiagram>& factors) { return sum_diagram(factors, "product"); }
BDiagram coproduct_diagram(const std::vector<BDiagram>& factors) { return sum_diagram(factors, "coproduct"); }

bool product_compat(const std::vector<BDiagram>& factors, const std::string& signs, std::size_t n) {
  return compat(product_diagram(factors), factors, signs, n);
}

bool coproduct_compat(const std::vector<BDiagram>& factors, const std::string& signs, std::size_t n) {
  return compat(coproduct_diagram(factors), factors, signs, n);
}

BDiagram zero_diagram(Ring ring) { return constant_diagram(ring, 0, 0, 0, "zero"); }

BDiagram constant_diagram(Ring ring, std::size_t rank, Int omega, Int mho, const std::string& name) {
  FgModule m = FgModule::free(ring, rank);
  Matrix om = Matrix::identity(rank), mh = Matrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    om(i, i) = ring.reduce(omega);
    mh(i, i) = ring.reduce(mho);
  }
  NodeData nd{m, ModHom(m, m, om), ModHom(m, m, mh)};
  DiagramInfo info{name, std::nullopt, std::size_t{0}};
  return BDiagram(ring, [nd](const std::string&) { return nd; }, info);
}

BDiagram example_h(Int n) { return constant_diagram(Ring::mod(n), 1, 0, 0, "example_h"); }
BDiagram example_i(Int n) { return constant_diagram(Ring::mod(n), 1, 0, 1, "example_i"); }

namespace {

std::mt19937_64 vertex_rng(std::uint64_t seed, const std::string& sigma, std::uint32_t salt) {
  std::uint64_t bits = 0;
  for (char c : sigma) bits = (bits << 1) | (c == '1' ? 1u : 0u);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sigma.size()), static_cast<std::uint32_t>(bits),
                    static_cast<std::uint32_t>(bits >> 32), salt};
  return std::mt19937_64(seq);
}

}  // namespace

BDiagram random_diagram(Ring ring, std::uint64_t seed, std::size_t max_rank) {
  require(ring.is_finite() && max_rank >= 1, ErrorKind::InvalidInput, "random diagrams need Z/n and rank >= 1");
  Int n = ring.modulus();
  auto rank_of = [seed, max_rank](const std::string& sigma) {
    auto g = vertex_rng(seed, sigma, 0);
    return 1 + static_cast<std::size_t>(g() % max_rank);
  };
  Provider p = [=](const std::string& sigma) {
    FgModule here = FgModule::free(ring, rank_of(sigma));
    FgModule up = FgModule::free(ring, rank_of(plus_child(sigma)));
    FgModule down = FgModule::free(ring, rank_of(minus_child(sigma)));
    auto g = vertex_rng(seed, sigma, 1);
    std::uniform_int_distribution<Int> coef(0, n - 1);
    Matrix om(up.rank(), here.rank());
    for (std::size_t i = 0; i < om.rows(); ++i)
      for (std::size_t j = 0; j < om.cols(); ++j) om(i, j) = coef(g);
    ModHom omega(here, up, om);
    std::vector<Vec> ker = kernel(omega).generators();
    Matrix mh(here.rank(), down.rank());
    for (std::size_t j = 0; j < down.rank(); ++j) {
      Vec col(here.rank(), 0);
      for (const Vec& k : ker) vec_axpy(col, coef(g), k);
      mh.set_col(j, here.reduce(col));
    }
    return NodeData{here, omega, ModHom(down, here, mh)};
  };
  DiagramInfo info{"random:" + std::to_string(seed), std::nullopt, std::nullopt};
  return BDiagram(ring, p, info);
}

BDiagram table_diagram(Ring ring, std::size_t depth, std::map<std::string, NodeData> nodes) {
  auto shared = std::make_shared<std::map<std::string, NodeData>>(std::move(nodes));
  Provider p = [shared](const std::string& sigma) {
    auto it = shared->find(sigma);
    if (it == shared->end()) fail(ErrorKind::ProviderViolation, "table has no vertex '" + sigma + "'");
    return it->second;
  };
  DiagramInfo info{"table", depth, std::nullopt};
  return BDiagram(ring, p, info);
}

}  // namespace linrel
