#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linrel/relation.hpp"

namespace linrel {

// A vertex of the binary tree is a string over {0,1}; "0" appends a minus
// step and "1" a plus step. σ+ = σ + "1", σ- = σ + "0".
std::string plus_child(const std::string& sigma);
std::string minus_child(const std::string& sigma);

// Data at a vertex σ: M(σ), Ω_σ : M(σ) -> M(σ+) and ℧_σ : M(σ-) -> M(σ).
// Maps are absent at the last level of a finite table.
struct NodeData {
  FgModule module;
  std::optional<ModHom> omega;
  std::optional<ModHom> mho;
};

using Provider = std::function<NodeData(const std::string& sigma)>;

struct DiagramInfo {
  std::string name;
  std::optional<std::size_t> max_depth;
  // Vertices of depth >= this bound all carry identical data.
  std::optional<std::size_t> stationary_from;
};

// Lazily expanded diagram. Nodes are memoised and validated on first access:
// map ends must match neighbouring modules and im ℧_σ must lie in ker Ω_σ.
class BDiagram {
 public:
  BDiagram(Ring ring, Provider provider, DiagramInfo info);

  const Ring& ring() const { return ring_; }
  const DiagramInfo& info() const { return info_; }
  const FgModule& module(const std::string& sigma) const;
  bool has_maps(const std::string& sigma) const;
  const ModHom& omega(const std::string& sigma) const;
  const ModHom& mho(const std::string& sigma) const;

 private:
  const NodeData& raw(const std::string& sigma) const;
  const NodeData& node(const std::string& sigma) const;

  Ring ring_;
  Provider provider_;
  DiagramInfo info_;
  struct State {
    std::map<std::string, NodeData> memo;
    std::map<std::string, bool> validated;
    std::recursive_mutex mu;
  };
  std::shared_ptr<State> state_;
};

// Signs are '+' or '-'. vertex_of("+-") == "10".
std::string vertex_of(const std::string& signs);

// μ̃_i as a relation from M[i] to M[i-1] along the ray (1 <= i <= |signs|).
LinearRelation mu_tilde(const BDiagram& d, const std::string& signs, std::size_t i);
// μ̃_1 ... μ̃_n applied to S ⊆ M[n].
Submodule mu_leq(const BDiagram& d, const std::string& signs, std::size_t n, const Submodule& s);

struct Case1 {
  std::size_t j = 0;
  // m = chain[0], chain[i-1] ∈ μ̃_i chain[i], chain[j] ∈ ker Ω_{σ^j}.
  std::vector<Vec> chain;
  // Generators of μ̃_{≤j} im ℧_{σ^j}, which does not contain m.
  std::vector<Vec> image_generators;
};

struct Case2 {
  std::size_t depth = 0;
  // m = chain[0], chain[i-1] ∈ μ̃_i chain[i] for i <= depth.
  std::vector<Vec> chain;
  // True when the search provably repeats (stationary diagram, repeated state).
  bool certified = false;
  std::optional<std::pair<std::size_t, std::size_t>> period;
  std::string note;
};

struct RayResult {
  std::string signs;
  std::vector<std::string> vertices;
  std::variant<Case1, Case2> outcome;
};

RayResult ray_search(const BDiagram& d, const Vec& m, std::size_t depth);
// Re-checks the reported case independently of the search state.
bool verify_exclusivity(const BDiagram& d, const Vec& m, const RayResult& r);
// Chain m_0 = m, m_j chosen in μ̃_j^{-1} m_{j-1} ∩ μ̃_{j+1}...μ̃_d M[d].
std::vector<Vec> extend_witness(const BDiagram& d, const std::string& signs, const Vec& m, std::size_t depth);
// True when each step of the chain is admissible.
bool chain_is_valid(const BDiagram& d, const std::string& signs, const std::vector<Vec>& chain);

struct Shortcut {
  std::size_t k = 0;
  std::optional<Submodule> intersection;  // tail '+': ⋂ μ̃_{≤i} M[i]
  std::optional<Submodule> union_part;    // tail '-': ⋃ μ̃_{≤i} 0
};
// Ray = prefix followed by the tail sign forever.
Shortcut finite_case_shortcuts(const BDiagram& d, const std::string& prefix, char tail);

struct MonotonicityReport {
  bool ascending_zero = true;
  bool descending_full = true;
  bool ok() const { return ascending_zero && descending_full; }
};
MonotonicityReport check_monotonicity(const BDiagram& d, const std::string& signs);

// Pointwise direct sum; for finitely many factors product and coproduct agree.
BDiagram product_diagram(const std::vector<BDiagram>& factors);
BDiagram coproduct_diagram(const std::vector<BDiagram>& factors);
bool product_compat(const std::vector<BDiagram>& factors, const std::string& signs, std::size_t n);
bool coproduct_compat(const std::vector<BDiagram>& factors, const std::string& signs, std::size_t n);

// Built-in diagrams.
BDiagram zero_diagram(Ring ring);
// Every vertex R^rank with Ω = omega·id and ℧ = mho·id (omega*mho = 0).
BDiagram constant_diagram(Ring ring, std::size_t rank, Int omega, Int mho, const std::string& name);
BDiagram example_h(Int n = 4);
BDiagram example_i(Int n = 4);
// Random free modules with random maps satisfying the diagram condition.
BDiagram random_diagram(Ring ring, std::uint64_t seed, std::size_t max_rank);
BDiagram table_diagram(Ring ring, std::size_t depth, std::map<std::string, NodeData> nodes);

}  // namespace linrel
