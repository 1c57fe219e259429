#pragma once

#include <optional>
#include <vector>

#include "linrel/relation.hpp"

namespace linrel {

// (X | ρ): X a module with automorphism T, ρ : X -> M.
struct Reduction {
  LaurentModule x;
  ModHom rho;
};

struct ReductionReport {
  bool image_in_sharp = false;    // im ρ ⊆ C#
  bool sharp_covered = false;     // C# = Cb + im ρ
  bool intertwines = false;       // ρ(T x) ∈ C ρ(x) on a basis
  bool meets_in_radical = false;  // ρ^{-1}(Cb) = J X
  bool free = false;              // X free over R
  // 0 -> JX -> X -> C#/Cb -> 0: kernel of the induced map is JX, it is
  // surjective and T-equivariant, and |X| = |JX| |C#/Cb|.
  bool sequence_exact = false;
  Int order_x = 0, order_jx = 0, order_quotient = 0;
  bool ok() const {
    return image_in_sharp && sharp_covered && intertwines && meets_in_radical && sequence_exact;
  }
};

// Requires Z/n.
ReductionReport check_reduction(const LinearRelation& c, const Reduction& r);
ReductionReport check_reduction(const SharpFlatData& d, const Reduction& r);

// J M ⊆ (C^-1)' + C' over a local ring Z/p^k.
bool reduction_hypothesis(const SharpFlatData& d);

// Free reduction meeting in the radical, built by the explicit recursion.
// Throws RingNotLocal or HypothesisViolated.
struct ReductionTrace {
  Matrix r;                  // T(b_ω) = Σ_λ r(ω, λ) b_λ
  Matrix q;                  // r^{-1}
  std::vector<Vec> m;        // lifts of the quotient basis
  std::vector<Vec> ell;      // ℓ_ω ∈ Cb
  std::vector<std::vector<Vec>> forward_witness;   // ℓ^{0→}, ℓ^{-1→}, ... , 0
  std::vector<std::vector<Vec>> backward_witness;  // ℓ^{←0}, ℓ^{←1}, ... , 0
  std::size_t window = 0;    // d
  std::vector<Vec> z;        // ρ(b_ω)
};
Reduction build_reduction(const LinearRelation& c, ReductionTrace* trace = nullptr);
Reduction build_reduction(const SharpFlatData& d, ReductionTrace* trace = nullptr);

// Complement Y of Cb in C# with Ty = z iff z ∈ Cy, over a semisimple Z/n.
struct Splitting {
  Submodule y;
  ModHom embedding;  // abstract Y -> M
  ModHom t;          // T on the abstract Y
  bool direct_sum = false;   // C# = Cb ⊕ Y
  bool equivalence = false;  // Cy ∩ Y = {Ty} for every y ∈ Y
  std::size_t checked = 0;   // elements of Y tested
  bool ok() const { return direct_sum && equivalence; }
};
// Throws RingNotSemisimple.
Splitting semisimple_splitting(const LinearRelation& c);

struct NonSplitReport {
  Int p = 0;
  int k = 0;
  Int order_dprime = 0, order_prime = 0, order_sharp = 0, order_flat = 0;
  Vec quotient_invariants;
  Int ann_sharp = 0;  // annihilator generator of D#
  Int ann_sum = 0;    // annihilator generator of Db ⊕ D#/Db
  bool certified = false;  // the annihilators differ
};
NonSplitReport non_split_witness(Int p, int k);

}  // namespace linrel
