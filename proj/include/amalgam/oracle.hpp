#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/diagram.hpp"
#include "amalgam/graphalg.hpp"
#include "amalgam/matrix.hpp"

namespace amalgam {

/// Worst deviation seen per relation class, with the label of the worst
/// offender overall.
struct Residual {
  double worst = 0.0;
  std::string worst_label;
  std::map<std::string, double> per_class;

  void note(const std::string& cls, double value, const std::string& label);
  void merge(const Residual& other);
  bool pass(double tolerance) const { return worst < tolerance; }
};

class UnresolvableWord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using UnitKey = std::pair<int, int>;  // 1-based matrix unit indices

/// Images of one factor's matrix units on the common space.  The key set
/// describes the factor: a full matrix algebra or a direct sum of corners.
struct FactorImages {
  std::map<UnitKey, CMatrix> units;

  const CMatrix& unit(int row, int col) const;
  bool defined(int row, int col) const { return units.count({row, col}) != 0; }
};

/// A pair of *-representations of the two factors on one space, agreeing on
/// the amalgam: for every entry of `amalgam_columns`, the factor-0 diagonal
/// units summed over the first index set equal the factor-1 sum over the
/// second.  `shared_diagonal` caches those common projections.
struct RepPair {
  int target_size = 0;
  std::array<FactorImages, 2> factors;
  std::vector<CMatrix> shared_diagonal;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> amalgam_columns;
  bool degenerate = false;  // the zero pair, when no nonzero pair exists
};

/// Residual of the matrix-unit relations e_ij e_kl = delta_jk e_il and
/// (e_ij)* = e_ji over a full n x n unit system.
Residual check_star_rep(const std::map<UnitKey, CMatrix>& images, int n);

/// Relation residual over an arbitrary (closed) unit key set, plus the
/// amalgam agreement residual of a pair.
Residual validate_rep_pair(const RepPair& p);

/// The two corner subalgebras of M_{k+1} used by the gluing construction:
/// factor 0 is M_k (+) C, factor 1 is C^{k-1} (+) M_2, both including into
/// M_{k+1} with multiplicity m and twisted by independent random unitaries
/// that are block diagonal over the k+1 diagonal eigenspaces, so both
/// restrict identically on the diagonal C^{k+1}.
RepPair random_corner_rep_pair(int k, int m, std::uint64_t seed);

/// As above with explicit per-eigenspace twist blocks (each m x m).
RepPair corner_rep_pair_with_twists(int k, int m, const std::vector<CMatrix>& w1_blocks,
                                    const std::vector<CMatrix>& w2_blocks);

/// A deliberately broken pair: the factor-1 images are conjugated by a
/// permutation that swaps the first and last diagonal eigenspaces, so the
/// diagonal agreement fails by a full unit.  Not validated.
RepPair corner_rep_pair_agreement_broken(int k, int m, std::uint64_t seed);

/// The four-case gluing: images of every matrix unit of M_{k+1} built from
/// a corner pair via
///   e_ij          -> pi0(e_ij)                      (i, j <= k)
///   e_{k+1,k+1}   -> pi1(e_{k+1,k+1})
///   e_{i,k+1}     -> pi0(e_ik) pi1(e_{k,k+1})       (i <= k)
///   e_{k+1,j}     -> pi1(e_{k+1,k}) pi0(e_kj)       (j <= k).
std::map<UnitKey, CMatrix> build_corner_product_rep(const RepPair& p, int k);

/// Runs `trials` seeded corner pairs through the gluing and the full
/// star-representation check; also folds in the pair validation residuals.
Residual check_corner_product(int k, int m, int trials, std::uint64_t seed);

/// Point evaluations at z of the two M_2 representations into
/// M_2(C(T) *_C C(T)) used to witness that M2 *_C M2 is not exact:
/// the off-diagonal twist  [[a, b z], [c conj(z), d]]  and its Hadamard
/// conjugate with entries ((a+d+bz+c conj z)/2, ...).  Requires |z| = 1.
std::map<UnitKey, CMatrix> m2_rep_offdiag_twist(Complex z);
std::map<UnitKey, CMatrix> m2_rep_hadamard_twist(Complex z);

/// Checks, over random unit-circle samples, that both M_2 representations
/// satisfy the star-representation relations, agree on scalars, and satisfy
/// the two product identities
///   [[z1,0],[0,0]] = pi_a(e12) pi_b(e11 - e22)
///   [[z2,0],[0,0]] = pi_a(e11) pi_b(2 e12) pi_a(e11).
Residual check_m2_pair_identities(int samples, std::uint64_t seed);

/// Spot value: the Hadamard-twist image of e11, which is (1/2)[[1,1],[1,1]]
/// independently of z.
CMatrix m2_hadamard_e11();

/// Representation pair for a unital two-row diagram: per-factor
/// multiplicities are the minimal positive solution of the column rank
/// constraints scaled by `mult`, with independent random twists block
/// diagonal over the column subspaces.  When the columns admit no positive
/// solution the zero pair is returned with `degenerate` set: the zero
/// representation is then the only finite-dimensional one.
RepPair random_diagram_rep_pair(const AmalgamationDiagram& d, int mult, std::uint64_t seed);

/// Whether a unital two-row diagram admits a nonzero finite-dimensional
/// representation pair (columnwise proportional rows).
bool diagram_has_nonzero_rep_pair(const AmalgamationDiagram& d);

/// Cuntz-Krieger relation residual of an assignment evaluated through a
/// representation pair: per edge ||S*S - P_{s(e)}|| and per receiving vertex
/// ||P_v - sum S S*||.  Throws UnresolvableWord when a word references a
/// matrix unit the pair does not define.
Residual check_ck_relations(const CKAssignment& a, const RepPair& p);

}  // namespace amalgam
