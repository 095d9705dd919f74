#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz_sos/certificate.hpp"
#include "hurwitz_sos/error.hpp"

namespace hsos {

struct PairRef {
  std::size_t block = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const PairRef&, const PairRef&) = default;
};

/// Which cyclic class every Gram entry (block, j, k) feeds, and the reverse index.
class ConstraintMap {
 public:
  int p() const { return p_; }
  int r() const { return r_; }
  const std::vector<SandwichBlock>& blocks() const { return blocks_; }
  const CyclicClass& class_of(std::size_t block, std::size_t j, std::size_t k) const;
  const std::map<CyclicClass, std::vector<PairRef>>& contributors() const { return contributors_; }

 private:
  friend ConstraintMap build_constraint_map(int p, int r, const std::vector<SandwichBlock>& blocks);
  ConstraintMap() = default;

  int p_ = 0;
  int r_ = 0;
  std::vector<SandwichBlock> blocks_;
  std::vector<std::vector<CyclicClass>> pair_class_;  // [block][j * dim + k]
  std::map<CyclicClass, std::vector<PairRef>> contributors_;
};

/// The ansatz reaches none of these target classes, so no Gram matrix can express the target.
class InexpressibleTarget : public StructureError {
 public:
  explicit InexpressibleTarget(std::vector<CyclicClass> unreachable);
  const std::vector<CyclicClass>& unreachable() const { return unreachable_; }

 private:
  std::vector<CyclicClass> unreachable_;
};

/// Throws StructureError when a block's products do not have length p and exactly r B's.
ConstraintMap build_constraint_map(int p, int r, const std::vector<SandwichBlock>& blocks);

/// One Gram matrix per block when every class has a single contributor; absent otherwise.
/// Throws InexpressibleTarget when a target class is unreachable.
std::optional<std::vector<GramMatrix>> determined_gram(const ConstraintMap& map, const TracePolynomial& target);

enum class SearchStatus { Certificate, InfeasibleWitness, Unknown };

std::string to_string(SearchStatus s);

struct InfeasibilityWitness {
  std::size_t block = 0;
  std::vector<GaussianRational> vector;
  Rational value;    // vector* G vector, strictly negative
  GramMatrix forced;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Certificate> certificate;
  std::optional<InfeasibilityWitness> witness;
  int iterations = 0;
  double residual = 0.0;  // last affine residual of the numeric search
  std::string note;
};

struct SearchOptions {
  int max_iter = 5000;
  double tol = 1e-12;
  std::uint64_t denom_bound = 10000;
  std::uint64_t seed = 0;
  /// Initial eigenvalue floor of the PSD projection, relative to max |target coefficient|.
  double margin = 1e-2;
  /// Exact rounding is attempted every `check_every` iterations and on convergence.
  int check_every = 50;

  /// Throws InvalidInput for a nonpositive iteration cap, zero denominator bound, etc.
  void validate() const;
};

/// Checks a forced Gram system exactly. Throws StructureError if the system is underdetermined.
SearchOutcome prove_infeasible_determined(const ConstraintMap& map, const TracePolynomial& target);

/// Determined systems resolve exactly; otherwise alternating projections between the
/// affine constraint set and the PSD cone over real symmetric Gram blocks, with
/// periodic rounding to rationals and exact re-verification.
SearchOutcome feasibility_search(int p, int r, const std::vector<SandwichBlock>& blocks,
                                 const SearchOptions& options = {});

}  // namespace hsos
