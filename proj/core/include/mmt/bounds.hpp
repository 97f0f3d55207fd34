#pragma once

#include "mmt/eigen.hpp"
#include "mmt/tensor.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mmt {

/// Known rank bounds for the small matmul tensors, keyed by the sorted
/// dimension triple. Rank is invariant under permutations of the triple.
struct RankBounds {
    unsigned lower = 0;
    unsigned upper = 0;
};

/// The seeded table covers every triple with entries up to 3:
///   <m,n,1> = mn exactly, <2,2,2> = 7, <2,2,3> = 11,
///   <2,3,3> in [14,15], <3,3,3> in [19,23].
class RankTable {
  public:
    static const RankTable& standard();

    /// Bounds for the sorted triple; throws Error for uncovered triples.
    RankBounds at(std::size_t p, std::size_t q, std::size_t r) const;

  private:
    RankTable();
    std::vector<std::pair<std::array<std::size_t, 3>, RankBounds>> entries_;
};

/// Table lower bound for rk<p,q,r> after sorting the triple.
unsigned rank_lower(std::size_t p, std::size_t q, std::size_t r);

/// A partition of 3: one of {3}, {2,1}, {1,1,1}. Parts are kept sorted
/// in decreasing order.
class Partition3 {
  public:
    explicit Partition3(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t count() const { return parts_.size(); }

    static std::vector<Partition3> all(); // {3}, {2,1}, {1,1,1}
    static Partition3 parse(const std::string& text); // "2,1"
    std::string to_string() const;

    friend bool operator==(const Partition3& a, const Partition3& b) = default;

  private:
    std::vector<std::size_t> parts_;
};

/// One eigenvalue class of the map x -> a x b^-1 on the first factor:
/// sigma = lambda_i * mu_j^-1 together with the index pairs (i, j) into
/// the two eigenstructures that produce it. Within a class all first
/// indices are distinct and all second indices are distinct.
struct SigmaClass {
    CycScalar sigma;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Eigenvalue data for splitting the matmul tensor along the first
/// factor, given finite-order a and b. The eigenvalue of the dual row
/// action of b on index j is mu_j^-1.
struct EigenSplitPlan {
    EigenStructure a_structure;
    EigenStructure b_structure;
    std::vector<SigmaClass> classes; // covers the full index grid
};

/// Splits by sigma = lambda_i * mu_j^-1. Requires a^order_a = identity,
/// b^order_b = identity, and lcm(order_a, order_b) dividing the
/// cyclotomic order.
EigenSplitPlan split_by_eigenvalues(const ExactMatrix& a, const ExactMatrix& b,
                                    unsigned order_a, unsigned order_b);

/// Component of the matmul tensor <m,n,p> lying over the given class:
/// the first-factor fibers are mapped through sum of P_i X Q_j over the
/// class pairs. The components over all classes sum to the whole tensor.
DenseTensor tensor_component(const EigenSplitPlan& plan, std::size_t class_index,
                             std::size_t p = 3);

/// Exact rank of one class component: the sum of table lower bounds
/// rk<d_i, f_j, p> over the class pairs (valid by blockwise direct-sum
/// additivity, which holds because some block dimension is at most 2).
unsigned class_rank_lower(const EigenSplitPlan& plan, std::size_t class_index,
                          std::size_t p = 3);

/// Lower bound on the length of any decomposition of <3,3,3> whose terms
/// are all fixed by a sandwich element with eigenvalue multiplicity
/// partitions dbar (for a) and fbar (for b): the sum over ALL pairs
/// (i, j) of rk<d_i, f_j, 3>.
unsigned invariant_length_bound(const Partition3& dbar, const Partition3& fbar);

/// Same bound computed from concrete finite-order matrices.
unsigned invariant_length_bound(const ExactMatrix& a, const ExactMatrix& b,
                                unsigned order_a, unsigned order_b);

/// One row of the partition case analysis.
struct CaseRow {
    Partition3 dbar;
    Partition3 fbar;
    std::vector<unsigned> summands; // rk<d_i,f_j,3> per pair, row-major
    unsigned bound = 0;
};

/// All pairs of partitions of 3 with dbar having at least two parts (a
/// non-scalar first matrix), with their bounds. The minimum over the
/// table is 23.
std::vector<CaseRow> partition_case_table();

/// Minimum bound over the case table.
unsigned case_table_minimum();

} // namespace mmt
