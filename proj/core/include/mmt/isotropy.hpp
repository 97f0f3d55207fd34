#pragma once

#include "mmt/tensor.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmt {

/// The six factor symmetries of a matmul tensor: the identity, the cyclic
/// rotation s: x(x)y(x)z -> z(x)x(x)y, its square, and the three
/// transpose-reflections generated by r: x(x)y(x)z -> y^t(x)x^t(x)z^t.
/// They form a group isomorphic to S3.
enum class FactorSymmetry { Id, S, S2, R, SR, S2R };

FactorSymmetry compose(FactorSymmetry g, FactorSymmetry h); ///< g after h
FactorSymmetry inverse(FactorSymmetry q);

/// Slot permutation of q in "content of slot j moves to slot beta[j]"
/// form, 0-based.
std::array<std::size_t, 3> factor_permutation(FactorSymmetry q);

/// Whether the image of q carries transposed factors.
bool transposes(FactorSymmetry q);

const char* symmetry_tag(FactorSymmetry q);          // "id", "s", ..., "s2r"
FactorSymmetry parse_symmetry(const std::string& s); // throws ParseError

/// Cycle notation of the factor permutation, 1-based, "id" for identity.
std::string factor_permutation_cycles(FactorSymmetry q);

/// Image shape of <m,n,p> under q (factor rotation permutes the
/// dimensions, reflections also swap two of them).
Shape symmetry_image_shape(FactorSymmetry q, const Shape& shape);

/// True iff q maps the <m,n,p> space to itself: always for the identity,
/// m=n=p for the rotations, and equality of the two swapped dimensions
/// for the reflections.
bool symmetry_admissible(FactorSymmetry q, const Shape& shape);

/// Shape-polymorphic application of a factor symmetry to a term.
RankOneTerm apply_symmetry(FactorSymmetry q, const RankOneTerm& t);

/// An element q . T(a,b,c) of the isotropy group of <m,n,p>, where the
/// sandwich transform T(a,b,c) maps x(x)y(x)z to
/// a x b^-1 (x) b y c^-1 (x) c z a^-1 and q is a factor symmetry applied
/// afterwards. T(la, mb, nc) = T(a,b,c) for nonzero scalars l, m, n, so
/// equality of elements is projective in each of a, b, c; the stored
/// matrices are kept exactly as given.
class IsotropyElement {
  public:
    /// a, b, c must be invertible of sizes m x m, n x n, p x p, and q must
    /// be admissible for the resulting shape.
    IsotropyElement(FactorSymmetry q, ExactMatrix a, ExactMatrix b, ExactMatrix c);

    static IsotropyElement sandwich(ExactMatrix a, ExactMatrix b, ExactMatrix c);
    static IsotropyElement identity(const FieldPtr& field, const Shape& shape);
    static IsotropyElement symmetry(const FieldPtr& field, const Shape& shape,
                                    FactorSymmetry q);

    FactorSymmetry q() const { return q_; }
    const ExactMatrix& a() const { return a_; }
    const ExactMatrix& b() const { return b_; }
    const ExactMatrix& c() const { return c_; }
    const ExactMatrix& a_inv() const { return a_inv_; }
    const ExactMatrix& b_inv() const { return b_inv_; }
    const ExactMatrix& c_inv() const { return c_inv_; }
    Shape shape() const;
    const FieldPtr& field() const { return a_.field(); }

    bool is_sandwich() const { return q_ == FactorSymmetry::Id; }

    /// Projective total order: same q, then a, b, c each compared after
    /// scaling their first nonzero entry to 1. Zero iff equal actions
    /// composed with equal factor symmetries.
    static int compare_projective(const IsotropyElement& g, const IsotropyElement& h);

    std::string to_string() const;

  private:
    FactorSymmetry q_;
    ExactMatrix a_, b_, c_;
    ExactMatrix a_inv_, b_inv_, c_inv_;
};

/// Image of a term, canonicalized.
RankOneTerm apply_to_term(const IsotropyElement& g, const RankOneTerm& t);

/// Termwise image as a multiset.
Decomposition act_on_decomposition(const IsotropyElement& g, const Decomposition& d);

/// Composition g . h (h applied first), in (q, a, b, c) normal form. The
/// factor symmetry is pulled left through the sandwich part using
///   s T(a,b,c) s^-1 = T(c,a,b)
///   r T(a,b,c) r^-1 = T(c^-t, b^-t, a^-t)
/// These identities are certified against the action in the test suite.
IsotropyElement compose(const IsotropyElement& g, const IsotropyElement& h);

IsotropyElement inverse(const IsotropyElement& g);

/// Projective equality: same factor symmetry and factorwise proportional
/// sandwich matrices (equivalently, the same action on every tensor).
bool equal_elements(const IsotropyElement& g, const IsotropyElement& h);

/// Multiplicative order of g as a map, by iterating powers. Throws
/// CapError beyond the cap.
unsigned element_order(const IsotropyElement& g, unsigned cap);

/// How an automorphism permutes a decomposition: alpha[i] is the index of
/// the image of term i among the stored (canonically sorted) terms, and
/// beta is the underlying factor permutation. When equal terms occur,
/// ties in alpha are resolved to the lowest free index and alpha_unique
/// is false.
struct SymmetryReport {
    std::vector<std::size_t> alpha;
    FactorSymmetry beta = FactorSymmetry::Id;
    bool alpha_unique = true;

    /// Cycle type of alpha, e.g. "1^3 3^8".
    std::string alpha_cycle_type() const;
};

/// Report for g when the termwise image of d equals d as a multiset,
/// nothing otherwise.
std::optional<SymmetryReport> is_automorphism(const IsotropyElement& g,
                                              const Decomposition& d);

/// All distinct products (projective equality) reachable from the
/// generators. Throws CapError if more than cap elements appear, which
/// suggests an infinite group.
std::vector<IsotropyElement> group_closure(std::span<const IsotropyElement> generators,
                                           std::size_t cap = 10000);

/// Outcome of checking g -> (alpha(g), beta(g)) for injectivity over a
/// supplied automorphism group.
struct InjectivityResult {
    bool injective = false;
    /// Indices into the input group of a colliding pair, when not injective.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::vector<SymmetryReport> reports; // one per group element, input order
};

/// Every supplied element must be an automorphism of d (throws Error
/// otherwise). Returns the collision-free certificate or a witness pair.
InjectivityResult injectivity_certificate(const Decomposition& d,
                                          std::span<const IsotropyElement> group);

/// True iff g fixes every term of d individually (as tensors).
bool termwise_fix_check(const IsotropyElement& g, const Decomposition& d);

/// Rescales the sandwich matrices of an element g with g^m acting as the
/// identity so that a^m = b^m = c^m = E exactly, without changing the
/// element. Requires the needed m-th roots to exist in the field; throws
/// FieldError otherwise (a larger cyclotomic order may help) and
/// OrderError when g^m is not the identity.
IsotropyElement normalize_to_finite_order(const IsotropyElement& g, unsigned m);

} // namespace mmt
