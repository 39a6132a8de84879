#pragma once

#include <optional>
#include <string>
#include <vector>

#include "admkit/rational.hpp"
#include "admkit/smith.hpp"

namespace admkit {

enum class AlgebraKind { Finite, AffineUntwisted };

// Element of the dual Cartan space, coordinates in the CartanData basis:
// finite kind uses the simple roots; affine kind appends (Lambda0, delta).
struct Weight {
    std::vector<Rat> coords;
    bool operator==(const Weight&) const = default;
};

// Root written over the finite simple roots plus a delta multiple.
// Imaginary roots are n*delta (n >= 1) with multiplicity = finite rank.
struct Root {
    std::vector<int> finite;
    long delta = 0;
    bool imaginary = false;
    int multiplicity = 1;
    bool operator==(const Root&) const = default;
};

struct PredicateVerdict {
    bool value = false;
    std::optional<Root> witness;  // populated on a false verdict where meaningful
};

struct AdmissibilityReport {
    long cutoff = 0;
    PredicateVerdict non_critical;
    PredicateVerdict dominant;
    PredicateVerdict shifted_regular;
    PredicateVerdict rational;
    PredicateVerdict weakly_admissible;
    PredicateVerdict kw_admissible;
};

struct IntegralSubsystem {
    Weight lambda;
    std::vector<Root> positive_members;  // height <= cutoff
    std::vector<Root> simple_system;     // indecomposable positive members
    std::optional<long> periodicity;     // delta-shift q*rdual for affine rational level
    long cutoff = 0;
};

// Weight with a formal transcendental part: base + tau * dir for an
// unspecified irrational tau. Pairings against roots are linear in tau, so
// every integrality test reduces to "tau coefficient zero and rational part
// integral"; no ordering of irrational values is ever needed. Weights with
// genuinely irrational level (e.g. k*Lambda0, k irrational) are expressed
// this way.
struct WeightExt {
    Weight base;
    Weight dir;

    static WeightExt rational(Weight w) {
        Weight zero{std::vector<Rat>(w.coords.size(), Rat(0))};
        return WeightExt{std::move(w), std::move(zero)};
    }
};

// Symmetrizable root datum for the finite simple types and their untwisted
// affinizations. Invariant form normalized so long simple roots have square
// length 2 ((theta,theta) = 2 in the affine case).
class CartanData {
  public:
    static CartanData finite_type(char series, int rank);
    static CartanData affine_untwisted(char series, int rank);
    // {"series":"A","rank":1,"kind":"affine-untwisted"} or an explicit
    // {"gcm":[[2,-1],[-1,2]],"tau":[],"kind":"finite"}.
    static CartanData from_json(const std::string& text);

    AlgebraKind kind() const { return kind_; }
    int finite_rank() const { return static_cast<int>(gcm_.size()); }
    // Realization dimension of the dual Cartan space.
    size_t dim() const { return kind_ == AlgebraKind::Finite ? gcm_.size() : gcm_.size() + 2; }
    // Dimension of h' (span of the simple coroots).
    size_t dim_derived() const {
        return kind_ == AlgebraKind::Finite ? gcm_.size() : gcm_.size() + 1;
    }
    const std::vector<std::vector<int>>& gcm() const { return gcm_; }
    const std::vector<int>& tau() const { return tau_; }
    const Weight& rho() const { return rho_; }
    Rat dual_coxeter() const;  // affine kind
    long rdual() const;        // dual tier number (= lacety for untwisted)

    Rat form(const Weight& x, const Weight& y) const;
    Weight root_weight(const Root& r) const;
    Rat root_norm2(const Root& r) const;
    long height(const Root& r) const;
    bool is_real(const Root& r) const { return !r.imaginary; }
    // Highest root of the finite part.
    Root theta() const;

    // <x, alpha^vee> = 2(x,alpha)/(alpha,alpha); alpha must be non-isotropic.
    Rat coroot_pairing(const Weight& x, const Root& alpha) const;
    // Image of alpha^vee in h* under the form, i.e. 2 alpha/(alpha,alpha).
    Weight coroot_image(const Root& alpha) const;

    Weight dot_reflect(const Weight& lambda, const Root& alpha) const;

    std::vector<Root> positive_roots(long height_cutoff) const;

    Rat level(const Weight& lambda) const;  // <lambda, K>, affine kind
    Weight delta_weight() const;
    Weight lambda0_weight() const;

    bool is_critical(const Weight& lambda) const;

    // Finite part of an affine weight written on the simple-root basis.
    std::vector<Rat> finite_coords(const Weight& lambda) const;

    // Weight from coroot pairings <lambda, alpha_i^vee> (finite kind).
    Weight weight_from_pairings(const std::vector<Rat>& pairings) const;
    // Affine weight from finite coroot pairings, level and delta coefficient.
    Weight affine_weight(const std::vector<Rat>& finite_pairings, const Rat& level,
                         const Rat& d = Rat(0)) const;

    Weight zero_weight() const { return Weight{std::vector<Rat>(dim(), Rat(0))}; }
    Weight add(const Weight& a, const Weight& b) const;
    Weight sub(const Weight& a, const Weight& b) const;
    Weight scale(const Weight& a, const Rat& s) const;

  private:
    void init_form_and_rho();
    std::vector<Root> finite_positive_roots() const;

    AlgebraKind kind_ = AlgebraKind::Finite;
    std::vector<std::vector<int>> gcm_;  // finite part
    std::vector<int> tau_;
    std::vector<Rat> sym_;        // d_i with d_i a_ij symmetric, max d_i = 1
    Matrix<Rat> gram_;            // Gram matrix of the coordinate basis
    Weight rho_;
    mutable std::vector<Root> finite_roots_cache_;
};

IntegralSubsystem integral_subsystem(const CartanData& cd, const WeightExt& lambda, long cutoff);
AdmissibilityReport classify(const CartanData& cd, const WeightExt& lambda, long cutoff);
long selfext_dim(const CartanData& cd, const WeightExt& lambda, long cutoff);
std::pair<long, long> upsilon_bounds(const CartanData& cd, const WeightExt& lambda, long cutoff);

// The set C(lambda): positive real roots alpha (height <= cutoff) whose
// shifted coroot pairing is a positive integer.
std::vector<Root> singular_root_set(const CartanData& cd, const WeightExt& lambda, long cutoff);
// Sound partial test for lambda-minimality; members certified minimal.
std::vector<Root> lambda_minimal_set(const CartanData& cd, const WeightExt& lambda, long cutoff);

inline IntegralSubsystem integral_subsystem(const CartanData& cd, const Weight& w, long cutoff) {
    return integral_subsystem(cd, WeightExt::rational(w), cutoff);
}
inline AdmissibilityReport classify(const CartanData& cd, const Weight& w, long cutoff) {
    return classify(cd, WeightExt::rational(w), cutoff);
}
inline long selfext_dim(const CartanData& cd, const Weight& w, long cutoff) {
    return selfext_dim(cd, WeightExt::rational(w), cutoff);
}
inline std::pair<long, long> upsilon_bounds(const CartanData& cd, const Weight& w, long cutoff) {
    return upsilon_bounds(cd, WeightExt::rational(w), cutoff);
}

}  // namespace admkit
