#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "admkit/exactmath.hpp"
#include "admkit/partitions.hpp"

namespace admkit {

enum class EngineId { Virasoro, NeveuSchwarz, AffineSl2 };

// Grade of a weight space below the highest weight.
// Virasoro / Neveu-Schwarz: first = doubled level, second = 0.
// Affine sl2: (a, b) for the weight drop a*alpha + b*delta.
using Depth = std::pair<long, long>;

// Generators are encoded as integers.
// Virasoro: id = 2m for L_m (m != 0).
// Neveu-Schwarz: id = 2m for L_m, id = 2r (odd) for G_r, r in Z + 1/2.
// Affine sl2: id = 4n + t for x t^n with t in {0 = f, 1 = h, 2 = e};
// h_0 is not a generator (it is the Cartan variable).
using GenId = std::int64_t;
using Word = std::vector<GenId>;

using Assignment = std::map<std::string, Rat>;

struct ShapovalovMatrix {
    Depth depth;
    std::vector<Word> row_basis;  // positive side, sigma-images of the columns
    std::vector<Word> col_basis;  // negative side
    Matrix<MultiPoly> entries;    // HC(row * col), polynomials in the Cartan variables
};

struct GradedDims {
    std::map<Depth, long> table;
    long cutoff = 0;
};

// Outcome of the two-layer Jantzen test: either a certificate that the
// deformation direction is not in the image of the self-extension map (the
// witnessing depth has first layer strictly bigger than the second), or
// consistency of all checked depths.
struct NotInImage {
    Depth witness;
};
struct ConsistentUpTo {
    long depth_bound;
};
using SelfextJantzenResult = std::variant<NotInImage, ConsistentUpTo>;

class AlgebraEngine {
  public:
    static AlgebraEngine virasoro(long max_depth_x2 = 24);
    static AlgebraEngine neveu_schwarz(long max_depth_x2 = 16);
    static AlgebraEngine affine_sl2(long max_total_depth = 8);

    EngineId id() const { return id_; }
    const std::vector<std::string>& cartan_vars() const { return vars_; }

    // Depths iterated by the graded operations, smallest first.
    std::vector<Depth> depths_up_to(long bound) const;

    // Complete PBW basis of the negative side at the given depth,
    // graded-lexicographic order. The positive side is the sigma image.
    std::vector<Word> pbw_basis(Depth nu) const;
    Word sigma(const Word& negative_word) const;

    // Harish-Chandra projection of a product of generators.
    MultiPoly hc(const Word& word) const;

    ShapovalovMatrix shapovalov_matrix(Depth nu) const;
    MultiPoly shapovalov_det(Depth nu) const;

    // Corank of the evaluated Shapovalov matrix at each depth.
    GradedDims maximal_submodule_dims(const Assignment& lambda, long depth_bound) const;

    // Layer dimensions dim M(lambda)^r at the given depth for the deformation
    // lambda + t mu + t^2 mu2, listed for r = 1,2,... until zero.
    std::vector<long> jantzen_layer_dims(const Assignment& lambda, const Assignment& mu,
                                         const Assignment& mu2, Depth nu) const;

    struct SumFormulaReport {
        long layer_sum = 0;
        long det_valuation = 0;
        bool equal = false;
    };
    SumFormulaReport sum_formula_check(const Assignment& lambda, const Assignment& mu,
                                       const Assignment& mu2, Depth nu) const;

    SelfextJantzenResult selfext_jantzen_test(const Assignment& lambda, const Assignment& mu,
                                              const Assignment& mu2, long depth_bound) const;

    // Depth of a generator (contribution of one factor of a negative word).
    Depth gen_depth(GenId g) const;
    bool gen_is_odd(GenId g) const;
    std::string gen_name(GenId g) const;

  private:
    explicit AlgebraEngine(EngineId id, long cutoff);
    void check_depth(Depth nu) const;
    void jacobi_spot_check() const;

    EngineId id_;
    long cutoff_;  // doubled level for vir/ns, max of b and a+b for affine
    std::vector<std::string> vars_;
};

// Convenience for Virasoro/NS depths.
inline Depth depth_x2(long doubled) { return {doubled, 0}; }

}  // namespace admkit
