#pragma once

#include <map>
#include <string>
#include <vector>

#include "admkit/rational.hpp"
#include "admkit/tpoly.hpp"

namespace admkit {

// Graded lexicographic order, leading monomial first.
struct GrlexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Exact multivariate polynomial over Q in a fixed ordered list of named
// indeterminates. Zero coefficients are never stored. Binary operations
// require both operands to carry the same variable list.
class MultiPoly {
  public:
    using Terms = std::map<std::vector<int>, Rat, GrlexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Rat c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    long total_degree() const;
    int degree_in(const std::string& var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rat& s) const;
    MultiPoly& operator+=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    void add_term(const std::vector<int>& exps, const Rat& c);

    // Exact value at a point covering every variable.
    Rat eval(const std::map<std::string, Rat>& assignment) const;

    // Substitutes each variable by a TPoly (used for the t-deformation
    // x -> <lambda,x> + t<mu,x> + t^2<mu',x>).
    TPoly eval_tpoly(const std::map<std::string, TPoly>& assignment) const;

    // Shift one variable: var -> var + c. Used when commuting a weight
    // vector across the Cartan part of a normally ordered word.
    MultiPoly shift_var(size_t var_index, const Rat& c) const;

    // Coefficient polynomials with respect to one variable, index = power.
    std::vector<MultiPoly> coefficients_in(const std::string& var) const;

    // Exact division, throws std::domain_error if not divisible.
    MultiPoly divide_exact(const MultiPoly& divisor) const;
    bool divisible_by(const MultiPoly& divisor) const;

    // True when *this == s * o for some nonzero rational s (reported in s).
    bool equals_up_to_scalar(const MultiPoly& o, Rat* scalar = nullptr) const;

    std::string to_string() const;

  private:
    size_t var_index(const std::string& name) const;
    void check_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

inline Rat poly_eval(const MultiPoly& p, const std::map<std::string, Rat>& assignment) {
    return p.eval(assignment);
}

}  // namespace admkit
