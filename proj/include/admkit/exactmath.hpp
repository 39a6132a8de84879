#pragma once

// Umbrella for the exact-arithmetic layer plus the t-deformation entry point.

#include <map>
#include <string>

#include "admkit/multipoly.hpp"
#include "admkit/rational.hpp"
#include "admkit/smith.hpp"
#include "admkit/tpoly.hpp"

namespace admkit {

// Replaces each variable x of p by <lambda,x> + t<mu,x> + t^2<mu2,x>.
// The three assignments must cover every variable of p.
inline TPoly deform(const MultiPoly& p, const std::map<std::string, Rat>& lambda,
                    const std::map<std::string, Rat>& mu,
                    const std::map<std::string, Rat>& mu2) {
    std::map<std::string, TPoly> point;
    for (const auto& v : p.vars()) {
        auto l = lambda.find(v);
        auto m = mu.find(v);
        auto m2 = mu2.find(v);
        if (l == lambda.end() || m == mu.end() || m2 == mu2.end())
            throw std::invalid_argument("deformation assignment missing variable: " + v);
        point[v] = TPoly({l->second, m->second, m2->second});
    }
    return p.eval_tpoly(point);
}

}  // namespace admkit
