#include "admkit/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace admkit {

namespace {

using Json = nlohmann::json;

std::vector<Rat> solve_linear(Matrix<Rat> a, std::vector<Rat> b) {
    const size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular linear system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<std::vector<int>> gcm_table(char series, int rank) {
    auto chain = [&](int n) {
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    switch (series) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
            return chain(rank);
        case 'B': {
            if (rank < 2) throw std::invalid_argument("B_n needs n >= 2");
            auto a = chain(rank);
            a[rank - 1][rank - 2] = -2;  // last root short
            return a;
        }
        case 'C': {
            if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
            auto a = chain(rank);
            a[rank - 2][rank - 1] = -2;  // last root long
            return a;
        }
        case 'D': {
            if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
            std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) a[i][i] = 2;
            for (int i = 0; i + 2 < rank; ++i) a[i][i + 1] = a[i + 1][i] = -1;
            a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1;
            return a;
        }
        case 'E': {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
            std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) a[i][i] = 2;
            auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for (int i = 4; i < rank; ++i) link(i, i + 1);
            return a;
        }
        case 'F': {
            if (rank != 4) throw std::invalid_argument("F needs rank 4");
            auto a = chain(4);
            a[2][1] = -2;  // alpha_3, alpha_4 short
            a[1][2] = -1;
            return a;
        }
        case 'G': {
            if (rank != 2) throw std::invalid_argument("G needs rank 2");
            return {{2, -1}, {-3, 2}};
        }
        default:
            throw std::invalid_argument(std::string("unknown series: ") + series);
    }
}

}  // namespace

void CartanData::init_form_and_rho() {
    const size_t n = gcm_.size();
    // Symmetrizer propagated over the Dynkin graph, scaled so max d_i = 1;
    // long simple roots then have square length 2.
    sym_.assign(n, Rat(0));
    sym_[0] = Rat(1);
    std::vector<size_t> stack{0};
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < n; ++j) {
            if (i == j || gcm_[i][j] == 0 || sym_[j] != 0) continue;
            sym_[j] = sym_[i] * Rat(gcm_[i][j]) / Rat(gcm_[j][i]);
            stack.push_back(j);
        }
    }
    Rat dmax(0);
    for (const auto& d : sym_) {
        if (d == 0) throw std::invalid_argument("Dynkin diagram must be connected");
        if (d > dmax) dmax = d;
    }
    for (auto& d : sym_) d /= dmax;

    const size_t dimension = dim();
    gram_.assign(dimension, std::vector<Rat>(dimension, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram_[i][j] = sym_[i] * Rat(gcm_[i][j]);
    if (kind_ == AlgebraKind::AffineUntwisted)
        gram_[n][n + 1] = gram_[n + 1][n] = Rat(1);  // (Lambda0, delta) = 1

    // Finite Weyl vector: <rho, alpha_i^vee> = 1 for every finite i.
    Matrix<Rat> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(gcm_[i][j]);
    std::vector<Rat> rho_fin = solve_linear(a, std::vector<Rat>(n, Rat(1)));

    rho_ = zero_weight();
    for (size_t i = 0; i < n; ++i) rho_.coords[i] = rho_fin[i];
    if (kind_ == AlgebraKind::AffineUntwisted) {
        // rho_hat = rho_dot + hdual * Lambda0, hdual = 1 + (rho_dot, theta).
        Weight rho_dot = rho_;
        rho_.coords[n] = Rat(1) + form(rho_dot, root_weight(theta()));
    }
}

CartanData CartanData::finite_type(char series, int rank) {
    CartanData cd;
    cd.kind_ = AlgebraKind::Finite;
    cd.gcm_ = gcm_table(series, rank);
    cd.init_form_and_rho();
    return cd;
}

CartanData CartanData::affine_untwisted(char series, int rank) {
    CartanData cd;
    cd.kind_ = AlgebraKind::AffineUntwisted;
    cd.gcm_ = gcm_table(series, rank);
    cd.init_form_and_rho();
    return cd;
}

CartanData CartanData::from_json(const std::string& text) {
    Json j = Json::parse(text);
    AlgebraKind kind = AlgebraKind::Finite;
    if (j.contains("kind")) {
        std::string k = j["kind"];
        if (k == "affine-untwisted")
            kind = AlgebraKind::AffineUntwisted;
        else if (k != "finite")
            throw std::invalid_argument("unsupported kind: " + k);
    }
    CartanData cd;
    cd.kind_ = kind;
    if (j.contains("series")) {
        std::string s = j["series"];
        cd.gcm_ = gcm_table(s.at(0), j["rank"].get<int>());
    } else {
        cd.gcm_ = j["gcm"].get<std::vector<std::vector<int>>>();
        for (const auto& row : cd.gcm_)
            if (row.size() != cd.gcm_.size()) throw std::invalid_argument("gcm must be square");
        for (size_t i = 0; i < cd.gcm_.size(); ++i)
            if (cd.gcm_[i][i] != 2)
                throw std::invalid_argument("finite-part gcm needs 2 on the diagonal");
    }
    if (j.contains("tau")) cd.tau_ = j["tau"].get<std::vector<int>>();
    cd.init_form_and_rho();
    return cd;
}

Rat CartanData::form(const Weight& x, const Weight& y) const {
    if (x.coords.size() != dim() || y.coords.size() != dim())
        throw std::invalid_argument("weight dimension mismatch");
    Rat total(0);
    for (size_t i = 0; i < dim(); ++i) {
        if (x.coords[i] == 0) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (gram_[i][j] == 0 || y.coords[j] == 0) continue;
            total += x.coords[i] * gram_[i][j] * y.coords[j];
        }
    }
    return total;
}

Weight CartanData::root_weight(const Root& r) const {
    Weight w = zero_weight();
    for (size_t i = 0; i < gcm_.size(); ++i) w.coords[i] = Rat(r.finite[i]);
    if (r.delta != 0) {
        if (kind_ != AlgebraKind::AffineUntwisted)
            throw std::invalid_argument("delta component in a finite root");
        w.coords[gcm_.size() + 1] = Rat(r.delta);
    }
    return w;
}

Rat CartanData::root_norm2(const Root& r) const {
    Weight w = root_weight(r);
    return form(w, w);
}

Root CartanData::theta() const { return finite_positive_roots().back(); }

long CartanData::height(const Root& r) const {
    long h = 0;
    for (int c : r.finite) h += c;
    if (r.delta != 0) {
        long htd = 1;
        for (int c : theta().finite) htd += c;
        h += r.delta * htd;
    }
    return h;
}

Rat CartanData::coroot_pairing(const Weight& x, const Root& alpha) const {
    Rat n2 = root_norm2(alpha);
    if (n2 == 0) throw std::domain_error("coroot pairing with an isotropic root");
    return Rat(2) * form(x, root_weight(alpha)) / n2;
}

Weight CartanData::coroot_image(const Root& alpha) const {
    Rat n2 = root_norm2(alpha);
    if (n2 == 0) throw std::domain_error("coroot of an isotropic root");
    return scale(root_weight(alpha), Rat(2) / n2);
}

Weight CartanData::dot_reflect(const Weight& lambda, const Root& alpha) const {
    if (alpha.imaginary) throw std::domain_error("reflection in an imaginary root");
    Rat m = coroot_pairing(add(lambda, rho_), alpha);
    return sub(lambda, scale(root_weight(alpha), m));
}

std::vector<Root> CartanData::finite_positive_roots() const {
    if (!finite_roots_cache_.empty()) return finite_roots_cache_;
    const size_t n = gcm_.size();
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> frontier;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        known.insert(e);
        frontier.push_back(e);
    }
    // Height-by-height closure via root strings: beta + alpha_i is a root
    // iff p - <beta, alpha_i^vee> > 0, p the length of the down-string.
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (size_t i = 0; i < n; ++i) {
                long pairing = 0;
                for (size_t j = 0; j < n; ++j) pairing += gcm_[i][j] * beta[j];
                long p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = true, nonzero = false;
                    for (int c : down) {
                        if (c < 0) nonneg = false;
                        if (c != 0) nonzero = true;
                    }
                    if (!nonneg || !nonzero || !known.count(down)) break;
                    ++p;
                }
                if (p - pairing <= 0) continue;
                std::vector<int> up = beta;
                up[i] += 1;
                if (known.insert(up).second) next.push_back(up);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Root> out;
    out.reserve(known.size());
    for (const auto& v : known) out.push_back(Root{v, 0, false, 1});
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        long ha = 0, hb = 0;
        for (int c : a.finite) ha += c;
        for (int c : b.finite) hb += c;
        if (ha != hb) return ha < hb;
        return a.finite < b.finite;
    });
    finite_roots_cache_ = out;
    return out;
}

std::vector<Root> CartanData::positive_roots(long height_cutoff) const {
    std::vector<Root> out;
    auto fin = finite_positive_roots();
    auto ht_fin = [](const Root& r) {
        long h = 0;
        for (int c : r.finite) h += c;
        return h;
    };
    for (const auto& r : fin)
        if (ht_fin(r) <= height_cutoff) out.push_back(r);
    if (kind_ == AlgebraKind::AffineUntwisted) {
        long ht_theta = ht_fin(fin.back());
        long htd = 1 + ht_theta;
        for (long n = 1; n * htd - ht_theta <= height_cutoff; ++n) {
            for (const auto& r : fin) {
                if (n * htd + ht_fin(r) <= height_cutoff)
                    out.push_back(Root{r.finite, n, false, 1});
                if (n * htd - ht_fin(r) <= height_cutoff) {
                    Root neg{r.finite, n, false, 1};
                    for (auto& c : neg.finite) c = -c;
                    out.push_back(neg);
                }
            }
            if (n * htd <= height_cutoff)
                out.push_back(Root{std::vector<int>(gcm_.size(), 0), n, true,
                                   static_cast<int>(gcm_.size())});
        }
    }
    std::sort(out.begin(), out.end(), [this](const Root& a, const Root& b) {
        long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        if (a.delta != b.delta) return a.delta < b.delta;
        return a.finite < b.finite;
    });
    return out;
}

Rat CartanData::level(const Weight& lambda) const {
    if (kind_ != AlgebraKind::AffineUntwisted)
        throw std::domain_error("level defined only for affine kind");
    return form(lambda, delta_weight());
}

Weight CartanData::delta_weight() const {
    if (kind_ != AlgebraKind::AffineUntwisted)
        throw std::domain_error("delta defined only for affine kind");
    Weight w = zero_weight();
    w.coords[gcm_.size() + 1] = Rat(1);
    return w;
}

Weight CartanData::lambda0_weight() const {
    if (kind_ != AlgebraKind::AffineUntwisted)
        throw std::domain_error("Lambda0 defined only for affine kind");
    Weight w = zero_weight();
    w.coords[gcm_.size()] = Rat(1);
    return w;
}

Rat CartanData::dual_coxeter() const {
    if (kind_ != AlgebraKind::AffineUntwisted)
        throw std::domain_error("dual Coxeter number defined for affine kind");
    return rho_.coords[gcm_.size()];
}

long CartanData::rdual() const {
    Rat shortest(2);
    for (const auto& d : sym_) {
        Rat n2 = Rat(2) * d;
        if (n2 < shortest) shortest = n2;
    }
    Rat l = Rat(2) / shortest;
    if (!is_integer(l)) throw std::domain_error("non-integral lacety");
    return l.get_num().get_si();
}

bool CartanData::is_critical(const Weight& lambda) const {
    if (kind_ != AlgebraKind::AffineUntwisted) return false;
    return level(lambda) == -dual_coxeter();
}

std::vector<Rat> CartanData::finite_coords(const Weight& lambda) const {
    return std::vector<Rat>(lambda.coords.begin(), lambda.coords.begin() + gcm_.size());
}

Weight CartanData::weight_from_pairings(const std::vector<Rat>& pairings) const {
    const size_t n = gcm_.size();
    if (pairings.size() != n) throw std::invalid_argument("pairing count mismatch");
    Matrix<Rat> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(gcm_[i][j]);
    auto x = solve_linear(a, pairings);
    Weight w = zero_weight();
    for (size_t i = 0; i < n; ++i) w.coords[i] = x[i];
    return w;
}

Weight CartanData::affine_weight(const std::vector<Rat>& finite_pairings, const Rat& lvl,
                                 const Rat& d) const {
    if (kind_ != AlgebraKind::AffineUntwisted)
        throw std::domain_error("affine_weight on a finite datum");
    Weight w = weight_from_pairings(finite_pairings);
    w.coords[gcm_.size()] = lvl;
    w.coords[gcm_.size() + 1] = d;
    return w;
}

Weight CartanData::add(const Weight& a, const Weight& b) const {
    Weight w = a;
    for (size_t i = 0; i < dim(); ++i) w.coords[i] += b.coords[i];
    return w;
}

Weight CartanData::sub(const Weight& a, const Weight& b) const {
    Weight w = a;
    for (size_t i = 0; i < dim(); ++i) w.coords[i] -= b.coords[i];
    return w;
}

Weight CartanData::scale(const Weight& a, const Rat& s) const {
    Weight w = a;
    for (auto& c : w.coords) c *= s;
    return w;
}

// ---------------------------------------------------------------------------
// Weight classification
// ---------------------------------------------------------------------------

namespace {

// Value linear in the formal transcendental: base + tau * dir.
struct LinVal {
    Rat base;
    Rat dir;
    bool is_int() const { return dir == 0 && is_integer(base); }
    bool is_zero() const { return base == 0 && dir == 0; }
};

LinVal shifted_pairing(const CartanData& cd, const WeightExt& lambda, const Root& alpha) {
    Weight shifted = cd.add(lambda.base, cd.rho());
    return LinVal{cd.coroot_pairing(shifted, alpha), cd.coroot_pairing(lambda.dir, alpha)};
}

bool ext_is_critical(const CartanData& cd, const WeightExt& lambda) {
    if (cd.kind() != AlgebraKind::AffineUntwisted) return false;
    if (cd.level(lambda.dir) != 0) return false;
    return cd.is_critical(lambda.base);
}

// Coordinates over the simple roots of the algebra itself; the affine kind
// prepends the alpha_0 coefficient (alpha + n delta = n alpha_0 + alpha + n theta).
std::vector<long> simple_coords(const CartanData& cd, const Root& r,
                                const std::vector<int>& theta) {
    if (cd.kind() == AlgebraKind::Finite)
        return std::vector<long>(r.finite.begin(), r.finite.end());
    std::vector<long> v(cd.gcm().size() + 1, 0);
    v[0] = r.delta;
    for (size_t i = 0; i < cd.gcm().size(); ++i) v[i + 1] = r.finite[i] + r.delta * theta[i];
    return v;
}

bool cone_member(std::vector<long> target, const std::vector<std::vector<long>>& gens,
                 std::set<std::vector<long>>& failed) {
    bool zero = true;
    for (long c : target) {
        if (c < 0) return false;
        if (c != 0) zero = false;
    }
    if (zero) return true;
    if (failed.count(target)) return false;
    for (const auto& g : gens) {
        std::vector<long> next = target;
        bool ok = true;
        for (size_t i = 0; i < g.size(); ++i) {
            next[i] -= g[i];
            if (next[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok && cone_member(std::move(next), gens, failed)) return true;
    }
    failed.insert(std::move(target));
    return false;
}

long span_rank(const std::vector<Weight>& weights) {
    if (weights.empty()) return 0;
    Matrix<Rat> m;
    m.reserve(weights.size());
    for (const auto& w : weights) m.push_back(w.coords);
    return rank(std::move(m));
}

std::vector<Weight> coroot_span_generators(const CartanData& cd,
                                           const IntegralSubsystem& sub) {
    std::vector<Weight> images;
    for (const auto& m : sub.positive_members) images.push_back(cd.coroot_image(m));
    // The periodic shift by q*rdual*K contributes the delta direction as soon
    // as the subsystem is nonempty.
    if (cd.kind() == AlgebraKind::AffineUntwisted && sub.periodicity.has_value() &&
        !sub.positive_members.empty())
        images.push_back(cd.delta_weight());
    return images;
}

}  // namespace

IntegralSubsystem integral_subsystem(const CartanData& cd, const WeightExt& lambda,
                                     long cutoff) {
    if (ext_is_critical(cd, lambda))
        throw std::domain_error("integral subsystem undefined at the critical level");
    IntegralSubsystem out;
    out.lambda = lambda.base;
    out.cutoff = cutoff;

    for (const auto& alpha : cd.positive_roots(cutoff)) {
        if (alpha.imaginary) continue;
        if (shifted_pairing(cd, lambda, alpha).is_int()) out.positive_members.push_back(alpha);
    }

    std::vector<int> theta_coeffs;
    if (cd.kind() == AlgebraKind::AffineUntwisted) theta_coeffs = cd.theta().finite;
    std::vector<std::vector<long>> member_coords;
    member_coords.reserve(out.positive_members.size());
    for (const auto& m : out.positive_members)
        member_coords.push_back(simple_coords(cd, m, theta_coeffs));
    for (size_t i = 0; i < out.positive_members.size(); ++i) {
        std::vector<std::vector<long>> others;
        for (size_t j = 0; j < member_coords.size(); ++j)
            if (j != i) others.push_back(member_coords[j]);
        std::set<std::vector<long>> failed;
        if (!cone_member(member_coords[i], others, failed))
            out.simple_system.push_back(out.positive_members[i]);
    }

    if (cd.kind() == AlgebraKind::AffineUntwisted && cd.level(lambda.dir) == 0) {
        Rat shifted_level = cd.level(lambda.base) + cd.dual_coxeter();
        out.periodicity = shifted_level.get_den().get_si() * cd.rdual();
    }
    return out;
}

AdmissibilityReport classify(const CartanData& cd, const WeightExt& lambda, long cutoff) {
    AdmissibilityReport rep;
    rep.cutoff = cutoff;

    rep.non_critical.value = !ext_is_critical(cd, lambda);
    if (!rep.non_critical.value)
        rep.non_critical.witness =
            Root{std::vector<int>(cd.gcm().size(), 0), 1, true, cd.finite_rank()};

    rep.dominant.value = true;
    for (const auto& alpha : cd.positive_roots(cutoff)) {
        if (alpha.imaginary) continue;
        LinVal v = shifted_pairing(cd, lambda, alpha);
        if (v.is_int() && v.base <= 0) {
            rep.dominant.value = false;
            rep.dominant.witness = alpha;
            break;
        }
    }

    IntegralSubsystem sub;
    if (rep.non_critical.value) sub = integral_subsystem(cd, lambda, cutoff);

    rep.shifted_regular.value = true;
    for (const auto& alpha : sub.positive_members) {
        // A vanishing pairing is an integer, so scanning members is complete.
        if (shifted_pairing(cd, lambda, alpha).is_zero()) {
            rep.shifted_regular.value = false;
            rep.shifted_regular.witness = alpha;
            break;
        }
    }

    rep.weakly_admissible.value = true;
    for (const auto& beta : sub.simple_system) {
        LinVal v = shifted_pairing(cd, lambda, beta);
        if (!(v.is_int() && v.base >= 0)) {
            rep.weakly_admissible.value = false;
            rep.weakly_admissible.witness = beta;
            break;
        }
    }

    rep.rational.value = span_rank(coroot_span_generators(cd, sub)) ==
                         static_cast<long>(cd.dim_derived());

    rep.kw_admissible.value =
        rep.non_critical.value && rep.dominant.value && rep.rational.value;
    if (!rep.kw_admissible.value) {
        if (!rep.non_critical.value)
            rep.kw_admissible.witness = rep.non_critical.witness;
        else if (!rep.dominant.value)
            rep.kw_admissible.witness = rep.dominant.witness;
    }
    return rep;
}

long selfext_dim(const CartanData& cd, const WeightExt& lambda, long cutoff) {
    AdmissibilityReport rep = classify(cd, lambda, cutoff);
    if (!rep.non_critical.value) throw std::domain_error("selfext_dim: weight is critical");
    if (!rep.shifted_regular.value)
        throw std::domain_error("selfext_dim: weight is not shifted-regular");
    if (!rep.weakly_admissible.value)
        throw std::domain_error("selfext_dim: weight is not weakly admissible");

    IntegralSubsystem sub = integral_subsystem(cd, lambda, cutoff);
    return static_cast<long>(cd.dim()) - span_rank(coroot_span_generators(cd, sub));
}

std::vector<Root> singular_root_set(const CartanData& cd, const WeightExt& lambda,
                                    long cutoff) {
    std::vector<Root> out;
    for (const auto& alpha : cd.positive_roots(cutoff)) {
        if (alpha.imaginary) continue;
        LinVal v = shifted_pairing(cd, lambda, alpha);
        if (v.is_int() && v.base > 0) out.push_back(alpha);
    }
    return out;
}

std::vector<Root> lambda_minimal_set(const CartanData& cd, const WeightExt& lambda,
                                     long cutoff) {
    std::vector<Root> out;
    std::vector<int> theta_coeffs;
    if (cd.kind() == AlgebraKind::AffineUntwisted) theta_coeffs = cd.theta().finite;

    // (a) Simple members of the integral subsystem with positive pairing.
    if (!ext_is_critical(cd, lambda)) {
        IntegralSubsystem sub = integral_subsystem(cd, lambda, cutoff);
        for (const auto& alpha : sub.simple_system) {
            LinVal v = shifted_pairing(cd, lambda, alpha);
            if (v.is_int() && v.base > 0) out.push_back(alpha);
        }
    }

    // (b) Cone-minimal elements of {m_beta * beta} with a unique decomposition.
    // Anything below m_alpha * alpha has height at most m_alpha * ht(alpha),
    // so scanning up to that bound is sound regardless of the display cutoff.
    auto candidates = singular_root_set(cd, lambda, cutoff);
    for (const auto& alpha : candidates) {
        if (std::find(out.begin(), out.end(), alpha) != out.end()) continue;
        Rat m_alpha = shifted_pairing(cd, lambda, alpha).base;
        long bound = m_alpha.get_num().get_si() * cd.height(alpha);
        auto competitors = singular_root_set(cd, lambda, bound);
        auto va = simple_coords(cd, alpha, theta_coeffs);
        for (auto& c : va) c *= m_alpha.get_num().get_si();
        bool minimal = true, unique_dec = true;
        for (const auto& beta : competitors) {
            if (beta == alpha) continue;
            Rat m_beta = shifted_pairing(cd, lambda, beta).base;
            auto vb = simple_coords(cd, beta, theta_coeffs);
            for (auto& c : vb) c *= m_beta.get_num().get_si();
            if (vb == va) {
                unique_dec = false;
                break;
            }
            bool below = true;
            for (size_t i = 0; i < va.size(); ++i)
                if (vb[i] > va[i]) below = false;
            if (below) {
                minimal = false;
                break;
            }
        }
        if (minimal && unique_dec) out.push_back(alpha);
    }
    return out;
}

std::pair<long, long> upsilon_bounds(const CartanData& cd, const WeightExt& lambda,
                                     long cutoff) {
    if (ext_is_critical(cd, lambda))
        throw std::domain_error("upsilon_bounds: weight is critical");
    std::vector<Weight> cset;
    for (const auto& alpha : singular_root_set(cd, lambda, cutoff))
        cset.push_back(cd.root_weight(alpha));
    std::vector<Weight> mset;
    for (const auto& alpha : lambda_minimal_set(cd, lambda, cutoff))
        mset.push_back(cd.root_weight(alpha));
    long lower = static_cast<long>(cd.dim()) - span_rank(cset);
    long upper = static_cast<long>(cd.dim()) - span_rank(mset);
    return {lower, upper};
}

}  // namespace admkit
