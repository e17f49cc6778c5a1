// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "spaceform/error.hpp"
#include "spaceform/number_theory.hpp"

namespace spaceform {

using nt::u64;

RepParams make_rep(const TypeIParams& g, std::int64_t k, std::int64_t l) {
    RepParams rep{nt::reduce(k, g.m), nt::reduce(l, g.n)};
    if (std::gcd(rep.k, g.m) != 1 || std::gcd(rep.l, g.n) != 1) {
        throw Error(ErrorCode::InvalidRepresentation,
                    "rho_{" + std::to_string(k) + "," + std::to_string(l) + "} needs gcd(k,m) = gcd(l,n) = 1");
    }
    return rep;
}

SumRep make_sum_rep(const TypeIParams& g, std::span<const std::pair<std::int64_t, std::int64_t>> reps) {
    if (reps.empty()) throw Error(ErrorCode::InvalidRepresentation, "empty sum representation");
    SumRep out{g, {}};
    for (auto [k, l] : reps) out.summands.push_back(make_rep(g, k, l));
    return out;
}

EigenExponents EigenExponents::rescaled(u64 new_modulus) const {
    if (new_modulus % modulus != 0) throw Error(ErrorCode::InvalidArgument, "modulus does not divide target");
    EigenExponents out{new_modulus, exponents};
    for (auto& e : out.exponents) e *= new_modulus / modulus;
    return out;
}

EigenExponents EigenExponents::reduced() const {
    u64 g = modulus;
    for (u64 e : exponents) g = std::gcd(g, e);
    EigenExponents out{modulus / g, exponents};
    for (auto& e : out.exponents) e /= g;
    return out;
}

EigenExponents EigenExponents::negated() const {
    EigenExponents out{modulus, exponents};
    for (auto& e : out.exponents) e = (modulus - e) % modulus;
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

bool same_eigenvalues(const EigenExponents& x, const EigenExponents& y) {
    if (x.exponents.size() != y.exponents.size()) return false;
    if (x.modulus == y.modulus) return x.exponents == y.exponents;
    const u64 common = nt::lcm(x.modulus, y.modulus);
    return x.rescaled(common).exponents == y.rescaled(common).exponents;
}

namespace {

// Per-group tables so that factors of an element cost a handful of products.
class FactorTable {
public:
    explicit FactorTable(const TypeIParams& g)
        : g_(g), modulus_(exponent_modulus(g)), r_powers_(g.d), per_b_(g.n) {
        r_powers_[0] = 1 % g.m;
        for (u64 j = 1; j < g.d; ++j) r_powers_[j] = nt::mulmod(r_powers_[j - 1], g.r, g.m);
        for (u64 b = 0; b < g.n; ++b) {
            const u64 c = std::gcd(b, g.d);  // gcd(0, d) = d
            const u64 rc = nt::powmod(g.r, c, g.m);
            // alpha(b) = sum_{h=1}^{d/c} r^(c h)
            const u64 alpha = nt::mulmod(rc, nt::geometric_sum(rc, g.d / c, g.m), g.m);
            per_b_[b] = {c, g.d / c, alpha};
        }
    }

    u64 modulus() const { return modulus_; }

    void append(const RepParams& rep, const GroupElement& x, std::vector<CycleFactor>& out) const {
        const auto& info = per_b_[x.b];
        const u64 quotient = g_.n / g_.d;
        const u64 base = nt::mulmod(nt::mulmod(rep.k, x.a, g_.m), info.alpha, g_.m);
        const u64 corner = nt::mulmod(rep.l, (x.b / info.c) % quotient, quotient);
        // xi_m = zeta^(L/m) and xi_{n/d} = zeta^(L d / n).
        const u64 scale_m = g_.n * g_.d;
        const u64 scale_q = g_.m * g_.d * g_.d;
        const u64 corner_part = nt::mulmod(corner, scale_q, modulus_);
        for (u64 j = 0; j < info.c; ++j) {
            const u64 e1 = nt::mulmod(base, r_powers_[j], g_.m);
            const u64 w = nt::addmod(nt::mulmod(e1, scale_m, modulus_), corner_part, modulus_);
            out.push_back({info.length, w});
            out.push_back({info.length, (modulus_ - w) % modulus_});
        }
    }

private:
    struct PerB {
        u64 c;
        u64 length;
        u64 alpha;
    };
    TypeIParams g_;
    u64 modulus_;
    std::vector<u64> r_powers_;
    std::vector<PerB> per_b_;
};

void expand(const std::vector<CycleFactor>& factors, u64 modulus, std::vector<u64>& out) {
    // Roots of z^len = zeta^w: zeta^(w/len + t L/len), t = 0..len-1 (len | w by construction).
    for (const auto& f : factors) {
        const u64 step = modulus / f.length;
        const u64 first = f.exponent / f.length;
        for (u64 t = 0; t < f.length; ++t) out.push_back(first + t * step);
    }
}

void check_element(const TypeIParams& g, const GroupElement& x) {
    if (x.group != g) throw Error(ErrorCode::GroupMismatch, "element does not belong to " + to_string(g));
}

}  // namespace

std::vector<CycleFactor> cycle_factors(const RepParams& rep, const GroupElement& x) {
    FactorTable table(x.group);
    std::vector<CycleFactor> out;
    table.append(rep, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

EigenExponents char_poly_exponents(const RepParams& rep, const GroupElement& x) {
    EigenExponents out{exponent_modulus(x.group), {}};
    expand(cycle_factors(rep, x), out.modulus, out.exponents);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

EigenExponents eigen_exponents(const SumRep& rep, const GroupElement& x) {
    check_element(rep.group, x);
    FactorTable table(rep.group);
    std::vector<CycleFactor> factors;
    for (const auto& s : rep.summands) table.append(s, x, factors);
    EigenExponents out{table.modulus(), {}};
    expand(factors, out.modulus, out.exponents);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

namespace {

FieldPolynomial multiply_polys(const Fp64& f, const FieldPolynomial& x, const FieldPolynomial& y) {
    FieldPolynomial out(x.size() + y.size() - 1, f.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
    }
    return out;
}

FieldPolynomial to_canonical(const Fp64& f, FieldPolynomial poly) {
    for (auto& c : poly) c = f.to_uint(c);
    return poly;
}

using Matrix = std::vector<std::vector<u64>>;

Matrix mat_mul(const Fp64& f, const Matrix& x, const Matrix& y) {
    const std::size_t n = x.size();
    Matrix out(n, std::vector<u64>(n, f.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == f.zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] = f.add(out[i][j], f.mul(x[i][k], y[k][j]));
        }
    }
    return out;
}

Matrix mat_pow(const Fp64& f, Matrix base, u64 e) {
    const std::size_t n = base.size();
    Matrix result(n, std::vector<u64>(n, f.zero()));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = f.one();
    while (e > 0) {
        if (e & 1) result = mat_mul(f, result, base);
        base = mat_mul(f, base, base);
        e >>= 1;
    }
    return result;
}

// Hessenberg reduction followed by the standard recurrence; entries in Montgomery form.
FieldPolynomial charpoly_montgomery(const Fp64& f, Matrix h) {
    const std::size_t n = h.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t pivot = m;
        while (pivot < n && h[pivot][m - 1] == f.zero()) ++pivot;
        if (pivot == n) continue;
        if (pivot != m) {
            std::swap(h[pivot], h[m]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][m]);
        }
        const u64 t_inv = f.inv(h[m][m - 1]);
        for (std::size_t i = m + 1; i < n; ++i) {
            const u64 u = f.mul(h[i][m - 1], t_inv);
            if (u == f.zero()) continue;
            for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
            for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
        }
    }
    std::vector<FieldPolynomial> p(n + 1);
    p[0] = {f.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        // (z - h[m-1][m-1]) p[m-1]
        FieldPolynomial cur(m + 1, f.zero());
        for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
            cur[i + 1] = f.add(cur[i + 1], p[m - 1][i]);
            cur[i] = f.sub(cur[i], f.mul(h[m - 1][m - 1], p[m - 1][i]));
        }
        u64 t = f.one();
        for (std::size_t i = 1; i < m; ++i) {
            t = f.mul(t, h[m - i][m - i - 1]);
            const u64 coeff = f.mul(t, h[m - i - 1][m - 1]);
            for (std::size_t j = 0; j < p[m - i - 1].size(); ++j) {
                cur[j] = f.sub(cur[j], f.mul(coeff, p[m - i - 1][j]));
            }
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

}  // namespace

FieldPolynomial characteristic_polynomial(Matrix matrix, u64 p) {
    const Fp64 f(p);
    for (auto& row : matrix) {
        if (row.size() != matrix.size()) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
        for (auto& v : row) v = f.from_uint(v);
    }
    return to_canonical(f, charpoly_montgomery(f, std::move(matrix)));
}

FieldPolynomial char_poly_from_exponents(const EigenExponents& eig, u64 p) {
    const Fp64 f(p);
    const u64 zeta = f.from_uint(primitive_root_of_unity(p, eig.modulus));
    FieldPolynomial poly{f.one()};
    for (u64 e : eig.exponents) poly = multiply_polys(f, poly, {f.neg(f.pow(zeta, e)), f.one()});
    return to_canonical(f, poly);
}

FieldPolynomial char_poly_matrix_oracle(const RepParams& rep, const GroupElement& x, u64 p) {
    const TypeIParams& g = x.group;
    const u64 modulus = exponent_modulus(g);
    const Fp64 f(p);
    const u64 zeta = f.from_uint(primitive_root_of_unity(p, modulus));

    auto build = [&](u64 root) {
        const std::size_t d = g.d;
        Matrix a_mat(d, std::vector<u64>(d, f.zero()));
        Matrix b_mat(d, std::vector<u64>(d, f.zero()));
        const u64 xi_m = f.pow(root, modulus / g.m);
        const u64 xi_q = f.pow(root, modulus / (g.n / g.d));
        u64 kr = rep.k % g.m;
        for (std::size_t j = 0; j < d; ++j) {
            a_mat[j][j] = f.pow(xi_m, kr);
            kr = nt::mulmod(kr, g.r, g.m);
        }
        // B e_{i+1} = e_i, B e_0 = xi_{n/d}^l e_{d-1}.
        for (std::size_t i = 0; i + 1 < d; ++i) b_mat[i][i + 1] = f.one();
        b_mat[d - 1][0] = f.pow(xi_q, rep.l);
        return mat_mul(f, mat_pow(f, a_mat, x.a), mat_pow(f, b_mat, x.b));
    };

    const auto direct = charpoly_montgomery(f, build(zeta));
    const auto conjugate = charpoly_montgomery(f, build(f.inv(zeta)));
    return to_canonical(f, multiply_polys(f, direct, conjugate));
}

ElementMap natural_bijection(const TypeIParams& from, const TypeIParams& to) {
    if (from.order() != to.order()) throw Error(ErrorCode::InvalidArgument, "groups of different order");
    if (from.m == to.m && from.n == to.n) {
        return [to](const GroupElement& x) { return GroupElement{to, x.a, x.b}; };
    }
    return [from, to](const GroupElement& x) { return element_at(to, x.a * from.n + x.b); };
}

bool almost_conjugate(const SumRep& rep1, const SumRep& rep2, const ElementMap& bijection) {
    if (rep1.degree() != rep2.degree()) {
        throw Error(ErrorCode::DegreeMismatch,
                    std::to_string(rep1.degree()) + " vs " + std::to_string(rep2.degree()));
    }
    const TypeIParams& g1 = rep1.group;
    const TypeIParams& g2 = rep2.group;
    if (g1.order() != g2.order()) throw Error(ErrorCode::InvalidArgument, "groups of different order");

    FactorTable t1(g1), t2(g2);
    const u64 common = nt::lcm(t1.modulus(), t2.modulus());
    std::vector<bool> hit(g2.order(), false);
    std::vector<CycleFactor> f1, f2;
    std::vector<u64> e1, e2;
    for (u64 i = 0; i < g1.order(); ++i) {
        const GroupElement x = element_at(g1, i);
        const GroupElement y = bijection(x);
        if (y.group != g2) throw Error(ErrorCode::InvalidArgument, "bijection leaves the target group");
        const u64 j = y.a * g2.n + y.b;
        if (hit[j]) throw Error(ErrorCode::InvalidArgument, "map is not injective");
        hit[j] = true;

        f1.clear();
        f2.clear();
        e1.clear();
        e2.clear();
        for (const auto& s : rep1.summands) t1.append(s, x, f1);
        for (const auto& s : rep2.summands) t2.append(s, y, f2);
        expand(f1, t1.modulus(), e1);
        expand(f2, t2.modulus(), e2);
        for (auto& e : e1) e *= common / t1.modulus();
        for (auto& e : e2) e *= common / t2.modulus();
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        if (e1 != e2) return false;
    }
    return true;
}

SpectralTerms collect_terms(const SumRep& rep) {
    const TypeIParams& g = rep.group;
    FactorTable table(g);
    std::map<std::vector<CycleFactor>, u64> counts;
    std::vector<CycleFactor> factors;
    for (u64 i = 0; i < g.order(); ++i) {
        const GroupElement x = element_at(g, i);
        factors.clear();
        for (const auto& s : rep.summands) table.append(s, x, factors);
        std::sort(factors.begin(), factors.end());
        ++counts[factors];
    }
    SpectralTerms out{table.modulus(), g.order(), rep.degree(), {}};
    out.terms.reserve(counts.size());
    for (auto& [key, count] : counts) out.terms.push_back({count, key});
    return out;
}

SpectralTerms terms_from_eigenvalues(std::span<const EigenExponents> elements) {
    if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "empty group");
    u64 modulus = 1;
    for (const auto& e : elements) modulus = nt::lcm(modulus, e.modulus);
    const std::size_t dim = elements.front().exponents.size();
    std::map<std::vector<CycleFactor>, u64> counts;
    for (const auto& e : elements) {
        if (e.exponents.size() != dim) throw Error(ErrorCode::DegreeMismatch, "elements of different dimension");
        std::vector<CycleFactor> factors;
        for (u64 x : e.rescaled(modulus).exponents) factors.push_back({1, x});
        std::sort(factors.begin(), factors.end());
        ++counts[factors];
    }
    SpectralTerms out{modulus, elements.size(), dim, {}};
    for (auto& [key, count] : counts) out.terms.push_back({count, key});
    return out;
}

std::vector<u64> evaluate_generating_function(const SpectralTerms& terms, u64 p, u64 root,
                                              std::span<const u64> points) {
    const Fp64 f(p);
    if ((p - 1) % terms.modulus != 0) throw Error(ErrorCode::BadPrime, "modulus does not divide p - 1");
    if (terms.group_order % p == 0) throw Error(ErrorCode::BadPrime, "|G| is not invertible");
    const u64 zeta = f.from_uint(root);

    // Flattened factors: distinct lengths get slots in a per-point power table.
    std::vector<u64> lengths;
    for (const auto& t : terms.terms) {
        for (const auto& fac : t.factors) lengths.push_back(fac.length);
    }
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    std::vector<std::uint32_t> slot;
    std::vector<u64> neg_root;
    std::vector<std::size_t> offsets{0};
    std::vector<u64> counts;
    for (const auto& t : terms.terms) {
        for (const auto& fac : t.factors) {
            slot.push_back(static_cast<std::uint32_t>(
                std::lower_bound(lengths.begin(), lengths.end(), fac.length) - lengths.begin()));
            neg_root.push_back(f.neg(f.pow(zeta, fac.exponent)));
        }
        offsets.push_back(slot.size());
        counts.push_back(f.from_uint(t.count));
    }

    const u64 inv_order = f.inv(f.from_uint(terms.group_order));
    const std::size_t nterms = terms.terms.size();
    std::vector<u64> dets(nterms), scratch;
    std::vector<u64> zpow(lengths.size());
    std::vector<u64> out;
    out.reserve(points.size());
    for (u64 point : points) {
        const u64 z = f.from_uint(point);
        for (std::size_t i = 0; i < lengths.size(); ++i) zpow[i] = f.pow(z, lengths[i]);
        for (std::size_t t = 0; t < nterms; ++t) {
            u64 det = f.one();
            for (std::size_t i = offsets[t]; i < offsets[t + 1]; ++i) {
                det = f.mul(det, f.add(f.one(), f.mul(neg_root[i], zpow[slot[i]])));
            }
            if (det == f.zero()) {
                throw Error(ErrorCode::SingularPoint, "z = " + std::to_string(point) + " is a pole");
            }
            dets[t] = det;
        }
        batch_invert(f, dets, scratch);
        u64 sum = f.zero();
        for (std::size_t t = 0; t < nterms; ++t) sum = f.add(sum, f.mul(counts[t], dets[t]));
        const u64 prefactor = f.mul(f.sub(f.one(), f.mul(z, z)), inv_order);
        out.push_back(f.to_uint(f.mul(prefactor, sum)));
    }
    return out;
}

PrimePolicy PrimePolicy::from_environment() {
    PrimePolicy policy;
    if (const char* env = std::getenv("SPACEFORM_PRIME_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long seed = std::strtoull(env, &end, 10);
        if (end == nullptr || *end != '\0') {
            throw Error(ErrorCode::InvalidArgument, "SPACEFORM_PRIME_SEED must be a decimal integer");
        }
        policy.seed = seed;
    }
    return policy;
}

namespace {

u64 seed_offset(const std::optional<u64>& seed) {
    if (!seed) return 0;
    std::mt19937_64 engine(*seed);
    return engine() % PrimePolicy::kThreshold;
}

}  // namespace

u64 PrimePolicy::fingerprint_prime(u64 modulus) const {
    return smallest_prime_1_mod(modulus, kThreshold + seed_offset(seed));
}

u128 PrimePolicy::series_prime(u64 modulus, u128 coefficient_bound) const {
    const u128 threshold = std::max<u128>(kThreshold, coefficient_bound + 1) + seed_offset(seed);
    return smallest_prime_1_mod_u128(modulus, threshold);
}

u64 degree_bound(const SumRep& rep) { return rep.degree() * rep.group.order() + 2; }

SpectrumFingerprint fingerprint(const SumRep& rep, u64 p, std::span<const u64> points) {
    const u64 modulus = exponent_modulus(rep.group);
    if (!nt::is_prime(p) || (p - 1) % modulus != 0) {
        throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not a prime = 1 mod " + std::to_string(modulus));
    }
    SpectrumFingerprint out;
    out.group = rep.group;
    out.reps = rep.summands;
    out.p = p;
    out.root = primitive_root_of_unity(p, modulus);
    out.degree_bound = degree_bound(rep);
    out.points.assign(points.begin(), points.end());
    std::sort(out.points.begin(), out.points.end());
    out.values = evaluate_generating_function(collect_terms(rep), p, out.root, out.points);
    return out;
}

std::vector<u64> deterministic_points(u64 p, u64 modulus, std::size_t count) {
    const Fp64 f(p);
    std::vector<u64> out;
    out.reserve(count);
    for (u64 z = 2; out.size() < count; ++z) {
        if (z >= p) throw Error(ErrorCode::PrimeTooSmall, "field too small for the requested points");
        if (f.pow(f.from_uint(z), modulus) == f.one()) continue;
        out.push_back(z);
    }
    return out;
}

SpectrumFingerprint certified_fingerprint(const SumRep& rep, const PrimePolicy& policy) {
    const u64 modulus = exponent_modulus(rep.group);
    const u64 p = policy.fingerprint_prime(modulus);
    const auto points = deterministic_points(p, modulus, 2 * degree_bound(rep) + 1);
    return fingerprint(rep, p, points);
}

nlohmann::ordered_json to_json(const SpectrumFingerprint& fp) {
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto& r : fp.reps) reps.push_back({r.k, r.l});
    nlohmann::ordered_json j;
    j["m"] = fp.group.m;
    j["n"] = fp.group.n;
    j["d"] = fp.group.d;
    j["r"] = fp.group.r;
    j["reps"] = std::move(reps);
    j["p"] = fp.p;
    j["root"] = fp.root;
    j["points"] = fp.points;
    j["values"] = fp.values;
    return j;
}

namespace {

namespace mp = boost::multiprecision;

mp::cpp_int binomial(u64 n, u64 k) {
    if (k > n) return 0;
    mp::cpp_int out = 1;
    for (u64 i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace

std::optional<u128> harmonic_dimension(u64 q, u64 k) {
    mp::cpp_int value;
    if (k == 0) {
        value = 1;
    } else if (k == 1) {
        value = q + 1;
    } else {
        value = binomial(k + q, q) - binomial(k + q - 2, q);
    }
    if (mp::msb(value) >= 126) return std::nullopt;
    const auto hi = static_cast<u64>(value >> 64);
    const auto lo = static_cast<u64>(value & std::numeric_limits<u64>::max());
    return (static_cast<u128>(hi) << 64) | lo;
}

MolienSeries molien_coefficients(const SpectralTerms& terms, u64 truncation, u128 p) {
    const std::uint64_t q = terms.dimension - 1;
    const Fp128 f(p);
    if (!is_prime_u128(p) || (p - 1) % terms.modulus != 0) {
        throw Error(ErrorCode::BadPrime, u128_to_string(p) + " is not a prime = 1 mod " +
                                             std::to_string(terms.modulus));
    }
    std::vector<u128> bounds(truncation + 1);
    for (u64 k = 0; k <= truncation; ++k) {
        const auto dim = harmonic_dimension(q, k);
        if (!dim || *dim >= p) {
            throw Error(ErrorCode::PrimeTooSmall, "p must exceed dim H_{q,k} = " +
                                                      (dim ? u128_to_string(*dim) : std::string("2^126+")));
        }
        bounds[k] = *dim;
    }

    const u128 zeta = primitive_root_of_unity_u128(p, terms.modulus);
    std::vector<u128> total(truncation + 1, 0), series(truncation + 1);
    for (const auto& t : terms.terms) {
        std::fill(series.begin(), series.end(), 0);
        series[0] = 1;
        // Multiply by 1 / (1 - w z^len) = sum_j w^j z^(len j).
        for (const auto& fac : t.factors) {
            const u128 w = f.pow(zeta, fac.exponent);
            for (u64 i = fac.length; i <= truncation; ++i) {
                series[i] = f.add(series[i], f.mul(w, series[i - fac.length]));
            }
        }
        const u128 count = f.from_uint(t.count);
        for (u64 i = 0; i <= truncation; ++i) total[i] = f.add(total[i], f.mul(count, series[i]));
    }

    const u128 inv_order = f.inv(f.from_uint(terms.group_order));
    MolienSeries out{truncation, std::vector<u128>(truncation + 1)};
    for (u64 i = 0; i <= truncation; ++i) {
        u128 v = total[i];
        if (i >= 2) v = f.sub(v, total[i - 2]);
        v = f.mul(v, inv_order);
        if (v > bounds[i]) {
            throw Error(ErrorCode::PrimeTooSmall, "coefficient " + std::to_string(i) + " does not lift");
        }
        out.coefficients[i] = v;
    }
    return out;
}

MolienSeries molien_coefficients(const SumRep& rep, u64 truncation, u128 p) {
    return molien_coefficients(collect_terms(rep), truncation, p);
}

MolienSeries molien_coefficients(const SumRep& rep, u64 truncation, const PrimePolicy& policy) {
    const u64 q = rep.degree() - 1;
    const auto bound = harmonic_dimension(q, truncation);
    if (!bound) throw Error(ErrorCode::PrimeTooSmall, "coefficient bound exceeds 2^126");
    return molien_coefficients(rep, truncation, policy.series_prime(exponent_modulus(rep.group), *bound));
}

bool reps_equivalent(const TypeIParams& g, const RepParams& r1, const RepParams& r2) {
    const u64 quotient = g.n / g.d;
    for (int sign : {1, -1}) {
        const u64 l = sign > 0 ? r1.l % quotient : (quotient - r1.l % quotient) % quotient;
        if (l != r2.l % quotient) continue;
        u64 k = sign > 0 ? r1.k % g.m : (g.m - r1.k % g.m) % g.m;
        for (u64 c = 0; c < g.d; ++c) {
            if (k == r2.k % g.m) return true;
            k = nt::mulmod(k, g.r, g.m);
        }
    }
    return false;
}

bool isometric_irreducible(const TypeIParams& g, const RepParams& r1, const RepParams& r2) {
    // rho_{k,l} o psi_{s,t,u} ~ rho_{sk,tl}. Since s ranges over all units mod m,
    // the k-condition of reps_equivalent can always be met; what remains is
    // l2 = +-t l1 (mod n/d) for a unit t mod n with t = 1 (mod d).
    const u64 quotient = g.n / g.d;
    for (u64 t = 1; t <= g.n; ++t) {
        if (std::gcd(t, g.n) != 1 || t % g.d != 1 % g.d) continue;
        const u64 tl = nt::mulmod(t, r1.l, quotient);
        if (tl == r2.l % quotient || (quotient - tl) % quotient == r2.l % quotient) return true;
    }
    return false;
}

}  // namespace spaceform
