#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "supercone/linalg.hpp"
#include "supercone/rational.hpp"

namespace supercone {

enum class Family { gl, sl, osp, D_alpha, F4, G3 };

std::string family_str(Family f);

/// Algebra descriptor. gl/sl carry (m, n); osp carries (m, n) with n even,
/// meaning osp(m|n); D_alpha carries the parameter alpha (not 0 or -1).
struct AlgebraType {
    Family family = Family::gl;
    int m = 0, n = 0;
    Rat alpha = Rat(1);

    std::string str() const;
    bool gl_like() const { return family == Family::gl || family == Family::sl; }
};

/// Parse "gl:2:2", "sl:3:2", "osp:5:4", "D:1/2", "F4", "G3".
AlgebraType parse_algebra(const std::string& desc);

/// A root, stored as an integer coordinate vector over the weight basis of the
/// type. For F4 the basis is scaled by 1/2 so that odd root coordinates stay
/// integral; for G3 the basis is (eps1, eps2, delta) with eps3 = -eps1-eps2.
struct Root {
    std::vector<int> coeffs;
    bool odd = false;
    bool isotropic = false;
    bool positive = false;

    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
    bool operator<(const Root& o) const { return coeffs < o.coeffs; }
    Root negated() const;
    RatVec as_ratvec() const;
};

struct Weight {
    RatVec coords;

    Weight() = default;
    explicit Weight(RatVec c) : coords(std::move(c)) {}

    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator<(const Weight& o) const { return vec_less(coords, o.coords); }
    std::string str() const { return vec_str(coords); }
};

Weight weight_add_root(const Weight& w, const Root& r, long mult = 1);

/// Element of the Weyl group of g_0, acting linearly on weight coordinates.
/// For gl and osp the block permutation/sign data is carried alongside the
/// matrix; for the exceptional types only the matrix form is kept.
struct WeylElement {
    Mat matrix;
    std::vector<int> perm_a, perm_b;  // 0-based images per block
    std::vector<int> sign_a, sign_b;  // +1/-1 per coordinate

    Weight apply(const Weight& w) const;
    Root apply(const Root& r) const;
};

class RootSystem {
  public:
    AlgebraType algebra;
    int rank = 0;                 // length of weight coordinate vectors
    std::vector<Root> delta0;     // even roots, sorted, closed under negation
    std::vector<Root> delta1;     // odd roots, sorted, closed under negation
    std::vector<Root> simple;     // simple roots of the chosen positive system
    Weight rho;
    Mat form;                     // invariant bilinear form on h*

    int num_eps() const;          // size of the epsilon block (gl: m; osp: l)
    int num_delta() const;        // size of the delta block

    const Root* find_root(const std::vector<int>& coeffs) const;

    /// Reflections in the even positive roots; generate the Weyl group.
    const std::vector<Mat>& weyl_generators() const { return weyl_generators_; }

    /// The full Weyl group of g_0. Materialized on first use and cached.
    const std::vector<WeylElement>& weyl_elements() const;

    friend RootSystem build_root_system(const AlgebraType& algebra);

  private:
    std::vector<Mat> weyl_generators_;
    struct WeylCache;
    std::shared_ptr<WeylCache> weyl_cache_;
};

RootSystem build_root_system(const AlgebraType& algebra);

/// Invariant bilinear form applied to weight coordinate vectors.
Rat pairing(const Weight& w1, const Weight& w2, const RootSystem& rs);
Rat pairing(const Weight& w, const Root& r, const RootSystem& rs);
Rat pairing(const Root& r1, const Root& r2, const RootSystem& rs);

/// lambda + rho, as a plain coordinate vector.
RatVec shifted_coords(const Weight& lambda, const RootSystem& rs);

/// Inverse of shifted_coords: the weight with the given lambda+rho vector.
Weight weight_from_shifted(const RatVec& lambda_plus_rho, const RootSystem& rs);

/// Consecutive differences of both blocks of lambda+rho are positive integers.
/// Only defined for gl/sl.
bool is_dominant(const Weight& lambda, const RootSystem& rs);

/// Block differences and cross sums of lambda+rho are integers. This is the
/// integrality needed by the central character and reduction machinery; it
/// admits the half-integer shifts that rho forces when m+n is even.
bool is_integral(const Weight& lambda, const RootSystem& rs);

/// Shifted Weyl action w.lambda = w(lambda+rho) - rho.
Weight shifted_action(const WeylElement& w, const Weight& lambda, const RootSystem& rs);

}  // namespace supercone
