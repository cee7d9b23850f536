#include "supercone/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "supercone/errors.hpp"

namespace supercone {

std::string family_str(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::osp: return "osp";
        case Family::D_alpha: return "D_alpha";
        case Family::F4: return "F4";
        case Family::G3: return "G3";
    }
    return "?";
}

std::string AlgebraType::str() const {
    switch (family) {
        case Family::gl: return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        case Family::sl: return "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        case Family::osp: return "osp(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        case Family::D_alpha: return "D(" + rat_str(alpha) + ")";
        case Family::F4: return "F4";
        case Family::G3: return "G3";
    }
    return "?";
}

AlgebraType parse_algebra(const std::string& desc) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (start <= desc.size()) {
        size_t sep = desc.find(':', start);
        if (sep == std::string::npos) {
            parts.push_back(desc.substr(start));
            break;
        }
        parts.push_back(desc.substr(start, sep - start));
        start = sep + 1;
    }
    if (parts.empty()) throw ConfigError("empty algebra descriptor");
    const std::string& fam = parts[0];
    AlgebraType t;
    if (fam == "gl" || fam == "sl" || fam == "osp") {
        t.family = fam == "gl" ? Family::gl : fam == "sl" ? Family::sl : Family::osp;
        if (parts.size() != 3) throw ConfigError("expected " + fam + ":m:n, got '" + desc + "'");
        try {
            t.m = std::stoi(parts[1]);
            t.n = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw ConfigError("bad parameters in '" + desc + "'");
        }
    } else if (fam == "D" || fam == "D_alpha") {
        t.family = Family::D_alpha;
        if (parts.size() > 2) throw ConfigError("expected D[:alpha], got '" + desc + "'");
        if (parts.size() == 2) t.alpha = parse_rat(parts[1]);
    } else if (fam == "F4") {
        t.family = Family::F4;
    } else if (fam == "G3") {
        t.family = Family::G3;
    } else {
        throw ConfigError("unknown algebra family '" + fam + "'");
    }
    return t;
}

Root Root::negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    r.positive = !positive;
    return r;
}

RatVec Root::as_ratvec() const {
    RatVec v(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i];
    return v;
}

Weight weight_add_root(const Weight& w, const Root& r, long mult) {
    Weight out = w;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += Rat(mult) * r.coeffs[i];
    return out;
}

Weight WeylElement::apply(const Weight& w) const { return Weight(matrix.apply(w.coords)); }

Root WeylElement::apply(const Root& r) const {
    RatVec image = matrix.apply(r.as_ratvec());
    Root out = r;
    for (size_t i = 0; i < image.size(); ++i) {
        if (!is_integer(image[i]))
            throw ComputationError("Weyl image of a root is not integral");
        out.coeffs[i] = int(to_long(image[i]));
    }
    return out;
}

namespace {

std::vector<int> unit_vec(int rank, int i, int v) {
    std::vector<int> c(rank, 0);
    c[i] = v;
    return c;
}

std::vector<int> two_vec(int rank, int i, int vi, int j, int vj) {
    std::vector<int> c(rank, 0);
    c[i] = vi;
    c[j] = vj;
    return c;
}

Rat form_value(const Mat& form, const RatVec& a, const RatVec& b) {
    Rat out = 0;
    for (int i = 0; i < form.rows(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < form.cols(); ++j)
            if (form.at(i, j) != 0 && b[j] != 0) out += a[i] * form.at(i, j) * b[j];
    }
    return out;
}

// Positive iff the first nonzero coefficient, read in priority order, is > 0.
bool lex_positive(const std::vector<int>& coeffs, const std::vector<int>& priority) {
    for (int idx : priority) {
        if (coeffs[idx] > 0) return true;
        if (coeffs[idx] < 0) return false;
    }
    return false;
}

Mat reflection_matrix(const Mat& form, const Root& beta) {
    int rank = form.rows();
    RatVec bv = beta.as_ratvec();
    Rat bb = form_value(form, bv, bv);
    Mat m(rank, rank);
    for (int j = 0; j < rank; ++j) {
        RatVec e(rank, Rat(0));
        e[j] = 1;
        Rat coef = 2 * form_value(form, e, bv) / bb;
        for (int i = 0; i < rank; ++i) m.at(i, j) = (i == j ? Rat(1) : Rat(0)) - coef * bv[i];
    }
    return m;
}

void append_signed_combinations(std::vector<Root>& out, int rank, int i, int j, bool odd) {
    for (int si : {1, -1})
        for (int sj : {1, -1}) {
            Root r;
            r.coeffs = two_vec(rank, i, si, j, sj);
            r.odd = odd;
            out.push_back(r);
        }
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> sign_vectors(int n, bool even_only) {
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> s(n, 1);
        int neg = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1L << i)) {
                s[i] = -1;
                ++neg;
            }
        if (even_only && (neg % 2)) continue;
        out.push_back(s);
    }
    if (n == 0) out = {{}};
    return out;
}

}  // namespace

struct RootSystem::WeylCache {
    std::once_flag once;
    std::vector<WeylElement> elements;
};

int RootSystem::num_eps() const {
    switch (algebra.family) {
        case Family::gl:
        case Family::sl: return algebra.m;
        case Family::osp: return algebra.m / 2;
        default: return rank;
    }
}

int RootSystem::num_delta() const {
    switch (algebra.family) {
        case Family::gl:
        case Family::sl: return algebra.n;
        case Family::osp: return algebra.n / 2;
        default: return 0;
    }
}

const Root* RootSystem::find_root(const std::vector<int>& coeffs) const {
    for (const auto& r : delta0)
        if (r.coeffs == coeffs) return &r;
    for (const auto& r : delta1)
        if (r.coeffs == coeffs) return &r;
    return nullptr;
}

RootSystem build_root_system(const AlgebraType& algebra_in) {
    AlgebraType algebra = algebra_in;
    // psl(n|n) has a degenerate Cartan matrix; the object of study is gl(n|n).
    if (algebra.family == Family::sl && algebra.m == algebra.n) algebra.family = Family::gl;

    RootSystem rs;
    rs.algebra = algebra;
    std::vector<int> priority;

    switch (algebra.family) {
        case Family::gl:
        case Family::sl: {
            int m = algebra.m, n = algebra.n;
            if (m < 1 || n < 1) throw ConfigError("gl/sl needs m, n >= 1: " + algebra.str());
            rs.rank = m + n;
            rs.form = Mat(rs.rank, rs.rank);
            for (int i = 0; i < m; ++i) rs.form.at(i, i) = 1;
            for (int j = 0; j < n; ++j) rs.form.at(m + j, m + j) = -1;
            for (int i = 0; i < m + n; ++i)
                for (int j = 0; j < m + n; ++j) {
                    if (i == j || (i < m) != (j < m)) continue;
                    Root r;
                    r.coeffs = two_vec(rs.rank, i, 1, j, -1);
                    r.odd = false;
                    rs.delta0.push_back(r);
                }
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    Root r;
                    r.coeffs = two_vec(rs.rank, i, 1, m + j, -1);
                    r.odd = true;
                    rs.delta1.push_back(r);
                    rs.delta1.push_back(r.negated());
                }
            priority.resize(rs.rank);
            std::iota(priority.begin(), priority.end(), 0);
            // Distinguished simple system: eps chain, eps_m - delta_1, delta chain.
            for (int i = 0; i + 1 < m; ++i) {
                Root r;
                r.coeffs = two_vec(rs.rank, i, 1, i + 1, -1);
                rs.simple.push_back(r);
            }
            {
                Root r;
                r.coeffs = two_vec(rs.rank, m - 1, 1, m, -1);
                r.odd = true;
                rs.simple.push_back(r);
            }
            for (int j = 0; j + 1 < n; ++j) {
                Root r;
                r.coeffs = two_vec(rs.rank, m + j, 1, m + j + 1, -1);
                rs.simple.push_back(r);
            }
            break;
        }
        case Family::osp: {
            int m = algebra.m, n = algebra.n;
            if (m < 1 || n < 2 || (n % 2) != 0)
                throw ConfigError("osp needs m >= 1 and even n >= 2: " + algebra.str());
            int l = m / 2, nd = n / 2;
            rs.rank = l + nd;
            rs.form = Mat(rs.rank, rs.rank);
            for (int i = 0; i < l; ++i) rs.form.at(i, i) = 1;
            for (int p = 0; p < nd; ++p) rs.form.at(l + p, l + p) = -1;
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) append_signed_combinations(rs.delta0, rs.rank, i, j, false);
            if (m % 2 == 1)
                for (int i = 0; i < l; ++i) {
                    Root r;
                    r.coeffs = unit_vec(rs.rank, i, 1);
                    rs.delta0.push_back(r);
                    rs.delta0.push_back(r.negated());
                }
            for (int p = 0; p < nd; ++p)
                for (int q = p + 1; q < nd; ++q)
                    append_signed_combinations(rs.delta0, rs.rank, l + p, l + q, false);
            for (int p = 0; p < nd; ++p) {
                Root r;
                r.coeffs = unit_vec(rs.rank, l + p, 2);
                rs.delta0.push_back(r);
                rs.delta0.push_back(r.negated());
            }
            if (m % 2 == 1)
                for (int p = 0; p < nd; ++p) {
                    Root r;
                    r.coeffs = unit_vec(rs.rank, l + p, 1);
                    r.odd = true;
                    rs.delta1.push_back(r);
                    rs.delta1.push_back(r.negated());
                }
            for (int i = 0; i < l; ++i)
                for (int p = 0; p < nd; ++p) append_signed_combinations(rs.delta1, rs.rank, i, l + p, true);
            // Distinguished ordering puts the delta block first.
            for (int p = 0; p < nd; ++p) priority.push_back(l + p);
            for (int i = 0; i < l; ++i) priority.push_back(i);
            break;
        }
        case Family::D_alpha: {
            if (algebra.alpha == 0 || algebra.alpha == -1)
                throw ConfigError("D(alpha) needs alpha outside {0,-1}");
            rs.rank = 3;
            rs.form = Mat(3, 3);
            rs.form.at(0, 0) = -(1 + algebra.alpha) / 2;
            rs.form.at(1, 1) = Rat(1, 2);
            rs.form.at(2, 2) = algebra.alpha / 2;
            for (int i = 0; i < 3; ++i) {
                Root r;
                r.coeffs = unit_vec(3, i, 2);
                rs.delta0.push_back(r);
                rs.delta0.push_back(r.negated());
            }
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1}) {
                        Root r;
                        r.coeffs = {s1, s2, s3};
                        r.odd = true;
                        rs.delta1.push_back(r);
                    }
            priority = {0, 1, 2};
            break;
        }
        case Family::F4: {
            // Basis scaled by 1/2 so odd root coordinates are integers.
            rs.rank = 4;
            rs.form = Mat(4, 4);
            for (int i = 0; i < 3; ++i) rs.form.at(i, i) = Rat(1, 4);
            rs.form.at(3, 3) = Rat(-3, 4);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    for (int si : {2, -2})
                        for (int sj : {2, -2}) {
                            Root r;
                            r.coeffs = two_vec(4, i, si, j, sj);
                            rs.delta0.push_back(r);
                        }
                }
            for (int i = 0; i < 4; ++i) {
                Root r;
                r.coeffs = unit_vec(4, i, 2);
                rs.delta0.push_back(r);
                rs.delta0.push_back(r.negated());
            }
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1})
                        for (int s4 : {1, -1}) {
                            Root r;
                            r.coeffs = {s1, s2, s3, s4};
                            r.odd = true;
                            rs.delta1.push_back(r);
                        }
            priority = {0, 1, 2, 3};
            break;
        }
        case Family::G3: {
            // Coordinates (eps1, eps2, delta); eps3 = -eps1-eps2.
            rs.rank = 3;
            rs.form = Mat(3, 3);
            rs.form.at(0, 0) = 2;
            rs.form.at(1, 1) = 2;
            rs.form.at(0, 1) = -1;
            rs.form.at(1, 0) = -1;
            rs.form.at(2, 2) = -2;
            std::vector<std::vector<int>> g2 = {{1, -1, 0}, {2, 1, 0}, {1, 2, 0},
                                                {1, 0, 0},  {0, 1, 0}, {1, 1, 0}};
            for (const auto& c : g2) {
                Root r;
                r.coeffs = c;
                rs.delta0.push_back(r);
                rs.delta0.push_back(r.negated());
            }
            {
                Root r;
                r.coeffs = {0, 0, 2};
                rs.delta0.push_back(r);
                rs.delta0.push_back(r.negated());
            }
            std::vector<std::vector<int>> eps = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}};
            for (const auto& e : eps)
                for (int se : {1, -1})
                    for (int sd : {1, -1}) {
                        Root r;
                        r.coeffs = {se * e[0], se * e[1], sd};
                        r.odd = true;
                        rs.delta1.push_back(r);
                    }
            for (int sd : {1, -1}) {
                Root r;
                r.coeffs = {0, 0, sd};
                r.odd = true;
                rs.delta1.push_back(r);
            }
            priority = {0, 1, 2};
            break;
        }
    }

    for (auto& r : rs.delta0) {
        r.isotropic = form_value(rs.form, r.as_ratvec(), r.as_ratvec()) == 0;
        r.positive = lex_positive(r.coeffs, priority);
    }
    for (auto& r : rs.delta1) {
        r.isotropic = form_value(rs.form, r.as_ratvec(), r.as_ratvec()) == 0;
        r.positive = lex_positive(r.coeffs, priority);
    }
    std::sort(rs.delta0.begin(), rs.delta0.end());
    std::sort(rs.delta1.begin(), rs.delta1.end());

    // Simple roots for non-gl families: indecomposable positive roots.
    if (!rs.algebra.gl_like()) {
        std::vector<Root> pos;
        for (const auto& r : rs.delta0)
            if (r.positive) pos.push_back(r);
        for (const auto& r : rs.delta1)
            if (r.positive) pos.push_back(r);
        for (const auto& r : pos) {
            bool decomposable = false;
            for (const auto& s : pos) {
                std::vector<int> diff(rs.rank);
                for (int i = 0; i < rs.rank; ++i) diff[i] = r.coeffs[i] - s.coeffs[i];
                if (std::all_of(diff.begin(), diff.end(), [](int v) { return v == 0; })) continue;
                const Root* rest = rs.find_root(diff);
                if (rest && rest->positive) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) rs.simple.push_back(r);
        }
    }

    RatVec rho(rs.rank, Rat(0));
    for (const auto& r : rs.delta0)
        if (r.positive)
            for (int i = 0; i < rs.rank; ++i) rho[i] += Rat(r.coeffs[i], 2);
    for (const auto& r : rs.delta1)
        if (r.positive)
            for (int i = 0; i < rs.rank; ++i) rho[i] -= Rat(r.coeffs[i], 2);
    rs.rho = Weight(rho);

    for (const auto& r : rs.delta0)
        if (r.positive) rs.weyl_generators_.push_back(reflection_matrix(rs.form, r));

    rs.weyl_cache_ = std::make_shared<RootSystem::WeylCache>();
    return rs;
}

namespace {

std::vector<WeylElement> enumerate_block_group(const RootSystem& rs) {
    int ne = rs.num_eps(), nd = rs.num_delta();
    bool osp = rs.algebra.family == Family::osp;
    bool eps_signs_even = osp && (rs.algebra.m % 2 == 0);
    auto perms_a = all_permutations(ne);
    auto perms_b = all_permutations(nd);
    auto signs_a = osp ? sign_vectors(ne, eps_signs_even) : std::vector<std::vector<int>>{std::vector<int>(ne, 1)};
    auto signs_b = osp ? sign_vectors(nd, false) : std::vector<std::vector<int>>{std::vector<int>(nd, 1)};
    if (ne == 0) signs_a = {{}};
    if (nd == 0) signs_b = {{}};

    double order = double(perms_a.size()) * perms_b.size() * signs_a.size() * signs_b.size();
    if (order > 1e6)
        throw Unsupported("Weyl group too large to enumerate for " + rs.algebra.str());

    std::vector<WeylElement> out;
    out.reserve(size_t(order));
    for (const auto& pa : perms_a)
        for (const auto& sa : signs_a)
            for (const auto& pb : perms_b)
                for (const auto& sb : signs_b) {
                    WeylElement w;
                    w.perm_a = pa;
                    w.perm_b = pb;
                    w.sign_a = sa;
                    w.sign_b = sb;
                    w.matrix = Mat(rs.rank, rs.rank);
                    for (int i = 0; i < ne; ++i) w.matrix.at(pa[i], i) = sa[i];
                    for (int p = 0; p < nd; ++p) w.matrix.at(ne + pb[p], ne + p) = sb[p];
                    out.push_back(std::move(w));
                }
    return out;
}

std::vector<WeylElement> closure_group(const RootSystem& rs) {
    std::set<Mat> seen;
    std::vector<Mat> queue;
    Mat id = Mat::identity(rs.rank);
    seen.insert(id);
    queue.push_back(id);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Mat cur = queue[qi];
        for (const Mat& g : rs.weyl_generators()) {
            Mat next = g.times(cur);
            if (seen.insert(next).second) queue.push_back(next);
        }
        if (seen.size() > 100000)
            throw ComputationError("Weyl closure did not stabilize for " + rs.algebra.str());
    }
    std::vector<WeylElement> out;
    out.reserve(queue.size());
    for (Mat& m : queue) {
        WeylElement w;
        w.matrix = std::move(m);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

const std::vector<WeylElement>& RootSystem::weyl_elements() const {
    std::call_once(weyl_cache_->once, [this]() {
        if (algebra.gl_like() || algebra.family == Family::osp)
            weyl_cache_->elements = enumerate_block_group(*this);
        else
            weyl_cache_->elements = closure_group(*this);
    });
    return weyl_cache_->elements;
}

Rat pairing(const Weight& w1, const Weight& w2, const RootSystem& rs) {
    if (int(w1.coords.size()) != rs.rank || int(w2.coords.size()) != rs.rank)
        throw InvalidInput("pairing: weight dimension mismatch");
    return form_value(rs.form, w1.coords, w2.coords);
}

Rat pairing(const Weight& w, const Root& r, const RootSystem& rs) {
    return pairing(w, Weight(r.as_ratvec()), rs);
}

Rat pairing(const Root& r1, const Root& r2, const RootSystem& rs) {
    return pairing(Weight(r1.as_ratvec()), Weight(r2.as_ratvec()), rs);
}

RatVec shifted_coords(const Weight& lambda, const RootSystem& rs) {
    if (int(lambda.coords.size()) != rs.rank) throw InvalidInput("weight dimension mismatch");
    return vec_add(lambda.coords, rs.rho.coords);
}

Weight weight_from_shifted(const RatVec& lambda_plus_rho, const RootSystem& rs) {
    if (int(lambda_plus_rho.size()) != rs.rank) throw InvalidInput("weight dimension mismatch");
    return Weight(vec_sub(lambda_plus_rho, rs.rho.coords));
}

bool is_dominant(const Weight& lambda, const RootSystem& rs) {
    if (!rs.algebra.gl_like())
        throw Unsupported("dominance criterion implemented for gl/sl only");
    RatVec a = shifted_coords(lambda, rs);
    int m = rs.num_eps(), n = rs.num_delta();
    for (int i = 0; i + 1 < m; ++i) {
        Rat d = a[i] - a[i + 1];
        if (!is_integer(d) || d <= 0) return false;
    }
    for (int j = 0; j + 1 < n; ++j) {
        Rat d = a[m + j] - a[m + j + 1];
        if (!is_integer(d) || d <= 0) return false;
    }
    return true;
}

bool is_integral(const Weight& lambda, const RootSystem& rs) {
    if (!rs.algebra.gl_like())
        throw Unsupported("integrality test implemented for gl/sl only");
    RatVec a = shifted_coords(lambda, rs);
    int m = rs.num_eps(), n = rs.num_delta();
    for (int i = 1; i < m; ++i)
        if (!is_integer(a[i] - a[0])) return false;
    for (int j = 1; j < n; ++j)
        if (!is_integer(a[m + j] - a[m])) return false;
    if (m > 0 && n > 0 && !is_integer(a[0] + a[m])) return false;
    return true;
}

Weight shifted_action(const WeylElement& w, const Weight& lambda, const RootSystem& rs) {
    RatVec moved = w.matrix.apply(shifted_coords(lambda, rs));
    return weight_from_shifted(moved, rs);
}

}  // namespace supercone
