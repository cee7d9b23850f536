#include "supercone/rational.hpp"

#include "supercone/errors.hpp"

namespace supercone {

Rat parse_rat(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw InvalidInput("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw InvalidInput("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

long to_long(const Rat& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw InvalidInput("not an integer fitting long: " + rat_str(q));
    return q.get_num().get_si();
}

std::string vec_str(const RatVec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_str(v[i]);
    }
    return out + "]";
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool vec_less(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace supercone
