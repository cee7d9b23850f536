#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace supercone {

// Exact rational scalar. All linear algebra in this project is over Q;
// no floating point is used anywhere in rank or kernel computations.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Parse "p/q" or "p" (canonicalizes; throws InvalidInput on garbage).
Rat parse_rat(const std::string& s);

/// Render as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

/// Value must be integral and fit in long.
long to_long(const Rat& q);

std::string vec_str(const RatVec& v);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);

/// Lexicographic comparison, usable as a strict weak order for std::map.
bool vec_less(const RatVec& a, const RatVec& b);

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return vec_less(a, b); }
};

}  // namespace supercone
