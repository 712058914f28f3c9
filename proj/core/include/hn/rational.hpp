#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hn {

// Expression templates off: arithmetic yields the number type directly, so
// results deduce cleanly through std::max, ternaries and auto.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using RatVec = std::vector<Rat>;

// Parses "p", "-p", "p/q" with q > 0 after normalization.
Rat parse_rat(const std::string& text);

// Canonical form "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Componentwise vector helpers; dimensions must agree.
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const RatVec& a, const Rat& s);
Rat vec_inf_norm(const RatVec& a);
bool vec_equal(const RatVec& a, const RatVec& b);

std::string vec_to_string(const RatVec& v);   // "p/q,p/q,..."
RatVec parse_vec(const std::string& text, int expected_dim = -1);

}  // namespace hn
