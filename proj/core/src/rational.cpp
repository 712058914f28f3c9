#include "hn/rational.hpp"

#include <sstream>

namespace hn {

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

static void check_dims(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_scale(const RatVec& a, const Rat& s) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Rat vec_inf_norm(const RatVec& a) {
    Rat m = 0;
    for (const Rat& x : a)
        if (rat_abs(x) > m) m = rat_abs(x);
    return m;
}

bool vec_equal(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_to_string(const RatVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += rat_to_string(v[i]);
    }
    return s;
}

RatVec parse_vec(const std::string& text, int expected_dim) {
    RatVec v;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            v.push_back(parse_rat(cur));
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    if (expected_dim >= 0 && static_cast<int>(v.size()) != expected_dim)
        throw std::invalid_argument("expected " + std::to_string(expected_dim) +
                                    " components, got " + std::to_string(v.size()));
    return v;
}

}  // namespace hn
