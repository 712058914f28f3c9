#include "hn/words.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hn {

static void check_genus(int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
}

static void check_letter(int genus, int s) {
    if (s == 0 || s > 2 * genus || s < -2 * genus)
        throw std::invalid_argument("letter index " + std::to_string(s) +
                                    " out of range for genus " + std::to_string(genus));
}

GroupWord make_word(int genus, const std::vector<int>& raw) {
    check_genus(genus);
    GroupWord w;
    w.genus = genus;
    for (int s : raw) {
        check_letter(genus, s);
        if (!w.letters.empty() && w.letters.back() == -s)
            w.letters.pop_back();
        else
            w.letters.push_back(s);
    }
    return w;
}

GroupWord parse_word(int genus, const std::string& text) {
    check_genus(genus);
    std::vector<int> raw;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2)
            throw std::invalid_argument("bad word token '" + tok + "'");
        char c = tok[0];
        bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
        char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (base != 'a' && base != 'b')
            throw std::invalid_argument("bad word token '" + tok + "'");
        int idx = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("bad word token '" + tok + "'");
            idx = idx * 10 + (tok[i] - '0');
        }
        if (idx < 1 || idx > genus)
            throw std::invalid_argument("generator index in '" + tok +
                                        "' out of range for genus " + std::to_string(genus));
        int s = (base == 'a') ? 2 * idx - 1 : 2 * idx;
        raw.push_back(inv ? -s : s);
    }
    return make_word(genus, raw);
}

std::string word_to_string(const GroupWord& w) {
    std::string s;
    for (int v : w.letters) {
        if (!s.empty()) s += ' ';
        int k = v > 0 ? v : -v;
        char base = (k % 2 == 1) ? 'a' : 'b';
        if (v < 0) base = static_cast<char>(std::toupper(base));
        s += base;
        s += std::to_string((k + 1) / 2);
    }
    return s;
}

GroupWord compose(const GroupWord& u, const GroupWord& v) {
    if (u.genus != v.genus) throw std::invalid_argument("genus mismatch");
    std::vector<int> raw = u.letters;
    raw.insert(raw.end(), v.letters.begin(), v.letters.end());
    return make_word(u.genus, raw);
}

GroupWord invert(const GroupWord& w) {
    GroupWord r;
    r.genus = w.genus;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

GroupWord conjugate(const GroupWord& w, const GroupWord& c) {
    return compose(compose(c, w), invert(c));
}

GroupWord power(const GroupWord& w, int k) {
    GroupWord r;
    r.genus = w.genus;
    if (k == 0) return r;
    GroupWord base = k > 0 ? w : invert(w);
    int n = k > 0 ? k : -k;
    for (int i = 0; i < n; ++i) r = compose(r, base);
    return r;
}

GroupWord cyclic_reduce(const GroupWord& w) {
    GroupWord r = w;
    size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    r.letters.assign(r.letters.begin() + lo, r.letters.begin() + hi);
    return r;
}

std::vector<long long> abelianize(const GroupWord& w) {
    std::vector<long long> h(2 * w.genus, 0);
    for (int v : w.letters) {
        int k = v > 0 ? v : -v;
        h[k - 1] += v > 0 ? 1 : -1;
    }
    return h;
}

// Minimal rotation period of the letter cycle.
static int cyclic_period(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (int i = 0; i + d < n && ok; ++i)
            if (a[i] != a[i + d]) ok = false;
        if (ok) return d;
    }
    return n;
}

bool is_primitive(const GroupWord& w) {
    GroupWord c = cyclic_reduce(w);
    if (c.letters.empty()) return false;
    return cyclic_period(c.letters) == c.length();
}

GroupWord primitive_root(const GroupWord& w) {
    GroupWord c = cyclic_reduce(w);
    if (c.letters.empty()) return c;
    int d = cyclic_period(c.letters);
    GroupWord r;
    r.genus = w.genus;
    r.letters.assign(c.letters.begin(), c.letters.begin() + d);
    return r;
}

bool conjugate_as_cyclic_words(const GroupWord& u, const GroupWord& v) {
    GroupWord cu = cyclic_reduce(u), cv = cyclic_reduce(v);
    if (cu.length() != cv.length()) return false;
    int n = cu.length();
    if (n == 0) return true;
    for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (cu.letters[(r + i) % n] != cv.letters[i]) ok = false;
        if (ok) return true;
    }
    return false;
}

GroupWord relator(int genus) {
    check_genus(genus);
    std::vector<int> raw;
    for (int i = 1; i <= genus; ++i) {
        int a = 2 * i - 1, b = 2 * i;
        raw.push_back(a);
        raw.push_back(b);
        raw.push_back(-a);
        raw.push_back(-b);
    }
    return make_word(genus, raw);
}

}  // namespace hn
