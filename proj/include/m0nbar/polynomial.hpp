#pragma once

// Exact sparse multivariate polynomials over arbitrary-precision integers.
//
// Variable indexing convention used throughout the library:
//   i >= 1  marked-point coordinate x_i
//   0       the genericity parameter t
//   -i      the generic translation parameter b_i
// The monomial order is graded lexicographic with x1 > x2 > ... > t > b1 > b2 > ...

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "m0nbar/errors.hpp"

namespace m0nbar {

using Integer = boost::multiprecision::cpp_int;

constexpr int t_var = 0;
constexpr int b_var(int i) { return -i; }

namespace detail {
// Smaller rank = higher precedence in the lexicographic comparison.
constexpr long var_rank(int v) {
    constexpr long param_base = 1L << 24;
    if (v >= 1) return v;
    if (v == t_var) return param_base;
    return param_base - v; // v < 0: b_{-v}
}
} // namespace detail

class Monomial {
public:
    using Entry = std::pair<int, int>; // (variable, exponent > 0)

    Monomial() = default;

    static Monomial variable(int v, int exponent = 1) {
        Monomial m;
        if (exponent != 0) m.entries_.emplace_back(v, exponent);
        return m;
    }

    // Accepts unsorted entries with possible repeats; zero exponents are dropped.
    static Monomial make(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return detail::var_rank(a.first) < detail::var_rank(b.first);
        });
        Monomial m;
        for (const auto& [v, e] : entries) {
            if (e == 0) continue;
            if (!m.entries_.empty() && m.entries_.back().first == v)
                m.entries_.back().second += e;
            else
                m.entries_.emplace_back(v, e);
        }
        std::erase_if(m.entries_, [](const Entry& en) { return en.second == 0; });
        for (const auto& [v, e] : m.entries_)
            if (e < 0) throw error("negative exponent in monomial");
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    int exponent_of(int v) const {
        for (const auto& [w, e] : entries_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out;
        out.entries_.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin(), b = other.entries_.begin();
        while (a != entries_.end() && b != other.entries_.end()) {
            long ra = detail::var_rank(a->first), rb = detail::var_rank(b->first);
            if (ra < rb) out.entries_.push_back(*a++);
            else if (rb < ra) out.entries_.push_back(*b++);
            else {
                out.entries_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        out.entries_.insert(out.entries_.end(), a, entries_.end());
        out.entries_.insert(out.entries_.end(), b, other.entries_.end());
        return out;
    }

    bool divides(const Monomial& m) const {
        auto a = entries_.begin();
        auto b = m.entries_.begin();
        while (a != entries_.end()) {
            while (b != m.entries_.end() && detail::var_rank(b->first) < detail::var_rank(a->first)) ++b;
            if (b == m.entries_.end() || b->first != a->first || b->second < a->second) return false;
            ++a;
        }
        return true;
    }

    // Quotient m / this; requires divides(m).
    Monomial divide_into(const Monomial& m) const {
        Monomial out;
        auto a = entries_.begin();
        for (const auto& en : m.entries_) {
            if (a != entries_.end() && a->first == en.first) {
                if (en.second != a->second) out.entries_.emplace_back(en.first, en.second - a->second);
                ++a;
            } else {
                out.entries_.push_back(en);
            }
        }
        return out;
    }

    // Graded lex: +1 if a > b, 0 if equal, -1 if a < b.
    static int compare(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        auto i = a.entries_.begin();
        auto j = b.entries_.begin();
        while (i != a.entries_.end() && j != b.entries_.end()) {
            long ri = detail::var_rank(i->first), rj = detail::var_rank(j->first);
            if (ri < rj) return 1;  // a has the higher-precedence variable
            if (rj < ri) return -1;
            if (i->second != j->second) return i->second > j->second ? 1 : -1;
            ++i, ++j;
        }
        if (i != a.entries_.end()) return -1; // leftover lower-precedence entries
        if (j != b.entries_.end()) return 1;
        return 0;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Entry> entries_;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, MonomialGreater>;

    Polynomial() = default;
    Polynomial(Integer c) {
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }
    Polynomial(int c) : Polynomial(Integer(c)) {}
    Polynomial(long long c) : Polynomial(Integer(c)) {}

    static Polynomial variable(int v) { return term(1, Monomial::variable(v)); }

    static Polynomial term(Integer c, Monomial m) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree over all variables, parameters included; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    // Leading term in graded lex order; polynomial must be nonzero.
    const std::pair<const Monomial, Integer>& leading() const {
        if (terms_.empty()) throw zero_polynomial("leading term of zero polynomial");
        return *terms_.begin();
    }

    std::vector<int> variables() const {
        std::set<int> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vs.insert(v);
        return {vs.begin(), vs.end()};
    }

    void add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        if (a.is_zero() || b.is_zero()) return out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    friend Polynomial operator*(const Integer& c, const Polynomial& p) {
        Polynomial out;
        if (c == 0) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
        return out;
    }

    bool operator==(const Polynomial&) const = default;

private:
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, int e) {
    Polynomial out = 1;
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

// Simultaneous substitution; variables absent from `assignments` map to themselves.
inline Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& assignments) {
    std::map<std::pair<int, int>, Polynomial> power_cache;
    const auto power_of = [&](int v, int e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        return power_cache.emplace(key, pow(assignments.at(v), e)).first->second;
    };

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> kept;
        Polynomial factor = 1;
        for (const auto& [v, e] : m.entries()) {
            if (assignments.count(v)) factor *= power_of(v, e);
            else kept.emplace_back(v, e);
        }
        out += Polynomial::term(c, Monomial::make(std::move(kept))) * factor;
    }
    return out;
}

// Relabels positive variables: x_i -> x_{perm(i)}. perm is 1-based over 1..n.
inline Polynomial relabel_variables(const Polynomial& p, const std::vector<int>& perm) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> mapped;
        mapped.reserve(m.entries().size());
        for (const auto& [v, e] : m.entries())
            mapped.emplace_back(v >= 1 ? perm.at(static_cast<std::size_t>(v) - 1) : v, e);
        out.add_term(Monomial::make(std::move(mapped)), c);
    }
    return out;
}

// Exact division over ZZ: returns r with q*r = p, throws not_divisible otherwise.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw division_by_zero();
    Polynomial remainder = p;
    Polynomial quotient;
    const auto& [qm, qc] = q.leading();
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = remainder.leading();
        if (!qm.divides(rm) || rc % qc != 0) throw not_divisible();
        Polynomial tau = Polynomial::term(rc / qc, qm.divide_into(rm));
        remainder -= tau * q;
        quotient += tau;
    }
    return quotient;
}

// Minimum over terms of the summed exponents of the listed variables.
inline int min_total_degree_in(const Polynomial& p, const std::vector<int>& vars) {
    if (p.is_zero()) throw zero_polynomial("min_total_degree_in of zero polynomial");
    std::set<int> wanted(vars.begin(), vars.end());
    int best = -1;
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        for (const auto& [v, e] : m.entries())
            if (wanted.count(v)) d += e;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

inline Integer content(const Polynomial& p) {
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// Divides by the integer content and fixes the sign of the leading coefficient
// to be positive. Divisor equations are only defined up to a nonzero scalar,
// so this is the canonical representative used at API boundaries.
inline Polynomial primitive_normalize(const Polynomial& p) {
    if (p.is_zero()) throw zero_polynomial("primitive_normalize of zero polynomial");
    Integer g = content(p);
    if (p.leading().second < 0) g = -g;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c / g);
    return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering and parsing: `x1^2*x2 - 3*x3`, terms in graded lex
// descending order, with `t` and `b<i>` for the parameter variables.

inline std::string variable_name(int v) {
    if (v >= 1) return "x" + std::to_string(v);
    if (v == t_var) return "t";
    return "b" + std::to_string(-v);
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty()) out += "*";
        out += variable_name(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_one()) out += a.str();
        else {
            if (a != 1) out += a.str() + "*";
            out += to_string(m);
        }
        first = false;
    }
    return out;
}

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial p = parse_expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(what + " at position " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_expression() {
        Polynomial acc;
        bool negative = eat('-');
        acc += negative ? -parse_product() : parse_product();
        while (true) {
            if (eat('+')) acc += parse_product();
            else if (eat('-')) acc -= parse_product();
            else return acc;
        }
    }

    Polynomial parse_product() {
        Polynomial acc = parse_power();
        while (eat('*')) acc *= parse_power();
        return acc;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            int e = parse_uint();
            return pow(base, e);
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(parse_integer());
        if (c == 'x') { ++pos_; return Polynomial::variable(parse_index()); }
        if (c == 'b') { ++pos_; return Polynomial::variable(b_var(parse_index())); }
        if (c == 't') { ++pos_; return Polynomial::variable(t_var); }
        fail("expected a number, variable or '('");
    }

    Integer parse_integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int parse_uint() {
        Integer v = parse_integer();
        if (v > 1'000'000) fail("index or exponent too large");
        return static_cast<int>(v);
    }

    int parse_index() {
        int v = parse_uint();
        if (v < 1) fail("variable index must be at least 1");
        return v;
    }
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
    return detail::PolynomialParser(text).parse();
}

} // namespace m0nbar
