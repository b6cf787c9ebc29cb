#include "spectral/multilaurent.hpp"

#include <algorithm>
#include <sstream>

namespace spectral {

MultiLaurent MultiLaurent::constant(int arity, const Rational& c) {
    MultiLaurent p(arity);
    p.add_term(Exp(arity, 0), c);
    return p;
}

MultiLaurent MultiLaurent::monomial(int arity, const Exp& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity) throw UsageError("monomial: exponent arity mismatch");
    MultiLaurent p(arity);
    p.add_term(e, c);
    return p;
}

MultiLaurent MultiLaurent::var(int arity, int v, int exponent) {
    if (v < 0 || v >= arity) throw UsageError("var: index out of range");
    Exp e(arity, 0);
    e[v] = exponent;
    return monomial(arity, e, Rational(1));
}

Rational MultiLaurent::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiLaurent::add_term(const Exp& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity_) throw UsageError("add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    a.check_arity(b);
    MultiLaurent r(a.arity_);
    Exp e(a.arity_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator<(const MultiLaurent& a, const MultiLaurent& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
    auto ai = a.terms_.begin(), bi = b.terms_.begin();
    for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    return bi != b.terms_.end();
}

MultiLaurent MultiLaurent::scale(const Rational& c) const {
    MultiLaurent r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

MultiLaurent MultiLaurent::pow(int e) const {
    if (e < 0) throw UsageError("MultiLaurent::pow: negative exponent");
    MultiLaurent acc = constant(arity_, Rational(1));
    MultiLaurent base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if ((e >>= 1) != 0) base = base * base;
    }
    return acc;
}

MultiLaurent MultiLaurent::invert() const {
    if (terms_.size() != 1) throw NotInvertible("MultiLaurent: only monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    Exp inv(arity_);
    for (int i = 0; i < arity_; ++i) inv[i] = -e[i];
    return monomial(arity_, inv, c.invert());
}

MultiLaurent MultiLaurent::derivative(int v) const {
    if (v < 0 || v >= arity_) throw UsageError("derivative: index out of range");
    MultiLaurent r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exp d = e;
        d[v] -= 1;
        r.add_term(d, c * Rational(e[v]));
    }
    return r;
}

MultiLaurent MultiLaurent::antiderivative_from(int v, const Rational& basepoint) const {
    if (v < 0 || v >= arity_) throw UsageError("antiderivative_from: index out of range");
    MultiLaurent prim(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == -1)
            throw LogarithmicObstruction("antiderivative_from: t^{-1} coefficient present");
        Exp d = e;
        d[v] += 1;
        prim.add_term(d, c / Rational(d[v]));
    }
    return prim - prim.eval_var(v, basepoint);
}

MultiLaurent MultiLaurent::substitute_sign(int v) const {
    if (v < 0 || v >= arity_) throw UsageError("substitute_sign: index out of range");
    MultiLaurent r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, (e[v] & 1) ? -c : c);
    return r;
}

MultiLaurent MultiLaurent::substitute_inverse(int v) const {
    if (v < 0 || v >= arity_) throw UsageError("substitute_inverse: index out of range");
    MultiLaurent r(arity_);
    for (const auto& [e, c] : terms_) {
        Exp d = e;
        d[v] = -d[v];
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

MultiLaurent MultiLaurent::eval_var(int v, const Rational& value) const {
    if (v < 0 || v >= arity_) throw UsageError("eval_var: index out of range");
    MultiLaurent r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[v] < 0 && value.is_zero()) throw UsageError("eval_var: pole at 0");
        Exp d = e;
        d[v] = 0;
        r.add_term(d, c * value.pow(e[v]));
    }
    return r;
}

Rational MultiLaurent::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw UsageError("eval: point arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] < 0 && point[i].is_zero()) throw UsageError("eval: pole at 0");
            term *= point[i].pow(e[i]);
        }
        sum += term;
    }
    return sum;
}

MultiLaurent MultiLaurent::embed(int new_arity, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != arity_) throw UsageError("embed: map arity mismatch");
    MultiLaurent r(new_arity);
    Exp d(new_arity);
    for (const auto& [e, c] : terms_) {
        std::fill(d.begin(), d.end(), 0);
        for (int i = 0; i < arity_; ++i) {
            int tgt = var_map[i];
            if (tgt < 0 || tgt >= new_arity) throw UsageError("embed: target out of range");
            d[tgt] += e[i];
        }
        r.add_term(d, c);
    }
    return r;
}

MultiLaurent MultiLaurent::shift(const Exp& e) const {
    if (static_cast<int>(e.size()) != arity_) throw UsageError("shift: exponent arity mismatch");
    MultiLaurent r(arity_);
    Exp d(arity_);
    for (const auto& [f, c] : terms_) {
        for (int i = 0; i < arity_; ++i) d[i] = f[i] + e[i];
        r.terms_.emplace(d, c);
    }
    return r;
}

int MultiLaurent::degree_abs() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x < 0 ? -x : x;
        deg = std::max(deg, s);
    }
    return deg;
}

int MultiLaurent::degree_max() const {
    bool first = true;
    int deg = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (first || s > deg) deg = s;
        first = false;
    }
    return deg;
}

MultiLaurent MultiLaurent::top_homogeneous() const {
    MultiLaurent r(arity_);
    if (terms_.empty()) return r;
    int top = degree_max();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s == top) r.terms_.emplace(e, c);
    }
    return r;
}

int MultiLaurent::min_exponent(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] < m) m = e[v];
        first = false;
    }
    return m;
}

int MultiLaurent::max_exponent(int v) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[v] > m) m = e[v];
        first = false;
    }
    return m;
}

bool MultiLaurent::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

bool MultiLaurent::all_exponents_even() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x & 1) return false;
    return true;
}

bool MultiLaurent::is_symmetric() const {
    // Adjacent transpositions generate the full symmetric group.
    for (int i = 0; i + 1 < arity_; ++i) {
        MultiLaurent swapped(arity_);
        for (const auto& [e, c] : terms_) {
            Exp d = e;
            std::swap(d[i], d[i + 1]);
            swapped.terms_.emplace(std::move(d), c);
        }
        if (swapped != *this) return false;
    }
    return true;
}

std::string MultiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < arity_; ++i)
            if (e[i] != 0) os << "*t" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

MultiLaurent divide_exact(const MultiLaurent& num, const MultiLaurent& den) {
    if (den.is_zero()) throw UsageError("divide_exact: zero divisor");
    if (num.arity() != den.arity()) throw UsageError("divide_exact: arity mismatch");
    if (den.has_negative_exponent())
        throw UsageError("divide_exact: divisor must be a polynomial");
    const int n = num.arity();
    if (num.is_zero()) return MultiLaurent(n);

    // Lift the dividend's negative exponents; restore the shift at the end.
    Exp lift(n, 0);
    for (int v = 0; v < n; ++v) lift[v] = std::max(0, -num.min_exponent(v));
    MultiLaurent rem = num.shift(lift);

    // Long division by the lex-leading term of den.
    const auto& lead_it = std::prev(den.terms().end());
    const Exp& lead_e = lead_it->first;
    const Rational& lead_c = lead_it->second;
    MultiLaurent q(n);
    Exp qe(n);
    while (!rem.is_zero()) {
        const auto& rl = *std::prev(rem.terms().end());
        bool divisible = true;
        for (int i = 0; i < n; ++i) {
            qe[i] = rl.first[i] - lead_e[i];
            if (qe[i] < 0) divisible = false;
        }
        if (!divisible)
            throw InexactDivision("divide_exact: " + den.str() + " does not divide dividend");
        MultiLaurent qt = MultiLaurent::monomial(n, qe, rl.second / lead_c);
        q += qt;
        rem -= qt * den;
    }
    for (int v = 0; v < n; ++v) lift[v] = -lift[v];
    return q.shift(lift);
}

}  // namespace spectral
