#include "lm/quadext.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace lm {

namespace {

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n must be composite and odd.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<unsigned long long>(n % 1000003));
    while (true) {
        Int y = Int(rng() % 1000000007) % n, c = Int(rng() % 1000000007) % n;
        if (c == 0) c = 1;
        Int x = y, d = 1, q = 1, ys = y;
        const int m = 128;
        int r = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = (y * y + c) % n;
            for (int k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (int i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::pair<Int, Int> extract_square_part(const Int& n) {
    if (n < 0) fail(errc::invalid_argument, "extract_square_part: negative radicand");
    if (n == 0) return {0, 0};
    Int m = 1, rest = n;
    // Strip small primes first; whatever remains is handled by a perfect
    // square test and Pollard rho.
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    Int square_free = 1;
    for (int sp : small_primes) {
        int count = 0;
        while (rest % sp == 0) {
            rest /= sp;
            ++count;
        }
        for (int i = 0; i < count / 2; ++i) m *= sp;
        if (count % 2) square_free *= sp;
    }
    if (rest > 1) {
        Int r;
        if (is_square(rest, &r)) {
            m *= r;
        } else {
            std::map<Int, int> fac;
            factor_into(rest, fac);
            for (auto& [prime, count] : fac) {
                for (int i = 0; i < count / 2; ++i) m *= prime;
                if (count % 2) square_free *= prime;
            }
        }
    }
    return {m, square_free};
}

QuadExt QuadExt::make(const Rat& p, const Rat& q, const Int& n) {
    if (n < 0) fail(errc::invalid_argument, "QuadExt: negative radicand");
    QuadExt r;
    r.p = p;
    if (q == 0 || n == 0) return r;
    auto [m, s] = extract_square_part(n); // n = m^2 * s with s squarefree
    if (s == 1) {
        r.p = p + q * Rat(m); // n was a perfect square
        return r;
    }
    r.q = q * Rat(m);
    r.d = s;
    return r;
}

int radical_sign(const Rat& p, const Rat& q, const Int& d) {
    if (q == 0 || d == 0) return sgn(p);
    if (p == 0) return sgn(q);
    int sp = sgn(p), sq = sgn(q);
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against q^2 d; the winner's sign decides.
    Rat lhs = p * p, rhs = q * q * Rat(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
}

namespace {

/// Sign of (p + q*sqrt(d)) - c*sqrt(e), all exact; d, e >= 0 arbitrary.
int sign_minus_radical(const Rat& p, const Rat& q, const Int& d, const Rat& c, const Int& e) {
    if (c == 0 || e == 0) return radical_sign(p, q, d);
    int lhs_sign = radical_sign(p, q, d);
    int rhs_sign = sgn(c);
    if (lhs_sign != rhs_sign) {
        if (lhs_sign == 0) return -rhs_sign;
        if (rhs_sign == 0) return lhs_sign;
        return lhs_sign;
    }
    // Same nonzero sign: compare squares. (p + q sqrt d)^2 = p^2 + q^2 d + 2pq sqrt d.
    Rat a = p * p + q * q * Rat(d) - c * c * Rat(e);
    Rat b = 2 * p * q;
    int square_cmp = radical_sign(a, b, d);
    return lhs_sign > 0 ? square_cmp : -square_cmp;
}

} // namespace

std::strong_ordering quad_cmp(const QuadExt& a, const QuadExt& b) {
    // a - b = (a.p - b.p) + a.q sqrt(a.d) - b.q sqrt(b.d)
    int s = sign_minus_radical(a.p - b.p, a.q, a.d, b.q, b.d);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int QuadExt::sign() const { return radical_sign(p, q, d); }

QuadExt QuadExt::operator-() const {
    QuadExt r;
    r.p = -p;
    r.q = -q;
    r.d = d;
    return r;
}

namespace {

Int common_d(const QuadExt& a, const QuadExt& b) {
    if (a.q == 0) return b.d;
    if (b.q == 0) return a.d;
    if (a.d != b.d)
        fail(errc::mixed_discriminant,
             "operands lie in different quadratic fields: sqrt(" + a.d.str() +
                 ") vs sqrt(" + b.d.str() + ")");
    return a.d;
}

QuadExt canonical(const Rat& p, const Rat& q, const Int& d) {
    QuadExt r;
    r.p = p;
    if (q != 0 && d > 1) {
        r.q = q;
        r.d = d;
    }
    return r;
}

} // namespace

QuadExt QuadExt::operator+(const QuadExt& o) const {
    Int d2 = common_d(*this, o);
    return canonical(p + o.p, q + o.q, d2);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    Int d2 = common_d(*this, o);
    return canonical(p - o.p, q - o.q, d2);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    Int d2 = common_d(*this, o);
    return canonical(p * o.p + q * o.q * Rat(d2), p * o.q + q * o.p, d2);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "QuadExt division by zero");
    Int d2 = common_d(*this, o);
    // Multiply by the conjugate; the norm is nonzero since sqrt(d) is
    // irrational for canonical d >= 2.
    Rat norm = o.p * o.p - o.q * o.q * Rat(d2);
    if (norm == 0) fail(errc::division_by_zero, "QuadExt division by zero norm");
    Rat np = (p * o.p - q * o.q * Rat(d2)) / norm;
    Rat nq = (q * o.p - p * o.q) / norm;
    return canonical(np, nq, d2);
}

std::string QuadExt::str() const {
    if (q == 0) return rat_to_string(p);
    std::string tail = (abs(q) == 1 ? std::string() : rat_to_string(abs(q)) + "*") +
                       "sqrt(" + d.str() + ")";
    if (p == 0) return (q < 0 ? "-" : "") + tail;
    return rat_to_string(p) + (q < 0 ? "-" : "+") + tail;
}

namespace {

size_t scan_rational(const std::string& s, size_t pos, Rat* out) {
    size_t i = pos;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits_start = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) fail(errc::syntax_error, "expected number at position " + std::to_string(pos) + " in '" + s + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t den_start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start) fail(errc::syntax_error, "expected denominator in '" + s + "'");
    }
    *out = parse_rat(s.substr(pos, i - pos));
    return i;
}

} // namespace

QuadExt parse_quadext(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(errc::syntax_error, "empty number");

    // Forms: RAT | [RAT(+|-)]RAT*sqrt(UINT) | [RAT(+|-)]sqrt(UINT)
    auto sq = s.find("sqrt(");
    if (sq == std::string::npos) {
        Rat p;
        size_t end = scan_rational(s, 0, &p);
        if (end != s.size()) fail(errc::syntax_error, "trailing characters in '" + text + "'");
        return QuadExt(p);
    }
    if (s.back() != ')') fail(errc::syntax_error, "missing ')' in '" + text + "'");
    std::string rad = s.substr(sq + 5, s.size() - sq - 6);
    if (rad.empty() || !std::all_of(rad.begin(), rad.end(), [](char c) {
            return isdigit(static_cast<unsigned char>(c));
        }))
        fail(errc::syntax_error, "bad radicand in '" + text + "'");
    Int n(rad);

    // The part before sqrt( is "", "-", "q*", "p+q*", "p-", "p+", ...
    std::string head = s.substr(0, sq);
    Rat p = 0, q = 1;
    if (!head.empty()) {
        bool has_coeff = head.back() == '*';
        if (has_coeff) head.pop_back();
        if (head.empty()) {
            if (!has_coeff) fail(errc::syntax_error, "bad coefficient in '" + text + "'");
            fail(errc::syntax_error, "dangling '*' in '" + text + "'");
        }
        if (has_coeff) {
            // head now ends with the q literal; find where it starts: scan
            // backwards over digits, '/', and one optional sign that must be
            // preceded by a digit or be at position 0.
            size_t j = head.size();
            while (j > 0 && (isdigit(static_cast<unsigned char>(head[j - 1])) || head[j - 1] == '/')) --j;
            if (j > 0 && (head[j - 1] == '+' || head[j - 1] == '-')) --j;
            std::string qlit = head.substr(j);
            std::string plit = head.substr(0, j);
            if (qlit.empty()) fail(errc::syntax_error, "bad coefficient in '" + text + "'");
            if (qlit == "+" || qlit == "-") {
                q = parse_rat(qlit + "1");
            } else {
                q = parse_rat(qlit);
            }
            if (!plit.empty()) {
                size_t end = scan_rational(plit, 0, &p);
                if (end != plit.size()) fail(errc::syntax_error, "bad rational part in '" + text + "'");
                // The sign of q was consumed as part of qlit already.
            }
        } else {
            if (head == "+") {
                q = 1;
            } else if (head == "-") {
                q = -1;
            } else if (head.back() == '+' || head.back() == '-') {
                q = head.back() == '-' ? -1 : 1;
                std::string plit = head.substr(0, head.size() - 1);
                size_t end = scan_rational(plit, 0, &p);
                if (end != plit.size()) fail(errc::syntax_error, "bad rational part in '" + text + "'");
            } else {
                fail(errc::syntax_error, "bad prefix before sqrt in '" + text + "'");
            }
        }
    }
    return QuadExt::make(p, q, n);
}

Rat rational_between(const QuadExt& a, const QuadExt& b) {
    if (!(quad_cmp(a, b) < 0)) fail(errc::invalid_argument, "rational_between needs a < b");
    // Integer bracket, then bisect; the gap is positive so this terminates.
    Rat lo = a.p - (a.q < 0 ? -a.q : a.q) * Rat(isqrt(a.d) + 1) - 1;
    Rat hi = b.p + (b.q < 0 ? -b.q : b.q) * Rat(isqrt(b.d) + 1) + 1;
    while (true) {
        Rat mid = (lo + hi) / 2;
        QuadExt m{mid};
        if (quad_cmp(m, a) <= 0)
            lo = mid;
        else if (quad_cmp(b, m) <= 0)
            hi = mid;
        else
            return mid;
    }
}

std::string ExtReal::str() const {
    if (finite) return value.str();
    if (inf_sign < 0) return "-inf";
    if (inf_sign > 0) return "+inf";
    return "inf";
}

std::strong_ordering ext_cmp(const ExtReal& a, const ExtReal& b) {
    auto rank = [](const ExtReal& x) { return x.finite ? 0 : x.inf_sign; };
    if (!a.finite || !b.finite) {
        if (!a.finite && a.inf_sign == 0) fail(errc::invalid_argument, "cannot order unsigned infinity");
        if (!b.finite && b.inf_sign == 0) fail(errc::invalid_argument, "cannot order unsigned infinity");
        int ra = rank(a), rb = rank(b);
        if (ra != rb) return ra < rb ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    return quad_cmp(a.value, b.value);
}

ExtReal parse_extreal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
    return ExtReal(parse_quadext(s));
}

} // namespace lm
