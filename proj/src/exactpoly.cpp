#include "loudper/exactpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include <mpfr.h>

#include <json.hpp>

#include "loudper/specfun.hpp"

namespace loudper::exactpoly {

namespace {

std::vector<mpq_class> strip(std::vector<mpq_class> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

} // namespace

// ----- RationalPolynomial ---------------------------------------------------

void RationalPolynomial::normalize() {
    if (arity_ == 1) {
        c1_ = strip(std::move(c1_));
        return;
    }
    for (auto& row : c2_) {
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!c2_.empty() && c2_.back().empty()) c2_.pop_back();
}

RationalPolynomial
RationalPolynomial::from_coeffs(std::vector<mpq_class> ascending) {
    RationalPolynomial p;
    p.arity_ = 1;
    p.c1_ = std::move(ascending);
    for (auto& q : p.c1_) q.canonicalize();
    p.normalize();
    return p;
}

RationalPolynomial
RationalPolynomial::from_coeffs2(std::vector<std::vector<mpq_class>> grid) {
    RationalPolynomial p;
    p.arity_ = 2;
    p.c2_ = std::move(grid);
    for (auto& row : p.c2_)
        for (auto& q : row) q.canonicalize();
    p.normalize();
    return p;
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& v,
                                                int arity) {
    if (arity == 1) return from_coeffs({v});
    return from_coeffs2({{v}});
}

bool RationalPolynomial::is_zero() const noexcept {
    return arity_ == 1 ? c1_.empty() : c2_.empty();
}

int RationalPolynomial::degree() const noexcept {
    return static_cast<int>(c1_.size()) - 1;
}

int RationalPolynomial::degree_x() const noexcept {
    if (arity_ == 1) return degree();
    return static_cast<int>(c2_.size()) - 1;
}

int RationalPolynomial::degree_y() const noexcept {
    int d = -1;
    for (const auto& row : c2_)
        d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

mpq_class RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c1_.size())) return 0;
    return c1_[i];
}

mpq_class RationalPolynomial::coeff2(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c2_.size())) return 0;
    const auto& row = c2_[i];
    if (j < 0 || j >= static_cast<int>(row.size())) return 0;
    return row[j];
}

mpq_class RationalPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c1_.rbegin(); it != c1_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class RationalPolynomial::eval2(const mpq_class& x,
                                    const mpq_class& y) const {
    mpq_class acc = 0;
    for (auto it = c2_.rbegin(); it != c2_.rend(); ++it) {
        mpq_class row = 0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
            row = row * y + *jt;
        acc = acc * x + row;
    }
    return acc;
}

double RationalPolynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c1_.rbegin(); it != c1_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

double RationalPolynomial::eval2_double(double x, double y) const {
    double acc = 0.0;
    for (auto it = c2_.rbegin(); it != c2_.rend(); ++it) {
        double row = 0.0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt)
            row = row * y + jt->get_d();
        acc = acc * x + row;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (arity_ != 1)
        throw DomainError("derivative: univariate polynomials only");
    std::vector<mpq_class> d;
    for (size_t i = 1; i < c1_.size(); ++i)
        d.push_back(c1_[i] * static_cast<long>(i));
    return from_coeffs(std::move(d));
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p = *this;
    for (auto& q : p.c1_) q = -q;
    for (auto& row : p.c2_)
        for (auto& q : row) q = -q;
    return p;
}

RationalPolynomial
RationalPolynomial::operator+(const RationalPolynomial& o) const {
    if (arity_ != o.arity_)
        throw DomainError("polynomial arity mismatch in +");
    RationalPolynomial p;
    p.arity_ = arity_;
    if (arity_ == 1) {
        p.c1_.resize(std::max(c1_.size(), o.c1_.size()), 0);
        for (size_t i = 0; i < c1_.size(); ++i) p.c1_[i] += c1_[i];
        for (size_t i = 0; i < o.c1_.size(); ++i) p.c1_[i] += o.c1_[i];
    } else {
        p.c2_.resize(std::max(c2_.size(), o.c2_.size()));
        for (size_t i = 0; i < p.c2_.size(); ++i) {
            const size_t n1 = i < c2_.size() ? c2_[i].size() : 0;
            const size_t n2 = i < o.c2_.size() ? o.c2_[i].size() : 0;
            p.c2_[i].resize(std::max(n1, n2), 0);
            for (size_t j = 0; j < n1; ++j) p.c2_[i][j] += c2_[i][j];
            for (size_t j = 0; j < n2; ++j) p.c2_[i][j] += o.c2_[i][j];
        }
    }
    p.normalize();
    return p;
}

RationalPolynomial
RationalPolynomial::operator-(const RationalPolynomial& o) const {
    return *this + (-o);
}

RationalPolynomial
RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (arity_ != o.arity_)
        throw DomainError("polynomial arity mismatch in *");
    RationalPolynomial p;
    p.arity_ = arity_;
    if (is_zero() || o.is_zero()) {
        p.c2_.clear();
        return p;
    }
    if (arity_ == 1) {
        p.c1_.assign(c1_.size() + o.c1_.size() - 1, 0);
        for (size_t i = 0; i < c1_.size(); ++i)
            for (size_t j = 0; j < o.c1_.size(); ++j)
                p.c1_[i + j] += c1_[i] * o.c1_[j];
    } else {
        const int dx = degree_x() + o.degree_x();
        const int dy = degree_y() + o.degree_y();
        p.c2_.assign(dx + 1, std::vector<mpq_class>(dy + 1, 0));
        for (size_t i = 0; i < c2_.size(); ++i)
            for (size_t j = 0; j < c2_[i].size(); ++j) {
                if (c2_[i][j] == 0) continue;
                for (size_t k = 0; k < o.c2_.size(); ++k)
                    for (size_t l = 0; l < o.c2_[k].size(); ++l)
                        p.c2_[i + k][j + l] += c2_[i][j] * o.c2_[k][l];
            }
    }
    p.normalize();
    return p;
}

RationalPolynomial RationalPolynomial::operator*(const mpq_class& k) const {
    RationalPolynomial p = *this;
    for (auto& q : p.c1_) q *= k;
    for (auto& row : p.c2_)
        for (auto& q : row) q *= k;
    p.normalize();
    return p;
}

bool RationalPolynomial::operator==(const RationalPolynomial& o) const {
    return arity_ == o.arity_ && c1_ == o.c1_ && c2_ == o.c2_;
}

std::string RationalPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto term = [&](const mpq_class& q, int i, int j) {
        if (q == 0) return;
        if (!first) out << (q > 0 ? " + " : " - ");
        else if (q < 0) out << "-";
        first = false;
        mpq_class mag = abs(q);
        const bool has_var = i > 0 || j > 0;
        if (mag != 1 || !has_var) out << mag.get_str();
        if (i > 0) out << (mag != 1 ? "*x" : "x") << (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) out << ((mag != 1 || i > 0) ? "*y" : "y")
                       << (j > 1 ? "^" + std::to_string(j) : "");
    };
    if (arity_ == 1) {
        for (int i = degree(); i >= 0; --i) term(coeff(i), i, 0);
    } else {
        for (int i = degree_x(); i >= 0; --i)
            for (int j = static_cast<int>(c2_[i].size()) - 1; j >= 0; --j)
                term(c2_[i][j], i, j);
    }
    return out.str();
}

// ----- Euclid, Sturm --------------------------------------------------------

namespace {

// exact remainder of a by b (univariate, b nonzero)
RationalPolynomial poly_rem(RationalPolynomial a, const RationalPolynomial& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const mpq_class q = a.coeff(a.degree()) / b.coeff(db);
        const int shift = a.degree() - db;
        std::vector<mpq_class> mono(shift + 1, 0);
        mono[shift] = q;
        a = a - b * RationalPolynomial::from_coeffs(std::move(mono));
    }
    return a;
}

int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

} // namespace

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    if (a.arity() != 1 || b.arity() != 1)
        throw DomainError("poly_gcd: univariate polynomials only");
    while (!b.is_zero()) {
        RationalPolynomial r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (mpq_class(1) / a.coeff(a.degree())); // monic
}

namespace {

// exact quotient of a by b (used only where the division is exact)
RationalPolynomial poly_quot(RationalPolynomial a,
                             const RationalPolynomial& b) {
    const int db = b.degree();
    if (db < 0) throw DomainError("poly_quot: division by zero polynomial");
    std::vector<mpq_class> q(
        static_cast<size_t>(std::max(0, a.degree() - db + 1)), 0);
    while (!a.is_zero() && a.degree() >= db) {
        const mpq_class k = a.coeff(a.degree()) / b.coeff(db);
        const int shift = a.degree() - db;
        q[shift] = k;
        std::vector<mpq_class> mono(shift + 1, 0);
        mono[shift] = k;
        a = a - b * RationalPolynomial::from_coeffs(std::move(mono));
    }
    return RationalPolynomial::from_coeffs(std::move(q));
}

RationalPolynomial x_minus(const mpq_class& r) {
    return RationalPolynomial::from_coeffs({-r, 1});
}

} // namespace

SturmChain SturmChain::build(const RationalPolynomial& p) {
    if (p.arity() != 1)
        throw DomainError("SturmChain: univariate polynomials only");
    SturmChain chain;
    if (p.is_zero()) return chain;
    chain.seq.push_back(p);
    if (p.degree() == 0) return chain;
    chain.seq.push_back(p.derivative());
    while (chain.seq.back().degree() > 0) {
        RationalPolynomial r =
            -poly_rem(chain.seq[chain.seq.size() - 2], chain.seq.back());
        if (r.is_zero()) break;
        chain.seq.push_back(std::move(r));
    }
    return chain;
}

int SturmChain::sign_changes(const mpq_class& x) const {
    int changes = 0;
    int prev = 0;
    for (const auto& p : seq) {
        const int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sturm_count(const RationalPolynomial& p, const mpq_class& lo,
                const mpq_class& hi, EndpointPerturbation* report) {
    if (p.arity() != 1)
        throw DomainError("sturm_count: univariate polynomials only");
    if (!(lo < hi)) throw DomainError("sturm_count: requires lo < hi");
    if (p.is_zero())
        throw DomainError("sturm_count: zero polynomial has no root count");

    EndpointPerturbation dummy;
    EndpointPerturbation& rep = report ? *report : dummy;
    rep = EndpointPerturbation{};
    rep.lo_used = lo;
    rep.hi_used = hi;
    if (p.degree() == 0) return 0;

    // work on the squarefree part: same distinct roots, all simple, and the
    // sign-change count at non-root endpoints is exact
    const RationalPolynomial g = poly_gcd(p, p.derivative());
    const RationalPolynomial q = g.degree() > 0 ? poly_quot(p, g) : p;
    const SturmChain chain = SturmChain::build(q);

    // an endpoint that is a root is moved inward by an exact rational step,
    // halved until the skipped sliver holds no other root; the deflated
    // polynomial h = q/(x - root) certifies the sliver with non-root endpoints
    if (q.eval(lo) == 0) {
        const RationalPolynomial h = poly_quot(q, x_minus(lo));
        const SturmChain hchain = SturmChain::build(h);
        mpq_class eps = (hi - lo) / 4;
        while (q.eval(lo + eps) == 0 ||
               hchain.sign_changes(lo) - hchain.sign_changes(lo + eps) != 0)
            eps /= 2;
        rep.lo_used = lo + eps;
        rep.lo_moved = true;
    }
    if (q.eval(hi) == 0) {
        const RationalPolynomial h = poly_quot(q, x_minus(hi));
        const SturmChain hchain = SturmChain::build(h);
        mpq_class eps = (hi - rep.lo_used) / 4;
        while (q.eval(hi - eps) == 0 ||
               hchain.sign_changes(hi - eps) - hchain.sign_changes(hi) != 0)
            eps /= 2;
        rep.hi_used = hi - eps;
        rep.hi_moved = true;
    }
    return chain.sign_changes(rep.lo_used) - chain.sign_changes(rep.hi_used);
}

mpq_class discriminant_cubic(const mpq_class& c3, const mpq_class& c2,
                             const mpq_class& c1, const mpq_class& c0) {
    if (c3 == 0)
        throw DegenerateError("discriminant_cubic: leading coefficient is 0");
    return 18 * c3 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 +
           c2 * c2 * c1 * c1 - 4 * c3 * c1 * c1 * c1 -
           27 * c3 * c3 * c0 * c0;
}

double discriminant_cubic(double c3, double c2, double c1, double c0) {
    if (c3 == 0.0)
        throw DegenerateError("discriminant_cubic: leading coefficient is 0");
    return 18.0 * c3 * c2 * c1 * c0 - 4.0 * c2 * c2 * c2 * c0 +
           c2 * c2 * c1 * c1 - 4.0 * c3 * c1 * c1 * c1 -
           27.0 * c3 * c3 * c0 * c0;
}

// ----- directed-rounding intervals (mpfr) -----------------------------------

namespace {

// [lo, hi] with outward rounding on every operation
class IV {
  public:
    explicit IV(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    IV(const IV& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    IV(IV&& o) noexcept {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    IV& operator=(IV o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~IV() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    static IV from_q(const mpq_class& q, mpfr_prec_t prec) {
        IV v(prec);
        mpfr_set_q(v.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(v.hi_, q.get_mpq_t(), MPFR_RNDU);
        return v;
    }
    static IV pi(mpfr_prec_t prec) {
        IV v(prec);
        mpfr_const_pi(v.lo_, MPFR_RNDD);
        mpfr_const_pi(v.hi_, MPFR_RNDU);
        return v;
    }
    static IV log2(mpfr_prec_t prec) {
        IV v(prec);
        mpfr_const_log2(v.lo_, MPFR_RNDD);
        mpfr_const_log2(v.hi_, MPFR_RNDU);
        return v;
    }

    bool exactly_zero() const {
        return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
    }
    // +1 / -1 when the interval is entirely on one side of zero, else 0
    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    IV operator+(const IV& o) const {
        IV r(prec());
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    IV operator-(const IV& o) const {
        IV r(prec());
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }
    IV operator*(const IV& o) const {
        IV r(prec());
        mpfr_t t;
        mpfr_init2(t, prec());
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_};
        const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_mul(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }
    // division by an interval of certain sign
    IV operator/(const IV& o) const {
        IV r(prec());
        mpfr_t t;
        mpfr_init2(t, prec());
        bool first = true;
        const mpfr_srcptr as[2] = {lo_, hi_};
        const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
        for (auto a : as)
            for (auto b : bs) {
                mpfr_div(t, a, b, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_div(t, a, b, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }
    IV operator-() const {
        IV r(prec());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  private:
    mpfr_t lo_, hi_;
};

mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) +
           16;
}

IV enclose_iv(const SymCoeff& c, mpfr_prec_t prec) {
    IV v = IV::from_q(c.r, prec);
    if (c.q_pi != 0) v = v + IV::from_q(c.q_pi, prec) * IV::pi(prec);
    if (c.q_log2 != 0) v = v + IV::from_q(c.q_log2, prec) * IV::log2(prec);
    return v;
}

// thrown internally when an interval sign determination straddles zero
struct Uncertain {};

using IPoly = std::vector<IV>; // ascending powers

// interval Horner evaluation at an exact rational point
IV ieval(const IPoly& p, const mpq_class& x, mpfr_prec_t prec) {
    IV acc(prec);
    const IV xx = IV::from_q(x, prec);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xx + *it;
    return acc;
}

// strip leading coefficients: exactly-zero intervals drop the degree; a
// straddling leading interval is an uncertain degree decision
IPoly istrip(IPoly p) {
    while (!p.empty()) {
        if (p.back().exactly_zero()) {
            p.pop_back();
            continue;
        }
        if (p.back().sign() == 0) throw Uncertain{};
        break;
    }
    return p;
}

IPoly iderivative(const IPoly& p, mpfr_prec_t prec) {
    IPoly d;
    for (size_t i = 1; i < p.size(); ++i) {
        IV k = IV::from_q(mpq_class(static_cast<long>(i)), prec);
        d.push_back(p[i] * k);
    }
    return istrip(std::move(d));
}

// interval remainder of a by b; the leading coefficient of b is sign-certain
IPoly irem(IPoly a, const IPoly& b, mpfr_prec_t prec) {
    const size_t db = b.size() - 1;
    while (a.size() >= b.size() && !a.empty()) {
        const IV q = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = a[shift + j] - q * b[j];
        // the top coefficient cancels by construction; force exact zero
        a.pop_back();
        a = istrip(std::move(a));
        (void)db;
        (void)prec;
    }
    return a;
}

int isign_certain(const IV& v) {
    if (v.exactly_zero()) return 0;
    const int s = v.sign();
    if (s == 0) throw Uncertain{};
    return s;
}

// one attempt at a given precision; throws Uncertain when a sign straddles
int sturm_count_interval_once(const SymPoly& p, const mpq_class& lo,
                              const mpq_class& hi, mpfr_prec_t prec) {
    IPoly p0;
    for (const auto& c : p) p0.push_back(enclose_iv(c, prec));
    p0 = istrip(std::move(p0));
    if (p0.empty())
        throw DomainError("sturm_count_symbolic: zero polynomial");
    if (p0.size() == 1) return 0;

    std::vector<IPoly> chain;
    chain.push_back(p0);
    chain.push_back(iderivative(p0, prec));
    while (chain.back().size() > 1) {
        IPoly r = irem(chain[chain.size() - 2], chain.back(), prec);
        if (r.empty()) break;
        for (auto& v : r) v = -v;
        chain.push_back(std::move(r));
    }

    const auto changes = [&](const mpq_class& x) {
        int n = 0, prev = 0;
        for (const auto& q : chain) {
            const int s = isign_certain(ieval(q, x, prec));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++n;
            prev = s;
        }
        return n;
    };
    // endpoint values of the input polynomial must be certainly nonzero
    if (isign_certain(ieval(p0, lo, prec)) == 0 ||
        isign_certain(ieval(p0, hi, prec)) == 0)
        throw DomainError(
            "sturm_count_symbolic: an endpoint is an exact root");
    return changes(lo) - changes(hi);
}

} // namespace

std::pair<double, double> enclose(const SymCoeff& c, int digits) {
    const IV v = enclose_iv(c, bits_for_digits(digits));
    return {v.lo_double(), v.hi_double()};
}

int sturm_count_symbolic(const SymPoly& p, const mpq_class& lo,
                         const mpq_class& hi, int start_digits,
                         int max_digits, int* digits_used) {
    if (!(lo < hi))
        throw DomainError("sturm_count_symbolic: requires lo < hi");
    if (start_digits < 10 || max_digits < start_digits)
        throw DomainError("sturm_count_symbolic: bad precision ladder");
    for (int digits = start_digits; digits <= max_digits; digits *= 2) {
        try {
            const int n =
                sturm_count_interval_once(p, lo, hi, bits_for_digits(digits));
            if (digits_used) *digits_used = digits;
            return n;
        } catch (const Uncertain&) {
            continue; // double the precision and retry
        }
    }
    throw PrecisionError(
        "sturm_count_symbolic: sign undecided at maximum precision (" +
        std::to_string(max_digits) + " digits)");
}

// ----- positivity pipeline ---------------------------------------------------

namespace {

double pochhammer(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x + k;
    return r;
}

double factorial_small(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// univariate integer polynomial helper for resultant assembly
RationalPolynomial upoly(std::initializer_list<long> ascending) {
    std::vector<mpq_class> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPolynomial::from_coeffs(std::move(c));
}

RationalPolynomial upow(const RationalPolynomial& p, int n) {
    RationalPolynomial r = RationalPolynomial::constant(1);
    for (int k = 0; k < n; ++k) r = r * p;
    return r;
}

} // namespace

double eval_phi(double a, double b) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b <= 1.0))
        throw DomainError("eval_phi: requires a in (0,1), b in (0,1]");
    // both Beta * 2F1 products are taken through the merged regularized
    // route: at a = 1/2 the first product is a finite 0 x infinity limit
    // (the Beta vanishes against a hypergeometric pole at c = -1)
    return specfun::beta_times_hyp2f1(1.0 - a, -1.5, -3.0 - a, -1.5, -b) -
           4.0 * specfun::beta_times_hyp2f1(1.0 - a / 2.0, -0.5,
                                            -1.0 - a / 2.0, -0.5, -b);
}

double eval_rho(int n, double a) {
    if (n < 0 || n > 3)
        throw DomainError("eval_rho: order must be in 0..3");
    if (!(a > 0.0 && a < 1.0))
        throw DomainError("eval_rho: requires a in (0,1)");
    // Taylor coefficient of the Beta * 2F1 combination; the Pochhammer
    // denominator (c)_n is folded into the Beta as Gamma(c)*(c)_n =
    // Gamma(c+n), computed by the entire reciprocal-gamma, so the removable
    // 0/0 at a = 1/2 (n >= 2) evaluates finitely
    const double nf = factorial_small(n);
    const double t1 = pochhammer(-3.0 - a, n) * pochhammer(-1.5, n) / nf *
                      specfun::gamma(1.0 - a) * specfun::gamma(-1.5) *
                      specfun::recip_gamma(n - 0.5 - a);
    const double t2 = pochhammer(-1.0 - a / 2.0, n) * pochhammer(-0.5, n) /
                      nf * specfun::gamma(1.0 - a / 2.0) *
                      specfun::gamma(-0.5) *
                      specfun::recip_gamma(n + 0.5 - a / 2.0);
    return t1 - 4.0 * t2;
}

double eval_gamma_profile(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError("eval_gamma_profile: requires a in [0,1]");
    const double g = specfun::gamma(3.5 - a / 2.0);
    return g * g /
           (std::pow(2.0, a) * std::sqrt(M_PI) * specfun::gamma(2.5 - a));
}

double eval_gamma_profile_beta(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw DomainError("eval_gamma_profile_beta: requires a in [0,1]");
    const double denom = (2.0 * a - 3.0) * (4.0 * a * a - 1.0);
    if (std::abs(4.0 * a * a - 1.0) < 1e-9)
        throw PoleError("eval_gamma_profile_beta: removable singularity at "
                        "a = 1/2; use eval_gamma_profile");
    const double f = (a - 1.0) * (a - 3.0) * (a - 5.0);
    return 3.0 / 16.0 * f * f / denom * specfun::beta(1.0 - a, -1.5) /
           specfun::beta(1.0 - a / 2.0, -0.5);
}

double eval_rational_chord(double a) {
    return (23.0 * a - 94.0) * (a - 1.0) * (a - 3.0) * (a - 4.0) *
           (a - 5.0) / (160.0 * (3.0 * a - 5.0) * (a + 2.0));
}

const RationalPolynomial& discriminant_resultant() {
    static const RationalPolynomial R = [] {
        // coefficient polynomials in a of each power of t
        const RationalPolynomial c4 =
            upoly({-512, 576, 429, -413, -126, 36, 8}) * upoly({-1, 2}) *
            upow(upoly({3, 1}), 2) * upow(upoly({-3, 2}), 2) *
            mpq_class(-16384);
        const RationalPolynomial c3 =
            upoly({11520, -2784, -14160, -2566, 11568, -2305, -1904, 252, 48}) *
            upoly({-1, 1}) * upoly({-3, 1}) * upoly({-5, 1}) *
            upoly({-3, 2}) * upoly({3, 1}) * mpq_class(3072);
        const RationalPolynomial c2 =
            upoly({-915840, -894960, 1082256, 823685, -557976, -221032,
                   135520, 3616, -7808, 768}) *
            upoly({0, 1}) * upoly({2, 1}) * upow(upoly({-5, 1}), 2) *
            upow(upoly({-1, 1}), 2) * upow(upoly({-3, 1}), 2) *
            mpq_class(-24);
        const RationalPolynomial c1 =
            upoly({-64800, -47520, -4482, 32889, 4678, -5491, 1830, -1400,
                   320}) *
            upoly({-4, 1}) * upoly({2, 1}) * upow(upoly({-1, 1}), 3) *
            upow(upoly({-3, 1}), 3) * upow(upoly({-5, 1}), 4) * mpq_class(-4);
        const RationalPolynomial c0 =
            upoly({36, 27, -5, -15, 5}) * upoly({0, 1}) * upoly({-2, 1}) *
            upoly({-4, 1}) * upoly({2, 1}) * upow(upoly({-1, 1}), 4) *
            upow(upoly({-3, 1}), 5) * upow(upoly({-5, 1}), 6) *
            mpq_class(15);

        const RationalPolynomial* cs[5] = {&c0, &c1, &c2, &c3, &c4};
        int dx = 0;
        for (const auto* c : cs) dx = std::max(dx, c->degree());
        std::vector<std::vector<mpq_class>> grid(
            dx + 1, std::vector<mpq_class>(5, 0));
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i <= cs[j]->degree(); ++i)
                grid[i][j] = cs[j]->coeff(i);
        return RationalPolynomial::from_coeffs2(std::move(grid));
    }();
    return R;
}

const SymPoly& tangent_gap_p0() {
    static const SymPoly p = {
        {1860, 0, 0},  {7688, 0, -7500}, {-9957, 0, 750},
        {3479, 0, 2250}, {-393, 0, 0},   {23, 0, 0},
    };
    return p;
}

const SymPoly& tangent_gap_p1() {
    static const SymPoly p = {
        {3200, -5640, 19200}, {2880, 11438, -21120}, {-1280, -8007, -3840},
        {-960, 2579, 5760},   {0, -393, 0},          {0, 23, 0},
    };
    return p;
}

double tangent_crossing() {
    const double L = std::log(2.0);
    return (75.0 * M_PI - 32.0 - 192.0 * L) /
           ((75.0 * M_PI - 192.0) * L + 30.0 * M_PI + 32.0);
}

double curvature_bound_constant() {
    const double L = std::log(2.0);
    return (0.4 + L) * (0.4 + L) + 27.0 / 8.0 - 5.0 * M_PI * M_PI / 12.0;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

} // namespace

PipelineReport verify_positivity_pipeline() {
    PipelineReport report;
    const auto stage = [&](std::string name, bool pass, std::string witness,
                           int digits = 0) {
        report.stages.push_back(
            {std::move(name), pass, std::move(witness), digits});
    };

    { // (a) the constant Taylor coefficient is positive across the interval
        double min_v = std::numeric_limits<double>::infinity();
        double arg = 0.0;
        const int n = 1000;
        for (int i = 1; i <= n; ++i) {
            const double a = static_cast<double>(i) / (n + 1);
            const double v = eval_rho(0, a);
            if (v < min_v) {
                min_v = v;
                arg = a;
            }
        }
        stage("rho0-grid", min_v > 0.0,
              "min rho_0 = " + fmt_double(min_v) + " at a = " +
                  fmt_double(arg));
    }
    { // (b) exact Sturm counts for the two tangent-gap numerators
        int digits = 0;
        const int n0 = sturm_count_symbolic(
            tangent_gap_p0(), 0, mpq_class(23, 50), 60, 240, &digits);
        stage("p0-sturm", n0 == 0,
              "roots in (0, 23/50): " + std::to_string(n0), digits);
        const int n1 = sturm_count_symbolic(
            tangent_gap_p1(), mpq_class(11, 25), 1, 60, 240, &digits);
        stage("p1-sturm", n1 == 0,
              "roots in (11/25, 1): " + std::to_string(n1), digits);
    }
    { // the two tangent lines cross inside the overlap of those intervals
        const double a_hat = tangent_crossing();
        stage("tangent-cross", std::abs(a_hat - 0.45) < 0.01,
              "crossing at a = " + fmt_double(a_hat));
    }
    { // the convexity lower bound for the profile is positive
        const double c = curvature_bound_constant();
        stage("curvature", c > 0.0, "bound constant = " + fmt_double(c));
    }
    { // (c) the quartic resultant profile never vanishes along t = F(a)
        const RationalPolynomial& R = discriminant_resultant();
        double min_abs = std::numeric_limits<double>::infinity();
        double arg = 0.0;
        bool nonzero = true;
        const int n = 1000;
        for (int i = 1; i <= n; ++i) {
            const double a = static_cast<double>(i) / (n + 1);
            const double v = R.eval2_double(a, eval_gamma_profile(a));
            if (std::abs(v) < min_abs) {
                min_abs = std::abs(v);
                arg = a;
            }
            if (v == 0.0) nonzero = false;
        }
        stage("resultant-grid", nonzero && min_abs > 0.0,
              "min |R(a, F(a))| = " + fmt_double(min_abs) + " at a = " +
                  fmt_double(arg));
    }
    { // the resultant route reproduces the cubic discriminant of P(a, .)
        std::mt19937_64 rng(0x706f6c79ULL);
        std::uniform_real_distribution<double> dist(0.02, 0.98);
        double worst = 0.0;
        double arg = 0.0;
        const RationalPolynomial& R = discriminant_resultant();
        for (int k = 0; k < 20; ++k) {
            const double a = dist(rng);
            const double r0 = eval_rho(0, a), r1 = eval_rho(1, a),
                         r2 = eval_rho(2, a), r3 = eval_rho(3, a);
            const double disc = discriminant_cubic(-r3, r2, -r1, r0);
            const double B = specfun::beta(1.0 - a / 2.0, -0.5);
            const double f = (a - 1.0) * (a - 3.0) * (a - 5.0);
            const double pref =
                -2.0 * (a + 2.0) * B * B * B * B / (3.0 * std::pow(f, 8));
            const double via_R =
                pref * R.eval2_double(a, eval_gamma_profile(a));
            const double rel =
                std::abs(disc - via_R) / std::max(std::abs(disc), 1e-300);
            if (rel > worst) {
                worst = rel;
                arg = a;
            }
        }
        stage("discriminant-xcheck", worst < 1e-9,
              "worst relative gap = " + fmt_double(worst) + " at a = " +
                  fmt_double(arg));
    }

    report.all_pass = true;
    for (const auto& s : report.stages) report.all_pass &= s.pass;
    return report;
}

std::string to_json(const PipelineReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass;
    j["stages"] = nlohmann::json::array();
    for (const auto& s : report.stages) {
        j["stages"].push_back({{"stage", s.stage},
                               {"verdict", s.pass ? "pass" : "fail"},
                               {"witness", s.witness},
                               {"precision", s.precision_digits}});
    }
    return j.dump();
}

// ----- center ideal factorization --------------------------------------------

namespace {

// bivariate integer polynomial from (i, j, value) triples, x^i y^j
RationalPolynomial bpoly(
    std::initializer_list<std::tuple<int, int, long>> terms) {
    int dx = 0, dy = 0;
    for (const auto& [i, j, v] : terms) {
        dx = std::max(dx, i);
        dy = std::max(dy, j);
        (void)v;
    }
    std::vector<std::vector<mpq_class>> grid(
        dx + 1, std::vector<mpq_class>(dy + 1, 0));
    for (const auto& [i, j, v] : terms) grid[i][j] = v;
    return RationalPolynomial::from_coeffs2(std::move(grid));
}

} // namespace

const RationalPolynomial& center_ideal_p2() {
    static const RationalPolynomial p = bpoly({
        {2, 0, 10}, {1, 1, 10}, {1, 0, -1}, {0, 2, 4}, {0, 1, -5}, {0, 0, 1},
    });
    return p;
}

const RationalPolynomial& center_ideal_p4() {
    static const RationalPolynomial p = bpoly({
        {4, 0, 1540}, {3, 1, 4040}, {3, 0, 1180}, {2, 2, 4692},
        {2, 1, 1992}, {2, 0, 453},  {1, 3, 2768}, {1, 2, 228},
        {1, 1, 318},  {1, 0, -2},   {0, 4, 784},  {0, 3, -616},
        {0, 2, -63},  {0, 1, -154}, {0, 0, 49},
    });
    return p;
}

const RationalPolynomial& bautin_q(int row, int col) {
    static const RationalPolynomial q11 = bpoly({{0, 0, 1}});
    static const RationalPolynomial q12 = bpoly({{1, 0, 10}, {0, 0, -1}});
    static const RationalPolynomial q21 =
        bpoly({{0, 2, 52}, {0, 1, 44}, {0, 0, 49}});
    static const RationalPolynomial q22 = bpoly({
        {0, 3, 576}, {1, 2, 2192}, {0, 2, -584}, {2, 1, 2500},
        {1, 1, 812}, {0, 1, -135}, {3, 0, 1540}, {2, 0, 1180},
        {1, 0, 453}, {0, 0, -2},
    });
    if (row == 1 && col == 1) return q11;
    if (row == 1 && col == 2) return q12;
    if (row == 2 && col == 1) return q21;
    if (row == 2 && col == 2) return q22;
    throw DomainError("bautin_q: indices must be 1 or 2");
}

BautinReport check_bautin_factorization(const RationalPolynomial& q11,
                                        const RationalPolynomial& q12,
                                        const RationalPolynomial& q21,
                                        const RationalPolynomial& q22) {
    // u = (2F-1)^2 and v = D+F in variables (x, y) = (D, F)
    const RationalPolynomial u =
        bpoly({{0, 2, 4}, {0, 1, -4}, {0, 0, 1}});
    const RationalPolynomial v = bpoly({{1, 0, 1}, {0, 1, 1}});

    BautinReport rep;
    rep.residual_p2 = center_ideal_p2() - (q11 * u + q12 * v);
    rep.residual_p4 = center_ideal_p4() - (q21 * u + q22 * v);
    const RationalPolynomial det = q11 * q22 - q21 * q12;
    rep.det_at_center = det.eval2(mpq_class(-1, 2), mpq_class(1, 2));
    rep.ok = rep.residual_p2.is_zero() && rep.residual_p4.is_zero() &&
             rep.det_at_center != 0;
    return rep;
}

BautinReport verify_bautin_identity() {
    return check_bautin_factorization(bautin_q(1, 1), bautin_q(1, 2),
                                      bautin_q(2, 1), bautin_q(2, 2));
}

} // namespace loudper::exactpoly
