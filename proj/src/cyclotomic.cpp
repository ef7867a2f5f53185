#include "qsheaf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qs {

namespace {

using IPoly = std::vector<long>;

IPoly pmul(const IPoly& a, const IPoly& b) {
    IPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division by a monic polynomial
IPoly pdiv(IPoly a, const IPoly& b) {
    size_t db = b.size() - 1;
    IPoly q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        long c = a[i];
        q[i - db] = c;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

int mobius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<long> CycField::cyclotomic(int n) {
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    IPoly num{1}, den{1};
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 0) continue;
        IPoly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        if (mu == 1)
            num = pmul(num, f);
        else
            den = pmul(den, f);
    }
    IPoly q = pdiv(num, den);
    if (q.back() < 0)
        for (auto& c : q) c = -c;
    return q;
}

const CycField* CycField::get(int l, int k, int varpi) {
    if (l <= 1) throw ParameterError("l must exceed 1");
    if (varpi < 1) throw ParameterError("varpi must be positive");
    if (std::gcd(l, std::abs(k)) != 1) throw ParameterError("k must be coprime to l");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<CycField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    int kk = ((k % (2 * varpi * l)) + 2 * varpi * l) % (2 * varpi * l);
    auto key = std::make_tuple(l, kk, varpi);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    auto* f = new CycField(l, kk, varpi);
    cache.emplace(key, std::unique_ptr<CycField>(f));
    return f;
}

CycField::CycField(int l, int k, int w) : l_(l), k_(k), w_(w) {
    N_ = 2 * w * l;
    Phi_ = cyclotomic(N_);
    phi_ = static_cast<int>(Phi_.size()) - 1;
    powers_.assign(N_, std::vector<long>(phi_, 0));
    std::vector<long> cur(phi_, 0);
    cur[0] = 1;
    for (int e = 0; e < N_; ++e) {
        powers_[e] = cur;
        // multiply by x
        long top = cur[phi_ - 1];
        for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top)
            for (int i = 0; i < phi_; ++i) cur[i] -= top * Phi_[i];
    }
}

void CycField::reduce(std::vector<mpz_class>& p) const {
    for (size_t e = p.size(); e-- > static_cast<size_t>(phi_);) {
        if (p[e] == 0) continue;
        const auto& pw = powers_[e % N_];
        for (int i = 0; i < phi_; ++i)
            if (pw[i]) p[i] += p[e] * pw[i];
    }
    p.resize(phi_);
}

CycNum CycField::xi_pow(long e) const {
    e %= N_;
    if (e < 0) e += N_;
    CycNum r(this);
    r.num_.resize(phi_);
    for (int i = 0; i < phi_; ++i) r.num_[i] = powers_[e][i];
    r.normalize();
    return r;
}

CycNum CycField::zeta_pow(long num, long den) const {
    if (den == 0) throw ParameterError("zero denominator");
    long t = 2L * w_ * num;
    if (t % den != 0) throw std::domain_error("exponent not in (1/2varpi)Z");
    long e = (t / den) % N_;
    e = (e * k_) % N_;
    return xi_pow(e);
}

CycNum CycField::q_bracket(long a, long d) const {
    return one() - zeta_pow(-2 * a * d);
}

CycNum::CycNum(const CycField* f) : F_(f) {}

CycNum::CycNum(const CycField* f, long v) : F_(f) {
    if (v != 0) {
        num_.assign(f->phi(), 0);
        num_[0] = v;
    }
}

bool CycNum::is_one() const {
    if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

void CycNum::normalize() {
    bool nz = false;
    for (auto& c : num_)
        if (c != 0) {
            nz = true;
            break;
        }
    if (!nz) {
        num_.clear();
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<mpq_class> CycNum::coeffs() const {
    std::vector<mpq_class> c(F_ ? F_->phi() : 0);
    if (num_.empty()) return c;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = mpq_class(num_[i], den_);
        c[i].canonicalize();
    }
    return c;
}

CycNum CycNum::from_coeffs(const CycField* f, const std::vector<mpq_class>& c) {
    CycNum r(f);
    mpz_class den = 1;
    for (auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    r.num_.assign(f->phi(), 0);
    for (size_t i = 0; i < c.size() && i < r.num_.size(); ++i)
        r.num_[i] = c[i].get_num() * (den / c[i].get_den());
    r.den_ = den;
    r.normalize();
    return r;
}

static void check_same(const CycField* a, const CycField* b) {
    if (a != b && a && b) throw ParameterError("field mismatch");
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.num_.empty()) return *this;
    if (!F_) F_ = o.F_;
    check_same(F_, o.F_);
    if (num_.empty()) {
        num_ = o.num_;
        den_ = o.den_;
        return *this;
    }
    if (den_ == o.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
        if (den_ != 1) {
            normalize();
            return *this;
        }
    } else {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    for (auto& c : num_)
        if (c != 0) return *this;
    num_.clear();
    return *this;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator+(const CycNum& o) const {
    CycNum r = *this;
    r += o;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    CycNum r = *this;
    r -= o;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    const CycField* f = F_ ? F_ : o.F_;
    check_same(F_, o.F_);
    CycNum r(f);
    if (num_.empty() || o.num_.empty()) return r;
    int n = f->phi();
    std::vector<mpz_class> p(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (o.num_[j] != 0) mpz_addmul(p[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    f->reduce(p);
    r.num_ = std::move(p);
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

void CycNum::axpy(const CycNum& s, const CycNum& o) { *this += s * o; }

CycNum CycNum::scaled(const mpq_class& s) const {
    CycNum r = *this;
    if (r.num_.empty()) return r;
    if (s == 0) return CycNum(F_);
    for (auto& c : r.num_) c *= s.get_num();
    r.den_ *= s.get_den();
    r.normalize();
    return r;
}

bool CycNum::operator==(const CycNum& o) const {
    if (num_.empty() || o.num_.empty()) return num_.empty() && o.num_.empty();
    return den_ == o.den_ && num_ == o.num_;
}

CycNum CycNum::inv() const {
    if (num_.empty()) throw std::domain_error("division by zero in cyclotomic field");
    const CycField* f = F_;
    // extended Euclid: find s with s*a = 1 mod Phi
    QPoly a(f->phi()), b(f->Phi_.size());
    for (int i = 0; i < f->phi(); ++i) a[i] = mpq_class(num_[i], den_), a[i].canonicalize();
    for (size_t i = 0; i < b.size(); ++i) b[i] = f->Phi_[i];
    trim(a);
    // invariants: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi)
    QPoly r0 = b, r1 = a, s0{}, s1{mpq_class(1)};
    while (!(r1.size() == 1)) {
        // r0 = q r1 + rem
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        QPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t sh = rem.size() - r1.size();
            mpq_class c = rem.back() / r1.back();
            q[sh] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[sh + j] -= c * r1[j];
            rem.pop_back();
            trim(rem);
        }
        QPoly qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QPoly ns(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        trim(ns);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        if (r1.empty()) throw std::logic_error("non-invertible element: Phi_N not irreducible?");
    }
    mpq_class c = r1[0];
    std::vector<mpq_class> out(f->phi(), 0);
    // s1 may exceed degree; reduce through the field
    std::vector<mpq_class> full(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) full[i] = s1[i] / c;
    CycNum r(f);
    for (size_t i = 0; i < full.size(); ++i) {
        if (full[i] == 0) continue;
        r += f->xi_pow(static_cast<long>(i)).scaled(full[i]);
    }
    return r;
}

std::string CycNum::str() const {
    if (num_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpq_class c(num_[i], den_);
        c.canonicalize();
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

}  // namespace qs
