#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qs {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class CycField;

// Element of Q[x]/Phi_N stored as integer numerators over one positive
// denominator. An empty numerator vector is the zero element.
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(const CycField* f);
    CycNum(const CycField* f, long v);

    const CycField* field() const { return F_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    // dense rational coefficients, length phi(N)
    std::vector<mpq_class> coeffs() const;
    static CycNum from_coeffs(const CycField* f, const std::vector<mpq_class>& c);

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum inv() const;
    CycNum scaled(const mpq_class& s) const;
    // add s * o in place
    void axpy(const CycNum& s, const CycNum& o);

    std::string str() const;

private:
    friend class CycField;
    void normalize();
    const CycField* F_ = nullptr;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

class CycField {
public:
    // Fields are interned; the returned pointer stays valid for the process.
    static const CycField* get(int l, int k, int varpi);

    int l() const { return l_; }
    int k() const { return k_; }
    int varpi() const { return w_; }
    int N() const { return N_; }
    int phi() const { return phi_; }
    const std::vector<long>& cyclotomic_poly() const { return Phi_; }

    CycNum zero() const { return CycNum(this); }
    CycNum one() const { return CycNum(this, 1); }
    CycNum integer(long v) const { return CycNum(this, v); }
    // xi^e for the ambient primitive N-th root xi
    CycNum xi_pow(long e) const;
    // zeta^q = xi^(k * 2 varpi q); q = num/den with 2 varpi q integral
    CycNum zeta_pow(long num, long den = 1) const;
    // [a] = 1 - zeta^(-2a), optionally with zeta_i = zeta^d
    CycNum q_bracket(long a, long d = 1) const;

    static std::vector<long> cyclotomic(int n);

private:
    CycField(int l, int k, int w);
    friend class CycNum;
    void reduce(std::vector<mpz_class>& p) const;
    int l_, k_, w_, N_, phi_;
    std::vector<long> Phi_;
    std::vector<std::vector<long>> powers_;  // x^e mod Phi for 0 <= e < N
};

}  // namespace qs
