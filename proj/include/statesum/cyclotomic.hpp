#pragma once
/// Exact arithmetic in the cyclotomic field Q(zeta_m).  Elements are stored on
/// the power basis 1, zeta, ..., zeta^(phi(m)-1) with exact rational
/// coefficients, reduced modulo the m-th cyclotomic polynomial.
#include <gmpxx.h>

#include <string>
#include <vector>

namespace statesum {

/// phi(m).
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, ascending degree.
std::vector<mpz_class> cyclotomic_polynomial(int m);

class Cyclotomic {
  public:
    /// Zero in Q(zeta_m).
    explicit Cyclotomic(int m = 1);

    int order() const { return m_; }
    int degree() const { return (int)coeff_.size(); }
    const std::vector<mpq_class>& coefficients() const { return coeff_; }

    static Cyclotomic zero(int m) { return Cyclotomic(m); }
    static Cyclotomic from_rational(int m, const mpq_class& q);
    static Cyclotomic one(int m) { return from_rational(m, 1); }
    /// zeta_m^k (k may be negative).
    static Cyclotomic root_power(int m, long k);

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator*(const mpq_class& q) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_rational() const;
    /// The field involution zeta -> zeta^(-1) (complex conjugation).
    Cyclotomic conjugate() const;
    /// Re-embed into Q(zeta_m2); m2 must be a multiple of m_.
    Cyclotomic embed(int m2) const;

    /// Canonical exact rendering, e.g. "3 + 6*z3" or "-1/2".
    std::string to_string() const;
    /// Decimal approximation "a + bi" of the standard embedding zeta = e^(2*pi*i/m).
    std::string approx_string(int digits = 6) const;
    double approx_re() const;
    double approx_im() const;

  private:
    int m_;
    std::vector<mpq_class> coeff_;  ///< size phi(m)

    void add_power(long k, const mpq_class& q);  ///< add q * zeta^k (k reduced mod m)
    friend Cyclotomic root_power_sum(int m, const std::vector<mpz_class>& counts);
};

/// Sum of counts[e] * zeta_m^e for e in [0, m).  Core of rendering state sums.
Cyclotomic root_power_sum(int m, const std::vector<mpz_class>& counts);

}  // namespace statesum
