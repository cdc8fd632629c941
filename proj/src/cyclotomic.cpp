#include "statesum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace statesum {

int euler_phi(int m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    int r = m;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    if (m > 1) r -= r / m;
    return r;
}

namespace {

/// Exact division of integer polynomials (ascending coefficients), remainder must vanish.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        mpz_class c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

struct ReductionTable {
    int phi;
    /// power_rep[k] (k in [0, 2*phi-1)) = representation of x^k mod Phi_m.
    std::vector<std::vector<mpz_class>> power_rep;
};

const ReductionTable& table_for(int m) {
    static std::map<int, ReductionTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    ReductionTable t;
    t.phi = euler_phi(m);
    auto phi_m = cyclotomic_polynomial(m);
    int d = t.phi;
    // Cover both reduction of products (degree up to 2d-2) and direct root
    // powers x^k for any residue k in [0, m).
    t.power_rep.resize(std::max(2 * d - 1, m) > 0 ? std::max(2 * d - 1, m) : 1);
    // x^k for k < d is itself; for k >= d reduce with x^d = -(phi_m[0] + ... + phi_m[d-1] x^(d-1))
    // (Phi_m is monic).
    for (int k = 0; k < (int)t.power_rep.size(); ++k) {
        if (k < d) {
            t.power_rep[k].assign(d, 0);
            t.power_rep[k][k] = 1;
        } else {
            // x^k = x * x^(k-1)
            std::vector<mpz_class> prev = t.power_rep[k - 1];
            std::vector<mpz_class> cur(d, 0);
            mpz_class top = prev[d - 1];
            for (int i = d - 1; i > 0; --i) cur[i] = prev[i - 1];
            cur[0] = 0;
            for (int i = 0; i < d; ++i) cur[i] -= top * phi_m[i];
            t.power_rep[k] = std::move(cur);
        }
    }
    return cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<mpz_class> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

Cyclotomic::Cyclotomic(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
    coeff_.assign(euler_phi(m), 0);
}

Cyclotomic Cyclotomic::from_rational(int m, const mpq_class& q) {
    Cyclotomic c(m);
    c.coeff_[0] = q;
    return c;
}

void Cyclotomic::add_power(long k, const mpq_class& q) {
    k %= m_;
    if (k < 0) k += m_;
    const auto& t = table_for(m_);
    if (k < (long)t.power_rep.size()) {
        const auto& rep = t.power_rep[k];
        for (int i = 0; i < (int)coeff_.size(); ++i) coeff_[i] += q * rep[i];
        return;
    }
    // k in [2*phi-1, m): reduce x^k by repeated use of the table.
    Cyclotomic p = root_power(m_, k);
    for (int i = 0; i < (int)coeff_.size(); ++i) coeff_[i] += q * p.coeff_[i];
}

Cyclotomic Cyclotomic::root_power(int m, long k) {
    k %= m;
    if (k < 0) k += m;
    const auto& t = table_for(m);
    Cyclotomic c(m);
    if (k < (long)t.power_rep.size()) {
        for (int i = 0; i < (int)c.coeff_.size(); ++i) c.coeff_[i] = t.power_rep[k][i];
        return c;
    }
    throw std::logic_error("root_power: table does not cover residue " +
                           std::to_string(k));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic r(*this);
    for (int i = 0; i < (int)coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic r(*this);
    for (int i = 0; i < (int)coeff_.size(); ++i) r.coeff_[i] -= o.coeff_[i];
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Cyclotomic: mixed orders");
    int d = (int)coeff_.size();
    std::vector<mpq_class> conv(2 * d - 1 > 0 ? 2 * d - 1 : 1, 0);
    for (int i = 0; i < d; ++i) {
        if (coeff_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.coeff_[j] == 0) continue;
            conv[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    const auto& t = table_for(m_);
    Cyclotomic r(m_);
    for (int k = 0; k < (int)conv.size(); ++k) {
        if (conv[k] == 0) continue;
        for (int i = 0; i < d; ++i) r.coeff_[i] += conv[k] * t.power_rep[k][i];
    }
    return r;
}

Cyclotomic Cyclotomic::operator*(const mpq_class& q) const {
    Cyclotomic r(*this);
    for (auto& c : r.coeff_) c *= q;
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return m_ == o.m_ && coeff_ == o.coeff_;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::conjugate() const {
    Cyclotomic r(m_);
    for (int i = 0; i < (int)coeff_.size(); ++i)
        if (coeff_[i] != 0) r.add_power(-(long)i, coeff_[i]);
    return r;
}

Cyclotomic Cyclotomic::embed(int m2) const {
    if (m2 % m_ != 0) throw std::invalid_argument("Cyclotomic::embed: not a multiple");
    int s = m2 / m_;
    Cyclotomic r(m2);
    for (int i = 0; i < (int)coeff_.size(); ++i)
        if (coeff_[i] != 0) r.add_power((long)i * s, coeff_[i]);
    return r;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < (int)coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        mpq_class c = coeff_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1) && i > 0;
        if (!unit) os << c.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

double Cyclotomic::approx_re() const {
    double re = 0;
    for (int i = 0; i < (int)coeff_.size(); ++i)
        re += coeff_[i].get_d() * std::cos(2 * M_PI * i / m_);
    return re;
}

double Cyclotomic::approx_im() const {
    double im = 0;
    for (int i = 0; i < (int)coeff_.size(); ++i)
        im += coeff_[i].get_d() * std::sin(2 * M_PI * i / m_);
    return im;
}

std::string Cyclotomic::approx_string(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << approx_re();
    double im = approx_im();
    os << (im < 0 ? " - " : " + ") << std::fabs(im) << "i";
    return os.str();
}

Cyclotomic root_power_sum(int m, const std::vector<mpz_class>& counts) {
    if ((int)counts.size() != m) throw std::invalid_argument("root_power_sum: need m counts");
    Cyclotomic r(m);
    for (int e = 0; e < m; ++e)
        if (counts[e] != 0) r.add_power(e, mpq_class(counts[e]));
    return r;
}

}  // namespace statesum
