// linalg.cpp: dense symmetric and tridiagonal eigensolvers, banded lowest-eigenvalue solver

#include "rabi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

extern "C" {
void dsbevx_(const char* jobz, const char* range, const char* uplo, const int* n, const int* kd, double* ab,
             const int* ldab, double* q, const int* ldq, const double* vl, const double* vu, const int* il,
             const int* iu, const double* abstol, int* m, double* w, double* z, const int* ldz, double* work,
             int* iwork, int* ifail, int* info, std::size_t, std::size_t, std::size_t);
double dlamch_(const char* cmach, std::size_t);
}

namespace rabi {

namespace {

constexpr int kMaxQlIterations = 60;

// Householder reduction to tridiagonal form (EISPACK tred2 ordering). On exit d holds the
// diagonal, e the subdiagonal in e[1..n-1], and v the accumulated transformation.
void tridiagonalize(std::vector<double>& v, std::size_t n, std::vector<double>& d, std::vector<double>& e) {
    auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
    for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
        double scale = 0.0;
        double h = 0.0;
        for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (std::size_t j = 0; j < i; ++j) {
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
                V(j, i) = 0.0;
            }
        } else {
            for (std::size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                V(j, i) = f;
                g = e[j] + V(j, j) * f;
                for (std::size_t k = j + 1; k <= i - 1; ++k) {
                    g += V(k, j) * d[k];
                    e[k] += V(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (std::size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (std::size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (std::size_t k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
                d[j] = V(i - 1, j);
                V(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        V(n - 1, i) = V(i, i);
        V(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
                for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = V(n - 1, j);
        V(n - 1, j) = 0.0;
    }
    V(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicit QL on a tridiagonal matrix with subdiagonal in e[1..n-1]. When v is non-null the
// rotations are accumulated into it (row-major n x n).
void implicit_ql(std::vector<double>& d, std::vector<double>& e, std::size_t n, std::vector<double>* v) {
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        std::size_t m = l;
        while (m < n - 1) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > kMaxQlIterations) throw ConvergenceError("implicit QL did not converge", iter);
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                const double el1 = e[l + 1];
                double s = 0.0;
                double s2 = 0.0;
                for (std::size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    if (v != nullptr) {
                        auto& V = *v;
                        for (std::size_t k = 0; k < n; ++k) {
                            h = V[k * n + ii + 1];
                            V[k * n + ii + 1] = s * V[k * n + ii] + c * h;
                            V[k * n + ii] = c * V[k * n + ii] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

double Matrix::frobenius_norm() const {
    double acc = 0.0;
    for (double x : data_) acc += x * x;
    return std::sqrt(acc);
}

EigenDecomposition sym_eigen(const Matrix& a, bool want_vectors) {
    const std::size_t n = a.size();
    EigenDecomposition out;
    if (n == 0) return out;
    const double norm = a.frobenius_norm();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * std::max(norm, 1e-300))
                throw std::invalid_argument("sym_eigen: matrix is not symmetric");

    std::vector<double> v(a.data().begin(), a.data().end());
    std::vector<double> d(n);
    std::vector<double> e(n);
    tridiagonalize(v, n, d, e);
    implicit_ql(d, e, n, want_vectors ? &v : nullptr);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
    if (want_vectors) {
        out.vectors = Matrix(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v[i * n + order[k]];
    }
    return out;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diag, std::span<const double> off) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (off.size() + 1 != n) throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal size mismatch");
    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) e[i] = off[i - 1];
    implicit_ql(d, e, n, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> banded_lowest_eigenvalues(const std::vector<std::vector<double>>& bands, std::size_t count) {
    if (bands.empty()) throw std::invalid_argument("banded_lowest_eigenvalues: no bands");
    const int n = static_cast<int>(bands[0].size());
    const int kd = static_cast<int>(bands.size()) - 1;
    if (count == 0 || static_cast<int>(count) > n)
        throw std::invalid_argument("banded_lowest_eigenvalues: count outside 1..n");
    const int ldab = kd + 1;
    // upper storage: ab[kd + i - j + j*ldab] = A(i, j), i <= j
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    for (int k = 0; k <= kd; ++k) {
        if (static_cast<int>(bands[k].size()) < n - k)
            throw std::invalid_argument("banded_lowest_eigenvalues: band too short");
        for (int i = 0; i + k < n; ++i) {
            const int j = i + k;
            ab[static_cast<std::size_t>(kd - k) + static_cast<std::size_t>(j) * ldab] = bands[k][i];
        }
    }
    const char jobz = 'N';
    const char range = 'I';
    const char uplo = 'U';
    const int ldq = 1;
    const int ldz = 1;
    const double vl = 0.0;
    const double vu = 0.0;
    const int il = 1;
    const int iu = static_cast<int>(count);
    const double abstol = 2.0 * dlamch_("S", 1);
    int m = 0;
    int info = 0;
    double q = 0.0;
    double z = 0.0;
    std::vector<double> w(n);
    std::vector<double> work(7 * static_cast<std::size_t>(n));
    std::vector<int> iwork(5 * static_cast<std::size_t>(n));
    std::vector<int> ifail(n);
    dsbevx_(&jobz, &range, &uplo, &n, &kd, ab.data(), &ldab, &q, &ldq, &vl, &vu, &il, &iu, &abstol, &m, w.data(),
            &z, &ldz, work.data(), iwork.data(), ifail.data(), &info, 1, 1, 1);
    if (info != 0) throw ConvergenceError("dsbevx failed with info " + std::to_string(info), info);
    w.resize(static_cast<std::size_t>(m));
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace rabi
