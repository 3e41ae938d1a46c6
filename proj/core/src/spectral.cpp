#include "fracext/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdlib>

#include "fracext/combinatorics.hpp"
#include "fracext/errors.hpp"
#include "fracext/graphs.hpp"

namespace fracext {

double second_eigenvalue(int p, int q) {
    if (binomial(p, q) > 5000) throw precondition_error("second_eigenvalue: C(p,q) <= 5000");
    Graph g = kneser(p, q);
    int n = g.vertex_count();
    double deg = (double)binomial_ll(p - q, q);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0 / deg;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    std::vector<double> abse(n);
    for (int i = 0; i < n; ++i) abse[i] = std::abs(solver.eigenvalues()[i]);
    std::sort(abse.rbegin(), abse.rend());
    return abse[1];
}

std::vector<SpectrumEntry> kneser_spectrum_certified(int p, int q) {
    if (p <= 2 * q) throw precondition_error("spectrum certificate: p > 2q required");
    Graph g = kneser(p, q);
    int n = g.vertex_count();

    std::vector<Integer> lambda(q + 1);
    for (int i = 0; i <= q; ++i) {
        lambda[i] = binomial(p - q - i, q - i);
        if (i % 2) lambda[i] = -lambda[i];
    }
    for (int i = 0; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            if (lambda[i] == lambda[j])
                throw std::logic_error("spectrum certificate: repeated candidate eigenvalue");

    using Mat = std::vector<std::vector<Integer>>;
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat c(n, std::vector<Integer>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                const Integer& f = a[i][l];
                for (int j = 0; j < n; ++j)
                    if (b[l][j] != 0) c[i][j] += f * b[l][j];
            }
        return c;
    };
    Mat adj(n, std::vector<Integer>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u][v] = 1;

    // annihilation: prod_i (A - lambda_i I) == 0
    Mat acc(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) acc[i][i] = 1;
    for (int i = 0; i <= q; ++i) {
        Mat factor = adj;
        for (int r = 0; r < n; ++r) factor[r][r] -= lambda[i];
        acc = mul(acc, factor);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (acc[i][j] != 0)
                throw std::logic_error("spectrum certificate: annihilation failed");

    // multiplicities from traces of A^0..A^q (Vandermonde in the lambdas)
    std::vector<Integer> traces(q + 1);
    Mat pw(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) pw[i][i] = 1;
    for (int e = 0; e <= q; ++e) {
        Integer tr = 0;
        for (int i = 0; i < n; ++i) tr += pw[i][i];
        traces[e] = tr;
        if (e < q) pw = mul(pw, adj);
    }
    // solve sum_i m_i lambda_i^e = traces[e] by exact Gaussian elimination
    int dim = q + 1;
    std::vector<std::vector<Rational>> sys(dim, std::vector<Rational>(dim + 1));
    for (int e = 0; e < dim; ++e) {
        for (int i = 0; i < dim; ++i) {
            Integer pw_l = 1;
            for (int t = 0; t < e; ++t) pw_l *= lambda[i];
            sys[e][i] = Rational(pw_l);
        }
        sys[e][dim] = Rational(traces[e]);
    }
    for (int col = 0; col < dim; ++col) {
        int piv = -1;
        for (int r = col; r < dim; ++r)
            if (sys[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("spectrum certificate: singular system");
        std::swap(sys[col], sys[piv]);
        for (int r = 0; r < dim; ++r) {
            if (r == col || sys[r][col] == 0) continue;
            Rational f = sys[r][col] / sys[col][col];
            for (int j = col; j <= dim; ++j) sys[r][j] -= f * sys[col][j];
        }
    }
    std::vector<SpectrumEntry> out;
    Integer total = 0;
    for (int i = 0; i < dim; ++i) {
        Rational m = sys[i][dim] / sys[i][i];
        m.canonicalize();
        if (m.get_den() != 1 || m < 0)
            throw std::logic_error("spectrum certificate: bad multiplicity");
        out.push_back({lambda[i], m.get_num()});
        total += m.get_num();
    }
    if (total != n) throw std::logic_error("spectrum certificate: multiplicities do not sum to n");
    return out;
}

}  // namespace fracext
