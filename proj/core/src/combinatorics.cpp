#include "fracext/combinatorics.hpp"

#include <algorithm>
#include <sstream>

#include "fracext/errors.hpp"

namespace fracext {

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

long long binomial_ll(int n, int k) {
    Integer b = binomial(n, k);
    if (!b.fits_slong_p()) throw precondition_error("binomial overflow");
    return b.get_si();
}

std::vector<SubsetLabel> all_subsets(int p, int q) {
    if (p < 0 || p > 64 || q < 0 || q > p) throw precondition_error("all_subsets: bad (p,q)");
    std::vector<SubsetLabel> out;
    if (q == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    while (true) {
        SubsetLabel mask = 0;
        for (int i : idx) mask |= 1ull << i;
        out.push_back(mask);
        int j = q - 1;
        while (j >= 0 && idx[j] == p - q + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (int i = j + 1; i < q; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<int> label_elements(SubsetLabel mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

SubsetLabel label_from_elements(const std::vector<int>& elements) {
    SubsetLabel mask = 0;
    for (int e : elements) {
        if (e < 1 || e > 64) throw precondition_error("label element out of [1,64]");
        mask |= 1ull << (e - 1);
    }
    return mask;
}

std::string label_to_string(SubsetLabel mask) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : label_elements(mask)) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace fracext
