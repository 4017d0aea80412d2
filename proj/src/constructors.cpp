#include "fortdyn/constructors.hpp"

#include <numeric>

namespace fortdyn {

SymbolicFortSystem realize_group_sequence(int p, int q) {
    if (p < 1 || q < 1)
        raise(errc::bad_parameters, "group witness needs p >= 1 fixed points and q >= 1 lines");
    return SymbolicFortSystem{p, q};
}

FiniteDynSystem realize_finite_height_perm(int m, int i) {
    if (m < 1 || i < 0 || i > m - 1)
        raise(errc::bad_parameters, "need 1 <= m and 0 <= i <= m-1");
    std::vector<int> g(m);
    std::iota(g.begin(), g.end(), 0);
    for (int j = i; j < m; ++j) g[j] = j + 1 < m ? j + 1 : i;  // cycle the tail
    return FiniteDynSystem{m, {std::move(g)}, ActionKind::Group};
}

bool valid_step_sequence(const std::vector<int>& entries) {
    if (entries.empty() || entries[0] != 0) return false;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        int step = entries[i] - entries[i - 1];
        if (step < 0 || step > 1) return false;
    }
    return true;
}

FiniteDynSystem realize_selfmap_sequence(const std::vector<int>& seq) {
    if (!valid_step_sequence(seq))
        raise(errc::invalid_step_sequence, "sequence must start at 0 with steps in {0,1}");
    int n = static_cast<int>(seq.size());
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) {
        if (seq[i] == 0) {
            g[i] = i;
        } else {
            int t = -1;
            for (int j = 0; j < n; ++j)
                if (seq[j] < seq[i]) t = j;
            g[i] = t;
        }
    }
    return FiniteDynSystem{n, {std::move(g)}, ActionKind::Monoid};
}

std::vector<std::vector<int>> enumerate_step_sequences(int n) {
    if (n < 0 || n > 20) raise(errc::too_large, "step-sequence enumeration is guarded at n <= 20");
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << n);
    // Bit k of the counter is the k-th step; counting up is lexicographic
    // because a sequence is determined by its step vector read left to right.
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        std::vector<int> seq(n + 1, 0);
        for (int k = 0; k < n; ++k) seq[k + 1] = seq[k] + (bits >> (n - 1 - k) & 1);
        out.push_back(std::move(seq));
    }
    return out;
}

FiniteDynSystem reduce_to_finite(const ClosurePoset& p) {
    int n = p.size();
    if (n < 1) raise(errc::empty_poset, "cannot reduce an empty poset");
    FiniteDynSystem sys;
    sys.size = n;
    sys.kind = ActionKind::Monoid;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    sys.generators.push_back(id);
    for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
            if (w == k || !p.leq(w, k)) continue;
            std::vector<int> g = id;
            g[k] = w;
            sys.generators.push_back(std::move(g));
        }
    return sys;
}

}  // namespace fortdyn
