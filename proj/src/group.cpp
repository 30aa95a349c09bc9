#include "twistedlab/group.hpp"

#include <string>

namespace twistedlab {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, int order_cap) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw GroupError(GroupError::Kind::BadTable, "empty Cayley table");
    if (n > order_cap)
        throw GroupError(GroupError::Kind::OrderCapExceeded,
                         "group order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
    FiniteGroup g;
    g.order_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n)
            throw GroupError(GroupError::Kind::BadTable, "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            int v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 0 || v >= n)
                throw GroupError(GroupError::Kind::BadTable,
                                 "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
            g.table_[static_cast<std::size_t>(i) * n + j] = v;
        }
    }

    // exhaustive associativity scan, first failing triple is the witness
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
                    throw GroupError(GroupError::Kind::NotAssociative,
                                     "(x*y)*z != x*(y*z) at (" + std::to_string(x) + "," + std::to_string(y) +
                                         "," + std::to_string(z) + ")",
                                     x, y, z);

    g.identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
        if (ok) {
            g.identity_ = e;
            break;
        }
    }
    if (g.identity_ < 0) throw GroupError(GroupError::Kind::NoIdentity, "no two-sided identity");

    g.inverses_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
                g.inverses_[static_cast<std::size_t>(x)] = y;
                break;
            }
        if (g.inverses_[static_cast<std::size_t>(x)] < 0)
            throw GroupError(GroupError::Kind::NoInverse, "element " + std::to_string(x) + " has no inverse", x);
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n, int order_cap) {
    if (n < 1) throw GroupError(GroupError::Kind::BadTable, "cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return from_table(t, order_cap);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h, int order_cap) {
    const int n = g.order() * h.order();
    // index (a, b) -> a*|H| + b
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a1 = 0; a1 < g.order(); ++a1)
        for (int b1 = 0; b1 < h.order(); ++b1)
            for (int a2 = 0; a2 < g.order(); ++a2)
                for (int b2 = 0; b2 < h.order(); ++b2) {
                    int i = a1 * h.order() + b1;
                    int j = a2 * h.order() + b2;
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        g.mul(a1, a2) * h.order() + h.mul(b1, b2);
                }
    return from_table(t, order_cap);
}

FiniteGroup FiniteGroup::dihedral(int n, int order_cap) {
    if (n < 1) throw GroupError(GroupError::Kind::BadTable, "dihedral parameter must be >= 1");
    const int ord = 2 * n;
    auto idx = [n](bool flip, int k) { return (flip ? n : 0) + ((k % n) + n) % n; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(ord), std::vector<int>(static_cast<std::size_t>(ord)));
    for (int i = 0; i < ord; ++i)
        for (int j = 0; j < ord; ++j) {
            bool f1 = i >= n, f2 = j >= n;
            int a = i % n, b = j % n;
            // s r^a s = r^-a, so r^a * s r^b = s r^(b-a) and s r^a * r^b = s r^(a+b)
            int k;
            bool flip;
            if (!f1 && !f2) {
                flip = false;
                k = a + b;
            } else if (!f1 && f2) {
                flip = true;
                k = b - a;
            } else if (f1 && !f2) {
                flip = true;
                k = a + b;
            } else {
                flip = false;
                k = b - a;
            }
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = idx(flip, k);
        }
    return from_table(t, order_cap);
}

int FiniteGroup::element_order(int x) const {
    int k = 1;
    int cur = x;
    while (cur != identity_) {
        cur = mul(cur, x);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order_; ++x)
        for (int y = x + 1; y < order_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

}  // namespace twistedlab
