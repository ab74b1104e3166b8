#include "tamearith/group.hpp"

#include <algorithm>
#include <numeric>

namespace tamearith {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> mul_table)
    : name_(std::move(name)), mul_(std::move(mul_table)) {
    order_ = static_cast<long>(mul_.size());
    require(order_ >= 1, errc::descriptor_invalid, "group must be nonempty");
    require(order_ <= kOrderCap, errc::computation_overflow,
            "group order exceeds configured bound " + std::to_string(kOrderCap));
    for (const auto& row : mul_) {
        require(static_cast<long>(row.size()) == order_, errc::descriptor_invalid,
                "multiplication table is not square");
        for (int v : row)
            require(v >= 0 && v < order_, errc::descriptor_invalid,
                    "multiplication table entry out of range");
    }

    // identity: the unique e with e*x = x*e = x
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
        bool ok = true;
        for (int x = 0; x < order_ && ok; ++x) ok = mul_[e][x] == x && mul_[x][e] == x;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    require(identity_ >= 0, errc::descriptor_invalid, "no identity element in table");

    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul_[a][b] == identity_) {
                require(mul_[b][a] == identity_, errc::descriptor_invalid,
                        "one-sided inverse in table");
                inv_[a] = b;
                break;
            }
        }
        require(inv_[a] >= 0, errc::descriptor_invalid, "element without inverse");
    }

    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                require(mul_[mul_[a][b]][c] == mul_[a][mul_[b][c]], errc::descriptor_invalid,
                        "multiplication table not associative");

    elt_order_.assign(order_, 0);
    exponent_ = 1;
    for (int a = 0; a < order_; ++a) {
        long o = 1;
        int x = a;
        while (x != identity_) {
            x = mul_[x][a];
            ++o;
            require(o <= order_, errc::descriptor_invalid, "element order exceeds group order");
        }
        elt_order_[a] = o;
        exponent_ = std::lcm(exponent_, o);
    }
    require(order_ % exponent_ == 0, errc::descriptor_invalid,
            "exponent does not divide group order");
}

int FiniteGroup::power(int a, long k) const {
    long o = elt_order_[a];
    long r = ((k % o) + o) % o;
    int out = identity_;
    int acc = a;
    while (r) {
        if (r & 1) out = mul_[out][acc];
        acc = mul_[acc][acc];
        r >>= 1;
    }
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

namespace {
std::vector<std::vector<int>> table_from_op(long n, int (*op)(int, int, long)) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a][b] = op(static_cast<int>(a), static_cast<int>(b), n);
    return t;
}
} // namespace

FiniteGroup FiniteGroup::cyclic(long n) {
    auto t = table_from_op(n, [](int a, int b, long m) { return static_cast<int>((a + b) % m); });
    return FiniteGroup("C" + std::to_string(n), t);
}

FiniteGroup FiniteGroup::cyclic6() { return cyclic(6); }

FiniteGroup FiniteGroup::klein_four() {
    // indices as bit pairs: 0, 1, 2, 3 with xor composition
    auto t = table_from_op(4, [](int a, int b, long) { return a ^ b; });
    return FiniteGroup("C2xC2", t);
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2} in lexicographic one-line order
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int comp[3];
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
            for (int c = 0; c < 6; ++c)
                if (comp[0] == perms[c][0] && comp[1] == perms[c][1] && comp[2] == perms[c][2])
                    t[a][b] = c;
        }
    return FiniteGroup("S3", t);
}

FiniteGroup FiniteGroup::dihedral4() {
    // elements r^a s^b, index = a + 4*b; s r s = r^{-1}
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + a2*(-1)^b1} s^{b1+b2}
                    int a = ((a1 + (b1 ? -a2 : a2)) % 4 + 4) % 4;
                    int b = (b1 + b2) % 2;
                    t[a1 + 4 * b1][a2 + 4 * b2] = a + 4 * b;
                }
    return FiniteGroup("D4", t);
}

FiniteGroup FiniteGroup::quaternion8() {
    // order: 1, -1, i, -i, j, -j, k, -k
    // quaternion units encoded as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto enc = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    auto axis_of = [](int idx) { return idx / 2; };
    auto sign_of = [](int idx) { return idx % 2 == 0 ? 1 : -1; };
    // multiplication of unit quaternions
    static const int ax_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ax = ax_table[axis_of(x)][axis_of(y)];
            int sg = sign_of(x) * sign_of(y) * sg_table[axis_of(x)][axis_of(y)];
            t[x][y] = enc(sg, ax);
        }
    return FiniteGroup("Q8", t);
}

ConjClassData conjugacy_classes(const FiniteGroup& g) {
    long n = g.order();
    ConjClassData out;
    out.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (out.class_of[x] >= 0) continue;
        std::vector<int> cls;
        for (int a = 0; a < n; ++a) {
            int y = g.conj(a, x);
            if (out.class_of[y] < 0) {
                out.class_of[y] = static_cast<int>(out.classes.size());
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.representatives.push_back(cls.front());
        out.classes.push_back(std::move(cls));
    }
    out.inverse_class.resize(out.classes.size());
    for (size_t c = 0; c < out.classes.size(); ++c)
        out.inverse_class[c] = out.class_of[g.inv(out.representatives[c])];

    size_t total = 0;
    for (const auto& c : out.classes) total += c.size();
    require(total == static_cast<size_t>(n), errc::internal, "class partition broken");
    return out;
}

Subgroup make_subgroup(std::shared_ptr<const FiniteGroup> parent, std::vector<int> elements,
                       const std::string& name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    require(!elements.empty(), errc::not_a_subgroup, "empty subset");
    Subgroup sub;
    sub.parent = parent;
    sub.elements = elements;
    for (size_t i = 0; i < elements.size(); ++i) {
        int e = elements[i];
        require(e >= 0 && e < parent->order(), errc::not_a_subgroup, "element out of range");
        sub.to_local[e] = static_cast<int>(i);
    }
    require(sub.to_local.count(parent->identity()), errc::not_a_subgroup, "identity missing");
    std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
    for (size_t i = 0; i < elements.size(); ++i) {
        require(sub.to_local.count(parent->inv(elements[i])), errc::not_a_subgroup,
                "subset not closed under inverses");
        for (size_t j = 0; j < elements.size(); ++j) {
            int prod = parent->mul(elements[i], elements[j]);
            auto it = sub.to_local.find(prod);
            require(it != sub.to_local.end(), errc::not_a_subgroup,
                    "subset not closed under multiplication");
            table[i][j] = it->second;
        }
    }
    sub.to_parent = elements;
    sub.group = std::make_shared<FiniteGroup>(name, std::move(table));
    return sub;
}

} // namespace tamearith
