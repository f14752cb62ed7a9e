#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace curves {

// The fixed variable alphabet. Everything in the analyzer lives in
// Q[x,y,z,t]; t only appears in elimination/discriminant work.
inline constexpr int kNumVars = 4;
inline constexpr char kVarNames[kNumVars] = {'x', 'y', 'z', 't'};

inline int var_index(char name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return i;
    return -1;
}

struct Monomial {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
    int operator[](int v) const { return e[v]; }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    // Exact division; caller must ensure divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) {
            m.e[i] = e[i] - o.e[i];
            if (m.e[i] < 0) throw std::invalid_argument("monomial division not exact");
        }
        return m;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, int k = 1) {
        Monomial m;
        m.e[v] = k;
        return m;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += kVarNames[i];
            if (e[i] > 1) s += '^' + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

// Graded lexicographic order with x > y > z > t.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

// Comparator putting the leading (largest) monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

} // namespace curves
