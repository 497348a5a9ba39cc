#include "repstrata/layering.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace repstrata {

DimVec3 DimVec3::from_layering(const Layering& l) {
    auto v = l.single_values();
    if (v.size() != 3) throw DimensionError("layering does not have 3 layers");
    return {v[0], v[1], v[2]};
}

bool DimVec3::operator<(const DimVec3& o) const {
    if (d0 != o.d0) return d0 < o.d0;
    if (d1 != o.d1) return d1 < o.d1;
    return d2 < o.d2;
}

std::string DimVec3::str() const {
    return "(" + std::to_string(d0) + "," + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

bool dominance_leq(const DimVec3& u, const DimVec3& v) {
    return u.d0 <= v.d0 && u.d0 + u.d1 <= v.d0 + v.d1 && u.total() <= v.total();
}

bool theta_leq(const ThetaPair& a, const ThetaPair& b) {
    return dominance_leq(a.rad, b.rad) && dominance_leq(a.soc, b.soc);
}

bool rad_nonempty(int n, const DimVec3& d) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (d.d0 < 0 || d.d1 < 0 || d.d2 < 0) return false;
    return d.d1 <= static_cast<std::int64_t>(n) * d.d0 &&
           static_cast<std::int64_t>(n) * d.d2 <= static_cast<std::int64_t>(n * n - 1) * d.d1;
}

ExistenceVerdict existence_check(int n, const DimVec3& d) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (d.d1 > static_cast<std::int64_t>(n) * d.d0) {
        std::ostringstream os;
        os << "d1 ≤ n·d0 violated (" << d.d1 << " > " << n * d.d0 << ")";
        return {false, os.str()};
    }
    if (static_cast<std::int64_t>(n) * d.d2 > static_cast<std::int64_t>(n * n - 1) * d.d1) {
        std::ostringstream os;
        os << "n·d2 ≤ (n²−1)·d1 violated (" << n * d.d2 << " > "
           << (n * n - 1) * d.d1 << ")";
        return {false, os.str()};
    }
    return {true, ""};
}

std::int64_t tits_q(int n, std::int64_t d1, std::int64_t d2) {
    return d1 * d1 + d2 * d2 - static_cast<std::int64_t>(n) * d1 * d2;
}

std::vector<std::pair<int, int>> root_generators(int n) {
    std::vector<std::pair<int, int>> g;
    for (int k = 0; k <= n - 1; ++k) g.emplace_back(1, k);
    for (int m = 2; m <= n; ++m) g.emplace_back(m, m * n - 1);
    return g;
}

namespace {

bool valid_pair(int n, long d1, long d2) {
    return d1 >= 0 && d2 >= 0 && static_cast<std::int64_t>(n) * d2 <= static_cast<std::int64_t>(n * n - 1) * d1;
}

// bounded exhaustive fallback: coin-problem DP over the generators
std::optional<std::vector<std::pair<int, int>>> decompose_exhaustive(int n, int d1, int d2) {
    auto gens = root_generators(n);
    // reachable[a][b] = index of a generator usable as the last step
    std::vector<std::vector<int>> step(d1 + 1, std::vector<int>(d2 + 1, -2));
    step[0][0] = -1;
    for (int a = 0; a <= d1; ++a) {
        for (int b = 0; b <= d2; ++b) {
            if (step[a][b] != -2) continue;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                int pa = a - gens[g].first, pb = b - gens[g].second;
                if (pa >= 0 && pb >= 0 && step[pa][pb] != -2) {
                    step[a][b] = static_cast<int>(g);
                    break;
                }
            }
        }
    }
    if (step[d1][d2] == -2) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    int a = d1, b = d2;
    while (!(a == 0 && b == 0)) {
        auto g = gens[step[a][b]];
        out.push_back(g);
        a -= g.first;
        b -= g.second;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::pair<int, int>> root_decompose(int n, int d1, int d2) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (!valid_pair(n, d1, d2))
        throw DecompositionError("pair (" + std::to_string(d1) + "," + std::to_string(d2) +
                                 ") violates n*d2 <= (n^2-1)*d1");
    // greedy along the minimal-counterexample recursion; every step must
    // keep the inequality, otherwise fall back to exhaustive search
    std::vector<std::pair<int, int>> out;
    long a = d1, b = d2;
    bool greedy_ok = true;
    auto take = [&](int ga, int gb) {
        a -= ga;
        b -= gb;
        out.emplace_back(ga, gb);
        if (!valid_pair(n, a, b)) greedy_ok = false;
    };
    while (greedy_ok && b > n * n - 1) take(n, n * n - 1);
    while (greedy_ok && a > n) take(1, 0);
    while (greedy_ok && !(a == 0 && b == 0)) {
        if (a <= 0) {
            greedy_ok = false;
        } else if (a == 1) {
            if (b <= n - 1) take(1, static_cast<int>(b));
            else greedy_ok = false;
        } else if (b == n * a - 1) {
            take(static_cast<int>(a), static_cast<int>(b));
        } else if (b >= n) {
            take(1, n - 1);
        } else {
            take(1, static_cast<int>(b)); // then (a-1) copies of (1,0)
        }
    }
    if (greedy_ok && a == 0 && b == 0) {
        std::sort(out.begin(), out.end());
        return out;
    }
    auto fallback = decompose_exhaustive(n, d1, d2);
    if (!fallback)
        throw DecompositionError("no decomposition of (" + std::to_string(d1) + "," +
                                 std::to_string(d2) + ") into root generators");
    return *fallback;
}

int h0_generic(int n, const DimVec3& d) {
    if (!rad_nonempty(n, d)) throw EmptyStratumError("stratum " + d.str() + " is empty");
    return std::max(d.d0 - (n * d.d1 - d.d2), 0);
}

int h1_generic(int n, const DimVec3& d) {
    if (!rad_nonempty(n, d)) throw EmptyStratumError("stratum " + d.str() + " is empty");
    return std::max(d.d1 - n * d.d2, 0);
}

namespace {

// (a, n(a-1), (n^2-1)(a-1)) for some a >= 2
std::optional<int> exceptional_first(int n, const DimVec3& d) {
    if (d.d1 % n != 0) return std::nullopt;
    int a = d.d1 / n + 1;
    if (a < 2) return std::nullopt;
    if (d.d0 == a && d.d2 == (n * n - 1) * (a - 1)) return a;
    return std::nullopt;
}

// ((n^2-1)(a-1), n(a-1)+1, a-1) for some a >= 2
std::optional<int> exceptional_second(int n, const DimVec3& d) {
    int a = d.d2 + 1;
    if (a < 2) return std::nullopt;
    if (d.d1 == n * (a - 1) + 1 && d.d0 == (n * n - 1) * (a - 1)) return a;
    return std::nullopt;
}

DimVec3 corollary_value(int n, const DimVec3& d, int h) {
    if ((n * n - 1) * d.d2 >= d.d0) return {d.d2 + h, d.d1 - h, d.d0};
    return {d.d2 + h, d.d1 - h + d.d0 - (n * n - 1) * d.d2, (n * n - 1) * d.d2};
}

} // namespace

GenericLayering generic_socdim(int n, const DimVec3& d) {
    if (!rad_nonempty(n, d)) throw EmptyStratumError("stratum " + d.str() + " is empty");
    // semisimple stratum is a single point whose socle layering is itself
    if (d.d1 == 0) return {DimVec3{d.d0, 0, 0}, false, false};
    const int h = std::max(d.d1 - n * d.d2, 0);
    if (auto a = exceptional_first(n, d)) {
        return {DimVec3{(n * n - 1) * (*a - 1), n * (*a - 1) + 1, *a - 1}, true, false};
    }
    if (auto a = exceptional_second(n, d)) {
        DimVec3 row{*a, n * (*a - 1), (n * n - 1) * (*a - 1)};
        bool conflict = h > 0 && !(corollary_value(n, d, h) == row);
        return {row, true, conflict};
    }
    if (h > 0) return {corollary_value(n, d, h), false, false};
    return {d.reversed(), false, false};
}

GenericLayering generic_raddim(int n, const DimVec3& d) {
    return generic_socdim(n, d);
}

bool fixed_point_check(int n, const DimVec3& d) {
    if (!rad_nonempty(n, d)) throw EmptyStratumError("stratum " + d.str() + " is empty");
    DimVec3 dsoc = generic_socdim(n, d).value;
    if (!rad_nonempty(n, dsoc)) return false;
    DimVec3 drad = generic_raddim(n, dsoc).value;
    return drad == d;
}

ComponentReport components(int n, int d) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (d < 0) throw ParameterError("need d >= 0");
    ComponentReport report;
    report.n = n;
    report.d = d;
    std::vector<std::pair<DimVec3, bool>> found; // layering, exceptional

    for (int d0 = 0; d0 <= d; ++d0) {
        for (int d1 = 0; d1 + d0 <= d; ++d1) {
            int d2 = d - d0 - d1;
            if (d1 > n * d0) continue;
            if (d1 > n * d2) continue;
            if (d2 > n * d1 - d0) continue;
            if (d0 > n * d1 - d2) continue;
            found.push_back({{d0, d1, d2}, false});
        }
    }

    if (d >= 1 && (d - 1) % (n * n + n) == 0) {
        int a = (d - 1) / (n * n + n) + 1;
        DimVec3 e1{a, n * (a - 1), (n * n - 1) * (a - 1)};
        DimVec3 e2{(n * n - 1) * (a - 1), n * (a - 1) + 1, a - 1};
        if (a >= 2) {
            found.push_back({e1, true});
            found.push_back({e2, true});
        } else {
            // a = 1 degenerates: e1 = (1,0,0) is the simple module and is
            // kept; e2 = (0,1,0) is not a radical layering of anything
            found.push_back({e1, true});
            report.warnings.push_back("excluded degenerate exceptional vector " + e2.str() +
                                      " (a = 1): d1 <= n*d0 fails");
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    for (const auto& [lay, exc] : found) {
        ComponentEntry e;
        e.layering = lay;
        e.exceptional = exc;
        e.generic_soc = generic_socdim(n, lay).value;
        e.h0 = h0_generic(n, lay);
        e.h1 = h1_generic(n, lay);
        e.root_witness = root_decompose(n, lay.d1, lay.d2);
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string ComponentReport::table() const {
    std::ostringstream os;
    os << "components n=" << n << " d=" << d << "\n";
    os << "  d0  d1  d2  exc  generic_socdim  h0  h1\n";
    for (const auto& e : entries) {
        os << "  " << e.layering.d0 << "   " << e.layering.d1 << "   " << e.layering.d2 << "   "
           << (e.exceptional ? "*" : " ") << "    " << e.generic_soc.str() << "  " << e.h0 << "   "
           << e.h1 << "\n";
    }
    for (const auto& w : warnings) os << "  note: " << w << "\n";
    if (entries.empty()) os << "  (empty)\n";
    return os.str();
}

std::vector<RootPoint> root_region(int n, int maxCoord) {
    auto gens = root_generators(n);
    std::vector<RootPoint> out;
    for (int d1 = 0; d1 <= maxCoord; ++d1) {
        for (int d2 = 0; d2 <= maxCoord; ++d2) {
            std::int64_t q = tits_q(n, d1, d2);
            if (q > 1) continue;
            bool gen = std::find(gens.begin(), gens.end(), std::make_pair(d1, d2)) != gens.end();
            bool excl = (d1 == 1 && d2 == n);
            out.push_back({d1, d2, q, gen, excl});
        }
    }
    return out;
}

std::string root_region_csv(const std::vector<RootPoint>& pts) {
    std::ostringstream os;
    os << "d1,d2,q,is_generator,is_excluded\n";
    for (const auto& p : pts)
        os << p.d1 << "," << p.d2 << "," << p.q << "," << (p.is_generator ? 1 : 0) << ","
           << (p.is_excluded ? 1 : 0) << "\n";
    return os.str();
}

} // namespace repstrata
