// Times the serial and parallel candidate scans against each other on
// synthetic programs and checks that both produce identical reports.
#include <chrono>
#include <cstdio>
#include <string>

#include "lpmln/program.hpp"
#include "lpmln/se_models.hpp"
#include "lpmln/semantics.hpp"

using namespace lpmln;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Ring of overlapping choices: alpha : x_i v x_{i+1}.  1 : x_{i+1} :- not x_i.
Program ring_program(int n) {
    Program p;
    for (int i = 0; i < n; ++i) {
        Literal a = Literal::positive("x" + std::to_string(i));
        Literal b = Literal::positive("x" + std::to_string((i + 1) % n));
        p.rules.push_back({Weight::alpha(), {{a, b}, {}, {}}});
        p.rules.push_back({Weight::soft(1), {{b}, {}, {a}}});
    }
    return p;
}

bool same_report(const SolveReport& a, const SolveReport& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].model != b.entries[i].model) return false;
        if (!(a.entries[i].degree.alpha_count == b.entries[i].degree.alpha_count &&
              a.entries[i].degree.soft_sum == b.entries[i].degree.soft_sum)) {
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    {
        const int n = 14;
        Program p = ring_program(n);
        SolveOptions serial{16, false};
        SolveOptions parallel{16, true};
        auto t0 = std::chrono::steady_clock::now();
        SolveReport rs = stable_models(p, std::nullopt, serial);
        double ts = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        SolveReport rp = stable_models(p, std::nullopt, parallel);
        double tp = seconds_since(t1);
        std::printf("stable models, %d atoms: serial %.3fs, parallel %.3fs, speedup %.2fx, "
                    "%zu models, reports %s\n",
                    n, ts, tp, ts / tp, rs.entries.size(),
                    same_report(rs, rp) ? "identical" : "DIFFER");
    }
    {
        const int n = 11;
        Program p = ring_program(n);
        SeOptions serial{12, false};
        SeOptions parallel{12, true};
        LiteralSet universe = p.literals();
        auto t0 = std::chrono::steady_clock::now();
        SEModelSet ss = enumerate_se_models(p, universe, serial);
        double ts = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        SEModelSet sp = enumerate_se_models(p, universe, parallel);
        double tp = seconds_since(t1);
        std::printf("SE-models, %d atoms: serial %.3fs, parallel %.3fs, speedup %.2fx, "
                    "%zu SE-models, reports %s\n",
                    n, ts, tp, ts / tp, ss.models.size(),
                    ss.same_models(sp) ? "identical" : "DIFFER");
    }
    return 0;
}
