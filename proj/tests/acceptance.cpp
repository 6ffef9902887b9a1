// Acceptance checks over the fixture corpus, one verdict line per criterion.
// Exits nonzero if any criterion fails. All tolerances are exact.

#include <sys/wait.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using RF = RationalFunction;

namespace {

int failures = 0;

void verdict(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("criterion %2d %-28s %s%s\n", number, what.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!pass) ++failures;
}

struct Loaded {
    std::string name;
    ParabolicConnection conn;
};

std::vector<Loaded> corpus() {
    std::vector<Loaded> out;
    for (const auto& name : testdata::fixture_names())
        out.push_back({name, testdata::load_fixture(name)});
    return out;
}

K random_k(std::mt19937_64& rng) {
    auto small = [&rng](int lo, int hi) {
        return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
    };
    return {mpq_class(small(-9, 9), small(1, 7)), mpq_class(small(-9, 9), small(1, 7))};
}

// random meromorphic section: poles of order <= 5 at the p_j, polynomial
// part of degree <= 5, entries in Q(i)
Section<RF> random_section(const ParabolicConnection& conn, std::mt19937_64& rng) {
    Section<RF> g(conn.point_count(), conn.rank());
    for (int j = 0; j < conn.point_count(); ++j)
        for (int m = 1; m <= 5; ++m)
            for (int i = 0; i < conn.rank(); ++i)
                if (rng() % 3 == 0) g.add_pole(j, m, RF(random_k(rng)), unit_vec<RF>(conn.rank(), i));
    for (int d = 0; d <= 5; ++d)
        for (int i = 0; i < conn.rank(); ++i)
            if (rng() % 3 == 0) g.add_poly(d, RF(random_k(rng)), unit_vec<RF>(conn.rank(), i));
    return g;
}

std::string run_cli(const std::string& args, int* code) {
    std::string cmd = std::string("'") + MINLAP_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

}  // namespace

int main() {
    auto fixtures = corpus();

    // 1. size of X equals sum_j (r - r_j)
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            auto t = transform_connection(build_model(f.conn));
            int expected = 0;
            for (int j = 0; j < f.conn.point_count(); ++j)
                expected += f.conn.rank() - f.conn.at_point(j).zero_multiplicity;
            if (t.x_action.rows() != expected || t.x_action.cols() != expected) {
                pass = false;
                detail = f.name;
            }
        }
        verdict(1, "rank formula", pass, detail);
    }

    // 2. leading term block-diag(p_j Id), residue block charpolys prod(lambda - mu)
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            auto t = transform_connection(build_model(f.conn));
            auto fd = formal_data_at_infinity(t);
            auto p = predict(f.conn);
            const int d = p.predicted_rank;
            for (int a = 0; a < d && pass; ++a)
                for (int b = 0; b < d && pass; ++b) {
                    K want = (a == b) ? p.infinity_leading[static_cast<std::size_t>(a)] : K(0);
                    if (fd.leading.at(a, b) != want) {
                        pass = false;
                        detail = f.name + ": leading term";
                    }
                }
            // per-label-group residue blocks
            for (int lo = 0; lo < d && pass;) {
                int hi = lo;
                while (hi < d && p.infinity_leading[static_cast<std::size_t>(hi)] ==
                                     p.infinity_leading[static_cast<std::size_t>(lo)])
                    ++hi;
                Matrix<K> block(hi - lo, hi - lo);
                std::vector<K> mus;
                for (int a = lo; a < hi; ++a) {
                    mus.push_back(p.infinity_residue[static_cast<std::size_t>(a)].first);
                    for (int b = lo; b < hi; ++b) block.at(a - lo, b - lo) = fd.residue.at(a, b);
                }
                if (charpoly(block) != Poly::from_roots(mus)) {
                    pass = false;
                    detail = f.name + ": residue block";
                }
                lo = hi;
            }
        }
        verdict(2, "polar part at infinity", pass, detail);
    }

    // 3. rank-1 closed form X = p_1 + mu/(xi - xi_1)
    {
        auto conn = testdata::rank1(K(mpq_class(3, 7), mpq_class(1, 2)), K(mpq_class(2, 5)),
                                    mpq_class(1, 3), K(mpq_class(-4, 9)), mpq_class(1, 6));
        auto t = transform_connection(build_model(conn));
        RF xi = RF::variable();
        RF expected = RF(K(mpq_class(3, 7), mpq_class(1, 2))) +
                      RF(K(mpq_class(2, 5))) / (xi - RF(K(mpq_class(-4, 9))));
        bool pass = t.x_action.rows() == 1 && t.x_action.at(0, 0) == expected;
        verdict(3, "rank-1 closed form", pass);
    }

    // 4. predicted_pdeg = pdeg exactly
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            if (predict(f.conn).predicted_pdeg != dmodule_degrees(f.conn).pdeg) {
                pass = false;
                detail = f.name;
            }
        }
        verdict(4, "degree preservation", pass, detail);
    }

    // 5. involution recovers points, eigen data, weights, rank, pdeg
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            auto rep = verify_involution(f.conn);
            bool harvested = true;
            for (const auto& item : rep.items)
                if (!item.pass && item.item.find("reads as an input datum") != std::string::npos)
                    harvested = false;
            if (!harvested) continue;  // criterion covers fixtures whose harvest validates
            if (!rep.all_pass()) {
                pass = false;
                detail = f.name;
                for (const auto& item : rep.items)
                    if (!item.pass) detail += " " + item.item;
            }
        }
        verdict(5, "involution", pass, detail);
    }

    // 6. certificate identity on 200 random sections per fixture
    {
        bool pass = true;
        std::string detail;
        std::mt19937_64 rng(20240811);
        RF xi = RF::variable();
        for (const auto& f : fixtures) {
            auto model = build_model(f.conn);
            for (int trial = 0; trial < 200 && pass; ++trial) {
                // in-module section: a twisted image plus a basis combination
                Section<RF> g = random_section(f.conn, rng);
                Section<RF> s = apply_twisted(f.conn, xi, g);
                std::vector<RF> mix(static_cast<std::size_t>(model.cokernel_dimension()));
                for (auto& c : mix) c = RF(random_k(rng));
                s += expand_in_basis<RF>(model, mix);

                auto red = reduce_section(model, s, xi);
                Section<RF> rhs = apply_twisted(f.conn, xi, red.correction);
                rhs += expand_in_basis<RF>(model, red.coords);
                if (!(rhs == s) || red.coords != mix) {
                    pass = false;
                    detail = f.name + " trial " + std::to_string(trial);
                }
            }
        }
        verdict(6, "reduction soundness", pass, detail);
    }

    // 7. det(res - m Id) != 0 for m = 1..5 on resonance-free fixtures
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            if (!validate_resonance_free(f.conn).passed()) continue;
            for (int j = 0; j < f.conn.point_count(); ++j)
                for (int m = 1; m <= 5; ++m) {
                    Matrix<K> shifted =
                        f.conn.at_point(j).residue_matrix - K(m) * Matrix<K>::identity(f.conn.rank());
                    if (det(shifted).is_zero()) {
                        pass = false;
                        detail = f.name + " point " + std::to_string(j + 1) + " m=" + std::to_string(m);
                    }
                }
        }
        verdict(7, "graded isomorphism", pass, detail);
    }

    // 8. specialize-then-compute equals compute-then-specialize, 20 points each
    {
        bool pass = true;
        std::string detail;
        std::mt19937_64 rng(77002);
        for (const auto& f : fixtures) {
            auto model = build_model(f.conn);
            auto t = transform_connection(model);
            int done = 0;
            while (done < 20) {
                K xi0 = random_k(rng);
                bool excluded = false;
                for (const K& a : f.conn.irregular().a_diagonal) excluded = excluded || xi0 == a;
                if (excluded) continue;
                ++done;
                auto fib = fiber_cokernel(model, xi0);
                for (int i = 0; i < fib.x_action.rows(); ++i)
                    for (int j = 0; j < fib.x_action.cols(); ++j)
                        if (fib.x_action.at(i, j) != t.x_action.at(i, j).eval(xi0)) {
                            pass = false;
                            detail = f.name + " at " + xi0.to_string();
                        }
            }
        }
        verdict(8, "specialization consistency", pass, detail);
    }

    // 9. prediction stays resonance-free whenever the input is
    {
        bool pass = true;
        std::string detail;
        for (const auto& f : fixtures) {
            if (!validate_resonance_free(f.conn).passed()) continue;
            if (!predicted_resonance_free(predict(f.conn)).passed()) {
                pass = false;
                detail = f.name;
            }
        }
        verdict(9, "resonance preservation", pass, detail);
    }

    // 10. corpus-check byte-identical across two independent runs
    {
        int c1 = 0, c2 = 0;
        std::string dir = std::string("'") + MINLAP_FIXTURE_DIR + "'";
        std::string r1 = run_cli("corpus-check " + dir, &c1);
        std::string r2 = run_cli("corpus-check " + dir, &c2);
        bool pass = c1 == 0 && c2 == 0 && r1 == r2 && r1.find("all identical") != std::string::npos;
        verdict(10, "determinism", pass);
    }

    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
