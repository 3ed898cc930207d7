// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include "arch/echelon.hpp"
#include "arch/lattice.hpp"
#include "arch/linalg.hpp"
#include "arch/parser.hpp"
#include "arch/random_gen.hpp"
#include "arch/relations.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace arch;

namespace {

constexpr Backend Q = Backend::Q;
constexpr Backend Qt = Backend::Qt;

Matrix mat(Backend b, std::vector<std::vector<std::string>> rows) {
    std::vector<FieldElement> e;
    for (auto& r : rows)
        for (auto& s : r) e.push_back(parse_entry(s, b));
    return Matrix(b, rows.size(), rows[0].size(), e);
}

Matrix bounded_matrix(RandomGen& rng, Backend b, size_t rows, size_t cols) {
    Matrix m(b, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (rng.uniform(0, 3)) m.at(i, j) = rng.bounded_scalar(b);
    return m;
}

struct Criterion {
    double seconds = 0;
    long checks = 0;
    long failures = 0;
    std::string detail;

    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

int g_exit = 0;

void report(int num, const std::string& name, const Criterion& c, double limit) {
    bool ok = c.failures == 0 && c.seconds < limit;
    if (!ok) g_exit = 1;
    std::printf("%s  criterion %d: %s (%ld checks, %ld failures, %.2f s%s%s)\n",
                ok ? "PASS" : "FAIL", num, name.c_str(), c.checks, c.failures, c.seconds,
                c.seconds < limit ? "" : " OVER TIME LIMIT",
                c.detail.empty() ? "" : ("; " + c.detail).c_str());
}

template <class F> Criterion timed(F&& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

// ---------------------------------------------------------------- criterion 1

Criterion criterion1() {
    return timed([](Criterion& c) {
        // left multiplication is not compatible with sim
        Matrix p12 = mat(Q, {{"0", "1"}, {"1", "0"}});
        Matrix i2 = Matrix::identity(Q, 2);
        Matrix e11 = mat(Q, {{"1", "0"}, {"0", "0"}});
        c.expect(sim(p12, i2).holds);
        c.expect(!sim(e11 * p12, e11 * i2).holds);

        // [[0,1],[0,0]] and its transpose are incomparable
        Matrix a = mat(Q, {{"0", "1"}, {"0", "0"}});
        c.expect(!succeq(a, a.transpose()).holds);
        c.expect(!succeq(a.transpose(), a).holds);

        // a 1x1 matrix with an unbounded entry is not above [1]
        Matrix u = mat(Qt, {{"1/t"}}), one = mat(Qt, {{"1"}});
        c.expect(!succeq(u, one).holds);
        c.expect(succeq(one, u).holds);

        // shape strictness: E11 and E12 have different shapes, hence
        // different classes, and their meet is equivalent to I2
        Matrix e12 = mat(Q, {{"0", "1"}, {"0", "0"}});
        c.expect(class_descriptor(e11).shape != class_descriptor(e12).shape);
        c.expect(!sim(e11, e12).holds);
        c.expect(sim(meet(e11, e12), i2).holds);

        // join does not distribute over the box product
        Matrix d10 = mat(Q, {{"1", "0"}, {"0", "0"}});
        Matrix d01 = mat(Q, {{"0", "0"}, {"0", "1"}});
        Matrix lhs = box_mult(join(d10, d01), i2);
        Matrix rhs = join(box_mult(d10, i2), box_mult(d01, i2));
        c.expect(lhs.is_zero());
        c.expect(sim(rhs, i2).holds);
        c.expect(!sim(lhs, rhs).holds);
    });
}

// ---------------------------------------------------------------- criterion 2

Criterion criterion2() {
    return timed([](Criterion& c) {
        for (Backend b : {Q, Qt}) {
            RandomGen rng(b == Q ? 101 : 102);
            for (int k = 0; k < 500; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 4));
                size_t m = static_cast<size_t>(rng.uniform(1, 4));
                Matrix base = rng.matrix(b, m, n);
                c.expect(succeq(base, base).holds); // reflexivity

                // transitivity on a constructed descending chain
                Matrix mid = bounded_matrix(rng, b, m, m) * base;
                Matrix top = bounded_matrix(rng, b, m, m) * mid;
                bool tm = succeq(top, mid).holds, mb = succeq(mid, base).holds;
                c.expect(tm && mb);
                c.expect(!(tm && mb) || succeq(top, base).holds);

                // right-compatibility of sim: A ~ B implies AM ~ BM
                Matrix qq = rng.bibounded_square(b, m);
                Matrix other = qq * base;
                Matrix right = rng.matrix(b, n, n);
                c.expect(sim(other, base).holds);
                c.expect(sim(other * right, base * right).holds);
            }
            // agreement of the two deciders on echelon pairs
            for (int k = 0; k < 120; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 4));
                size_t m = static_cast<size_t>(rng.uniform(1, 4));
                Matrix e = qr_decompose(rng.nonzero_matrix(b, m, n)).R;
                Matrix a = k % 2 ? rng.matrix(b, m, n)
                                 : bounded_matrix(rng, b, m, e.rows()) * e;
                c.expect(succeq(a, e).holds == succeq_via_gauss(a, e));
            }
        }
    });
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion3() {
    return timed([](Criterion& c) {
        long positives = 0, verified = 0, mutated = 0, rejected = 0;
        for (Backend b : {Q, Qt}) {
            RandomGen rng(b == Q ? 201 : 202);
            for (int k = 0; k < 150; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                size_t m = static_cast<size_t>(rng.uniform(1, 3));
                Matrix bm = rng.nonzero_matrix(b, m, n);
                Matrix a = k % 3 ? bounded_matrix(rng, b, m, m) * bm : rng.matrix(b, m, n);
                RelationVerdict v = succeq(a, bm);
                if (!v.holds || !v.certificate) continue;
                ++positives;
                Certificate cert = *v.certificate;
                verified += verify_certificate(a, bm, cert);

                // minimal admissible r, then one below it must be rejected
                unsigned long rmin = cert.r;
                Matrix gb = gram(bm), ga = gram(a);
                auto fits = [&](unsigned long r) {
                    return is_psd(gb.scaled(FieldElement::from_int(b, static_cast<long>(r))) - ga);
                };
                while (rmin > 0 && fits(rmin - 1)) --rmin;
                if (rmin > 0) {
                    Certificate low = cert;
                    low.r = rmin - 1;
                    ++mutated;
                    rejected += !verify_certificate(a, bm, low);
                }
                // perturbing a multiplier entry against a nonzero row of B
                for (size_t row = 0; row < bm.rows(); ++row) {
                    if (bm.row(row).is_zero()) continue;
                    Certificate bad = cert;
                    bad.C->at(0, row) = bad.C->at(0, row) + FieldElement::one(b);
                    ++mutated;
                    rejected += !verify_certificate(a, bm, bad);
                    break;
                }
            }
        }
        c.checks = positives + mutated;
        c.failures = (positives - verified) + (mutated - rejected);
        c.detail = std::to_string(verified) + "/" + std::to_string(positives) +
                   " certificates verified, " + std::to_string(rejected) + "/" +
                   std::to_string(mutated) + " mutations rejected";
    });
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion4() {
    return timed([](Criterion& c) {
        RandomGen rng(301);
        for (int k = 0; k < 300; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 4));
            size_t m = static_cast<size_t>(rng.uniform(1, 4));
            Matrix a = rng.nonzero_matrix(Qt, m, n);
            QRPair qr = qr_decompose(a);
            c.expect(qr.Q * qr.R == a);
            bool qok = true;
            for (size_t i = 0; i < qr.Q.cols() && qok; ++i) {
                Matrix ci(Qt, 1, qr.Q.rows());
                for (size_t p = 0; p < qr.Q.rows(); ++p) ci.at(0, p) = qr.Q.at(p, i);
                qok = max_norm(ci) == FieldElement::one(Qt);
                for (size_t j = i + 1; j < qr.Q.cols() && qok; ++j) {
                    Matrix cj(Qt, 1, qr.Q.rows());
                    for (size_t p = 0; p < qr.Q.rows(); ++p) cj.at(0, p) = qr.Q.at(p, j);
                    qok = dot(ci, cj).is_zero();
                }
            }
            c.expect(qok);
            bool rok = is_row_echelon(qr.R);
            for (size_t i = 0; i < qr.R.rows() && rok; ++i) {
                size_t p = 0;
                while (p < qr.R.cols() && qr.R.at(i, p).is_zero()) ++p;
                rok = p < qr.R.cols() && qr.R.at(i, p).sign() > 0;
            }
            c.expect(rok);

            Matrix cf = archimedean_canonical_form(a);
            // (i) every pivot is exactly a power of t
            // (ii) entries above a pivot only carry exponents below the pivot's
            bool syntactic = is_row_echelon(cf);
            for (size_t i = 0; i < cf.rows() && syntactic; ++i) {
                size_t p = 0;
                while (cf.at(i, p).is_zero()) ++p;
                auto [unit, mi] = cf.at(i, p).unit_decompose();
                syntactic = unit == FieldElement::one(Qt);
                for (size_t jj = 0; jj < i && syntactic; ++jj)
                    syntactic = cf.at(jj, p) == cf.at(jj, p).truncate_below(mi);
            }
            c.expect(syntactic);
            c.expect(sim(cf, a).holds);
            for (int q = 0; q < 5; ++q)
                c.expect(archimedean_canonical_form(rng.bibounded_square(Qt, m) * a) == cf);
        }
    });
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion5() {
    return timed([](Criterion& c) {
        for (Backend b : {Q, Qt}) {
            RandomGen rng(b == Q ? 401 : 402);
            for (int k = 0; k < 100; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                Matrix a = rng.matrix(b, n, n), bm = rng.matrix(b, n, n);
                Matrix x = k % 2 ? rng.matrix(b, n, n) : bounded_matrix(rng, b, n, 2 * n) * meet(a, bm);
                c.expect(sim(meet(a, a), a).holds);
                c.expect(sim(meet(a, join(a, bm)), a).holds);
                c.expect(sim(join(a, meet(a, bm)), a).holds);
                Matrix mt = meet(a, bm), jn = join(a, bm);
                c.expect(succeq(a, mt).holds && succeq(bm, mt).holds);
                c.expect(succeq(jn, a).holds && succeq(jn, bm).holds);
                // glb / lub universal characterization
                c.expect((succeq(a, x).holds && succeq(bm, x).holds) == succeq(mt, x).holds);
                c.expect((succeq(x, a).holds && succeq(x, bm).holds) == succeq(x, jn).holds);
                // kernel homomorphisms
                c.expect(class_kernel(mt) == class_kernel(a).intersect(class_kernel(bm)));
                c.expect(class_kernel(jn) == class_kernel(a).sum(class_kernel(bm)));
            }
        }
    });
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion6() {
    return timed([](Criterion& c) {
        for (Backend b : {Q, Qt}) {
            RandomGen rng(b == Q ? 501 : 502);
            // Binet-Cauchy: det(A^T A) equals the sum of squared maximal minors
            for (int k = 0; k < 100; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 4));
                size_t m = static_cast<size_t>(rng.uniform(n, 4));
                Matrix a = rng.matrix(b, m, n);
                FieldElement sum = FieldElement::zero(b);
                for (const FieldElement& d : minors(a, n)) sum = sum + d * d;
                c.expect(det(gram(a)) == sum);
            }
            // trace inequality A <= (tr A) I for PSD A
            for (int k = 0; k < 100; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 4));
                Matrix a = rng.psd(b, n);
                c.expect(psd_leq(a, Matrix::identity(b, n).scaled(a.trace())));
            }
            // inversion antitonicity on invertible PSD pairs
            for (int k = 0; k < 50; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                Matrix a = rng.invertible_psd(b, n);
                Matrix bb = a + rng.psd(b, n);
                Matrix ai = inverse(a), bi = inverse(bb);
                c.expect(is_psd(ai) && is_psd(bi) && psd_leq(bi, ai));
            }
            // monotonicity of the parallel sum
            for (int k = 0; k < 50; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                Matrix a = rng.psd(b, n);
                Matrix bb = a + rng.psd(b, n);
                Matrix cc = rng.psd(b, n);
                c.expect(psd_leq(parallel_sum(a, cc), parallel_sum(bb, cc)));
            }
        }
    });
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion7() {
    return timed([](Criterion& c) {
        for (Backend b : {Q, Qt}) {
            RandomGen rng(b == Q ? 601 : 602);
            for (int k = 0; k < 100; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                Matrix bm = rng.matrix(b, n, n), cm = rng.matrix(b, n, n);
                Matrix am = bounded_matrix(rng, b, n, n) * bm; // am >= bm
                c.expect(succeq(am, bm).holds);
                c.expect(succeq(box_mult(am, cm), box_mult(bm, cm)).holds);
                c.expect(succeq(am * cm, box_mult(am, cm)).holds);
                c.expect(sim(box_mult(meet(am, bm), cm),
                             meet(box_mult(am, cm), box_mult(bm, cm))).holds);
                c.expect(w_valuation(box_mult(am, cm)) ==
                         w_valuation(am) + w_valuation(cm));
            }
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    auto want = [&](int k) { return only == 0 || only == k; };
    if (want(1)) report(1, "fixed counterexample suite", criterion1(), 1.0);
    if (want(2))
        report(2, "randomized relation laws (500 per backend, 240 echelon pairs)", criterion2(),
               60.0);
    if (want(3)) report(3, "certificate soundness and mutation rejection", criterion3(), 60.0);
    if (want(4))
        report(4, "QR and canonical form on 300 random matrices over Q(t)", criterion4(), 120.0);
    // No stated time budget for this criterion (only "zero failures"); the
    // limit below is a loose regression guard.
    if (want(5)) report(5, "lattice laws on 200 random triples", criterion5(), 600.0);
    if (want(6))
        report(6, "numeric identities (Binet-Cauchy, trace, inversion, parallel sum)", criterion6(),
               120.0);
    if (want(7)) report(7, "box product laws on 200 random triples", criterion7(), 60.0);
    return g_exit;
}
