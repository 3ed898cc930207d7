#include "arch/selftest.hpp"

#include "arch/echelon.hpp"
#include "arch/lattice.hpp"
#include "arch/random_gen.hpp"
#include "arch/relations.hpp"

#include <functional>
#include <ostream>

namespace arch {

namespace {

struct Suite {
    std::ostream& os;
    int failures = 0;

    void run(const std::string& name, const std::function<bool()>& prop) {
        bool ok = prop();
        os << (ok ? "pass" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    }
};

} // namespace

int run_selftest(Backend b, std::uint64_t seed, std::ostream& os) {
    RandomGen rng(seed);
    Suite s{os};
    const int reps = 25;

    s.run("field: total order compatible with + and *", [&] {
        for (int k = 0; k < reps; ++k) {
            FieldElement x = rng.scalar(b), y = rng.scalar(b), z = rng.scalar(b);
            int cases = (x < y) + (x == y) + (x > y);
            if (cases != 1) return false;
            if (x < y && !(x + z < y + z)) return false;
            if (x < y && z.sign() > 0 && !(x * z < y * z)) return false;
        }
        return true;
    });

    s.run("field: v(ab) = v(a)+v(b), v(a+b) >= min", [&] {
        for (int k = 0; k < reps; ++k) {
            FieldElement x = rng.scalar(b), y = rng.scalar(b);
            Valuation vx = x.natural_valuation(), vy = y.natural_valuation();
            if ((x * y).natural_valuation() != vx + vy) return false;
            Valuation vs = (x + y).natural_valuation();
            if (vs < (vx < vy ? vx : vy)) return false;
            if (vx != vy && vs != (vx < vy ? vx : vy)) return false;
        }
        return true;
    });

    s.run("relations: reflexivity and transitivity of succeq", [&] {
        for (int k = 0; k < reps; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 3));
            Matrix m = rng.matrix(b, n, n);
            if (!succeq(m, m).holds) return false;
            Matrix base = rng.matrix(b, n, n);
            Matrix mid = rng.bibounded_square(b, n) * base;
            Matrix top = rng.bibounded_square(b, n) * mid;
            if (succeq(top, mid).holds && succeq(mid, base).holds && !succeq(top, base).holds)
                return false;
        }
        return true;
    });

    s.run("relations: sim(QA, A) for bibounded Q", [&] {
        for (int k = 0; k < reps; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 3));
            Matrix a = rng.matrix(b, n, n);
            Matrix q = rng.bibounded_square(b, n);
            if (!sim(q * a, a).holds) return false;
        }
        return true;
    });

    s.run("relations: certificates re-verify", [&] {
        for (int k = 0; k < reps; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 3));
            Matrix a = rng.matrix(b, n, n), m = rng.matrix(b, n, n);
            RelationVerdict v = succeq(a, m);
            if (v.holds && v.certificate && !verify_certificate(a, m, *v.certificate)) return false;
        }
        return true;
    });

    s.run("lattice: idempotence and absorption modulo sim", [&] {
        for (int k = 0; k < reps; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 2));
            Matrix a = rng.matrix(b, n, n), m = rng.matrix(b, n, n);
            if (!sim(meet(a, a), a).holds) return false;
            if (!sim(meet(a, join(a, m)), a).holds) return false;
            if (!sim(join(a, meet(a, m)), a).holds) return false;
        }
        return true;
    });

    s.run("echelon: A = QR and descriptor invariance", [&] {
        for (int k = 0; k < reps; ++k) {
            size_t n = static_cast<size_t>(rng.uniform(1, 3));
            size_t m = static_cast<size_t>(rng.uniform(1, 3));
            Matrix a = rng.nonzero_matrix(b, m, n);
            QRPair qr = qr_decompose(a);
            if (qr.Q * qr.R != a) return false;
            if (class_descriptor(a) != class_descriptor(rng.bibounded_square(b, m) * a))
                return false;
        }
        return true;
    });

    if (b == Backend::Qt) {
        s.run("canonical form: sim(canon(A), A), canon(QA) = canon(A)", [&] {
            for (int k = 0; k < reps; ++k) {
                size_t n = static_cast<size_t>(rng.uniform(1, 3));
                size_t m = static_cast<size_t>(rng.uniform(1, 3));
                Matrix a = rng.nonzero_matrix(b, m, n);
                Matrix c = archimedean_canonical_form(a);
                if (!sim(c, a).holds) return false;
                if (archimedean_canonical_form(rng.bibounded_square(b, m) * a) != c) return false;
            }
            return true;
        });
    }

    return s.failures;
}

} // namespace arch
