// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion; exits
// non-zero if any fails. Pass criterion numbers to run a subset.

#include "../support/algebra_fixtures.hpp"
#include "../support/fincat_oracle.hpp"
#include "semisep/adjunction/corpus.hpp"
#include "semisep/cli/cli.hpp"
#include "semisep/coident/coidentifier.hpp"
#include "semisep/corpus.hpp"
#include "semisep/errors.hpp"
#include "semisep/hopf/hopf.hpp"
#include "semisep/io/json.hpp"
#include "semisep/sepcheck/sepcheck.hpp"
#include "semisep/sepcheck/verify.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace semisep;
using fincat::FunctorProperty;
using fincat::Mode;
namespace cp = semisep::corpus;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::size_t passed = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (ok) ++passed;
        else failures.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

const Mode kModes[3] = {Mode::semiseparable, Mode::separable, Mode::naturally_full};

bool holds(const fincat::FinFunctor& f, Mode m) { return fincat::decide_retraction(f, m).holds(); }
bool prop(const fincat::FinFunctor& f, FunctorProperty p) { return fincat::functor_property(f, p).holds; }

std::string n(std::size_t x) { return std::to_string(x); }

// 1 --------------------------------------------------------------------------

void oracle_equivalence(Check& c) {
    std::vector<std::pair<std::string, fincat::FinFunctor>> cases;
    for (const auto& nf : cp::functors()) cases.emplace_back(nf.name, nf.functor);
    const auto cats = cp::categories();
    for (const auto& [cn, cc] : cats)
        for (const auto& [dn, dc] : cats) {
            if (cc->num_morphisms() + dc->num_morphisms() > 12) continue;
            std::size_t k = 0;
            fincat::enumerate_functors(cc, dc, [&](const fincat::FinFunctor& f) {
                cases.emplace_back(cn + "->" + dn + "#" + n(k++), f);
                return true;
            });
        }
    std::size_t compared = 0, skipped = 0;
    for (const auto& [name, f] : cases) {
        if (f.source->num_morphisms() + f.target->num_morphisms() > 12) continue;
        for (auto m : kModes) {
            auto blind = oracle::blind_retractions(f, m);
            if (!blind.enumerated) {
                ++skipped;
                continue;
            }
            auto r = fincat::decide_retraction(f, m);
            const std::string tag = name + " " + fincat::to_string(m);
            c.expect(r.holds() == (blind.witnesses > 0), tag + ": verdict differs from blind enumeration");
            if (r.holds() && blind.first) c.expect(r.witness->values == *blind.first, tag + ": witness is not the least");
            ++compared;
        }
    }
    c.expect(skipped == 0, n(skipped) + " functor/mode pairs too large for blind enumeration");
    c.expect(compared >= 45, "too few comparisons");
    c.note(n(compared) + " functor/mode pairs compared");
}

// 2 --------------------------------------------------------------------------

void functor_battery(Check& c) {
    const auto all = cp::functors();
    c.expect(all.size() >= 15, "functor corpus has fewer than 15 entries");
    for (const auto& nf : all) {
        const auto& f = nf.functor;
        const std::string& name = nf.name;
        const bool ss = holds(f, Mode::semiseparable);
        const bool sep = holds(f, Mode::separable);
        const bool nat = holds(f, Mode::naturally_full);
        c.expect(sep == (ss && prop(f, FunctorProperty::faithful)), name + ": separable vs semiseparable+faithful");
        c.expect(nat == (ss && prop(f, FunctorProperty::full)), name + ": naturally full vs semiseparable+full");
        for (auto p : {FunctorProperty::maschke, FunctorProperty::dual_maschke, FunctorProperty::conservative})
            c.expect(sep == (ss && prop(f, p)), name + ": separable vs semiseparable+reflection property");
        if (!ss) {
            bool threw = false;
            try {
                coident::factorize_semiseparable(f);
            } catch (const PreconditionError&) {
                threw = true;
            }
            c.expect(threw, name + ": factorization of a non-semiseparable functor");
            continue;
        }
        auto w = fincat::decide_retraction(f, Mode::semiseparable).witness;
        auto rep = fincat::associated_idempotent(f, *w);
        c.expect(rep.ok(), name + ": associated idempotent properties or uniqueness");
        c.expect(sep == rep.e.is_identity(), name + ": separable vs identity idempotent");
        auto fz = coident::factorize_semiseparable(f);
        c.expect(fz.ok(), name + ": factorization certificates");
        c.expect(fincat::compose(fz.Fe, fz.coidentifier.H) == f, name + ": F_e after H is not F");
        c.expect(holds(fz.Fe, Mode::separable), name + ": F_e not separable");
        c.expect(holds(fz.coidentifier.H, Mode::naturally_full), name + ": H not naturally full");
        c.expect(fz.coidentifier.e.components == rep.e.components, name + ": coidentifier idempotent differs");
    }

    std::size_t pairs = 0, factored = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!(*a.functor.target == *b.functor.source)) continue;
            const std::string tag = b.name + " o " + a.name;
            auto gf = fincat::compose(b.functor, a.functor);
            const bool gf_ss = holds(gf, Mode::semiseparable);
            const bool a_ss = holds(a.functor, Mode::semiseparable);
            if (a_ss && holds(b.functor, Mode::separable)) {
                c.expect(gf_ss, tag + ": semiseparable then separable");
                if (holds(a.functor, Mode::naturally_full)) ++factored;
            }
            if (holds(a.functor, Mode::naturally_full) && holds(b.functor, Mode::semiseparable))
                c.expect(gf_ss, tag + ": naturally full then semiseparable");
            if (gf_ss && prop(b.functor, FunctorProperty::faithful))
                c.expect(a_ss, tag + ": composite semiseparable with faithful outer functor");
            ++pairs;
        }
    c.expect(pairs >= 20, "too few composable pairs");
    c.expect(factored >= 1, "no separable-after-naturally-full composite");
    c.note(n(all.size()) + " functors, " + n(pairs) + " composable pairs");
}

// 3, 4 -----------------------------------------------------------------------

std::vector<fincat::NatTrans> all_nat(const fincat::FinFunctor& from, const fincat::FinFunctor& to) {
    std::vector<fincat::NatTrans> out;
    fincat::enumerate_nat_trans(from, to, nullptr, [&](const std::vector<fincat::Mor>& comps) {
        out.push_back({from, to, comps});
        return true;
    });
    return out;
}

void adjunction_names(Check& c, const std::vector<cp::NamedAdjunction>& adjs) {
    bool galois = false, closure = false;
    for (const auto& a : adjs) {
        galois |= a.name.starts_with("galois");
        closure |= a.name.starts_with("closure");
    }
    c.expect(adjs.size() >= 8, "fewer than 8 corpus adjunctions");
    c.expect(galois, "no Galois connection in the corpus");
    c.expect(closure, "no closure operator in the corpus");
}

void rafael_crosscheck(Check& c) {
    using namespace adjunction;
    const auto adjs = cp::adjunctions();
    adjunction_names(c, adjs);
    std::size_t identities = 0;
    for (const auto& [name, a] : adjs) {
        for (Side side : {Side::left, Side::right})
            for (Mode m : kModes) {
                const std::string tag = name + (side == Side::left ? " left " : " right ") + fincat::to_string(m);
                auto r = rafael_regularity(a, side, m);
                const bool decided = holds(side == Side::left ? a.F : a.G, m);
                c.expect(r.holds() == decided, tag + ": regularity verdict differs from decider");
                c.expect(r.agrees_with_decider, tag + ": internal agreement flag");
            }
        const auto& cc = *a.F.source;
        const auto& dd = *a.F.target;
        if (auto p = fincat::decide_retraction(a.F, Mode::semiseparable); p.holds()) {
            auto e = fincat::associated_idempotent(a.F, *p.witness).e.components;
            for (const auto& nu : all_nat(fincat::compose(a.G, a.F), fincat::FinFunctor::identity(a.F.source))) {
                if (!lemma_b_profile(a, Side::left, nu)[0]) continue;
                for (fincat::Obj x = 0; x < static_cast<fincat::Obj>(cc.num_objects()); ++x)
                    c.expect(cc.compose(nu[x], a.unit[x]) == e[x], name + ": e differs from nu after eta");
                ++identities;
            }
        }
        if (auto p = fincat::decide_retraction(a.G, Mode::semiseparable); p.holds()) {
            auto e = fincat::associated_idempotent(a.G, *p.witness).e.components;
            for (const auto& g : all_nat(fincat::FinFunctor::identity(a.F.target), fincat::compose(a.F, a.G))) {
                if (!lemma_b_profile(a, Side::right, g)[0]) continue;
                for (fincat::Obj y = 0; y < static_cast<fincat::Obj>(dd.num_objects()); ++y)
                    c.expect(dd.compose(a.counit[y], g[y]) == e[y], name + ": e differs from epsilon after gamma");
                ++identities;
            }
        }
    }
    c.expect(identities >= 8, "too few regularity witnesses checked against e");
    c.note(n(adjs.size()) + " adjunctions, " + n(identities) + " witnesses checked against e");
}

void monad_theorems(Check& c) {
    using namespace adjunction;
    const auto adjs = cp::adjunctions();
    adjunction_names(c, adjs);
    std::size_t within = 0, idem = 0;
    for (const auto& [name, a] : adjs) {
        try {
            auto r = ssep_monad_theorem(a);
            c.expect(r.right_holds(), name + ": monad side biconditional");
            c.expect(r.left_holds(), name + ": comonad side biconditional");
            c.expect(r.right_semiseparable == holds(a.G, Mode::semiseparable), name + ": right adjoint verdict");
            c.expect(r.left_semiseparable == holds(a.F, Mode::semiseparable), name + ": left adjoint verdict");
            ++within;
        } catch (const BoundExceeded&) {
            c.note(name + " exceeds the algebra bound");
        }
        auto ir = idempotent_adjunction_check(a);
        c.expect(ir.consistent(), name + ": the four idempotency conditions disagree");
        if (!ir.idempotent()) continue;
        ++idem;
        c.expect(holds(a.F, Mode::semiseparable) == holds(a.F, Mode::naturally_full),
                 name + ": idempotent adjunction, left adjoint");
        c.expect(holds(a.G, Mode::semiseparable) == holds(a.G, Mode::naturally_full),
                 name + ": idempotent adjunction, right adjoint");
    }
    c.expect(within == adjs.size(), "some adjunctions exceed the algebra bound");
    c.expect(idem >= 1, "no idempotent adjunction in the corpus");
    c.note(n(within) + " adjunctions within bound, " + n(idem) + " idempotent");
}

// 5-8 ------------------------------------------------------------------------

using namespace fixtures;
using sepcheck::verify::Kind;

const semisep::linalg::Field Q = semisep::linalg::Field::rationals();
const semisep::linalg::Field F5 = semisep::linalg::Field::prime(5);

void ring_extensions(Check& c) {
    struct Pinned {
        std::string name;
        AlgebraMap phi;
        bool ss, sep, nat;
        std::optional<Vector> z;
    };
    const std::vector<Pinned> cases{
        {"k -> k[x]/(x^2)", dual_inclusion(Q), true, true, false, vec({1}, Q)},
        {"k[x]/(x^2) -> k", dual_augmentation(Q), false, false, false, std::nullopt},
        {"k x k -> k", first_projection(Q), true, false, true, vec({1, 0}, Q)},
        {"k x k -> k[x]/(x^2)", compose(dual_inclusion(Q), first_projection(Q)), true, false, false, vec({1, 0}, Q)},
    };
    for (const auto& p : cases) {
        auto r = sepcheck::ring_ext_analyze(p.phi);
        c.expect(r.semiseparable.holds() == p.ss, p.name + ": semiseparable verdict");
        c.expect(r.separable.holds() == p.sep, p.name + ": separable verdict");
        c.expect(r.naturally_full.holds() == p.nat, p.name + ": naturally full verdict");
        c.expect(r.z == p.z, p.name + ": z");
        if (r.semiseparable.holds()) {
            c.expect(r.E && all_hold(sepcheck::verify::ring_ext(p.phi, *r.E, Kind::semiseparable)),
                     p.name + ": semiseparable witness");
            c.expect(r.z_unique, p.name + ": z not unique");
            c.expect(all_hold(r.certificates), p.name + ": certificates");
        } else {
            c.expect(r.semiseparable.rank < r.semiseparable.rank_augmented, p.name + ": infeasibility not witnessed");
        }
        if (r.separable.holds())
            c.expect(all_hold(sepcheck::verify::ring_ext(p.phi, *r.E_separable, Kind::separable)),
                     p.name + ": separable witness");
        if (r.naturally_full.holds())
            c.expect(all_hold(sepcheck::verify::ring_ext(p.phi, *r.E_naturally_full, Kind::naturally_full)),
                     p.name + ": naturally full witness");
    }
}

void corings(Check& c) {
    for (const auto& r : {k(Q), kxk(Q), dual_numbers(Q)}) {
        auto t = algstruct::trivial_coring(r);
        auto rep = sepcheck::coring_analyze(t);
        c.expect(rep.cosplit.holds(), "trivial coring not cosplit");
        c.expect(rep.z_cosplit && all_hold(sepcheck::verify::coring(t, *rep.z_cosplit, Kind::separable)),
                 "trivial coring witness");
    }

    auto ideal = Coring{restrict(vector_bimodule(Q, 1), first_projection(Q), first_projection(Q)), mat({{1}}, Q),
                        mat({{1}, {0}}, Q)};
    auto ir = sepcheck::coring_analyze(ideal);
    c.expect(ir.semicosplit.holds(), "ideal coring not semicosplit");
    c.expect(!ir.cosplit.holds(), "ideal coring cosplit");
    c.expect(ir.z && ideal.eps.apply(*ir.z) == vec({1, 0}, Q), "ideal coring eps(z)");
    c.expect(ir.z && all_hold(sepcheck::verify::coring(ideal, *ir.z, Kind::semiseparable)), "ideal coring witness");

    auto dual = sepcheck::sweedler_coring(dual_inclusion(Q));
    c.expect(!dual.report.semicosplit.holds(), "Sweedler coring of the dual numbers is semicosplit");

    std::size_t sweedler = 0;
    bool diagonal_feasible = false;
    for (const auto& [name, phi] : ring_map_catalogue(Q)) {
        if (phi.target.dim > 3) continue;
        auto s = sepcheck::sweedler_coring(phi);
        c.expect(s.report.semicosplit.holds() == s.separability_idempotent.holds(),
                 name + ": semicosplit vs separability idempotent");
        c.expect(s.sweed1_agrees, name + ": internal agreement flag");
        if (s.report.semicosplit.holds())
            c.expect(all_hold(sepcheck::verify::coring(s.coring, *s.report.z, Kind::semiseparable)), name + ": witness");
        if (name == "k_to_kxk") diagonal_feasible = s.separability_idempotent.holds();
        ++sweedler;
    }
    c.expect(sweedler >= 5, "fewer than 5 Sweedler corings");
    c.expect(diagonal_feasible, "k -> k x k separability idempotent infeasible");
    c.note(n(sweedler) + " Sweedler corings");
}

void bimodule_checks(Check& c, const std::string& name, const Bimodule& m, std::size_t& fgp) {
    auto rep = sepcheck::bimodule_analyze(m);
    c.expect(rep.thm_agrees, name + ": three-way equivalence");
    c.expect(rep.cor_agrees, name + ": separable vs semiseparable+generator");
    c.expect(all_hold(rep.certificates), name + ": certificates");
    if (rep.M_semisep.holds())
        c.expect(all_hold(sepcheck::verify::bimodule(m, rep.dual_maps, *rep.central_tensor_flat, false)),
                 name + ": semiseparable witness");
    if (rep.M_sep.holds())
        c.expect(all_hold(sepcheck::verify::bimodule(m, rep.dual_maps, *rep.separable_tensor_flat, true)),
                 name + ": separable witness");
    if (!rep.fgp.holds()) return;
    ++fgp;
    auto cm = sepcheck::comatrix_coring(m);
    c.expect(sepcheck::coring_analyze(cm).semicosplit.holds() == rep.M_semisep.holds(),
             name + ": comatrix coring verdict");
    c.expect(sepcheck::endo_ring_analyze(m).agrees, name + ": endomorphism ring routes");
}

void bimodules(Check& c) {
    std::size_t fgp = 0;
    for (std::size_t d = 1; d <= 3; ++d) {
        auto v = vector_bimodule(Q, d);
        auto rep = sepcheck::bimodule_analyze(v);
        c.expect(rep.M_sep.holds(), "k^" + n(d) + " not separable");
        bimodule_checks(c, "k^" + n(d), v, fgp);
    }
    auto l = line_over_product(Q);
    auto rep = sepcheck::bimodule_analyze(l);
    c.expect(rep.M_semisep.holds() && !rep.M_sep.holds(), "(k, k x k) line: verdicts");
    c.expect(rep.z == vec({1, 0}, Q), "(k, k x k) line: z");
    bimodule_checks(c, "(k, k x k) line", l, fgp);

    std::mt19937 rng(2024);
    for (int i = 0; i < 24; ++i) bimodule_checks(c, "random F5 #" + n(i), random_bimodule(rng, F5), fgp);
    c.note("24 random bimodules over F5, " + n(fgp) + " fgp instances");
}

void hopf_checks(Check& c) {
    using namespace hopf;
    const std::vector<std::vector<std::size_t>> c2{{0, 1}, {1, 0}};
    for (const auto& [name, b] : std::vector<std::pair<std::string, algstruct::Bialgebra>>{
             {"kC2", group_algebra(Q, c2, 0)}, {"H4", sweedler_h4(Q)}}) {
        auto v = coinvariant_verdict(b);
        c.expect(v.coinvariant_semiseparable.holds(), name + ": coinvariant functor not semiseparable");
        c.expect(v.S && verify_antipode_properties(b, *v.S).all(), name + ": antipode properties");
    }
    auto monoid = monoid_bialgebra(Q, {{0, 1}, {1, 1}}, 0);
    auto s = find_right_antipode(monoid);
    c.expect(s.status == Status::fails, "monoid {1,a}: antipode found");
    c.expect(s.linear.rank < s.linear.rank_augmented, "monoid {1,a}: linear system not inconsistent");
    c.expect(!coinvariant_verdict(monoid).coinvariant_semiseparable.holds(), "monoid {1,a}: verdict");

    auto h = sweedler_h4(Q).coalgebra;
    auto kg = grouplike_coalgebra(Q, {"1", "g"});
    std::vector<Matrix> fs;
    for (long long k = 0; k <= 2; ++k) {
        fs.push_back(mat({{1, 0, k, k}, {0, 1, -k, -k}}, Q));
        c.expect(coalgebra_map_verify(fs.back(), h, kg), "f_" + n(k) + " not a coalgebra map");
    }
    c.expect(fs[0] != fs[1] && fs[0] != fs[2] && fs[1] != fs[2], "f_k maps not pairwise distinct");
}

// 9 --------------------------------------------------------------------------

std::map<std::string, std::string> read_tree(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        out[e.path().filename().string()] = s.str();
    }
    return out;
}

void determinism(Check& c) {
    const fs::path manifest = fs::path(SEMISEP_DATA_DIR) / "corpus" / "manifest.json";
    std::random_device rd;
    const fs::path root = fs::temp_directory_path() / ("semisep-acceptance-" + std::to_string(rd()));
    std::array<std::map<std::string, std::string>, 2> trees;
    for (int i = 0; i < 2; ++i) {
        const fs::path out = root / ("run" + std::to_string(i));
        std::ostringstream so, se;
        const int code = cli::run({"corpus", "run", "--manifest", manifest.string(), "--out-dir", out.string()}, so, se);
        c.expect(code == 0, "corpus run " + n(i) + " exited with " + std::to_string(code) + ": " + se.str());
        trees[i] = read_tree(out);
    }
    c.expect(trees[0].size() > 1, "corpus run wrote no reports");
    c.expect(trees[0] == trees[1], "corpus runs differ");
    for (const auto& [file, text] : trees[0])
        if (trees[1].count(file) && trees[1].at(file) != text) c.expect(false, file + " differs between runs");

    std::size_t verified = 0;
    for (const auto& [file, text] : trees[0]) {
        if (file == "summary.json") continue;
        if (io::Json::parse(text).value("status", "") != "holds") continue;
        std::ostringstream so, se;
        const auto path = (root / "run0" / file).string();
        const int code = cli::run({"--verify-only", path}, so, se);
        c.expect(code == 0, file + ": --verify-only exited with " + std::to_string(code));
        ++verified;
    }
    c.expect(verified >= 50, "too few holds reports");
    c.note(n(trees[0].size() - 1) + " reports byte-identical, " + n(verified) + " holds witnesses re-verified");
    std::error_code ec;
    fs::remove_all(root, ec);
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "finite-category oracle equivalence", oracle_equivalence},
        {2, "functor equivalence battery", functor_battery},
        {3, "unit/counit regularity vs decider", rafael_crosscheck},
        {4, "monad and comonad biconditionals, idempotent adjunctions", monad_theorems},
        {5, "pinned ring extensions", ring_extensions},
        {6, "corings", corings},
        {7, "bimodules", bimodules},
        {8, "Hopf fragment", hopf_checks},
        {9, "determinism and witness integrity", determinism},
    };
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& cr : all) {
        if (!chosen.empty() && !chosen.count(cr.id)) continue;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = c.failures.empty();
        failed += !pass;
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(2);
        t << secs;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.title << "): " << c.passed
                  << " checks, " << t.str() << " s";
        for (const auto& s : c.notes) std::cout << "; " << s;
        std::cout << "\n";
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << "\n";
        if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
    }
    return failed == 0 ? 0 : 1;
}
