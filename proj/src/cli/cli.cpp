#include "internal.hpp"

#include "semisep/errors.hpp"
#include "semisep/sepcheck/sepcheck.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace semisep::cli {

using io::Node;
using io::to_json;
using namespace detail;

namespace {

struct Args {
    std::string category, functor, left, middle, right, map, coring, sweedler_of, bimodule, bialgebra, coalgebra;
    std::string mode = "semiseparable", side = "left", property, field, witness_out, bundle_dir, verify_only;
    std::string manifest, out_dir;
    std::optional<std::size_t> bound;
};

Node file(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return Node::load(path.is_relative() && !base.empty() ? base / path : path, path);
}

Json raw_functor(const Node& n) {
    Json j = n.json();
    for (const char* k : {"source", "target"})
        if (n.has(k)) j[k] = n[k].resolve().json();
    return j;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream o(p, std::ios::binary);
    if (!o) throw InputError("cannot write file", p.string());
    o << text;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& where,
                  const std::string& message, Status s = Status::error) {
    Json e{{"kind", kind}, {"message", message}};
    if (!where.empty()) e["where"] = where;
    return {{"schema_version", io::kSchemaVersion}, {"command", command}, {"status", to_string(s)}, {"error", e}};
}

Status status_of(const Json& report) {
    const auto s = report["status"].get<std::string>();
    return s == "holds" ? Status::holds : s == "fails" ? Status::fails : s == "indeterminate" ? Status::indeterminate : Status::error;
}

std::string strip_where(const InputError& e) {
    std::string m = e.what();
    return e.where().empty() ? m : m.substr(e.where().size() + 2);
}

// Reads the inputs named on the command line into a canonical inline block.
Json gather(const std::string& command, const Args& a, const Json& params, const std::filesystem::path& base) {
    auto o = load_options(params);
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw InputError(std::string("missing required option ") + flag, flag);
        return file(base, v);
    };
    if (command == "cat validate") {
        // Dry load so structural errors point into the file; law violations are reported by execute.
        std::vector<std::string> ignored;
        if (!a.category.empty()) {
            auto n = file(base, a.category);
            io::load_category(n, &ignored);
            return {{"category", n.json()}};
        }
        auto n = need(a.functor, "--functor");
        io::load_functor(n, &ignored);
        return {{"functor", raw_functor(n)}};
    }
    if (command == "cat adjunction")
        return {{"left", to_json(io::load_functor(need(a.left, "--left")))},
                {"right", to_json(io::load_functor(need(a.right, "--right")))}};
    if (command == "cat triple")
        return {{"F", to_json(io::load_functor(need(a.left, "--left")))},
                {"G", to_json(io::load_functor(need(a.middle, "--middle")))},
                {"H", to_json(io::load_functor(need(a.right, "--right")))}};
    if (command.rfind("cat ", 0) == 0) return {{"functor", to_json(io::load_functor(need(a.functor, "--functor")))}};
    if (command == "ring-ext") return {{"map", to_json(io::load_algebra_map(need(a.map, "--map"), o))}};
    if (command == "coalg-map") return {{"map", to_json(io::load_coalgebra_map(need(a.map, "--map"), o))}};
    if (command == "coring") {
        if (!a.sweedler_of.empty()) {
            auto phi = io::load_algebra_map(file(base, a.sweedler_of), o);
            auto c = sepcheck::build_sweedler_coring(phi);
            return {{"coring", to_json(c)}, {"sweedler_of", to_json(phi)}};
        }
        return {{"coring", to_json(io::load_coring(need(a.coring, "--coring"), o))}};
    }
    if (command == "bimodule") return {{"bimodule", to_json(io::load_bimodule(need(a.bimodule, "--bimodule"), o))}};
    if (command == "hopf verdict") return {{"bialgebra", to_json(io::load_bialgebra(need(a.bialgebra, "--bialgebra"), o))}};
    if (command == "hopf grouplikes")
        return {{"coalgebra", to_json(io::load_coalgebra(need(a.coalgebra, "--coalgebra"), o))}};
    if (command == "hopf coalgebra-map") {
        o.check_maps = false;
        return {{"map", to_json(io::load_coalgebra_map(need(a.map, "--map"), o))}};
    }
    throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::filesystem::path& base) {
    CLI::App app{"Decision procedures for semiseparable functors on finite categories and finite-dimensional algebras",
                 "semisep"};
    Args a;
    app.add_option("--verify-only", a.verify_only, "Re-check the witness of a previously emitted report");
    app.require_subcommand(0, 1);

    std::vector<std::pair<CLI::App*, std::string>> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& command, const std::string& help) {
        auto* s = parent->add_subcommand(name, help);
        s->add_option("--witness-out", a.witness_out, "Write the witness block to this file");
        s->add_option("--field", a.field, "Reinterpret constants over Q or Fp:<p>");
        leaves.emplace_back(s, command);
        return s;
    };
    auto modes = CLI::IsMember({"semiseparable", "separable", "naturally_full"});

    auto* cat = app.add_subcommand("cat", "Finite categories and functors");
    cat->require_subcommand(1);
    auto* v = leaf(cat, "validate", "cat validate", "Validate a category or functor file");
    auto* vc = v->add_option("--category", a.category, "Category file");
    v->add_option("--functor", a.functor, "Functor file")->excludes(vc);
    auto* p = leaf(cat, "property", "cat property", "Faithful, full, conservative, Maschke, ...");
    p->add_option("--functor", a.functor)->required();
    p->add_option("--property", a.property)
        ->required()
        ->check(CLI::IsMember({"faithful", "full", "fully_faithful", "conservative", "maschke", "dual_maschke"}));
    auto* d = leaf(cat, "decide", "cat decide", "Search a binatural hom-retraction");
    d->add_option("--functor", a.functor)->required();
    d->add_option("--mode", a.mode)->check(modes);
    d->add_option("--bound", a.bound, "Morphisms per category");
    auto* ide = leaf(cat, "idempotent", "cat idempotent", "Associated natural idempotent");
    ide->add_option("--functor", a.functor)->required();
    ide->add_option("--bound", a.bound);
    auto* co = leaf(cat, "coidentifier", "cat coidentifier", "Factor through the coidentifier");
    co->add_option("--functor", a.functor)->required();
    co->add_option("--bound", a.bound);
    co->add_option("--bundle-dir", a.bundle_dir, "Write quotient, H, Fe and certificates as separate files");
    auto* ad = leaf(cat, "adjunction", "cat adjunction", "Regularity of unit and counit of F -| G");
    ad->add_option("--left", a.left, "Left adjoint F")->required();
    ad->add_option("--right", a.right, "Right adjoint G")->required();
    ad->add_option("--side", a.side)->check(CLI::IsMember({"left", "right"}));
    ad->add_option("--mode", a.mode)->check(modes);
    ad->add_option("--bound", a.bound, "Eilenberg-Moore algebra bound");
    auto* tr = leaf(cat, "triple", "cat triple", "Transfer along an adjoint triple F -| G -| H");
    tr->add_option("--left", a.left, "F")->required();
    tr->add_option("--middle", a.middle, "G")->required();
    tr->add_option("--right", a.right, "H")->required();
    tr->add_option("--mode", a.mode)->check(modes);

    auto* re = leaf(&app, "ring-ext", "ring-ext", "Restriction of scalars along an algebra map");
    re->add_option("--map", a.map)->required();
    re->add_option("--mode", a.mode)->check(modes);
    auto* cm = leaf(&app, "coalg-map", "coalg-map", "Corestriction along a coalgebra map");
    cm->add_option("--map", a.map)->required();
    cm->add_option("--mode", a.mode)->check(modes);
    auto* cr = leaf(&app, "coring", "coring", "Forgetful functor of comodules over a coring");
    auto* crc = cr->add_option("--coring", a.coring);
    cr->add_option("--sweedler-of", a.sweedler_of, "Build the Sweedler coring of an algebra map")->excludes(crc);
    cr->add_option("--mode", a.mode)->check(modes);
    auto* bm = leaf(&app, "bimodule", "bimodule", "Tensoring with a bimodule");
    bm->add_option("--bimodule", a.bimodule)->required();
    bm->add_option("--mode", a.mode)->check(CLI::IsMember({"semiseparable", "separable"}));

    auto* hopf = app.add_subcommand("hopf", "Bialgebras");
    hopf->require_subcommand(1);
    auto* hv = leaf(hopf, "verdict", "hopf verdict", "Right antipode and the coinvariant functor");
    hv->add_option("--bialgebra", a.bialgebra)->required();
    hv->add_option("--bound", a.bound, "Candidates scanned over Fp");
    auto* hg = leaf(hopf, "grouplikes", "hopf grouplikes", "Enumerate grouplike elements over Fp");
    hg->add_option("--coalgebra", a.coalgebra)->required();
    hg->add_option("--bound", a.bound);
    auto* hm = leaf(hopf, "coalgebra-map", "hopf coalgebra-map", "Check a linear map is a coalgebra map");
    hm->add_option("--map", a.map)->required();

    auto* corpus = app.add_subcommand("corpus", "Bundled corpus");
    corpus->require_subcommand(1);
    auto* crun = corpus->add_subcommand("run", "Replay every case of a manifest");
    crun->add_option("--manifest", a.manifest)->required();
    crun->add_option("--out-dir", a.out_dir, "Write one report per case and summary.json");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "semisep: " << e.what() << "\n";
        return kUsage;
    }

    if (!a.verify_only.empty()) {
        try {
            auto n = file(base, a.verify_only);
            auto ver = verify_report(n.json());
            Json r{{"schema_version", io::kSchemaVersion},
                   {"command", "verify-only"},
                   {"report_command", n.json()["command"]},
                   {"report_status", n.json()["status"]},
                   {"verification", ver}};
            out << io::dump(r);
            return ver["verified"].get<bool>() ? kHolds : kFails;
        } catch (const InputError& e) {
            out << io::dump(error_report("verify-only", "input", e.where(), strip_where(e)));
            err << "semisep: " << e.what() << "\n";
            return kUsage;
        }
    }
    if (crun->parsed()) {
        std::filesystem::path m(a.manifest);
        if (m.is_relative() && !base.empty()) m = base / m;
        return corpus_run(m, a.out_dir, out, err);
    }

    std::string command;
    for (auto& [s, c] : leaves)
        if (s->parsed()) command = c;
    if (command.empty()) {
        out << app.help();
        return kUsage;
    }

    Json params = Json::object();
    if (!a.field.empty()) params["field"] = a.field;
    if (command == "cat property") params["property"] = a.property;
    if (command == "cat decide" || command == "cat adjunction" || command == "cat triple" || command == "ring-ext" ||
        command == "coalg-map" || command == "coring" || command == "bimodule")
        params["mode"] = a.mode;
    if (command == "cat adjunction") params["side"] = a.side;
    if (a.bound) params["bound"] = *a.bound;

    Json report;
    int code = kUsage;
    try {
        auto input = gather(command, a, params, base);
        report = execute(command, input, params);
        report["verification"] = verify_report(report);
        code = exit_code(status_of(report));
    } catch (const InputError& e) {
        report = error_report(command, "input", e.where(), strip_where(e));
        err << "semisep: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        report = error_report(command, "precondition", "", e.what());
        err << "semisep: " << e.what() << "\n";
    } catch (const BoundExceeded& e) {
        report = error_report(command, "search bound", "", e.what(), Status::indeterminate);
        err << "semisep: " << e.what() << "\n";
        code = kIndeterminate;
    }
    out << io::dump(report);
    try {
        if (!a.witness_out.empty() && report.contains("witness")) write_file(a.witness_out, io::dump(report["witness"]));
        if (!a.bundle_dir.empty() && report.contains("witness")) {
            std::filesystem::path dir(a.bundle_dir);
            const auto& w = report["witness"];
            write_file(dir / "quotient.json", io::dump(w["quotient"]));
            write_file(dir / "H.json", io::dump(w["H"]));
            write_file(dir / "Fe.json", io::dump(w["Fe"]));
            write_file(dir / "certificates.json", io::dump(report["certificates"]));
        }
    } catch (const InputError& e) {
        err << "semisep: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}

}  // namespace semisep::cli
