#include "internal.hpp"

#include "semisep/errors.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace semisep::cli {

using io::Node;

namespace {

struct Case {
    std::string id;
    std::vector<std::string> args;
    std::string expect;
    Json fragment;
    std::string origin;
};

std::string file_name(const std::string& id) {
    std::string out = id;
    std::replace(out.begin(), out.end(), '/', '.');
    return out + ".json";
}

}  // namespace

int corpus_run(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, std::ostream& out,
               std::ostream& err) {
    std::vector<Case> cases;
    double budget = 60;
    try {
        auto m = Node::load(manifest);
        if (m.has("budget_seconds")) budget = static_cast<double>(m["budget_seconds"].count());
        auto cs = m["cases"];
        std::set<std::string> ids;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            auto c = cs[i];
            Case k{c["id"].str(), c["args"].strings(), c["expect"].str(), Json::object(), ""};
            if (!ids.insert(k.id).second) c["id"].fail("duplicate case id '" + k.id + "'");
            static const std::set<std::string> statuses{"holds", "fails", "indeterminate", "error"};
            if (!statuses.count(k.expect)) c["expect"].fail("unknown status '" + k.expect + "'");
            if (c.has("fragment")) k.fragment = c["fragment"].json();
            if (c.has("origin")) k.origin = c["origin"].str();
            cases.push_back(std::move(k));
        }
    } catch (const InputError& e) {
        err << "semisep: " << e.what() << "\n";
        return kUsage;
    }
    std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
    if (cases.empty()) err << "semisep: warning: manifest has no cases\n";
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

    const auto start = std::chrono::steady_clock::now();
    const auto base = manifest.parent_path();
    Json rows = Json::array();
    std::size_t passed = 0;
    bool missing = false;
    for (const auto& c : cases) {
        std::ostringstream o, e;
        const int code = run(c.args, o, e, base);
        Json report;
        try {
            report = Json::parse(o.str());
        } catch (const Json::parse_error&) {
            report = Json::object();
        }
        const std::string status = report.value("status", std::string("error"));
        const bool verified = status != "holds" || (report.contains("verification") && report["verification"].value("verified", false));
        bool fragment_ok = true;
        for (auto it = c.fragment.begin(); it != c.fragment.end(); ++it) {
            Json::json_pointer ptr(it.key());
            fragment_ok = fragment_ok && report.contains(ptr) && report[ptr] == it.value();
        }
        if (report.contains("error") && report["error"].value("message", std::string()) == "missing fixture") {
            missing = true;
            err << "semisep: case " << c.id << ": missing fixture " << report["error"].value("where", std::string()) << "\n";
        }
        const bool ok = status == c.expect && verified && fragment_ok;
        if (ok) ++passed;
        else {
            err << "semisep: case " << c.id << ": expected " << c.expect << ", got " << status;
            if (!verified) err << " (witness did not re-verify)";
            if (!fragment_ok) err << " (witness fragment mismatch)";
            err << "\n";
        }
        Json row{{"id", c.id}, {"expected", c.expect}, {"status", status}, {"exit_code", code},
                 {"verified", verified}, {"fragment_ok", fragment_ok}, {"pass", ok}};
        if (!c.origin.empty()) row["origin"] = c.origin;
        rows.push_back(std::move(row));
        if (!out_dir.empty()) {
            std::ofstream f(out_dir / file_name(c.id), std::ios::binary);
            f << io::dump(report);
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within = elapsed <= budget;
    if (!within) err << "semisep: corpus exceeded its wall-clock budget of " << budget << " s\n";
    Json summary{{"schema_version", io::kSchemaVersion},
                 {"manifest", manifest.filename().string()},
                 {"total", cases.size()},
                 {"passed", passed},
                 {"failed", cases.size() - passed},
                 {"within_budget", within},
                 {"cases", rows}};
    out << io::dump(summary);
    if (!out_dir.empty()) {
        std::ofstream f(out_dir / "summary.json", std::ios::binary);
        f << io::dump(summary);
    }
    if (missing) return kUsage;
    return passed == cases.size() && within ? kHolds : kFails;
}

}  // namespace semisep::cli
