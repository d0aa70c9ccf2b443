#pragma once

#include "semisep/adjunction/adjunction.hpp"
#include "semisep/algstruct/structures.hpp"
#include "semisep/certificate.hpp"
#include "semisep/fincat/functor.hpp"
#include "semisep/verdict.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semisep::io {

using Json = nlohmann::ordered_json;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Vector;

inline constexpr int kSchemaVersion = 1;

/// A JSON value with the file it was read from and its JSON pointer. Every
/// accessor throws InputError naming "file#pointer" on a schema violation.
class Node {
public:
    Node(std::shared_ptr<const Json> root, const Json* value, std::filesystem::path file, std::filesystem::path shown,
         std::string pointer);
    /// Parses a file and checks its top-level "schema_version". Errors name the
    /// file as `shown` (defaults to `file`).
    static Node load(const std::filesystem::path& file, const std::filesystem::path& shown = {});
    /// Wraps an in-memory document (no relative references).
    static Node from(Json doc, std::string name = "<inline>");

    const Json& json() const { return *value_; }
    const std::filesystem::path& file() const { return file_; }
    std::string where() const;
    [[noreturn]] void fail(const std::string& what) const;

    bool has(const std::string& key) const;
    Node operator[](const std::string& key) const;
    Node operator[](std::size_t i) const;
    std::size_t size() const;
    std::vector<std::string> keys() const;
    /// A string is a path relative to this node's file; objects are returned as is.
    Node resolve() const;

    std::string str() const;
    std::size_t count() const;
    bool boolean() const;
    Scalar scalar(Field f) const;
    Vector vector(Field f, std::optional<std::size_t> n = {}) const;
    /// Array of rows.
    Matrix matrix(Field f, std::size_t rows, std::size_t cols) const;
    std::vector<std::string> strings() const;

private:
    std::shared_ptr<const Json> root_;
    const Json* value_;
    std::filesystem::path file_;
    std::filesystem::path shown_;
    std::string pointer_;
};

/// `field` overrides the "field" tag of every algebra and coalgebra read.
/// `check_maps` off skips the law check on loaded algebra and coalgebra maps.
struct LoadOptions {
    std::optional<Field> field;
    bool check_maps = true;
};

/// With `violations` given, law violations are returned there instead of thrown.
fincat::CategoryPtr load_category(const Node& n, std::vector<std::string>* violations = nullptr);
fincat::FinFunctor load_functor(const Node& n, std::vector<std::string>* violations = nullptr);
algstruct::FDAlgebra load_algebra(const Node& n, const LoadOptions& o = {});
algstruct::FDCoalgebra load_coalgebra(const Node& n, const LoadOptions& o = {});
algstruct::Bimodule load_bimodule(const Node& n, const LoadOptions& o = {});
algstruct::Coring load_coring(const Node& n, const LoadOptions& o = {});
algstruct::Bialgebra load_bialgebra(const Node& n, const LoadOptions& o = {});
algstruct::AlgebraMap load_algebra_map(const Node& n, const LoadOptions& o = {});
algstruct::CoalgebraMap load_coalgebra_map(const Node& n, const LoadOptions& o = {});

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const std::vector<Matrix>& ms);
Json to_json(const Verdict& v);
Json to_json(const Certificates& cs);
Json to_json(const fincat::FinCategory& c);
/// Inline source and target plus full object and morphism tables.
Json to_json(const fincat::FinFunctor& f);
/// Components by object name.
Json to_json(const fincat::NatTrans& a);
Json to_json(const algstruct::FDAlgebra& a);
Json to_json(const algstruct::FDCoalgebra& c);
Json to_json(const algstruct::Bimodule& m);
Json to_json(const algstruct::Coring& c);
Json to_json(const algstruct::Bialgebra& b);
Json to_json(const algstruct::AlgebraMap& f);
Json to_json(const algstruct::CoalgebraMap& f);

/// Components given by object name → morphism name.
fincat::NatTrans load_nat_trans(const Node& n, const fincat::FinFunctor& from, const fincat::FinFunctor& to);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace semisep::io
