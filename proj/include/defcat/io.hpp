#ifndef DEFCAT_IO_HPP
#define DEFCAT_IO_HPP

#include <memory>
#include <string>

#include "json.hpp"

#include "defcat/deform.hpp"
#include "defcat/hochschild.hpp"

namespace defcat {

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& location, const std::string& w)
        : Error("schema error at " + location + ": " + w) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& location, const std::string& w)
        : Error("validation error at " + location + ": " + w) {}
};

/// A loaded document: field, optional sections. Loading validates shapes and
/// structural invariants; coherence is verified unless deferred (the check
/// command reports violations instead of failing the load).
struct Workspace {
    int version = 1;
    Field field = Field::rationals();
    std::shared_ptr<FusionCat> category, category2;
    std::shared_ptr<MonFunctor> functor;
    std::shared_ptr<Bimodule> bimodule;
    std::shared_ptr<Algebra> algebra;
    nlohmann::json deformation;  // raw section; materialized against a tower
    nlohmann::json nat;          // raw natural-transformation section
};

Workspace load(const std::string& path, bool require_coherent = true);
Workspace load_json(const nlohmann::json& doc, bool require_coherent = true);

Scalar scalar_from_json(const Field& f, const nlohmann::json& j, const std::string& loc);
nlohmann::json scalar_to_json(const Scalar& s);
nlohmann::json series_to_json(const Series& s);

/// Cochain blocks sorted lexicographically by (tuple, output).
nlohmann::json cochain_to_json(const FusionCat& cat, const CochainSpace& sp, const Cochain& c);
Cochain cochain_from_json(const FusionCat& cat, const CochainSpace& sp, const nlohmann::json& j,
                          const std::string& loc);

/// Materialize the deformation section against a built category tower.
DeformationState deformation_state(const Workspace& ws, const CategoryComplex& cc);

/// Natural transformation components from the nat section.
std::vector<DecMorK> nat_components(const Workspace& ws, const MonFunctor& f, const MonFunctor& g);

int simple_index(const FusionCat& cat, const std::string& name, const std::string& loc);

}  // namespace defcat

#endif
