#ifndef GCKIT_DOCUMENT_HPP
#define GCKIT_DOCUMENT_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gckit/cartan.hpp"
#include "gckit/matrix.hpp"
#include "gckit/subspace.hpp"

namespace gckit {

/// A structure definition loaded from a JSON document.  Polynomial entries
/// follow the text grammar over variables x1..xd; `i` is the imaginary unit.
struct StructureDoc {
    enum class Kind { constant, field };

    Kind kind = Kind::constant;
    int dimension = 0;
    PMat matrix; // 2d x 2d; degree 0 for constant documents

    std::optional<std::vector<Rational>> point;
    std::map<std::string, Subspace> subspaces;

    /// Product-chart declaration: variables x1, x2 are the leaf coordinates,
    /// x3.. the transverse ones.
    struct ChartDecl {
        int n_dim = 0;
        std::optional<PMat> family;  // 2 x n_dim cross terms
        std::optional<OneForm> xi_p; // one-form components
        std::optional<OneForm> xi_q;
        std::optional<KForm> tau;    // form for the flow-integral identity
    };
    std::optional<ChartDecl> chart;

    static StructureDoc parse(const std::string& json_text);
};

struct RunOptions {
    std::optional<std::vector<Rational>> point;
    std::optional<std::string> subspace;
    int degree = 3;

    static RunOptions parse(const std::string& json_text);
};

/// Deterministic machine-readable result: checks sorted by name, derived
/// outputs as canonical strings, no timestamps.
struct Report {
    nlohmann::ordered_json body;
    bool passed = true;

    std::string json_text() const;
};

/// Dispatch one of: check, poisson, decompose, orthcomp, linearize,
/// normalform.  Raises ParseError for unusable inputs (unknown command,
/// missing point or subspace); computational failures become failed checks.
Report run_command(const StructureDoc& doc, const std::string& command,
                   const RunOptions& opts);

} // namespace gckit

#endif
