#pragma once

#include "gla/folding.hpp"

namespace gla {

struct BadSpec : std::invalid_argument {
    explicit BadSpec(const std::string& what) : std::invalid_argument(what) {}
};

/// Declarative datum description: lattice label, automorphism, epsilon kind.
struct DatumSpec {
    std::string lattice;
    std::string aut_kind; // "coxeter_power", "word", "matrix", "minus_identity"
    std::vector<int> word;
    IMat rows;
    long power = 1;
    EpsKind epsilon = EpsKind::eps_w;
};

/// Parsed case file: either a datum, a folding case, or a named descent
/// pipeline.
struct CaseSpec {
    enum class Kind { datum, fold, descend };
    Kind kind = Kind::datum;
    DatumSpec datum;
    FoldingCase fold;
    std::string descend_pipeline;
};

/// Parses the textual key-value format; throws BadSpec on unknown keys or
/// malformed values.
CaseSpec parse_spec_text(const std::string& text);
CaseSpec load_spec_file(const std::string& path);

/// Bundled case names, in documentation order.
const std::vector<std::string>& case_names();
/// Maps a case name like "fold:A3C2" to its bundled file name.
std::string case_file_name(const std::string& case_name);

LatticeAut build_aut(const RootLattice& L, const DatumSpec& spec);
ExtensionDatum build_datum(const DatumSpec& spec);

} // namespace gla
