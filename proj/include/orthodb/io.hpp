#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthodb/alphabet.hpp"
#include "orthodb/constructions.hpp"
#include "orthodb/graph.hpp"
#include "orthodb/oracle.hpp"

namespace orthodb::io {

/// Vertex and arc words rendered with `a` when every symbol fits it,
/// otherwise as comma-separated integers.
std::string render_label(const Alphabet& a, std::span<const Symbol> w);

std::string to_dot(const DirectedMultigraph& g, const Alphabet& a, const std::string& name = "G");
nlohmann::json graph_to_json(const DirectedMultigraph& g, const Alphabet& a);

nlohmann::json report_to_json(const oracle::VerificationReport& r);
/// Parameters, words, per-circuit provenance and the certificate summary.
nlohmann::json result_to_json(const ConstructionResult& r, const Alphabet& a);

/// One word per line, as produced.
std::string to_text(const ConstructionResult& r, const Alphabet& a);
/// Each word at its minimal rotation; headers carry the parameters.
std::string to_fasta(const ConstructionResult& r, const Alphabet& a);

/// One circular word per non-empty line, or FASTA records (lines after a
/// '>' header are concatenated). Whitespace inside a line is ignored.
std::vector<std::vector<Symbol>> read_words(std::istream& in, const Alphabet& a);

/// RFC 4180 quoting where needed.
std::string csv_row(std::span<const std::string> cells);

}  // namespace orthodb::io
