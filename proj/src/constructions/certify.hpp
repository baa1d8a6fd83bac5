#pragma once

#include <string>
#include <vector>

#include "orthodb/constructions.hpp"

namespace orthodb::detail {

std::vector<oracle::Sequence> sequences_of(const std::vector<Word>& words);

/// Appends `report` to the certificate; throws CertificationFailed if it fails.
void require(ConstructionResult& r, oracle::VerificationReport report);

std::vector<Word> words_of(const DirectedMultigraph& g, const std::vector<Circuit>& circuits);

}  // namespace orthodb::detail
