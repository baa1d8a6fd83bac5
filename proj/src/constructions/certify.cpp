#include "certify.hpp"

#include "orthodb/error.hpp"

namespace orthodb {

bool ConstructionResult::certified() const {
  if (certificate.empty()) return false;
  for (const auto& rep : certificate) {
    if (!rep.holds) return false;
  }
  return true;
}

namespace detail {

std::vector<oracle::Sequence> sequences_of(const std::vector<Word>& words) {
  std::vector<oracle::Sequence> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.entries);
  return out;
}

void require(ConstructionResult& r, oracle::VerificationReport report) {
  const bool ok = report.holds;
  std::string msg = r.family + ": " + report.property;
  if (!ok && report.witness) msg += " fails (" + report.witness->description + ")";
  r.certificate.push_back(std::move(report));
  if (!ok) throw Error(ErrorCode::CertificationFailed, msg);
}

std::vector<Word> words_of(const DirectedMultigraph& g, const std::vector<Circuit>& circuits) {
  std::vector<Word> out;
  out.reserve(circuits.size());
  for (const auto& c : circuits) out.push_back(circuit_to_word(g, c));
  return out;
}

}  // namespace detail
}  // namespace orthodb
