#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hardy/axioms.hpp"
#include "hardy/classification.hpp"
#include "hardy/estimator.hpp"
#include "hardy/mean.hpp"
#include "hardy/prefix.hpp"
#include "hardy/probes.hpp"

namespace hardy {

// Key order follows insertion so reports diff cleanly between runs.
using Json = nlohmann::ordered_json;

/// Finite values become JSON numbers; infinities and NaN become the strings
/// "+inf", "-inf" and "nan", which JSON cannot otherwise carry.
Json json_real(double x);

Json to_json(const MeanSpec& mean, const ClassificationResult& r);
Json to_json(const HardyRatio& r);
Json to_json(const ProbeReport& r);
Json to_json(const GrowthFit& fit);
Json to_json(const DSequenceResult& r);
Json to_json(const MulhollandResult& r);
Json to_json(const AxiomReport& r);
Json to_json(const FamilySearchResult& r);
Json to_json(const CounterexampleResult& r);
Json to_json(const GiniLimitResult& r);

/// Comma-separated rows with a header line and LF endings. Reals are written
/// with 17 significant digits so a reader recovers the exact doubles. Text
/// cells containing a comma, quote or newline are quoted.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string> header);

  CsvWriter& cell(double x);
  CsvWriter& cell(std::size_t n);
  CsvWriter& cell(const std::string& s);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

}  // namespace hardy
