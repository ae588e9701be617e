// Copyright 2026 The punctseg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>

#include "punctseg/metrics.h"

namespace punctseg {
namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string format_report_text(const EvalReport& r) {
  std::string out = pad_left("class", 12) + pad_left("precision", 11) +
                    pad_left("recall", 10) + pad_left("f1-score", 10) +
                    pad_left("samples", 11) + "\n";
  auto row = [&](const std::string& name, const std::string& p,
                 const std::string& rc, const std::string& f, std::uint64_t n) {
    out += pad_left(name, 12) + pad_left(p, 11) + pad_left(rc, 10) +
           pad_left(f, 10) + pad_left(std::to_string(n), 11) + "\n";
  };
  for (PunctLabel l : kReportOrder) {
    const ClassMetrics& m = r.of(l);
    row(std::string(1, to_char(l)), format_double(m.precision),
        format_double(m.recall), format_double(m.f1), m.support);
  }
  out += "\n";
  row("accuracy", "", "", format_double(r.accuracy), r.total);
  row("macro avg", format_double(r.macro_precision),
      format_double(r.macro_recall), format_double(r.macro_f1), r.total);
  row("weighted avg", format_double(r.weighted_precision),
      format_double(r.weighted_recall), format_double(r.weighted_f1), r.total);
  if (r.any_undefined) {
    out += "note: some precision/recall values had a zero denominator and are reported as 0\n";
  }
  return out;
}

std::string format_report_tsv(const EvalReport& r) {
  std::string out = "class\tprecision\trecall\tf1\tsupport\n";
  auto row = [&](const std::string& name, double p, double rc, double f,
                 std::uint64_t n) {
    out += name + "\t" + format_double(p) + "\t" + format_double(rc) + "\t" +
           format_double(f) + "\t" + std::to_string(n) + "\n";
  };
  for (PunctLabel l : kReportOrder) {
    const ClassMetrics& m = r.of(l);
    row(std::string(1, to_char(l)), m.precision, m.recall, m.f1, m.support);
  }
  row("micro_avg", r.accuracy, r.accuracy, r.micro_f1, r.total);
  row("macro_avg", r.macro_precision, r.macro_recall, r.macro_f1, r.total);
  row("weighted_avg", r.weighted_precision, r.weighted_recall, r.weighted_f1,
      r.total);
  return out;
}

std::string format_confusion_tsv(const ConfusionMatrix& cm) {
  std::string out = "gold\\pred";
  for (PunctLabel p : kReportOrder) {
    out += '\t';
    out += to_char(p);
  }
  out += '\n';
  for (PunctLabel g : kReportOrder) {
    out += to_char(g);
    for (PunctLabel p : kReportOrder) out += "\t" + std::to_string(cm.at(g, p));
    out += '\n';
  }
  return out;
}

std::string format_boundary_tsv(const BoundaryScore& s) {
  return "precision\trecall\tf1\ttp\tfp\tfn\n" + format_double(s.precision) +
         "\t" + format_double(s.recall) + "\t" + format_double(s.f1) + "\t" +
         std::to_string(s.true_positives) + "\t" +
         std::to_string(s.false_positives) + "\t" +
         std::to_string(s.false_negatives) + "\n";
}

std::string format_summary_tsv(
    const std::vector<std::pair<std::string, DistributionSummary>>& rows) {
  std::string out = "condition\tn\tmedian\taverage\tstddev\tci_lo\tci_hi\n";
  for (const auto& [name, s] : rows) {
    out += name + "\t" + std::to_string(s.n) + "\t" + format_double(s.median) +
           "\t" + format_double(s.average) + "\t" +
           format_double(s.stddev) + "\t" + format_double(s.ci_low) +
           "\t" + format_double(s.ci_high) + "\n";
  }
  return out;
}

}  // namespace punctseg
