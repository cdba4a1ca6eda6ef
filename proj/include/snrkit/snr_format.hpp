#ifndef SNRKIT_SNR_FORMAT_HPP
#define SNRKIT_SNR_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snrkit/decompose.hpp"
#include "snrkit/seminearring.hpp"
#include "snrkit/theorems.hpp"

namespace snrkit {

class ParseError : public SnrError {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// The .snr document: UTF-8, LF, `#` comments, whitespace-separated tokens.
//
//   seminearring NAME
//   order N
//   elements NAME...        (optional, exactly N names)
//   add
//   N lines of N indices
//   mul
//   N lines of N indices
//   end
//
// Names match [A-Za-z0-9_]+; indices are 0-based decimal.  Parsing does not
// validate the algebra (the `check` command does); serialization emits the
// normalized form (single spaces, LF), and parse o serialize is the
// identity on normalized documents.
struct SnrDocument {
  std::string name;
  int order;
  std::vector<std::string> element_names;  // empty or size `order`
  OpTable add;
  OpTable mul;

  bool operator==(const SnrDocument&) const = default;
};

SnrDocument parse_snr(std::string_view text);
std::string serialize_snr(const SnrDocument& doc);

SnrDocument to_document(const FiniteSeminearring& s, std::string name);
FiniteSeminearring to_seminearring(const SnrDocument& doc);  // validating

enum class ReportFormat { text, json };

struct CheckOutcome {
  bool valid = true;
  std::string axiom;  // violated axiom when invalid
  std::vector<Elem> witness;
};

std::string emit_check_report(const SnrDocument& doc, const CheckOutcome& out,
                              ReportFormat format);

std::string emit_classification_report(const FiniteSeminearring& s,
                                       std::string_view name,
                                       const Classification& c,
                                       ReportFormat format);

// relation: one of 'L', 'R', 'H', 'J' to restrict the output.
std::string emit_greens_report(const FiniteSeminearring& s,
                               std::string_view name, const GreensData& g,
                               ReportFormat format,
                               std::optional<char> relation = {});

std::string emit_components_report(const FiniteSeminearring& s,
                                   std::string_view name,
                                   const std::vector<Component>& comps,
                                   ReportFormat format);

std::string emit_theorems_report(const FiniteSeminearring& s,
                                 std::string_view name,
                                 const std::vector<TheoremReport>& reports,
                                 ReportFormat format);

}  // namespace snrkit

#endif  // SNRKIT_SNR_FORMAT_HPP
