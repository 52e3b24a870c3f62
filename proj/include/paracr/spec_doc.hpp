// Input documents for the command-line driver.

#ifndef PARACR_SPEC_DOC_HPP_
#define PARACR_SPEC_DOC_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "paracr/classify.hpp"
#include "paracr/dsl.hpp"
#include "paracr/rootsys.hpp"
#include "paracr/satake.hpp"

namespace paracr {

enum class Mode { classify, enumerate, tables };

std::string to_string(Mode m);

struct SpecDocument {
  AlgebraType algebra;
  // Catalog name when the form came from `realform`; empty optional for an
  // inline `satake` block or no real form.
  std::optional<std::string> real_form_name;
  std::optional<SatakeDiagram> real_form;
  std::optional<VertexSet> pi1;
  std::optional<Decomposition> decomposition;
  Mode mode = Mode::classify;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Parses and validates a document:
//   algebra <type>                          (required)
//   realform <name> | satake black {..} arrows {(i,j),..}
//   pi1 {..}                                (required for classify)
//   split plus {..} minus {..}
//   mode classify|enumerate|tables
// Throws dsl::ParseError with line and column on syntax and semantic errors.
SpecDocument parse_spec(std::string_view text,
                        const SatakeCatalog& catalog = SatakeCatalog::bundled());

// Canonical text of a document; parse_spec(print_spec(d)) == d.
std::string print_spec(const SpecDocument& doc);

} // namespace paracr

#endif
