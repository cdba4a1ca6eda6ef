#include "snrkit/snr_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace snrkit {

namespace {

using ordered_json = nlohmann::ordered_json;

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct Token {
  std::string text;
  int line;
  int column;  // 1-based
};

// Comment-stripped, whitespace-split token rows; one row per non-blank line.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  int line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(start, eol - start);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<Token> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      row.push_back(
          {std::string(line.substr(i, j - i)), line_no, static_cast<int>(i + 1)});
      i = j;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (eol == text.size()) break;
    start = eol + 1;
    ++line_no;
  }
  return rows;
}

int parse_int(const Token& tok, const char* what) {
  if (tok.text.empty() ||
      !std::all_of(tok.text.begin(), tok.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError(tok.line, tok.column,
                     std::string(what) + " must be a non-negative integer, got '" +
                         tok.text + "'");
  if (tok.text.size() > 7)
    throw ParseError(tok.line, tok.column, std::string(what) + " is too large");
  return std::stoi(tok.text);
}

std::vector<std::string> names_for(const FiniteSeminearring& s,
                                   const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (Elem e : elems) out.push_back(s.name_of(e));
  return out;
}

std::string join_names(const FiniteSeminearring& s,
                       const std::vector<Elem>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += s.name_of(elems[i]);
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string hyphenated(TheoremId id) {
  std::string out{to_string(id)};
  for (char& c : out)
    if (c == '_') c = '-';
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : SnrError("parse error at line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

SnrDocument parse_snr(std::string_view text) {
  const std::vector<std::vector<Token>> rows = tokenize(text);
  std::size_t cursor = 0;
  const auto next_row = [&]() -> const std::vector<Token>& {
    if (cursor >= rows.size()) {
      const int line = rows.empty() ? 1 : rows.back().front().line + 1;
      throw ParseError(line, 1, "unexpected end of document");
    }
    return rows[cursor++];
  };
  const auto expect_keyword = [&](const std::vector<Token>& row,
                                  std::string_view kw, std::size_t arity) {
    if (row[0].text != kw)
      throw ParseError(row[0].line, row[0].column,
                       "expected '" + std::string(kw) + "', got '" +
                           row[0].text + "'");
    if (row.size() != arity + 1)
      throw ParseError(row[0].line, row[0].column,
                       "'" + std::string(kw) + "' takes " +
                           std::to_string(arity) + " argument(s)");
  };

  const std::vector<Token>& header = next_row();
  expect_keyword(header, "seminearring", 1);
  if (!valid_name(header[1].text))
    throw ParseError(header[1].line, header[1].column,
                     "name must match [A-Za-z0-9_]+");
  const std::string name = header[1].text;

  const std::vector<Token>& order_row = next_row();
  expect_keyword(order_row, "order", 1);
  const int order = parse_int(order_row[1], "order");
  if (order < 1)
    throw ParseError(order_row[1].line, order_row[1].column,
                     "order must be >= 1");
  if (order > 4096)
    throw ParseError(order_row[1].line, order_row[1].column,
                     "order exceeds the supported limit of 4096");

  std::vector<std::string> element_names;
  const std::vector<Token>* row = &next_row();
  if ((*row)[0].text == "elements") {
    if (static_cast<int>(row->size()) != order + 1)
      throw ParseError((*row)[0].line, (*row)[0].column,
                       "'elements' needs exactly " + std::to_string(order) +
                           " names, got " + std::to_string(row->size() - 1));
    for (std::size_t i = 1; i < row->size(); ++i) {
      if (!valid_name((*row)[i].text))
        throw ParseError((*row)[i].line, (*row)[i].column,
                         "element name must match [A-Za-z0-9_]+");
      element_names.push_back((*row)[i].text);
    }
    row = &next_row();
  }

  const auto read_table = [&](const std::vector<Token>& kw_row,
                              std::string_view kw) {
    expect_keyword(kw_row, kw, 0);
    std::vector<Elem> entries;
    entries.reserve(static_cast<std::size_t>(order) * order);
    for (int r = 0; r < order; ++r) {
      const std::vector<Token>& trow = next_row();
      if (static_cast<int>(trow.size()) != order)
        throw ParseError(trow[0].line, trow[0].column,
                         "table row needs exactly " + std::to_string(order) +
                             " entries, got " + std::to_string(trow.size()));
      for (const Token& tok : trow) {
        const int v = parse_int(tok, "table entry");
        if (v >= order)
          throw ParseError(tok.line, tok.column,
                           "entry " + tok.text + " out of range for order " +
                               std::to_string(order));
        entries.push_back(v);
      }
    }
    return OpTable(order, std::move(entries));
  };

  OpTable add = read_table(*row, "add");
  OpTable mul = read_table(next_row(), "mul");

  const std::vector<Token>& end_row = next_row();
  expect_keyword(end_row, "end", 0);
  if (cursor != rows.size()) {
    const Token& extra = rows[cursor][0];
    throw ParseError(extra.line, extra.column, "content after 'end'");
  }
  return SnrDocument{name, order, std::move(element_names), std::move(add),
                     std::move(mul)};
}

std::string serialize_snr(const SnrDocument& doc) {
  if (!valid_name(doc.name))
    throw DomainError("document name must match [A-Za-z0-9_]+");
  for (const std::string& n : doc.element_names)
    if (!valid_name(n))
      throw DomainError("element names must match [A-Za-z0-9_]+");
  std::ostringstream out;
  out << "seminearring " << doc.name << "\n";
  out << "order " << doc.order << "\n";
  if (!doc.element_names.empty()) {
    out << "elements";
    for (const std::string& n : doc.element_names) out << ' ' << n;
    out << "\n";
  }
  const auto table = [&](const char* kw, const OpTable& t) {
    out << kw << "\n";
    for (Elem i = 0; i < doc.order; ++i) {
      for (Elem j = 0; j < doc.order; ++j) {
        if (j) out << ' ';
        out << t(i, j);
      }
      out << "\n";
    }
  };
  table("add", doc.add);
  table("mul", doc.mul);
  out << "end\n";
  return out.str();
}

SnrDocument to_document(const FiniteSeminearring& s, std::string name) {
  return SnrDocument{std::move(name), s.order(), s.names(), s.add(), s.mul()};
}

FiniteSeminearring to_seminearring(const SnrDocument& doc) {
  return make_seminearring(doc.add, doc.mul, doc.element_names);
}

std::string emit_check_report(const SnrDocument& doc, const CheckOutcome& out,
                              ReportFormat format) {
  const FiniteSeminearring named =
      detail::make_unchecked(doc.add, doc.mul, doc.element_names);
  if (format == ReportFormat::json) {
    ordered_json j;
    j["name"] = doc.name;
    j["order"] = doc.order;
    j["valid"] = out.valid;
    if (!out.valid) {
      j["axiom"] = out.axiom;
      j["witness"] = out.witness;
      j["witness_names"] = names_for(named, out.witness);
    }
    return dump(j);
  }
  if (out.valid) return "ok\n";
  std::ostringstream os;
  os << "invalid: " << out.axiom << " (witness " << join_names(named, out.witness)
     << ")\n";
  return os.str();
}

std::string emit_classification_report(const FiniteSeminearring& s,
                                       std::string_view name,
                                       const Classification& c,
                                       ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["name"] = name;
    j["order"] = s.order();
    ordered_json flags;
    for (Flag f : kAllFlags) flags[std::string(to_string(f))] = c.flag(f);
    ordered_json witnesses;
    for (Flag f : kAllFlags) {
      const auto it = c.witnesses.find(f);
      if (it != c.witnesses.end()) {
        ordered_json w;
        w["elements"] = it->second;
        w["element_names"] = names_for(s, it->second);
        witnesses[std::string(to_string(f))] = w;
      }
    }
    flags["witnesses"] = witnesses;
    j["classification"] = flags;
    return dump(j);
  }
  std::ostringstream os;
  os << "seminearring " << name << " order " << s.order() << "\n";
  for (Flag f : kAllFlags) {
    os << to_string(f) << ' ' << (c.flag(f) ? "true" : "false");
    const auto it = c.witnesses.find(f);
    if (it != c.witnesses.end() && !it->second.empty())
      os << " (witness " << join_names(s, it->second) << ")";
    os << "\n";
  }
  return os.str();
}

std::string emit_greens_report(const FiniteSeminearring& s,
                               std::string_view name, const GreensData& g,
                               ReportFormat format,
                               std::optional<char> relation) {
  struct Row {
    char tag;
    const std::vector<int>* ids;
    const std::vector<std::vector<Elem>>* classes;
  };
  const std::array<Row, 4> all = {Row{'L', &g.l_class, &g.l_classes},
                                  Row{'R', &g.r_class, &g.r_classes},
                                  Row{'H', &g.h_class, &g.h_classes},
                                  Row{'J', &g.j_class, &g.j_classes}};
  if (format == ReportFormat::json) {
    ordered_json j;
    j["name"] = name;
    j["order"] = s.order();
    ordered_json greens;
    ordered_json classes;
    for (const Row& row : all) {
      if (relation && *relation != row.tag) continue;
      const std::string key(1, static_cast<char>(std::tolower(row.tag)));
      greens[key + "_class"] = *row.ids;
      classes[key] = *row.classes;
    }
    greens["classes"] = classes;
    j["greens"] = greens;
    return dump(j);
  }
  std::ostringstream os;
  os << "seminearring " << name << " order " << s.order() << "\n";
  for (const Row& row : all) {
    if (relation && *relation != row.tag) continue;
    os << row.tag << "+ classes:";
    for (const std::vector<Elem>& cls : *row.classes)
      os << " {" << join_names(s, cls) << "}";
    os << "\n";
  }
  return os.str();
}

std::string emit_components_report(const FiniteSeminearring& s,
                                   std::string_view name,
                                   const std::vector<Component>& comps,
                                   ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["name"] = name;
    j["order"] = s.order();
    ordered_json arr = ordered_json::array();
    for (const Component& c : comps) {
      ordered_json cj;
      cj["elements"] = c.elements;
      cj["element_names"] = names_for(s, c.elements);
      cj["is_near_ring"] = c.flags.is_near_ring;
      if (c.zero)
        cj["zero"] = *c.zero;
      else
        cj["zero"] = nullptr;
      cj["regular"] = c.flags.regular;
      cj["inverse"] = c.flags.inverse;
      cj["completely_regular"] = c.flags.completely_regular;
      cj["clifford"] = c.flags.clifford;
      cj["zero_symmetric"] = c.flags.zero_symmetric;
      if (c.failure_witness) {
        ordered_json w;
        w["flag"] = c.failure_witness->flag;
        w["elements"] = c.failure_witness->elements;
        w["element_names"] = names_for(s, c.failure_witness->elements);
        cj["failure_witness"] = w;
      } else {
        cj["failure_witness"] = nullptr;
      }
      arr.push_back(cj);
    }
    j["components"] = arr;
    return dump(j);
  }
  std::ostringstream os;
  os << "seminearring " << name << " order " << s.order() << "\n";
  os << "components " << comps.size() << "\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Component& c = comps[i];
    os << "component " << i << ": size " << c.elements.size()
       << " near_ring=" << (c.flags.is_near_ring ? "true" : "false");
    if (c.flags.is_near_ring) {
      os << " zero=" << s.name_of(c.elements[*c.zero])
         << " regular=" << (c.flags.regular ? "true" : "false")
         << " inverse=" << (c.flags.inverse ? "true" : "false")
         << " completely_regular="
         << (c.flags.completely_regular ? "true" : "false")
         << " clifford=" << (c.flags.clifford ? "true" : "false")
         << " zero_symmetric=" << (c.flags.zero_symmetric ? "true" : "false");
    }
    if (c.failure_witness)
      os << " witness=" << c.failure_witness->flag << "("
         << join_names(s, c.failure_witness->elements) << ")";
    os << "\n";
  }
  return os.str();
}

std::string emit_theorems_report(const FiniteSeminearring& s,
                                 std::string_view name,
                                 const std::vector<TheoremReport>& reports,
                                 ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json j;
    j["name"] = name;
    j["order"] = s.order();
    ordered_json arr = ordered_json::array();
    for (const TheoremReport& rep : reports) {
      ordered_json rj;
      rj["theorem_id"] = std::string(to_string(rep.id));
      ordered_json stmts = ordered_json::array();
      for (const TheoremStatement& st : rep.statements) {
        ordered_json sj;
        sj["label"] = st.label;
        sj["holds"] = st.holds;
        sj["witness"] = st.witness;
        sj["witness_names"] = names_for(s, st.witness);
        stmts.push_back(sj);
      }
      rj["statements"] = stmts;
      rj["equivalent"] = rep.equivalent;
      arr.push_back(rj);
    }
    j["theorems"] = arr;
    return dump(j);
  }
  std::ostringstream os;
  for (const TheoremReport& rep : reports) {
    os << hyphenated(rep.id) << ":";
    for (const TheoremStatement& st : rep.statements) {
      os << ' ' << st.label << '=' << (st.holds ? "true" : "false");
      if (!st.holds && !st.witness.empty())
        os << '(' << join_names(s, st.witness) << ')';
    }
    os << (rep.equivalent ? " EQUIVALENT" : " INEQUIVALENT") << "\n";
  }
  return os.str();
}

}  // namespace snrkit
