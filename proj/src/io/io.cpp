#include "orthodb/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "orthodb/error.hpp"

namespace orthodb::io {

using nlohmann::json;

std::string render_label(const Alphabet& a, std::span<const Symbol> w) {
  if (std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < a.size(); })) {
    return a.render(w);
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

std::string param_string(const ConstructionResult& r) {
  std::string out = "sigma=" + std::to_string(r.sigma);
  for (const auto& [key, value] : r.params) {
    if (key != "sigma") out += " " + key + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

std::string to_dot(const DirectedMultigraph& g, const Alphabet& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  out << "  // " << to_string(g.info().family) << " sigma=" << g.info().sigma
      << " order=" << g.info().order << " vertices=" << g.vertex_count()
      << " arcs=" << g.arc_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=" << quoted(render_label(a, g.vertex(v).label.view())) << "];\n";
  }
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const auto& arc = g.arc(e);
    out << "  v" << arc.tail << " -> v" << arc.head
        << " [label=" << quoted(render_label(a, g.arc_word(e))) << "];\n";
  }
  out << "}\n";
  return out.str();
}

json graph_to_json(const DirectedMultigraph& g, const Alphabet& a) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"id", v}, {"label", render_label(a, g.vertex(v).label.view())}});
  }
  json arcs = json::array();
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const auto& arc = g.arc(e);
    arcs.push_back({{"id", e},
                    {"tail", arc.tail},
                    {"head", arc.head},
                    {"word", render_label(a, g.arc_word(e))}});
  }
  return {{"family", to_string(g.info().family)},
          {"sigma", g.info().sigma},
          {"order", g.info().order},
          {"vertices", std::move(vertices)},
          {"arcs", std::move(arcs)}};
}

json report_to_json(const oracle::VerificationReport& r) {
  json j = {{"property", r.property}, {"holds", r.holds}};
  if (r.witness) j["witness"] = {{"items", r.witness->items}, {"description", r.witness->description}};
  json hist = json::object();
  for (const auto& [count, windows] : r.histogram) hist[std::to_string(count)] = windows;
  j["histogram"] = std::move(hist);
  return j;
}

json result_to_json(const ConstructionResult& r, const Alphabet& a) {
  json params = json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  json sequences = json::array();
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    sequences.push_back({{"word", render_label(a, r.words[i].view())},
                         {"length", r.words[i].size()},
                         {"provenance", i < r.provenance.size() ? r.provenance[i] : ""}});
  }
  json checks = json::array();
  for (const auto& rep : r.certificate) checks.push_back(report_to_json(rep));
  return {{"family", r.family},
          {"sigma", r.sigma},
          {"k", r.k},
          {"alphabet", a.tokens()},
          {"parameters", std::move(params)},
          {"graph", {{"family", to_string(r.graph.info().family)},
                     {"order", r.graph.info().order},
                     {"vertices", r.graph.vertex_count()},
                     {"arcs", r.graph.arc_count()}}},
          {"sequences", std::move(sequences)},
          {"certificate", {{"certified", r.certified()}, {"checks", std::move(checks)}}}};
}

std::string to_text(const ConstructionResult& r, const Alphabet& a) {
  std::string out;
  for (const auto& w : r.words) out += render_label(a, w.view()) + "\n";
  return out;
}

std::string to_fasta(const ConstructionResult& r, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    const auto rot = minimal_rotation(r.words[i].entries);
    out += ">seq" + std::to_string(i) + " " + r.family + " " + param_string(r) +
           " length=" + std::to_string(rot.size()) +
           " circular (linearized at the minimal rotation; windows wrap around)\n";
    const std::string body = render_label(a, rot);
    for (std::size_t p = 0; p < body.size(); p += 70) out += body.substr(p, 70) + "\n";
  }
  return out;
}

std::vector<std::vector<Symbol>> read_words(std::istream& in, const Alphabet& a) {
  std::vector<std::string> texts;
  bool fasta = false;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(),
                              [](unsigned char ch) { return std::isspace(ch); }),
               line.end());
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (!fasta && !texts.empty()) {
        throw Error(ErrorCode::InvalidArgument, "plain lines before the first FASTA header");
      }
      fasta = true;
      texts.emplace_back();
    } else if (fasta) {
      texts.back() += line;
    } else {
      texts.push_back(line);
    }
  }
  std::vector<std::vector<Symbol>> out;
  for (const auto& t : texts) {
    if (t.empty()) throw Error(ErrorCode::InvalidArgument, "empty FASTA record");
    out.push_back(a.parse(t));
  }
  return out;
}

std::string csv_row(std::span<const std::string> cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    const auto& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      out += c;
      continue;
    }
    out += '"';
    for (char ch : c) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

}  // namespace orthodb::io
