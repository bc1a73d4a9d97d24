#include "coverlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "coverlat/descriptions.hpp"
#include "coverlat/errors.hpp"

namespace coverlat::io {

namespace {

std::string label_of(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw Error(Errc::ParseError, "labels must be strings or integers, got " + value.dump());
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '{' || ch == '}') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

json labels_json(const Subset& x, const Universe& universe) {
  json out = json::array();
  x.for_each([&](std::size_t i) { out.push_back(universe.label(i)); });
  return out;
}

json family_json(std::span<const Subset> sets, const Universe& universe) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(labels_json(s, universe));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string_view reason_name(AlgebraFailure r) {
  switch (r) {
    case AlgebraFailure::NoPseudocomplement: return "no pseudocomplement";
    case AlgebraFailure::IdentityFails: return "identity fails";
    case AlgebraFailure::NotDistributive: return "not distributive";
  }
  return "unknown";
}

json algebra_witness_json(const AlgebraWitness& w, const Universe& u) {
  return {{"reason", reason_name(w.reason)}, {"element", labels_json(w.element, u)}};
}

}  // namespace

Covering parse_covering_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("covering") || !doc["covering"].is_array()) {
    throw Error(Errc::ParseError, "expected an object with a \"covering\" array");
  }
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : doc["covering"]) {
    if (!block.is_array()) throw Error(Errc::ParseError, "each block must be an array of labels");
    auto& b = blocks.emplace_back();
    for (const auto& label : block) b.push_back(label_of(label));
  }
  std::vector<std::string> labels;
  if (doc.contains("universe")) {
    if (!doc["universe"].is_array()) throw Error(Errc::ParseError, "\"universe\" must be an array");
    for (const auto& label : doc["universe"]) labels.push_back(label_of(label));
  } else {
    throw Error(Errc::ParseError, "missing \"universe\" array");
  }
  return Covering::from_labels(std::make_shared<const Universe>(std::move(labels)), blocks);
}

Covering parse_covering_text(std::string_view text) {
  std::vector<std::vector<std::string>> blocks;
  std::optional<std::vector<std::string>> declared;
  std::istringstream in{std::string(text)};
  std::string raw;
  bool first = true;
  while (std::getline(in, raw)) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("universe:")) {
      if (!first) throw Error(Errc::ParseError, "\"universe:\" must be the first line");
      declared = tokens(line.substr(9));
    } else {
      blocks.push_back(tokens(line));
    }
    first = false;
  }

  std::vector<std::string> labels;
  if (declared) {
    labels = std::move(*declared);
  } else {
    for (const auto& b : blocks)
      for (const auto& l : b)
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    const bool numeric =
        std::all_of(labels.begin(), labels.end(), [](const auto& l) { return as_integer(l).has_value(); });
    if (numeric) {
      std::sort(labels.begin(), labels.end(),
                [](const auto& a, const auto& b) { return *as_integer(a) < *as_integer(b); });
    } else {
      std::sort(labels.begin(), labels.end());
    }
  }
  if (labels.empty()) throw Error(Errc::ParseError, "the covering has no elements");
  return Covering::from_labels(std::make_shared<const Universe>(std::move(labels)), blocks);
}

Covering parse_covering(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.starts_with('{') && body.find('"') != std::string_view::npos) {
    return parse_covering_json(text);
  }
  return parse_covering_text(text);
}

Covering read_covering_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") return parse_covering_json(buffer.str());
  return parse_covering(buffer.str());
}

std::string format_subset(const Subset& x, const Universe& universe) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += universe.label(i);
    first = false;
  });
  return out + "}";
}

std::string format_family(std::span<const Subset> sets, const Universe& universe) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ',';
    out += format_subset(sets[i], universe);
  }
  return out + "}";
}

Subset parse_subset(std::string_view text, const Universe& universe) {
  Subset out(universe.size());
  for (const auto& label : tokens(text)) {
    if (label == "∅") continue;
    auto index = universe.index_of(label);
    if (!index) throw Error(Errc::UnknownElement, "'" + label + "' is not an element of the universe");
    out.insert(*index);
  }
  return out;
}

json subset_json(const Subset& x, const Universe& universe) { return labels_json(x, universe); }

json covering_json(const Covering& covering) {
  return {{"universe", covering.universe().labels()},
          {"covering", family_json(covering.blocks(), covering.universe())}};
}

json analysis_json(const ApproxSpace& space) {
  const Universe& u = space.universe();
  json out = covering_json(space.covering());
  out["universe_size"] = u.size();
  json nbhd = json::array();
  json md = json::array();
  for (std::size_t x = 0; x < u.size(); ++x) {
    nbhd.push_back({{"element", u.label(x)}, {"neighborhood", labels_json(space.neighborhoods()[x], u)}});
    md.push_back({{"element", u.label(x)},
                  {"blocks", family_json(space.minimal_descriptions()[x], u)}});
  }
  out["neighborhoods"] = std::move(nbhd);
  out["minimal_descriptions"] = std::move(md);
  out["unary"] = is_unary(space);
  out["neighborhood_partition"] = neighborhoods_form_partition(space);
  out["reduct"] = family_json(space.reduct().blocks(), u);
  out["reduct_partition"] = space.reduct().is_partition();
  return out;
}

std::string analysis_text(const ApproxSpace& space) {
  const Universe& u = space.universe();
  std::ostringstream out;
  out << "universe size: " << u.size() << '\n';
  out << "blocks: " << format_family(space.covering().blocks(), u) << '\n';
  for (std::size_t x = 0; x < u.size(); ++x)
    out << "N(" << u.label(x) << ") = " << format_subset(space.neighborhoods()[x], u) << '\n';
  for (std::size_t x = 0; x < u.size(); ++x)
    out << "Md(" << u.label(x) << ") = " << format_family(space.minimal_descriptions()[x], u) << '\n';
  out << "unary: " << yes_no(is_unary(space)) << '\n';
  out << "neighborhood partition: " << yes_no(neighborhoods_form_partition(space)) << '\n';
  out << "reduct: " << format_family(space.reduct().blocks(), u) << '\n';
  out << "reduct partition: " << yes_no(space.reduct().is_partition()) << '\n';
  return out.str();
}

std::string_view family_name(FamilyKind kind) noexcept {
  return kind == FamilyKind::NeighborhoodFixedPoints ? "P" : "F";
}

json lattice_json(const FixedPointFamily& family, const ClassificationReport& r) {
  const Universe& u = family.space().universe();
  json out;
  out["family"] = family_name(family.kind());
  out["covering"] = covering_json(family.space().covering());
  out["members"] = family_json(family.members(), u);
  out["join_irreducibles"] = family_json(join_irreducibles(family), u);
  json c;
  c["member_count"] = r.member_count;
  c["bounded"] = r.bounded;
  c["complete"] = r.complete;
  c["distributive"] = r.distributive;
  if (r.distributivity_witness) {
    const auto& w = *r.distributivity_witness;
    c["distributivity_witness"] = {{"a", labels_json(w.a, u)}, {"b", labels_json(w.b, u)},
                                   {"c", labels_json(w.c, u)}};
  }
  c["complemented"] = r.complemented;
  if (r.complement_witness) c["complement_witness"] = labels_json(*r.complement_witness, u);
  c["boolean"] = r.boolean;
  c["pseudocomplemented"] = r.pseudocomplemented;
  if (r.pseudocomplement_witness)
    c["pseudocomplement_witness"] = labels_json(*r.pseudocomplement_witness, u);
  c["dual_pseudocomplemented"] = r.dual_pseudocomplemented;
  if (r.dual_pseudocomplement_witness)
    c["dual_pseudocomplement_witness"] = labels_json(*r.dual_pseudocomplement_witness, u);
  c["stone"] = r.stone;
  if (r.stone_witness) c["stone_witness"] = algebra_witness_json(*r.stone_witness, u);
  c["dual_stone"] = r.dual_stone;
  if (r.dual_stone_witness) c["dual_stone_witness"] = algebra_witness_json(*r.dual_stone_witness, u);
  c["double_p_algebra"] = r.double_p_algebra;
  c["double_stone"] = r.double_stone;
  out["classification"] = std::move(c);
  return out;
}

std::string lattice_text(const FixedPointFamily& family, const ClassificationReport& r) {
  const Universe& u = family.space().universe();
  std::ostringstream out;
  auto line = [&](std::string_view name, bool value, const std::string& witness = {}) {
    out << name << ": " << yes_no(value);
    if (!witness.empty()) out << "  witness " << witness;
    out << '\n';
  };
  auto subset = [&](const std::optional<Subset>& s) { return s ? format_subset(*s, u) : std::string(); };
  auto algebra = [&](const std::optional<AlgebraWitness>& w) {
    if (!w) return std::string();
    return format_subset(w->element, u) + " (" + std::string(reason_name(w->reason)) + ")";
  };

  out << "family: " << family_name(family.kind()) << '\n';
  out << "members (" << family.size() << "): " << format_family(family.members(), u) << '\n';
  out << "join-irreducibles: " << format_family(join_irreducibles(family), u) << '\n';
  line("bounded", r.bounded);
  line("complete", r.complete);
  std::string triple;
  if (r.distributivity_witness) {
    const auto& w = *r.distributivity_witness;
    triple = "a=" + format_subset(w.a, u) + " b=" + format_subset(w.b, u) +
             " c=" + format_subset(w.c, u);
  }
  line("distributive", r.distributive, triple);
  line("complemented", r.complemented, subset(r.complement_witness));
  line("boolean", r.boolean);
  line("pseudocomplemented", r.pseudocomplemented, subset(r.pseudocomplement_witness));
  line("dual pseudocomplemented", r.dual_pseudocomplemented, subset(r.dual_pseudocomplement_witness));
  line("stone", r.stone, algebra(r.stone_witness));
  line("dual stone", r.dual_stone, algebra(r.dual_stone_witness));
  line("double p-algebra", r.double_p_algebra);
  line("double stone", r.double_stone);
  return out.str();
}

json summary_json(const VerificationSummary& s) {
  json out;
  out["coverings"] = s.coverings;
  out["ok"] = s.ok();
  json tallies = json::array();
  for (const auto& t : s.tallies)
    tallies.push_back({{"id", t.id}, {"applicable", t.applicable}, {"failures", t.failures}});
  out["tallies"] = std::move(tallies);
  json failures = json::array();
  for (const auto& f : s.failures) {
    const Universe& u = f.covering.universe();
    failures.push_back({{"covering_index", f.covering_index},
                        {"covering", covering_json(f.covering)},
                        {"theorem", f.report.id},
                        {"statement", f.report.statement},
                        {"witness", family_json(f.report.witness, u)}});
  }
  out["failures"] = std::move(failures);
  return out;
}

std::string summary_text(const VerificationSummary& s) {
  std::ostringstream out;
  for (const auto& t : s.tallies) {
    out << (t.failures ? "FAIL " : "ok   ") << t.id << "  applicable " << t.applicable;
    if (t.failures) out << "  failures " << t.failures;
    out << '\n';
  }
  for (const auto& f : s.failures) {
    const Universe& u = f.covering.universe();
    out << "violation: " << f.report.id << " (" << f.report.statement << ") on covering #"
        << f.covering_index << ' ' << format_family(f.covering.blocks(), u)
        << " witness " << format_family(f.report.witness, u) << '\n';
  }
  out << "checked " << s.coverings << " covering(s): "
      << (s.ok() ? "all applicable checks hold" : std::to_string(s.failures.size()) + " violation(s)")
      << '\n';
  return out.str();
}

std::string to_dot(const HasseDiagram& diagram, const Universe& universe, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << format_subset(diagram.nodes[i], universe) << "\"];\n";
  for (const auto& [lo, hi] : diagram.edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coverlat::io
