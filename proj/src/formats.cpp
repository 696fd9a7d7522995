#include "olss/formats.hpp"

#include <fstream>
#include <sstream>

#include "olss/error.hpp"

namespace olss {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::int64_t> integers(std::istringstream& in, int line) {
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      parse_error(line, "expected an integer, got '" + token + "'");
    }
  }
  return out;
}

void write_form(std::ostream& os, const AffineForm& form, int dim) {
  for (int j = 0; j < dim; ++j) os << form.coeff(j) << ' ';
  os << form.constant << '\n';
}

}  // namespace

AccessStructure parse_structure(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::Parse, "empty structure file");
  int n = -1;
  std::vector<VertexSet> edges;
  for (const auto& [number, line] : lines) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    const auto values = integers(in, number);
    if (tag == "n") {
      if (n >= 0) parse_error(number, "duplicate 'n' header");
      if (values.size() != 1 || values[0] < 0 || values[0] > 64) parse_error(number, "'n' takes one count in 0..64");
      n = static_cast<int>(values[0]);
    } else if (tag == "e") {
      if (n < 0) parse_error(number, "edge before 'n' header");
      VertexSet e = 0;
      for (auto v : values) {
        if (v < 0 || v >= n) parse_error(number, "vertex " + std::to_string(v) + " out of range");
        e |= bit(static_cast<int>(v));
      }
      edges.push_back(e);
    } else {
      parse_error(number, "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::Parse, "missing 'n' header");
  return AccessStructure(n, std::move(edges));
}

std::string format_structure(const AccessStructure& gamma) {
  std::ostringstream os;
  os << "n " << gamma.size() << '\n';
  for (VertexSet e : gamma.edges()) {
    os << 'e';
    for (int v : members(e)) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

LinearScheme parse_scheme(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t i = 0;
  auto header = [&](const std::string& expect, std::size_t arity) {
    if (i >= lines.size()) throw Error(ErrorCode::Parse, "missing '" + expect + "' record");
    const auto& [number, line] = lines[i++];
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag != expect) parse_error(number, "expected '" + expect + "', got '" + tag + "'");
    auto values = integers(in, number);
    if (values.size() != arity) parse_error(number, "'" + expect + "' takes " + std::to_string(arity) + " value(s)");
    return values;
  };
  const auto p = header("p", 1)[0];
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::Parse, "modulus " + std::to_string(p) + " is not prime");
  const PrimeField field(p);
  const auto b = header("b", 1)[0];
  if (b < 0) throw Error(ErrorCode::Parse, "negative base dimension");
  const int dim = static_cast<int>(b);

  auto read_forms = [&](std::int64_t count) {
    std::vector<AffineForm> forms;
    for (std::int64_t k = 0; k < count; ++k) {
      if (i >= lines.size()) throw Error(ErrorCode::Parse, "truncated form block");
      const auto& [number, line] = lines[i++];
      std::istringstream in(line);
      const auto values = integers(in, number);
      if (static_cast<int>(values.size()) != dim + 1) {
        parse_error(number, "form needs " + std::to_string(dim + 1) + " integers");
      }
      FieldRow row(dim);
      for (int j = 0; j < dim; ++j) row(j) = field.reduce(values[static_cast<std::size_t>(j)]);
      forms.emplace_back(row, field.reduce(values.back()));
    }
    return forms;
  };

  const auto secret_count = header("secret", 1)[0];
  auto secret = read_forms(secret_count);
  std::vector<std::vector<AffineForm>> shares;
  while (i < lines.size()) {
    const auto values = header("participant", 2);
    if (values[0] != static_cast<std::int64_t>(shares.size())) {
      throw Error(ErrorCode::Parse, "participants must be listed in order 0, 1, ...");
    }
    shares.push_back(read_forms(values[1]));
  }
  return LinearScheme(field, dim, std::move(secret), std::move(shares));
}

std::string format_scheme(const LinearScheme& scheme) {
  std::ostringstream os;
  const int dim = scheme.base_dim();
  os << "p " << scheme.field().modulus() << '\n' << "b " << dim << '\n';
  os << "secret " << scheme.secret().size() << '\n';
  for (const auto& f : scheme.secret()) write_form(os, f, dim);
  for (int v = 0; v < scheme.participants(); ++v) {
    os << "participant " << v << ' ' << scheme.share(v).size() << '\n';
    for (const auto& f : scheme.share(v)) write_form(os, f, dim);
  }
  return os.str();
}

std::string format_transcript(const Transcript& transcript) {
  std::ostringstream os;
  const int dim = transcript.scheme.base_dim();
  os << "perm";
  for (int v : transcript.permutation) os << ' ' << v;
  os << '\n';
  for (std::size_t t = 0; t < transcript.events.size(); ++t) {
    const auto& ev = transcript.events[t];
    os << "step " << ev.step << " vertex " << transcript.permutation[t] << " backward";
    for (VertexSet e : ev.backward_edges) {
      os << " {";
      bool first = true;
      for (int q : members(e)) {
        os << (first ? "" : ",") << q + 1;
        first = false;
      }
      os << '}';
    }
    os << '\n';
    if (t < transcript.notes.size() && !transcript.notes[t].empty()) os << "note " << transcript.notes[t] << '\n';
    os << "forms " << transcript.assigned[t].size() << '\n';
    for (const auto& f : transcript.assigned[t]) write_form(os, f, dim);
  }
  os << format_scheme(transcript.scheme);
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IO, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IO, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IO, "write failed for " + path.string());
}

}  // namespace olss
