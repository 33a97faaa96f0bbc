#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "mpconc/states.hpp"

namespace mpconc {

namespace {

constexpr std::string_view kMagic = "QSTATE 1";

enum class Kind { pure, density };

struct RawFile {
  Kind kind = Kind::pure;
  Dims dims;
  std::vector<cplx> entries;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "state file line " << line << ": " << msg;
  throw InputError(os.str());
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

double parse_double(std::string_view tok, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "cannot parse number '" + std::string(tok) + "'");
  return v;
}

RawFile read_raw(std::istream& is) {
  RawFile raw;
  std::string buf;
  int line_no = 0;
  int stage = 0;  // 0 magic, 1 kind, 2 dims, 3 entries
  std::vector<int> dims;
  while (std::getline(is, buf)) {
    ++line_no;
    const std::string_view line = trim(buf);
    if (line.empty() || line.front() == '#') continue;
    switch (stage) {
      case 0:
        if (line != kMagic) fail(line_no, "expected header 'QSTATE 1'");
        stage = 1;
        break;
      case 1: {
        const auto tok = split_ws(line);
        if (tok.size() != 2 || tok[0] != "kind") fail(line_no, "expected 'kind pure' or 'kind density'");
        if (tok[1] == "pure")
          raw.kind = Kind::pure;
        else if (tok[1] == "density")
          raw.kind = Kind::density;
        else
          fail(line_no, "unknown kind '" + std::string(tok[1]) + "'");
        stage = 2;
        break;
      }
      case 2: {
        const auto tok = split_ws(line);
        if (tok.size() < 2 || tok[0] != "dims") fail(line_no, "expected 'dims d1 d2 ...'");
        for (std::size_t i = 1; i < tok.size(); ++i) {
          int d = 0;
          const auto [ptr, ec] = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(), d);
          if (ec != std::errc() || ptr != tok[i].data() + tok[i].size() || d < 2)
            fail(line_no, "bad subsystem dimension '" + std::string(tok[i]) + "'");
          dims.push_back(d);
        }
        raw.dims = Dims(dims);
        stage = 3;
        break;
      }
      default: {
        const auto tok = split_ws(line);
        if (tok.size() != 2) fail(line_no, "expected 're im' entry");
        raw.entries.emplace_back(parse_double(tok[0], line_no), parse_double(tok[1], line_no));
      }
    }
  }
  if (stage < 3) fail(line_no, "truncated header");
  const std::size_t dim = static_cast<std::size_t>(raw.dims.total());
  const std::size_t expected = raw.kind == Kind::pure ? dim : dim * dim;
  if (raw.entries.size() != expected) {
    std::ostringstream os;
    os << "entry count " << raw.entries.size() << " does not match dims " << raw.dims.to_string()
       << " (expected " << expected << ")";
    throw InputError(os.str());
  }
  return raw;
}

Matrix to_matrix(const RawFile& raw) {
  const int dim = raw.dims.total();
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = raw.entries[static_cast<std::size_t>(i * dim + j)];
  return m;
}

void write_header(std::ostream& os, std::string_view kind, const Dims& dims, std::string_view comment) {
  os << kMagic << '\n' << "kind " << kind << '\n';
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "dims";
  for (int d : dims) os << ' ' << d;
  os << '\n';
}

void write_entry(std::ostream& os, cplx z) { os << z.real() << ' ' << z.imag() << '\n'; }

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

void save_state(std::ostream& os, const PureState& psi, std::string_view comment) {
  const auto flags = os.flags();
  const auto prec = os.precision(17);
  write_header(os, "pure", psi.dims(), comment);
  for (const cplx& z : psi.amplitudes()) write_entry(os, z);
  os.precision(prec);
  os.flags(flags);
}

void save_state(std::ostream& os, const DensityMatrix& rho, std::string_view comment) {
  save_operator(os, Operator{rho.matrix(), rho.dims()}, comment);
}

void save_operator(std::ostream& os, const Operator& op, std::string_view comment) {
  const auto flags = os.flags();
  const auto prec = os.precision(17);
  write_header(os, "density", op.dims, comment);
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) write_entry(os, op.matrix(i, j));
  os.precision(prec);
  os.flags(flags);
}

void save_state(const std::string& path, const AnyState& state, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  std::visit([&](const auto& s) { save_state(out, s, comment); }, state);
  if (!out) throw InputError("write to '" + path + "' failed");
}

AnyState load_state(std::istream& is) {
  RawFile raw = read_raw(is);
  if (raw.kind == Kind::pure) {
    Vector v(static_cast<Eigen::Index>(raw.entries.size()));
    for (std::size_t i = 0; i < raw.entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = raw.entries[i];
    return PureState(std::move(v), raw.dims, 1e-8);
  }
  return DensityMatrix(to_matrix(raw), raw.dims, DensityTolerance::loaded());
}

AnyState load_state(const std::string& path) {
  auto in = open_in(path);
  return load_state(in);
}

Operator load_operator(std::istream& is) {
  RawFile raw = read_raw(is);
  if (raw.kind != Kind::density) throw InputError("operator files must use 'kind density'");
  Operator op{to_matrix(raw), raw.dims};
  if (hermiticity_defect(op.matrix) > 1e-8) throw InputError("operator is not Hermitian");
  return op;
}

Operator load_operator(const std::string& path) {
  auto in = open_in(path);
  return load_operator(in);
}

}  // namespace mpconc
