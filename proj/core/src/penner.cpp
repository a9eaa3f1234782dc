#include "multitwist/penner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "multitwist/error.hpp"

namespace multitwist {

ComponentWord::ComponentWord(std::vector<ComponentLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    if (l.exponent == 0) throw Error(ErrorKind::kValidation, "component word exponents must be nonzero");
}

ComponentWord ComponentWord::parse(std::string_view text) {
  std::vector<ComponentLetter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kParse, "component word \"" + std::string(text) + "\": " + why);
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    ComponentLetter l;
    const char c = text[i++];
    if (c == 'a') {
      l.family = CurveFamily::kA;
    } else if (c == 'b') {
      l.family = CurveFamily::kB;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    const std::string idx = digits();
    if (!idx.empty()) {
      const unsigned long v = std::stoul(idx);
      if (v == 0) fail("curve indices are 1-based");
      l.curve = v - 1;
    }
    if (i < text.size() && text[i] == '^') {
      ++i;
      const bool brace = i < text.size() && text[i] == '{';
      if (brace) ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      const std::string e = digits();
      if (e.empty()) fail("missing exponent");
      l.exponent = std::stol(e) * (neg ? -1 : 1);
      if (brace) {
        if (i >= text.size() || text[i] != '}') fail("unclosed brace");
        ++i;
      }
      if (l.exponent == 0) fail("zero exponent");
    }
    out.push_back(l);
  }
  return ComponentWord(std::move(out));
}

std::string ComponentWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    const auto& l = letters_[k];
    os << (l.family == CurveFamily::kA ? 'a' : 'b') << l.curve + 1;
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

ComponentWord operator*(const ComponentWord& u, const ComponentWord& v) {
  std::vector<ComponentLetter> l = u.letters_;
  l.insert(l.end(), v.letters_.begin(), v.letters_.end());
  return ComponentWord(std::move(l));
}

ComponentWord full_multitwist_word(const ConfigurationGraph& g, long eps, long delta) {
  std::vector<ComponentLetter> l;
  for (std::size_t i = 0; i < g.n_a(); ++i) l.push_back({CurveFamily::kA, i, eps});
  for (std::size_t j = 0; j < g.n_b(); ++j) l.push_back({CurveFamily::kB, j, -delta});
  return ComponentWord(std::move(l));
}

BigonTrack build_track(const EmbeddedConfiguration& e) {
  const ConfigurationGraph& g = e.graph();
  if (!g.is_connected()) throw Error(ErrorKind::kNotConnected, "bigon track needs a connected configuration");
  const auto& pts = e.points();
  BigonTrack t;
  t.tags.resize(pts.size());
  // Branch k of a curve runs from its k-th point to the next one.
  std::vector<std::vector<std::size_t>> a_at(g.n_a()), b_at(g.n_b());
  for (std::size_t i = 0; i < g.n_a(); ++i) {
    const auto& cyc = e.a_cycle(i);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      a_at[i].push_back(t.branches.size());
      t.branches.push_back({CurveFamily::kA, i, cyc[k], cyc[(k + 1) % cyc.size()]});
    }
  }
  for (std::size_t j = 0; j < g.n_b(); ++j) {
    const auto& cyc = e.b_cycle(j);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      b_at[j].push_back(t.branches.size());
      t.branches.push_back({CurveFamily::kB, j, cyc[k], cyc[(k + 1) % cyc.size()]});
    }
  }
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const auto& pt = pts[p];
    const std::size_t da = a_at[pt.a].size();
    const std::size_t db = b_at[pt.b].size();
    const std::size_t a_out = a_at[pt.a][pt.pos_a];
    const std::size_t a_in = a_at[pt.a][(pt.pos_a + da - 1) % da];
    const std::size_t b_out = b_at[pt.b][pt.pos_b];
    const std::size_t b_in = b_at[pt.b][(pt.pos_b + db - 1) % db];
    const bool positive = pt.sign > 0;
    t.tags[p] = {positive ? a_out : a_in, positive ? a_in : a_out, positive ? b_out : b_in, positive ? b_in : b_out};
  }
  t.a_branches = std::move(a_at);
  t.b_branches = std::move(b_at);
  return t;
}

namespace {

// Intersection points lying on the given curve.
std::vector<std::size_t> points_on(const BigonTrack& t, CurveFamily family, std::size_t curve) {
  std::vector<std::size_t> out;
  const auto& list = family == CurveFamily::kA ? t.a_branches : t.b_branches;
  for (const auto br : list.at(curve)) out.push_back(t.branches[br].from_point);
  return out;
}

}  // namespace

BigMatrix twist_incidence(const BigonTrack& t, CurveFamily family, std::size_t curve, PushOff side) {
  const auto& list = family == CurveFamily::kA ? t.a_branches : t.b_branches;
  if (curve >= list.size()) throw Error(ErrorKind::kValidation, "curve index out of range");
  const std::size_t k = t.size();
  BigMatrix m = BigMatrix::identity(k);
  const bool plus = side == PushOff::kPlus;
  for (const auto pt : points_on(t, family, curve)) {
    const BranchTags& tag = t.tags[pt];
    const std::size_t q = family == CurveFamily::kA ? (plus ? tag.j_plus : tag.j_minus)
                                                    : (plus ? tag.i_plus : tag.i_minus);
    for (const auto p : list[curve]) m(p, q) += 1;
  }
  return m;
}

std::string to_string(PennerMembership m) {
  switch (m) {
    case PennerMembership::kInG: return "InG";
    case PennerMembership::kInG0: return "InG0";
    case PennerMembership::kInvalid: return "Invalid";
  }
  return "?";
}

PennerMembership validate_penner_word(const ComponentWord& w, const ConfigurationGraph& g) {
  std::vector<bool> a_seen(g.n_a(), false), b_seen(g.n_b(), false);
  for (const auto& l : w.letters()) {
    if (l.family == CurveFamily::kA) {
      if (l.curve >= g.n_a() || l.exponent <= 0) return PennerMembership::kInvalid;
      a_seen[l.curve] = true;
    } else {
      if (l.curve >= g.n_b() || l.exponent >= 0) return PennerMembership::kInvalid;
      b_seen[l.curve] = true;
    }
  }
  const bool all = std::all_of(a_seen.begin(), a_seen.end(), [](bool b) { return b; }) &&
                   std::all_of(b_seen.begin(), b_seen.end(), [](bool b) { return b; });
  return all ? PennerMembership::kInG0 : PennerMembership::kInG;
}

BigMatrix penner_matrix(const ComponentWord& w, const EmbeddedConfiguration& e) {
  if (validate_penner_word(w, e.graph()) != PennerMembership::kInG0)
    throw Error(ErrorKind::kNotInG0, "word " + w.to_string() + " does not twist every component with the right sign");
  const BigonTrack t = build_track(e);
  const std::size_t k = t.size();
  BigMatrix m = BigMatrix::identity(k);
  // First application of phi twists along negative push-offs, the second
  // along positive ones. (I + R)^n = I + nR since R^2 = 0.
  for (const PushOff side : {PushOff::kMinus, PushOff::kPlus}) {
    for (const auto& l : w.letters()) {
      BigMatrix r = twist_incidence(t, l.family, l.curve, side) - BigMatrix::identity(k);
      r *= BigInt(std::abs(l.exponent));
      m = m * (BigMatrix::identity(k) + r);
    }
  }
  return m;
}

double penner_dilatation(const ComponentWord& w, const EmbeddedConfiguration& e, double tol) {
  const BigMatrix m = penner_matrix(w, e);
  PFOptions opts;
  opts.tol = tol;
  return std::sqrt(pf_eigen(m.cast<double>(), opts).mu);
}

BigInt row_sum_check(const ComponentWord& w, const EmbeddedConfiguration& e) {
  const BigMatrix m = penner_matrix(w, e);
  BigInt best = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt s = 0;
    for (const auto& x : m.row(i)) s += x;
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace multitwist
