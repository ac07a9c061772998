// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/kleinian.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace linkcomm {

MutationWord parse_mutation_word(const std::string& text) {
  MutationWord word;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return ch == ' '; }), tok.end());
    if (tok != "0" && tok != "1" && tok != "2") {
      throw std::invalid_argument("parse_mutation_word: bad entry '" + tok + "'");
    }
    word.push_back(tok[0] - '0');
  }
  if (word.empty()) throw std::invalid_argument("parse_mutation_word: empty word");
  return word;
}

namespace {

// "c^-E x c^E" with the conjugating powers omitted when E is 0.
std::string conj_by_c_pow(int e, const std::string& core) {
  if (e == 0) return core;
  std::ostringstream os;
  os << "c^" << -e << " " << core << " c^" << e;
  return os.str();
}

NamedIsometry from_word(const std::string& word) { return {word, evaluate_word(word)}; }

// The six block generators f, g, h and their reflected copies, conjugated
// into chain position i (1-based): x -> c^{-2(i-1)} x c^{2(i-1)} and the
// reflected ones one step further down.
std::vector<std::string> block_words(int i) {
  std::vector<std::string> out;
  for (const char* gname : {"f", "g", "h"}) {
    out.push_back(conj_by_c_pow(2 * (i - 1), gname));
  }
  for (const char* gname : {"f", "g", "h"}) {
    out.push_back(conj_by_c_pow(2 * i, std::string("r ") + gname + " r"));
  }
  return out;
}

std::string conj_by_c_pow(int e, const char* core) { return conj_by_c_pow(e, std::string(core)); }

}  // namespace

GroupSpec gamma_n(int n) {
  if (n < 1) throw std::invalid_argument("gamma_n: n must be positive");
  GroupSpec spec;
  spec.name = "gamma_" + std::to_string(n);
  spec.generators.push_back(from_word("s"));
  spec.generators.push_back(from_word("t"));
  for (int i = 1; i <= n; ++i) {
    for (const auto& w : block_words(i)) spec.generators.push_back(from_word(w));
  }
  spec.generators.push_back(from_word(conj_by_c_pow(2 * n, "r s r")));
  spec.generators.push_back(from_word(conj_by_c_pow(2 * n, "r t r")));
  return spec;
}

GroupSpec gamma_I(const MutationWord& word) {
  const int n = static_cast<int>(word.size()) - 1;
  if (n < 1) throw std::invalid_argument("gamma_I: word must have length at least 2");
  for (int a : word) {
    if (a < 0 || a > 2) throw std::invalid_argument("gamma_I: entries must be 0, 1 or 2");
  }
  GroupSpec spec;
  {
    std::ostringstream os;
    os << "gamma_(";
    for (size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k];
    os << ")";
    spec.name = os.str();
  }
  spec.generators.push_back(from_word("s"));
  spec.generators.push_back(from_word("t"));

  // q_{i+1} = m_{a_0}^{(0)} ... m_{a_i}^{(i)} with m_j^{(k)} = c^{-2k} m_j c^{2k}.
  auto q_word = [&](int i) {  // q_i uses mutator factors at positions 0 .. i-1
    std::vector<std::string> factors;
    for (int k = 0; k < i; ++k) {
      if (word[k] == 0) continue;
      factors.push_back(conj_by_c_pow(2 * k, word[k] == 1 ? "m1" : "m2"));
    }
    std::string fwd, bwd;
    for (const auto& f : factors) fwd += (fwd.empty() ? "" : " ") + f;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      // Invert a factor "c^-E mJ c^E" as "c^-E mJ^-1 c^E".
      std::string inv = *it;
      const auto pos = inv.find("m");
      const auto end = inv.find(' ', pos);
      inv.insert(end == std::string::npos ? inv.size() : end, "^-1");
      bwd += (bwd.empty() ? "" : " ") + inv;
    }
    return std::make_pair(fwd, bwd);
  };
  auto conjugated = [&](int i, const std::string& core) {
    const auto [fwd, bwd] = q_word(i);
    if (fwd.empty()) return core;
    return fwd + " " + core + " " + bwd;
  };

  for (int i = 1; i <= n; ++i) {
    for (const auto& w : block_words(i)) spec.generators.push_back(from_word(conjugated(i, w)));
  }
  spec.generators.push_back(from_word(conjugated(n + 1, conj_by_c_pow(2 * n, "r s r"))));
  spec.generators.push_back(from_word(conjugated(n + 1, conj_by_c_pow(2 * n, "r t r"))));
  return spec;
}

// ---------------------------------------------------------------------------
// Integrality scan.
// ---------------------------------------------------------------------------

namespace {

struct Letter {
  std::string name;
  ExtendedMoebius m;
  Rational sqrt_det;  // positive rational square root of det(m)
  int inverse;        // index of the inverse letter
};

struct ScanHit {
  std::vector<int> word;  // letter indices
  NumberFieldElement trace;
};

// Normalised trace tr/r with rational r > 0, integrality-tested with a fast
// path for integer coordinates.
bool trace_integral(const NumberFieldElement& tr, const Rational& r) {
  const NumberFieldElement t(tr.a / r, tr.b / r, tr.c / r, tr.d / r);
  return t.is_algebraic_integer();
}

// Preorder DFS in letter order over reduced words: the first hit found is
// the lexicographically smallest witness in the subtree.  Returns true once
// a hit is recorded.
bool scan_dfs(const std::vector<Letter>& letters, int max_len, std::vector<int>& word,
              const ExtendedMoebius& mat, const Rational& root, std::optional<ScanHit>& hit,
              long& checked) {
  ++checked;
  const NumberFieldElement tr = mat.matrix_trace();
  if (!trace_integral(tr, root)) {
    hit = ScanHit{word, {tr.a / root, tr.b / root, tr.c / root, tr.d / root}};
    return true;
  }
  if (static_cast<int>(word.size()) == max_len) return false;
  for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
    if (letters[word.back()].inverse == l) continue;  // non-reduced
    word.push_back(l);
    const bool done =
        scan_dfs(letters, max_len, word, mat * letters[l].m, root * letters[l].sqrt_det, hit, checked);
    word.pop_back();
    if (done) return true;
  }
  return false;
}

void scan_subtree(const std::vector<Letter>& letters, int max_len, int first,
                  std::optional<ScanHit>& hit, long& checked) {
  std::vector<int> word = {first};
  scan_dfs(letters, max_len, word, letters[first].m, letters[first].sqrt_det, hit, checked);
}

}  // namespace

IntegralityScanResult integrality_scan(const GroupSpec& group, int max_word_length, int threads) {
  if (max_word_length < 1) throw std::invalid_argument("integrality_scan: bad length bound");
  std::vector<Letter> letters;
  for (const auto& g : group.generators) {
    const NumberFieldElement det = g.map.det();
    if (!det.is_rational()) {
      throw std::domain_error("integrality_scan: generator determinant is not rational");
    }
    const auto root = exact_sqrt(det.a);
    if (!root) throw std::domain_error("integrality_scan: determinant is not a rational square");
    const int base = static_cast<int>(letters.size());
    letters.push_back({g.name, g.map, *root, base + 1});
    letters.push_back({"(" + g.name + ")^-1", g.map.inverse(), *root, base});
  }

  const int nl = static_cast<int>(letters.size());
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 4;
  }
  threads = std::min(threads, nl);

  std::vector<std::optional<ScanHit>> hits(nl);
  std::vector<long> counts(nl, 0);
  auto worker = [&](int tid) {
    for (int first = tid; first < nl; first += threads) {
      scan_subtree(letters, max_word_length, first, hits[first], counts[first]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  IntegralityScanResult res;
  for (long c : counts) res.words_checked += c;
  std::optional<ScanHit> best;
  for (const auto& h : hits) {
    if (!h) continue;
    if (!best || std::lexicographical_compare(h->word.begin(), h->word.end(), best->word.begin(),
                                              best->word.end())) {
      best = h;
    }
  }
  if (best) {
    res.all_integral = false;
    std::string w;
    for (int idx : best->word) w += (w.empty() ? "" : " ") + letters[idx].name;
    res.witness_word = w;
    res.witness_trace = best->trace;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Modular-group word decomposition.
// ---------------------------------------------------------------------------

GroupWord psl2z_word(const ExtendedMoebius& x) {
  if (x.reversing) throw std::invalid_argument("psl2z_word: orientation-reversing input");
  for (const NumberFieldElement* e : {&x.a, &x.b, &x.c, &x.d}) {
    if (!e->is_rational() || e->a.get_den() != 1) {
      throw std::invalid_argument("psl2z_word: entries must be rational integers");
    }
  }
  mpz_class a = x.a.a.get_num(), b = x.b.a.get_num();
  mpz_class c = x.c.a.get_num(), d = x.d.a.get_num();
  if (a * d - b * c != 1) throw std::invalid_argument("psl2z_word: determinant must be 1");

  // Left-multiply by T^{-q} and S^{-1} until the first column is (±1, 0);
  // the inverted operations, in order, then spell the word.
  struct Op {
    bool is_s;
    mpz_class q;
  };
  std::vector<Op> ops;
  while (c != 0) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    a -= q * c;
    b -= q * d;
    ops.push_back({false, q});
    // S^{-1} = (0 1; -1 0): rows (a b; c d) -> (c d; -a -b).
    std::swap(a, c);
    std::swap(b, d);
    c = -c;
    d = -d;
    ops.push_back({true, 0});
  }
  // Now the matrix is ±(1, m; 0, 1) = T^{a*b} projectively.
  const mpz_class tail = a * b;

  GroupWord word;
  auto emit_t = [&word](const mpz_class& e) {
    if (e == 0) return;
    if (!e.fits_slong_p()) throw std::overflow_error("psl2z_word: exponent overflow");
    word.push_back({"T", static_cast<int>(e.get_si())});
  };
  for (const auto& op : ops) {
    if (op.is_s) {
      word.push_back({"S", 1});
    } else {
      emit_t(op.q);
    }
  }
  emit_t(tail);

  if (evaluate_word(word, builtin_generators()) != x) {
    throw std::logic_error("psl2z_word: reduction failed to reproduce the input");
  }
  return word;
}

// ---------------------------------------------------------------------------
// Reflection-domain geometry and the identity suite.
// ---------------------------------------------------------------------------

std::vector<Hyperplane> reflection_domain_planes(int n) {
  if (n < 1) throw std::invalid_argument("reflection_domain_planes: n must be positive");
  const NumberFieldElement i = NumberFieldElement::i();
  const NumberFieldElement is2 = NumberFieldElement::i_sqrt2();
  const NumberFieldElement half{Rational(1, 2)};
  std::vector<Hyperplane> planes;
  planes.push_back(Hyperplane::vertical(i * half, NumberFieldElement(1) + i * half));  // Im z = 1/2
  planes.push_back(Hyperplane::vertical(NumberFieldElement(0), i));                    // Re z = 0
  planes.push_back(Hyperplane::vertical(half, half + i));                              // Re z = 1/2
  const NumberFieldElement shift = NumberFieldElement(0) - is2 * NumberFieldElement(n);
  planes.push_back(Hyperplane::vertical(shift, NumberFieldElement(1) + shift));  // Im z = -n*sqrt2
  for (int k = 0; k <= n; ++k) {
    planes.push_back(
        Hyperplane::hemisphere(NumberFieldElement(0) - is2 * NumberFieldElement(k), RealQuad(1)));
  }
  return planes;
}

bool dihedral_angles_ok(const std::vector<Hyperplane>& planes) {
  const RealQuad allowed[3] = {RealQuad(0), RealQuad(Rational(1, 2)),
                               RealQuad(Rational(0), Rational(1, 2))};
  for (size_t a = 0; a < planes.size(); ++a)
    for (size_t b = a + 1; b < planes.size(); ++b) {
      if (planes[a] == planes[b]) return false;
      const DihedralResult d = dihedral_cos(planes[a], planes[b]);
      if (d.rel != DihedralResult::Rel::Intersect) continue;
      if (d.cos_angle != allowed[0] && d.cos_angle != allowed[1] && d.cos_angle != allowed[2]) {
        return false;
      }
    }
  return true;
}

CheckReport commensurator_suite(int n) {
  if (n < 1) throw std::invalid_argument("commensurator_suite: n must be positive");
  CheckReport rep;
  rep.title = "reflection-group identity suite (n = " + std::to_string(n) + ")";
  const auto& tbl = builtin_generators();
  const ExtendedMoebius c = tbl.at("c"), refl = tbl.at("r");

  const auto planes = reflection_domain_planes(n);
  {
    std::ostringstream os;
    os << planes.size() << " planes: 4 vertical, " << (n + 1) << " hemispheres";
    rep.add("domain planes meet at angles with cosine in {0, 1/2, sqrt2/2} or not at all",
            dihedral_angles_ok(planes), os.str());
  }

  rep.add("s = f = a0 f0 a0^-1", tbl.at("s") == evaluate_word("a0 f0 a0^-1") &&
                                     tbl.at("f") == evaluate_word("a0 f0 a0^-1"));
  rep.add("t = (b0 a0)^-1 f0^-1 (b0 a0) a0",
          tbl.at("t") == evaluate_word("a0^-1 b0^-1 f0^-1 b0 a0 a0"));
  rep.add("g = (a0^-1 a1) f0^-1 (a0^-1 a1)^-1",
          tbl.at("g") == evaluate_word("a0^-1 a1 f0^-1 a1^-1 a0"));
  rep.add("h = a1 a0 f0^-1 a1", tbl.at("h") == evaluate_word("a1 a0 f0^-1 a1"));
  rep.add("c^-2 conj(f) c^2 = a2 f0 a2^-1",
          evaluate_word("c^-2 r f r c^2") == evaluate_word("a2 f0 a2^-1"));
  rep.add("c^-2 conj(g) c^2 = (a2^-1 a1) f0^-1 (a2^-1 a1)^-1",
          evaluate_word("c^-2 r g r c^2") == evaluate_word("a2^-1 a1 f0^-1 a1^-1 a2"));
  rep.add("c^-2 conj(h) c^2 = a1 a2 f0^-1 a1",
          evaluate_word("c^-2 r h r c^2") == evaluate_word("a1 a2 f0^-1 a1"));

  {
    const ExtendedMoebius wall = c.pow(-n) * refl * c.pow(n);  // reflection in the far wall
    bool all = true;
    for (const char* name : {"s", "t", "g", "h", "m1"}) {
      const ExtendedMoebius x = tbl.at(name);
      all = all && (wall * x * wall == c.pow(-2 * n) * x.entry_conj() * c.pow(2 * n));
    }
    rep.add("back-conjugation by the far wall equals the shifted reflected copy", all);
  }

  {
    auto a_i = [&](int i) { return c.pow(-i) * tbl.at("a0") * c.pow(i); };
    bool self_conj = true, far_wall = true, orders = true;
    for (int i = 0; i <= 2 * n; ++i) {
      const ExtendedMoebius ai = a_i(i);
      self_conj = self_conj && (c.pow(-2 * i) * ai.entry_conj() * c.pow(2 * i) == ai);
      orders = orders && ai.classify().kind == MoebiusKind::Elliptic && ai.classify().elliptic_order == 3;
    }
    for (int i = 0; i <= n; ++i) {
      far_wall =
          far_wall && (a_i(2 * n - i) == c.pow(-2 * n) * a_i(i).entry_conj() * c.pow(2 * n));
    }
    rep.add("c^-2i conj(a_i) c^2i = a_i for i = 0..2n", self_conj);
    rep.add("a_{2n-i} is the far-wall conjugate of a_i", far_wall);
    rep.add("every a_i is elliptic of order 3", orders);
  }

  {
    const auto cls_b0 = tbl.at("b0").classify();
    const auto cls_s = tbl.at("S").classify();
    const auto cls_m1 = tbl.at("m1").classify();
    rep.add("orders: b0 elliptic 3, S elliptic 2, m1 elliptic 2, f0 parabolic",
            cls_b0.kind == MoebiusKind::Elliptic && cls_b0.elliptic_order == 3 &&
                cls_s.kind == MoebiusKind::Elliptic && cls_s.elliptic_order == 2 &&
                cls_m1.kind == MoebiusKind::Elliptic && cls_m1.elliptic_order == 2 &&
                tbl.at("f0").classify().kind == MoebiusKind::Parabolic);
  }

  {
    const GroupWord w = psl2z_word(tbl.at("m1"));
    bool transport = evaluate_word(w, tbl) == tbl.at("m1");
    for (int j = 0; j <= n; ++j) {
      GeneratorTable shifted;
      shifted["S"] = c.pow(-2 * j) * tbl.at("S") * c.pow(2 * j);
      shifted["T"] = c.pow(-2 * j) * tbl.at("T") * c.pow(2 * j);
      transport = transport &&
                  evaluate_word(w, shifted) == c.pow(-2 * j) * tbl.at("m1") * c.pow(2 * j);
    }
    std::ostringstream os;
    os << "modular word with " << w.size() << " syllables";
    rep.add("m1 transports down the chain through its modular word", transport, os.str());
  }

  return rep;
}

bool isometry_classify(const MutationWord& I, const MutationWord& J) {
  if (I.size() != J.size()) throw std::invalid_argument("isometry_classify: length mismatch");
  for (const auto* w : {&I, &J}) {
    for (int a : *w) {
      if (a != 0 && a != 1) {
        throw std::invalid_argument("isometry_classify: entries must be 0 or 1");
      }
    }
  }
  MutationWord x = I, y = J;
  x.front() = x.back() = 0;
  y.front() = y.back() = 0;
  if (x == y) return true;
  std::reverse(y.begin(), y.end());
  return x == y;
}

}  // namespace linkcomm
