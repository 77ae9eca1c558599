#include "hgfm/jack.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace hgfm {

namespace {

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Partition partition_from_token(const std::string& tok) {
  if (tok == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < tok.size()) {
    std::size_t comma = tok.find(',', pos);
    if (comma == std::string::npos) comma = tok.size();
    parts.push_back(std::stoi(tok.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace

long long monomial_count_at_identity(const Partition& mu, int m) {
  if (mu.length() > m) return 0;
  if (m > 20) throw ShapeError("monomial count at identity supports m <= 20");
  // Distinct arrangements of the exponent vector padded with m - len zeros:
  // a product of binomials, one per group of equal values.
  long long out = 1;
  int remaining = m;
  int i = 0;
  while (i < mu.length()) {
    int j = i;
    while (j < mu.length() && mu.part(j) == mu.part(i)) ++j;
    out *= binomial_ll(remaining, j - i);
    remaining -= j - i;
    i = j;
  }
  return out;  // the zeros group uses up the rest: C(remaining, remaining) = 1
}

void dump_jack_cache(const JackTable<Rational>& table, std::ostream& os) {
  using Table = JackTable<Rational>;
  std::lock_guard<std::mutex> lock(table.mu_);
  // Deterministic output order.
  std::map<std::string, const typename Table::Key*> ordered;
  for (const auto& [key, exp] : table.map_) {
    std::string tag = std::to_string(key.kappa.weight()) + "|" + key.kappa.to_string() + "|" +
                      key.d.str() + "|" + std::to_string(key.mcap);
    ordered.emplace(std::move(tag), &key);
  }
  os << "hgfm-jack-cache 1\n";
  for (const auto& [tag, keyp] : ordered) {
    const auto& exp = *table.map_.at(*keyp);
    os << "entry " << keyp->kappa.to_string() << " d " << to_fraction_string(keyp->d) << " mcap "
       << keyp->mcap << " terms " << exp.terms.size() << "\n";
    for (const auto& [mu, c] : exp.terms)
      os << mu.to_string() << " " << to_fraction_string(c) << "\n";
  }
}

std::size_t load_jack_cache(JackTable<Rational>& table, std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "hgfm-jack-cache 1")
    throw Error("jack cache: bad or missing header");
  std::size_t count = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream head(line);
    std::string word, kappa_tok, d_word, d_tok, mcap_word, terms_word;
    int mcap = 0;
    std::size_t nterms = 0;
    head >> word >> kappa_tok >> d_word >> d_tok >> mcap_word >> mcap >> terms_word >> nterms;
    if (!head || word != "entry" || d_word != "d" || mcap_word != "mcap" || terms_word != "terms")
      throw Error("jack cache: malformed entry line: " + line);
    auto d = parse_rational(d_tok);
    if (!d || *d <= 0) throw Error("jack cache: bad cone parameter: " + d_tok);

    auto exp = std::make_shared<JackExpansion<Rational>>();
    exp->mcap = mcap;
    exp->terms.reserve(nterms);
    for (std::size_t t = 0; t < nterms; ++t) {
      if (!std::getline(is, line)) throw Error("jack cache: truncated entry");
      std::istringstream row(line);
      std::string mu_tok, coeff_tok;
      row >> mu_tok >> coeff_tok;
      if (!row) throw Error("jack cache: malformed term line: " + line);
      auto coeff = parse_rational(coeff_tok);
      if (!coeff) throw Error("jack cache: bad coefficient: " + coeff_tok);
      exp->terms.emplace_back(partition_from_token(mu_tok), *coeff);
    }
    typename JackTable<Rational>::Key key{partition_from_token(kappa_tok), *d, mcap};
    std::lock_guard<std::mutex> lock(table.mu_);
    table.map_.emplace(std::move(key),
                       std::shared_ptr<const JackExpansion<Rational>>(std::move(exp)));
    ++count;
  }
  return count;
}

}  // namespace hgfm
