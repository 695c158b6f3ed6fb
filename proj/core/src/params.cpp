#include "bgsig/params.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace bgsig {

ParamSet derive_params(uint32_t q, uint32_t n, uint32_t k, uint32_t l, uint32_t eta,
                       uint32_t gamma, uint32_t tau)
{
  ParamSet p;
  p.q = q;
  p.n = n;
  p.k = k;
  p.l = l;
  p.eta = eta;
  p.gamma = gamma;
  p.tau = tau;
  p.beta = derive_beta(eta, tau);
  p.alpha = 2 * gamma;
  p.bits_t = bits_for(q);
  p.bits_s = bits_for(2ull * eta + 1);
  p.bits_z = gamma > p.beta ? bits_for(2ull * (gamma - p.beta) + 1) : 0;
  p.bits_w1 = p.alpha != 0 ? bits_for((q - 1) / p.alpha) : 0;
  return p;
}

ParamSet default_paramset()
{
  return derive_params(kQ, kN, 4, 3, 6, (kQ - 1) / 16, kTau);
}

namespace {

void require(bool ok, const char* what)
{
  if (!ok) {
    throw ParamError(what);
  }
}

} // namespace

ValidatedParamSet::ValidatedParamSet(const ParamSet& p)
  : p_(p)
  , id_(p == default_paramset() ? kDefaultParamSetId : kCustomParamSetId)
{}

ValidatedParamSet validate(const ParamSet& p)
{
  require(p.q == kQ, "q must be 8380417");
  require(p.n == kN, "n must be 256");
  require(p.tau == kTau, "tau must be 60");
  require(p.l >= 1, "l must be >= 1");
  require(p.k >= p.l, "k must be >= l");
  require(p.k <= 255 && p.l <= 255, "k and l must be < 256");
  require(p.eta >= 1, "eta must be >= 1");
  require(p.beta < p.gamma, "beta must be < gamma");
  require(p.beta == derive_beta(p.eta, p.tau), "beta must equal tau*eta");
  require(p.gamma != 0 && (p.q - 1) % (2 * uint64_t{ p.gamma }) == 0, "alpha does not divide q-1");
  require(p.alpha == 2 * p.gamma, "alpha must equal 2*gamma");
  require(p.q <= (uint64_t{ 1 } << p.bits_t), "q must fit in bits_t");
  require(2ull * (p.gamma - p.beta) + 1 <= (uint64_t{ 1 } << p.bits_z),
          "2(gamma-beta)+1 must fit in bits_z");
  require(2ull * p.eta + 1 <= (uint64_t{ 1 } << p.bits_s), "2*eta+1 must fit in bits_s");
  require((p.q - 1) / p.alpha <= (uint64_t{ 1 } << p.bits_w1), "(q-1)/alpha must fit in bits_w1");
  require(p.bits_t <= 32 && p.bits_z <= 32 && p.bits_s <= 32 && p.bits_w1 <= 32,
          "packing widths must be <= 32");
  return ValidatedParamSet(p);
}

const ValidatedParamSet& default_params()
{
  static const ValidatedParamSet params = validate(default_paramset());
  return params;
}

ParamSet parse_paramset_config(std::string_view text)
{
  ParamSet d = default_paramset();
  uint32_t q = d.q, n = d.n, k = d.k, l = d.l, eta = d.eta, gamma = d.gamma, tau = d.tau;

  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      return std::string_view{};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };

  size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParamError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto val = trim(line.substr(eq + 1));

    uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw ParamError("line " + std::to_string(line_no) + ": bad integer for '" +
                       std::string(key) + "'");
    }

    if (key == "q") q = v;
    else if (key == "n") n = v;
    else if (key == "k") k = v;
    else if (key == "l") l = v;
    else if (key == "eta") eta = v;
    else if (key == "gamma") gamma = v;
    else if (key == "tau") tau = v;
    else {
      throw ParamError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                       "'");
    }
  }
  return derive_params(q, n, k, l, eta, gamma, tau);
}

ValidatedParamSet load_paramset_config(std::string_view text)
{
  return validate(parse_paramset_config(text));
}

std::ostream& operator<<(std::ostream& os, const ParamSet& p)
{
  return os << "q=" << p.q << " n=" << p.n << " k=" << p.k << " l=" << p.l << " eta=" << p.eta
            << " gamma=" << p.gamma << " tau=" << p.tau << " beta=" << p.beta
            << " alpha=" << p.alpha << " bits(t,z,s,w1)=(" << p.bits_t << "," << p.bits_z << ","
            << p.bits_s << "," << p.bits_w1 << ")";
}

} // namespace bgsig
