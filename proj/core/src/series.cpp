#include "strength/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strength {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries::TruncSeries(std::initializer_list<long> coeffs)
{
  if (coeffs.size() == 0) throw std::invalid_argument("TruncSeries: empty coefficient list");
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

const BigInt& TruncSeries::coeff(std::size_t i) const
{
  if (i > order()) throw std::out_of_range("TruncSeries: index " + std::to_string(i) + " beyond order");
  return coeffs_[i];
}

BigInt& TruncSeries::coeff(std::size_t i)
{
  if (i > order()) throw std::out_of_range("TruncSeries: index " + std::to_string(i) + " beyond order");
  return coeffs_[i];
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
  if (order > this->order()) throw std::invalid_argument("TruncSeries: cannot raise the order");
  return TruncSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
{
  if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch in sum");
  TruncSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
{
  if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch in difference");
  TruncSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
  const std::size_t order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

DegreeProfile::DegreeProfile(std::vector<int> degrees) : degrees_(std::move(degrees))
{
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("DegreeProfile: generator degrees must be >= 1");
  std::sort(degrees_.begin(), degrees_.end());
}

DegreeProfile DegreeProfile::from_multiplicities(std::span<const std::int64_t> multiplicities)
{
  std::vector<int> degrees;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) throw std::invalid_argument("DegreeProfile: negative multiplicity");
    degrees.insert(degrees.end(), static_cast<std::size_t>(multiplicities[i]), static_cast<int>(i + 1));
  }
  return DegreeProfile(std::move(degrees));
}

int DegreeProfile::min_degree() const
{
  if (degrees_.empty()) throw std::logic_error("DegreeProfile: empty profile has no minimum");
  return degrees_.front();
}

int DegreeProfile::max_degree() const
{
  if (degrees_.empty()) throw std::logic_error("DegreeProfile: empty profile has no maximum");
  return degrees_.back();
}

std::vector<std::int64_t> DegreeProfile::multiplicities() const
{
  if (degrees_.empty()) return {};
  std::vector<std::int64_t> m(static_cast<std::size_t>(degrees_.back()), 0);
  for (int d : degrees_) ++m[static_cast<std::size_t>(d - 1)];
  return m;
}

BigInt binom(std::int64_t a, std::int64_t b)
{
  if (a < 0 || b < 0) throw std::domain_error("binom: arguments must be nonnegative");
  if (a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

TruncSeries inverse_power_of_one_minus_t(std::int64_t n, std::size_t order)
{
  if (n < -1) throw std::domain_error("inverse_power_of_one_minus_t: exponent below zero");
  TruncSeries out(order);
  if (n == -1) {
    out.coeff(0) = 1;
    return out;
  }
  // C(n+k, n) = C(n+k-1, n) * (n+k) / k
  BigInt c = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) {
      c *= static_cast<unsigned long>(n) + k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    }
    out.coeff(k) = c;
  }
  return out;
}

TruncSeries one_minus_t_power(int step, std::int64_t exponent, std::size_t order)
{
  if (step < 1) throw std::domain_error("one_minus_t_power: step must be >= 1");
  if (exponent < 0) throw std::domain_error("one_minus_t_power: exponent must be >= 0");
  TruncSeries out(order);
  for (std::int64_t j = 0; j <= exponent && static_cast<std::size_t>(j) * step <= order; ++j) {
    BigInt c = binom(exponent, j);
    if (j % 2 == 1) c = -c;
    out.coeff(static_cast<std::size_t>(j) * step) = c;
  }
  return out;
}

TruncSeries froberg_series(std::int64_t n, const DegreeProfile& profile, std::size_t order)
{
  if (n < 0) throw std::domain_error("froberg_series: n must be >= 0");
  TruncSeries numerator(order);
  numerator.coeff(0) = 1;
  const auto mult = profile.multiplicities();
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    numerator = numerator * one_minus_t_power(static_cast<int>(i + 1), mult[i], order);
  }
  return numerator * inverse_power_of_one_minus_t(n, order);
}

TruncSeries bracket(const TruncSeries& s)
{
  TruncSeries out(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (sign(s.coeff(i)) < 0) break;
    out.coeff(i) = s.coeff(i);
  }
  return out;
}

BigInt froberg_coeff(std::int64_t n, const DegreeProfile& profile, std::size_t d)
{
  return bracket(froberg_series(n, profile, d)).coeff(d);
}

}  // namespace strength
