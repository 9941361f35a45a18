#include "dlas/stats.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "dlas/error.hpp"

namespace dlas {
namespace {

double mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (const double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v, double m) {
  double sum = 0.0;
  for (const double x : v) sum += (x - m) * (x - m);
  return sum / static_cast<double>(v.size() - 1);
}

}  // namespace

WelchResult welch_t_test(const std::vector<double>& a,
                         const std::vector<double>& b, double confidence) {
  if (a.size() < 2 || b.size() < 2)
    throw ConfigError("welch_t_test needs at least 2 observations per sample");
  if (confidence <= 0.0 || confidence >= 1.0)
    throw ConfigError("confidence must lie in (0, 1)");

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean(a);
  const double mb = mean(b);
  const double va = sample_variance(a, ma);
  const double vb = sample_variance(b, mb);

  WelchResult out;
  if (va == 0.0 && vb == 0.0) {
    // Statistic undefined: distinct constant samples are a sure difference,
    // identical ones a sure tie.
    out.significant = ma != mb;
    out.p_value = out.significant ? 0.0 : 1.0;
    out.t = out.significant
                ? std::copysign(std::numeric_limits<double>::infinity(), ma - mb)
                : 0.0;
    return out;
  }

  const double qa = va / na;
  const double qb = vb / nb;
  out.t = (ma - mb) / std::sqrt(qa + qb);
  out.degrees_of_freedom = (qa + qb) * (qa + qb) /
                           (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  const boost::math::students_t distribution(out.degrees_of_freedom);
  out.p_value = 2.0 * boost::math::cdf(distribution, -std::fabs(out.t));
  out.significant = out.p_value < 1.0 - confidence;
  return out;
}

}  // namespace dlas
