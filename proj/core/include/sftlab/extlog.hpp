#ifndef SFTLAB_EXTLOG_HPP
#define SFTLAB_EXTLOG_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sftlab/errors.hpp"

namespace sftlab {

/// A positive quantity x stored in one of three regimes: x itself, ln x, or
/// ln ln x. Keeps quantities like ln ln |G| computable when |G| has 10^300+
/// digits.
class ExtLog {
public:
  enum class Regime { Linear, Log, LogLog };

  static ExtLog from_linear(double x, std::string note = {});
  static ExtLog from_log(double ln_x, std::string note = {});
  static ExtLog from_loglog(double lnln_x, std::string note = {});

  Regime regime() const { return regime_; }
  double raw() const { return value_; }
  const std::string& note() const { return note_; }

  /// x itself; throws TooLarge if not representable as a double.
  double linear() const;
  /// ln x; throws TooLarge if even ln x overflows.
  double log() const;
  /// ln ln x; requires x > e when demoting from Linear/Log.
  double loglog() const;

  ExtLog promoted() const;  // Linear -> Log -> LogLog
  ExtLog demoted() const;   // LogLog -> Log -> Linear (when representable)

private:
  ExtLog(Regime r, double v, std::string note)
      : regime_(r), value_(v), note_(std::move(note)) {}
  Regime regime_;
  double value_;
  std::string note_;
};

/// ln(n!). Exact cumulative summation below the Stirling threshold, Stirling
/// series (error < 1/(360 n^3)) beyond.
double lnfact(unsigned long n);
double lnfact(const mpz_class& n);

/// ln(n!) when n is only known through L = ln n.
double lnfact_from_ln(double ln_n);

/// ln(ln(n!)) when n is only known through L = ln n; stable for huge L.
double ln_lnfact_from_ln(double ln_n);

/// ln of a big integer, exact to double rounding.
double ln_mpz(const mpz_class& n);

/// Threshold below which lnfact uses exact summation (default 10^6).
unsigned long lnfact_exact_threshold();
void set_lnfact_exact_threshold(unsigned long t);

/// ln |prod Alt(S_i)| for |S_i| = sizes[i], with the convention
/// |Alt(S)| = max(1, |S|!/2). Result carried as an ExtLog of the group
/// order, computed stably via log-sum-exp in the ln-ln domain.
ExtLog log_alt_order(const std::vector<mpz_class>& sizes);

/// Same, but the sizes are given only through their natural logs.
ExtLog log_alt_order_from_ln(const std::vector<double>& ln_sizes);

}  // namespace sftlab

#endif
