#include "sftlab/extlog.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace sftlab {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn2Pi = 1.8378770664093453;

// exp(x) would overflow past this
constexpr double kMaxLogArg = 690.0;

unsigned long g_exact_threshold = 1000000;

std::vector<double>& lnfact_table() {
  static std::vector<double> table{0.0, 0.0};  // ln 0!, ln 1!
  return table;
}
std::mutex g_table_mutex;

double stirling(double n) {
  return n * (std::log(n) - 1.0) + 0.5 * (kLn2Pi + std::log(n)) +
         1.0 / (12.0 * n) - 1.0 / (360.0 * n * n * n);
}

}  // namespace

unsigned long lnfact_exact_threshold() { return g_exact_threshold; }
void set_lnfact_exact_threshold(unsigned long t) { g_exact_threshold = t; }

double lnfact(unsigned long n) {
  if (n <= g_exact_threshold) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& t = lnfact_table();
    while (t.size() <= n)
      t.push_back(t.back() + std::log(static_cast<double>(t.size())));
    return t[n];
  }
  return stirling(static_cast<double>(n));
}

double ln_mpz(const mpz_class& n) {
  if (n <= 0) throw InvalidInput("ln of non-positive integer");
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * kLn2;
}

double lnfact(const mpz_class& n) {
  if (n < 0) throw InvalidInput("factorial of negative integer");
  if (n.fits_ulong_p()) {
    unsigned long u = mpz_get_ui(n.get_mpz_t());
    if (u <= g_exact_threshold) return lnfact(u);
    return stirling(static_cast<double>(u));
  }
  double L = ln_mpz(n);
  if (L >= kMaxLogArg)
    throw TooLarge("n! log overflows double; use ln_lnfact_from_ln");
  return stirling(std::exp(L));
}

double lnfact_from_ln(double ln_n) {
  if (ln_n >= kMaxLogArg)
    throw TooLarge("n! log overflows double; use ln_lnfact_from_ln");
  return stirling(std::exp(ln_n));
}

double ln_lnfact_from_ln(double ln_n) {
  // ln( n(ln n - 1) + (1/2)ln(2 pi n) + ... ) = ln_n + ln(ln_n - 1 + eps)
  if (ln_n < 40.0) {
    double lf = lnfact_from_ln(ln_n);
    if (lf <= 0) throw InvalidInput("ln ln n! undefined for n <= 1");
    return std::log(lf);
  }
  double correction = 0.5 * (kLn2Pi + ln_n) * std::exp(-ln_n);
  return ln_n + std::log(ln_n - 1.0 + correction);
}

ExtLog ExtLog::from_linear(double x, std::string note) {
  if (!(x > 0)) throw InvalidInput("ExtLog requires a positive value");
  return ExtLog(Regime::Linear, x, std::move(note));
}
ExtLog ExtLog::from_log(double ln_x, std::string note) {
  return ExtLog(Regime::Log, ln_x, std::move(note));
}
ExtLog ExtLog::from_loglog(double lnln_x, std::string note) {
  return ExtLog(Regime::LogLog, lnln_x, std::move(note));
}

double ExtLog::linear() const {
  switch (regime_) {
    case Regime::Linear:
      return value_;
    case Regime::Log:
      if (value_ >= kMaxLogArg) throw TooLarge("value not representable");
      return std::exp(value_);
    case Regime::LogLog:
      if (value_ >= 6.5) throw TooLarge("value not representable");
      return std::exp(std::exp(value_));
  }
  throw InvalidInput("bad regime");
}

double ExtLog::log() const {
  switch (regime_) {
    case Regime::Linear:
      return std::log(value_);
    case Regime::Log:
      return value_;
    case Regime::LogLog:
      if (value_ >= kMaxLogArg) throw TooLarge("ln x not representable");
      return std::exp(value_);
  }
  throw InvalidInput("bad regime");
}

double ExtLog::loglog() const {
  switch (regime_) {
    case Regime::Linear:
    case Regime::Log: {
      double lx = log();
      if (lx <= 0) throw InvalidInput("ln ln x requires x > 1");
      return std::log(lx);
    }
    case Regime::LogLog:
      return value_;
  }
  throw InvalidInput("bad regime");
}

ExtLog ExtLog::promoted() const {
  switch (regime_) {
    case Regime::Linear:
      return from_log(std::log(value_), note_);
    case Regime::Log:
      if (value_ <= 0) throw InvalidInput("LogLog regime requires x > e");
      return from_loglog(std::log(value_), note_);
    case Regime::LogLog:
      return *this;
  }
  throw InvalidInput("bad regime");
}

ExtLog ExtLog::demoted() const {
  switch (regime_) {
    case Regime::Linear:
      return *this;
    case Regime::Log:
      return from_linear(linear(), note_);
    case Regime::LogLog:
      return from_log(log(), note_);
  }
  throw InvalidInput("bad regime");
}

namespace {

double logsumexp(const std::vector<double>& v) {
  double m = *std::max_element(v.begin(), v.end());
  double s = 0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

ExtLog log_alt_order(const std::vector<mpz_class>& sizes) {
  std::vector<double> term_logs;  // ln of each (lnfact(n) - ln 2) > 0
  for (const auto& n : sizes) {
    if (n <= 2) continue;  // |Alt| is 1; contributes nothing
    double L = ln_mpz(n);
    if (L < kMaxLogArg - 10) {
      double t = lnfact(n) - kLn2;
      term_logs.push_back(std::log(t));
    } else {
      term_logs.push_back(ln_lnfact_from_ln(L));
    }
  }
  if (term_logs.empty()) return ExtLog::from_linear(1.0, "trivial group");
  return ExtLog::from_loglog(logsumexp(term_logs));
}

ExtLog log_alt_order_from_ln(const std::vector<double>& ln_sizes) {
  std::vector<double> term_logs;
  for (double L : ln_sizes) {
    if (L <= std::log(2.5)) continue;
    if (L < 40.0) {
      double t = lnfact_from_ln(L) - kLn2;
      if (t <= 0) continue;
      term_logs.push_back(std::log(t));
    } else {
      term_logs.push_back(ln_lnfact_from_ln(L));
    }
  }
  if (term_logs.empty()) return ExtLog::from_linear(1.0, "trivial group");
  return ExtLog::from_loglog(logsumexp(term_logs));
}

}  // namespace sftlab
