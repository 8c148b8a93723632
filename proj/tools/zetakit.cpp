// zetakit command-line front end: eval, verify, table.

#include "zetakit/acceleration.hpp"
#include "zetakit/asymptotics.hpp"
#include "zetakit/expint.hpp"
#include "zetakit/numbertheory.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/special.hpp"
#include "zetakit/suites.hpp"
#include "zetakit/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace zetakit;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_eval = 3;

struct UsageError : std::runtime_error
{
   using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text)
{
   if (text.empty())
      throw UsageError("empty number");
   char* end = nullptr;
   const double v = std::strtod(text.c_str(), &end);
   if (end != text.c_str() + text.size())
      throw UsageError("cannot parse number '" + text + "'");
   return v;
}

int parse_int(const std::string& text)
{
   const double v = parse_real(text);
   if (v != std::round(v) || std::fabs(v) > 1e9)
      throw UsageError("expected an integer, got '" + text + "'");
   return static_cast<int>(v);
}

// "a", "bi", "a+bi", "a - bi", "i", "-i"
complex parse_complex(std::string text)
{
   std::erase_if(text, [](unsigned char ch) { return std::isspace(ch); });
   if (text.empty())
      throw UsageError("empty complex literal");
   if (text.back() != 'i' && text.back() != 'j')
      return parse_real(text);
   text.pop_back();
   std::size_t split = std::string::npos;
   for (std::size_t i = text.size(); i-- > 1;)
      if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
      {
         split = i;
         break;
      }
   const std::string re = split == std::string::npos ? "" : text.substr(0, split);
   std::string im = split == std::string::npos ? text : text.substr(split);
   if (im.empty() || im == "+")
      im = "1";
   else if (im == "-")
      im = "-1";
   return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
}

std::string format_complex(complex z)
{
   char buf[96];
   if (z.imag() == 0.0)
      std::snprintf(buf, sizeof buf, "%.17g", z.real());
   else
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
   return buf;
}

std::size_t term_cap_from_env()
{
   const char* env = std::getenv("ZETAKIT_TERM_CAP");
   if (!env)
      return SeriesConfig{}.term_cap;
   const int cap = parse_int(env);
   if (cap < 1 || static_cast<std::size_t>(cap) > max_term_cap)
      throw UsageError("ZETAKIT_TERM_CAP must lie in [1, 1e7]");
   return static_cast<std::size_t>(cap);
}

std::string timestamp()
{
   std::time_t now = std::time(nullptr);
   if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
      now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
   char buf[32];
   std::tm tm{};
   gmtime_r(&now, &tm);
   std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
   return buf;
}

// output to a file or standard output
class Sink
{
public:
   explicit Sink(const std::string& path)
   {
      if (!path.empty() && path != "-")
      {
         file_.open(path);
         if (!file_)
            throw UsageError("cannot open '" + path + "' for writing");
      }
   }
   std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
   std::ofstream file_;
};

// ---- eval

struct EvalArgs
{
   std::string function;
   std::map<std::string, std::string> flags;
   double tol = 1e-12;
   SeriesConfig cfg;

   const std::string& need(const std::string& name) const
   {
      auto it = flags.find(name);
      if (it == flags.end() || it->second.empty())
         throw UsageError(function + " needs --" + name);
      return it->second;
   }
   complex c(const std::string& name) const { return parse_complex(need(name)); }
   double r(const std::string& name) const { return parse_real(need(name)); }
   int i(const std::string& name) const { return parse_int(need(name)); }
   bool has(const std::string& name) const { return flags.count(name) && !flags.at(name).empty(); }
};

void print_series(const SeriesResult& r)
{
   std::cout << "value = " << format_complex(r.value) << "\n";
   std::cout << "error_estimate = " << r.abs_error_estimate << "\n";
   std::cout << "terms = " << r.terms_used << "\n";
}

void print_value(complex v)
{
   std::cout << "value = " << format_complex(v) << "\n";
}

PathKind parse_path(const std::string& name)
{
   static const std::map<std::string, PathKind> kinds{{"A", PathKind::circle_A},
                                                      {"B", PathKind::double_circle_B},
                                                      {"C", PathKind::two_lines_C},
                                                      {"D", PathKind::four_lines_D}};
   auto it = kinds.find(name);
   if (it == kinds.end())
      throw UsageError("path must be one of A, B, C, D");
   return it->second;
}

using Evaluator = std::function<void(const EvalArgs&)>;

const std::map<std::string, std::pair<std::string, Evaluator>>& evaluators()
{
   static const std::map<std::string, std::pair<std::string, Evaluator>> table{
      {"zeta", {"--s: reference zeta(s)", [](const EvalArgs& a) { print_value(zeta_ref(a.c("s"))); }}},
      {"eta", {"--s: reference eta(s)", [](const EvalArgs& a) { print_value(eta_ref(a.c("s"))); }}},
      {"eta-series",
       {"--s [--n]: eta(s) from the E_s series, n-fold recursed",
        [](const EvalArgs& a) {
           const int n = a.has("n") ? a.i("n") : 0;
           print_series(n == 0 ? eta_via_expint_series(a.c("s"), a.cfg) : eta_via_recursed_series(a.c("s"), n, a.cfg));
        }}},
      {"zeta-reflected",
       {"--s --n: zeta(s) from the reflected recursion",
        [](const EvalArgs& a) { print_series(zeta_via_reflected_recursion(a.c("s"), a.i("n"), a.cfg)); }}},
      {"zeta-minus", {"--s: incomplete zeta over [0, 1]", [](const EvalArgs& a) { print_value(zeta_minus(a.c("s"), a.tol)); }}},
      {"zeta-plus", {"--s: incomplete zeta over [1, inf)", [](const EvalArgs& a) { print_value(zeta_plus(a.c("s"), a.tol)); }}},
      {"eta-minus", {"--s: incomplete eta, circle part", [](const EvalArgs& a) { print_value(eta_minus(a.c("s"), a.tol)); }}},
      {"eta-plus", {"--s: incomplete eta, real-axis part", [](const EvalArgs& a) { print_value(eta_plus(a.c("s"), a.tol)); }}},
      {"eta-path",
       {"--s --path A|B|C|D: eta(s) from a path integral",
        [](const EvalArgs& a) {
           print_value(path_integral_eta(a.c("s"), make_path(parse_path(a.has("path") ? a.need("path") : "A")), a.tol));
        }}},
      {"zeta-derivative",
       {"--s [--n]: zeta'(s) from the E^1 series",
        [](const EvalArgs& a) { print_series(zeta_derivative_series(a.c("s"), a.has("n") ? a.i("n") : 0, a.cfg)); }}},
      {"zeta-odd",
       {"--m [--p]: zeta(2m+1) from the E_1 or order-p series",
        [](const EvalArgs& a) {
           print_series(a.has("p") ? zeta_odd_via_order_p_series(a.i("m"), a.i("p"), a.cfg)
                                   : zeta_odd_via_e1_series(a.i("m"), a.cfg));
        }}},
      {"zeta-odd-integral",
       {"--m: zeta(2m+1) from the A(m) double integral",
        [](const EvalArgs& a) { print_value(zeta_odd_via_double_integral(a.i("m"))); }}},
      {"zeta-odd-mellin",
       {"--m: zeta(2m+1) from the vertical-line integral",
        [](const EvalArgs& a) {
           const auto r = mellin_barnes_zeta_odd(a.i("m"));
           print_value(r.zeta());
           std::cout << "cutoff = " << r.cutoff << "\n";
        }}},
      {"zeta-gaussian",
       {"--s [--lambda]: zeta(s) from Gaussian E-sums",
        [](const EvalArgs& a) {
           print_series(zeta_via_gaussian_expint(a.c("s"), a.has("lambda") ? a.c("lambda") : complex(1.0), a.cfg));
        }}},
      {"xi", {"--s: xi(s) from E-sums", [](const EvalArgs& a) { print_series(xi_via_expint_series(a.c("s"), a.cfg)); }}},
      {"expint",
       {"--s --z: E_s(z)",
        [](const EvalArgs& a) { print_series(expint_E(a.c("s"), a.c("z"), std::max(a.tol, default_expint_tol))); }}},
      {"si", {"--x: sine integral", [](const EvalArgs& a) { print_value(sine_integral(a.r("x"))); }}},
      {"ci", {"--x: cosine integral", [](const EvalArgs& a) { print_value(cosine_integral(a.r("x"))); }}},
      {"gamma", {"--z: Gamma(z)", [](const EvalArgs& a) { print_value(gamma(a.c("z"))); }}},
      {"digamma", {"--z: psi(z)", [](const EvalArgs& a) { print_value(digamma(a.c("z"))); }}},
      {"bernoulli", {"--n: exact B_n", [](const EvalArgs& a) { std::cout << to_string(bernoulli_exact(a.i("n"))) << "\n"; }}},
      {"euler-number", {"--n: exact E(n)", [](const EvalArgs& a) { std::cout << to_string(euler_number(a.i("n"))) << "\n"; }}},
      {"critical-line",
       {"--t: J1..J4 and zeta-, zeta+ at 1/2 + it",
        [](const EvalArgs& a) {
           const auto v = critical_line_system(a.r("t"));
           std::printf("J1 = %.17g\nJ2 = %.17g\nJ3 = %.17g\nJ4 = %.17g\n", v.J1, v.J2, v.J3, v.J4);
           std::cout << "zeta_minus = " << format_complex({v.zeta_minus_re, v.zeta_minus_im}) << "\n";
           std::cout << "zeta_plus = " << format_complex({v.zeta_plus_re, v.zeta_plus_im}) << "\n";
           print_value(v.zeta());
        }}},
   };
   return table;
}

int run_eval(const EvalArgs& args)
{
   const auto& table = evaluators();
   auto it = table.find(args.function);
   if (it == table.end())
   {
      std::cerr << "unknown function '" << args.function << "'; available:\n";
      for (const auto& [name, entry] : table)
         std::cerr << "  " << name << "  " << entry.first << "\n";
      return exit_usage;
   }
   try
   {
      it->second.second(args);
   }
   catch (const UsageError&)
   {
      throw;
   }
   catch (const std::exception& e)
   {
      std::cerr << "evaluation error: " << e.what() << "\n";
      return exit_eval;
   }
   return 0;
}

// ---- verify

json complex_json(complex z)
{
   return {{"re", z.real()}, {"im", z.imag()}};
}

json side_json(complex z, const std::optional<std::string>& exact)
{
   json j = complex_json(z);
   if (exact)
   {
      const auto slash = exact->find('/');
      j["numerator"] = exact->substr(0, slash);
      j["denominator"] = slash == std::string::npos ? "1" : exact->substr(slash + 1);
   }
   return j;
}

std::string csv_field(const std::string& s)
{
   if (s.find_first_of(",\"\n") == std::string::npos)
      return s;
   std::string out = "\"";
   for (char ch : s)
      out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
   return out + "\"";
}

std::string num(double v)
{
   char buf[40];
   std::snprintf(buf, sizeof buf, "%.17g", v);
   return buf;
}

struct VerifyArgs
{
   std::string suite = "*";
   std::optional<double> tol;
   std::string format = "human";
   std::string out;
   int jobs = 1;
};

int run_verify(const VerifyArgs& args)
{
   const int cpus = std::max(1u, std::thread::hardware_concurrency());
   if (args.jobs < 1 || args.jobs > 4 * cpus)
      throw UsageError("--jobs must lie in [1, " + std::to_string(4 * cpus) + "]");
   if (args.tol && !(*args.tol >= 0.0))
      throw UsageError("--tol must be non-negative");
   if (args.format != "json" && args.format != "csv" && args.format != "human")
      throw UsageError("--format must be json, csv or human");
   if (matching_checks(args.suite).empty())
      throw UsageError("no checks match '" + args.suite + "'");

   RunOptions options;
   options.pattern = args.suite;
   options.tolerance_override = args.tol;
   options.jobs = args.jobs;
   options.series.term_cap = term_cap_from_env();
   const std::string started = timestamp();
   const auto records = run_checks(options);
   int passed = 0;
   for (const auto& r : records)
      passed += r.pass;
   const int failed = static_cast<int>(records.size()) - passed;

   Sink sink(args.out);
   std::ostream& os = sink.stream();
   if (args.format == "json")
   {
      json report;
      report["schema"] = 1;
      report["started_at"] = started;
      report["config"] = {{"suite", args.suite},
                          {"tolerance_override", args.tol ? json(*args.tol) : json(nullptr)},
                          {"term_cap", options.series.term_cap},
                          {"parallelism", args.jobs},
                          {"format", args.format},
                          {"output_path", args.out}};
      json list = json::array();
      for (const auto& r : records)
      {
         json j{{"id", r.id},
                {"anchor", r.anchor},
                {"lhs", side_json(r.lhs, r.lhs_exact)},
                {"rhs", side_json(r.rhs, r.rhs_exact)},
                {"abs_diff", r.error.empty() ? json(r.abs_diff) : json(nullptr)},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"wall_ms", r.wall_ms}};
         if (!r.error.empty())
            j["error"] = r.error;
         list.push_back(std::move(j));
      }
      report["records"] = std::move(list);
      report["summary"] = {{"passed", passed}, {"failed", failed}};
      os << report.dump(2) << "\n";
   }
   else if (args.format == "csv")
   {
      os << "id,anchor,lhs_re,lhs_im,rhs_re,rhs_im,lhs_exact,rhs_exact,abs_diff,tolerance,pass,wall_ms,error\n";
      for (const auto& r : records)
         os << csv_field(r.id) << ',' << csv_field(r.anchor) << ',' << num(r.lhs.real()) << ',' << num(r.lhs.imag()) << ','
            << num(r.rhs.real()) << ',' << num(r.rhs.imag()) << ',' << r.lhs_exact.value_or("") << ','
            << r.rhs_exact.value_or("") << ',' << num(r.abs_diff) << ',' << num(r.tolerance) << ','
            << (r.pass ? "true" : "false") << ',' << num(r.wall_ms) << ',' << csv_field(r.error) << "\n";
   }
   else
   {
      for (const auto& r : records)
      {
         char line[512];
         std::snprintf(line, sizeof line, "%s  %-52s  diff %.3e  tol %.1e", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                       r.abs_diff, r.tolerance);
         os << line;
         if (!r.error.empty())
            os << "  (" << r.error << ")";
         os << "\n";
      }
   }
   os.flush();
   std::cout << passed << " passed, " << failed << " failed\n";
   return failed == 0 ? 0 : exit_fail;
}

// ---- table

std::vector<double> parse_grid(const std::string& text)
{
   std::vector<double> values;
   if (text.find(':') != std::string::npos)
   {
      std::vector<std::string> parts;
      std::stringstream ss(text);
      for (std::string p; std::getline(ss, p, ':');)
         parts.push_back(p);
      if (parts.size() != 3)
         throw UsageError("range must be start:stop:step");
      const double a = parse_real(parts[0]), b = parse_real(parts[1]), h = parse_real(parts[2]);
      if (!(h > 0) || b < a)
         throw UsageError("range needs step > 0 and stop >= start");
      const long n = static_cast<long>(std::floor((b - a) / h + 1e-9));
      if (n > 100000)
         throw UsageError("range has too many points");
      for (long i = 0; i <= n; ++i)
         values.push_back(a + static_cast<double>(i) * h);
      return values;
   }
   std::stringstream ss(text);
   for (std::string p; std::getline(ss, p, ',');)
      values.push_back(parse_real(p));
   if (values.empty())
      throw UsageError("empty list");
   return values;
}

struct TableArgs
{
   std::string name;
   std::string s = "0.5";
   std::string n = "0,1,2";
   std::string t;
   int max_terms = 60;
   int kmax = 15;
   std::string acceleration = "none";
   std::string out;
};

int run_table(const TableArgs& args)
{
   static const std::vector<std::string> names{"convergence", "critical-line", "asymptotic-truncation"};
   if (std::find(names.begin(), names.end(), args.name) == names.end())
   {
      std::cerr << "unknown table '" << args.name << "'; available: convergence, critical-line, asymptotic-truncation\n";
      return exit_usage;
   }
   std::ostringstream os;
   try
   {
      if (args.name == "convergence")
      {
         const complex s = parse_complex(args.s);
         std::vector<int> depths;
         for (double d : parse_grid(args.n))
            depths.push_back(parse_int(num(d)));
         Acceleration acc;
         if (args.acceleration == "none")
            acc = Acceleration::none;
         else if (args.acceleration == "alternating")
            acc = Acceleration::alternating;
         else
            throw UsageError("--acceleration must be none or alternating");
         if (args.max_terms < 1 || args.max_terms > static_cast<int>(alternating_max_terms))
            throw UsageError("--max-terms must lie in [1, 300]");
         const complex exact = eta_ref(s);
         os << "terms";
         for (int n : depths)
            os << ",abs_error_n" << n;
         os << "\n";
         for (int terms = 1; terms <= args.max_terms; ++terms)
         {
            os << terms;
            for (int n : depths)
               os << ',' << num(std::abs(eta_recursed_truncated(s, n, static_cast<std::size_t>(terms), acc) - exact));
            os << "\n";
         }
      }
      else if (args.name == "critical-line")
      {
         const auto ts = parse_grid(args.t.empty() ? "0:30:0.5" : args.t);
         os << "t,J1,J2,J3,J4,zeta_minus_re,zeta_minus_im,zeta_plus_re,zeta_plus_im,zeta_re,zeta_im,abs_error\n";
         for (double t : ts)
         {
            const auto v = critical_line_system(t);
            const complex z = v.zeta();
            os << num(t) << ',' << num(v.J1) << ',' << num(v.J2) << ',' << num(v.J3) << ',' << num(v.J4) << ','
               << num(v.zeta_minus_re) << ',' << num(v.zeta_minus_im) << ',' << num(v.zeta_plus_re) << ','
               << num(v.zeta_plus_im) << ',' << num(z.real()) << ',' << num(z.imag()) << ','
               << num(std::abs(z - zeta_ref(complex(0.5, t)))) << "\n";
         }
      }
      else
      {
         const double t = parse_real(args.t.empty() ? "4" : args.t);
         const auto a = eta_hurwitz_half_asymptotic(t, args.kmax);
         os << "K,partial_sum,abs_error,optimal\n";
         for (int K = 0; K <= args.kmax; ++K)
            os << K << ',' << num(a.partial_sums[K]) << ',' << num(a.error(K)) << ',' << (K == a.optimal_index ? 1 : 0)
               << "\n";
      }
   }
   catch (const UsageError&)
   {
      throw;
   }
   catch (const std::exception& e)
   {
      std::cerr << "evaluation error: " << e.what() << "\n";
      return exit_eval;
   }
   Sink sink(args.out);
   sink.stream() << os.str();
   return 0;
}

} // namespace

int main(int argc, char** argv)
{
   CLI::App app{"zetakit: series and integral representations of the Riemann zeta function"};
   app.require_subcommand(1);

   EvalArgs eval;
   auto* eval_cmd = app.add_subcommand("eval", "evaluate one function");
   eval_cmd->add_option("function", eval.function, "function name (run with an unknown name to list)")->required();
   for (const char* flag : {"s", "z", "n", "m", "p", "t", "x", "path", "lambda"})
      eval_cmd->add_option(std::string("--") + flag, eval.flags[flag], std::string("argument ") + flag);
   eval_cmd->add_option("--tol", eval.tol, "quadrature tolerance")->check(CLI::PositiveNumber);

   VerifyArgs verify;
   auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
   verify_cmd->add_option("--suite", verify.suite, "shell pattern over check ids");
   verify_cmd->add_option("--tol", verify.tol, "override every check tolerance");
   verify_cmd->add_option("--format", verify.format, "json, csv or human");
   verify_cmd->add_option("--out", verify.out, "report path (default: standard output)");
   verify_cmd->add_option("--jobs", verify.jobs, "worker threads");
   bool list_only = false;
   verify_cmd->add_flag("--list", list_only, "print matching ids and exit");

   TableArgs table;
   auto* table_cmd = app.add_subcommand("table", "write a CSV table");
   table_cmd->add_option("name", table.name, "convergence, critical-line or asymptotic-truncation")->required();
   table_cmd->add_option("--s", table.s, "convergence: s");
   table_cmd->add_option("--n", table.n, "convergence: recursion depths, list or range");
   table_cmd->add_option("--max-terms", table.max_terms, "convergence: largest term count");
   table_cmd->add_option("--acceleration", table.acceleration, "convergence: none or alternating");
   table_cmd->add_option("--t", table.t, "critical-line: t range a:b:h; asymptotic-truncation: t");
   table_cmd->add_option("--kmax", table.kmax, "asymptotic-truncation: largest order");
   table_cmd->add_option("--out", table.out, "output path (default: standard output)");

   try
   {
      app.parse(argc, argv);
   }
   catch (const CLI::ParseError& e)
   {
      const int code = app.exit(e);
      return code == 0 ? 0 : exit_usage;
   }

   try
   {
      if (*eval_cmd)
      {
         eval.cfg.term_cap = term_cap_from_env();
         return run_eval(eval);
      }
      if (*verify_cmd)
      {
         if (list_only)
         {
            for (const auto& id : matching_checks(verify.suite))
               std::cout << id << "\n";
            return 0;
         }
         return run_verify(verify);
      }
      return run_table(table);
   }
   catch (const UsageError& e)
   {
      std::cerr << "error: " << e.what() << "\n";
      return exit_usage;
   }
}
