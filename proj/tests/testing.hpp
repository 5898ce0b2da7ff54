// Minimal self-registering test runner: TEST_CASE(name) { CHECK(...); }
// A binary's main() calls testing::run_all(argc, argv); an optional argument
// filters cases by substring.
#pragma once
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

namespace testing {

struct Case {
  const char* name;
  void (*fn)();
};

inline std::vector<Case>& registry() {
  static std::vector<Case> r;
  return r;
}

struct Registrar {
  Registrar(const char* name, void (*fn)()) { registry().push_back({name, fn}); }
};

inline int& current_failures() {
  static int n = 0;
  return n;
}

inline void report_failure(const char* what, const char* file, int line, const std::string& detail) {
  ++current_failures();
  std::printf("    FAILED %s at %s:%d%s%s\n", what, file, line, detail.empty() ? "" : ": ",
              detail.c_str());
}

inline int run_all(int argc, char** argv) {
  const char* filter = argc > 1 ? argv[1] : nullptr;
  int failed_cases = 0, ran = 0;
  for (const Case& c : registry()) {
    if (filter && std::strstr(c.name, filter) == nullptr) continue;
    ++ran;
    int before = current_failures();
    try {
      c.fn();
    } catch (const std::exception& e) {
      report_failure("unexpected exception", "?", 0, e.what());
    } catch (...) {
      report_failure("unexpected exception", "?", 0, "(non-standard)");
    }
    bool ok = current_failures() == before;
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", c.name);
    if (!ok) ++failed_cases;
  }
  std::printf("%d case(s) run, %d failed\n", ran, failed_cases);
  if (ran == 0) {
    std::printf("no cases matched\n");
    return 1;
  }
  return failed_cases == 0 ? 0 : 1;
}

}  // namespace testing

#define TESTING_CONCAT2(a, b) a##b
#define TESTING_CONCAT(a, b) TESTING_CONCAT2(a, b)

#define TEST_CASE(name)                                                   \
  static void TESTING_CONCAT(test_fn_, name)();                           \
  static ::testing::Registrar TESTING_CONCAT(test_reg_, name)(            \
      #name, &TESTING_CONCAT(test_fn_, name));                            \
  static void TESTING_CONCAT(test_fn_, name)()

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) ::testing::report_failure("CHECK(" #cond ")", __FILE__, __LINE__, ""); \
  } while (0)

#define CHECK_EQ(a, b)                                                    \
  do {                                                                    \
    auto va_ = (a);                                                       \
    auto vb_ = (b);                                                       \
    if (!(va_ == vb_))                                                    \
      ::testing::report_failure("CHECK_EQ(" #a ", " #b ")", __FILE__, __LINE__, ""); \
  } while (0)

#define CHECK_NEAR(a, b, tol)                                             \
  do {                                                                    \
    double va_ = static_cast<double>(a);                                  \
    double vb_ = static_cast<double>(b);                                  \
    double tol_ = static_cast<double>(tol);                               \
    if (!(std::fabs(va_ - vb_) <= tol_))                                  \
      ::testing::report_failure("CHECK_NEAR(" #a ", " #b ")", __FILE__, __LINE__, \
                                std::to_string(va_) + " vs " + std::to_string(vb_) + \
                                    " (tol " + std::to_string(tol_) + ")");          \
  } while (0)

#define CHECK_THROWS_KIND(expr, kind)                                     \
  do {                                                                    \
    bool threw_ = false;                                                  \
    try {                                                                 \
      (void)(expr);                                                       \
    } catch (const kind&) {                                               \
      threw_ = true;                                                      \
    } catch (...) {                                                       \
    }                                                                     \
    if (!threw_)                                                          \
      ::testing::report_failure("CHECK_THROWS_KIND(" #expr ")", __FILE__, __LINE__, ""); \
  } while (0)
