// Command-line front end. Talks to the library exclusively through the C API
// so it doubles as a smoke test for the shared-library surface.
#include <grandai.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

namespace {

int usage(FILE* to) {
  std::fprintf(to,
               "usage:\n"
               "  grandai simulate [--config FILE] [--set KEY=VALUE]... [--ebn0 GRID]\n"
               "                   [--seed N] [--workers N] --out FILE\n"
               "  grandai analyze entropy --kind white|gm1|gm1_block|ar2 --sigma2 S\n"
               "                   [--rho R] [--n N] [--b B] [--rho1 R] [--rho2 R]\n"
               "  grandai analyze ar2-det --rho1 R --rho2 R --sigma2 S --n N\n"
               "  grandai codes make --type rlc|crc [--n N] --k N [--seed N] [--poly HEX]\n"
               "                   [--print G|H]\n"
               "  grandai channel synth-ir --seed N --m N [--mu N] [--sparsity F]\n"
               "                   [--decay F] --out FILE\n"
               "  grandai channel extract-taps --ir FILE --L N [--fs F] --out FILE\n"
               "\n"
               "Config keys for simulate: code.type/n/k/seed/poly, mod, channel.type/rho/...,\n"
               "eq, decoder, decoder.b/gamma/tau/cov, csi, csi.nmse/delta_rho/quantize_levels,\n"
               "ebn0, seed, stop.errors, stop.frames. See README.md for the full schema.\n");
  return to == stdout ? 0 : 1;
}

struct Args {
  std::map<std::string, std::vector<std::string>> kv;

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  std::string get(const std::string& k, const std::string& def = "") const {
    auto it = kv.find(k);
    return it == kv.end() ? def : it->second.back();
  }
  double num(const std::string& k, double def) const {
    auto it = kv.find(k);
    return it == kv.end() ? def : std::atof(it->second.back().c_str());
  }
  long long inum(const std::string& k, long long def) const {
    auto it = kv.find(k);
    return it == kv.end() ? def : std::atoll(it->second.back().c_str());
  }
  uint64_t unum(const std::string& k, uint64_t def) const {
    auto it = kv.find(k);
    return it == kv.end() ? def : std::strtoull(it->second.back().c_str(), nullptr, 0);
  }
};

bool parse_flags(int argc, char** argv, int from, Args* out) {
  for (int i = from; i < argc; ++i) {
    const char* a = argv[i];
    if (std::strncmp(a, "--", 2) != 0 || a[2] == '\0') {
      std::fprintf(stderr, "unexpected argument: %s\n", a);
      return false;
    }
    if (i + 1 >= argc) {
      std::fprintf(stderr, "flag %s needs a value\n", a);
      return false;
    }
    out->kv[a + 2].push_back(argv[++i]);
  }
  return true;
}

int fail_with(grandai_status st, const char* what) {
  std::fprintf(stderr, "%s: %s error: %s\n", what, grandai_status_name(st), grandai_last_error());
  return static_cast<int>(st);
}

int require(const Args& a, const char* key) {
  if (!a.has(key)) {
    std::fprintf(stderr, "missing --%s\n", key);
    return 1;
  }
  return 0;
}

int cmd_simulate(const Args& a) {
  if (int rc = require(a, "out")) return rc;
  grandai_sim* sim = nullptr;
  grandai_status st = grandai_sim_create(&sim);
  if (st != GRANDAI_OK) return fail_with(st, "simulate");
  int rc = 0;
  do {
    if (a.has("config")) {
      st = grandai_sim_load_file(sim, a.get("config").c_str());
      if (st != GRANDAI_OK) { rc = fail_with(st, "simulate"); break; }
    }
    bool bad_set = false;
    for (const auto& s : (a.kv.count("set") ? a.kv.at("set") : std::vector<std::string>{})) {
      auto eq = s.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "--set wants KEY=VALUE, got: %s\n", s.c_str());
        rc = 1;
        bad_set = true;
        break;
      }
      st = grandai_sim_set(sim, s.substr(0, eq).c_str(), s.substr(eq + 1).c_str());
      if (st != GRANDAI_OK) { rc = fail_with(st, "simulate"); bad_set = true; break; }
    }
    if (bad_set) break;
    if (a.has("ebn0")) grandai_sim_set(sim, "ebn0", a.get("ebn0").c_str());
    if (a.has("seed")) grandai_sim_set(sim, "seed", a.get("seed").c_str());
    int workers = static_cast<int>(a.inum("workers", 0));
    st = grandai_sim_run_to_csv(sim, a.get("out").c_str(), workers);
    if (st != GRANDAI_OK) { rc = fail_with(st, "simulate"); break; }
    std::printf("wrote %s\n", a.get("out").c_str());
  } while (false);
  grandai_sim_free(sim);
  return rc;
}

int cmd_analyze(const std::string& what, const Args& a) {
  double out = 0.0;
  grandai_status st;
  if (what == "entropy") {
    std::string kind = a.get("kind", "gm1");
    double sigma2 = a.num("sigma2", 1.0);
    if (kind == "white") {
      st = grandai_entropy_white(sigma2, &out);
    } else if (kind == "gm1") {
      st = grandai_entropy_gm1(a.num("rho", 0.5), sigma2, static_cast<int>(a.inum("n", 128)), &out);
    } else if (kind == "gm1_block") {
      st = grandai_entropy_gm1_block(a.num("rho", 0.5), sigma2, static_cast<int>(a.inum("b", 4)), &out);
    } else if (kind == "ar2") {
      st = grandai_entropy_ar2(a.num("rho1", 0.5), a.num("rho2", 0.25), sigma2,
                               static_cast<int>(a.inum("n", 128)), &out);
    } else {
      std::fprintf(stderr, "unknown --kind: %s\n", kind.c_str());
      return 1;
    }
  } else if (what == "ar2-det") {
    st = grandai_ar2_determinant(a.num("rho1", 0.5), a.num("rho2", 0.25), a.num("sigma2", 1.0),
                                 static_cast<int>(a.inum("n", 4)), &out);
  } else {
    std::fprintf(stderr, "unknown analyze subcommand: %s\n", what.c_str());
    return usage(stderr);
  }
  if (st != GRANDAI_OK) return fail_with(st, "analyze");
  std::printf("%.12g\n", out);
  return 0;
}

int cmd_codes_make(const Args& a) {
  if (int rc = require(a, "k")) return rc;
  std::string type = a.get("type", "rlc");
  grandai_code* code = nullptr;
  grandai_status st;
  if (type == "rlc") {
    if (int rc = require(a, "n")) return rc;
    st = grandai_code_make_rlc(static_cast<int>(a.inum("n", 0)), static_cast<int>(a.inum("k", 0)),
                               a.unum("seed", 1), &code);
  } else if (type == "crc") {
    if (int rc = require(a, "poly")) return rc;
    st = grandai_code_make_crc(static_cast<int>(a.inum("k", 0)), a.unum("poly", 0), &code);
  } else {
    std::fprintf(stderr, "unknown --type: %s\n", type.c_str());
    return 1;
  }
  if (st != GRANDAI_OK) return fail_with(st, "codes");
  int n = grandai_code_n(code), k = grandai_code_k(code);
  std::printf("[%d,%d] rate %.6g\n", n, k, static_cast<double>(k) / n);
  std::string print = a.get("print", "");
  if (!print.empty()) {
    int rows = print == "G" ? k : n - k;
    std::vector<uint8_t> row(n);
    for (int r = 0; r < rows; ++r) {
      st = print == "G" ? grandai_code_generator_row(code, r, row.data())
                        : grandai_code_parity_row(code, r, row.data());
      if (st != GRANDAI_OK) {
        grandai_code_free(code);
        return fail_with(st, "codes");
      }
      for (int j = 0; j < n; ++j) std::putchar(row[j] ? '1' : '0');
      std::putchar('\n');
    }
  }
  grandai_code_free(code);
  return 0;
}

int cmd_channel(const std::string& what, const Args& a) {
  grandai_status st;
  if (what == "synth-ir") {
    if (int rc = require(a, "out")) return rc;
    if (int rc = require(a, "m")) return rc;
    st = grandai_synth_impulse_response_file(a.unum("seed", 7), static_cast<int>(a.inum("m", 0)),
                                             static_cast<int>(a.inum("mu", 32)), a.num("sparsity", 0.5),
                                             a.num("decay", 0.6), a.get("out").c_str());
  } else if (what == "extract-taps") {
    std::string ir = a.has("ir") ? a.get("ir") : a.get("in");
    if (ir.empty()) {
      std::fprintf(stderr, "missing --in (impulse-response CSV)\n");
      return 1;
    }
    if (int rc = require(a, "L")) return rc;
    if (int rc = require(a, "out")) return rc;
    st = grandai_extract_taps_file(ir.c_str(), static_cast<int>(a.inum("L", 0)), a.num("fs", 1.0e7),
                                   a.get("out").c_str());
  } else {
    std::fprintf(stderr, "unknown channel subcommand: %s\n", what.c_str());
    return usage(stderr);
  }
  if (st != GRANDAI_OK) return fail_with(st, "channel");
  std::printf("wrote %s\n", a.get("out").c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage(stderr);
  std::string cmd = argv[1];
  if (cmd == "help" || cmd == "--help" || cmd == "-h") return usage(stdout);

  Args a;
  if (cmd == "simulate") {
    if (!parse_flags(argc, argv, 2, &a)) return 1;
    return cmd_simulate(a);
  }
  if (cmd == "analyze" || cmd == "channel") {
    if (argc < 3) return usage(stderr);
    if (!parse_flags(argc, argv, 3, &a)) return 1;
    return cmd == "analyze" ? cmd_analyze(argv[2], a) : cmd_channel(argv[2], a);
  }
  if (cmd == "codes") {
    if (argc < 3 || std::string(argv[2]) != "make") return usage(stderr);
    if (!parse_flags(argc, argv, 3, &a)) return 1;
    return cmd_codes_make(a);
  }
  std::fprintf(stderr, "unknown command: %s\n", cmd.c_str());
  return usage(stderr);
}
