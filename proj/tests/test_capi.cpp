// Exercises the shared-library surface through the public C header only.
#include <grandai.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "testing.hpp"

TEST_CASE(status_names) {
  CHECK(std::strcmp(grandai_status_name(GRANDAI_OK), "ok") == 0);
  CHECK(std::strcmp(grandai_status_name(GRANDAI_ERR_CONFIG), "config") == 0);
  CHECK(std::strcmp(grandai_status_name(GRANDAI_ERR_NUMERIC), "numeric") == 0);
  CHECK(std::strcmp(grandai_status_name(GRANDAI_ERR_IO), "io") == 0);
}

TEST_CASE(errors_set_thread_local_message) {
  grandai_code* c = nullptr;
  grandai_status s = grandai_code_make_rlc(4, 8, 1, &c);  // k > n
  CHECK_EQ(static_cast<int>(s), static_cast<int>(GRANDAI_ERR_CONFIG));
  CHECK(c == nullptr);
  CHECK(std::strlen(grandai_last_error()) > 0);
  // a successful call clears the message
  CHECK_EQ(static_cast<int>(grandai_code_make_rlc(8, 4, 1, &c)), static_cast<int>(GRANDAI_OK));
  CHECK(std::strlen(grandai_last_error()) == 0);
  grandai_code_free(c);
}

TEST_CASE(code_roundtrip_and_rows) {
  grandai_code* c = nullptr;
  CHECK_EQ(static_cast<int>(grandai_code_make_rlc(16, 9, 3, &c)), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(grandai_code_n(c), 16);
  CHECK_EQ(grandai_code_k(c), 9);

  std::vector<uint8_t> info = {1, 0, 1, 1, 0, 0, 1, 0, 1};
  std::vector<uint8_t> cw(16);
  CHECK_EQ(static_cast<int>(grandai_code_encode(c, info.data(), cw.data())), static_cast<int>(GRANDAI_OK));
  for (int i = 0; i < 9; ++i) CHECK_EQ(static_cast<int>(cw[static_cast<size_t>(i)]), static_cast<int>(info[static_cast<size_t>(i)]));
  int member = 0;
  CHECK_EQ(static_cast<int>(grandai_code_is_member(c, cw.data(), &member)), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(member, 1);
  cw[3] ^= 1;
  CHECK_EQ(static_cast<int>(grandai_code_is_member(c, cw.data(), &member)), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(member, 0);

  // every generator row is itself a codeword; parity rows annihilate them
  std::vector<uint8_t> g(16), h(16);
  for (int r = 0; r < 9; ++r) {
    CHECK_EQ(static_cast<int>(grandai_code_generator_row(c, r, g.data())), static_cast<int>(GRANDAI_OK));
    CHECK_EQ(static_cast<int>(grandai_code_is_member(c, g.data(), &member)), static_cast<int>(GRANDAI_OK));
    CHECK_EQ(member, 1);
    for (int pr = 0; pr < 7; ++pr) {
      CHECK_EQ(static_cast<int>(grandai_code_parity_row(c, pr, h.data())), static_cast<int>(GRANDAI_OK));
      int dot = 0;
      for (int i = 0; i < 16; ++i) dot ^= g[static_cast<size_t>(i)] & h[static_cast<size_t>(i)];
      CHECK_EQ(dot, 0);
    }
  }
  CHECK_EQ(static_cast<int>(grandai_code_generator_row(c, 9, g.data())), static_cast<int>(GRANDAI_ERR_CONFIG));
  grandai_code_free(c);

  // CRC dimensions follow the polynomial degree
  grandai_code* crc = nullptr;
  CHECK_EQ(static_cast<int>(grandai_code_make_crc(120, 0xb41, &crc)), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(grandai_code_n(crc), 132);
  CHECK_EQ(grandai_code_k(crc), 120);
  grandai_code_free(crc);
}

TEST_CASE(entropy_values) {
  double v = 0;
  CHECK_EQ(static_cast<int>(grandai_entropy_white(1.0, &v)), static_cast<int>(GRANDAI_OK));
  CHECK_NEAR(v, 2.8378770664093453, 1e-12);  // log(2*pi*e)

  double w = 0;
  CHECK_EQ(static_cast<int>(grandai_entropy_gm1(0.0, 1.0, 8, &w)), static_cast<int>(GRANDAI_OK));
  CHECK_NEAR(w, v, 1e-12);  // no correlation: same as white

  CHECK_EQ(static_cast<int>(grandai_entropy_gm1(0.5, 1.0, 4, &w)), static_cast<int>(GRANDAI_OK));
  CHECK_NEAR(w, 2.8378770664093453 + 0.75 * std::log(0.75), 1e-12);

  double blk = 0;
  CHECK_EQ(static_cast<int>(grandai_entropy_gm1_block(0.5, 1.0, 2, &blk)), static_cast<int>(GRANDAI_OK));
  CHECK_NEAR(blk, 2.8378770664093453 + 0.5 * std::log(0.75), 1e-12);

  double det = 0;
  CHECK_EQ(static_cast<int>(grandai_ar2_determinant(0.5, 0.25, 1.0, 4, &det)), static_cast<int>(GRANDAI_OK));
  CHECK_NEAR(det, 0.421875, 1e-12);  // collapses to a first-order process

  CHECK_EQ(grandai_ar2_valid(0.5, 0.25), 1);
  CHECK_EQ(grandai_ar2_valid(0.9, -0.5), 0);
  CHECK_EQ(static_cast<int>(grandai_entropy_gm1(1.5, 1.0, 4, &w)), static_cast<int>(GRANDAI_ERR_CONFIG));
}

TEST_CASE(sounding_files_roundtrip) {
  const char* ir_path = "capi_ir.csv";
  const char* tap_path = "capi_taps.csv";
  CHECK_EQ(static_cast<int>(grandai_synth_impulse_response_file(7, 40, 8, 0.5, 0.6, ir_path)),
           static_cast<int>(GRANDAI_OK));
  CHECK_EQ(static_cast<int>(grandai_extract_taps_file(ir_path, 8, 1.0e7, tap_path)), static_cast<int>(GRANDAI_OK));
  std::ifstream taps(tap_path);
  CHECK(taps.good());
  std::string header;
  CHECK(static_cast<bool>(std::getline(taps, header)));
  CHECK(header.find("tap") != std::string::npos || header.find("re") != std::string::npos);
  CHECK_EQ(static_cast<int>(grandai_extract_taps_file("no_such_file.csv", 8, 1.0e7, tap_path)),
           static_cast<int>(GRANDAI_ERR_IO));
  std::remove(ir_path);
  std::remove(tap_path);
}

TEST_CASE(decoder_clean_dicode_frame) {
  grandai_code* c = nullptr;
  CHECK_EQ(static_cast<int>(grandai_code_make_rlc(8, 4, 6, &c)), static_cast<int>(GRANDAI_OK));
  std::vector<uint8_t> info = {1, 0, 1, 1};
  std::vector<uint8_t> cw(8);
  CHECK_EQ(static_cast<int>(grandai_code_encode(c, info.data(), cw.data())), static_cast<int>(GRANDAI_OK));

  const double rho = 0.5;
  grandai_decoder* d = nullptr;
  CHECK_EQ(static_cast<int>(grandai_decoder_create_dicode(c, "bpsk", rho, 0.4, 2, 2, 0, &d)),
           static_cast<int>(GRANDAI_OK));

  // noiseless two-tap channel output: y_k = x_k - rho*x_{k-1}
  std::vector<double> x(8);
  for (int i = 0; i < 8; ++i) x[static_cast<size_t>(i)] = cw[static_cast<size_t>(i)] ? -1.0 : 1.0;
  std::vector<double> y(16, 0.0);
  for (int k = 0; k < 8; ++k) {
    double v = x[static_cast<size_t>(k)] - (k > 0 ? rho * x[static_cast<size_t>(k - 1)] : 0.0);
    y[static_cast<size_t>(2 * k)] = v;
  }

  std::vector<uint8_t> out(8);
  int found = 0;
  uint64_t queries = 0;
  CHECK_EQ(static_cast<int>(grandai_decoder_decode(d, y.data(), 8, out.data(), &found, &queries)),
           static_cast<int>(GRANDAI_OK));
  CHECK_EQ(found, 1);
  CHECK_EQ(queries, 1ull);
  CHECK(out == cw);

  CHECK_EQ(static_cast<int>(grandai_decoder_decode(d, y.data(), 7, out.data(), &found, nullptr)),
           static_cast<int>(GRANDAI_ERR_CONFIG));  // wrong frame length
  grandai_decoder_free(d);
  grandai_code_free(c);

  grandai_decoder* bad = nullptr;
  CHECK_EQ(static_cast<int>(grandai_decoder_create_dicode(nullptr, "bpsk", rho, 0.4, 2, 2, 0, &bad)),
           static_cast<int>(GRANDAI_ERR_CONFIG));
}

TEST_CASE(sim_runs_and_writes_csv) {
  grandai_sim* s = nullptr;
  CHECK_EQ(static_cast<int>(grandai_sim_create(&s)), static_cast<int>(GRANDAI_OK));
  auto set = [&](const char* k, const char* v) {
    CHECK_EQ(static_cast<int>(grandai_sim_set(s, k, v)), static_cast<int>(GRANDAI_OK));
  };
  set("code.type", "rlc");
  set("code.n", "32");
  set("code.k", "26");
  set("code.seed", "5");
  set("mod", "bpsk");
  set("channel.type", "dicode");
  set("channel.rho", "0.5");
  set("eq", "zf");
  set("decoder", "orbgrand_ai");
  set("decoder.b", "2");
  set("decoder.tau", "2000");
  set("ebn0", "5");
  set("seed", "9");
  set("stop.errors", "8");
  set("stop.frames", "300");

  const char* out_csv = "capi_sweep.csv";
  CHECK_EQ(static_cast<int>(grandai_sim_run_to_csv(s, out_csv, 2)), static_cast<int>(GRANDAI_OK));
  std::ifstream in(out_csv);
  CHECK(in.good());
  std::string header, row;
  CHECK(static_cast<bool>(std::getline(in, header)));
  CHECK(header == "ebn0_db,frames,errors,bler,ci_lo,ci_hi,mean_queries,failures");
  CHECK(static_cast<bool>(std::getline(in, row)));
  CHECK(row.rfind("5,", 0) == 0);
  std::ifstream meta(std::string(out_csv) + ".meta");
  CHECK(meta.good());
  grandai_sim_free(s);
  std::remove(out_csv);
  std::remove((std::string(out_csv) + ".meta").c_str());

  // invalid configuration surfaces as a config error at run time
  grandai_sim* s2 = nullptr;
  CHECK_EQ(static_cast<int>(grandai_sim_create(&s2)), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(static_cast<int>(grandai_sim_set(s2, "code.type", "nonsense")), static_cast<int>(GRANDAI_OK));
  CHECK_EQ(static_cast<int>(grandai_sim_run_to_csv(s2, "capi_bad.csv", 1)), static_cast<int>(GRANDAI_ERR_CONFIG));
  grandai_sim_free(s2);
  CHECK_EQ(static_cast<int>(grandai_sim_load_file(nullptr, "x")), static_cast<int>(GRANDAI_ERR_CONFIG));
}

int main(int argc, char** argv) { return testing::run_all(argc, argv); }
