#include <gtest/gtest.h>

#include "cli/job_config.hpp"
#include "spheregreen/errors.hpp"

using namespace spheregreen;
using namespace spheregreen::cli;

TEST(JobConfig, ParsesKeyValueText) {
  const auto c = parse_job_config(
      "# job\n"
      "command = green\n"
      "mode = eval   # trailing comment\n"
      "n = 4\n"
      "a = -3/4\n"
      "t = 0, 0.5 ,-1/2\n"
      "backend = closed,series\n"
      "resonant = yes\n"
      "\n");
  EXPECT_EQ(c.command, "green");
  EXPECT_EQ(c.mode, "eval");
  EXPECT_EQ(*c.n, 4);
  EXPECT_DOUBLE_EQ(*c.a, -0.75);
  EXPECT_EQ(c.t, (std::vector<double>{0.0, 0.5, -0.5}));
  EXPECT_EQ(c.backend, "closed,series");
  EXPECT_TRUE(c.resonant);
  EXPECT_FALSE(c.L.has_value());
}

TEST(JobConfig, RoundTripsThroughText) {
  JobConfig c;
  c.command = "wavelet";
  c.mode = "admissibility";
  c.n = 5;
  c.L = 1.0 / 3.0;
  c.l_max = 200;
  c.t = {0.1, -0.7};
  c.grid = 7;
  c.t_min = -0.5;
  c.quad_tol = 3e-12;
  c.d = 3;
  c.rho_min = 1e-6;
  c.rho_count = 123;
  c.in = "f.spec";
  c.out = "out.csv";
  c.report = "r.txt";
  c.latex = true;
  c.route = "kernel";
  c.tol = 0.1;
  const std::string text = c.to_text();
  const auto back = parse_job_config(text);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_EQ(*back.L, *c.L);
  EXPECT_EQ(back.quad_tol, c.quad_tol);
  EXPECT_EQ(back.tol, c.tol);
  EXPECT_EQ(back.t, c.t);
  EXPECT_EQ(*back.rho_count, 123);
  EXPECT_FALSE(back.rho_max.has_value());
}

TEST(JobConfig, RejectsMalformedInput) {
  EXPECT_THROW(parse_job_config("n 3\n"), ParseError);
  EXPECT_THROW(parse_job_config("nn = 3\n"), ParseError);
  EXPECT_THROW(parse_job_config("n = 3.5\n"), ParseError);
  EXPECT_THROW(parse_job_config("a = 1/0\n"), ParseError);
  EXPECT_THROW(parse_job_config("a = x\n"), ParseError);
  EXPECT_THROW(parse_job_config("latex = maybe\n"), ParseError);
  EXPECT_THROW(load_job_config("/nonexistent/job.cfg"), ParseError);
  try {
    parse_job_config("n = 3\nbogus = 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(JobConfig, RealText) {
  EXPECT_DOUBLE_EQ(parse_real(" 7/2 "), 3.5);
  EXPECT_DOUBLE_EQ(parse_real("-1e-3"), -1e-3);
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 12345.678}) EXPECT_EQ(parse_real(real_text(x)), x);
}
