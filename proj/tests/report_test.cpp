#include <gtest/gtest.h>

#include <sstream>

#include "fuzzyqp/report.hpp"
#include "test_support.hpp"

namespace fuzzyqp {
namespace {

TEST(AlphaSpec, Range) {
  const auto g = parse_alpha_spec("0:1:0.2");
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g[3], 0.6);
  EXPECT_EQ(g.back(), 1.0);
}

TEST(AlphaSpec, ListAndSingle) {
  EXPECT_EQ(parse_alpha_spec("1.0"), std::vector<double>{1.0});
  EXPECT_EQ(parse_alpha_spec("0.5, 0,1"), (std::vector<double>{0.0, 0.5, 1.0}));
}

TEST(AlphaSpec, Rejects) {
  EXPECT_THROW(parse_alpha_spec("0:1:0"), DomainError);
  EXPECT_THROW(parse_alpha_spec("0:1"), DomainError);
  EXPECT_THROW(parse_alpha_spec("0:2:0.5"), DomainError);
  EXPECT_THROW(parse_alpha_spec("abc"), DomainError);
  EXPECT_THROW(parse_alpha_spec(""), DomainError);
  EXPECT_THROW(parse_alpha_spec("1:0:0.1"), DomainError);
}

TEST(FormatValue, TenSignificantDigits) {
  EXPECT_EQ(format_value(-49.0 / 12.0), "-4.083333333");
  EXPECT_EQ(format_value(-0.0), "0");
  EXPECT_EQ(format_value(0.6000000000000001), "0.6");
}

TEST(Csv, HeaderAndColumns) {
  const auto curve = solve_fqp(testing::example_problem(), {0.0, 1.0});
  std::ostringstream os;
  write_csv(os, curve);
  std::istringstream in(os.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header,
            "alpha,z_lower,z_upper,x_lower_1,x_lower_2,x_upper_1,x_upper_2,iter_lower,iter_upper,"
            "converged_lower,converged_upper");
  std::getline(in, row);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 10);
  EXPECT_EQ(row.rfind("true,true"), row.size() - 9);
}

TEST(Table, MentionsCoincidence) {
  std::ostringstream os;
  write_table(os, solve_fqp(testing::example_problem(), {0.0, 1.0}));
  EXPECT_NE(os.str().find("bounds coincide at alpha = 1"), std::string::npos) << os.str();
}

}  // namespace
}  // namespace fuzzyqp
