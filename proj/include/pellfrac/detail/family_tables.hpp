// Generated by tools/gen_family_tables.py. Do not edit by hand.
#pragma once

#include <span>
#include <string_view>

namespace pellfrac::detail::tables {

struct Term {
  int s_pow;
  int t_pow;
  const char* coef;
};

struct Factor {
  std::span<const Term> terms;
  int exponent;
};

struct Formula {
  std::string_view name;
  const char* constant;
  std::span<const Factor> factors;
};

inline constexpr Term tate_b_6_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_6_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Factor tate_b_6_factors[] = {
    {tate_b_6_f0, 1},
    {tate_b_6_f1, 1},
};
inline constexpr Formula tate_b_6{"tate_b_6", "1", tate_b_6_factors};

inline constexpr Term tate_c_6_f0[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_c_6_factors[] = {
    {tate_c_6_f0, 1},
};
inline constexpr Formula tate_c_6{"tate_c_6", "1", tate_c_6_factors};

inline constexpr Term tate_b_8_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_8_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Factor tate_b_8_factors[] = {
    {tate_b_8_f0, 1},
    {tate_b_8_f1, 1},
};
inline constexpr Formula tate_b_8{"tate_b_8", "1", tate_b_8_factors};

inline constexpr Term tate_c_8_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_c_8_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term tate_c_8_f2[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_c_8_factors[] = {
    {tate_c_8_f0, 1},
    {tate_c_8_f1, 1},
    {tate_c_8_f2, -1},
};
inline constexpr Formula tate_c_8{"tate_c_8", "1", tate_c_8_factors};

inline constexpr Term tate_b_10_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_10_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_10_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term tate_b_10_f3[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor tate_b_10_factors[] = {
    {tate_b_10_f0, 3},
    {tate_b_10_f1, 1},
    {tate_b_10_f2, 1},
    {tate_b_10_f3, -2},
};
inline constexpr Formula tate_b_10{"tate_b_10", "1", tate_b_10_factors};

inline constexpr Term tate_c_10_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_c_10_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_c_10_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term tate_c_10_f3[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor tate_c_10_factors[] = {
    {tate_c_10_f0, 1},
    {tate_c_10_f1, 1},
    {tate_c_10_f2, 1},
    {tate_c_10_f3, -1},
};
inline constexpr Formula tate_c_10{"tate_c_10", "-1", tate_c_10_factors};

inline constexpr Term tate_b_11_f0[] = {
    {1, 0, "1"},
};

inline constexpr Term tate_b_11_f1[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
};

inline constexpr Term tate_b_11_f2[] = {
    {1, 0, "1"},
    {0, 1, "-1"},
};

inline constexpr Term tate_b_11_f3[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_b_11_factors[] = {
    {tate_b_11_f0, 1},
    {tate_b_11_f1, 1},
    {tate_b_11_f2, 1},
    {tate_b_11_f3, -1},
};
inline constexpr Formula tate_b_11{"tate_b_11", "-1", tate_b_11_factors};

inline constexpr Term tate_c_11_f0[] = {
    {2, 0, "1"},
    {1, 1, "-1"},
};

inline constexpr Term tate_c_11_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_c_11_factors[] = {
    {tate_c_11_f0, 1},
    {tate_c_11_f1, -1},
};
inline constexpr Formula tate_c_11{"tate_c_11", "1", tate_c_11_factors};

inline constexpr Term tate_b_12_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term tate_b_12_f2[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "3"},
};

inline constexpr Term tate_b_12_f3[] = {
    {0, 0, "1"},
    {0, 1, "-2"},
    {0, 2, "2"},
};

inline constexpr Term tate_b_12_f4[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor tate_b_12_factors[] = {
    {tate_b_12_f0, 1},
    {tate_b_12_f1, 1},
    {tate_b_12_f2, 1},
    {tate_b_12_f3, 1},
    {tate_b_12_f4, -4},
};
inline constexpr Formula tate_b_12{"tate_b_12", "1", tate_b_12_factors};

inline constexpr Term tate_c_12_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_c_12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term tate_c_12_f2[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "3"},
};

inline constexpr Term tate_c_12_f3[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor tate_c_12_factors[] = {
    {tate_c_12_f0, 1},
    {tate_c_12_f1, 1},
    {tate_c_12_f2, 1},
    {tate_c_12_f3, -3},
};
inline constexpr Formula tate_c_12{"tate_c_12", "-1", tate_c_12_factors};

inline constexpr Term tate_b_13_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_13_f1[] = {
    {0, 0, "1"},
    {1, 0, "-1"},
    {0, 1, "-6"},
    {1, 1, "4"},
    {0, 2, "14"},
    {1, 2, "-5"},
    {0, 3, "-13"},
    {0, 4, "1"},
    {1, 4, "2"},
    {0, 5, "2"},
    {1, 5, "1"},
    {0, 6, "4"},
    {0, 7, "-1"},
    {0, 8, "-1"},
};

inline constexpr Term tate_b_13_f2[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_b_13_factors[] = {
    {tate_b_13_f0, 2},
    {tate_b_13_f1, 1},
    {tate_b_13_f2, -9},
};
inline constexpr Formula tate_b_13{"tate_b_13", "-1/2", tate_b_13_factors};

inline constexpr Term tate_c_13_f0[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "5"},
    {1, 1, "-3"},
    {0, 2, "-9"},
    {1, 2, "2"},
    {0, 3, "5"},
    {1, 3, "1"},
    {0, 4, "2"},
    {1, 4, "-1"},
    {0, 5, "-1"},
    {0, 6, "-2"},
    {0, 7, "1"},
};

inline constexpr Term tate_c_13_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor tate_c_13_factors[] = {
    {tate_c_13_f0, 1},
    {tate_c_13_f1, -5},
};
inline constexpr Formula tate_c_13{"tate_c_13", "1/2", tate_c_13_factors};

inline constexpr Term tate_b_14_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_14_f1[] = {
    {1, 0, "1"},
    {0, 1, "1"},
    {1, 1, "-3"},
    {0, 2, "-2"},
    {1, 2, "2"},
    {0, 3, "1"},
    {1, 3, "2"},
    {0, 4, "1"},
    {1, 4, "-2"},
    {0, 5, "-2"},
    {0, 6, "1"},
};

inline constexpr Term tate_b_14_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_14_f3[] = {
    {0, 0, "1"},
    {0, 1, "-1"},
    {0, 2, "-2"},
    {0, 3, "1"},
};

inline constexpr Factor tate_b_14_factors[] = {
    {tate_b_14_f0, 1},
    {tate_b_14_f1, 1},
    {tate_b_14_f2, -2},
    {tate_b_14_f3, -2},
};
inline constexpr Formula tate_b_14{"tate_b_14", "1", tate_b_14_factors};

inline constexpr Term tate_c_14_f0[] = {
    {1, 1, "1"},
    {0, 2, "1"},
    {1, 2, "-2"},
    {0, 3, "-1"},
    {1, 3, "1"},
};

inline constexpr Term tate_c_14_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_c_14_f2[] = {
    {0, 0, "1"},
    {0, 1, "-1"},
    {0, 2, "-2"},
    {0, 3, "1"},
};

inline constexpr Factor tate_c_14_factors[] = {
    {tate_c_14_f0, 1},
    {tate_c_14_f1, -1},
    {tate_c_14_f2, -1},
};
inline constexpr Formula tate_c_14{"tate_c_14", "1", tate_c_14_factors};

inline constexpr Term tate_b_15_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_15_f1[] = {
    {1, 0, "1"},
    {1, 1, "1"},
    {0, 2, "-1"},
    {1, 2, "2"},
    {0, 3, "-2"},
    {0, 4, "-4"},
    {1, 4, "-1"},
    {0, 5, "-4"},
    {0, 6, "-1"},
};

inline constexpr Term tate_b_15_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_15_f3[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Factor tate_b_15_factors[] = {
    {tate_b_15_f0, 1},
    {tate_b_15_f1, 1},
    {tate_b_15_f2, -6},
    {tate_b_15_f3, -1},
};
inline constexpr Formula tate_b_15{"tate_b_15", "1", tate_b_15_factors};

inline constexpr Term tate_c_15_f0[] = {
    {1, 1, "1"},
    {1, 2, "-1"},
    {0, 3, "-2"},
    {0, 4, "-1"},
};

inline constexpr Term tate_c_15_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_c_15_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Factor tate_c_15_factors[] = {
    {tate_c_15_f0, 1},
    {tate_c_15_f1, -3},
    {tate_c_15_f2, -1},
};
inline constexpr Formula tate_c_15{"tate_c_15", "1", tate_c_15_factors};

inline constexpr Term tate_b_16_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_16_f1[] = {
    {1, 0, "1"},
    {0, 1, "-5"},
    {1, 1, "-8"},
    {0, 2, "8"},
    {1, 2, "2"},
    {0, 3, "-15"},
    {1, 3, "-8"},
    {1, 4, "-3"},
    {0, 5, "-11"},
    {0, 6, "-8"},
    {0, 7, "-1"},
};

inline constexpr Term tate_b_16_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_16_f3[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Factor tate_b_16_factors[] = {
    {tate_b_16_f0, 3},
    {tate_b_16_f1, 1},
    {tate_b_16_f2, -8},
    {tate_b_16_f3, -1},
};
inline constexpr Formula tate_b_16{"tate_b_16", "1", tate_b_16_factors};

inline constexpr Term tate_c_16_f0[] = {
    {1, 0, "-1"},
    {0, 1, "4"},
    {1, 1, "7"},
    {0, 2, "-12"},
    {1, 2, "-6"},
    {0, 3, "8"},
    {1, 3, "2"},
    {0, 4, "-8"},
    {1, 4, "-1"},
    {0, 5, "4"},
    {1, 5, "-1"},
    {0, 6, "4"},
};

inline constexpr Term tate_c_16_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_c_16_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Factor tate_c_16_factors[] = {
    {tate_c_16_f0, 1},
    {tate_c_16_f1, -5},
    {tate_c_16_f2, -1},
};
inline constexpr Formula tate_c_16{"tate_c_16", "1", tate_c_16_factors};

inline constexpr Term tate_b_18_f0[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term tate_b_18_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Term tate_b_18_f2[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "-1"},
    {1, 1, "-1"},
    {0, 2, "-1"},
    {0, 3, "4"},
    {1, 3, "2"},
    {0, 4, "6"},
    {1, 4, "1"},
    {0, 5, "4"},
    {0, 6, "3"},
    {0, 7, "1"},
};

inline constexpr Term tate_b_18_f3[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_b_18_f4[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Factor tate_b_18_factors[] = {
    {tate_b_18_f0, 1},
    {tate_b_18_f1, 1},
    {tate_b_18_f2, 1},
    {tate_b_18_f3, -5},
    {tate_b_18_f4, -2},
};
inline constexpr Formula tate_b_18{"tate_b_18", "1/2", tate_b_18_factors};

inline constexpr Term tate_c_18_f0[] = {
    {1, 0, "2"},
    {0, 1, "5"},
    {1, 1, "3"},
    {0, 2, "11"},
    {1, 2, "1"},
    {0, 3, "9"},
    {0, 4, "4"},
    {0, 5, "1"},
};

inline constexpr Term tate_c_18_f1[] = {
    {0, 1, "1"},
};

inline constexpr Term tate_c_18_f2[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Factor tate_c_18_factors[] = {
    {tate_c_18_f0, 1},
    {tate_c_18_f1, -3},
    {tate_c_18_f2, -1},
};
inline constexpr Formula tate_c_18{"tate_c_18", "1/2", tate_c_18_factors};

inline constexpr Term printed_u_ord10_f0[] = {
    {0, 0, "1"},
    {0, 1, "-4"},
    {0, 3, "8"},
    {0, 4, "8"},
    {0, 5, "-16"},
    {0, 6, "-4"},
};

inline constexpr Term printed_u_ord10_f1[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor printed_u_ord10_factors[] = {
    {printed_u_ord10_f0, 1},
    {printed_u_ord10_f1, -2},
};
inline constexpr Formula printed_u_ord10{"printed_u_ord10", "1/4", printed_u_ord10_factors};

inline constexpr Term printed_v_ord10_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_ord10_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_ord10_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term printed_v_ord10_f3[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor printed_v_ord10_factors[] = {
    {printed_v_ord10_f0, 3},
    {printed_v_ord10_f1, 1},
    {printed_v_ord10_f2, 1},
    {printed_v_ord10_f3, -2},
};
inline constexpr Formula printed_v_ord10{"printed_v_ord10", "-1", printed_v_ord10_factors};

inline constexpr Term printed_w_ord10_f0[] = {
    {0, 0, "1"},
    {0, 1, "-2"},
    {0, 2, "-2"},
    {0, 3, "2"},
};

inline constexpr Term printed_w_ord10_f1[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor printed_w_ord10_factors[] = {
    {printed_w_ord10_f0, 1},
    {printed_w_ord10_f1, -1},
};
inline constexpr Formula printed_w_ord10{"printed_w_ord10", "1/2", printed_w_ord10_factors};

inline constexpr Term printed_u_ord12_f0[] = {
    {0, 0, "-1"},
    {0, 2, "36"},
    {0, 3, "-168"},
    {0, 4, "372"},
    {0, 5, "-468"},
    {0, 6, "336"},
    {0, 7, "-120"},
    {0, 8, "12"},
};

inline constexpr Term printed_u_ord12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor printed_u_ord12_factors[] = {
    {printed_u_ord12_f0, 1},
    {printed_u_ord12_f1, -6},
};
inline constexpr Formula printed_u_ord12{"printed_u_ord12", "1/4", printed_u_ord12_factors};

inline constexpr Term printed_v_ord12_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_ord12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term printed_v_ord12_f2[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "3"},
};

inline constexpr Term printed_v_ord12_f3[] = {
    {0, 0, "1"},
    {0, 1, "-2"},
    {0, 2, "2"},
};

inline constexpr Term printed_v_ord12_f4[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor printed_v_ord12_factors[] = {
    {printed_v_ord12_f0, 1},
    {printed_v_ord12_f1, 1},
    {printed_v_ord12_f2, 1},
    {printed_v_ord12_f3, 1},
    {printed_v_ord12_f4, -4},
};
inline constexpr Formula printed_v_ord12{"printed_v_ord12", "-1", printed_v_ord12_factors};

inline constexpr Term printed_w_ord12_f0[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "2"},
    {0, 3, "-8"},
    {0, 4, "6"},
};

inline constexpr Term printed_w_ord12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor printed_w_ord12_factors[] = {
    {printed_w_ord12_f0, 1},
    {printed_w_ord12_f1, -3},
};
inline constexpr Formula printed_w_ord12{"printed_w_ord12", "1/2", printed_w_ord12_factors};

inline constexpr Term printed_u_per10_i_f0[] = {
    {0, 0, "-1"},
    {0, 1, "6"},
    {0, 2, "3"},
};

inline constexpr Factor printed_u_per10_i_factors[] = {
    {printed_u_per10_i_f0, 1},
};
inline constexpr Formula printed_u_per10_i{"printed_u_per10_i", "1/4", printed_u_per10_i_factors};

inline constexpr Term printed_v_per10_i_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_per10_i_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Factor printed_v_per10_i_factors[] = {
    {printed_v_per10_i_f0, 1},
    {printed_v_per10_i_f1, 1},
};
inline constexpr Formula printed_v_per10_i{"printed_v_per10_i", "4", printed_v_per10_i_factors};

inline constexpr Term printed_w_per10_i_f0[] = {
    {0, 0, "1"},
    {0, 1, "-1"},
};

inline constexpr Factor printed_w_per10_i_factors[] = {
    {printed_w_per10_i_f0, 1},
};
inline constexpr Formula printed_w_per10_i{"printed_w_per10_i", "1/2", printed_w_per10_i_factors};

inline constexpr Term printed_u_per10_X11_f0[] = {
    {4, 0, "-1"},
    {2, 1, "6"},
    {3, 1, "-2"},
    {0, 2, "-1"},
    {1, 2, "-6"},
    {2, 2, "3"},
};

inline constexpr Term printed_u_per10_X11_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_u_per10_X11_factors[] = {
    {printed_u_per10_X11_f0, 1},
    {printed_u_per10_X11_f1, -2},
};
inline constexpr Formula printed_u_per10_X11{"printed_u_per10_X11", "1/4", printed_u_per10_X11_factors};

inline constexpr Term printed_v_per10_X11_f0[] = {
    {1, 0, "1"},
};

inline constexpr Term printed_v_per10_X11_f1[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
};

inline constexpr Term printed_v_per10_X11_f2[] = {
    {1, 0, "1"},
    {0, 1, "-1"},
};

inline constexpr Term printed_v_per10_X11_f3[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_v_per10_X11_factors[] = {
    {printed_v_per10_X11_f0, 1},
    {printed_v_per10_X11_f1, 1},
    {printed_v_per10_X11_f2, 1},
    {printed_v_per10_X11_f3, -1},
};
inline constexpr Formula printed_v_per10_X11{"printed_v_per10_X11", "-1", printed_v_per10_X11_factors};

inline constexpr Term printed_w_per10_X11_f0[] = {
    {2, 0, "-1"},
    {0, 1, "1"},
    {1, 1, "1"},
};

inline constexpr Term printed_w_per10_X11_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_w_per10_X11_factors[] = {
    {printed_w_per10_X11_f0, 1},
    {printed_w_per10_X11_f1, -1},
};
inline constexpr Formula printed_w_per10_X11{"printed_w_per10_X11", "1/2", printed_w_per10_X11_factors};

inline constexpr Term printed_u_per12_X13_f0[] = {
    {0, 0, "-1"},
    {1, 0, "2"},
    {2, 0, "-1"},
    {0, 1, "2"},
    {1, 1, "-8"},
    {2, 1, "6"},
    {0, 2, "5"},
    {1, 2, "4"},
    {2, 2, "-13"},
    {0, 3, "-12"},
    {1, 3, "30"},
    {2, 3, "10"},
    {0, 4, "-23"},
    {1, 4, "-62"},
    {2, 4, "4"},
    {0, 5, "56"},
    {1, 5, "50"},
    {2, 5, "-10"},
    {0, 6, "21"},
    {1, 6, "-26"},
    {2, 6, "3"},
    {0, 7, "-84"},
    {1, 7, "4"},
    {2, 7, "2"},
    {0, 8, "-12"},
    {1, 8, "16"},
    {2, 8, "-1"},
    {0, 9, "58"},
    {1, 9, "-6"},
    {0, 10, "-11"},
    {1, 10, "-6"},
    {0, 11, "-16"},
    {1, 11, "2"},
    {0, 12, "2"},
    {0, 13, "4"},
    {0, 14, "-1"},
};

inline constexpr Term printed_u_per12_X13_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_u_per12_X13_factors[] = {
    {printed_u_per12_X13_f0, 1},
    {printed_u_per12_X13_f1, -10},
};
inline constexpr Formula printed_u_per12_X13{"printed_u_per12_X13", "1/16", printed_u_per12_X13_factors};

inline constexpr Term printed_v_per12_X13_f0[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "6"},
    {1, 1, "-6"},
    {0, 2, "-14"},
    {1, 2, "14"},
    {0, 3, "13"},
    {1, 3, "-14"},
    {0, 4, "-1"},
    {1, 4, "3"},
    {0, 5, "-2"},
    {1, 5, "3"},
    {0, 6, "-4"},
    {0, 7, "1"},
    {1, 7, "-1"},
    {0, 8, "1"},
};

inline constexpr Term printed_v_per12_X13_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_v_per12_X13_factors[] = {
    {printed_v_per12_X13_f0, 1},
    {printed_v_per12_X13_f1, -9},
};
inline constexpr Formula printed_v_per12_X13{"printed_v_per12_X13", "1/2", printed_v_per12_X13_factors};

inline constexpr Term printed_w_per12_X13_f0[] = {
    {0, 0, "1"},
    {1, 0, "-1"},
    {0, 1, "-5"},
    {1, 1, "3"},
    {0, 2, "9"},
    {1, 2, "-2"},
    {0, 3, "-5"},
    {1, 3, "-1"},
    {0, 4, "-2"},
    {1, 4, "1"},
    {0, 5, "3"},
    {0, 6, "2"},
    {0, 7, "-1"},
};

inline constexpr Term printed_w_per12_X13_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_w_per12_X13_factors[] = {
    {printed_w_per12_X13_f0, 1},
    {printed_w_per12_X13_f1, -5},
};
inline constexpr Formula printed_w_per12_X13{"printed_w_per12_X13", "1/4", printed_w_per12_X13_factors};

inline constexpr Term printed_u_per14_i_f0[] = {
    {0, 0, "-1"},
    {0, 1, "8"},
    {0, 2, "-16"},
    {0, 3, "4"},
    {0, 4, "4"},
};

inline constexpr Term printed_u_per14_i_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_u_per14_i_factors[] = {
    {printed_u_per14_i_f0, 1},
    {printed_u_per14_i_f1, -2},
};
inline constexpr Formula printed_u_per14_i{"printed_u_per14_i", "1/4", printed_u_per14_i_factors};

inline constexpr Term printed_v_per14_i_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_per14_i_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Factor printed_v_per14_i_factors[] = {
    {printed_v_per14_i_f0, 1},
    {printed_v_per14_i_f1, 1},
};
inline constexpr Formula printed_v_per14_i{"printed_v_per14_i", "1", printed_v_per14_i_factors};

inline constexpr Term printed_w_per14_i_f0[] = {
    {0, 0, "-1"},
    {0, 1, "4"},
    {0, 2, "-2"},
};

inline constexpr Term printed_w_per14_i_f1[] = {
    {0, 1, "1"},
};

inline constexpr Factor printed_w_per14_i_factors[] = {
    {printed_w_per14_i_f0, 1},
    {printed_w_per14_i_f1, -1},
};
inline constexpr Formula printed_w_per14_i{"printed_w_per14_i", "1/2", printed_w_per14_i_factors};

inline constexpr Term printed_u_per14_X15_f0[] = {
    {0, 0, "-1"},
    {0, 1, "-8"},
    {1, 1, "6"},
    {0, 2, "-30"},
    {1, 2, "14"},
    {2, 2, "-1"},
    {0, 3, "-78"},
    {1, 3, "22"},
    {2, 3, "2"},
    {0, 4, "-143"},
    {1, 4, "16"},
    {2, 4, "-1"},
    {0, 5, "-196"},
    {1, 5, "-4"},
    {0, 6, "-199"},
    {1, 6, "-12"},
    {0, 7, "-140"},
    {1, 7, "-6"},
    {0, 8, "-63"},
    {0, 9, "-14"},
    {0, 10, "-1"},
};

inline constexpr Term printed_u_per14_X15_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_u_per14_X15_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Factor printed_u_per14_X15_factors[] = {
    {printed_u_per14_X15_f0, 1},
    {printed_u_per14_X15_f1, -6},
    {printed_u_per14_X15_f2, -2},
};
inline constexpr Formula printed_u_per14_X15{"printed_u_per14_X15", "1/4", printed_u_per14_X15_factors};

inline constexpr Term printed_v_per14_X15_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_per14_X15_f1[] = {
    {1, 0, "1"},
    {1, 1, "1"},
    {0, 2, "-1"},
    {1, 2, "2"},
    {0, 3, "-2"},
    {0, 4, "-4"},
    {1, 4, "-1"},
    {0, 5, "-4"},
    {0, 6, "-1"},
};

inline constexpr Term printed_v_per14_X15_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_per14_X15_f3[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Factor printed_v_per14_X15_factors[] = {
    {printed_v_per14_X15_f0, 1},
    {printed_v_per14_X15_f1, 1},
    {printed_v_per14_X15_f2, -6},
    {printed_v_per14_X15_f3, -1},
};
inline constexpr Formula printed_v_per14_X15{"printed_v_per14_X15", "1", printed_v_per14_X15_factors};

inline constexpr Term printed_w_per14_X15_f0[] = {
    {0, 0, "1"},
    {0, 1, "4"},
    {1, 1, "-1"},
    {0, 2, "7"},
    {1, 2, "1"},
    {0, 3, "9"},
    {0, 4, "5"},
    {0, 5, "1"},
};

inline constexpr Term printed_w_per14_X15_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_w_per14_X15_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
    {0, 2, "1"},
};

inline constexpr Factor printed_w_per14_X15_factors[] = {
    {printed_w_per14_X15_f0, 1},
    {printed_w_per14_X15_f1, -3},
    {printed_w_per14_X15_f2, -1},
};
inline constexpr Formula printed_w_per14_X15{"printed_w_per14_X15", "1/2", printed_w_per14_X15_factors};

inline constexpr Term printed_u_per26_X14_f0[] = {
    {0, 0, "-1"},
    {1, 1, "6"},
    {0, 2, "12"},
    {1, 2, "-16"},
    {2, 2, "-1"},
    {0, 3, "-8"},
    {1, 3, "2"},
    {2, 3, "4"},
    {0, 4, "-14"},
    {1, 4, "24"},
    {2, 4, "-6"},
    {0, 5, "4"},
    {1, 5, "-14"},
    {2, 5, "4"},
    {1, 6, "-4"},
    {2, 6, "-1"},
    {0, 7, "4"},
    {1, 7, "2"},
    {0, 8, "-1"},
};

inline constexpr Term printed_u_per26_X14_f1[] = {
    {0, 0, "1"},
    {0, 2, "-3"},
    {0, 3, "-1"},
    {0, 4, "1"},
};

inline constexpr Factor printed_u_per26_X14_factors[] = {
    {printed_u_per26_X14_f0, 1},
    {printed_u_per26_X14_f1, -2},
};
inline constexpr Formula printed_u_per26_X14{"printed_u_per26_X14", "1/4", printed_u_per26_X14_factors};

inline constexpr Term printed_v_per26_X14_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_per26_X14_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_per26_X14_f2[] = {
    {1, 0, "-1"},
    {0, 1, "-1"},
    {1, 1, "2"},
    {0, 2, "1"},
    {1, 3, "-2"},
    {0, 4, "-1"},
    {0, 5, "1"},
};

inline constexpr Term printed_v_per26_X14_f3[] = {
    {0, 0, "1"},
    {0, 2, "-3"},
    {0, 3, "-1"},
    {0, 4, "1"},
};

inline constexpr Factor printed_v_per26_X14_factors[] = {
    {printed_v_per26_X14_f0, 1},
    {printed_v_per26_X14_f1, 1},
    {printed_v_per26_X14_f2, 1},
    {printed_v_per26_X14_f3, -2},
};
inline constexpr Formula printed_v_per26_X14{"printed_v_per26_X14", "1", printed_v_per26_X14_factors};

inline constexpr Term printed_w_per26_X14_f0[] = {
    {0, 0, "1"},
    {1, 1, "-1"},
    {0, 2, "-4"},
    {1, 2, "2"},
    {1, 3, "-1"},
    {0, 4, "1"},
};

inline constexpr Term printed_w_per26_X14_f1[] = {
    {0, 0, "1"},
    {0, 2, "-3"},
    {0, 3, "-1"},
    {0, 4, "1"},
};

inline constexpr Factor printed_w_per26_X14_factors[] = {
    {printed_w_per26_X14_f0, 1},
    {printed_w_per26_X14_f1, -1},
};
inline constexpr Formula printed_w_per26_X14{"printed_w_per26_X14", "1/2", printed_w_per26_X14_factors};

inline constexpr Term printed_u_per30_X16_f0[] = {
    {0, 0, "-1"},
    {1, 0, "6"},
    {2, 0, "-1"},
    {0, 1, "-34"},
    {1, 1, "-44"},
    {2, 1, "14"},
    {0, 2, "69"},
    {1, 2, "-12"},
    {2, 2, "-61"},
    {0, 3, "60"},
    {1, 3, "252"},
    {2, 3, "88"},
    {0, 4, "3"},
    {1, 4, "-302"},
    {2, 4, "-66"},
    {0, 5, "570"},
    {1, 5, "552"},
    {2, 5, "36"},
    {0, 6, "-943"},
    {1, 6, "-232"},
    {2, 6, "-2"},
    {0, 7, "-792"},
    {1, 7, "-168"},
    {2, 7, "-8"},
    {0, 8, "-1315"},
    {1, 8, "106"},
    {2, 8, "3"},
    {0, 9, "-1262"},
    {1, 9, "-60"},
    {2, 9, "-2"},
    {0, 10, "-273"},
    {1, 10, "-76"},
    {2, 10, "-1"},
    {0, 11, "-36"},
    {1, 11, "-20"},
    {0, 12, "-95"},
    {1, 12, "-2"},
    {0, 13, "-42"},
    {0, 14, "-5"},
};

inline constexpr Term printed_u_per30_X16_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_u_per30_X16_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Factor printed_u_per30_X16_factors[] = {
    {printed_u_per30_X16_f0, 1},
    {printed_u_per30_X16_f1, -10},
    {printed_u_per30_X16_f2, -2},
};
inline constexpr Formula printed_u_per30_X16{"printed_u_per30_X16", "1/4", printed_u_per30_X16_factors};

inline constexpr Term printed_v_per30_X16_f0[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_per30_X16_f1[] = {
    {1, 0, "-1"},
    {0, 1, "5"},
    {1, 1, "8"},
    {0, 2, "-8"},
    {1, 2, "-2"},
    {0, 3, "15"},
    {1, 3, "8"},
    {1, 4, "3"},
    {0, 5, "11"},
    {0, 6, "8"},
    {0, 7, "1"},
};

inline constexpr Term printed_v_per30_X16_f2[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_v_per30_X16_f3[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Factor printed_v_per30_X16_factors[] = {
    {printed_v_per30_X16_f0, 3},
    {printed_v_per30_X16_f1, 1},
    {printed_v_per30_X16_f2, -8},
    {printed_v_per30_X16_f3, -1},
};
inline constexpr Formula printed_v_per30_X16{"printed_v_per30_X16", "-1", printed_v_per30_X16_factors};

inline constexpr Term printed_w_per30_X16_f0[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "-7"},
    {1, 1, "-7"},
    {0, 2, "13"},
    {1, 2, "6"},
    {0, 3, "7"},
    {1, 3, "-2"},
    {0, 4, "33"},
    {1, 4, "1"},
    {0, 5, "15"},
    {1, 5, "1"},
    {0, 6, "3"},
    {0, 7, "1"},
};

inline constexpr Term printed_w_per30_X16_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term printed_w_per30_X16_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Factor printed_w_per30_X16_factors[] = {
    {printed_w_per30_X16_f0, 1},
    {printed_w_per30_X16_f1, -5},
    {printed_w_per30_X16_f2, -1},
};
inline constexpr Formula printed_w_per30_X16{"printed_w_per30_X16", "1/2", printed_w_per30_X16_factors};

inline constexpr Term printed_u_per34_X18_f0[] = {
    {2, 0, "-4"},
    {0, 1, "-8"},
    {1, 1, "-12"},
    {2, 1, "-12"},
    {0, 2, "-49"},
    {1, 2, "-66"},
    {2, 2, "-13"},
    {0, 3, "-150"},
    {1, 3, "-120"},
    {2, 3, "-6"},
    {0, 4, "-239"},
    {1, 4, "-120"},
    {2, 4, "-1"},
    {0, 5, "-254"},
    {1, 5, "-54"},
    {0, 6, "-167"},
    {1, 6, "30"},
    {0, 7, "-6"},
    {1, 7, "42"},
    {0, 8, "90"},
    {1, 8, "12"},
    {0, 9, "120"},
    {0, 10, "79"},
    {0, 11, "12"},
    {0, 12, "-4"},
};

inline constexpr Term printed_u_per34_X18_f1[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_u_per34_X18_f2[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Factor printed_u_per34_X18_factors[] = {
    {printed_u_per34_X18_f0, 1},
    {printed_u_per34_X18_f1, -6},
    {printed_u_per34_X18_f2, -2},
};
inline constexpr Formula printed_u_per34_X18{"printed_u_per34_X18", "1/16", printed_u_per34_X18_factors};

inline constexpr Term printed_v_per34_X18_f0[] = {
    {0, 0, "1"},
    {0, 1, "2"},
    {0, 2, "2"},
    {0, 3, "1"},
};

inline constexpr Term printed_v_per34_X18_f1[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "-1"},
    {1, 1, "-1"},
    {0, 2, "-1"},
    {0, 3, "4"},
    {1, 3, "2"},
    {0, 4, "6"},
    {1, 4, "1"},
    {0, 5, "4"},
    {0, 6, "3"},
    {0, 7, "1"},
};

inline constexpr Term printed_v_per34_X18_f2[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_v_per34_X18_f3[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Factor printed_v_per34_X18_factors[] = {
    {printed_v_per34_X18_f0, 1},
    {printed_v_per34_X18_f1, 1},
    {printed_v_per34_X18_f2, -5},
    {printed_v_per34_X18_f3, -2},
};
inline constexpr Formula printed_v_per34_X18{"printed_v_per34_X18", "1/2", printed_v_per34_X18_factors};

inline constexpr Term printed_w_per34_X18_f0[] = {
    {1, 0, "-2"},
    {0, 1, "-5"},
    {1, 1, "-3"},
    {0, 2, "-11"},
    {1, 2, "-1"},
    {0, 3, "-11"},
    {0, 4, "-10"},
    {0, 5, "-1"},
    {0, 6, "2"},
};

inline constexpr Term printed_w_per34_X18_f1[] = {
    {0, 1, "1"},
};

inline constexpr Term printed_w_per34_X18_f2[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Factor printed_w_per34_X18_factors[] = {
    {printed_w_per34_X18_f0, 1},
    {printed_w_per34_X18_f1, -3},
    {printed_w_per34_X18_f2, -1},
};
inline constexpr Formula printed_w_per34_X18{"printed_w_per34_X18", "1/4", printed_w_per34_X18_factors};

inline constexpr Term k10_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term k10_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term k10_f2[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "1"},
};

inline constexpr Factor k10_factors[] = {
    {k10_f0, 1},
    {k10_f1, 1},
    {k10_f2, 1},
};
inline constexpr Formula k10{"k10", "-4", k10_factors};

inline constexpr Term k12_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term k12_f1[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
};

inline constexpr Term k12_f2[] = {
    {0, 0, "1"},
    {0, 1, "-3"},
    {0, 2, "3"},
};

inline constexpr Term k12_f3[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Factor k12_factors[] = {
    {k12_f0, 1},
    {k12_f1, 2},
    {k12_f2, 3},
    {k12_f3, -11},
};
inline constexpr Formula k12{"k12", "4", k12_factors};

inline constexpr Term alpha13_f0[] = {
    {0, 1, "1"},
};

inline constexpr Term alpha13_f1[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term alpha13_f2[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term alpha13_f3[] = {
    {1, 0, "-1"},
    {0, 1, "-1"},
    {1, 1, "1"},
};

inline constexpr Term alpha13_f4[] = {
    {0, 0, "1"},
    {0, 1, "-1"},
    {0, 2, "-2"},
    {0, 3, "1"},
};

inline constexpr Term alpha13_f5[] = {
    {1, 0, "1"},
    {0, 1, "1"},
    {1, 1, "-2"},
    {0, 2, "-1"},
    {1, 3, "2"},
    {0, 4, "1"},
    {0, 5, "-1"},
};

inline constexpr Term alpha13_f6[] = {
    {1, 0, "-1"},
    {2, 0, "-1"},
    {0, 1, "-1"},
    {1, 1, "1"},
    {2, 1, "3"},
    {0, 2, "2"},
    {1, 2, "4"},
    {2, 2, "-3"},
    {0, 3, "3"},
    {1, 3, "-4"},
    {2, 3, "1"},
    {0, 4, "-2"},
    {1, 4, "1"},
};

inline constexpr Term alpha13_f7[] = {
    {2, 0, "-1"},
    {3, 0, "-1"},
    {1, 1, "-2"},
    {2, 1, "3"},
    {3, 1, "5"},
    {0, 2, "-1"},
    {1, 2, "8"},
    {3, 2, "-9"},
    {0, 3, "4"},
    {1, 3, "-10"},
    {2, 3, "-11"},
    {3, 3, "5"},
    {0, 4, "-5"},
    {1, 4, "-5"},
    {2, 4, "18"},
    {3, 4, "4"},
    {0, 5, "-1"},
    {1, 5, "35"},
    {2, 5, "-5"},
    {3, 5, "-6"},
    {0, 6, "21"},
    {1, 6, "-18"},
    {2, 6, "-8"},
    {3, 6, "2"},
    {0, 7, "-7"},
    {1, 7, "-14"},
    {2, 7, "10"},
    {0, 8, "-13"},
    {1, 8, "17"},
    {2, 8, "-5"},
    {0, 9, "6"},
    {1, 9, "-5"},
    {2, 9, "1"},
};

inline constexpr Factor alpha13_factors[] = {
    {alpha13_f0, 1},
    {alpha13_f1, 1},
    {alpha13_f2, 1},
    {alpha13_f3, 1},
    {alpha13_f4, 1},
    {alpha13_f5, 1},
    {alpha13_f6, 1},
    {alpha13_f7, 1},
};
inline constexpr Formula alpha13{"alpha13", "1", alpha13_factors};

inline constexpr Term alpha15_f0[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term alpha15_f1[] = {
    {0, 0, "-1"},
    {0, 1, "1"},
};

inline constexpr Term alpha15_f2[] = {
    {0, 0, "-1"},
    {0, 1, "2"},
    {0, 2, "1"},
};

inline constexpr Term alpha15_f3[] = {
    {1, 0, "-1"},
    {0, 1, "5"},
    {1, 1, "8"},
    {0, 2, "-8"},
    {1, 2, "-2"},
    {0, 3, "15"},
    {1, 3, "8"},
    {1, 4, "3"},
    {0, 5, "11"},
    {0, 6, "8"},
    {0, 7, "1"},
};

inline constexpr Term alpha15_f4[] = {
    {3, 0, "-1"},
    {1, 1, "-1"},
    {2, 1, "5"},
    {3, 1, "17"},
    {0, 2, "5"},
    {1, 2, "20"},
    {2, 2, "-45"},
    {3, 2, "-90"},
    {0, 3, "-69"},
    {1, 3, "-216"},
    {2, 3, "-12"},
    {3, 3, "114"},
    {0, 4, "470"},
    {1, 4, "1384"},
    {2, 4, "888"},
    {3, 4, "153"},
    {0, 5, "-1786"},
    {1, 5, "-3844"},
    {2, 5, "-1447"},
    {3, 5, "111"},
    {0, 6, "3598"},
    {1, 6, "4340"},
    {2, 6, "723"},
    {3, 6, "276"},
    {0, 7, "-4018"},
    {1, 7, "-4160"},
    {2, 7, "-1936"},
    {3, 7, "156"},
    {0, 8, "4430"},
    {1, 8, "4488"},
    {2, 8, "-1144"},
    {3, 8, "129"},
    {0, 9, "-3474"},
    {1, 9, "2090"},
    {2, 9, "-1081"},
    {3, 9, "95"},
    {0, 10, "-1048"},
    {1, 10, "2428"},
    {2, 10, "-1175"},
    {3, 10, "38"},
    {0, 11, "-1996"},
    {1, 11, "3304"},
    {2, 11, "-548"},
    {3, 11, "18"},
    {0, 12, "-3102"},
    {1, 12, "1304"},
    {2, 12, "-256"},
    {3, 12, "7"},
    {0, 13, "-1006"},
    {1, 13, "732"},
    {2, 13, "-101"},
    {3, 13, "1"},
    {0, 14, "-526"},
    {1, 14, "380"},
    {2, 14, "-15"},
    {0, 15, "-62"},
    {1, 15, "48"},
    {0, 16, "250"},
    {1, 16, "-8"},
    {0, 17, "122"},
    {1, 17, "-1"},
    {0, 18, "19"},
    {0, 19, "1"},
};

inline constexpr Term alpha15_f5[] = {
    {5, 0, "1"},
    {3, 1, "1"},
    {4, 1, "-13"},
    {5, 1, "-32"},
    {2, 2, "-12"},
    {3, 2, "35"},
    {4, 2, "393"},
    {5, 2, "421"},
    {0, 3, "1"},
    {1, 3, "69"},
    {2, 3, "287"},
    {3, 3, "-1241"},
    {4, 3, "-4839"},
    {5, 3, "-2920"},
    {0, 4, "-133"},
    {1, 4, "-1841"},
    {2, 4, "-3007"},
    {3, 4, "14737"},
    {4, 4, "31199"},
    {5, 4, "11415"},
    {0, 5, "2624"},
    {1, 5, "20091"},
    {2, 5, "12842"},
    {3, 5, "-92859"},
    {4, 5, "-113607"},
    {5, 5, "-25416"},
    {0, 6, "-23200"},
    {1, 6, "-106863"},
    {2, 6, "16038"},
    {3, 6, "350211"},
    {4, 6, "241891"},
    {5, 6, "33947"},
    {0, 7, "105093"},
    {1, 7, "253022"},
    {2, 7, "-356848"},
    {3, 7, "-827395"},
    {4, 7, "-328917"},
    {5, 7, "-34336"},
    {0, 8, "-237961"},
    {1, 8, "-54966"},
    {2, 8, "1300808"},
    {3, 8, "1255195"},
    {4, 8, "343061"},
    {5, 8, "23370"},
    {0, 9, "204632"},
    {1, 9, "-854374"},
    {2, 9, "-2229106"},
    {3, 9, "-1368280"},
    {4, 9, "-259986"},
    {5, 9, "-8160"},
    {0, 10, "107496"},
    {1, 10, "1766206"},
    {2, 10, "2726998"},
    {3, 10, "1243556"},
    {4, 10, "86922"},
    {5, 10, "-430"},
    {0, 11, "-489355"},
    {1, 11, "-2857553"},
    {2, 11, "-3173649"},
    {3, 11, "-557066"},
    {4, 11, "-8950"},
    {5, 11, "5200"},
    {0, 12, "1247799"},
    {1, 12, "3839261"},
    {2, 12, "1399993"},
    {3, 12, "-30086"},
    {4, 12, "-65338"},
    {5, 12, "-2930"},
    {0, 13, "-1686328"},
    {1, 13, "-1618311"},
    {2, 13, "-350716"},
    {3, 13, "-21942"},
    {4, 13, "40482"},
    {5, 13, "1040"},
    {0, 14, "863640"},
    {1, 14, "1583195"},
    {2, 14, "603068"},
    {3, 14, "-626330"},
    {4, 14, "-8202"},
    {5, 14, "-10"},
    {0, 15, "-1303543"},
    {1, 15, "-483020"},
    {2, 15, "2536536"},
    {3, 15, "-332694"},
    {4, 15, "8998"},
    {5, 15, "-672"},
    {0, 16, "-139293"},
    {1, 16, "-3155332"},
    {2, 16, "2113176"},
    {3, 16, "-392826"},
    {4, 16, "17338"},
    {5, 16, "-91"},
    {0, 17, "950128"},
    {1, 17, "-3451268"},
    {2, 17, "2602492"},
    {3, 17, "-331599"},
    {4, 17, "6863"},
    {5, 17, "-192"},
    {0, 18, "1419280"},
    {1, 18, "-5186604"},
    {2, 18, "2217984"},
    {3, 18, "-174197"},
    {4, 18, "6461"},
    {5, 18, "-135"},
    {0, 19, "2944963"},
    {1, 19, "-4980589"},
    {2, 19, "1438957"},
    {3, 19, "-111725"},
    {4, 19, "3949"},
    {5, 19, "-40"},
    {0, 20, "3275313"},
    {1, 20, "-3930407"},
    {2, 20, "931395"},
    {3, 20, "-58043"},
    {4, 20, "1419"},
    {5, 20, "-21"},
    {0, 21, "3117520"},
    {1, 21, "-2882435"},
    {2, 21, "483570"},
    {3, 21, "-22335"},
    {4, 21, "629"},
    {5, 21, "-8"},
    {0, 22, "2645648"},
    {1, 22, "-1693321"},
    {2, 22, "202366"},
    {3, 22, "-8889"},
    {4, 22, "215"},
    {5, 22, "-1"},
    {0, 23, "1811983"},
    {1, 23, "-838386"},
    {2, 23, "78936"},
    {3, 23, "-2839"},
    {4, 23, "31"},
    {0, 24, "1076709"},
    {1, 24, "-365798"},
    {2, 24, "24800"},
    {3, 24, "-497"},
    {4, 24, "1"},
    {0, 25, "553144"},
    {1, 25, "-126518"},
    {2, 25, "5206"},
    {3, 25, "-42"},
    {0, 26, "229512"},
    {1, 26, "-32626"},
    {2, 26, "726"},
    {3, 26, "-2"},
    {0, 27, "76551"},
    {1, 27, "-6439"},
    {2, 27, "69"},
    {0, 28, "20445"},
    {1, 28, "-933"},
    {2, 28, "3"},
    {0, 29, "4008"},
    {1, 29, "-81"},
    {0, 30, "504"},
    {1, 30, "-3"},
    {0, 31, "35"},
    {0, 32, "1"},
};

inline constexpr Factor alpha15_factors[] = {
    {alpha15_f0, 1},
    {alpha15_f1, 1},
    {alpha15_f2, 1},
    {alpha15_f3, 1},
    {alpha15_f4, 1},
    {alpha15_f5, 1},
};
inline constexpr Formula alpha15{"alpha15", "1", alpha15_factors};

inline constexpr Term alpha17_f0[] = {
    {0, 0, "1"},
    {0, 1, "1"},
};

inline constexpr Term alpha17_f1[] = {
    {0, 0, "-1"},
    {0, 1, "-3"},
    {0, 3, "1"},
};

inline constexpr Term alpha17_f2[] = {
    {1, 0, "2"},
    {0, 1, "5"},
    {1, 1, "1"},
    {0, 2, "6"},
    {0, 3, "3"},
    {0, 4, "1"},
};

inline constexpr Term alpha17_f3[] = {
    {0, 0, "-1"},
    {1, 0, "1"},
    {0, 1, "-1"},
    {1, 1, "-1"},
    {0, 2, "-2"},
    {1, 2, "3"},
    {0, 3, "9"},
    {1, 3, "5"},
    {0, 4, "21"},
    {1, 4, "1"},
    {0, 5, "14"},
    {0, 6, "4"},
    {0, 7, "1"},
};

inline constexpr Term alpha17_f4[] = {
    {2, 0, "4"},
    {3, 0, "-4"},
    {0, 1, "4"},
    {1, 1, "12"},
    {2, 1, "-4"},
    {3, 1, "-4"},
    {0, 2, "37"},
    {1, 2, "41"},
    {2, 2, "-17"},
    {3, 2, "-1"},
    {0, 3, "138"},
    {1, 3, "64"},
    {2, 3, "-2"},
    {3, 3, "-4"},
    {0, 4, "235"},
    {1, 4, "54"},
    {2, 4, "-37"},
    {3, 4, "-16"},
    {0, 5, "80"},
    {1, 5, "-205"},
    {2, 5, "-174"},
    {3, 5, "-25"},
    {0, 6, "-578"},
    {1, 6, "-720"},
    {2, 6, "-239"},
    {3, 6, "-19"},
    {0, 7, "-1370"},
    {1, 7, "-801"},
    {2, 7, "-160"},
    {3, 7, "-7"},
    {0, 8, "-1183"},
    {1, 8, "-234"},
    {2, 8, "-69"},
    {3, 8, "-1"},
    {0, 9, "216"},
    {1, 9, "213"},
    {2, 9, "-24"},
    {0, 10, "1424"},
    {1, 10, "213"},
    {2, 10, "-6"},
    {0, 11, "1475"},
    {1, 11, "100"},
    {2, 11, "-1"},
    {0, 12, "912"},
    {1, 12, "38"},
    {0, 13, "428"},
    {1, 13, "9"},
    {0, 14, "157"},
    {1, 14, "1"},
    {0, 15, "41"},
    {0, 16, "8"},
    {0, 17, "1"},
};

inline constexpr Term alpha17_f5[] = {
    {4, 0, "16"},
    {5, 0, "-16"},
    {2, 1, "24"},
    {3, 1, "112"},
    {4, 1, "-72"},
    {5, 1, "-32"},
    {0, 2, "4"},
    {1, 2, "108"},
    {2, 2, "468"},
    {3, 2, "172"},
    {4, 2, "-296"},
    {5, 2, "8"},
    {0, 3, "166"},
    {1, 3, "1240"},
    {2, 3, "1988"},
    {3, 3, "-304"},
    {4, 3, "70"},
    {5, 3, "152"},
    {0, 4, "1483"},
    {1, 4, "5975"},
    {2, 4, "3894"},
    {3, 4, "1314"},
    {4, 4, "2071"},
    {5, 4, "239"},
    {0, 5, "6776"},
    {1, 5, "15176"},
    {2, 5, "9404"},
    {3, 5, "11520"},
    {4, 5, "4284"},
    {5, 5, "80"},
    {0, 6, "17831"},
    {1, 6, "27326"},
    {2, 6, "33578"},
    {3, 6, "27812"},
    {4, 6, "3459"},
    {5, 6, "-142"},
    {0, 7, "29373"},
    {1, 7, "51974"},
    {2, 7, "82930"},
    {3, 7, "33300"},
    {4, 7, "57"},
    {5, 7, "-178"},
    {0, 8, "35080"},
    {1, 8, "110326"},
    {2, 8, "127366"},
    {3, 8, "20106"},
    {4, 8, "-2154"},
    {5, 8, "-88"},
    {0, 9, "47247"},
    {1, 9, "201895"},
    {2, 9, "129842"},
    {3, 9, "2454"},
    {4, 9, "-1909"},
    {5, 9, "-21"},
    {0, 10, "97308"},
    {1, 10, "289240"},
    {2, 10, "95864"},
    {3, 10, "-5290"},
    {4, 10, "-864"},
    {5, 10, "-2"},
    {0, 11, "200855"},
    {1, 11, "332136"},
    {2, 11, "58224"},
    {3, 11, "-4360"},
    {4, 11, "-241"},
    {0, 12, "326410"},
    {1, 12, "317611"},
    {2, 12, "33652"},
    {3, 12, "-1772"},
    {4, 12, "-43"},
    {0, 13, "411028"},
    {1, 13, "257510"},
    {2, 13, "19260"},
    {3, 13, "-438"},
    {4, 13, "-4"},
    {0, 14, "411057"},
    {1, 14, "177292"},
    {2, 14, "9976"},
    {3, 14, "-60"},
    {0, 15, "334919"},
    {1, 15, "103132"},
    {2, 15, "4204"},
    {3, 15, "-2"},
    {0, 16, "226785"},
    {1, 16, "49927"},
    {2, 16, "1334"},
    {0, 17, "128639"},
    {1, 17, "19583"},
    {2, 17, "302"},
    {0, 18, "60753"},
    {1, 18, "6080"},
    {2, 18, "46"},
    {0, 19, "23634"},
    {1, 19, "1472"},
    {2, 19, "4"},
    {0, 20, "7527"},
    {1, 20, "264"},
    {0, 21, "1933"},
    {1, 21, "31"},
    {0, 22, "382"},
    {1, 22, "2"},
    {0, 23, "55"},
    {0, 24, "5"},
};

inline constexpr Factor alpha17_factors[] = {
    {alpha17_f0, 1},
    {alpha17_f1, 1},
    {alpha17_f2, 1},
    {alpha17_f3, 1},
    {alpha17_f4, 1},
    {alpha17_f5, 1},
};
inline constexpr Formula alpha17{"alpha17", "1", alpha17_factors};

inline constexpr const Formula* all_formulas[] = {
    &tate_b_6,
    &tate_c_6,
    &tate_b_8,
    &tate_c_8,
    &tate_b_10,
    &tate_c_10,
    &tate_b_11,
    &tate_c_11,
    &tate_b_12,
    &tate_c_12,
    &tate_b_13,
    &tate_c_13,
    &tate_b_14,
    &tate_c_14,
    &tate_b_15,
    &tate_c_15,
    &tate_b_16,
    &tate_c_16,
    &tate_b_18,
    &tate_c_18,
    &printed_u_ord10,
    &printed_v_ord10,
    &printed_w_ord10,
    &printed_u_ord12,
    &printed_v_ord12,
    &printed_w_ord12,
    &printed_u_per10_i,
    &printed_v_per10_i,
    &printed_w_per10_i,
    &printed_u_per10_X11,
    &printed_v_per10_X11,
    &printed_w_per10_X11,
    &printed_u_per12_X13,
    &printed_v_per12_X13,
    &printed_w_per12_X13,
    &printed_u_per14_i,
    &printed_v_per14_i,
    &printed_w_per14_i,
    &printed_u_per14_X15,
    &printed_v_per14_X15,
    &printed_w_per14_X15,
    &printed_u_per26_X14,
    &printed_v_per26_X14,
    &printed_w_per26_X14,
    &printed_u_per30_X16,
    &printed_v_per30_X16,
    &printed_w_per30_X16,
    &printed_u_per34_X18,
    &printed_v_per34_X18,
    &printed_w_per34_X18,
    &k10,
    &k12,
    &alpha13,
    &alpha15,
    &alpha17,
};

}  // namespace pellfrac::detail::tables
