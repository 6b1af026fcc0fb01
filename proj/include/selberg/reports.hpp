#pragma once

#include "selberg/series.hpp"

#include <json.hpp>

namespace selberg {

using Json = nlohmann::ordered_json;

// JSON report builders shared by the CLI and the acceptance suite.  All
// output is deterministic: fixed key order, arrays in unrank/lex order, no
// timestamps or thread counts.

Json field_block(const FieldParams& F);
Json cycint_json(const CycInt& v);
Json cycfrac_json(const CycFrac& v);

Json report_pellet(const GaussContext& ctx, int max_deg);
Json report_gauss_jacobi(const GaussContext& ctx);
Json report_dh(const GaussContext& ctx, int max_deg_c);
Json report_anderson(const GaussContext& ctx);
Json report_stability(const GaussContext& ctx, int max_i, const SelbergOptions& opt = {});
Json report_theorem1(const GaussContext& ctx, int max_i, int n_random, const SelbergOptions& opt = {});
Json report_aevw(const GaussContext& ctx, int max_i, const std::vector<uint32_t>& chi1_set,
                 const SelbergOptions& opt = {});
Json report_series_analyze(const GaussContext& ctx, const Poly& r, MulChar chi1, MulChar chi2, int i0, int len,
                           const SelbergOptions& opt = {});
Json report_lseries(const GaussContext& ctx, const Poly& r, MulChar chi1, const SelbergOptions& opt = {});

bool report_passed(const Json& rep);

} // namespace selberg
