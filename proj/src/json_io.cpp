#include "ptheta/json_io.hpp"

#include <sstream>

namespace ptheta {

json series_to_json(const TruncatedSeries& s)
{
	json coeffs = json::array();
	for (int k = 0; k <= s.order(); ++k)
		coeffs.push_back(rational_to_string(s.coeff(k)));
	return json{{"variable", var_name(s.var())},
	            {"order", s.order()},
	            {"coefficients", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j)
{
	Var var = var_from_name(j.at("variable").get<std::string>());
	int order = j.at("order").get<int>();
	const auto& arr = j.at("coefficients");
	if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
		throw std::invalid_argument(
		    "series_from_json: coefficient count does not match order");
	std::vector<Rational> c;
	c.reserve(arr.size());
	for (const auto& item : arr)
		c.push_back(rational_from_string(item.get<std::string>()));
	return TruncatedSeries(var, std::move(c));
}

json report_to_json(const IdentityReport& rep)
{
	json j{{"identity", rep.identity},
	       {"order", rep.order},
	       {"status", rep.ok ? "ok" : "mismatch"}};
	if (rep.first_mismatch_exponent) {
		j["first_mismatch_exponent"] = *rep.first_mismatch_exponent;
		j["lhs_coeff"] = rep.lhs_coeff;
		j["rhs_coeff"] = rep.rhs_coeff;
	} else {
		j["first_mismatch_exponent"] = nullptr;
		j["lhs_coeff"] = nullptr;
		j["rhs_coeff"] = nullptr;
	}
	return j;
}

json expansion_to_json(const ExpansionResult& res)
{
	json a = json::array();
	for (const auto& x : res.a)
		a.push_back(rational_to_string(x));
	json j{{"b", res.b}, {"order", res.order}, {"a", std::move(a)}};
	if (res.sign.determined) {
		j["sign_cutoff"] = res.sign.cutoff;
		j["stable_sign"] = res.sign.sign;
	} else {
		j["sign_cutoff"] = nullptr;
		j["stable_sign"] = 0;
	}
	j["sign_determined"] = res.sign.determined;
	return j;
}

std::string expansion_to_csv(const ExpansionResult& res)
{
	std::ostringstream os;
	os << "n,a_n\n";
	for (size_t n = 0; n < res.a.size(); ++n)
		os << n << "," << rational_to_string(res.a[n]) << "\n";
	return os.str();
}

}  // namespace ptheta
