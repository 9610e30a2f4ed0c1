#pragma once

#include <string>
#include <vector>

namespace ybgeo {

// Itemized pass/fail result of a validator. witness holds a human-readable
// description of the first counterexample (basis tuple, residual polynomial).
struct CheckItem {
	std::string name;
	bool pass = true;
	std::string witness;
};

struct Report {
	std::vector<CheckItem> items;

	bool pass() const
	{
		for (const auto &it : items)
			if (!it.pass)
				return false;
		return true;
	}
	void add(std::string name, bool ok, std::string witness = "")
	{
		items.push_back({std::move(name), ok, std::move(witness)});
	}
	void merge(const Report &o, const std::string &prefix = "")
	{
		for (const auto &it : o.items)
			items.push_back({prefix + it.name, it.pass, it.witness});
	}
	std::string first_failure() const
	{
		for (const auto &it : items)
			if (!it.pass)
				return it.name + (it.witness.empty() ? "" : ": " + it.witness);
		return "";
	}
};

} // namespace ybgeo
