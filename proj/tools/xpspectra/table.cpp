#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>

namespace xpcli {

namespace {

// 12 significant digits, '.' decimal regardless of locale
std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<double>& Table::num(const std::string& name) {
    for (auto& c : cols_)
        if (c.name == name) return std::get<std::vector<double>>(c.data);
    cols_.push_back({name, std::vector<double>{}});
    return std::get<std::vector<double>>(cols_.back().data);
}

std::vector<std::string>& Table::text(const std::string& name) {
    for (auto& c : cols_)
        if (c.name == name) return std::get<std::vector<std::string>>(c.data);
    cols_.push_back({name, std::vector<std::string>{}});
    return std::get<std::vector<std::string>>(cols_.back().data);
}

std::size_t Table::rows() const {
    if (cols_.empty()) return 0;
    const std::size_t n = std::visit([](const auto& v) { return v.size(); }, cols_.front().data);
    for (const auto& c : cols_)
        if (std::visit([](const auto& v) { return v.size(); }, c.data) != n)
            throw std::logic_error("table column " + c.name + " has the wrong length");
    return n;
}

void Table::write_csv(std::ostream& os) const {
    const std::size_t n = rows();
    for (std::size_t j = 0; j < cols_.size(); ++j) os << (j ? "," : "") << quote_csv(cols_[j].name);
    os << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (j) os << ',';
            if (const auto* d = std::get_if<std::vector<double>>(&cols_[j].data))
                os << fmt((*d)[i]);
            else
                os << quote_csv(std::get<std::vector<std::string>>(cols_[j].data)[i]);
        }
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const {
    rows();
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& c : cols_) {
        auto arr = nlohmann::ordered_json::array();
        if (const auto* d = std::get_if<std::vector<double>>(&c.data)) {
            // same rounding as the CSV; non-finite values become null
            for (double v : *d) {
                if (std::isfinite(v))
                    arr.push_back(std::stod(fmt(v)));
                else
                    arr.push_back(nullptr);
            }
        } else {
            for (const auto& s : std::get<std::vector<std::string>>(c.data)) arr.push_back(s);
        }
        j[c.name] = std::move(arr);
    }
    os << j.dump(1) << '\n';
}

}  // namespace xpcli
