#pragma once

#include <deque>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace xpcli {

// column-major result; every command returns one of these
struct Column {
    std::string name;
    std::variant<std::vector<double>, std::vector<std::string>> data;
};

class Table {
public:
    std::vector<double>& num(const std::string& name);
    std::vector<std::string>& text(const std::string& name);
    std::size_t rows() const;
    const std::deque<Column>& columns() const { return cols_; }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

private:
    std::deque<Column> cols_;   // deque: references from num()/text() stay valid
};

}  // namespace xpcli
