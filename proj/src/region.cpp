#include "aztec/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace aztec {

bool in_diamond(Cell c, long order) {
    return std::labs(2 * c.i + 1) + std::labs(2 * c.j + 1) <= 2 * order;
}

bool is_black(Cell c, long order) {
    return ((c.i + c.j - order) % 2) == 0;
}

Cell reflect_cell(Cell c) { return {-1 - c.i, c.j}; }
Cell rot90_cell(Cell c) { return {c.j, -1 - c.i}; }
Cell rot180_cell(Cell c) { return {-1 - c.i, -1 - c.j}; }

Domino::Domino(Cell x, Cell y) {
    if (y < x) std::swap(x, y);
    a = x;
    b = y;
}

Region::Region(long n, std::set<Cell> cells) : order(n), removed(std::move(cells)) {
    validate();
}

void Region::validate() const {
    if (order < 0) throw std::invalid_argument("region order must be nonnegative");
    for (const Cell& c : removed)
        if (!in_diamond(c, order))
            throw std::invalid_argument("removed cell (" + std::to_string(c.i) + "," +
                                        std::to_string(c.j) + ") outside the order-" +
                                        std::to_string(order) + " diamond");
}

long Region::balance_indicator() const {
    long balance = 0;
    for (const Cell& c : removed) balance += is_black(c, order) ? 1 : -1;
    return balance;
}

Region Region::without(const std::vector<Cell>& cells) const {
    Region r = *this;
    for (const Cell& c : cells) {
        if (!in_diamond(c, order))
            throw std::invalid_argument("cell to remove lies outside the diamond");
        if (!r.removed.insert(c).second)
            throw std::invalid_argument("cell removed twice");
    }
    return r;
}

void Tiling::sort_canonical() { std::sort(dominoes.begin(), dominoes.end()); }

bool Tiling::contains(const Domino& d) const {
    return std::binary_search(dominoes.begin(), dominoes.end(), d);
}

bool Tiling::valid_for(const Region& region) const {
    if (order != region.order) return false;
    std::set<Cell> covered;
    for (const Domino& d : dominoes) {
        const bool adjacent = (d.a.i == d.b.i && d.b.j == d.a.j + 1) ||
                              (d.a.j == d.b.j && d.b.i == d.a.i + 1);
        if (!adjacent) return false;
        for (Cell c : {d.a, d.b}) {
            if (!in_diamond(c, region.order)) return false;
            if (region.removed.count(c)) return false;
            if (!covered.insert(c).second) return false;
        }
    }
    // Everything not removed must be covered.
    for (long i = -region.order; i < region.order; ++i)
        for (long j = -region.order; j < region.order; ++j) {
            Cell c{i, j};
            if (!in_diamond(c, region.order) || region.removed.count(c)) continue;
            if (!covered.count(c)) return false;
        }
    return true;
}

namespace {

nlohmann::json cell_json(const Cell& c) { return nlohmann::json::array({c.i, c.j}); }

Cell cell_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("cell must be a pair of integers");
    return Cell{j[0].get<long>(), j[1].get<long>()};
}

}  // namespace

std::string region_to_json(const Region& region) {
    nlohmann::json removed = nlohmann::json::array();
    for (const Cell& c : region.removed) removed.push_back(cell_json(c));
    nlohmann::json j{{"order", region.order}, {"removed", removed}};
    return j.dump();
}

Region region_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("order")) throw std::invalid_argument("region JSON needs \"order\"");
    Region r(j.at("order").get<long>());
    if (j.contains("removed"))
        for (const auto& cj : j.at("removed")) {
            Cell c = cell_from_json(cj);
            if (!r.removed.insert(c).second)
                throw std::invalid_argument("duplicate removed cell in region JSON");
        }
    r.validate();
    return r;
}

std::string tiling_to_json(const Tiling& tiling) {
    nlohmann::json dominoes = nlohmann::json::array();
    for (const Domino& d : tiling.dominoes)
        dominoes.push_back(nlohmann::json::array({cell_json(d.a), cell_json(d.b)}));
    nlohmann::json j{{"order", tiling.order}, {"dominoes", dominoes}};
    return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Tiling t;
    t.order = j.at("order").get<long>();
    for (const auto& dj : j.at("dominoes")) {
        if (!dj.is_array() || dj.size() != 2)
            throw std::invalid_argument("domino must be a pair of cells");
        t.dominoes.emplace_back(cell_from_json(dj[0]), cell_from_json(dj[1]));
    }
    t.sort_canonical();
    return t;
}

}  // namespace aztec
