#include "pglcensus/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pglcensus {

namespace {

using json = nlohmann::ordered_json;

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat x(j.get<std::string>());
        x.canonicalize();
        return x;
    }
    throw std::domain_error("matrix file: expected integer or string rational component");
}

CyclotomicNumber entry_from_json(const CyclotomicField& f, const json& cell) {
    if (cell.is_object()) {
        if (cell.contains("zero")) return f.zero();
        if (cell.contains("exp")) return f.zeta(cell.at("exp").get<long>());
        if (cell.contains("int")) return f.from_rational(rat_from_json(cell.at("int")));
        if (cell.contains("rat")) {
            const json& r = cell.at("rat");
            if (!r.is_array() || r.size() != 2)
                throw std::domain_error("matrix file: \"rat\" must be [num, den]");
            Rat num = rat_from_json(r[0]);
            Rat den = rat_from_json(r[1]);
            if (den == 0) throw std::domain_error("matrix file: zero denominator");
            return f.from_rational(num / den);
        }
        if (cell.contains("coeffs")) {
            std::vector<Rat> cs;
            for (const json& c : cell.at("coeffs")) cs.push_back(rat_from_json(c));
            return f.from_coeffs(cs);
        }
        throw std::domain_error("matrix file: unrecognized entry object");
    }
    if (cell.is_number_integer())
        return f.from_rational(Rat(static_cast<long>(cell.get<long long>())));
    throw std::domain_error("matrix file: unrecognized entry");
}

json entry_to_json(const CyclotomicNumber& x) {
    json cell = json::object();
    if (x.is_zero()) {
        cell["zero"] = true;
        return cell;
    }
    Rat q;
    if (x.as_rational(q)) {
        if (q.get_den() == 1) {
            if (q.get_num().fits_slong_p())
                cell["int"] = q.get_num().get_si();
            else
                cell["int"] = q.get_num().get_str();
        } else {
            json r = json::array();
            if (q.get_num().fits_slong_p()) r.push_back(q.get_num().get_si());
            else r.push_back(q.get_num().get_str());
            if (q.get_den().fits_slong_p()) r.push_back(q.get_den().get_si());
            else r.push_back(q.get_den().get_str());
            cell["rat"] = r;
        }
        return cell;
    }
    // monomial?
    const CyclotomicField& f = x.field();
    for (unsigned e = 0; e < f.order(); ++e) {
        if (x == f.zeta(e)) {
            cell["exp"] = e;
            return cell;
        }
    }
    json cs = json::array();
    for (const Rat& c : x.coeffs()) {
        if (c.get_den() == 1 && c.get_num().fits_slong_p())
            cs.push_back(c.get_num().get_si());
        else
            cs.push_back(rat_to_string(c));
    }
    cell["coeffs"] = cs;
    return cell;
}

CoordMatrix matrix_from_json(const json& j) {
    unsigned order = j.at("cyclotomic_order").get<unsigned>();
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    auto field = std::make_shared<const CyclotomicField>(order);
    CoordMatrix m = CoordMatrix::zero(field, rows, cols);

    if (j.contains("exp_grid")) {
        const json& grid = j.at("exp_grid");
        if (grid.size() != rows)
            throw std::domain_error("matrix file: exp_grid row count mismatch");
        for (size_t r = 0; r < rows; ++r) {
            if (grid[r].size() != cols)
                throw std::domain_error("matrix file: exp_grid column count mismatch");
            for (size_t c = 0; c < cols; ++c) {
                const json& cell = grid[r][c];
                if (cell.is_string()) {
                    if (cell.get<std::string>() != "z")
                        throw std::domain_error("matrix file: exp_grid cells are exponents or \"z\"");
                    m.at(r, c) = field->zero();
                } else {
                    m.at(r, c) = field->zeta(cell.get<long>());
                }
            }
        }
        return m;
    }

    const json& entries = j.at("entries");
    if (entries.size() != rows)
        throw std::domain_error("matrix file: entries row count mismatch");
    for (size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols)
            throw std::domain_error("matrix file: entries column count mismatch");
        for (size_t c = 0; c < cols; ++c)
            m.at(r, c) = entry_from_json(*field, entries[r][c]);
    }
    return m;
}

}  // namespace

CoordMatrix read_coord_matrix(std::istream& in) {
    json j = json::parse(in);
    CoordMatrix m = matrix_from_json(j);
    if (m.has_zero_column())
        throw std::domain_error("matrix file: a point has all-zero coordinates");
    return m;
}

CoordMatrix read_coord_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open matrix file: " + path);
    return read_coord_matrix(in);
}

void write_coord_matrix(std::ostream& out, const CoordMatrix& m) {
    json j = json::object();
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["cyclotomic_order"] = m.field->order();
    json rows = json::array();
    for (size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols; ++c) row.push_back(entry_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    out << j.dump(2) << "\n";
}

void write_coord_matrix_file(const std::string& path, const CoordMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot open matrix file for writing: " + path);
    write_coord_matrix(out, m);
}

AssociationWitness read_witness_file(const std::string& path, const CoordMatrix& reference) {
    CoordMatrix m = read_coord_matrix_file(path);
    if (m.rows != 1 || m.cols != reference.cols)
        throw std::domain_error("witness file must be a 1 x n matrix matching the point count");
    if (m.field->order() != reference.field->order())
        throw std::domain_error("witness file cyclotomic order mismatch");
    AssociationWitness w;
    for (size_t c = 0; c < m.cols; ++c) w.lambda.push_back(m.at(0, c));
    return w;
}

}  // namespace pglcensus
