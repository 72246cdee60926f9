#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace causalkit {

// Discrete columns hold integer codes 0..cardinality-1 stored in real cells.
struct ColumnSchema {
    bool discrete = false;
    int cardinality = 0;

    static ColumnSchema continuous() { return {false, 0}; }
    static ColumnSchema categorical(int cardinality) { return {true, cardinality}; }

    bool operator==(const ColumnSchema&) const = default;
};

// Column-major n x p numeric matrix with per-column schema, optional
// missing-value mask, and variable names. Immutable after construction.
class Dataset {
public:
    Dataset(Eigen::MatrixXd values, std::vector<ColumnSchema> schema,
            std::vector<std::string> names);
    // mask(r, c) == true marks a missing cell; masked cells are not
    // schema-validated.
    Dataset(Eigen::MatrixXd values, std::vector<ColumnSchema> schema,
            std::vector<std::string> names, std::vector<uint8_t> mask);

    // p named columns and no rows; placeholder for testers that never
    // read cells (e.g. the d-separation oracle).
    static Dataset empty(std::vector<std::string> names);

    int num_rows() const { return static_cast<int>(values_.rows()); }
    int num_cols() const { return static_cast<int>(values_.cols()); }

    const Eigen::MatrixXd& values() const { return values_; }
    double value(int row, int col) const { return values_(row, col); }

    const std::vector<ColumnSchema>& schema() const { return schema_; }
    const ColumnSchema& column_schema(int c) const { return schema_.at(c); }

    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 when absent

    bool has_mask() const { return !mask_.empty(); }
    bool is_missing(int row, int col) const {
        return !mask_.empty() && mask_[static_cast<size_t>(col) * num_rows() + row] != 0;
    }
    // Rows with no missing value in any of the given columns, ascending.
    std::vector<int> complete_rows(const std::vector<int>& cols) const;

private:
    void validate() const;

    Eigen::MatrixXd values_;
    std::vector<ColumnSchema> schema_;
    std::vector<std::string> names_;
    std::vector<uint8_t> mask_;  // column-major, empty when no mask
};

// CSV with a header row of names and numeric cells. Columns without a
// declared schema are inferred: all-integer, nonnegative values with at most
// 20 distinct levels become Discrete(max+1), everything else Continuous.
// Empty cells are only legal with allow_missing and set mask bits.
Dataset load_csv(const std::string& path, bool allow_missing = false,
                 const std::map<std::string, ColumnSchema>& declared = {});

void save_csv(const Dataset& d, const std::string& path);

}  // namespace causalkit
