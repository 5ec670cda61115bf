#include "schur/render.hpp"

#include "schur/invariants.hpp"
#include "schur/translate.hpp"

#include <json.hpp>

#include <sstream>

namespace schur {

ListFormat list_format_from_string(const std::string& s) {
    if (s == "json") return ListFormat::json;
    if (s == "csv") return ListFormat::csv;
    if (s == "md") return ListFormat::md;
    if (s == "text") return ListFormat::text;
    throw std::invalid_argument("unknown format '" + s + "' (expected json, csv, md or text)");
}

std::string class_id(const HassePoset& poset, int idx) {
    int width = 1;
    for (std::size_t n = poset.classes.size(); n > 10; n /= 10) ++width;
    std::string num = std::to_string(idx);
    while (static_cast<int>(num.size()) < width) num.insert(num.begin(), '0');
    return "w" + num;
}

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += sep;
        s += std::to_string(v[k]);
    }
    return s;
}

std::string aj_str(const ClassInfo& info) {
    if (!info.aj) return "-";
    return std::to_string(info.aj->a) + ":" + join_ints(info.aj->J);
}

struct RowData {
    std::string id;
    int dim;
    std::uint64_t degree;
    const ClassInfo* info;
    std::optional<PartitionIndex> partition;
    std::optional<int> r;
};

std::vector<RowData> collect_rows(const CominusculeSpace& X, const HassePoset& poset) {
    const bool spinor = partition_family_of(X) == PartitionFamily::Spinor;
    std::vector<RowData> rows;
    rows.reserve(poset.classes.size());
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        RowData row;
        row.id = class_id(poset, static_cast<int>(c));
        row.dim = poset.classes[c].dim();
        row.degree = poset.info[c].degree;
        row.info = &poset.info[c];
        row.partition = partition_of_class(X, poset.classes[c]);
        if (spinor && poset.info[c].aj)
            row.r = spinor_r(X.sys().rank(), *poset.info[c].aj);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string partition_str(const RowData& row, PartitionConvention conv) {
    if (!row.partition) return "-";
    if (conv == PartitionConvention::decreasing) {
        auto young = to_decreasing_convention(*row.partition);
        return young.empty() ? "()" : "(" + join_ints(young) + ")";
    }
    return "(" + join_ints(row.partition->parts) + ")";
}

} // namespace

std::string render_list(const CominusculeSpace& X, const HassePoset& poset, ListFormat fmt,
                        PartitionConvention conv) {
    auto rows = collect_rows(X, poset);
    const bool spinor = partition_family_of(X) == PartitionFamily::Spinor;

    if (fmt == ListFormat::json) {
        nlohmann::json top;
        top["space"] = {
            {"family", to_string(X.sys().family())},
            {"rank", X.sys().rank()},
            {"node", X.node()},
            {"dim", X.dim()},
            {"label", X.label()},
            {"conventions",
             {{"partition", "strictly-increasing"},
              {"j_order", "ascending node index"}}},
        };
        nlohmann::json classes = nlohmann::json::array();
        for (const RowData& row : rows) {
            nlohmann::json c;
            c["id"] = row.id;
            c["dim"] = row.dim;
            c["degree"] = row.degree;
            if (row.info->aj) {
                c["a"] = row.info->aj->a;
                c["J"] = row.info->aj->J;
            } else {
                c["a"] = nullptr;
                c["J"] = nullptr;
            }
            if (row.partition)
                c["partition"] = conv == PartitionConvention::decreasing
                                     ? to_decreasing_convention(*row.partition)
                                     : row.partition->parts;
            else
                c["partition"] = nullptr;
            c["rigid"] = row.info->rigid;
            c["witnesses"] = {{"h1", row.info->h1.size()}, {"h2", row.info->h2.size()}};
            classes.push_back(std::move(c));
        }
        top["classes"] = std::move(classes);
        return top.dump(2) + "\n";
    }

    std::ostringstream out;
    if (fmt == ListFormat::csv) {
        out << "id,dim,degree,aJ,partition";
        if (spinor) out << ",r";
        out << ",rigid,h1,h2\n";
        for (const RowData& row : rows) {
            out << row.id << ',' << row.dim << ',' << row.degree << ",\"" << aj_str(*row.info)
                << "\",\"" << partition_str(row, conv) << "\"";
            if (spinor) out << ',' << (row.r ? std::to_string(*row.r) : "-");
            out << ',' << (row.info->rigid ? 1 : 0) << ',' << row.info->h1.size() << ','
                << row.info->h2.size() << '\n';
        }
        return out.str();
    }

    if (fmt == ListFormat::md) {
        out << "| id | dim | degree | a:J | partition |";
        if (spinor) out << " r |";
        out << " rigid | H1 | H2 |\n";
        out << "|---|---|---|---|---|";
        if (spinor) out << "---|";
        out << "---|---|---|\n";
        for (const RowData& row : rows) {
            out << "| " << row.id << " | " << row.dim << " | " << row.degree << " | "
                << aj_str(*row.info) << " | " << partition_str(row, conv) << " |";
            if (spinor) out << ' ' << (row.r ? std::to_string(*row.r) : "-") << " |";
            out << ' ' << (row.info->rigid ? "yes" : "no") << " | " << row.info->h1.size()
                << " | " << row.info->h2.size() << " |\n";
        }
        return out.str();
    }

    out << X.label() << ": " << rows.size() << " classes, dim " << X.dim() << "\n";
    for (const RowData& row : rows) {
        out << row.id << "  dim=" << row.dim << "  deg=" << row.degree << "  aJ=" << aj_str(*row.info);
        if (row.partition) out << "  λ=" << partition_str(row, conv);
        if (spinor) out << "  r=" << (row.r ? std::to_string(*row.r) : "-");
        out << (row.info->rigid ? "  rigid" : "  flexible");
        if (!row.info->rigid)
            out << " (h1=" << row.info->h1.size() << ", h2=" << row.info->h2.size() << ")";
        out << '\n';
    }
    return out.str();
}

std::string render_dot(const CominusculeSpace& X, const HassePoset& poset) {
    std::ostringstream out;
    out << "digraph \"" << X.label() << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t c = 0; c < poset.classes.size(); ++c) {
        out << "  " << class_id(poset, static_cast<int>(c)) << " [label=\""
            << poset.classes[c].dim() << "/" << poset.info[c].degree << "\"";
        if (poset.info[c].rigid) out << ", peripheries=2";
        out << "];\n";
    }
    for (std::size_t k = 0; k < poset.covers.size(); ++k)
        out << "  " << class_id(poset, poset.covers[k].first) << " -> "
            << class_id(poset, poset.covers[k].second) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace schur
