#include "cache.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grammar.hpp"
#include "version.hpp"

namespace fs = std::filesystem;

namespace wh {

std::string EkDiskCache::path_for(int k, int degree) const
{
    std::string code = kCodeVersion;
    for (char& c : code)
        if (c == '+' || c == '.')
            c = '_';
    return dir_ + "/ek_" + code + "_k" + std::to_string(k) + "_d" +
           std::to_string(degree) + ".txt";
}

std::optional<EkBlock> EkDiskCache::load(int k, int degree) const
{
    std::ifstream in(path_for(k, degree));
    if (!in)
        return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "whitehead ek-cache v1")
        return std::nullopt;
    if (!std::getline(in, line) || line != std::string("code ") + kCodeVersion)
        return std::nullopt;
    int file_k = -1, file_degree = -1;
    size_t dim = 0;
    {
        if (!std::getline(in, line))
            return std::nullopt;
        std::istringstream hdr(line);
        std::string kw1, kw2, kw3;
        hdr >> kw1 >> file_k >> kw2 >> file_degree >> kw3 >> dim;
        if (kw1 != "k" || kw2 != "degree" || kw3 != "dim" || file_k != k ||
            file_degree != degree)
            return std::nullopt;
    }

    EkBlock block;
    block.k = k;
    block.degree = degree;
    block.basis = enumerate_wreath_basis(k, degree);
    if (block.basis.size() != dim)
        return std::nullopt;
    for (size_t i = 0; i < dim; ++i) {
        if (!std::getline(in, line) || line.compare(0, 6, "basis ") != 0)
            return std::nullopt;
        if (line.substr(6) != print_wreath_word(block.basis[i]))
            return std::nullopt;  // basis order changed; treat as stale
    }
    block.rows.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (!std::getline(in, line) || line.compare(0, 4, "row ") != 0)
            return std::nullopt;
        std::istringstream row(line.substr(4));
        size_t self = 0;
        char colon = 0;
        row >> self >> colon;
        if (self != i || colon != ':')
            return std::nullopt;
        int bit;
        while (row >> bit) {
            if (bit < 0 || bit >= static_cast<int>(dim))
                return std::nullopt;
            block.rows[i].bits.push_back(bit);
        }
    }
    return block;
}

void EkDiskCache::store(const EkBlock& block) const
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    std::string final_path = path_for(block.k, block.degree);
    std::string tmp_path = final_path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path);
        if (!out)
            return;  // caching is best-effort
        out << "whitehead ek-cache v1\n";
        out << "code " << kCodeVersion << "\n";
        out << "k " << block.k << " degree " << block.degree << " dim "
            << block.basis.size() << "\n";
        for (const WreathWord& w : block.basis)
            out << "basis " << print_wreath_word(w) << "\n";
        for (size_t i = 0; i < block.rows.size(); ++i) {
            out << "row " << i << ":";
            for (int b : block.rows[i].bits)
                out << ' ' << b;
            out << "\n";
        }
        if (!out.good())
            return;
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec)
        fs::remove(tmp_path, ec);
}

}  // namespace wh
