#include "support/suite.hpp"

#include "sheafcx/io.hpp"

#include <algorithm>
#include <filesystem>

namespace suite {

using sheafcx::Monomial;
using sheafcx::MonomialIdeal;
using sheafcx::Ring;

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

std::vector<MonomialIdeal> random_ideals(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> out;
    while (out.size() < count) {
        const auto n = static_cast<std::size_t>(draw(rng, 2, 4));
        const Ring ring = Ring::standard(n);
        const auto gens = draw(rng, 3, 8);
        std::vector<Monomial> ms;
        for (std::int64_t g = 0; g < gens; ++g) {
            // linear forms swallow most other generators, so keep them rare
            const auto deg = draw(rng, 0, 7) == 0 ? 1 : draw(rng, 2, 4);
            std::vector<std::int32_t> e(n, 0);
            for (std::int64_t k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(draw(rng, 0, n - 1))];
            ms.emplace_back(e);
        }
        MonomialIdeal I = MonomialIdeal::from_generators(ring, ms);
        if (I.num_generators() < 2 || sheafcx::saturate(I).is_unit()) continue;
        out.push_back(std::move(I));
    }
    return out;
}

MonomialIdeal pathology(int d) {
    return MonomialIdeal::from_generators(
        Ring::standard(4), {Monomial({2, 0, 0, 0}), Monomial({1, 1, d, 0}), Monomial({0, 2, 0, 0})});
}

std::vector<MonomialIdeal> bundled_ideals(const std::string& dataDir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dataDir))
        if (e.path().extension() == ".ideal") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<MonomialIdeal> out;
    for (const auto& f : files) {
        const auto doc = sheafcx::parse_ideal_document(sheafcx::read_text_file(f.string()));
        for (const auto& e : doc.ideals) out.push_back(e.ideal);
    }
    return out;
}

}  // namespace suite
