// grasschar: compute mod-2 cohomology presentations of (oriented) Grassmann
// manifolds and verify a catalog of polynomial and kernel claims about them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration
// error.

#include <grasschar/verifier.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <regex>

namespace {

using namespace grasschar;

struct RingSelector {
    std::string ring = "imageJ";
    int n = 7;
    int k = 3;
    int t = 3;
    std::string ring_case = "minus1";
    int gamma = 0;
};

void add_ring_options(CLI::App* cmd, RingSelector& sel) {
    cmd->add_option("--ring", sel.ring, "ring family")
        ->check(CLI::IsMember({"borel", "imageJ", "oriented", "orientedK2"}))
        ->required();
    cmd->add_option("--n", sel.n, "ambient dimension n");
    cmd->add_option("--k", sel.k, "plane dimension k");
    cmd->add_option("--t", sel.t, "power-of-two parameter t");
    cmd->add_option("--case", sel.ring_case, "oriented case")
        ->check(CLI::IsMember({"minus1", "minus2", "minus3"}));
    cmd->add_option("--gamma", sel.gamma, "free coefficient gamma")->check(CLI::Range(0, 1));
}

RingPtr build_ring(const RingSelector& sel, RingCache& cache, int seal_to) {
    if (sel.ring == "borel") return cache.borel(sel.n, sel.k, seal_to);
    if (sel.ring == "imageJ") return cache.image(sel.n, seal_to);
    if (sel.ring == "orientedK2") return cache.oriented_k2(sel.t, seal_to);
    const auto rc = ring_case_from_string(sel.ring_case);
    if (!rc) throw std::invalid_argument("unknown case '" + sel.ring_case + "'");
    return cache.oriented(GrassmannParams(sel.t, *rc, sel.gamma), seal_to);
}

std::pair<int, int> parse_t_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int t = std::stoi(text);
            return {t, t};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse t range '" + text + "' (expected N or A..B)");
    }
}

std::string join_dims(const std::vector<std::size_t>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(dims[i]);
    }
    return out;
}

int cmd_cache_verify(const CacheConfig& cfg) {
    const auto dir = cfg.dir / "gb";
    if (!std::filesystem::exists(dir)) {
        std::cout << "cache is empty (" << dir.string() << ")\n";
        return 0;
    }
    const std::regex borel_re(R"(borel_n(\d+)_k(\d+)\.txt)");
    const std::regex image_re(R"(imageJ_n(\d+)\.txt)");
    const std::regex oriented_re(R"(oriented_t(\d+)_(minus[1-3])_g([01])\.txt)");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int bad = 0;
    for (const auto& path : files) {
        const std::string name = path.filename().string();
        std::smatch m;
        std::optional<GroebnerBasis> recomputed;
        try {
            if (std::regex_match(name, m, borel_re))
                recomputed = borel_ring(std::stoi(m[1]), std::stoi(m[2]))->groebner();
            else if (std::regex_match(name, m, image_re))
                recomputed = image_ring(std::stoi(m[1]))->groebner();
            else if (std::regex_match(name, m, oriented_re))
                recomputed = oriented_ring(GrassmannParams(std::stoi(m[1]),
                                                           *ring_case_from_string(m[2].str()),
                                                           std::stoi(m[3])))
                                 ->groebner();
        } catch (const std::exception& e) {
            std::cout << "invalid  " << name << " (" << e.what() << ")\n";
            ++bad;
            continue;
        }
        if (!recomputed) {
            std::cout << "unknown  " << name << '\n';
            ++bad;
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        const std::string text((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        if (serialize(*recomputed) == text) {
            std::cout << "ok       " << name << '\n';
        } else {
            std::cout << "MISMATCH " << name << '\n';
            ++bad;
        }
    }
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mod-2 cohomology of Grassmannians and their oriented double covers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string cache_dir_flag;
    bool no_cache = false, verify_cache = false;
    std::string format = "text";
    app.add_option("--cache-dir", cache_dir_flag, "Groebner-basis cache directory")
        ->envname("GRASSCHAR_CACHE_DIR");
    app.add_flag("--no-cache", no_cache, "recompute everything, touch no cache files");
    app.add_flag("--verify-cache", verify_cache, "byte-compare cache hits against a recomputation");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* compute = app.add_subcommand("compute", "compute and print one object");
    compute->require_subcommand(1);
    int opt_r = 0, opt_k3 = 3, opt_degree = 0, opt_up_to = 0, opt_n = 7, opt_kk = 3;
    RingSelector gb_sel, basis_sel, hilbert_sel;

    auto* cmd_g = compute->add_subcommand("g", "the polynomial g_r in w2, w3");
    cmd_g->add_option("--r", opt_r, "index r")->required();
    auto* cmd_wbar = compute->add_subcommand("wbar", "the dual class wbar_r in w1..wk");
    cmd_wbar->add_option("--r", opt_r, "index r")->required();
    cmd_wbar->add_option("--k", opt_k3, "number of variables")->check(CLI::Range(1, 3));
    auto* cmd_gb = compute->add_subcommand("gb", "a reduced Groebner basis");
    add_ring_options(cmd_gb, gb_sel);
    auto* cmd_basis = compute->add_subcommand("basis", "standard monomials of one degree");
    add_ring_options(cmd_basis, basis_sel);
    cmd_basis->add_option("--degree", opt_degree, "graded degree")->required();
    auto* cmd_hilbert = compute->add_subcommand("hilbert", "Hilbert function 0..up-to");
    add_ring_options(cmd_hilbert, hilbert_sel);
    cmd_hilbert->add_option("--up-to", opt_up_to, "largest degree")->required();
    auto* cmd_gysin = compute->add_subcommand("gysin", "Gysin-predicted oriented Betti numbers");
    cmd_gysin->add_option("--n", opt_n, "ambient dimension n")->required();
    cmd_gysin->add_option("--k", opt_kk, "plane dimension k")->required();
    cmd_gysin->add_option("--up-to", opt_up_to, "largest degree")->required();

    auto* verify = app.add_subcommand("verify", "run verification claims");
    std::string claim_filter, t_range = "3..5";
    verify->add_option("--claim", claim_filter, "run a single claim id");
    verify->add_option("--t", t_range, "t or t range A..B (within 3..8)");

    auto* cache_cmd = app.add_subcommand("cache", "manage the Groebner-basis cache");
    cache_cmd->require_subcommand(1);
    auto* cache_clear = cache_cmd->add_subcommand("clear", "delete cached bases");
    auto* cache_verify = cache_cmd->add_subcommand("verify", "recompute and compare cached bases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CacheConfig cfg;
        cfg.dir = cache_dir_flag.empty() ? default_cache_dir() : std::filesystem::path(cache_dir_flag);
        cfg.use_files = !no_cache;
        cfg.verify = verify_cache;
        RingCache cache(cfg);
        const bool json = format == "json";

        if (compute->parsed()) {
            nlohmann::ordered_json j;
            if (cmd_g->parsed()) {
                const auto poly = g_poly(opt_r);
                if (json) j = {{"object", "g"}, {"r", opt_r}, {"poly", print_poly(poly)}};
                else std::cout << print_poly(poly) << '\n';
            } else if (cmd_wbar->parsed()) {
                const auto poly = wbar(opt_r, opt_k3);
                if (json) j = {{"object", "wbar"}, {"r", opt_r}, {"k", opt_k3}, {"poly", print_poly(poly)}};
                else std::cout << print_poly(poly) << '\n';
            } else if (cmd_gb->parsed()) {
                const auto ring = build_ring(gb_sel, cache, -1);
                if (json) {
                    j = {{"object", "gb"}, {"order", ring->table().order_spec()}};
                    auto elems = nlohmann::ordered_json::array();
                    for (const auto& e : ring->groebner().elements()) elems.push_back(print_poly(e));
                    j["elements"] = std::move(elems);
                } else {
                    for (const auto& e : ring->groebner().elements())
                        std::cout << print_poly(e) << '\n';
                }
            } else if (cmd_basis->parsed()) {
                const auto ring = build_ring(basis_sel, cache, opt_degree);
                const auto& mons = ring->standard_monomials(opt_degree);
                if (json) {
                    j = {{"object", "basis"}, {"degree", opt_degree}};
                    auto arr = nlohmann::ordered_json::array();
                    for (const auto& m : mons)
                        arr.push_back(print_poly(PolyGF2::from_monomial(ring->table_ptr(), m)));
                    j["monomials"] = std::move(arr);
                } else {
                    for (const auto& m : mons)
                        std::cout << print_poly(PolyGF2::from_monomial(ring->table_ptr(), m)) << '\n';
                }
            } else if (cmd_hilbert->parsed()) {
                const auto ring = build_ring(hilbert_sel, cache, opt_up_to);
                const auto dims = hilbert_function(*ring, opt_up_to);
                if (json) j = {{"object", "hilbert"}, {"up_to", opt_up_to}, {"dims", dims}};
                else std::cout << join_dims(dims) << '\n';
            } else if (cmd_gysin->parsed()) {
                const auto ring = cache.borel(opt_n, opt_kk, opt_up_to + 1);
                const auto dims = gysin_dims(ring, opt_up_to);
                if (json)
                    j = {{"object", "gysin"}, {"n", opt_n}, {"k", opt_kk}, {"up_to", opt_up_to},
                         {"dims", dims}};
                else std::cout << join_dims(dims) << '\n';
            }
            if (json) std::cout << j.dump() << '\n';
            return 0;
        }

        if (verify->parsed()) {
            const auto [t_min, t_max] = parse_t_range(t_range);
            const auto reports = claim_filter.empty() ? run_all(t_min, t_max, &cache)
                                                      : run_filtered(claim_filter, t_min, t_max, &cache);
            std::size_t failed = 0, skipped = 0;
            for (const auto& r : reports) {
                std::cout << (json ? report_json_line(r) : report_text_line(r)) << '\n';
                if (r.status == ClaimStatus::fail) ++failed;
                if (r.status == ClaimStatus::skipped_degenerate) ++skipped;
            }
            std::cerr << reports.size() - failed - skipped << " passed, " << skipped
                      << " skipped-degenerate, " << failed << " failed\n";
            return failed ? 1 : 0;
        }

        if (cache_cmd->parsed()) {
            if (cache_clear->parsed()) {
                const auto dir = cfg.dir / "gb";
                std::size_t removed = 0;
                if (std::filesystem::exists(dir)) removed = std::filesystem::remove_all(dir);
                std::cout << "removed " << removed << " cache entries under " << dir.string()
                          << '\n';
                return 0;
            }
            if (cache_verify->parsed()) return cmd_cache_verify(cfg);
        }
        return 2;
    } catch (const cache_mismatch_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
