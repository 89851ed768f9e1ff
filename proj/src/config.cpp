#include "hmf/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

namespace hmf {

std::string default_data_dir()
{
    if (const char* env = std::getenv("HMF2_DATA"))
        return env;
#ifdef HMF2_DEFAULT_DATA_DIR
    return HMF2_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const FieldConfig& Config::field(std::int64_t d) const
{
    auto it = fields.find(d);
    if (it == fields.end())
        throw usage_error("no configuration for discriminant " + std::to_string(d));
    return it->second;
}

namespace {

Config load_config(const std::string& path)
{
    std::string file = path;
    std::string dir = default_data_dir();
    if (file.empty()) {
        if (const char* env = std::getenv("HMF2_CONFIG"))
            file = env;
        else
            file = dir + "/config.json";
    }
    std::ifstream in(file);
    if (!in)
        throw usage_error("cannot open config file " + file);
    nlohmann::json j;
    in >> j;

    Config c;
    c.data_dir = dir;
    const auto& defs = j.at("defaults");
    c.trace_bound = defs.at("trace_bound").get<std::int64_t>();
    c.vv_jprec = defs.at("vv_jprec").get<std::int64_t>();
    c.param_prec = defs.at("param_prec").get<std::int64_t>();
    c.relation_trace_bound = defs.at("relation_trace_bound").get<std::int64_t>();
    c.dims_kmax = defs.at("dims_kmax").get<std::int64_t>();
    c.phi11_sign = j.at("phi11_sign").get<int>();
    for (const auto& [key, fj] : j.at("fields").items()) {
        FieldConfig f;
        f.disc = std::stoll(key);
        f.twisted_iso_scale = fj.at("twisted_iso_scale").get<std::int64_t>();
        for (const auto& r : fj.at("twisted_repset"))
            f.twisted_repset.push_back(r.get<std::int64_t>());
        for (const auto& [ell, xy] : fj.at("lambda").items())
            f.lambda[std::stoll(ell)] = {xy[0].get<std::int64_t>(), xy[1].get<std::int64_t>()};
        for (const auto& [ln, val] : fj.at("slice_residual").items()) {
            auto comma = ln.find(',');
            std::int64_t ell = std::stoll(ln.substr(0, comma));
            int N = std::stoi(ln.substr(comma + 1));
            f.slice_residual[{ell, N}] = parse_rational(val.get<std::string>());
        }
        f.generators_file = fj.at("generators_file").get<std::string>();
        f.dims_file = fj.at("dims_file").get<std::string>();
        if (fj.contains("relations_file"))
            f.relations_file = fj.at("relations_file").get<std::string>();
        c.fields[f.disc] = std::move(f);
    }
    return c;
}

} // namespace

const Config& config(const std::string& path)
{
    static std::mutex mu;
    static std::map<std::string, Config> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(path);
    if (it == cache.end())
        it = cache.emplace(path, load_config(path)).first;
    return it->second;
}

Rational slice_weight_factor(int k, int N)
{
    // 2^{floor(N/2)} / prod_{j=2}^{floor(N/2)+1} (2(k+N) - 2j - 1)
    Rational r(1);
    int half = N / 2;
    for (int i = 0; i < half; ++i)
        r *= 2;
    for (int j = 2; j <= half + 1; ++j)
        r /= rat(2 * (k + N) - 2 * j - 1);
    return r;
}

} // namespace hmf
