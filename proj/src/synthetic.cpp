#include "hazecast/synthetic.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "hazecast/errors.hpp"
#include "hazecast/rng.hpp"

namespace hazecast {

namespace {

constexpr int kHoursPerDay = 24;
constexpr int kSunrise = 6;
constexpr int kSunset = 18;
constexpr double kPeakPowerMw = 100.0;
constexpr double kPeakIrradiance = 1000.0;

double clear_sky(int hour) {
    if (hour < kSunrise || hour > kSunset) return 0.0;
    return std::sin(M_PI * (hour - kSunrise) / double(kSunset - kSunrise));
}

std::string hour_timestamp(int t) {
    using namespace std::chrono;
    const sys_days base = sys_days{year{2019} / January / 1};
    const sys_days day = base + days{t / kHoursPerDay};
    const year_month_day ymd{day};
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00:00", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()), t % kHoursPerDay);
    return buf;
}

}  // namespace

Dataset generate_synthetic(int n_days, uint64_t seed, double haze_fraction) {
    if (n_days < 1) throw ValidationError("n_days must be >= 1");
    if (haze_fraction < 0.0 || haze_fraction > 1.0)
        throw ValidationError("haze_fraction must lie in [0, 1]");

    Rng rng(seed);
    const int n = n_days * kHoursPerDay;

    Series irradiance{"Global Horizontal Irradiance", "W/m2", {}, {}};
    Series temperature{"Ambient Temperature", "degC", {}, {}};
    Series haze{"Haze Indicator", "bool", {}, {}};
    Series power{"PV Power Generation", "MW", {}, {}};
    for (Series* s : {&irradiance, &temperature, &haze, &power}) s->values.reserve(n);
    power.timestamps.reserve(n);

    for (int day = 0; day < n_days; ++day) {
        const bool hazy = rng.uniform() < haze_fraction;
        const double atten = hazy ? rng.uniform(0.2, 0.6) : 1.0;
        const double sigma = hazy ? 0.15 : 0.02;
        for (int hour = 0; hour < kHoursPerDay; ++hour) {
            const double profile = clear_sky(hour) * atten;
            const double noise = std::max(0.0, 1.0 + sigma * rng.normal());
            power.values.push_back(kPeakPowerMw * profile * noise);
            irradiance.values.push_back(kPeakIrradiance * profile);
            temperature.values.push_back(15.0 + 10.0 * std::sin(2.0 * M_PI * (hour - 9) / 24.0) +
                                         0.5 * rng.normal());
            haze.values.push_back(hazy ? 1.0 : 0.0);
            power.timestamps.push_back(hour_timestamp(day * kHoursPerDay + hour));
        }
    }

    Dataset d;
    d.schema_id = "generic";
    d.features = {std::move(irradiance), std::move(temperature), std::move(haze)};
    d.target = std::move(power);
    d.validate();
    return d;
}

}  // namespace hazecast
