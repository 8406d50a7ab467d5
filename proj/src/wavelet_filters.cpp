#include "sigkit/errors.hpp"
#include "sigkit/wavelet.hpp"

#include <map>

namespace sigkit {

namespace {

// Daubechies scaling (reconstruction low-pass) coefficients, standard published tables.
struct FilterTable {
  const char* name;
  std::vector<double> rec_lo;
};

const std::vector<FilterTable>& tables() {
  static const std::vector<FilterTable> t = {
      {"haar", {0.7071067811865476, 0.7071067811865476}},
      {"db2",
       {0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037}},
      {"db3",
       {0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458,
        -0.08544127388202666, 0.03522629188570953}},
      {"db4",
       {0.2303778133088965, 0.7148465705529157, 0.6308807679298589, -0.027983769416859854,
        -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032}},
      {"db5",
       {0.16010239797419293, 0.6038292697971896, 0.7243085284377729, 0.13842814590132074,
        -0.24229488706638203, -0.032244869584638375, 0.07757149384004572, -0.006241490212798274,
        -0.012580751999081999, 0.0033357252854737712}},
      {"db6",
       {0.11154074335010947, 0.49462389039845306, 0.7511339080210954, 0.31525035170919763,
        -0.22626469396543983, -0.12976686756726194, 0.09750160558732304, 0.027522865530305727,
        -0.03158203931748603, 0.0005538422011614961, 0.004777257510945511,
        -0.0010773010853084796}},
      {"db7",
       {0.07785205408500918, 0.3965393194819173, 0.7291320908462351, 0.4697822874051931,
        -0.14390600392856498, -0.22403618499387498, 0.07130921926683026, 0.08061260915108308,
        -0.03802993693501441, -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665,
        -0.0018016407040474908, 0.00035371379997452024}},
      {"db8",
       {0.05441584224310401, 0.31287159091429995, 0.6756307362972898, 0.5853546836542067,
        -0.015829105256349306, -0.2840155429615469, 0.0004724845739132828, 0.12874742662047847,
        -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.008746094047405777,
        -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693,
        -0.00011747678412476953}},
  };
  return t;
}

WaveletBank build_bank(const FilterTable& t) {
  const auto len = static_cast<Index>(t.rec_lo.size());
  WaveletBank b;
  b.name = t.name;
  b.rec_lo = Eigen::Map<const Vector>(t.rec_lo.data(), len);
  b.dec_lo = b.rec_lo.reverse();
  b.rec_hi.resize(len);
  for (Index k = 0; k < len; ++k) b.rec_hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * b.dec_lo[k];
  b.dec_hi = b.rec_hi.reverse();
  return b;
}

const std::map<std::string, WaveletBank, std::less<>>& banks() {
  static const auto m = [] {
    std::map<std::string, WaveletBank, std::less<>> out;
    for (const auto& t : tables()) out.emplace(t.name, build_bank(t));
    return out;
  }();
  return m;
}

}  // namespace

const WaveletBank& wavelet_bank(std::string_view name) {
  if (name == "db1") name = "haar";
  const auto& m = banks();
  const auto it = m.find(name);
  if (it == m.end()) throw UnknownWavelet(std::string(name));
  return it->second;
}

std::span<const std::string> wavelet_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& t : tables()) out.emplace_back(t.name);
    return out;
  }();
  return names;
}

}  // namespace sigkit
