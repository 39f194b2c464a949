#include "shiftcharge/grws.hpp"

#include <stdexcept>

#include "shiftcharge/errors.hpp"

namespace shiftcharge {

void validate_params(const GrwsParams& params) {
  if (params.p <= 1) throw InvalidParamsError("p must be greater than 1");
  if (rat_abs(params.N) >= 1) throw InvalidParamsError("N must lie in (-1, 1)");
  if (rat_abs(params.D) >= 1) throw InvalidParamsError("D must lie in (-1, 1)");
}

Rat grws_weight_sq(const GrwsParams& params, std::size_t n) {
  validate_params(params);
  Rat pn = rat_pow(params.p, n);
  return (pn + params.N) / (pn + params.D);
}

WeightSeq grws_weights(const GrwsParams& params) {
  validate_params(params);
  return WeightSeq([params](std::size_t n) {
    Rat pn = rat_pow(params.p, n);
    return Rat((pn + params.N) / (pn + params.D));
  });
}

Rat grws_multiplier(const GrwsParams& params, std::size_t i) {
  validate_params(params);
  if (i == 0) return 1;
  Rat pi = rat_pow(params.p, i);
  return params.p * (params.D - (pi / params.p) * params.N) / (pi - 1);
}

namespace {

// Exact j >= 0 with D = p^j N, if one exists. The candidate p^j N leaves the
// unit square after finitely many steps, so the scan terminates.
std::optional<unsigned long> find_special_line(const GrwsParams& params) {
  if (params.N == 0) return std::nullopt;
  Rat q = params.N;
  for (unsigned long j = 0; rat_abs(q) < 1; ++j, q *= params.p) {
    if (params.D == q) return j;
  }
  return std::nullopt;
}

}  // namespace

Sector classify_sector(const GrwsParams& params) {
  validate_params(params);
  const Rat& N = params.N;
  const Rat& D = params.D;
  Sector s;
  s.on_axis_N = N == 0;
  s.on_axis_D = D == 0;
  s.on_diagonal = N != 0 && D == N;
  s.on_antidiagonal = N != 0 && D == -N;
  s.special_line = find_special_line(params);

  if (s.on_axis_N || s.on_axis_D || s.on_diagonal || s.on_antidiagonal) {
    s.tag = SectorTag::Boundary;
    return s;
  }

  if (N < 0 && D < 0) {
    if (D > N) {
      s.tag = SectorTag::I;
    } else {
      Rat pN = params.p * N;
      Rat ppN = params.p * pN;
      if (D > pN) {
        s.tag = SectorTag::VIIIA;
      } else if (D >= ppN) {
        s.tag = SectorTag::VIIIB;
      } else {
        s.tag = SectorTag::VIII;
      }
    }
  } else if (N < 0) {
    s.tag = D < -N ? SectorTag::II : SectorTag::III;
  } else if (D > 0) {
    if (D > N) {
      s.tag = SectorTag::IV;
      if (!s.special_line) {
        Rat lo = N;
        for (unsigned long b = 0;; ++b) {
          Rat hi = lo * params.p;
          if (lo < D && D < hi) {
            s.iv_band = b;
            break;
          }
          lo = hi;
        }
      }
    } else {
      s.tag = SectorTag::V;
    }
  } else {
    s.tag = D > -N ? SectorTag::VI : SectorTag::VII;
  }
  return s;
}

std::string sector_name(const Sector& s) {
  switch (s.tag) {
    case SectorTag::I:
      return "I";
    case SectorTag::II:
      return "II";
    case SectorTag::III:
      return "III";
    case SectorTag::IV:
      return "IV";
    case SectorTag::V:
      return "V";
    case SectorTag::VI:
      return "VI";
    case SectorTag::VII:
      return "VII";
    case SectorTag::VIII:
      return "VIII";
    case SectorTag::VIIIA:
      return "VIIIA";
    case SectorTag::VIIIB:
      return "VIIIB";
    default: {
      std::string markers;
      auto add = [&markers](const char* name) {
        // '|' keeps the name a single CSV field.
        if (!markers.empty()) markers += '|';
        markers += name;
      };
      if (s.on_axis_N && s.on_axis_D) {
        add("origin");
      } else {
        if (s.on_axis_N) add("axis_N=0");
        if (s.on_axis_D) add("axis_D=0");
        if (s.on_diagonal) add("diagonal");
        if (s.on_antidiagonal) add("antidiagonal");
      }
      return "boundary(" + markers + ")";
    }
  }
}

GrwsCharge grws_charge(const GrwsParams& params, const Rat& epsilon,
                       unsigned long min_depth) {
  validate_params(params);
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");

  std::optional<unsigned long> special = find_special_line(params);
  std::vector<Rat> cs{Rat(1)};
  Rat sum = 1;

  if (special) {
    // Multipliers vanish from index *special + 1 on, so the charge is exact.
    for (unsigned long i = 1; i <= *special; ++i) {
      cs.push_back(cs.back() * grws_multiplier(params, i));
      sum += cs.back();
    }
    if (sum == 0) throw DegenerateNormalizerError();
    Rat a = Rat(1) / sum;
    std::vector<Atom> atoms;
    Rat pos = 1;
    for (const Rat& c : cs) {
      atoms.push_back(Atom{pos, a * c});
      pos /= params.p;
    }
    return GrwsCharge{params, *special, Charge(std::move(atoms)), a, Rat(0), true};
  }

  Rat abs_n = rat_abs(params.N);
  Rat cross = rat_abs(params.p * params.D - params.N);
  Rat tail;
  unsigned long depth = 0;
  for (unsigned long d = 0;; ++d) {
    if (d >= min_depth) {
      // |m_i| <= |N| + |pD - N|/(p^{d+1} - 1) =: q for every i > d, so the
      // dropped densities are geometrically bounded by |c_d| q/(1 - q).
      Rat q = abs_n + cross / (rat_pow(params.p, d + 1) - 1);
      if (q < 1) {
        Rat t = rat_abs(cs.back()) * q / (1 - q);
        if (t < epsilon && sum > t) {
          tail = t;
          depth = d;
          break;
        }
      }
    }
    if (d > 1000000) throw DegenerateNormalizerError();
    cs.push_back(cs.back() * grws_multiplier(params, d + 1));
    sum += cs.back();
  }

  Rat a = Rat(1) / sum;
  std::vector<Atom> atoms;
  Rat pos = 1;
  for (const Rat& c : cs) {
    atoms.push_back(Atom{pos, a * c});
    pos /= params.p;
  }
  TailBound bound{tail / sum, pos};  // pos is now p^{-(depth+1)}
  Rat a_error = tail / (sum * (sum - tail));
  return GrwsCharge{params,  depth, Charge(std::move(atoms), bound),
                    a,       a_error, false};
}

SignPattern grws_density_signs(const GrwsParams& params, std::size_t count) {
  validate_params(params);
  SignPattern pattern;
  pattern.signs.reserve(count);
  Rat c = 1;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) c *= grws_multiplier(params, i);
    pattern.signs.push_back(static_cast<Sign>(rat_sign(c)));
  }
  return pattern;
}

std::optional<SignPattern> expected_sign_pattern(const Sector& s, std::size_t length) {
  SignPattern pattern;
  switch (s.tag) {
    case SectorTag::I:
    case SectorTag::II:
    case SectorTag::III:
      pattern.signs.assign(length, Sign::Plus);
      return pattern;
    case SectorTag::IV:
      if (s.special_line) {
        pattern.signs.assign(*s.special_line + 1, Sign::Plus);
        return pattern;
      }
      if (s.iv_band) {
        std::size_t run = static_cast<std::size_t>(*s.iv_band) + 2;
        for (std::size_t i = 0; i < length; ++i) {
          if (i < run) {
            pattern.signs.push_back(Sign::Plus);
          } else {
            pattern.signs.push_back((i - run) % 2 == 0 ? Sign::Minus : Sign::Plus);
          }
        }
        return pattern;
      }
      return std::nullopt;
    case SectorTag::VIIIA:
      for (std::size_t i = 0; i < length; ++i) {
        pattern.signs.push_back(i == 0 ? Sign::Plus : Sign::Minus);
      }
      return pattern;
    case SectorTag::VIIIB:
      if (s.special_line) {
        // D = pN gives the two-atom charge (+,-); D = p^2 N three atoms.
        if (*s.special_line == 1) {
          pattern.signs = {Sign::Plus, Sign::Minus};
        } else {
          pattern.signs = {Sign::Plus, Sign::Minus, Sign::Plus};
        }
        return pattern;
      }
      for (std::size_t i = 0; i < length; ++i) {
        pattern.signs.push_back(i == 1 ? Sign::Minus : Sign::Plus);
      }
      return pattern;
    default:
      return std::nullopt;
  }
}

}  // namespace shiftcharge
